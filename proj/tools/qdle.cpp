// Command-line surface over the qdle library. All reports are single-line
// JSON on stdout with a fixed key order; diagnostics go to stderr.
//
// Exit codes: 0 success/law holds, 1 validation or law failure,
// 2 usage error, 3 cap exceeded without an answer.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qdle/qdle.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw qdle::error(qdle::errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qdle::FiniteQuandle load_quandle(const std::string& path) {
  return qdle::resolve(qdle::parse_spec(read_input(path)));
}

const char* homogeneity_name(qdle::Homogeneity h) {
  switch (h) {
    case qdle::Homogeneity::yes: return "yes";
    case qdle::Homogeneity::no: return "no";
    default: return "budget-exceeded";
  }
}

void emit(const qdle::json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quandles: tables, displacement groups, Euler characteristics"};
  app.require_subcommand(1);

  std::string file, file2, law;
  std::size_t cap = qdle::kDefaultClosureCap;
  std::uint64_t budget = qdle::kDefaultHomogeneityBudget;
  std::uint64_t seed = 0;
  int search_trials = 0;
  bool fast_graph = false;

  auto* cmd_validate = app.add_subcommand("validate", "Check the quandle axioms of a spec");
  cmd_validate->add_option("spec-file", file, "quandle spec (JSON), or - for stdin")->required();

  auto* cmd_info = app.add_subcommand("info", "Size, triviality, connectivity, homogeneity, group orders");
  cmd_info->add_option("spec-file", file, "quandle spec (JSON), or - for stdin")->required();
  cmd_info->add_option("--cap", cap, "group enumeration element cap");
  cmd_info->add_option("--budget", budget, "homogeneity search node budget");

  auto* cmd_euler = app.add_subcommand("euler", "Euler characteristic report");
  cmd_euler->add_option("spec-file", file, "quandle spec (JSON), or - for stdin")->required();
  cmd_euler->add_option("--cap", cap, "group enumeration element cap");
  cmd_euler->add_flag("--fast-graph", fast_graph,
                      "use the weighted-graph fast path (graph/cycle/path specs only)");
  cmd_euler->add_option("--search-trials", search_trials,
                        "random fixed-point-free search trials when the cap trips");
  cmd_euler->add_option("--seed", seed, "seed for the random search");

  auto* cmd_table = app.add_subcommand("table", "Emit the resolved Cayley table as canonical JSON");
  cmd_table->add_option("spec-file", file, "quandle spec (JSON), or - for stdin")->required();

  auto* cmd_check = app.add_subcommand("check", "Verify the product or union law for a pair of specs");
  cmd_check->add_option("spec-file-1", file, "first quandle spec")->required();
  cmd_check->add_option("spec-file-2", file2, "second quandle spec")->required();
  cmd_check->add_option("--law", law, "which law to verify")
      ->required()
      ->check(CLI::IsMember({"product", "union"}));
  cmd_check->add_option("--cap", cap, "group enumeration element cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_validate) {
      auto q = load_quandle(file);
      qdle::json out;
      out["valid"] = true;
      out["size"] = q.size();
      emit(out);
      return 0;
    }

    if (*cmd_info) {
      auto q = load_quandle(file);
      qdle::json out;
      out["size"] = q.size();
      out["trivial"] = q.is_trivial();
      out["connected"] = q.is_connected();
      out["homogeneous"] = homogeneity_name(q.is_homogeneous(budget));
      auto inn = qdle::group_order(q, qdle::GroupKind::inner, cap);
      auto dis = qdle::group_order(q, qdle::GroupKind::displacement, cap);
      out["inn_order"] = inn ? qdle::json(*inn) : qdle::json(nullptr);
      out["inn_truncated"] = !inn.has_value();
      out["dis_order"] = dis ? qdle::json(*dis) : qdle::json(nullptr);
      out["dis_truncated"] = !dis.has_value();
      emit(out);
      return 0;
    }

    if (*cmd_euler) {
      auto spec = qdle::parse_spec(read_input(file));
      qdle::EulerReport report;
      if (fast_graph) {
        if (!qdle::has_graph_form(spec)) {
          std::cerr << "usage error: --fast-graph requires a graph, cycle, or path spec\n";
          return 2;
        }
        report = qdle::euler_graph_fast(qdle::resolve_graph_spec(spec), cap);
      } else {
        report = qdle::euler_characteristic(qdle::resolve(spec), cap);
      }
      if (!report.exact && search_trials > 0) {
        auto w = qdle::zero_witness_search(qdle::resolve(spec), search_trials, seed);
        if (w) {
          report.value = 0;
          report.exact = true;
          report.witness = std::move(w);
          report.upper_bound = 0;
        }
      }
      emit(qdle::euler_report_json(report));
      return report.exact ? 0 : 3;
    }

    if (*cmd_table) {
      emit(qdle::table_json(load_quandle(file)));
      return 0;
    }

    // check
    auto x = load_quandle(file);
    auto y = load_quandle(file2);
    auto combined = law == "product" ? direct_product(x, y) : free_union(x, y);
    auto rx = qdle::euler_characteristic(x, cap);
    auto ry = qdle::euler_characteristic(y, cap);
    auto rc = qdle::euler_characteristic(combined, cap);
    if (!rx.exact || !ry.exact || !rc.exact) {
      std::cerr << "error: enumeration cap exceeded before the law could be decided\n";
      return 3;
    }
    const bool holds = law == "product" ? *rc.value == *rx.value * *ry.value
                                        : *rc.value <= *rx.value + *ry.value;
    qdle::json out;
    out["law"] = law;
    out["chi_x"] = *rx.value;
    out["chi_y"] = *ry.value;
    out["chi_combined"] = *rc.value;
    out["holds"] = holds;
    emit(out);
    return holds ? 0 : 1;
  } catch (const qdle::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
