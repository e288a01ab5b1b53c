#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qdle/closure.hpp"
#include "qdle/constructors.hpp"
#include "qdle/error.hpp"
#include "qdle/permutation.hpp"
#include "qdle/quandle.hpp"

namespace qdle {

// Result of an Euler characteristic computation: the minimum fixed-point
// count over the displacement group, when it could be established.
//
//   value        minimum, or nullopt when the cap tripped without an answer
//   witness      a minimizing group element, present exactly when exact;
//                ties broken by lexicographically smallest image array,
//                except that a fixed-point-free element short-circuits the
//                enumeration and is reported as found
//   dis_order    full |Dis(X)| when the enumeration ran to completion
//   dis_truncated true iff the element cap was hit
//   upper_bound  best fixed-point count seen; equals value when exact
struct EulerReport {
  std::optional<int> value;
  std::optional<Permutation> witness;
  bool exact = false;
  std::optional<std::size_t> dis_order;
  bool dis_truncated = false;
  int upper_bound = 0;
};

// Minimum #Fix(g, X) over g in Dis(X), by enumerating the displacement group.
// A fixed-point-free element ends the search immediately: counts are
// non-negative, so 0 is a global minimum.
inline EulerReport euler_characteristic(const FiniteQuandle& x,
                                        std::size_t cap = kDefaultClosureCap) {
  const int n = x.size();
  int best = n + 1;
  std::optional<Permutation> best_perm;
  bool found_zero = false;
  auto [closure, stopped] = detail::close_visit(
      x.displacement_generators(), n, cap, [&](const Permutation& p) {
        const int c = p.fixed_point_count();
        if (c < best || (c == best && best_perm && p.images() < best_perm->images())) {
          best = c;
          best_perm = p;
        }
        if (c == 0) {
          found_zero = true;
          return false;
        }
        return true;
      });
  (void)stopped;
  EulerReport report;
  report.upper_bound = best;  // identity is always visited, so best <= n
  if (found_zero) {
    report.value = 0;
    report.exact = true;
    report.witness = std::move(best_perm);
  } else if (!closure.truncated) {
    report.value = best;
    report.exact = true;
    report.witness = std::move(best_perm);
    report.dis_order = closure.order();
  } else {
    report.dis_truncated = true;
  }
  return report;
}

namespace detail {

struct TupleHash {
  std::size_t operator()(const std::vector<int>& t) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : t)
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// The action of a displacement tuple on V x A as a permutation of the
// quandle carrier: (v, b) -> (v, t_v + b).
inline Permutation graph_tuple_permutation(const WeightedGraphSpec& spec,
                                           const std::vector<int>& tuple) {
  const int ord = spec.weight_group.order();
  std::vector<int> im(static_cast<std::size_t>(spec.vertices * ord));
  for (int v = 0; v < spec.vertices; ++v)
    for (int b = 0; b < ord; ++b)
      im[static_cast<std::size_t>(v * ord + b)] =
          v * ord + spec.weight_group.mul(tuple[static_cast<std::size_t>(v)], b);
  return Permutation(std::move(im));
}

}  // namespace detail

// Fast path for weighted-graph quandles. The displacement group embeds in
// A^n as the subgroup generated by the consecutive row differences
// d_i - d_{i+1} of the weight matrix, and a tuple fixes exactly |A| carrier
// points per zero entry. So chi = |A| * (minimum zero-count over the
// subgroup), which is found by additive closure over tuples instead of a
// permutation closure over the carrier.
inline EulerReport euler_graph_fast(const WeightedGraphSpec& spec,
                                    std::size_t cap = kDefaultClosureCap) {
  spec.check();
  if (cap < 1) throw error(errc::invalid_argument, "closure cap must be >= 1");
  const auto& a = spec.weight_group;
  const int n = spec.vertices, ord = a.order();
  const int zero = a.identity();

  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> g(static_cast<std::size_t>(n));
    bool is_zero = true;
    for (int j = 0; j < n; ++j) {
      g[static_cast<std::size_t>(j)] =
          a.mul(spec.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                a.inverse(spec.weights[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]));
      is_zero = is_zero && g[static_cast<std::size_t>(j)] == zero;
    }
    if (!is_zero) gens.push_back(std::move(g));
  }

  auto zero_count = [&](const std::vector<int>& t) {
    int c = 0;
    for (int v : t) c += (v == zero);
    return c;
  };

  std::vector<int> best_tuple(static_cast<std::size_t>(n), zero);
  int best = n;
  bool truncated = false, found_zero = false;

  std::unordered_set<std::vector<int>, detail::TupleHash> seen;
  std::vector<std::vector<int>> elements;
  auto add = [&](std::vector<int> t) {
    if (truncated || found_zero) return;
    if (seen.contains(t)) return;
    if (elements.size() == cap) {
      truncated = true;
      return;
    }
    const int c = zero_count(t);
    if (c < best || (c == best && t < best_tuple)) {
      best = c;
      best_tuple = t;
    }
    if (c == 0) found_zero = true;
    seen.insert(t);
    elements.push_back(std::move(t));
  };

  add(std::vector<int>(static_cast<std::size_t>(n), zero));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (truncated || found_zero) break;
    for (const auto& g : gens) {
      std::vector<int> t(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        t[static_cast<std::size_t>(j)] =
            a.mul(elements[i][static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j)]);
      add(std::move(t));
      if (truncated || found_zero) break;
    }
  }

  EulerReport report;
  report.upper_bound = ord * best;
  if (found_zero) {
    report.value = 0;
    report.exact = true;
    report.witness = detail::graph_tuple_permutation(spec, best_tuple);
  } else if (!truncated) {
    report.value = ord * best;
    report.exact = true;
    report.witness = detail::graph_tuple_permutation(spec, best_tuple);
    report.dis_order = elements.size();
  } else {
    report.dis_truncated = true;
  }
  return report;
}

// Randomized hunt for a fixed-point-free displacement element: random
// products of displacement generators, word length cycling 1..32 so that the
// short witnesses typical of small quandles are tried first. Finding one
// proves chi = 0; not finding one proves nothing. Deterministic for a given
// (trials, seed).
inline std::optional<Permutation> zero_witness_search(const FiniteQuandle& x,
                                                      int trials,
                                                      std::uint64_t seed) {
  auto gens = x.displacement_generators();
  if (gens.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  // rng() % size instead of a distribution: bias is irrelevant here and the
  // stream stays identical across standard libraries.
  auto pick = [&] { return gens[static_cast<std::size_t>(rng() % gens.size())]; };
  for (int t = 0; t < trials; ++t) {
    const int len = 1 + (t % 32);
    Permutation w = pick();
    for (int k = 1; k < len; ++k) w = compose(w, pick());
    if (w.fixed_point_count() == 0) return w;
  }
  return std::nullopt;
}

}  // namespace qdle
