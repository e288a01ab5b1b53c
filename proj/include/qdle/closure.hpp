#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qdle/error.hpp"
#include "qdle/permutation.hpp"
#include "qdle/quandle.hpp"

namespace qdle {

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

// Group elements enumerated by breadth-first product closure, in discovery
// order with the identity first. If truncated is set the set was cut off at
// the cap and is only a superset of some BFS prefix; order() is then a lower
// bound, never an answer.
struct ClosureResult {
  std::vector<Permutation> elements;
  bool truncated = false;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

// BFS closure with a per-element visitor; visitor returning false stops the
// enumeration (second member of the result). Seeds the frontier with the
// generators and their inverses, so the result is a group element set even
// though finite closure under composition alone would suffice.
template <typename Visit>
std::pair<ClosureResult, bool> close_visit(const std::vector<Permutation>& generators,
                                           int degree, std::size_t cap,
                                           Visit&& visit) {
  if (degree < 1)
    throw error(errc::empty_degree, "closure needs a positive degree");
  if (cap < 1) throw error(errc::invalid_argument, "closure cap must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw error(errc::mixed_degrees,
                  "generator degree " + std::to_string(g.degree()) +
                      " does not match " + std::to_string(degree));

  ClosureResult result;
  bool stopped = false;
  std::unordered_set<Permutation, PermutationHash> seen;
  auto add = [&](Permutation p) {
    if (stopped || result.truncated) return;
    if (seen.contains(p)) return;
    if (result.elements.size() == cap) {
      result.truncated = true;
      return;
    }
    seen.insert(p);
    result.elements.push_back(std::move(p));
    if (!visit(result.elements.back())) stopped = true;
  };

  add(Permutation::identity(degree));
  for (const auto& g : generators) add(g);
  for (const auto& g : generators) add(g.inverse());
  for (std::size_t i = 0; i < result.elements.size(); ++i) {
    if (stopped || result.truncated) break;
    for (const auto& g : generators) {
      add(compose(result.elements[i], g));
      if (stopped || result.truncated) break;
    }
  }
  return {std::move(result), stopped};
}

}  // namespace detail

// Full element set of the permutation group generated by `generators`, on
// carrier {0..degree-1}. An empty generator set yields the trivial group.
// If the group order exceeds `cap`, returns a partial set of size cap with
// truncated set.
inline ClosureResult close(const std::vector<Permutation>& generators, int degree,
                           std::size_t cap = kDefaultClosureCap) {
  return detail::close_visit(generators, degree, cap,
                             [](const Permutation&) { return true; })
      .first;
}

// Degree taken from the generators themselves.
inline ClosureResult close(const std::vector<Permutation>& generators,
                           std::size_t cap = kDefaultClosureCap) {
  if (generators.empty())
    throw error(errc::empty_degree,
                "cannot infer a degree from an empty generator set");
  return close(generators, generators.front().degree(), cap);
}

// Orbit partition of {0..degree-1} under the given bijections: component
// ids numbered by first occurrence. Forward reachability suffices because
// every map has finite order.
inline std::vector<int> orbit_partition(const std::vector<Permutation>& maps,
                                        int degree) {
  if (degree < 1)
    throw error(errc::empty_degree, "orbit partition needs a positive degree");
  for (const auto& m : maps)
    if (m.degree() != degree)
      throw error(errc::mixed_degrees, "map degree does not match carrier");
  std::vector<int> comp(static_cast<std::size_t>(degree), -1);
  int next = 0;
  for (int start = 0; start < degree; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    const int id = next++;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (const auto& m : maps) {
        int q = m(p);
        if (comp[static_cast<std::size_t>(q)] == -1) {
          comp[static_cast<std::size_t>(q)] = id;
          stack.push_back(q);
        }
      }
    }
  }
  return comp;
}

enum class GroupKind { inner, displacement };

// Order of Inn(X) or Dis(X); nullopt when the closure exceeds the cap.
inline std::optional<std::size_t> group_order(const FiniteQuandle& x, GroupKind kind,
                                              std::size_t cap = kDefaultClosureCap) {
  auto gens = kind == GroupKind::inner ? x.inner_generators()
                                       : x.displacement_generators();
  auto result = close(gens, x.size(), cap);
  if (result.truncated) return std::nullopt;
  return result.order();
}

}  // namespace qdle
