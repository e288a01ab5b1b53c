#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdle/error.hpp"
#include "qdle/permutation.hpp"

namespace qdle {

// Outcome of the homogeneity decision. The automorphism search is
// exponential in the worst case, so running out of budget is a distinct
// answer, never folded into "no".
enum class Homogeneity { no, yes, budget_exceeded };

inline constexpr std::uint64_t kDefaultHomogeneityBudget = 10'000'000;

// A finite quandle as its Cayley table: table()[x][y] = s_x(y), where s_x is
// the point symmetry at x (x is the symmetry center). The inverse table
// caches s_x^{-1}. Instances only exist after the full axiom check:
//
//   Q1  s_x(x) = x
//   Q2  each row is a bijection
//   Q3  s_x(s_y(z)) = s_{s_x(y)}(s_x(z))
//
// Immutable after validation; all queries are read-only.
class FiniteQuandle {
 public:
  static FiniteQuandle validate(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw error(errc::not_square, "quandle table is empty");
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(table[x].size()) != n)
        throw error(errc::not_square,
                    "row " + std::to_string(x) + " has wrong length", x);
      for (int y = 0; y < n; ++y)
        if (table[x][y] < 0 || table[x][y] >= n)
          throw error(errc::not_square,
                      "entry out of range at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")",
                      x, y);
    }
    for (int x = 0; x < n; ++x)
      if (table[x][x] != x)
        throw error(errc::q1_violation,
                    "idempotence fails at x=" + std::to_string(x), x);
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int t = table[x][y];
        if (inv[x][t] != -1)
          throw error(errc::q2_violation,
                      "row " + std::to_string(x) + " is not a bijection", x);
        inv[x][t] = y;
      }
    }
    // Q3 in pointwise form; O(n^3) is instant at the sizes this library
    // targets (n <= 512).
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (table[x][table[y][z]] != table[table[x][y]][table[x][z]])
            throw error(errc::q3_violation,
                        "self-distributivity fails at (x,y,z)=(" +
                            std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + ")",
                        x, y, z);
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw error(errc::schema_error, "labels must match the carrier size");
    return FiniteQuandle(validated{}, std::move(table), std::move(inv),
                         std::move(labels));
  }

  int size() const { return static_cast<int>(table_.size()); }

  // s_x(y)
  int apply(int x, int y) const {
    return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  // s_x^{-1}(y)
  int apply_inverse(int x, int y) const {
    return inv_table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::vector<int>>& inverse_table() const { return inv_table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Permutation point_symmetry(int x) const {
    if (x < 0 || x >= size())
      throw error(errc::invalid_argument,
                  "point index " + std::to_string(x) + " out of range", x);
    return Permutation(table_[static_cast<std::size_t>(x)]);
  }

  // Deduplicated {s_x : x in X}, sorted by image array.
  std::vector<Permutation> inner_generators() const {
    std::vector<Permutation> gens;
    gens.reserve(table_.size());
    for (const auto& row : table_) gens.emplace_back(row);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }

  // Deduplicated {s_x ∘ s_y^{-1} : x,y in X} with the identity removed; an
  // empty result denotes the trivial displacement group. Note the set is
  // closed under inversion, since (s_x s_y^{-1})^{-1} = s_y s_x^{-1}.
  std::vector<Permutation> displacement_generators() const {
    const int n = size();
    std::vector<Permutation> gens;
    gens.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      const auto& sx = table_[static_cast<std::size_t>(x)];
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto& sy_inv = inv_table_[static_cast<std::size_t>(y)];
        std::vector<int> im(static_cast<std::size_t>(n));
        bool ident = true;
        for (int i = 0; i < n; ++i) {
          im[static_cast<std::size_t>(i)] =
              sx[static_cast<std::size_t>(sy_inv[static_cast<std::size_t>(i)])];
          ident = ident && im[static_cast<std::size_t>(i)] == i;
        }
        if (!ident) gens.emplace_back(std::move(im));
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }

  bool is_trivial() const {
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (apply(x, y) != y) return false;
    return true;
  }

  // Orbit reachability of point 0 under the point symmetries and their
  // inverses; never builds the group itself.
  bool is_connected() const {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int a = 0; a < n; ++a) {
        for (int q : {apply(a, p), apply_inverse(a, p)}) {
          if (!seen[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = 1;
            ++reached;
            stack.push_back(q);
          }
        }
      }
    }
    return reached == n;
  }

  Homogeneity is_homogeneous(std::uint64_t node_budget = kDefaultHomogeneityBudget) const;

 private:
  struct validated {};
  FiniteQuandle(validated, std::vector<std::vector<int>> table,
                std::vector<std::vector<int>> inv, std::vector<std::string> labels)
      : table_(std::move(table)), inv_table_(std::move(inv)),
        labels_(std::move(labels)) {}

  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inv_table_;
  std::vector<std::string> labels_;
};

namespace detail {

// Backtracking search for a quandle automorphism with a prescribed image of
// one root point. Partial images are propagated through the table law
// f(s_x(y)) = s_{f(x)}(f(y)) as soon as both arguments are assigned, which
// prunes hard enough that desk-scale quandles finish in microseconds.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const FiniteQuandle& q,
                     const std::vector<std::vector<int>>& signature,
                     std::uint64_t budget, std::uint64_t& nodes)
      : q_(q), sig_(signature), budget_(budget), nodes_(nodes),
        f_(static_cast<std::size_t>(q.size()), -1),
        preimage_(static_cast<std::size_t>(q.size()), -1) {}

  // true/false = automorphism with f(root)=target exists / does not;
  // nullopt = node budget exhausted before an answer.
  std::optional<bool> run(int root, int target) {
    assigned_.clear();
    std::fill(f_.begin(), f_.end(), -1);
    std::fill(preimage_.begin(), preimage_.end(), -1);
    if (++nodes_ > budget_) return std::nullopt;
    if (!assign(root, target)) return false;
    return search();
  }

 private:
  bool assign(int x0, int v0) {
    std::vector<std::pair<int, int>> pending{{x0, v0}};
    while (!pending.empty()) {
      auto [x, v] = pending.back();
      pending.pop_back();
      if (f_[static_cast<std::size_t>(x)] != -1) {
        if (f_[static_cast<std::size_t>(x)] != v) return false;
        continue;
      }
      if (preimage_[static_cast<std::size_t>(v)] != -1) return false;
      if (sig_[static_cast<std::size_t>(x)] != sig_[static_cast<std::size_t>(v)])
        return false;
      f_[static_cast<std::size_t>(x)] = v;
      preimage_[static_cast<std::size_t>(v)] = x;
      assigned_.push_back(x);
      for (int a : assigned_) {
        int fa = f_[static_cast<std::size_t>(a)];
        pending.emplace_back(q_.apply(x, a), q_.apply(v, fa));
        pending.emplace_back(q_.apply(a, x), q_.apply(fa, v));
      }
    }
    return true;
  }

  std::optional<bool> search() {
    int x = -1;
    for (int i = 0; i < q_.size(); ++i)
      if (f_[static_cast<std::size_t>(i)] == -1) {
        x = i;
        break;
      }
    if (x == -1) return true;  // total, injective, law-consistent
    for (int v = 0; v < q_.size(); ++v) {
      if (preimage_[static_cast<std::size_t>(v)] != -1) continue;
      if (sig_[static_cast<std::size_t>(x)] != sig_[static_cast<std::size_t>(v)])
        continue;
      if (++nodes_ > budget_) return std::nullopt;
      const std::size_t mark = assigned_.size();
      if (assign(x, v)) {
        auto r = search();
        if (!r.has_value() || *r) return r;
      }
      while (assigned_.size() > mark) {
        int p = assigned_.back();
        assigned_.pop_back();
        preimage_[static_cast<std::size_t>(f_[static_cast<std::size_t>(p)])] = -1;
        f_[static_cast<std::size_t>(p)] = -1;
      }
    }
    return false;
  }

  const FiniteQuandle& q_;
  const std::vector<std::vector<int>>& sig_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int> f_;
  std::vector<int> preimage_;
  std::vector<int> assigned_;
};

}  // namespace detail

inline Homogeneity FiniteQuandle::is_homogeneous(std::uint64_t node_budget) const {
  const int n = size();
  if (n == 1) return Homogeneity::yes;
  // Conjugation invariant per point: any automorphism maps s_x to a
  // conjugate of itself, so cycle types must match.
  std::vector<std::vector<int>> sig;
  sig.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) sig.push_back(point_symmetry(x).cycle_type());
  std::uint64_t nodes = 0;
  detail::AutomorphismSearch search(*this, sig, node_budget, nodes);
  for (int target = 1; target < n; ++target) {
    auto r = search.run(0, target);
    if (!r.has_value()) return Homogeneity::budget_exceeded;
    if (!*r) return Homogeneity::no;
  }
  return Homogeneity::yes;
}

// Product quandle on n1*n2 points; pair (a, b) maps to index a*n2 + b. The
// point symmetries act componentwise.
inline FiniteQuandle direct_product(const FiniteQuandle& x1, const FiniteQuandle& x2) {
  const int n1 = x1.size(), n2 = x2.size(), n = n1 * n2;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          x1.apply(a / n2, b / n2) * n2 + x2.apply(a % n2, b % n2);
  std::vector<std::string> labels;
  if (!x1.labels().empty() && !x2.labels().empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      labels.push_back("(" + x1.labels()[static_cast<std::size_t>(a / n2)] + "," +
                       x2.labels()[static_cast<std::size_t>(a % n2)] + ")");
  }
  return FiniteQuandle::validate(std::move(table), std::move(labels));
}

// Interaction-free union: X1 keeps its indices, X2 is shifted by |X1|, and
// every point symmetry acts as the identity outside its own part.
inline FiniteQuandle free_union(const FiniteQuandle& x1, const FiniteQuandle& x2) {
  const int n1 = x1.size(), n2 = x2.size(), n = n1 + n2;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool a1 = a < n1, b1 = b < n1;
      if (a1 != b1)
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = b;
      else if (a1)
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            x1.apply(a, b);
      else
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            x2.apply(a - n1, b - n1) + n1;
    }
  std::vector<std::string> labels;
  if (!x1.labels().empty() && !x2.labels().empty()) {
    labels = x1.labels();
    labels.insert(labels.end(), x2.labels().begin(), x2.labels().end());
  }
  return FiniteQuandle::validate(std::move(table), std::move(labels));
}

}  // namespace qdle
