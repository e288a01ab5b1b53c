#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdle/error.hpp"
#include "qdle/permutation.hpp"

namespace qdle {

// A finite group as a fully tabulated multiplication table. Orders stay at
// desk scale (a few hundred), so order^2 storage buys O(1) products inside
// the quandle-construction loops. from_table() runs the full axiom check up
// front; everything downstream may assume the group laws hold.
//
// The identity is located by scan and need not sit at index 0; the built-in
// families normalize it to 0.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n) {
    if (n < 1) throw error(errc::order_zero, "cyclic group order must be >= 1");
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
      inv[a] = (n - a) % n;
    }
    return FiniteGroup(unchecked{}, std::move(mult), 0, std::move(inv));
  }

  // Validates the four table axioms (Latin rows/columns, two-sided identity,
  // two-sided inverses, associativity) and rejects non-groups with the
  // witnessing indices. O(n^3) for the associativity sweep.
  static FiniteGroup from_table(std::vector<std::vector<int>> mult) {
    const int n = static_cast<int>(mult.size());
    if (n == 0) throw error(errc::not_square, "multiplication table is empty");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(mult[a].size()) != n)
        throw error(errc::not_square,
                    "row " + std::to_string(a) + " has wrong length", a);
      for (int b = 0; b < n; ++b)
        if (mult[a][b] < 0 || mult[a][b] >= n)
          throw error(errc::not_square,
                      "entry out of range at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")",
                      a, b);
    }
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n; ++b) {
        if (seen[static_cast<std::size_t>(mult[a][b])])
          throw error(errc::not_latin, "row " + std::to_string(a) +
                          " repeats value " + std::to_string(mult[a][b]), a);
        seen[static_cast<std::size_t>(mult[a][b])] = 1;
      }
    }
    for (int b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(mult[a][b])])
          throw error(errc::not_latin, "column " + std::to_string(b) +
                          " repeats value " + std::to_string(mult[a][b]), b);
        seen[static_cast<std::size_t>(mult[a][b])] = 1;
      }
    }
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = mult[cand][a] == a && mult[a][cand] == a;
      if (ok) e = cand;
    }
    if (e < 0) throw error(errc::no_identity, "table has no two-sided identity");
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (mult[a][b] == e && mult[b][a] == e) {
          inv[static_cast<std::size_t>(a)] = b;
          break;
        }
      if (inv[static_cast<std::size_t>(a)] < 0)
        throw error(errc::no_inverse,
                    "element " + std::to_string(a) + " has no inverse", a);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mult[static_cast<std::size_t>(mult[a][b])][static_cast<std::size_t>(c)] !=
              mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(mult[b][c])])
            throw error(errc::not_associative,
                        "associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")",
                        a, b, c);
    return FiniteGroup(unchecked{}, std::move(mult), e, std::move(inv));
  }

  // Componentwise product; pair (g, h) maps to index g*|H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      const int a1 = a / nh, a2 = a % nh;
      inv[static_cast<std::size_t>(a)] = g.inverse(a1) * nh + h.inverse(a2);
      for (int b = 0; b < n; ++b)
        mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            g.mul(a1, b / nh) * nh + h.mul(a2, b % nh);
    }
    return FiniteGroup(unchecked{}, std::move(mult),
                       g.identity() * nh + h.identity(), std::move(inv));
  }

  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return mult_; }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // True iff every element squares to the identity, i.e. the group is a
  // direct product of copies of Z/2.
  bool is_elementary_abelian_2() const {
    for (int a = 0; a < order(); ++a)
      if (mul(a, a) != identity_) return false;
    return true;
  }

  bool is_automorphism(const Permutation& sigma) const {
    if (sigma.degree() != order())
      throw error(errc::degree_mismatch,
                  "automorphism check: degree " + std::to_string(sigma.degree()) +
                      " does not match group order " + std::to_string(order()));
    if (sigma(identity_) != identity_) return false;
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (sigma(mul(a, b)) != mul(sigma(a), sigma(b))) return false;
    return true;
  }

 private:
  struct unchecked {};
  FiniteGroup(unchecked, std::vector<std::vector<int>> mult, int identity,
              std::vector<int> inverse)
      : mult_(std::move(mult)), inverse_(std::move(inverse)), identity_(identity) {}

  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_;
};

inline bool validate_automorphism(const FiniteGroup& g, const Permutation& sigma) {
  return g.is_automorphism(sigma);
}

}  // namespace qdle
