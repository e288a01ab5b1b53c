#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdle/error.hpp"
#include "qdle/finite_group.hpp"
#include "qdle/permutation.hpp"
#include "qdle/quandle.hpp"

namespace qdle {

// An A-weighted graph (V, A, d): finite vertex set, abelian weight group,
// and a weight matrix vanishing on the diagonal. Defines the quandle on
// V x A with s_{(v,a)}(w,b) = (w, d(v,w) + b).
struct WeightedGraphSpec {
  int vertices;
  FiniteGroup weight_group;
  std::vector<std::vector<int>> weights;  // weights[v][w], entries index into A

  void check() const {
    if (vertices < 1)
      throw error(errc::order_zero, "weighted graph needs at least one vertex");
    if (!weight_group.is_abelian())
      throw error(errc::not_abelian, "weight group must be abelian");
    if (static_cast<int>(weights.size()) != vertices)
      throw error(errc::not_square, "weight matrix must be vertices x vertices");
    for (int v = 0; v < vertices; ++v) {
      if (static_cast<int>(weights[v].size()) != vertices)
        throw error(errc::not_square,
                    "weight row " + std::to_string(v) + " has wrong length", v);
      for (int w = 0; w < vertices; ++w)
        if (weights[v][w] < 0 || weights[v][w] >= weight_group.order())
          throw error(errc::not_square,
                      "weight out of range at (" + std::to_string(v) + "," +
                          std::to_string(w) + ")",
                      v, w);
      if (weights[v][v] != weight_group.identity())
        throw error(errc::diagonal_nonzero,
                    "weight d(v,v) must be 0 at v=" + std::to_string(v), v);
    }
  }
};

// All constructors re-run the full axiom validation on their output; at desk
// scale the O(n^3) cost is negligible and it catches construction slips.

// Every point symmetry is the identity.
inline FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw error(errc::order_zero, "trivial quandle needs n >= 1");
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = i;
  return FiniteQuandle::validate(
      std::vector<std::vector<int>>(static_cast<std::size_t>(n), row));
}

// R_n: carrier Z/n with s_a(b) = 2a - b.
inline FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw error(errc::order_zero, "dihedral quandle needs n >= 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          ((2 * a - b) % n + n) % n;
  return FiniteQuandle::validate(std::move(table));
}

// Generalized Alexander quandle on G: s_h(g) = h * sigma(h^{-1} g) for a
// group automorphism sigma. Trivial exactly when sigma is the identity.
inline FiniteQuandle galex_quandle(const FiniteGroup& g, const Permutation& sigma) {
  if (!g.is_automorphism(sigma))
    throw error(errc::not_an_automorphism,
                "sigma is not an automorphism of the group");
  const int n = g.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x)
      table[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)] =
          g.mul(h, sigma(g.mul(g.inverse(h), x)));
  return FiniteQuandle::validate(std::move(table));
}

// Core quandle on G: s_h(g) = h g^{-1} h; every point symmetry is an
// involution. Trivial exactly when every element of G squares to identity.
inline FiniteQuandle core_quandle(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x)
      table[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)] =
          g.mul(g.mul(h, g.inverse(x)), h);
  return FiniteQuandle::validate(std::move(table));
}

// Discrete n-sphere: the 2(n+1) points +-e_i. Index 2k is +e_{k+1}, index
// 2k+1 is -e_{k+1}; the symmetry at either point of axis k fixes that axis
// and swaps the sign pair of every other axis.
inline FiniteQuandle discrete_sphere(int n) {
  if (n < 1) throw error(errc::order_zero, "discrete sphere needs dimension >= 1");
  const int m = 2 * (n + 1);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          (y / 2 == x / 2) ? y : (y ^ 1);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= n + 1; ++k) {
    labels.push_back("+e" + std::to_string(k));
    labels.push_back("-e" + std::to_string(k));
  }
  return FiniteQuandle::validate(std::move(table), std::move(labels));
}

// Quandle of (V, A, d) on carrier V x A; pair (v, a) maps to index v*|A| + a.
inline FiniteQuandle graph_quandle(const WeightedGraphSpec& spec) {
  spec.check();
  const auto& a = spec.weight_group;
  const int ord = a.order(), n = spec.vertices * ord;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    const int v = x / ord;
    for (int y = 0; y < n; ++y) {
      const int w = y / ord, b = y % ord;
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          w * ord + a.mul(spec.weights[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)], b);
    }
  }
  return FiniteQuandle::validate(std::move(table));
}

// Cycle family C_n: n vertices, weights in Z/2, d(v_i, v_j) = 1 iff
// i - j = 1 (mod n). Size 2n.
inline WeightedGraphSpec cycle_graph_spec(int n) {
  if (n < 2) throw error(errc::order_zero, "cycle quandle needs n >= 2");
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + n - 1) % n)] = 1;
  return WeightedGraphSpec{n, FiniteGroup::cyclic(2), std::move(d)};
}

inline FiniteQuandle cycle_quandle(int n) {
  return graph_quandle(cycle_graph_spec(n));
}

// Path family B_n: two vertices, weights in Z/n, a single edge of weight 1
// from the first vertex to the second. Size 2n.
inline WeightedGraphSpec path_graph_spec(int n) {
  if (n < 2) throw error(errc::order_zero, "path quandle needs n >= 2");
  std::vector<std::vector<int>> d{{0, 1}, {0, 0}};
  return WeightedGraphSpec{2, FiniteGroup::cyclic(n), std::move(d)};
}

inline FiniteQuandle path_quandle(int n) {
  return graph_quandle(path_graph_spec(n));
}

// Discrete torus: iterated direct product of dihedral quandles R_{m_i}.
inline FiniteQuandle discrete_torus(const std::vector<int>& m) {
  if (m.empty())
    throw error(errc::invalid_argument, "discrete torus needs at least one factor");
  FiniteQuandle q = dihedral_quandle(m.front());
  for (std::size_t i = 1; i < m.size(); ++i)
    q = direct_product(q, dihedral_quandle(m[i]));
  return q;
}

}  // namespace qdle
