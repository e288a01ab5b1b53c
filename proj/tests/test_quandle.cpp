#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qdle/closure.hpp"
#include "qdle/constructors.hpp"
#include "qdle/quandle.hpp"
#include "test_helpers.hpp"

using qdle::FiniteQuandle;
using qdle::Homogeneity;
using qdle::Permutation;
using qdle::errc;

TEST_CASE("validate accepts quandles and rejects axiom violations") {
  auto r3 = FiniteQuandle::validate({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(r3.size() == 3);
  CHECK(r3.table() == qdle::dihedral_quandle(3).table());

  // trivial quandle of size 2: identity rows satisfy all axioms
  CHECK(FiniteQuandle::validate({{0, 1}, {0, 1}}).is_trivial());

  auto q1 = [] { FiniteQuandle::validate({{1, 0}, {0, 1}}); };
  CHECK(test::thrown_code(q1) == errc::q1_violation);
  CHECK(test::thrown_where(q1)[0] == 0);

  auto q2 = [] { FiniteQuandle::validate({{0, 0}, {1, 1}}); };
  CHECK(test::thrown_code(q2) == errc::q2_violation);

  auto q3 = [] { FiniteQuandle::validate({{0, 2, 1}, {2, 1, 0}, {0, 1, 2}}); };
  CHECK(test::thrown_code(q3) == errc::q3_violation);
  CHECK(test::thrown_where(q3) == std::array<int, 3>{0, 1, 0});

  CHECK(test::thrown_code([] { FiniteQuandle::validate({{0, 5}, {0, 1}}); }) ==
        errc::not_square);
  CHECK(test::thrown_code([] { FiniteQuandle::validate({}); }) == errc::not_square);
}

TEST_CASE("point symmetries") {
  CHECK(qdle::dihedral_quandle(5).point_symmetry(0).images() ==
        std::vector<int>{0, 4, 3, 2, 1});
  CHECK(qdle::trivial_quandle(4).point_symmetry(2) == Permutation::identity(4));
  // at +e1 the discrete 2-sphere fixes the first axis and flips the others
  CHECK(qdle::discrete_sphere(2).point_symmetry(0).images() ==
        std::vector<int>{0, 1, 3, 2, 5, 4});
  CHECK(test::thrown_code([] { qdle::trivial_quandle(2).point_symmetry(7); }) ==
        errc::invalid_argument);
}

TEST_CASE("inner generators deduplicate rows") {
  CHECK(qdle::trivial_quandle(3).inner_generators() ==
        std::vector<Permutation>{Permutation::identity(3)});
  CHECK(qdle::discrete_sphere(2).inner_generators().size() == 3);  // s_{e} = s_{-e}
  CHECK(qdle::dihedral_quandle(3).inner_generators().size() == 3);
}

TEST_CASE("displacement generators") {
  CHECK(qdle::trivial_quandle(5).displacement_generators().empty());
  CHECK(FiniteQuandle::validate({{0}}).displacement_generators().empty());

  // Dis(R_3) generators are the two nontrivial rotations c -> c + 2(a-b)
  auto gens = qdle::dihedral_quandle(3).displacement_generators();
  CHECK(gens == std::vector<Permutation>{Permutation({1, 2, 0}), Permutation({2, 0, 1})});
}

TEST_CASE("triviality") {
  CHECK(qdle::trivial_quandle(7).is_trivial());
  CHECK(qdle::dihedral_quandle(2).is_trivial());
  CHECK_FALSE(qdle::dihedral_quandle(3).is_trivial());
}

TEST_CASE("connectivity") {
  CHECK(qdle::dihedral_quandle(5).is_connected());
  CHECK_FALSE(qdle::dihedral_quandle(4).is_connected());  // orbit of 0 is the evens
  CHECK_FALSE(qdle::trivial_quandle(2).is_connected());
  CHECK(qdle::trivial_quandle(1).is_connected());
  CHECK(direct_product(qdle::dihedral_quandle(3), qdle::dihedral_quandle(3)).is_connected());
}

TEST_CASE("homogeneity") {
  CHECK(qdle::trivial_quandle(6).is_homogeneous() == Homogeneity::yes);
  CHECK(qdle::cycle_quandle(3).is_homogeneous() == Homogeneity::yes);
  // the lone point with identity symmetry cannot map to an R_3 point
  CHECK(free_union(qdle::trivial_quandle(1), qdle::dihedral_quandle(3)).is_homogeneous() ==
        Homogeneity::no);
  CHECK(qdle::dihedral_quandle(5).is_homogeneous() == Homogeneity::yes);
  CHECK(qdle::discrete_sphere(2).is_homogeneous(1) == Homogeneity::budget_exceeded);
}

TEST_CASE("direct product") {
  auto t6 = direct_product(qdle::trivial_quandle(2), qdle::trivial_quandle(3));
  CHECK(t6.size() == 6);
  CHECK(t6.is_trivial());

  auto r33 = direct_product(qdle::dihedral_quandle(3), qdle::dihedral_quandle(3));
  CHECK(r33.size() == 9);
  CHECK(r33.is_connected());

  CHECK(direct_product(qdle::discrete_sphere(1), qdle::dihedral_quandle(5)).size() ==
        4 * 5);
}

TEST_CASE("free union") {
  CHECK(free_union(qdle::trivial_quandle(1), qdle::trivial_quandle(1)).table() ==
        qdle::trivial_quandle(2).table());

  auto u = free_union(qdle::dihedral_quandle(3), qdle::dihedral_quandle(3));
  CHECK(u.size() == 6);
  CHECK_FALSE(u.is_connected());
  // symmetries act as the identity outside their own part
  auto s0 = u.point_symmetry(0);
  for (int y = 3; y < 6; ++y) CHECK(s0(y) == y);
}

TEST_CASE("conjugation law over the inner group") {
  for (const auto& q : {qdle::dihedral_quandle(5), qdle::discrete_sphere(2),
                        qdle::cycle_quandle(3)}) {
    auto inn = qdle::close(q.inner_generators(), q.size(), 100000);
    REQUIRE_FALSE(inn.truncated);
    for (const auto& g : inn.elements)
      for (int x = 0; x < q.size(); ++x)
        CHECK(compose(compose(g, q.point_symmetry(x)), g.inverse()) ==
              q.point_symmetry(g(x)));
  }
}

TEST_CASE("inner and displacement orbits coincide") {
  for (const auto& q : {qdle::dihedral_quandle(4), qdle::dihedral_quandle(6),
                        qdle::trivial_quandle(3), qdle::path_quandle(3),
                        free_union(qdle::dihedral_quandle(3), qdle::trivial_quandle(2))}) {
    CHECK(qdle::orbit_partition(q.inner_generators(), q.size()) ==
          qdle::orbit_partition(q.displacement_generators(), q.size()));
  }
}

TEST_CASE("relabeling preserves validity and structure predicates") {
  std::mt19937 rng(4242);
  for (const auto& q : {qdle::dihedral_quandle(6), qdle::discrete_sphere(2),
                        qdle::cycle_quandle(4),
                        free_union(qdle::trivial_quandle(1), qdle::dihedral_quandle(3))}) {
    for (int round = 0; round < 5; ++round) {
      auto pi = test::random_permutation(q.size(), rng);
      auto r = test::relabel(q, pi);  // validate() runs inside
      CHECK(r.is_trivial() == q.is_trivial());
      CHECK(r.is_connected() == q.is_connected());
      CHECK(r.is_homogeneous() == q.is_homogeneous());
    }
  }
}
