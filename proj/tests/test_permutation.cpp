#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <unordered_set>
#include <vector>

#include "qdle/permutation.hpp"
#include "test_helpers.hpp"

using qdle::Permutation;
using qdle::errc;

TEST_CASE("identity permutation") {
  CHECK(Permutation::identity(3).images() == std::vector<int>{0, 1, 2});
  CHECK(Permutation::identity(1).images() == std::vector<int>{0});
  CHECK(Permutation::identity(5).fixed_point_count() == 5);
  CHECK(test::thrown_code([] { Permutation::identity(0); }) == errc::degree_zero);
}

TEST_CASE("construction rejects non-bijections") {
  CHECK(test::thrown_code([] { Permutation({0, 0, 1}); }) == errc::not_bijective);
  CHECK(test::thrown_code([] { Permutation({0, 2}); }) == errc::not_bijective);
  CHECK(test::thrown_code([] { Permutation({-1, 0}); }) == errc::not_bijective);
  CHECK(test::thrown_code([] { Permutation(std::vector<int>{}); }) == errc::degree_zero);
}

TEST_CASE("compose applies the right factor first") {
  Permutation swap01({1, 0, 2});
  CHECK(compose(swap01, swap01) == Permutation::identity(3));

  Permutation cycle({1, 2, 0});
  CHECK(compose(cycle, Permutation::identity(3)) == cycle);
  CHECK(compose(cycle, cycle).images() == std::vector<int>{2, 0, 1});

  // p(q(i)) and not q(p(i))
  Permutation p({1, 0, 2}), q({0, 2, 1});
  CHECK(compose(p, q).images() == std::vector<int>{1, 2, 0});

  CHECK(test::thrown_code([] {
          compose(Permutation::identity(2), Permutation::identity(3));
        }) == errc::degree_mismatch);
}

TEST_CASE("inverse") {
  CHECK(Permutation({1, 2, 0}).inverse().images() == std::vector<int>{2, 0, 1});
  CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
  CHECK(Permutation({1, 0}).inverse() == Permutation({1, 0}));
}

TEST_CASE("fixed points") {
  CHECK(Permutation({0, 1, 2}).fixed_point_count() == 3);
  CHECK(Permutation({1, 0, 2}).fixed_point_count() == 1);
  CHECK(Permutation({1, 0, 2}).fixed_points() == std::vector<int>{2});
  CHECK(Permutation({1, 2, 0}).fixed_point_count() == 0);
  CHECK(Permutation({1, 2, 0}).fixed_points().empty());
}

TEST_CASE("group laws, randomized") {
  std::mt19937 rng(20240601);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    auto p = test::random_permutation(n, rng);
    auto q = test::random_permutation(n, rng);
    auto r = test::random_permutation(n, rng);
    CHECK(compose(p.inverse(), p) == Permutation::identity(n));
    CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    int moved = 0;
    for (int i = 0; i < n; ++i) moved += (p(i) != i);
    CHECK(p.fixed_point_count() == n - moved);
  }
}

TEST_CASE("cycle type") {
  CHECK(Permutation::identity(4).cycle_type() == std::vector<int>{1, 1, 1, 1});
  CHECK(Permutation({1, 0, 3, 2}).cycle_type() == std::vector<int>{2, 2});
  CHECK(Permutation({1, 2, 0, 3}).cycle_type() == std::vector<int>{1, 3});
}

TEST_CASE("cycle notation parsing") {
  CHECK(qdle::parse_cycles("(0 1)(2 3)", 4).images() == std::vector<int>{1, 0, 3, 2});
  CHECK(qdle::parse_cycles("(1 2 3)", 5).images() == std::vector<int>{0, 2, 3, 1, 4});
  CHECK(qdle::parse_cycles("(1,4)(2,3)", 5).images() == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(qdle::parse_cycles("", 3) == Permutation::identity(3));
  CHECK(qdle::parse_cycles("()", 3) == Permutation::identity(3));

  CHECK(test::thrown_code([] { qdle::parse_cycles("(0 1", 3); }) == errc::syntax_error);
  CHECK(test::thrown_code([] { qdle::parse_cycles("(0 0)", 3); }) == errc::syntax_error);
  CHECK(test::thrown_code([] { qdle::parse_cycles("(7)", 3); }) == errc::syntax_error);
  CHECK(test::thrown_code([] { qdle::parse_cycles("x", 3); }) == errc::syntax_error);
  CHECK(test::thrown_code([] { qdle::parse_cycles("0 1", 3); }) == errc::syntax_error);
}

TEST_CASE("value semantics support deduplication") {
  std::unordered_set<Permutation, qdle::PermutationHash> set;
  set.insert(Permutation({1, 0, 2}));
  set.insert(Permutation({1, 0, 2}));
  set.insert(Permutation::identity(3));
  CHECK(set.size() == 2);

  std::vector<Permutation> v{Permutation({2, 1, 0}), Permutation::identity(3),
                             Permutation({1, 0, 2})};
  std::sort(v.begin(), v.end());
  CHECK(v.front() == Permutation::identity(3));  // lexicographically smallest
}
