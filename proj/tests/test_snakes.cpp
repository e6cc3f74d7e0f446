#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "rhombus/snakes.hpp"

using namespace rhombus;

TEST_CASE("order_inversions") {
  CHECK(order_inversions({1, 2, 3, 4, 5}).empty());
  CHECK(order_inversions({5, 4, 3, 2, 1}).size() == 10);
  const std::vector<std::pair<int, int>> expected{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  CHECK(order_inversions({3, 4, 2, 1, 5}) == expected);
  CHECK_THROWS_AS(order_inversions({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(order_inversions({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("pair_rank is lexicographic") {
  for (int n = 2; n <= kMaxColors; ++n) {
    std::size_t r = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(pair_rank(i, j, n) == r++);
  }
}

TEST_CASE("identity and reversal are compatible with every tiling") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : enumerate_all(n)) {
      CHECK(is_compatible_order(LinearOrder::identity(n), t));
      CHECK(is_compatible_order(LinearOrder::reversal(n), t));
    }
}

TEST_CASE("snake of the standard tiling for n=5") {
  CHECK(is_compatible_order(LinearOrder({3, 4, 2, 1, 5}), Tiling::standard(5)));
}

TEST_CASE("sigma of the n=3 tilings") {
  const auto anti = sigma(Tiling::anti_standard(3));
  std::vector<std::vector<int>> seqs;
  for (const auto& o : anti) seqs.push_back(o.seq());
  CHECK(seqs == std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}});

  std::vector<PairSet> inv;
  for (const auto& o : anti) inv.push_back(o.inversions());
  const std::size_t p12 = pair_rank(1, 2, 3), p13 = pair_rank(1, 3, 3), p23 = pair_rank(2, 3, 3);
  CHECK(inv[0].none());
  CHECK((inv[1].count() == 1 && inv[1].test(p23)));
  CHECK((inv[2].count() == 2 && inv[2].test(p13) && inv[2].test(p23)));
  CHECK((inv[3].test(p12) && inv[3].test(p13) && inv[3].test(p23)));

  CHECK(sigma(Tiling::standard(3)).size() == 4);
}

TEST_CASE("sigma is a Condorcet domain containing identity and reversal") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_all(n)) {
      const auto s = sigma(t);
      CHECK(std::find(s.begin(), s.end(), LinearOrder::identity(n)) != s.end());
      CHECK(std::find(s.begin(), s.end(), LinearOrder::reversal(n)) != s.end());
      CHECK(is_condorcet_domain(s));
    }
}

TEST_CASE("sigma of the opposite tiling is the reversed sigma") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_all(n)) {
      std::set<std::vector<int>> expected;
      for (const auto& o : sigma(t)) expected.insert(o.reversed().seq());
      std::set<std::vector<int>> got;
      for (const auto& o : sigma(t.opposite())) got.insert(o.seq());
      CHECK(got == expected);
    }
}

TEST_CASE("membership survives restriction to three colors") {
  const int n = 5;
  for (const auto& t : enumerate_all(n))
    for (const auto& o : sigma(t))
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c) {
            const std::vector<int> k{a, b, c};
            CHECK(is_compatible_order(o.restricted(k), restrict(t, k)));
          }
}

TEST_CASE("Condorcet cycle detection") {
  const std::vector<LinearOrder> cyclic{LinearOrder({1, 2, 3}), LinearOrder({2, 3, 1}),
                                        LinearOrder({3, 1, 2})};
  const auto w = find_condorcet_cycle(cyclic);
  REQUIRE(w);
  CHECK(w->candidates == std::array<int, 3>{1, 2, 3});
  CHECK(w->orders == std::array<std::size_t, 3>{0, 1, 2});

  CHECK(is_condorcet_domain({LinearOrder({1, 2, 3})}));
  CHECK(is_condorcet_domain({LinearOrder({1, 2, 3}), LinearOrder({3, 2, 1})}));
  CHECK(is_condorcet_domain({LinearOrder({1, 2, 3}), LinearOrder({1, 2, 3}), LinearOrder({2, 3, 1})}));
}

TEST_CASE("sigma cap") {
  CHECK_THROWS_AS(sigma(Tiling::standard(10)), std::out_of_range);
}
