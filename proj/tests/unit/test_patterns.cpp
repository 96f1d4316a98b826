#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "permstat/covering.hpp"
#include "permstat/numbers.hpp"
#include "permstat/patterns.hpp"
#include "permstat/qstats.hpp"

using namespace permstat;
using permstat::testing::perm;

TEST_SUITE("patterns") {

TEST_CASE("pattern family rendering") {
  CHECK(pattern_family(1) == std::vector<std::string>{"1-32"});
  CHECK(pattern_family(2) == std::vector<std::string>{"1-2-43", "2-1-43"});
  CHECK(pattern_family(3).size() == 6);
}

TEST_CASE("containment witnesses") {
  const auto witness = contains_pat_q(perm({1, 3, 2}), 1);
  REQUIRE(witness.has_value());
  CHECK(witness->positions == std::vector<int>{1, 2});
  CHECK(witness->bottom == 3);
  CHECK(witness->to_json() == "{\"positions\":[1,2],\"bottom\":3}");

  CHECK_FALSE(contains_pat_q(perm({3, 2, 1}), 1).has_value());
  for_each_permutation(3, [](const Permutation& p) {
    REQUIRE_FALSE(contains_pat_q(p, 2).has_value());
  });
}

TEST_CASE("witnesses are leftmost") {
  // two qualifying descents; the witness must use the leftmost one
  const auto witness = contains_pat_q(perm({1, 4, 3, 5, 2}), 1);
  REQUIRE(witness.has_value());
  CHECK(witness->positions == std::vector<int>{1, 2});
  CHECK(witness->bottom == 3);
}

TEST_CASE("avoidance") {
  CHECK_FALSE(avoids_q(perm({1, 3, 2}), 1));
  for (int q = 1; q <= 4; ++q) CHECK(avoids_q(Permutation::identity(5), q));
  CHECK(count_avoiders(3, 1) == 5);
  CHECK(count_avoiders(0, 1) == 1);
}

TEST_CASE("avoidance equals Del - 1 == Des, m <= 7, q <= 3") {
  for (int m = 1; m <= 7; ++m) {
    for (int q = 1; q <= 3; ++q) {
      for_each_permutation(m, [&](const Permutation& p) {
        PositionSet shifted;
        for (int i : del_set_q(p, q)) shifted.push_back(i - 1);
        REQUIRE(avoids_q(p, q) == (shifted == des_set_q(p, q)));
      });
    }
  }
}

TEST_CASE("f_q maps avoiders to avoiders, m <= 6") {
  for (int q = 2; q <= 3; ++q) {
    for (int m = q; m <= 6; ++m) {
      for_each_permutation(m, [&](const Permutation& p) {
        if (!avoids_q(p, q)) return;
        REQUIRE(avoids_q(f_q(p, q), 1));
        REQUIRE(avoids_q(f_q(p, 2), q - 1));
      });
    }
  }
}

TEST_CASE("avoider counts agree with the number module, m <= 7") {
  for (int q = 1; q <= 3; ++q)
    for (int m = 0; m <= 7; ++m) REQUIRE(count_avoiders(m, q) == h_q(m, q));
}

TEST_CASE("refined avoider counts by del_q, n + q - 1 <= 7") {
  for (int q = 1; q <= 3; ++q) {
    for (int n = 1; n + q - 1 <= 7; ++n) {
      const int m = n + q - 1;
      std::vector<long long> counts(static_cast<size_t>(n) + 1, 0);
      for_each_permutation(m, [&](const Permutation& p) {
        if (avoids_q(p, q)) ++counts[static_cast<size_t>(del_q(p, q)) + 1];
      });
      for (int k = 1; k <= n; ++k) {
        const BigNat expected =
            factorial(q - 1) *
            boost::multiprecision::pow(BigNat(q), static_cast<unsigned>(k)) * stirling2(n, k);
        REQUIRE(BigNat(counts[static_cast<size_t>(k)]) == expected);
      }
    }
  }
}

TEST_CASE("weighted avoider sums hit the q-Bell numbers") {
  // sum of q^{del_1} over avoiders of S_n equals b_q(n) / q
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 6; ++n) {
      BigNat sum = 0;
      for_each_permutation(n, [&](const Permutation& p) {
        if (avoids_q(p, 1))
          sum += boost::multiprecision::pow(BigNat(q), static_cast<unsigned>(del_q(p, 1)));
      });
      REQUIRE(sum * q == bell_q(n, q));
    }
  }
  // sum of q^{del_q} over avoiders of S_{n+q-1} equals ((q-1)!/q) b_{q^2}(n)
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n + q - 1 <= 7; ++n) {
      BigNat sum = 0;
      for_each_permutation(n + q - 1, [&](const Permutation& p) {
        if (avoids_q(p, q))
          sum += boost::multiprecision::pow(BigNat(q), static_cast<unsigned>(del_q(p, q)));
      });
      REQUIRE(sum * q == factorial(q - 1) * bell_q(n, q * q));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(contains_pat_q(perm({1, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(count_avoiders(-1, 1), std::invalid_argument);
}

}  // TEST_SUITE
