#include <doctest.h>

#include <map>
#include <stdexcept>

#include "helpers.hpp"
#include "permstat/covering.hpp"
#include "permstat/numbers.hpp"
#include "permstat/qstats.hpp"

using namespace permstat;
using permstat::testing::perm;

namespace {

PositionSet shift_down(PositionSet s, int r) {
  for (int& i : s) i -= r;
  return s;
}

std::map<std::vector<int>, std::vector<Permutation>> fibers_by_sweep(int m, int q) {
  std::map<std::vector<int>, std::vector<Permutation>> buckets;
  for_each_permutation(m, [&](const Permutation& p) {
    buckets[f_q(p, q).window()].push_back(p);
  });
  return buckets;
}

}  // namespace

TEST_SUITE("covering") {

TEST_CASE("f_q on small examples") {
  CHECK(f_q(perm({2, 3, 1}), 2) == perm({2, 1}));
  for_each_permutation(4, [](const Permutation& p) { REQUIRE(f_q(p, 1) == p); });
  CHECK(f_q(Permutation::identity(3), 2) == Permutation::identity(2));
  CHECK(f_q(perm({2, 1, 3}), 2) == Permutation::identity(2));  // the s_1 letter is erased
  CHECK_THROWS_AS(f_q(perm({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("composing the maps") {
  CHECK(compose_maps_check(2, 2, 5));
  CHECK(compose_maps_check(1, 3, 5));
  CHECK(compose_maps_check(2, 2, 4));
  CHECK(compose_maps_check(3, 2, 6));
}

TEST_CASE("fibers on small bases") {
  const FiberIndex four = fiber(perm({2, 1}), 2);
  CHECK(four.members.size() == 4);  // 2! * 2^{del_1}
  for (const auto& member : four.members) CHECK(f_q(member, 2) == perm({2, 1}));

  const FiberIndex two = fiber(Permutation::identity(2), 2);
  REQUIRE(two.members.size() == 2);
  CHECK(two.members[0] == Permutation::identity(3));
  CHECK(two.members[1] == perm({2, 1, 3}));
}

TEST_CASE("fibers partition the ambient group") {
  for (int q = 1; q <= 3; ++q) {
    for (int n = 1; n + q - 1 <= 6; ++n) {
      const int m = n + q - 1;
      long long total = 0;
      for_each_permutation(n, [&](const Permutation& base) {
        total += static_cast<long long>(fiber(base, q, FiberMethod::kSplice).members.size());
      });
      REQUIRE(total == factorial(m).convert_to<long long>());
    }
  }
}

TEST_CASE("scan and splice enumerate the same fibers, m <= 7") {
  for (int q = 2; q <= 3; ++q) {
    const int m = 7;
    const int n = m - q + 1;
    const auto buckets = fibers_by_sweep(m, q);
    for_each_permutation(n, [&](const Permutation& base) {
      const auto it = buckets.find(base.window());
      REQUIRE(it != buckets.end());
      const FiberIndex spliced = fiber(base, q, FiberMethod::kSplice);
      REQUIRE(spliced.members == it->second);  // both lexicographically sorted
    });
  }
}

TEST_CASE("statistics transport along f_q, m <= 6") {
  for (int m = 2; m <= 6; ++m) {
    for (int q = 1; q <= std::min(m, 3); ++q) {
      for_each_permutation(m, [&](const Permutation& p) {
        const Permutation image = f_q(p, q);
        REQUIRE(shift_down(del_set_q(p, q), q - 1) == del_set_q(image, 1));
        REQUIRE(shift_down(des_set_q(p, q), q - 1) == des_set_q(image, 1));
        REQUIRE(inv_q(p, q) == inv_q(image, 1));
        REQUIRE(rmaj_q(p, q) == rmaj_q(image, 1));
      });
    }
  }
}

TEST_CASE("f_q commutes with inversion, m <= 6") {
  for (int m = 2; m <= 6; ++m) {
    for (int q = 1; q <= std::min(m, 3); ++q) {
      for_each_permutation(m, [&](const Permutation& p) {
        REQUIRE(f_q(p.inverse(), q) == f_q(p, q).inverse());
      });
    }
  }
}

TEST_CASE("f_q is constant on double cosets, m <= 5") {
  const int m = 5;
  for (int q = 2; q <= 3; ++q) {
    std::vector<Permutation> subgroup;
    for_each_permutation(q, [&](const Permutation& tau) { subgroup.push_back(embed(tau, m)); });
    for_each_permutation(m, [&](const Permutation& p) {
      const Permutation image = f_q(p, q);
      for (const auto& tau : subgroup)
        for (const auto& tau2 : subgroup)
          REQUIRE(f_q(tau.compose(p).compose(tau2), q) == image);
    });
  }
}

TEST_CASE("f_q is not a group homomorphism") {
  const Permutation g = Permutation::transposition(2, 3);  // s_2
  const Permutation h = Permutation::transposition(1, 3).compose(
      Permutation::transposition(2, 3));  // s_1 s_2
  const Permutation gh = g.compose(h);
  CHECK(f_q(gh, 2) != f_q(g, 2).compose(f_q(h, 2)));
  CHECK(f_q(g, 2) == perm({2, 1}));
  CHECK(f_q(h, 2) == perm({2, 1}));
  CHECK(f_q(gh, 2) == perm({2, 1}));
}

TEST_CASE("mapped words stay canonical") {
  for_each_permutation(6, [](const Permutation& p) {
    const CanonicalWord image = map_word(decompose(p), 2);
    REQUIRE(decompose(recompose(image)) == image);
  });
}

}  // TEST_SUITE
