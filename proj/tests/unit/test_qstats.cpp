#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "permstat/canonical.hpp"
#include "permstat/qstats.hpp"

using namespace permstat;
using permstat::testing::perm;
using permstat::testing::positions;

namespace {

const Permutation kExample = perm({7, 8, 6, 5, 2, 9, 4, 1, 3});

// left-to-right minima strictly after position 1
PositionSet ltr_minima(const Permutation& p) {
  PositionSet out;
  int running_min = p(1);
  for (int i = 2; i <= p.degree(); ++i) {
    if (p(i) < running_min) out.push_back(i);
    running_min = std::min(running_min, p(i));
  }
  return out;
}

// the subgroup generated by s_1..s_{q-1}: permutations moving only 1..q
std::vector<Permutation> parabolic_subgroup(int q, int degree) {
  std::vector<Permutation> out;
  for_each_permutation(q, [&](const Permutation& tau) { out.push_back(embed(tau, degree)); });
  return out;
}

}  // namespace

TEST_SUITE("qstats") {

TEST_CASE("inv_q") {
  CHECK(inv_q(kExample, 2) == 23);
  CHECK(inv_q(perm({3, 1, 2}), 1) == 2);
  CHECK(inv_q(perm({2, 1, 3}), 5) == 0);
  CHECK_THROWS_AS(inv_q(kExample, 0), std::invalid_argument);
}

TEST_CASE("ell_q") {
  // s1 | s2 s1 | s3 s2 s1 is the canonical word of the degree-4 reversal
  const Permutation reversal = recompose(string_to_word("s1 | s2 s1 | s3 s2 s1"));
  CHECK(reversal == perm({4, 3, 2, 1}));
  CHECK(ell_q(reversal, 2) == 3);
  CHECK(ell_q(perm({3, 1, 2}), 1) == perm({3, 1, 2}).inversion_count());
  CHECK(ell_q(Permutation::identity(5), 3) == 0);
}

TEST_CASE("del_set_q") {
  CHECK(del_set_q(kExample, 2) == positions({3, 4, 5, 7, 8}));
  CHECK(del_set_q(kExample, 3) == positions({4, 5, 7, 8, 9}));
  CHECK(del_set_q(Permutation::identity(4), 1).empty());
}

TEST_CASE("del_q") {
  CHECK(del_q(perm({2, 1, 3}), 1) == 1);
  CHECK(del_q(perm({2, 3, 1}), 2) == 1);
  for (int q = 1; q <= 5; ++q) CHECK(del_q(Permutation::identity(5), q) == 0);
}

TEST_CASE("des_set_q") {
  CHECK(des_set_q(kExample, 2) == positions({2, 3, 4, 6, 7}));
  CHECK(des_set_q(kExample, 3) == positions({3, 4, 6, 7, 8}));
  CHECK(des_set_q(kExample, 4) == positions({4, 6, 7, 8}));
}

TEST_CASE("maj_q and rmaj_q") {
  CHECK(maj_q(kExample, 2) == 22);
  CHECK(rmaj_q(kExample, 2) == 23);
  CHECK(rmaj_q(Permutation::identity(6), 3) == 0);
  CHECK(rmaj_q(perm({2, 1}), 1) == 1);
}

TEST_CASE("stat_record aggregates all statistics") {
  const StatRecord rec = stat_record(kExample, 2);
  CHECK(rec.inv_q == 23);
  CHECK(rec.ell_q == 23);
  CHECK(rec.del_set == positions({3, 4, 5, 7, 8}));
  CHECK(rec.des_set == positions({2, 3, 4, 6, 7}));
  CHECK(rec.del_q == 5);
  CHECK(rec.des_q == 5);
  CHECK(rec.maj_q == 22);
  CHECK(rec.rmaj_q == 23);

  const StatRecord id = stat_record(Permutation::identity(5), 3);
  CHECK(id.inv_q == 0);
  CHECK(id.ell_q == 0);
  CHECK(id.del_q == 0);
  CHECK(id.des_q == 0);
  CHECK(id.maj_q == 0);
  CHECK(id.rmaj_q == 0);
  CHECK(id.del_set.empty());
  CHECK(id.des_set.empty());

  const StatRecord swap = stat_record(perm({2, 1}), 1);
  CHECK(swap.inv_q == 1);
  CHECK(swap.des_set == positions({1}));
  CHECK(swap.del_set == positions({2}));
  CHECK(swap.del_q == 1);
  CHECK(swap.des_q == 1);
  CHECK(swap.maj_q == 1);
  CHECK(swap.rmaj_q == 1);
}

TEST_CASE("stat_record JSON") {
  CHECK(stat_record(kExample, 2).to_json() ==
        "{\"q\":2,\"degree\":9,\"inv_q\":23,\"ell_q\":23,\"del_q\":5,\"des_q\":5,"
        "\"maj_q\":22,\"rmaj_q\":23,\"Del_q\":[3,4,5,7,8],\"Des_q\":[2,3,4,6,7]}");
}

TEST_CASE("ell_q equals inv_q for every q, degree <= 8") {
  for (int m = 1; m <= 8; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      const CanonicalWord w = decompose(p);
      for (int q = 1; q <= m; ++q) REQUIRE(w.letter_count_at_least(q) == inv_q(p, q));
    });
  }
}

TEST_CASE("inverse invariance of inv_q and del_q, degree <= 7") {
  for (int m = 2; m <= 7; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      const Permutation inv = p.inverse();
      for (int q = 1; q <= m; ++q) {
        REQUIRE(inv_q(p, q) == inv_q(inv, q));
        REQUIRE(del_q(p, q) == del_q(inv, q));
      }
    });
  }
}

TEST_CASE("del_q equals the s_q letter count, degree <= 7") {
  for (int m = 2; m <= 7; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      const auto multiset = generator_multiset(decompose(p));
      for (int q = 1; q <= m; ++q) {
        const auto it = multiset.find(q);
        const long long in_word = it == multiset.end() ? 0 : it->second;
        REQUIRE(static_cast<long long>(del_set_q(p, q).size()) == in_word);
      }
    });
  }
}

TEST_CASE("Del_q - 1 sits inside Des_q") {
  for (int m = 1; m <= 7; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      for (int q = 1; q <= m; ++q) {
        const PositionSet des = des_set_q(p, q);
        for (int i : del_set_q(p, q))
          REQUIRE(std::binary_search(des.begin(), des.end(), i - 1));
      }
    });
  }
}

TEST_CASE("double-coset invariance, degree <= 6, q <= 3") {
  const int m = 6;
  for (int q = 2; q <= 3; ++q) {
    const auto subgroup = parabolic_subgroup(q, m);
    for_each_permutation(m, [&](const Permutation& p) {
      const auto del = del_set_q(p, q);
      const auto des = des_set_q(p, q);
      const auto inv = inv_q(p, q);
      for (const auto& tau : subgroup) {
        for (const auto& tau2 : subgroup) {
          const Permutation moved = tau.compose(p).compose(tau2);
          REQUIRE(del_set_q(moved, q) == del);
          REQUIRE(des_set_q(moved, q) == des);
          REQUIRE(inv_q(moved, q) == inv);
        }
      }
    });
  }
}

TEST_CASE("q = 1 statistics are the classical ones") {
  for (int m = 1; m <= 6; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      REQUIRE(inv_q(p, 1) == p.inversion_count());
      REQUIRE(des_set_q(p, 1) == p.descent_set());
      REQUIRE(del_set_q(p, 1) == ltr_minima(p));
    });
  }
}

}  // TEST_SUITE
