#include "permstat/covering.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "permstat/numbers.hpp"
#include "permstat/qstats.hpp"

namespace permstat {

CanonicalWord map_word(const CanonicalWord& w, int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  if (w.degree < q) throw std::invalid_argument("f_q requires degree >= q");
  CanonicalWord image;
  image.degree = w.degree - q + 1;
  for (int j = q; j <= w.degree - 1; ++j) {
    const auto& f = w.factors[static_cast<size_t>(j) - 1];
    const int level = j - q + 1;
    const int start = f.empty() ? level + 1 : std::max(f.start, q) - q + 1;
    image.factors.push_back(CanonicalFactor{level, start});
  }
  return image;
}

Permutation f_q(const Permutation& p, int q) {
  const CanonicalWord image = map_word(decompose(p), q);
  Permutation result = recompose(image);
  assert(decompose(result) == image);  // image word is already canonical
  return result;
}

namespace {

FiberIndex fiber_by_scan(const Permutation& base, int q) {
  FiberIndex out{base, q, {}};
  const int m = base.degree() + q - 1;
  for_each_permutation(m, [&](const Permutation& p) {
    if (f_q(p, q) == base) out.members.push_back(p);
  });
  return out;
}

// Enumerates the words at levels 1..q-1 (the kernel prefix, q! of them) and,
// per level-j factor of the base, the lifted factor at level j+q-1. A factor
// reaching s_1 lifts to any of the q runs ending in s_q..s_1; every other
// factor lifts uniquely.
FiberIndex fiber_by_splice(const Permutation& base, int q) {
  FiberIndex out{base, q, {}};
  const CanonicalWord base_word = decompose(base);
  const int m = base.degree() + q - 1;

  CanonicalWord lifted;
  lifted.degree = m;
  lifted.factors.resize(static_cast<size_t>(m - 1));
  for (int j = 1; j <= m - 1; ++j)
    lifted.factors[static_cast<size_t>(j) - 1] = CanonicalFactor{j, j + 1};

  // positions of lifted base factors whose start index is free to extend
  std::vector<int> free_levels;
  for (const auto& f : base_word.factors) {
    const int level = f.level + q - 1;
    if (f.empty()) continue;
    if (f.start == 1)
      free_levels.push_back(level);
    else
      lifted.factors[static_cast<size_t>(level) - 1] = CanonicalFactor{level, f.start + q - 1};
  }

  // odometer over prefix starts (level j < q: start in 1..j+1) and the
  // extension starts (1..q) of each free level
  std::vector<int> prefix_start(static_cast<size_t>(q) - 1, 1);
  for (;;) {
    for (int j = 1; j <= q - 1; ++j)
      lifted.factors[static_cast<size_t>(j) - 1] =
          CanonicalFactor{j, prefix_start[static_cast<size_t>(j) - 1]};

    std::vector<int> extension(free_levels.size(), 1);
    for (;;) {
      for (size_t i = 0; i < free_levels.size(); ++i) {
        const int level = free_levels[i];
        lifted.factors[static_cast<size_t>(level) - 1] = CanonicalFactor{level, extension[i]};
      }
      out.members.push_back(recompose(lifted));

      size_t i = 0;
      while (i < extension.size() && extension[i] == q) extension[i++] = 1;
      if (i == extension.size()) break;
      ++extension[i];
    }

    size_t j = 0;
    while (j < prefix_start.size() && prefix_start[j] == static_cast<int>(j) + 2)
      prefix_start[j++] = 1;
    if (j == prefix_start.size()) break;
    ++prefix_start[j];
  }

  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

FiberIndex fiber(const Permutation& base, int q, FiberMethod method) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  FiberIndex out =
      method == FiberMethod::kScan ? fiber_by_scan(base, q) : fiber_by_splice(base, q);
  const BigNat expected = factorial(q) * boost::multiprecision::pow(
                                             BigNat(q), static_cast<unsigned>(del_q(base, 1)));
  if (BigNat(out.members.size()) != expected)
    throw std::logic_error("fiber size does not match q! * q^del_1");
  return out;
}

bool compose_maps_check(int q1, int q2, int m) {
  if (q1 < 1 || q2 < 1) throw std::invalid_argument("q must be a positive integer");
  if (m < q1 + q2 - 1) throw std::invalid_argument("m must be >= q1 + q2 - 1");
  bool ok = true;
  for_each_permutation(m, [&](const Permutation& p) {
    if (!ok) return;
    if (f_q(f_q(p, q2), q1) != f_q(p, q1 + q2 - 1)) ok = false;
  });
  return ok;
}

}  // namespace permstat
