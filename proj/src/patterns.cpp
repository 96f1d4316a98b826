#include "permstat/patterns.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "permstat/qstats.hpp"

namespace permstat {

std::string PatternWitness::to_json() const {
  std::ostringstream out;
  out << "{\"positions\":[";
  for (size_t i = 0; i < positions.size(); ++i) {
    if (i) out << ',';
    out << positions[i];
  }
  out << "],\"bottom\":" << bottom << '}';
  return out.str();
}

std::vector<std::string> pattern_family(int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  std::vector<std::string> out;
  for_each_permutation(q, [&](const Permutation& p) {
    std::ostringstream pat;
    for (int i = 1; i <= q; ++i) pat << p(i) << '-';
    pat << q + 2 << (q + 2 > 9 ? " " : "") << q + 1;  // final pair is adjacent
    out.push_back(pat.str());
  });
  return out;
}

std::optional<PatternWitness> contains_pat_q(const Permutation& p, int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  const int m = p.degree();
  for (int d = q + 1; d <= m - 1; ++d) {
    if (p(d) <= p(d + 1)) continue;
    std::vector<int> small;
    for (int j = 1; j < d && static_cast<int>(small.size()) < q; ++j)
      if (p(j) < p(d + 1)) small.push_back(j);
    if (static_cast<int>(small.size()) == q) {
      small.push_back(d);
      return PatternWitness{std::move(small), d + 1};
    }
  }
  return std::nullopt;
}

bool avoids_q(const Permutation& p, int q) {
  const bool avoids = !contains_pat_q(p, q).has_value();
#ifndef NDEBUG
  {
    PositionSet shifted;
    for (int i : del_set_q(p, q)) shifted.push_back(i - 1);
    assert(avoids == (shifted == des_set_q(p, q)));
  }
#endif
  return avoids;
}

BigNat count_avoiders(int m, int q) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (m == 0) return 1;
  BigNat count = 0;
  for_each_permutation(m, [&](const Permutation& p) {
    if (avoids_q(p, q)) ++count;
  });
  return count;
}

}  // namespace permstat
