#include "permstat/qstats.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permstat/canonical.hpp"

namespace permstat {

namespace {

void require_q(int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
}

PositionSet set_union(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

long long inv_q(const Permutation& p, int q) {
  require_q(q);
  const int m = p.degree();
  long long total = 0;
  for (int i = q + 1; i <= m; ++i) {
    int larger_left = 0;
    for (int j = 1; j < i; ++j)
      if (p(j) > p(i)) ++larger_left;
    total += std::min<long long>(i - q, larger_left);
  }
  return total;
}

long long ell_q(const Permutation& p, int q) {
  require_q(q);
  return decompose(p).letter_count_at_least(q);
}

PositionSet del_set_q(const Permutation& p, int q) {
  require_q(q);
  const int m = p.degree();
  PositionSet out;
  for (int i = q + 1; i <= m; ++i) {
    int smaller_left = 0;
    for (int j = 1; j < i; ++j)
      if (p(j) < p(i)) ++smaller_left;
    if (smaller_left <= q - 1) out.push_back(i);
  }
  return out;
}

long long del_q(const Permutation& p, int q) {
  require_q(q);
  const long long count = static_cast<long long>(del_set_q(p, q).size());
#ifndef NDEBUG
  // cross-check against the s_q count in the canonical word
  auto multiset = generator_multiset(decompose(p));
  auto it = multiset.find(q);
  assert(count == (it == multiset.end() ? 0 : it->second));
#endif
  return count;
}

PositionSet des_set_q(const Permutation& p, int q) {
  require_q(q);
  const int m = p.degree();
  PositionSet descents;
  for (int i : p.descent_set())
    if (i >= q && i <= m - 1) descents.push_back(i);
  PositionSet shifted;
  for (int i : del_set_q(p, q)) shifted.push_back(i - 1);
  return set_union(descents, shifted);
}

long long des_q(const Permutation& p, int q) {
  return static_cast<long long>(des_set_q(p, q).size());
}

long long maj_q(const Permutation& p, int q) {
  const auto des = des_set_q(p, q);
  return std::accumulate(des.begin(), des.end(), 0LL);
}

long long rmaj_q(const Permutation& p, int q) {
  const auto des = des_set_q(p, q);
  long long total = 0;
  for (int i : des) total += p.degree() - i;
  return total;
}

StatRecord stat_record(const Permutation& p, int q) {
  require_q(q);
  StatRecord rec;
  rec.q = q;
  rec.degree = p.degree();
  rec.inv_q = inv_q(p, q);
  rec.ell_q = ell_q(p, q);
  rec.del_set = del_set_q(p, q);
  rec.des_set = des_set_q(p, q);
  rec.del_q = static_cast<long long>(rec.del_set.size());
  rec.des_q = static_cast<long long>(rec.des_set.size());
  rec.maj_q = std::accumulate(rec.des_set.begin(), rec.des_set.end(), 0LL);
  rec.rmaj_q = 0;
  for (int i : rec.des_set) rec.rmaj_q += rec.degree - i;

  if (rec.ell_q != rec.inv_q) throw std::logic_error("stat record: ell_q != inv_q");
  for (int i : rec.del_set)
    if (i < q + 1 || i > rec.degree) throw std::logic_error("stat record: Del_q out of range");
  for (int i : rec.des_set)
    if (i < q || i > rec.degree - 1) throw std::logic_error("stat record: Des_q out of range");
  for (int i : rec.del_set)
    if (!std::binary_search(rec.des_set.begin(), rec.des_set.end(), i - 1))
      throw std::logic_error("stat record: (Del_q - 1) not within Des_q");
  return rec;
}

std::string StatRecord::to_json() const {
  std::ostringstream out;
  auto array = [&out](const PositionSet& s) {
    out << '[';
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      out << s[i];
    }
    out << ']';
  };
  out << "{\"q\":" << q << ",\"degree\":" << degree << ",\"inv_q\":" << inv_q
      << ",\"ell_q\":" << ell_q << ",\"del_q\":" << del_q << ",\"des_q\":" << des_q
      << ",\"maj_q\":" << maj_q << ",\"rmaj_q\":" << rmaj_q << ",\"Del_q\":";
  array(del_set);
  out << ",\"Des_q\":";
  array(des_set);
  out << '}';
  return out.str();
}

}  // namespace permstat
