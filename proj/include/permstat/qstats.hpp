#ifndef PERMSTAT_QSTATS_HPP
#define PERMSTAT_QSTATS_HPP

#include <string>

#include "permstat/permutation.hpp"

namespace permstat {

/// All q-statistics of one permutation at one q.
///
/// Invariants checked at construction time:
///   ell_q == inv_q, del_q == |Del_q|, des_q == |Des_q|,
///   Del_q is contained in {q+1..m}, Des_q in {q..m-1}, (Del_q - 1) in Des_q,
///   maj_q == sum of Des_q, rmaj_q == sum of (m - i) over Des_q.
struct StatRecord {
  int q = 1;
  int degree = 1;
  long long inv_q = 0;
  long long ell_q = 0;
  long long del_q = 0;
  long long des_q = 0;
  long long maj_q = 0;
  long long rmaj_q = 0;
  PositionSet del_set;  // Del_q
  PositionSet des_set;  // Des_q

  /// JSON object with 1-indexed sorted arrays for Del_q/Des_q.
  std::string to_json() const;
};

/// Sum over i in {q+1..m} of min{i-q, #(larger entries left of i)}; 0 if m <= q.
long long inv_q(const Permutation& p, int q);

/// Canonical-word letters with generator index >= q.
long long ell_q(const Permutation& p, int q);

/// Del_q: positions i in {q+1..m} with at most q-1 smaller entries strictly left.
PositionSet del_set_q(const Permutation& p, int q);

/// |Del_q|; equals the number of s_q letters in the canonical word.
long long del_q(const Permutation& p, int q);

/// Des_q = (descent positions in {q..m-1}) union (Del_q - 1).
PositionSet des_set_q(const Permutation& p, int q);

long long des_q(const Permutation& p, int q);

/// Sum of i over Des_q.
long long maj_q(const Permutation& p, int q);

/// Sum of (m - i) over Des_q, m = degree.
long long rmaj_q(const Permutation& p, int q);

/// All statistics of p at q in one pass.
StatRecord stat_record(const Permutation& p, int q);

}  // namespace permstat

#endif  // PERMSTAT_QSTATS_HPP
