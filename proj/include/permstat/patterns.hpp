#ifndef PERMSTAT_PATTERNS_HPP
#define PERMSTAT_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "permstat/numbers.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Subsequence certifying that a permutation contains one of the q! dashed
/// patterns (x_1 - x_2 - ... - x_q - (q+2)(q+1)): q positions holding values
/// below the bottom, then an adjacent descent ending at the bottom.
struct PatternWitness {
  std::vector<int> positions;  // i_1 < ... < i_{q+1}; i_{q+1} is the descent top
  int bottom = 0;              // i_{q+1} + 1

  std::string to_json() const;
};

/// The q! dashed patterns, rendered like "1-2-43", for display and tests.
std::vector<std::string> pattern_family(int q);

/// Scans for a descent with at least q smaller-than-bottom entries strictly to
/// its left (the containment criterion). Picks the leftmost qualifying descent
/// and the q leftmost qualifying entries, so witnesses are deterministic.
std::optional<PatternWitness> contains_pat_q(const Permutation& p, int q);

/// True iff p contains none of the q! patterns; equivalent to
/// (Del_q - 1) == Des_q.
bool avoids_q(const Permutation& p, int q);

/// Count of avoiders in S_m by exhaustive scan.
BigNat count_avoiders(int m, int q);

}  // namespace permstat

#endif  // PERMSTAT_PATTERNS_HPP
