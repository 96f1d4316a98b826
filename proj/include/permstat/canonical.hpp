#ifndef PERMSTAT_CANONICAL_HPP
#define PERMSTAT_CANONICAL_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// One factor of a canonical word: the coset representative at flag level j.
///
/// The representative set at level j is {1, s_j, s_j s_{j-1}, ..., s_j ... s_1};
/// a factor is stored run-encoded as its start index k, where k = j+1 encodes
/// the empty factor and k <= j encodes the descending run s_j s_{j-1} ... s_k.
struct CanonicalFactor {
  int level = 0;  // j, 1 <= j
  int start = 0;  // k, 1 <= k <= j+1

  bool empty() const { return start == level + 1; }
  int letter_count() const { return empty() ? 0 : level - start + 1; }

  auto operator<=>(const CanonicalFactor&) const = default;
};

/// The unique factorization of a permutation along the principal flag
/// S_1 < S_2 < ... < S_m, one factor per level 1..m-1.
struct CanonicalWord {
  int degree = 1;
  std::vector<CanonicalFactor> factors;  // factors[j-1] has level j

  int letter_count() const;

  /// Letters with generator index >= q.
  int letter_count_at_least(int q) const;

  /// Flat list of generator indices, factors expanded left to right.
  std::vector<int> letters() const;

  auto operator<=>(const CanonicalWord&) const = default;
};

/// Unique canonical word of p: peel the top value m, m-1, ... off the window.
CanonicalWord decompose(const Permutation& p);

/// Product of the expanded factors; inverse of decompose.
Permutation recompose(const CanonicalWord& w);

/// Count of each generator s_i across all factors; values sum to letter_count.
std::map<int, int> generator_multiset(const CanonicalWord& w);

/// p viewed in S_m (m >= degree) by appending fixed points.
Permutation embed(const Permutation& p, int m);

/// Levels joined by " | " from level 1 upward; a nonempty level renders as
/// "s<j> s<j-1> ... s<k>", an empty level as the empty string.
std::string word_to_string(const CanonicalWord& w);

/// Parses the word format. Segment levels are taken from each run's leading
/// letter; missing levels are empty. The degree is inferred from the larger of
/// segment count + 1 and max level + 1. Throws std::invalid_argument on
/// malformed tokens, non-descending runs, or out-of-order levels.
CanonicalWord string_to_word(std::string_view text);

/// Same, with an explicit degree; levels above the parsed ones stay empty.
CanonicalWord string_to_word(std::string_view text, int degree);

}  // namespace permstat

#endif  // PERMSTAT_CANONICAL_HPP
