#ifndef PERMSTAT_ALTERNATING_HPP
#define PERMSTAT_ALTERNATING_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/covering.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// One factor of an A-canonical word. The representative set at level j is
/// {1, a_j, a_j a_{j-1}, ..., a_j...a_2, a_j...a_2 a_1, a_j...a_2 a_1^{-1}},
/// j+2 alternatives, encoded by the start index:
///   start = j+1: empty;  2 <= start <= j: the run a_j ... a_start;
///   start = 1: a_j ... a_1;  start = 0: a_j ... a_2 a_1^{-1}.
struct AFactor {
  int level = 0;
  int start = 0;  // 0 <= start <= level + 1

  bool empty() const { return start == level + 1; }
  bool has_inverse_tail() const { return start == 0; }
  int letter_count() const { return empty() ? 0 : level - std::max(start, 1) + 1; }

  auto operator<=>(const AFactor&) const = default;
};

/// The unique factorization of an even permutation of degree n+1 over the
/// generators a_i = s_1 s_{i+1}, one factor per level 1..n-1.
struct AWord {
  int degree = 1;
  std::vector<AFactor> factors;

  int letter_count() const;

  auto operator<=>(const AWord&) const = default;
};

/// The generator a_i = s_1 s_{i+1} as a permutation of the given degree.
/// Requires 1 <= i <= degree - 2.
Permutation a_gen(int i, int degree);

/// Value of one factor as a permutation of the given degree.
Permutation a_factor_value(const AFactor& f, int degree);

/// Unique A-word of an even permutation; throws on odd input.
AWord a_decompose(const Permutation& v);

Permutation a_recompose(const AWord& w);

/// Total letters of the A-word (a_1^{-1} counts as one letter).
long long ell_A(const Permutation& v);

/// Count of a_1 or a_1^{-1} letters in the A-word.
long long del_A(const Permutation& v);

/// Descent positions {1..degree-2}: i is a descent when b_{i+1} > b_{i+2}, or
/// b_{i+1} < b_{i+2} with every one of b_1..b_i above b_{i+2}.
PositionSet des_set_A(const Permutation& v);

/// Del_A = Del_2 - 1: the almost-left-to-right-minimum positions, shifted.
PositionSet del_set_A(const Permutation& v);

long long maj_A(const Permutation& v);

/// Sum of (n - i) over the A-descent set, degree = n+1.
long long rmaj_A(const Permutation& v);

/// The covering map restricted to even permutations; equals f_2.
Permutation restrict_f(const Permutation& v);

/// Fiber of f_q restricted to even ambient permutations; exactly half the
/// size of the full fiber.
std::vector<Permutation> g_fiber(const Permutation& base, int q);

/// Mirrors the S-word format with letters "a<j>" and "a1^-1".
std::string a_word_to_string(const AWord& w);
AWord string_to_a_word(std::string_view text);

}  // namespace permstat

#endif  // PERMSTAT_ALTERNATING_HPP
