#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// Sorted list of 1-indexed positions.
using PositionSet = std::vector<int>;

/// A permutation of {1..m} in one-line (window) notation.
///
/// Values and positions are 1-indexed throughout the public API.
/// Instances are immutable after construction and safe to share across
/// threads.
class Permutation {
 public:
  /// Builds the identity of the given degree (degree >= 1).
  static Permutation identity(int degree);

  /// The adjacent transposition (i, i+1) as an element of S_degree.
  static Permutation transposition(int i, int degree);

  /// Parses space- or comma-separated 1-indexed values, e.g. "7 8 6 5 2 9 4 1 3".
  /// Throws std::invalid_argument unless the input is a rearrangement of {1..m}.
  static Permutation parse(std::string_view text);

  /// Takes ownership of a window; throws unless it is a rearrangement of {1..m}.
  explicit Permutation(std::vector<int> window);

  int degree() const { return static_cast<int>(window_.size()); }

  /// Image of position i (1-indexed).
  int operator()(int i) const { return window_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& window() const { return window_; }

  bool is_identity() const;

  /// Parity of the inversion number.
  bool is_even() const { return inversion_count() % 2 == 0; }

  /// Composition with the right factor acting first: (f*g)(i) = f(g(i)).
  Permutation compose(const Permutation& rhs) const;

  Permutation inverse() const;

  /// {i | 1 <= i <= m-1, p(i) > p(i+1)}.
  PositionSet descent_set() const;

  /// #{(i,j) | i < j, p(i) > p(j)}.
  long long inversion_count() const;

  /// Space-separated window values.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

inline Permutation compose(const Permutation& f, const Permutation& g) {
  return f.compose(g);
}

/// Calls fn with every element of S_m in lexicographic window order.
template <typename Fn>
void for_each_permutation(int m, Fn&& fn) {
  std::vector<int> window(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) window[static_cast<size_t>(i)] = i + 1;
  do {
    fn(Permutation(window));
  } while (std::next_permutation(window.begin(), window.end()));
}

}  // namespace permstat

#endif  // PERMSTAT_PERMUTATION_HPP
