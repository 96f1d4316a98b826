#ifndef PERMSTAT_POLYNOMIAL_HPP
#define PERMSTAT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "permstat/numbers.hpp"

namespace permstat {

/// Graded-lex order on exponent vectors: lower total degree first, ties broken
/// by the lexicographically larger vector first (so t1 sorts before t2).
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial in variables t1..td with BigNat
/// coefficients. Zero coefficients are never stored; equality is term-set
/// equality.
class Polynomial {
 public:
  using TermMap = std::map<std::vector<int>, BigNat, GradedLexLess>;

  explicit Polynomial(int arity = 1) : arity_(arity) {}

  static Polynomial constant(int arity, BigNat value);

  /// The monomial t<var>^1 (var is 1-indexed).
  static Polynomial variable(int arity, int var);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exponents, const BigNat& coefficient);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigNat& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const BigNat& scalar) { return lhs *= scalar; }

  bool operator==(const Polynomial& rhs) const = default;

  /// Polynomial with the given variable set to 1 (arity drops by one).
  Polynomial substitute_one(int var) const;

  /// Sum of all coefficients.
  BigNat evaluate_at_ones() const;

  /// Terms sorted graded-lex, e.g. "2 + 4*t1*t2"; "0" for the zero polynomial.
  std::string to_string() const;

  /// JSON list of {"exp": [...], "coef": "<decimal>"} in graded-lex order.
  std::string to_json() const;

 private:
  int arity_;
  TermMap terms_;
};

}  // namespace permstat

#endif  // PERMSTAT_POLYNOMIAL_HPP
