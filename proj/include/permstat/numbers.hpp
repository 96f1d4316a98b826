#ifndef PERMSTAT_NUMBERS_HPP
#define PERMSTAT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

/// Arbitrary-precision non-negative integer; all counting is exact.
using BigNat = boost::multiprecision::cpp_int;

/// Exact rational, used for the truncated Dobinski-type series.
using BigRat = boost::multiprecision::cpp_rational;

BigNat factorial(int n);

BigNat binomial(int n, int k);

/// Stirling numbers of the second kind; S(0,0) = 1, S(n,k) = 0 for k > n.
BigNat stirling2(int n, int k);

/// Signless Stirling numbers of the first kind; c(0,0) = 1, c(n,k) = 0 for k > n.
BigNat stirling1_unsigned(int n, int k);

/// q-Bell number: sum over k of q^k S(n,k). Rows are memoized per q.
BigNat bell_q(int n, int q);

/// Same value through the convolution recurrence
///   b_q(n) = q * sum_k C(n-1,k) b_q(n-k-1),  b_q(0) = 1.
BigNat bell_q_by_recurrence(int n, int q);

/// Truncated Dobinski-type series for b_q(n): the exact rational
///   (sum_{r=0}^{R} q^r r^n / r!) / (sum_{r=0}^{R} q^r / r!),
/// i.e. the partial numerator series divided by e^q truncated at the same
/// length. For R >= 6(n+q)+40 the result is within 1e-9 relative of b_q(n)
/// (n <= 10, q <= 3).
BigRat dobinski_q(int n, int q, int terms);

/// q-Stirling count of the first kind: c_q(n,k) = q^k (q-1)! c(n,k).
BigNat c_q(int n, int k, int q);

/// Number of permutations of S_m avoiding the length-(q+2) dashed pattern
/// family, via the recurrence h_q(n) = q sum_k C(n-q,k) h_q(n-k-1) with
/// h_q(n) = n! for n < q. Rows are memoized per q.
BigNat h_q(int m, int q);

/// Same value through the closed form (q-1)! b_q(m-q+1) (m! when m < q - 1).
BigNat h_q_closed_form(int m, int q);

}  // namespace permstat

#endif  // PERMSTAT_NUMBERS_HPP
