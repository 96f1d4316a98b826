#include "permstat/numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace permstat {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

void require_q(int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
}

BigNat pow_int(int base, int exp) {
  BigNat out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Row cache for a family of integer sequences indexed by q, grown on demand.
// Construction of a row extension happens under the lock; lookups afterwards
// copy the value out, so callers never hold references into the cache.
class RowCache {
 public:
  template <typename Extend>
  BigNat get(int q, int n, Extend extend) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& row = rows_[q];
    while (static_cast<int>(row.size()) <= n) extend(row);
    return row[static_cast<size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<BigNat>> rows_;
};

}  // namespace

BigNat factorial(int n) {
  require_nonnegative(n, "n");
  BigNat out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigNat binomial(int n, int k) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigNat out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigNat stirling2(int n, int k) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return 0;
  // triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)
  std::vector<BigNat> row(1, BigNat(1));  // row for 0
  for (int i = 1; i <= n; ++i) {
    std::vector<BigNat> next(static_cast<size_t>(i) + 1, BigNat(0));
    for (int j = 1; j <= i; ++j) {
      next[static_cast<size_t>(j)] = j * (j < i ? row[static_cast<size_t>(j)] : BigNat(0)) +
                                     row[static_cast<size_t>(j) - 1];
    }
    next[0] = 0;
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

BigNat stirling1_unsigned(int n, int k) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return 0;
  // triangle recurrence c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
  std::vector<BigNat> row(1, BigNat(1));
  for (int i = 1; i <= n; ++i) {
    std::vector<BigNat> next(static_cast<size_t>(i) + 1, BigNat(0));
    for (int j = 1; j <= i; ++j) {
      next[static_cast<size_t>(j)] =
          BigNat(i - 1) * (j < i ? row[static_cast<size_t>(j)] : BigNat(0)) +
          row[static_cast<size_t>(j) - 1];
    }
    next[0] = 0;
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

BigNat bell_q(int n, int q) {
  require_nonnegative(n, "n");
  require_q(q);
  static RowCache cache;
  return cache.get(q, n, [q](std::vector<BigNat>& row) {
    const int i = static_cast<int>(row.size());
    BigNat sum = 0;
    for (int k = 0; k <= i; ++k) sum += pow_int(q, k) * stirling2(i, k);
    row.push_back(sum);
  });
}

BigNat bell_q_by_recurrence(int n, int q) {
  require_nonnegative(n, "n");
  require_q(q);
  std::vector<BigNat> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (int i = 1; i <= n; ++i) {
    BigNat sum = 0;
    for (int k = 0; k <= i - 1; ++k) sum += binomial(i - 1, k) * b[static_cast<size_t>(i - k - 1)];
    b[static_cast<size_t>(i)] = q * sum;
  }
  return b[static_cast<size_t>(n)];
}

BigRat dobinski_q(int n, int q, int terms) {
  require_nonnegative(n, "n");
  require_q(q);
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  BigRat numerator = 0;
  BigRat exp_q = 0;
  BigNat r_factorial = 1;
  BigNat q_power = 1;
  for (int r = 0; r <= terms; ++r) {
    if (r > 0) {
      r_factorial *= r;
      q_power *= q;
    }
    const BigRat base(q_power, r_factorial);
    numerator += base * pow_int(r, n);  // 0^0 = 1
    exp_q += base;
  }
  return numerator / exp_q;
}

BigNat c_q(int n, int k, int q) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("c_q requires 1 <= k <= n");
  require_q(q);
  return pow_int(q, k) * factorial(q - 1) * stirling1_unsigned(n, k);
}

BigNat h_q(int m, int q) {
  require_nonnegative(m, "m");
  require_q(q);
  static RowCache cache;
  return cache.get(q, m, [q](std::vector<BigNat>& row) {
    const int n = static_cast<int>(row.size());
    if (n < q) {
      row.push_back(factorial(n));
      return;
    }
    BigNat sum = 0;
    for (int k = 0; k <= n - q; ++k)
      sum += binomial(n - q, k) * row[static_cast<size_t>(n - k - 1)];
    row.push_back(q * sum);
  });
}

BigNat h_q_closed_form(int m, int q) {
  require_nonnegative(m, "m");
  require_q(q);
  if (m < q - 1) return factorial(m);
  return factorial(q - 1) * bell_q(m - q + 1, q);
}

}  // namespace permstat
