#ifndef PERMSTAT_DISTRIBUTIONS_HPP
#define PERMSTAT_DISTRIBUTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

/// Statistics a distribution sweep can expose, one polynomial variable each.
enum class StatId {
  kInvQ,
  kEllQ,
  kRmajQ,
  kMajQ,
  kDesQ,
  kDelQ,
  kDesQOfInverse,
  kRmajQOfInverse,
};

/// Parses ids like "inv_q", "rmaj_q_of_inverse"; throws on unknown names.
StatId parse_stat_id(const std::string& name);
std::string stat_id_name(StatId id);

/// Subset of S_m a sweep ranges over.
struct FilterSpec {
  enum class Kind {
    kAll,
    kAvoidQ,            // p avoids the dashed-pattern family
    kInverseAvoidQ,     // p^{-1} avoids it
    kInvDesEquals,      // Des_q(p^{-1}) == b1
    kInvDesDelEquals,   // Des_q(p^{-1}) == b1 and Del_q(p^{-1}) == b2
  };

  Kind kind = Kind::kAll;
  PositionSet b1;
  PositionSet b2;

  static FilterSpec all() { return {}; }
  static FilterSpec avoid_q() { return {Kind::kAvoidQ, {}, {}}; }
  static FilterSpec inverse_avoid_q() { return {Kind::kInverseAvoidQ, {}, {}}; }
  static FilterSpec inv_des_equals(PositionSet b) { return {Kind::kInvDesEquals, std::move(b), {}}; }
  static FilterSpec inv_des_del_equals(PositionSet b1, PositionSet b2) {
    return {Kind::kInvDesDelEquals, std::move(b1), std::move(b2)};
  }
};

/// Thrown when a verification would enumerate beyond the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested > 0 wins; otherwise PERMSTAT_THREADS, otherwise the hardware
/// parallelism (at least 1).
int resolve_thread_count(int requested);

/// Sum over the filtered subset of S_m of the monomial
/// t1^{stat_1(p)} * ... * td^{stat_d(p)}, computed in one group sweep.
/// threads <= 0 picks the default; results are independent of thread count.
Polynomial distribution(int m, int q, const std::vector<StatId>& stats,
                        const FilterSpec& filter = FilterSpec::all(), int threads = 0);

/// q! (1+tq)(1+t+t^2 q) ... (1+t+...+t^{n-2}+t^{n-1} q), in t1.
Polynomial qmac_product(int n, int q);

/// q! (1+t1 t2 q)(1+t1+t1^2 t2 q) ... (1+t1+...+t1^{n-2}+t1^{n-1} t2 q).
Polynomial qmac2_product(int n, int q);

/// One row of a per-class comparison (fs_q / fs_q2 / q6 style checks).
struct ClassRow {
  PositionSet b1;
  PositionSet b2;
  bool has_b2 = false;
  long long size = 0;
  std::string poly_inv;
  std::string poly_rmaj;
  bool equal = false;
};

struct VerificationWitness {
  std::string context;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string theorem;
  int n = 0;
  int q = 0;
  int m = 0;
  bool pass = false;
  long long classes_checked = 0;
  std::optional<VerificationWitness> witness;
  std::vector<ClassRow> class_rows;  // filled only when requested

  std::string to_text() const;
  std::string to_json() const;
  /// Header "B1,B2,size,poly_inv,poly_rmaj,equal" plus one row per class.
  std::string class_rows_to_csv() const;
};

/// The identity checks the harness knows by name.
const std::vector<std::string>& verify_theorem_ids();

/// Runs one named identity check exactly, over S_{n+q-1} (and S_n where the
/// check transports statistics). Refuses with BudgetError when n+q-1 exceeds
/// the budget. collect_classes fills class_rows for per-class checks.
VerificationReport verify(const std::string& theorem, int n, int q, int threads = 0,
                          int budget = 9, bool collect_classes = false);

}  // namespace permstat

#endif  // PERMSTAT_DISTRIBUTIONS_HPP
