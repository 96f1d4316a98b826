#include "permstat/distributions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>
#include <type_traits>
#include <utility>

#include "permstat/covering.hpp"
#include "permstat/numbers.hpp"
#include "permstat/patterns.hpp"
#include "permstat/qstats.hpp"

namespace permstat {

namespace {

constexpr const char* kStatNames[] = {
    "inv_q", "ell_q", "rmaj_q", "maj_q", "des_q", "del_q",
    "des_q_of_inverse", "rmaj_q_of_inverse",
};

std::string set_to_string(const PositionSet& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  out << '}';
  return out.str();
}

// Splits S_m into shards by first window value and folds visit over each
// shard in lexicographic order. Shards merge in index order afterwards, so
// results do not depend on the thread count.
template <typename Acc, typename Make, typename Visit>
std::vector<Acc> sweep_shards(int m, int threads, Make make, Visit visit) {
  const int shards = m >= 2 ? m : 1;
  std::vector<Acc> accs;
  accs.reserve(static_cast<size_t>(shards));
  for (int s = 0; s < shards; ++s) accs.push_back(make());

  auto run_shard = [&](int s) {
    if (m == 1) {
      visit(accs[0], Permutation::identity(1));
      return;
    }
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(m) - 1);
    for (int v = 1; v <= m; ++v)
      if (v != s + 1) rest.push_back(v);
    std::vector<int> window(static_cast<size_t>(m));
    window[0] = s + 1;
    do {
      std::copy(rest.begin(), rest.end(), window.begin() + 1);
      visit(accs[static_cast<size_t>(s)], Permutation(window));
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  const int workers = std::clamp(threads, 1, shards);
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int s = t; s < shards; s += workers) run_shard(s);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  return accs;
}

long long stat_value(const Permutation& p, const Permutation& inv, int q, StatId id) {
  switch (id) {
    case StatId::kInvQ: return inv_q(p, q);
    case StatId::kEllQ: return ell_q(p, q);
    case StatId::kRmajQ: return rmaj_q(p, q);
    case StatId::kMajQ: return maj_q(p, q);
    case StatId::kDesQ: return des_q(p, q);
    case StatId::kDelQ: return del_q(p, q);
    case StatId::kDesQOfInverse: return des_q(inv, q);
    case StatId::kRmajQOfInverse: return rmaj_q(inv, q);
  }
  throw std::invalid_argument("unknown statistic id");
}

bool needs_inverse(const std::vector<StatId>& stats, const FilterSpec& filter) {
  if (filter.kind != FilterSpec::Kind::kAll && filter.kind != FilterSpec::Kind::kAvoidQ)
    return true;
  for (StatId id : stats)
    if (id == StatId::kDesQOfInverse || id == StatId::kRmajQOfInverse) return true;
  return false;
}

bool filter_passes(const Permutation& p, const Permutation& inv, int q,
                   const FilterSpec& filter) {
  switch (filter.kind) {
    case FilterSpec::Kind::kAll: return true;
    case FilterSpec::Kind::kAvoidQ: return avoids_q(p, q);
    case FilterSpec::Kind::kInverseAvoidQ: return avoids_q(inv, q);
    case FilterSpec::Kind::kInvDesEquals: return des_set_q(inv, q) == filter.b1;
    case FilterSpec::Kind::kInvDesDelEquals:
      return des_set_q(inv, q) == filter.b1 && del_set_q(inv, q) == filter.b2;
  }
  throw std::invalid_argument("unknown filter kind");
}

void validate_filter(const FilterSpec& filter, int m, int q) {
  auto check_range = [&](const PositionSet& s, int lo, int hi, const char* name) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < lo || s[i] > hi)
        throw std::invalid_argument(std::string(name) + " filter set out of range");
      if (i > 0 && s[i] <= s[i - 1])
        throw std::invalid_argument(std::string(name) + " filter set must be sorted strictly");
    }
  };
  if (filter.kind == FilterSpec::Kind::kInvDesEquals ||
      filter.kind == FilterSpec::Kind::kInvDesDelEquals)
    check_range(filter.b1, q, m - 1, "B1");
  if (filter.kind == FilterSpec::Kind::kInvDesDelEquals)
    check_range(filter.b2, q + 1, m, "B2");
}

}  // namespace

StatId parse_stat_id(const std::string& name) {
  for (size_t i = 0; i < std::size(kStatNames); ++i)
    if (name == kStatNames[i]) return static_cast<StatId>(i);
  throw std::invalid_argument("unknown statistic id '" + name + "'");
}

std::string stat_id_name(StatId id) {
  return kStatNames[static_cast<size_t>(id)];
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PERMSTAT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Polynomial distribution(int m, int q, const std::vector<StatId>& stats,
                        const FilterSpec& filter, int threads) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  validate_filter(filter, m, q);
  const int workers = resolve_thread_count(threads);
  const int arity = static_cast<int>(stats.size());
  const bool want_inverse = needs_inverse(stats, filter);

  auto shard_polys = sweep_shards<Polynomial>(
      m, workers, [arity] { return Polynomial(arity); },
      [&](Polynomial& acc, const Permutation& p) {
        const Permutation inv = want_inverse ? p.inverse() : p;
        if (!filter_passes(p, inv, q, filter)) return;
        std::vector<int> exponents(stats.size());
        for (size_t i = 0; i < stats.size(); ++i)
          exponents[i] = static_cast<int>(stat_value(p, inv, q, stats[i]));
        acc.add_term(std::move(exponents), 1);
      });

  Polynomial total(arity);
  for (const auto& part : shard_polys) total += part;
  return total;
}

Polynomial qmac2_product(int n, int q) {
  if (n < 1 || q < 1) throw std::invalid_argument("n and q must be positive");
  Polynomial product = Polynomial::constant(2, factorial(q));
  for (int i = 1; i <= n - 1; ++i) {
    Polynomial factor(2);
    for (int r = 0; r <= i - 1; ++r) factor.add_term({r, 0}, 1);
    factor.add_term({i, 1}, q);
    product *= factor;
  }
  return product;
}

Polynomial qmac_product(int n, int q) {
  return qmac2_product(n, q).substitute_one(2);
}

const std::vector<std::string>& verify_theorem_ids() {
  static const std::vector<std::string> ids = {
      "qmac",   "qmac2", "fs_q",  "fs_q2",     "q_rosel_1", "q_rosel_2",
      "q6",     "qs5",   "q5",    "fiber",     "nu1",       "qpro",
      "qc3",    "q_avoid", "cover1", "f_pairs",
  };
  return ids;
}

namespace {

using PolyPair = std::pair<Polynomial, Polynomial>;

VerificationReport make_report(const std::string& theorem, int n, int q) {
  VerificationReport report;
  report.theorem = theorem;
  report.n = n;
  report.q = q;
  report.m = n + q - 1;
  report.pass = true;
  return report;
}

void fail(VerificationReport& report, std::string context, std::string lhs, std::string rhs) {
  if (!report.pass) return;  // keep the first witness
  report.pass = false;
  report.witness = VerificationWitness{std::move(context), std::move(lhs), std::move(rhs)};
}

// Compares the inv_q and rmaj_q distributions per bucket of a keyed partition.
template <typename Key, typename KeyFn, typename KeepFn, typename RenderKey>
void check_bucketed_pair(VerificationReport& report, int m, int q, int threads, KeyFn key_of,
                         KeepFn keep, RenderKey render_key, bool collect_classes) {
  using Buckets = std::map<Key, PolyPair>;
  auto shards = sweep_shards<Buckets>(
      m, threads, [] { return Buckets{}; },
      [&](Buckets& acc, const Permutation& p) {
        const Permutation inv = p.inverse();
        if (!keep(p, inv)) return;
        auto& [poly_inv, poly_rmaj] = acc[key_of(p, inv)];
        poly_inv.add_term({static_cast<int>(inv_q(p, q))}, 1);
        poly_rmaj.add_term({static_cast<int>(rmaj_q(p, q))}, 1);
      });

  Buckets total;
  for (auto& shard : shards) {
    for (auto& [key, pair] : shard) {
      auto& [poly_inv, poly_rmaj] = total[key];
      poly_inv += pair.first;
      poly_rmaj += pair.second;
    }
  }

  report.classes_checked = static_cast<long long>(total.size());
  for (const auto& [key, pair] : total) {
    const bool equal = pair.first == pair.second;
    if (!equal)
      fail(report, "class " + render_key(key), pair.first.to_string(), pair.second.to_string());
    if (collect_classes) {
      ClassRow row;
      row.size = static_cast<long long>(pair.first.evaluate_at_ones().convert_to<long long>());
      row.poly_inv = pair.first.to_string();
      row.poly_rmaj = pair.second.to_string();
      row.equal = equal;
      if constexpr (std::is_same_v<Key, PositionSet>) {
        row.b1 = key;
      } else {
        row.b1 = key.first;
        row.b2 = key.second;
        row.has_b2 = true;
      }
      report.class_rows.push_back(std::move(row));
    }
  }
}

// Two global univariate or bivariate sums that must agree, with an optional
// closed-form product both must equal.
void check_global_pair(VerificationReport& report, int m, int q, int threads,
                       const std::vector<StatId>& lhs_stats,
                       const std::vector<StatId>& rhs_stats, const FilterSpec& filter,
                       const Polynomial* product, const std::string& label) {
  const Polynomial lhs = distribution(m, q, lhs_stats, filter, threads);
  const Polynomial rhs = distribution(m, q, rhs_stats, filter, threads);
  report.classes_checked = 1;
  if (lhs != rhs) {
    fail(report, label + ": statistic sums differ", lhs.to_string(), rhs.to_string());
    return;
  }
  if (product && lhs != *product)
    fail(report, label + ": sum differs from the product formula", lhs.to_string(),
         product->to_string());
}

}  // namespace

VerificationReport verify(const std::string& theorem, int n, int q, int threads, int budget,
                          bool collect_classes) {
  if (n < 1 || q < 1) throw std::invalid_argument("n and q must be positive");
  const auto& ids = verify_theorem_ids();
  if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
    throw std::invalid_argument("unknown theorem id '" + theorem + "'");
  const int m = n + q - 1;
  if (m > budget)
    throw BudgetError("m = " + std::to_string(m) + " exceeds enumeration budget " +
                      std::to_string(budget));
  const int workers = resolve_thread_count(threads);

  VerificationReport report = make_report(theorem, n, q);

  if (theorem == "qmac") {
    const Polynomial product = qmac_product(n, q);
    check_global_pair(report, m, q, workers, {StatId::kInvQ}, {StatId::kRmajQ},
                      FilterSpec::all(), &product, "S_m");
  } else if (theorem == "qmac2") {
    const Polynomial product = qmac2_product(n, q);
    check_global_pair(report, m, q, workers, {StatId::kInvQ, StatId::kDelQ},
                      {StatId::kRmajQ, StatId::kDelQ}, FilterSpec::all(), &product, "S_m");
  } else if (theorem == "fs_q") {
    check_bucketed_pair<PositionSet>(
        report, m, q, workers,
        [q](const Permutation&, const Permutation& inv) { return des_set_q(inv, q); },
        [](const Permutation&, const Permutation&) { return true; },
        [](const PositionSet& key) { return "Des=" + set_to_string(key); }, collect_classes);
  } else if (theorem == "fs_q2") {
    using Key = std::pair<PositionSet, PositionSet>;
    check_bucketed_pair<Key>(
        report, m, q, workers,
        [q](const Permutation&, const Permutation& inv) {
          return Key{des_set_q(inv, q), del_set_q(inv, q)};
        },
        [](const Permutation&, const Permutation&) { return true; },
        [](const Key& key) {
          return "Des=" + set_to_string(key.first) + " Del=" + set_to_string(key.second);
        },
        collect_classes);
  } else if (theorem == "q6") {
    check_bucketed_pair<PositionSet>(
        report, m, q, workers,
        [q](const Permutation&, const Permutation& inv) { return des_set_q(inv, q); },
        [q](const Permutation&, const Permutation& inv) { return avoids_q(inv, q); },
        [](const PositionSet& key) { return "Des=" + set_to_string(key); }, collect_classes);
  } else if (theorem == "qs5") {
    check_global_pair(report, m, q, workers, {StatId::kInvQ, StatId::kDesQ},
                      {StatId::kRmajQ, StatId::kDesQ}, FilterSpec::inverse_avoid_q(), nullptr,
                      "inverse-avoiders");
  } else if (theorem == "q5") {
    check_global_pair(report, m, q, workers, {StatId::kInvQ}, {StatId::kRmajQ},
                      FilterSpec::inverse_avoid_q(), nullptr, "inverse-avoiders");
  } else if (theorem == "q_rosel_1") {
    check_global_pair(report, m, q, workers, {StatId::kInvQ, StatId::kDesQOfInverse},
                      {StatId::kRmajQ, StatId::kDesQOfInverse}, FilterSpec::all(), nullptr,
                      "S_m");
  } else if (theorem == "q_rosel_2") {
    check_global_pair(report, m, q, workers, {StatId::kInvQ, StatId::kRmajQOfInverse},
                      {StatId::kRmajQ, StatId::kRmajQOfInverse}, FilterSpec::all(), nullptr,
                      "S_m");
  } else if (theorem == "fiber") {
    using Counts = std::map<std::vector<int>, long long>;
    auto shards = sweep_shards<Counts>(
        m, workers, [] { return Counts{}; },
        [&](Counts& acc, const Permutation& p) { ++acc[f_q(p, q).window()]; });
    Counts totals;
    for (auto& shard : shards)
      for (auto& [key, count] : shard) totals[key] += count;
    for_each_permutation(n, [&](const Permutation& base) {
      ++report.classes_checked;
      const BigNat expected =
          factorial(q) *
          boost::multiprecision::pow(BigNat(q), static_cast<unsigned>(del_q(base, 1)));
      auto it = totals.find(base.window());
      const long long actual = it == totals.end() ? 0 : it->second;
      if (BigNat(actual) != expected)
        fail(report, "fiber of " + base.to_string(), std::to_string(actual),
             expected.str());
    });
  } else if (theorem == "nu1") {
    const BigNat brute = count_avoiders(m, q);
    const BigNat closed = h_q_closed_form(m, q);
    const BigNat recurrence = h_q(m, q);
    report.classes_checked = 1;
    if (brute != closed)
      fail(report, "avoider count vs (q-1)! b_q(n)", brute.str(), closed.str());
    else if (brute != recurrence)
      fail(report, "avoider count vs recurrence", brute.str(), recurrence.str());
  } else if (theorem == "qpro") {
    using Counts = std::map<long long, long long>;
    auto shards = sweep_shards<Counts>(
        m, workers, [] { return Counts{}; },
        [&](Counts& acc, const Permutation& p) {
          if (avoids_q(p, q)) ++acc[del_q(p, q)];
        });
    Counts totals;
    for (auto& shard : shards)
      for (auto& [key, count] : shard) totals[key] += count;
    for (int k = 1; k <= n; ++k) {
      ++report.classes_checked;
      const BigNat expected = factorial(q - 1) *
                              boost::multiprecision::pow(BigNat(q), static_cast<unsigned>(k)) *
                              stirling2(n, k);
      auto it = totals.find(k - 1);
      const long long actual = it == totals.end() ? 0 : it->second;
      if (BigNat(actual) != expected)
        fail(report, "avoiders with del_q = " + std::to_string(k - 1),
             std::to_string(actual), expected.str());
    }
  } else if (theorem == "qc3") {
    using Counts = std::map<long long, long long>;
    auto shards = sweep_shards<Counts>(
        m, workers, [] { return Counts{}; },
        [&](Counts& acc, const Permutation& p) { ++acc[del_q(p, q)]; });
    Counts totals;
    for (auto& shard : shards)
      for (auto& [key, count] : shard) totals[key] += count;
    for (int k = 1; k <= n; ++k) {
      ++report.classes_checked;
      const BigNat expected = c_q(n, k, q);
      auto it = totals.find(k - 1);
      const long long actual = it == totals.end() ? 0 : it->second;
      if (BigNat(actual) != expected)
        fail(report, "permutations with del_q = " + std::to_string(k - 1),
             std::to_string(actual), expected.str());
    }
  } else if (theorem == "q_avoid") {
    using FirstFail = std::optional<Permutation>;
    auto shards = sweep_shards<FirstFail>(
        m, workers, [] { return FirstFail{}; },
        [&](FirstFail& acc, const Permutation& p) {
          if (acc) return;
          PositionSet shifted;
          for (int i : del_set_q(p, q)) shifted.push_back(i - 1);
          const bool by_sets = shifted == des_set_q(p, q);
          if ((!contains_pat_q(p, q).has_value()) != by_sets) acc = p;
        });
    report.classes_checked = factorial(m).convert_to<long long>();
    for (const auto& first : shards)
      if (first)
        fail(report, "pattern criterion vs Del-1 == Des at " + first->to_string(),
             "containment scan", "set comparison");
  } else if (theorem == "cover1") {
    struct FirstFail {
      std::optional<Permutation> p;
      std::string detail;
    };
    auto shards = sweep_shards<FirstFail>(
        m, workers, [] { return FirstFail{}; },
        [&](FirstFail& acc, const Permutation& p) {
          if (acc.p) return;
          const Permutation image = f_q(p, q);
          auto shift = [q](PositionSet s) {
            for (int& i : s) i -= q - 1;
            return s;
          };
          if (shift(del_set_q(p, q)) != del_set_q(image, 1))
            acc = {p, "Del_q - (q-1) != Del_1 of image"};
          else if (shift(des_set_q(p, q)) != des_set_q(image, 1))
            acc = {p, "Des_q - (q-1) != Des_1 of image"};
          else if (inv_q(p, q) != inv_q(image, 1))
            acc = {p, "inv_q != inv_1 of image"};
          else if (rmaj_q(p, q) != rmaj_q(image, 1))
            acc = {p, "rmaj_q != rmaj_1 of image"};
        });
    report.classes_checked = factorial(m).convert_to<long long>();
    for (const auto& first : shards)
      if (first.p) fail(report, "transport at " + first.p->to_string(), first.detail, "");
  } else if (theorem == "f_pairs") {
    const Polynomial lifted =
        distribution(m, q, {StatId::kInvQ, StatId::kDelQ}, FilterSpec::all(), workers);
    Polynomial base = distribution(n, 1, {StatId::kInvQ, StatId::kDelQ}, FilterSpec::all(),
                                   workers);
    base *= factorial(q);
    report.classes_checked = 1;
    if (lifted != base)
      fail(report, "sum over S_m vs q! times sum over S_n", lifted.to_string(),
           base.to_string());
  }

  return report;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << " theorem=" << theorem << " n=" << n << " q=" << q
      << " m=" << m << " classes=" << classes_checked;
  if (witness) {
    out << "\n  witness: " << witness->context;
    if (!witness->lhs.empty()) out << "\n  lhs: " << witness->lhs;
    if (!witness->rhs.empty()) out << "\n  rhs: " << witness->rhs;
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  std::ostringstream out;
  out << "{\"theorem\":\"" << theorem << "\",\"n\":" << n << ",\"q\":" << q << ",\"m\":" << m
      << ",\"pass\":" << (pass ? "true" : "false") << ",\"classes\":" << classes_checked
      << ",\"witness\":";
  if (witness) {
    out << "{\"context\":\"" << witness->context << "\",\"lhs\":\"" << witness->lhs
        << "\",\"rhs\":\"" << witness->rhs << "\"}";
  } else {
    out << "null";
  }
  out << '}';
  return out.str();
}

std::string VerificationReport::class_rows_to_csv() const {
  std::ostringstream out;
  out << "B1,B2,size,poly_inv,poly_rmaj,equal\n";
  for (const auto& row : class_rows) {
    out << set_to_string(row.b1) << ',' << (row.has_b2 ? set_to_string(row.b2) : "") << ','
        << row.size << ',' << row.poly_inv << ',' << row.poly_rmaj << ','
        << (row.equal ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace permstat
