// permstat: batch CLI over the q-statistics library. Machine-readable output,
// deterministic for identical invocations. Exit codes: 0 success / identity
// holds, 1 identity fails, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permstat/alternating.hpp"
#include "permstat/canonical.hpp"
#include "permstat/covering.hpp"
#include "permstat/distributions.hpp"
#include "permstat/numbers.hpp"
#include "permstat/patterns.hpp"
#include "permstat/qstats.hpp"

namespace {

using namespace permstat;

std::vector<int> parse_position_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

struct DistOptions {
  int m = 1;
  int q = 1;
  std::string stats = "inv_q";
  std::string filter = "all";
  std::string b1;
  std::string b2;
  std::string format = "text";
};

int run_dist(const DistOptions& opt, int threads) {
  std::vector<StatId> ids;
  std::istringstream in(opt.stats);
  std::string name;
  while (std::getline(in, name, ','))
    if (!name.empty()) ids.push_back(parse_stat_id(name));

  FilterSpec filter;
  if (opt.filter == "all")
    filter = FilterSpec::all();
  else if (opt.filter == "avoid_q")
    filter = FilterSpec::avoid_q();
  else if (opt.filter == "inverse_avoid_q")
    filter = FilterSpec::inverse_avoid_q();
  else if (opt.filter == "inv_des_equals")
    filter = FilterSpec::inv_des_equals(parse_position_list(opt.b1));
  else if (opt.filter == "inv_des_del_equals")
    filter = FilterSpec::inv_des_del_equals(parse_position_list(opt.b1),
                                            parse_position_list(opt.b2));
  else
    throw CLI::ValidationError("--filter", "unknown filter '" + opt.filter + "'");

  const Polynomial poly = distribution(opt.m, opt.q, ids, filter, threads);
  if (opt.format == "json") {
    std::cout << poly.to_json() << '\n';
  } else if (opt.format == "csv") {
    std::cout << "exp,coef\n";
    for (const auto& [exp, coef] : poly.terms()) {
      for (size_t i = 0; i < exp.size(); ++i) std::cout << (i ? " " : "") << exp[i];
      std::cout << ',' << coef << '\n';
    }
  } else {
    std::cout << poly.to_string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-statistics on symmetric groups"};
  app.require_subcommand(1);

  int threads = 0;  // 0: PERMSTAT_THREADS env, then hardware parallelism
  int budget = 9;
  app.add_option("--threads", threads, "Worker threads for group sweeps");
  app.add_option("--budget", budget, "Maximum degree enumeration budget");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "All q-statistics of one permutation as JSON");
  std::string stats_perm;
  int stats_q = 1;
  stats_cmd->add_option("perm", stats_perm, "window, e.g. \"7 8 6 5 2 9 4 1 3\"")->required();
  stats_cmd->add_option("--q", stats_q, "statistic parameter q");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Canonical word of a permutation");
  std::string dec_perm;
  std::string dec_group = "s";
  dec_cmd->add_option("perm", dec_perm)->required();
  dec_cmd->add_option("--group", dec_group, "s (symmetric) or a (alternating)");

  // dist
  auto* dist_cmd = app.add_subcommand("dist", "Joint distribution polynomial over S_m");
  DistOptions dist_opt;
  dist_cmd->add_option("--m", dist_opt.m, "degree")->required();
  dist_cmd->add_option("--q", dist_opt.q, "statistic parameter q");
  dist_cmd->add_option("--stats", dist_opt.stats, "comma list, e.g. inv_q,del_q");
  dist_cmd->add_option("--filter", dist_opt.filter,
                       "all|avoid_q|inverse_avoid_q|inv_des_equals|inv_des_del_equals");
  dist_cmd->add_option("--B1", dist_opt.b1, "comma list for inv_des filters");
  dist_cmd->add_option("--B2", dist_opt.b2, "comma list for inv_des_del_equals");
  dist_cmd->add_option("--format", dist_opt.format, "text|json|csv");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check one identity exhaustively");
  std::string verify_theorem;
  int verify_n = 1, verify_q = 1;
  std::string verify_format = "text";
  verify_cmd->add_option("--theorem", verify_theorem)->required();
  verify_cmd->add_option("--n", verify_n)->required();
  verify_cmd->add_option("--q", verify_q)->required();
  verify_cmd->add_option("--format", verify_format, "text|json|csv");

  // numbers
  auto* num_cmd = app.add_subcommand("numbers", "Exact counting sequences");
  std::string num_kind;
  int num_n = 0, num_q = 1;
  int num_k = -1;
  num_cmd->add_option("--kind", num_kind, "bellq|stirling1|stirling2|cq|h")->required();
  num_cmd->add_option("--n", num_n)->required();
  num_cmd->add_option("--k", num_k, "column (row output when omitted)");
  num_cmd->add_option("--q", num_q);

  // map
  auto* map_cmd = app.add_subcommand("map", "Image of a permutation under f_q");
  std::string map_perm;
  int map_q = 1;
  std::string map_format = "text";
  map_cmd->add_option("perm", map_perm)->required();
  map_cmd->add_option("--q", map_q);
  map_cmd->add_option("--format", map_format, "text|json");

  // fiber
  auto* fiber_cmd = app.add_subcommand("fiber", "All f_q preimages of a permutation");
  std::string fiber_perm;
  int fiber_q = 1;
  fiber_cmd->add_option("perm", fiber_perm)->required();
  fiber_cmd->add_option("--q", fiber_q);

  // avoid
  auto* avoid_cmd = app.add_subcommand("avoid", "Dashed-pattern avoidance of one permutation");
  std::string avoid_perm;
  int avoid_q = 1;
  avoid_cmd->add_option("perm", avoid_perm)->required();
  avoid_cmd->add_option("--q", avoid_q);

  // count
  auto* count_cmd = app.add_subcommand("count", "Avoider counts h_q as CSV rows");
  int count_q = 1, count_max_m = 8;
  count_cmd->add_option("--q", count_q);
  count_cmd->add_option("--max-m", count_max_m, "emit rows for m = 0..max");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats_cmd) {
      std::cout << stat_record(Permutation::parse(stats_perm), stats_q).to_json() << '\n';
    } else if (*dec_cmd) {
      const Permutation p = Permutation::parse(dec_perm);
      if (dec_group == "s")
        std::cout << word_to_string(decompose(p)) << '\n';
      else if (dec_group == "a")
        std::cout << a_word_to_string(a_decompose(p)) << '\n';
      else
        throw std::invalid_argument("--group must be s or a");
    } else if (*dist_cmd) {
      if (dist_opt.m > budget)
        throw BudgetError("m = " + std::to_string(dist_opt.m) + " exceeds enumeration budget " +
                          std::to_string(budget));
      return run_dist(dist_opt, threads);
    } else if (*verify_cmd) {
      const bool want_classes = verify_format == "csv";
      const VerificationReport report =
          verify(verify_theorem, verify_n, verify_q, threads, budget, want_classes);
      if (verify_format == "json")
        std::cout << report.to_json() << '\n';
      else if (verify_format == "csv")
        std::cout << report.class_rows_to_csv();
      else
        std::cout << report.to_text() << '\n';
      return report.pass ? 0 : 1;
    } else if (*num_cmd) {
      if (num_kind == "bellq") {
        std::cout << bell_q(num_n, num_q) << '\n';
      } else if (num_kind == "h") {
        std::cout << h_q(num_n, num_q) << '\n';
      } else if (num_kind == "stirling1" || num_kind == "stirling2" || num_kind == "cq") {
        auto value = [&](int k) {
          if (num_kind == "stirling1") return stirling1_unsigned(num_n, k);
          if (num_kind == "stirling2") return stirling2(num_n, k);
          return c_q(num_n, k, num_q);
        };
        if (num_k >= 0) {
          std::cout << value(num_k) << '\n';
        } else {
          std::cout << "n,k,value\n";
          const int k_lo = num_kind == "cq" ? 1 : 0;
          for (int k = k_lo; k <= num_n; ++k)
            std::cout << num_n << ',' << k << ',' << value(k) << '\n';
        }
      } else {
        throw std::invalid_argument("--kind must be bellq|stirling1|stirling2|cq|h");
      }
    } else if (*map_cmd) {
      const Permutation image = f_q(Permutation::parse(map_perm), map_q);
      if (map_format == "json")
        std::cout << "[\"" << image.to_string() << "\"]\n";
      else
        std::cout << image.to_string() << '\n';
    } else if (*fiber_cmd) {
      const FiberIndex index = fiber(Permutation::parse(fiber_perm), fiber_q);
      std::cout << '[';
      for (size_t i = 0; i < index.members.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << '"' << index.members[i].to_string() << '"';
      }
      std::cout << "]\n";
    } else if (*avoid_cmd) {
      const Permutation p = Permutation::parse(avoid_perm);
      const auto witness = contains_pat_q(p, avoid_q);
      if (witness)
        std::cout << "{\"avoids\":false,\"witness\":" << witness->to_json() << "}\n";
      else
        std::cout << "{\"avoids\":true}\n";
    } else if (*count_cmd) {
      std::cout << "m,q,h_q\n";
      for (int m = 0; m <= count_max_m; ++m)
        std::cout << m << ',' << count_q << ',' << h_q(m, count_q) << '\n';
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
