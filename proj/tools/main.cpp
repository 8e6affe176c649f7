// Command line front end: construct and analyze cyclic LRC codes, evaluate
// bounds, and re-derive the published tables as pass/fail reports.
//
// Exit codes: 0 success / all-pass, 1 reproduction mismatch or internal
// error, 2 usage error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclrc/report.hpp"
#include "cyclrc/reproduce.hpp"

namespace {

using cyclrc::linalg::SearchLimits;

std::vector<std::uint32_t> parse_zeros(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::istringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(cell)));
  }
  return out;
}

struct CommonFlags {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t budget = 0;  // 0 keeps the default
  std::string kq_table;

  SearchLimits limits() const {
    SearchLimits lim;
    lim.threads = threads;
    if (budget) lim.enum_budget = budget;
    return lim;
  }
  std::optional<cyclrc::bounds::KqTable> load_table() const {
    if (kq_table.empty()) return std::nullopt;
    return cyclrc::bounds::KqTable::load_csv(kq_table);
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json, "machine-readable JSON output");
  cmd->add_option("--threads", flags.threads, "worker cap for exhaustive searches");
  cmd->add_option("--budget", flags.budget, "enumeration budget (codewords)");
  cmd->add_option("--kq-table", flags.kq_table, "CSV of known k_q(n, d) values (q,n,d,k)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic LRC codes: construction, locality analysis and bounds"};
  app.require_subcommand(1);

  // analyze
  auto* an = app.add_subcommand("analyze", "analyze the cyclic code with the given zeros");
  std::uint64_t an_q = 0, an_n = 0;
  std::string an_zeros, an_locator;
  CommonFlags an_flags;
  an->add_option("--q", an_q, "symbol field order")->required();
  an->add_option("--n", an_n, "code length")->required();
  an->add_option("--zeros", an_zeros, "comma separated zero exponents (may be empty)")->required();
  an->add_option("--locator", an_locator, "locator field as p^m; must match the inferred field");
  add_common(an, an_flags);

  // construct rs-like | thm31
  auto* co = app.add_subcommand("construct", "build an optimal cyclic LRC code");
  co->require_subcommand(1);
  std::uint64_t c_q = 0, c_n = 0, c_k = 0, c_r = 0, c_l = 0, c_b = 1;
  std::int64_t c_j = -1;
  bool c_verify = false;
  CommonFlags co_flags;
  auto* rs = co->add_subcommand("rs-like", "Reed-Solomon-like evaluation construction");
  rs->add_option("--q", c_q)->required();
  rs->add_option("--n", c_n)->required();
  rs->add_option("--k", c_k)->required();
  rs->add_option("--r", c_r)->required();
  rs->add_flag("--verify", c_verify, "brute-force the distance and the locality");
  add_common(rs, co_flags);
  auto* th = co->add_subcommand("thm31", "general defining-set construction");
  th->add_option("--q", c_q)->required();
  th->add_option("--n", c_n)->required();
  th->add_option("--k", c_k)->required();
  th->add_option("--r", c_r)->required();
  th->add_option("--l", c_l, "coset offset, 0 <= l <= r");
  th->add_option("--b", c_b, "progression step, gcd(b, n) = 1");
  th->add_option("--j", c_j, "progression start, j = l mod (r+1); defaults to l");
  th->add_flag("--verify", c_verify, "brute-force the distance and the locality");
  add_common(th, co_flags);

  // bounds
  auto* bo = app.add_subcommand("bounds", "evaluate upper bounds for (q, n, d, r)");
  std::uint64_t b_q = 0, b_n = 0, b_d = 0, b_r = 0;
  bool b_csv = false;
  CommonFlags bo_flags;
  bo->add_option("--q", b_q)->required();
  bo->add_option("--n", b_n)->required();
  bo->add_option("--d", b_d)->required();
  bo->add_option("--r", b_r)->required();
  bo->add_flag("--csv", b_csv, "CSV output for bound sweeps");
  add_common(bo, bo_flags);

  // reproduce
  auto* re = app.add_subcommand("reproduce", "recompute the published tables and examples");
  std::string re_target;
  std::string re_fixture;
  CommonFlags re_flags;
  re->add_option("target", re_target, "table1 | examples | all")->required();
  re->add_option("--fixture", re_fixture, "JSON file overriding the expected values");
  add_common(re, re_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) {
      cyclrc::report::AnalyzeOptions opts;
      opts.q = an_q;
      opts.n = an_n;
      opts.zeros = parse_zeros(an_zeros);
      if (!an_locator.empty()) opts.locator = an_locator;
      opts.limits = an_flags.limits();
      auto table = an_flags.load_table();
      if (table) opts.kq_table = &*table;
      auto rep = cyclrc::report::analyze(opts);
      if (an_flags.json)
        std::cout << cyclrc::report::to_json(rep).dump(2) << "\n";
      else
        std::cout << cyclrc::report::to_text(rep);
      return 0;
    }

    if (co->parsed()) {
      std::vector<std::uint32_t> zeros;
      if (rs->parsed()) {
        auto built = cyclrc::lrc::rs_like_construct(c_q, c_n, c_k, c_r, c_verify,
                                                    co_flags.limits());
        zeros = built.cyclic_code.seeds;
      } else {
        std::optional<std::uint64_t> j;
        if (c_j >= 0) j = static_cast<std::uint64_t>(c_j);
        auto built = cyclrc::lrc::thm31_construct(c_q, c_n, c_k, c_r, c_l, c_b, j, c_verify,
                                                  co_flags.limits());
        zeros = built.seeds;
      }
      cyclrc::report::AnalyzeOptions opts;
      opts.q = c_q;
      opts.n = c_n;
      opts.zeros = zeros;
      opts.limits = co_flags.limits();
      auto table = co_flags.load_table();
      if (table) opts.kq_table = &*table;
      auto rep = cyclrc::report::analyze(opts);
      if (co_flags.json) {
        auto j = cyclrc::report::to_json(rep);
        j["construction"] = {{"method", rs->parsed() ? "rs-like" : "thm31"},
                             {"verified", c_verify}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (rs->parsed() ? "rs-like construction" : "theorem 3.1 construction")
                  << (c_verify ? " (verified: distance optimal, locality exact)" : "") << "\n";
        std::cout << cyclrc::report::to_text(rep);
      }
      return 0;
    }

    if (bo->parsed()) {
      auto table = bo_flags.load_table();
      auto rep = cyclrc::report::evaluate_bounds(b_q, b_n, b_d, b_r, table ? &*table : nullptr);
      if (b_csv)
        std::cout << cyclrc::report::to_csv(rep);
      else if (bo_flags.json)
        std::cout << cyclrc::report::to_json(rep).dump(2) << "\n";
      else
        std::cout << cyclrc::report::to_text(rep);
      return 0;
    }

    if (re->parsed()) {
      nlohmann::json fixture;
      if (re_fixture.empty()) {
        fixture = cyclrc::report::default_fixture();
      } else {
        std::ifstream in(re_fixture);
        if (!in) throw std::invalid_argument("reproduce: cannot open fixture " + re_fixture);
        in >> fixture;
      }
      auto results = cyclrc::report::reproduce(re_target, fixture, re_flags.limits());
      if (re_flags.json)
        std::cout << cyclrc::report::to_json(results).dump(2) << "\n";
      else
        std::cout << cyclrc::report::to_text(results);
      for (const auto& r : results)
        if (!r.pass()) return 1;
      return 0;
    }
  } catch (const cyclrc::linalg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
