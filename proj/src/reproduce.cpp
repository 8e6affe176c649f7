#include "cyclrc/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclrc/bounds.hpp"
#include "cyclrc/cyclic.hpp"
#include "cyclrc/lrc.hpp"

namespace cyclrc::report {

using nlohmann::json;

bool ReproductionResult::pass() const {
  for (const auto& f : fields)
    if (!f.pass) return false;
  return true;
}

json default_fixture() {
  return json::parse(R"({
  "table1": [
    {"n": 35, "q": 2, "zeros": [1, 15], "k": 20, "d": 3, "z": 3, "r": 3, "w": 4,
     "dual_set": [0, 1, 7, 15], "d_dual": 4, "sh": 25, "lp": 29, "locator": "2^12"},
    {"n": 45, "q": 2, "zeros": [1], "k": 33, "d": 3, "z": 4, "r": 7, "w": 8,
     "dual_set": [0, 1, 3, 5, 9, 15, 21], "d_dual": 8, "sh": 37, "lp": 39, "locator": "2^12"},
    {"n": 27, "q": 2, "zeros": [1, 9], "k": 7, "d": 6, "z": 2, "r": 1, "w": 2,
     "dual_set": [0, 3], "d_dual": 2, "locator": "2^18"},
    {"n": 63, "q": 2, "zeros": [1, 9, 11, 15, 23], "k": 36, "d": 3, "z": 3, "r": 3, "w": 4,
     "dual_set": [0, 1, 7, 9, 11, 15, 21, 23], "d_dual": 4, "locator": "2^6"}
  ],
  "example1": {"n": 45, "zeros": [0, 3, 5, 9], "k": 30, "d": 4, "dual_k": 15, "dual_d": 9,
               "dual_set": [1, 3, 7, 15], "r": 8, "sh": 36, "lp_log2": 38.48, "lp_k": 38},
  "example2": {"n": 21, "zeros": [0, 1, 7], "k": 12, "d": 4, "dual_k": 9, "dual_d": 6,
               "dual_set": [1, 3, 9], "r": 5, "sh": 14, "lp_k": 15},
  "example3": {"n": 80, "zeros": [1, 2, 41], "k": 68, "t": 40, "v_n": 40, "v_k": 4,
               "v_weights": {"24": 40, "30": 40}, "per_coordinate": 24, "set_size": 23,
               "set_count": 24, "d_dual_bound": 24},
  "example4": {"n": 63, "zeros": [3, 27], "k": 54, "d": 2, "v_copies": 3,
               "v_block": [7, 3, 4], "v_min_weight": 12, "dual_k": 9, "dual_d": 12, "r": 11},
  "remark2": {"n": 63, "divisors": [7, 9], "set_sizes": [9, 7]}
})");
}

namespace {

std::string dump(const json& v) { return v.dump(); }

void check(ReproductionResult& res, const std::string& name, const json& expected,
           const json& computed) {
  FieldCheck f;
  f.name = name;
  f.expected = dump(expected);
  f.computed = dump(computed);
  f.pass = expected == computed;
  res.fields.push_back(std::move(f));
}

void check_close(ReproductionResult& res, const std::string& name, double expected,
                 double computed, double tol) {
  FieldCheck f;
  f.name = name;
  f.expected = dump(expected);
  f.computed = dump(computed);
  f.pass = std::fabs(expected - computed) <= tol;
  res.fields.push_back(std::move(f));
}

ReproductionResult run_table1_row(const json& row, const linalg::SearchLimits& limits) {
  ReproductionResult res;
  const std::uint64_t n = row.at("n"), q = row.at("q");
  res.id = "table1 n=" + std::to_string(n);
  auto zeros = row.at("zeros").get<std::vector<std::uint32_t>>();
  auto symbol = gf::Field::of_order(q);
  auto code = cyclic::code_from_zeros(symbol, n, zeros);

  check(res, "k", row.at("k"), code.k());
  check(res, "locator", row.at("locator"), code.locator->name());

  auto mw = linalg::min_weight(code.code, std::nullopt, limits, /*cyclic=*/true);
  check(res, "d", row.at("d"), mw.weight);

  auto loc = lrc::locality_exact(code, limits);
  check(res, "d_dual", row.at("d_dual"), *loc.dual_distance);
  check(res, "r", row.at("r"), *loc.r);

  auto dual_reps = cyclic::coset_representatives(cyclic::dual_defining_set(code.zeros));
  check(res, "dual_set", row.at("dual_set"), dual_reps);

  auto p44 = lrc::prop44_bound(code, row.at("z").get<std::uint64_t>());
  check(res, "prop44_r_bound", row.at("r"), p44.r_bound);
  check(res, "w", row.at("w"), p44.subspace.w);

  if (row.contains("sh")) {
    auto sh = bounds::shortening_bound(q, n, row.at("d"), row.at("r"));
    check(res, "sh", row.at("sh"), sh.k_bound);
  }
  if (row.contains("lp")) {
    auto lp = bounds::lp_bound(q, n, row.at("d"), row.at("r"));
    check(res, "lp", row.at("lp"), lp.k_bound);
  }
  return res;
}

ReproductionResult run_example1(const json& e, const linalg::SearchLimits& limits) {
  ReproductionResult res;
  res.id = "example1";
  auto f2 = gf::Field::create(2, 1);
  auto code = cyclic::code_from_zeros(f2, e.at("n"), e.at("zeros").get<std::vector<std::uint32_t>>());
  check(res, "k", e.at("k"), code.k());
  auto mw = linalg::min_weight(code.code, std::nullopt, limits, true);
  check(res, "d", e.at("d"), mw.weight);
  auto dual = cyclic::dual_cyclic(code);
  check(res, "dual_k", e.at("dual_k"), dual.k());
  auto dual_mw = linalg::min_weight(dual.code, std::nullopt, limits, true);
  check(res, "dual_d", e.at("dual_d"), dual_mw.weight);
  check(res, "dual_set", e.at("dual_set"), cyclic::coset_representatives(dual.zeros));
  auto loc = lrc::locality_exact(code, limits);
  check(res, "r", e.at("r"), *loc.r);
  auto sh = bounds::shortening_bound(2, e.at("n"), e.at("d"), e.at("r"));
  check(res, "sh", e.at("sh"), sh.k_bound);
  auto lp = bounds::lp_bound(2, e.at("n"), e.at("d"), e.at("r"));
  check_close(res, "lp_log2", e.at("lp_log2"), lp.log_q, 0.01);
  check(res, "lp_k", e.at("lp_k"), lp.k_bound);
  return res;
}

ReproductionResult run_example2(const json& e, const linalg::SearchLimits& limits) {
  ReproductionResult res;
  res.id = "example2";
  auto f2 = gf::Field::create(2, 1);
  auto code = cyclic::code_from_zeros(f2, e.at("n"), e.at("zeros").get<std::vector<std::uint32_t>>());
  check(res, "k", e.at("k"), code.k());
  auto mw = linalg::min_weight(code.code, std::nullopt, limits, true);
  check(res, "d", e.at("d"), mw.weight);
  auto dual = cyclic::dual_cyclic(code);
  check(res, "dual_k", e.at("dual_k"), dual.k());
  auto dual_mw = linalg::min_weight(dual.code, std::nullopt, limits, true);
  check(res, "dual_d", e.at("dual_d"), dual_mw.weight);
  check(res, "dual_set", e.at("dual_set"), cyclic::coset_representatives(dual.zeros));
  auto loc = lrc::locality_exact(code, limits);
  check(res, "r", e.at("r"), *loc.r);
  auto sh = bounds::shortening_bound(2, e.at("n"), e.at("d"), e.at("r"));
  check(res, "sh", e.at("sh"), sh.k_bound);
  auto lp = bounds::lp_bound(2, e.at("n"), e.at("d"), e.at("r"));
  check(res, "lp_k", e.at("lp_k"), lp.k_bound);
  return res;
}

ReproductionResult run_example3(const json& e, const linalg::SearchLimits& limits) {
  ReproductionResult res;
  res.id = "example3";
  auto f3 = gf::Field::create(3, 1);
  auto code = cyclic::code_from_zeros(f3, e.at("n"), e.at("zeros").get<std::vector<std::uint32_t>>());
  check(res, "k", e.at("k"), code.k());

  const std::uint64_t t = e.at("t");
  auto v = cyclic::irreducible_code(3, t);
  check(res, "v_n", e.at("v_n"), v.n());
  check(res, "v_k", e.at("v_k"), v.k());
  auto dist = linalg::weight_distribution(v, limits);
  json weights = json::object();
  for (auto& [w, cnt] : dist.counts)
    if (w > 0) weights[std::to_string(w)] = cnt;
  check(res, "v_weights", e.at("v_weights"), weights);

  auto p48 = lrc::prop48_ternary_report(code, t);
  check(res, "per_coordinate", e.at("per_coordinate"), p48.set_count);
  check(res, "set_size", e.at("set_size"), p48.set_size);
  check(res, "set_count", e.at("set_count"), p48.set_count);
  check(res, "d_dual_bound", e.at("d_dual_bound"), p48.dual_distance_bound);
  return res;
}

ReproductionResult run_example4(const json& e, const linalg::SearchLimits& limits) {
  ReproductionResult res;
  res.id = "example4";
  auto f2 = gf::Field::create(2, 1);
  auto code = cyclic::code_from_zeros(f2, e.at("n"), e.at("zeros").get<std::vector<std::uint32_t>>());
  check(res, "k", e.at("k"), code.k());
  auto mw = linalg::min_weight(code.code, std::nullopt, limits, true);
  check(res, "d", e.at("d"), mw.weight);

  // V for the coset alpha^3 G_21: l = 3, s = 21
  auto trs = lrc::trace_recovery_subspace(code, 3, 20);
  check(res, "v_copies", e.at("v_copies"), trs.copies);
  check(res, "v_min_weight", e.at("v_min_weight"), trs.min_weight);
  // block code on the first t coordinates
  std::vector<std::vector<gf::Elem>> block_rows;
  for (std::size_t row = 0; row < trs.V.k(); ++row) {
    std::vector<gf::Elem> b(trs.t);
    for (std::uint64_t i = 0; i < trs.t; ++i) b[i] = trs.V.generator().at(row, i);
    block_rows.push_back(std::move(b));
  }
  linalg::LinearCode block(f2, trs.t, block_rows);
  auto block_mw = linalg::min_weight(block, std::nullopt, limits);
  check(res, "v_block", e.at("v_block"),
        json::array({block.n(), block.k(), block_mw.weight}));

  auto dual = cyclic::dual_cyclic(code);
  check(res, "dual_k", e.at("dual_k"), dual.k());
  auto dual_mw = linalg::min_weight(dual.code, std::nullopt, limits, true);
  check(res, "dual_d", e.at("dual_d"), dual_mw.weight);
  auto loc = lrc::locality_exact(code, limits);
  check(res, "r", e.at("r"), *loc.r);
  return res;
}

ReproductionResult run_remark2(const json& e, const linalg::SearchLimits&) {
  ReproductionResult res;
  res.id = "remark2";
  const std::uint64_t n = e.at("n");
  auto f2 = gf::Field::create(2, 1);
  auto divisors = e.at("divisors").get<std::vector<std::uint64_t>>();
  // defining set: all exponent multiples of the divisors' cofactors (the
  // groups of 7th and 9th roots of unity are the multiples of 9 and 7)
  std::vector<std::uint32_t> seeds;
  for (std::uint64_t nu : divisors)
    for (std::uint64_t i = 0; i < n; i += n / nu) seeds.push_back(static_cast<std::uint32_t>(i));
  auto code = cyclic::code_from_zeros(f2, n, seeds);

  auto parts = lrc::multiple_recovery_partitions(code, divisors);
  check(res, "partition_count", divisors.size(), parts.size());
  json sizes = json::array();
  for (const auto& p : parts) sizes.push_back(p.set_size);
  check(res, "set_sizes", e.at("set_sizes"), sizes);

  // recovering sets of each symbol across the two partitions meet only in
  // the symbol itself
  bool disjoint = true;
  if (parts.size() == 2) {
    std::vector<const std::vector<std::uint32_t>*> of_a(n), of_b(n);
    for (const auto& s : parts[0].sets)
      for (auto pos : s) of_a[pos] = &s;
    for (const auto& s : parts[1].sets)
      for (auto pos : s) of_b[pos] = &s;
    for (std::uint32_t p = 0; p < n && disjoint; ++p) {
      std::vector<std::uint32_t> inter;
      std::set_intersection(of_a[p]->begin(), of_a[p]->end(), of_b[p]->begin(), of_b[p]->end(),
                            std::back_inserter(inter));
      disjoint = inter == std::vector<std::uint32_t>{p};
    }
  } else {
    disjoint = false;
  }
  check(res, "disjoint_recovering_sets", true, disjoint);
  return res;
}

}  // namespace

std::vector<ReproductionResult> reproduce(const std::string& target, const json& fixture,
                                          const linalg::SearchLimits& limits) {
  std::vector<ReproductionResult> out;
  bool known = false;
  if (target == "table1" || target == "all") {
    known = true;
    for (const auto& row : fixture.at("table1")) out.push_back(run_table1_row(row, limits));
  }
  const bool all_examples = target == "examples" || target == "all";
  if (all_examples || target == "example1")
    out.push_back(run_example1(fixture.at("example1"), limits));
  if (all_examples || target == "example2")
    out.push_back(run_example2(fixture.at("example2"), limits));
  if (all_examples || target == "example3")
    out.push_back(run_example3(fixture.at("example3"), limits));
  if (all_examples || target == "example4")
    out.push_back(run_example4(fixture.at("example4"), limits));
  if (all_examples || target == "remark2")
    out.push_back(run_remark2(fixture.at("remark2"), limits));
  if (!known && out.empty())
    throw std::invalid_argument(
        "reproduce: target must be table1, examples, all, or a single item id");
  return out;
}

std::string to_text(const std::vector<ReproductionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass() ? "PASS" : "FAIL") << "  " << r.id << "\n";
    for (const auto& f : r.fields) {
      if (f.pass) continue;
      os << "      " << f.name << ": expected " << f.expected << ", computed " << f.computed
         << "\n";
    }
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass();
  os << passed << "/" << results.size() << " items pass\n";
  return os.str();
}

json to_json(const std::vector<ReproductionResult>& results) {
  json out = json::array();
  for (const auto& r : results) {
    json item;
    item["id"] = r.id;
    item["pass"] = r.pass();
    json fields = json::array();
    for (const auto& f : r.fields)
      fields.push_back({{"name", f.name},
                        {"expected", json::parse(f.expected)},
                        {"computed", json::parse(f.computed)},
                        {"pass", f.pass}});
    item["fields"] = fields;
    out.push_back(item);
  }
  return out;
}

}  // namespace cyclrc::report
