#include "cyclrc/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cyclrc::report {

using nlohmann::json;

namespace {

std::string set_to_string(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << '}';
  return os.str();
}

std::string poly_to_string(const std::vector<gf::Elem>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs[i] != 1) os << coeffs[i];
    if (i > 0 && coeffs[i] != 1) os << "*";
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
  }
  if (first) os << "0";
  return os.str();
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace

CodeReport analyze(const AnalyzeOptions& opts) {
  CodeReport rep;
  rep.q = opts.q;
  rep.n = opts.n;
  rep.seeds = opts.zeros;
  std::sort(rep.seeds.begin(), rep.seeds.end());
  rep.seeds.erase(std::unique(rep.seeds.begin(), rep.seeds.end()), rep.seeds.end());

  gf::FieldPtr symbol = gf::Field::of_order(opts.q);
  cyclic::CyclicCode code = cyclic::code_from_zeros(symbol, opts.n, rep.seeds);
  rep.locator_name = code.locator->name();
  if (opts.locator && *opts.locator != rep.locator_name)
    throw std::invalid_argument("analyze: explicit locator " + *opts.locator +
                                " does not match the inferred field GF(" + rep.locator_name + ")");
  rep.complete = code.zeros.exponents;
  rep.representatives = cyclic::coset_representatives(code.zeros);
  auto dual_set = cyclic::dual_defining_set(code.zeros);
  rep.dual_complete = dual_set.exponents;
  rep.dual_representatives = cyclic::coset_representatives(dual_set);
  rep.generator_poly = code.generator_poly.coeffs();
  rep.k = code.k();

  try {
    auto mw = linalg::min_weight(code.code, std::nullopt, opts.limits, /*cyclic=*/true);
    rep.d = mw.weight;
  } catch (const linalg::BudgetExceeded&) {
    rep.unknown["d"] = "budget";
  }

  if (rep.k == rep.n) {
    rep.locality_defined = false;
    rep.unknown["r"] = "no dual constraints; locality undefined";
  } else {
    try {
      auto loc = lrc::locality_exact(code, opts.limits);
      rep.d_dual = loc.dual_distance;
      rep.r = loc.r;
      if (!loc.recovering_sets.empty()) {
        for (auto [pos, coef] : loc.recovering_sets[0].dual_vector)
          rep.recovering_set_sample.emplace_back(pos, coef);
      }
    } catch (const linalg::BudgetExceeded&) {
      rep.unknown["r"] = "budget";
      rep.unknown["d_dual"] = "budget";
    }
  }

  // Certificates from the zero-set structure, scanned over the divisors of n;
  // w comes from the tightest trace subspace.
  std::optional<std::uint64_t> best_bound;
  auto add_trace_cert = [&](std::uint64_t s, std::uint64_t l) {
    auto trs = lrc::trace_recovery_subspace(code, l, s - 1);
    lrc::Certificate cv;
    cv.prop = "trace-subspace";
    cv.params["s"] = static_cast<long long>(s);
    cv.params["l"] = static_cast<long long>(l);
    cv.params["v_min_weight"] = static_cast<long long>(trs.min_weight);
    cv.params["r_le"] = static_cast<long long>(trs.locality_bound);
    cv.params["w"] = static_cast<long long>(trs.w);
    rep.certificates.push_back(cv);
    if (!best_bound || trs.locality_bound < *best_bound) {
      best_bound = trs.locality_bound;
      rep.w = trs.w;
    }
  };
  for (std::uint64_t s = 2; s <= opts.n; ++s) {
    if (opts.n % s != 0) continue;
    auto cert = lrc::prop34_certificate(code, s - 1);
    if (!cert) continue;
    lrc::Certificate c34;
    c34.prop = "3.4";
    c34.params["s"] = static_cast<long long>(s);
    c34.params["l"] = static_cast<long long>(cert->l);
    c34.params["r_le"] = static_cast<long long>(s - 1);
    rep.certificates.push_back(c34);

    add_trace_cert(s, cert->l);
    const bool alpha_coset = lrc::has_coset(code, s, 1);
    if (alpha_coset && cert->l != 1) add_trace_cert(s, 1);

    if (!alpha_coset) continue;  // the sharper propositions use the coset alpha G_s
    if (opts.q == 2) {
      std::uint64_t z = 1;
      while ((1ull << (z + 1)) - 1 <= s) ++z;
      if ((1ull << z) - 1 == s) {
        auto p44 = lrc::prop44_bound(code, z);
        lrc::Certificate c44;
        c44.prop = "4.4";
        c44.params["z"] = static_cast<long long>(z);
        c44.params["r_le"] = static_cast<long long>(p44.r_bound);
        c44.params["w_ge"] = static_cast<long long>(p44.w_bound);
        rep.certificates.push_back(c44);
      }
    }
    {
      auto r46 = lrc::prop46_locality_bound(code, s);
      lrc::Certificate c46;
      c46.prop = "4.6";
      c46.params["s"] = static_cast<long long>(s);
      c46.params["r_le"] = static_cast<long long>(r46);
      rep.certificates.push_back(c46);
    }
    if (opts.q == 3) {
      try {
        auto p48 = lrc::prop48_ternary_report(code, s);
        lrc::Certificate c48;
        c48.prop = "4.8";
        c48.params["t"] = static_cast<long long>(s);
        c48.params["m"] = static_cast<long long>(p48.m);
        c48.params["N"] = static_cast<long long>(p48.big_n);
        c48.params["set_size"] = static_cast<long long>(p48.set_size);
        c48.params["set_count"] = static_cast<long long>(p48.set_count);
        c48.params["d_dual_le"] = static_cast<long long>(p48.dual_distance_bound);
        rep.certificates.push_back(c48);
      } catch (const std::invalid_argument&) {
        // two-weight theorem conditions not met; no certificate
      }
    }
  }

  if (opts.with_bounds) {
    std::optional<std::uint64_t> r_eff = rep.r;
    if (!r_eff && best_bound) r_eff = best_bound;
    if (r_eff && rep.k > 0) {
      std::uint64_t rb = std::min<std::uint64_t>(std::max<std::uint64_t>(*r_eff, 1), rep.k);
      rep.singleton = bounds::singleton_like(rep.n, rep.k, rb);
      if (rep.d) rep.optimal = static_cast<long long>(*rep.d) == *rep.singleton;
      if (rep.d && rb + 1 <= rep.n) {
        auto sh = bounds::shortening_bound(opts.q, rep.n, *rep.d, rb, opts.kq_table);
        rep.shortening = sh.k_bound;
        rep.shortening_t = sh.t_min;
        auto lp = bounds::lp_bound(opts.q, rep.n, *rep.d, rb);
        if (lp.feasible) {
          rep.lp_k = lp.k_bound;
          rep.lp_log_q = round2(lp.log_q);
        }
      }
    }
  }
  return rep;
}

json to_json(const CodeReport& rep, bool with_timestamp) {
  json j;
  j["params"] = {{"q", rep.q}, {"n", rep.n}, {"locator", rep.locator_name}};
  j["defining_set"] = {{"seeds", rep.seeds},
                       {"complete", rep.complete},
                       {"representatives", rep.representatives}};
  j["dual_defining_set"] = {{"complete", rep.dual_complete},
                            {"representatives", rep.dual_representatives}};
  j["generator_poly"] = rep.generator_poly;
  json results;
  results["k"] = rep.k;
  results["d"] = rep.d ? json(*rep.d) : json(nullptr);
  results["d_dual"] = rep.d_dual ? json(*rep.d_dual) : json(nullptr);
  results["r"] = rep.r ? json(*rep.r) : json(nullptr);
  results["w"] = rep.w ? json(*rep.w) : json(nullptr);
  j["results"] = results;
  json bounds_j;
  bounds_j["singleton"] = rep.singleton ? json(*rep.singleton) : json(nullptr);
  bounds_j["shortening"] = rep.shortening ? json(*rep.shortening) : json(nullptr);
  bounds_j["lp_log_q"] = rep.lp_log_q ? json(*rep.lp_log_q) : json(nullptr);
  bounds_j["lp_k"] = rep.lp_k ? json(*rep.lp_k) : json(nullptr);
  if (rep.shortening_t) bounds_j["shortening_t"] = *rep.shortening_t;
  j["bounds"] = bounds_j;
  json certs = json::array();
  for (const auto& c : rep.certificates) {
    json cj;
    cj["prop"] = c.prop;
    cj["parameters"] = c.params;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  if (rep.optimal) j["optimal"] = *rep.optimal;
  if (!rep.unknown.empty()) j["unknown"] = rep.unknown;
  if (!rep.recovering_set_sample.empty()) {
    json rs = json::array();
    for (auto [pos, coef] : rep.recovering_set_sample)
      rs.push_back({{"pos", pos}, {"coef", coef}});
    j["recovering_set_sample"] = rs;
  }
  if (with_timestamp) {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    j["generated_at"] = buf;
  }
  return j;
}

std::string to_text(const CodeReport& rep) {
  std::ostringstream os;
  os << "cyclic code over GF(" << rep.q << "), n = " << rep.n << ", locator field GF("
     << rep.locator_name << ")\n";
  os << "  seeds:           " << set_to_string(rep.seeds) << "\n";
  os << "  complete set:    " << set_to_string(rep.complete) << "\n";
  os << "  representatives: " << set_to_string(rep.representatives) << "\n";
  os << "  g(x) = " << poly_to_string(rep.generator_poly) << "\n";
  auto show = [&](const char* name, const std::optional<std::uint64_t>& v) {
    os << name << " = ";
    if (v)
      os << *v;
    else if (rep.unknown.count(name))
      os << "unknown (" << rep.unknown.at(name) << ")";
    else
      os << "-";
  };
  os << "  [n, k] = [" << rep.n << ", " << rep.k << "]   ";
  show("d", rep.d);
  os << "   ";
  show("d_dual", rep.d_dual);
  os << "   ";
  show("r", rep.r);
  os << "   ";
  show("w", rep.w);
  os << "\n";
  os << "  dual set:        " << set_to_string(rep.dual_representatives) << " (representatives)\n";
  if (rep.singleton) {
    os << "  singleton-like d <= " << *rep.singleton;
    if (rep.optimal && *rep.optimal) os << "  [optimal]";
    os << "\n";
  }
  if (rep.shortening)
    os << "  shortening k <= " << *rep.shortening << " (t = " << *rep.shortening_t << ")\n";
  if (rep.lp_k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *rep.lp_log_q);
    os << "  LP k <= " << *rep.lp_k << " (log_q M = " << buf << ")\n";
  }
  for (const auto& c : rep.certificates) {
    os << "  certificate Prop " << c.prop << ":";
    for (const auto& [key, v] : c.params) os << " " << key << "=" << v;
    os << "\n";
  }
  return os.str();
}

CodeReport reanalyze_from_json(const json& j, const linalg::SearchLimits& limits) {
  AnalyzeOptions opts;
  opts.q = j.at("params").at("q").get<std::uint64_t>();
  opts.n = j.at("params").at("n").get<std::uint64_t>();
  opts.zeros = j.at("defining_set").at("seeds").get<std::vector<std::uint32_t>>();
  opts.limits = limits;
  return analyze(opts);
}

BoundReport evaluate_bounds(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t r,
                            const bounds::KqTable* table) {
  BoundReport rep;
  rep.q = q;
  rep.n = n;
  rep.d = d;
  rep.r = r;
  rep.singleton_k = bounds::singleton_k_max(n, d, r);
  rep.shortening = bounds::shortening_bound(q, n, d, r, table);
  rep.lp = bounds::lp_bound(q, n, d, r);
  return rep;
}

json to_json(const BoundReport& rep, bool with_timestamp) {
  json j;
  j["params"] = {{"q", rep.q}, {"n", rep.n}, {"d", rep.d}, {"r", rep.r}};
  j["singleton_k"] = rep.singleton_k;
  json sh;
  sh["k_bound"] = rep.shortening.k_bound;
  sh["t_min"] = rep.shortening.t_min;
  json terms = json::array();
  for (auto [t, val] : rep.shortening.terms) terms.push_back({{"t", t}, {"term", val}});
  sh["terms"] = terms;
  j["shortening"] = sh;
  json lp;
  lp["feasible"] = rep.lp.feasible;
  if (rep.lp.feasible) {
    lp["k_bound"] = rep.lp.k_bound;
    lp["log_q"] = round2(rep.lp.log_q);
    lp["cardinality"] = rep.lp.cardinality.get_str();
  }
  j["lp"] = lp;
  if (with_timestamp) {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    j["generated_at"] = buf;
  }
  return j;
}

std::string to_text(const BoundReport& rep) {
  std::ostringstream os;
  os << "bounds for q = " << rep.q << ", n = " << rep.n << ", d = " << rep.d << ", r = " << rep.r
     << "\n";
  os << "  singleton-like: k <= " << rep.singleton_k << "\n";
  os << "  shortening:     k <= " << rep.shortening.k_bound << " (minimizing t = "
     << rep.shortening.t_min << ")\n";
  if (rep.lp.feasible) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", round2(rep.lp.log_q));
    os << "  LP:             k <= " << rep.lp.k_bound << " (log_q M = " << buf << ")\n";
  } else {
    os << "  LP:             infeasible\n";
  }
  return os.str();
}

std::string to_csv(const BoundReport& rep) {
  std::ostringstream os;
  os << "q,n,d,r,singleton_k,shortening_k,shortening_t,lp_k,lp_log_q\n";
  os << rep.q << ',' << rep.n << ',' << rep.d << ',' << rep.r << ',' << rep.singleton_k << ','
     << rep.shortening.k_bound << ',' << rep.shortening.t_min << ',';
  if (rep.lp.feasible) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", round2(rep.lp.log_q));
    os << rep.lp.k_bound << ',' << buf;
  } else {
    os << ',';
  }
  os << '\n';
  return os.str();
}

}  // namespace cyclrc::report
