#include "cyclrc/lrc.hpp"


#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace cyclrc::lrc {

using gf::Elem;
using gf::FieldPtr;

namespace {

// Orthogonality of a locator-field vector against the symbol-field generator
// rows, through the embedding.
bool dual_over_locator(const cyclic::CyclicCode& c, const std::vector<Elem>& v) {
  const auto& big = c.locator;
  for (std::size_t row = 0; row < c.k(); ++row) {
    Elem acc = 0;
    for (std::size_t col = 0; col < c.n; ++col) {
      Elem g = c.code.generator().at(row, col);
      if (g == 0 || v[col] == 0) continue;
      acc = big->add(acc, big->mul(c.embedding->embed(g), v[col]));
    }
    if (acc != 0) return false;
  }
  return true;
}

bool dual_over_symbol(const cyclic::CyclicCode& c, const std::vector<Elem>& v) {
  const auto& f = c.symbol;
  for (std::size_t row = 0; row < c.k(); ++row) {
    Elem acc = 0;
    for (std::size_t col = 0; col < c.n; ++col)
      acc = f->add(acc, f->mul(c.code.generator().at(row, col), v[col]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> support_of(const std::vector<Elem>& v) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

RecoveringSet make_recovering_set(std::uint32_t target, const std::vector<Elem>& dual_vec,
                                  FieldPtr coeff_field, gf::SubfieldMapPtr embed) {
  RecoveringSet rs;
  rs.target = target;
  rs.coeff_field = std::move(coeff_field);
  rs.embed = std::move(embed);
  for (std::uint32_t pos : support_of(dual_vec)) {
    rs.dual_vector.emplace_back(pos, dual_vec[pos]);
    if (pos != target) rs.helpers.push_back(pos);
  }
  return rs;
}

bool coset_in_zeros(const cyclic::CyclicCode& c, std::uint64_t modulus, std::uint64_t l) {
  for (std::uint64_t i = l % modulus; i < c.n; i += modulus)
    if (!c.zeros.contains(static_cast<std::uint32_t>(i))) return false;
  return true;
}

std::vector<std::uint32_t> coset_exponents(std::uint64_t n, std::uint64_t modulus, std::uint64_t l) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = l % modulus; i < n; i += modulus)
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace

LrcParams LrcParams::make(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  if (r < 1 || k < 1 || n < 1) throw std::invalid_argument("lrc params: n, k, r must be positive");
  if (n % (r + 1) != 0) throw std::invalid_argument("lrc params: (r+1) must divide n");
  if (k % r != 0) throw std::invalid_argument("lrc params: r must divide k");
  LrcParams p;
  p.n = n;
  p.k = k;
  p.r = r;
  p.nu = n / (r + 1);
  p.mu = k / r;
  if (p.mu > p.nu) throw std::invalid_argument("lrc params: k/r exceeds n/(r+1)");
  return p;
}

gf::Elem recover_symbol(const RecoveringSet& rs, const std::vector<Elem>& word) {
  const FieldPtr& cf = rs.coeff_field;
  Elem acc = 0, target_coef = 0;
  for (auto [pos, coef] : rs.dual_vector) {
    if (pos == rs.target) {
      target_coef = coef;
      continue;
    }
    Elem sym = word[pos];
    Elem lifted = rs.embed ? rs.embed->embed(sym) : sym;
    acc = cf->add(acc, cf->mul(coef, lifted));
  }
  if (target_coef == 0) throw std::logic_error("recover_symbol: target coefficient is zero");
  Elem value = cf->neg(cf->div(acc, target_coef));
  return rs.embed ? rs.embed->project(value) : value;
}

RsLikeResult rs_like_construct(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                               bool verify, const linalg::SearchLimits& limits) {
  LrcParams params = LrcParams::make(n, k, r);
  FieldPtr f = gf::Field::of_order(q);
  if ((f->order() - 1) % n != 0) throw std::invalid_argument("rs_like: n must divide q - 1");
  const Elem alpha = gf::root_of_unity(f, n).code();
  const std::uint64_t mu = params.mu;

  // generator rows (1, a^j, a^(2j), ...) for j in {0..mu(r+1)-2} minus
  // {s(r+1)-1 : s = 1..mu-1}
  std::vector<std::vector<Elem>> rows;
  for (std::uint64_t j = 0; j + 1 <= mu * (r + 1) - 1; ++j) {
    if (j % (r + 1) == r) continue;
    std::vector<Elem> row(n);
    for (std::uint64_t tt = 0; tt < n; ++tt) row[tt] = f->pow(alpha, j * tt % n);
    rows.push_back(std::move(row));
  }
  linalg::LinearCode eval(f, n, rows);
  if (eval.k() != k) throw std::logic_error("rs_like: evaluation code rank mismatch");

  // zero set D | L-bar
  std::vector<std::uint32_t> seeds;
  for (std::uint64_t i = 1; i + mu * (r + 1) <= n + 1; ++i)
    seeds.push_back(static_cast<std::uint32_t>(i));
  for (std::uint64_t ll = 1; ll < mu; ++ll)
    seeds.push_back(static_cast<std::uint32_t>(n - (mu - ll) * (r + 1) + 1));
  cyclic::CyclicCode cyc = cyclic::code_from_zeros(f, n, seeds);
  if (cyc.k() != k) throw std::logic_error("rs_like: cyclic code dimension mismatch");
  if (!eval.same_row_space(cyc.code))
    throw std::logic_error("rs_like: evaluation and cyclic row spaces differ");

  if (verify) {
    const std::uint64_t expect_d = n - mu * (r + 1) + 2;
    auto mw = linalg::min_weight(cyc.code, expect_d, limits, /*cyclic=*/true);
    if (!mw.found || mw.weight != expect_d)
      throw std::logic_error("rs_like: distance differs from n - k(r+1)/r + 2");
    auto dual_mw = linalg::min_weight(linalg::dual(cyc.code), r + 1, limits, /*cyclic=*/true);
    if (!dual_mw.found || dual_mw.weight != r + 1)
      throw std::logic_error("rs_like: locality differs from r");
  }
  return RsLikeResult{std::move(eval), std::move(cyc), params};
}

cyclic::CyclicCode thm31_construct(std::uint64_t q, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t r, std::uint64_t l, std::uint64_t b,
                                   std::optional<std::uint64_t> j_opt, bool verify,
                                   const linalg::SearchLimits& limits) {
  LrcParams params = LrcParams::make(n, k, r);
  FieldPtr f = gf::Field::of_order(q);
  if ((f->order() - 1) % n != 0) throw std::invalid_argument("thm31: n must divide q - 1");
  if (l > r) throw std::invalid_argument("thm31: need 0 <= l <= r");
  if (std::gcd(b, n) != 1) throw std::invalid_argument("thm31: need gcd(b, n) = 1");
  const std::uint64_t j = j_opt.value_or(l) % n;
  if (j % (r + 1) != l) throw std::invalid_argument("thm31: need j = l (mod r+1) so alpha^j lies in L");

  std::vector<std::uint32_t> seeds = coset_exponents(n, r + 1, l);  // L
  for (std::uint64_t s = 0; s + params.mu * (r + 1) <= n; ++s)      // D
    seeds.push_back(static_cast<std::uint32_t>((j + s * b) % n));

  cyclic::CyclicCode code = cyclic::code_from_zeros(f, n, seeds);
  if (code.k() != k) throw std::logic_error("thm31: dimension differs from k");

  if (verify) {
    const std::uint64_t expect_d = n - k - params.mu + 2;
    auto mw = linalg::min_weight(code.code, expect_d, limits, /*cyclic=*/true);
    if (!mw.found || mw.weight != expect_d)
      throw std::logic_error("thm31: distance misses the Singleton-like bound");
    auto dual_mw = linalg::min_weight(linalg::dual(code.code), r + 1, limits, /*cyclic=*/true);
    if (!dual_mw.found || dual_mw.weight != r + 1)
      throw std::logic_error("thm31: locality differs from r");
  }
  return code;
}

LocalityReport locality_exact(const cyclic::CyclicCode& c, const linalg::SearchLimits& limits) {
  LocalityReport rep;
  if (c.k() == c.n) {
    rep.dual_exists = false;
    return rep;
  }
  linalg::LinearCode d = linalg::dual(c.code);
  auto mw = linalg::min_weight(d, std::nullopt, limits, /*cyclic=*/true);
  rep.dual_distance = mw.weight;
  rep.r = mw.weight - 1;

  auto supp = support_of(mw.witness);
  for (std::uint32_t target = 0; target < c.n; ++target) {
    std::size_t shift = (target + c.n - supp[0]) % c.n;
    std::vector<Elem> vec = cyclic::cyclic_shift(mw.witness, shift);
    if (!dual_over_symbol(c, vec))
      throw std::logic_error("locality_exact: shifted dual witness is not dual");
    rep.recovering_sets.push_back(make_recovering_set(target, vec, c.symbol, nullptr));
  }
  return rep;
}

LocalityReport locality_exact_linear(const linalg::LinearCode& c,
                                     const linalg::SearchLimits& limits) {
  LocalityReport rep;
  if (c.k() == c.n()) {
    rep.dual_exists = false;
    return rep;
  }
  linalg::LinearCode d = linalg::dual(c);
  auto per = linalg::per_coordinate_min_weight(d, limits);
  std::uint64_t worst = 0;
  bool all_defined = true;
  for (std::uint32_t i = 0; i < c.n(); ++i) {
    if (!per.weight[i]) {
      all_defined = false;
      continue;
    }
    worst = std::max<std::uint64_t>(worst, *per.weight[i] - 1);
    rep.recovering_sets.push_back(
        make_recovering_set(i, per.witness[i], c.field(), nullptr));
  }
  if (!all_defined) rep.dual_exists = false;
  if (all_defined) {
    rep.r = worst;
    auto mw = linalg::min_weight(d, std::nullopt, limits);
    rep.dual_distance = mw.weight;
  }
  return rep;
}

bool has_coset(const cyclic::CyclicCode& c, std::uint64_t modulus, std::uint64_t l) {
  if (modulus == 0 || c.n % modulus != 0)
    throw std::invalid_argument("has_coset: modulus must divide n");
  return coset_in_zeros(c, modulus, l % modulus);
}

std::optional<Prop34Certificate> prop34_certificate(const cyclic::CyclicCode& c, std::uint64_t r) {
  if (c.n % (r + 1) != 0) throw std::invalid_argument("prop34: (r+1) must divide n");
  const std::uint64_t nu = c.n / (r + 1);
  const Elem beta = c.locator->pow(c.alpha, nu);
  for (std::uint64_t l = 0; l <= r; ++l) {
    if (!coset_in_zeros(c, r + 1, l)) continue;
    Prop34Certificate cert;
    cert.l = l;
    cert.s = r + 1;
    cert.coset = coset_exponents(c.n, r + 1, l);
    cert.v.assign(c.n, 0);
    for (std::uint64_t jj = 0; jj <= r; ++jj)
      cert.v[jj * nu] = c.locator->pow(beta, l * jj);

    std::vector<bool> covered(c.n, false);
    for (std::uint64_t shift = 0; shift < nu; ++shift) {
      std::vector<Elem> shifted = cyclic::cyclic_shift(cert.v, shift);
      if (!dual_over_locator(c, shifted))
        throw std::logic_error("prop34: shift of v is not in the dual");
      for (std::uint32_t pos : support_of(shifted)) {
        if (covered[pos]) throw std::logic_error("prop34: supports overlap");
        covered[pos] = true;
      }
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool x) { return x; }))
      throw std::logic_error("prop34: supports do not cover all coordinates");
    return cert;
  }
  return std::nullopt;
}

TraceRecoverySubspace trace_recovery_subspace(const cyclic::CyclicCode& c, std::uint64_t l,
                                              std::uint64_t r) {
  if (c.n % (r + 1) != 0) throw std::invalid_argument("trace_recovery_subspace: (r+1) must divide n");
  if (!coset_in_zeros(c, r + 1, l % (r + 1)))
    throw std::invalid_argument("trace_recovery_subspace: coset not contained in the defining set");
  TraceRecoverySubspace out{.v = {}, .V = linalg::LinearCode(c.symbol, r + 1, {})};
  out.l = l;
  out.s = r + 1;
  const std::uint64_t nu = c.n / out.s;
  const Elem beta = c.locator->pow(c.alpha, nu);
  out.v.resize(out.s);
  for (std::uint64_t jj = 0; jj < out.s; ++jj) out.v[jj] = c.locator->pow(beta, l * jj % out.s);
  out.t = out.s / std::gcd(l % out.s, out.s);
  out.copies = out.s / out.t;
  out.V = cyclic::trace_span(*c.embedding, out.v);

  // repetition structure for degenerate beta^l
  for (std::size_t row = 0; row < out.V.k(); ++row)
    for (std::uint64_t jj = 0; jj < out.s; ++jj)
      if (out.V.generator().at(row, jj) != out.V.generator().at(row, jj % out.t))
        throw std::logic_error("trace_recovery_subspace: repetition structure violated");

  // Every element of V, re-expanded on the support pattern and cyclically
  // shifted, lies in the dual of the code over the symbol field. Expansion,
  // shifting and duality are all linear in the element, so checking the
  // basis rows covers the whole subspace.
  for (std::size_t row = 0; row < out.V.k(); ++row) {
    std::vector<Elem> full(c.n, 0);
    for (std::uint64_t jj = 0; jj < out.s; ++jj) full[jj * nu] = out.V.generator().at(row, jj);
    for (std::uint64_t shift = 0; shift < c.n; ++shift)
      if (!dual_over_symbol(c, cyclic::cyclic_shift(full, shift)))
        throw std::logic_error("trace_recovery_subspace: expanded element not dual");
  }

  std::uint64_t min_w = out.s + 1;
  std::vector<std::set<std::vector<std::uint32_t>>> through(out.s);
  linalg::enumerate_codewords(
      out.V, {}, [&](const std::vector<Elem>& y, std::size_t wt, const std::vector<Elem>&) {
        if (wt == 0) return;
        min_w = std::min<std::uint64_t>(min_w, wt);
        auto supp = support_of(y);
        for (std::uint32_t pos : supp) through[pos].insert(supp);
      });
  out.min_weight = min_w;
  out.locality_bound = min_w - 1;
  out.w = through[0].size();
  for (const auto& s : through)
    if (s.size() != out.w)
      throw std::logic_error("trace_recovery_subspace: support counts differ across coordinates");
  return out;
}

Prop44Result prop44_bound(const cyclic::CyclicCode& c, std::uint64_t z) {
  if (c.symbol->order() != 2) throw std::invalid_argument("prop44: code must be binary");
  if (z < 1) throw std::invalid_argument("prop44: z must be >= 1");
  const std::uint64_t s = (1ull << z) - 1;
  if (c.n % s != 0) throw std::invalid_argument("prop44: 2^z - 1 must divide n");
  if (!coset_in_zeros(c, s, 1))
    throw std::invalid_argument("prop44: defining set lacks the coset alpha G_(2^z-1)");

  Prop44Result out{.z = z, .r_bound = (1ull << (z - 1)) - 1, .w_bound = 1ull << (z - 1),
                   .subspace = trace_recovery_subspace(c, 1, s - 1)};
  const auto& V = out.subspace.V;
  if (V.k() != z) throw std::logic_error("prop44: V is not z-dimensional");
  auto dist = linalg::weight_distribution(V);
  if (dist.counts.size() != 2 || !dist.counts.count(1ull << (z - 1)))
    throw std::logic_error("prop44: V is not the constant-weight simplex");
  if (out.subspace.locality_bound != out.r_bound)
    throw std::logic_error("prop44: bound mismatch with the trace subspace");
  if (out.subspace.w != out.w_bound)
    throw std::logic_error("prop44: recovering-set count mismatch");

  // Appendix-style check: the span over locator scalars equals the span over
  // GF(2^z) scalars, computed with the same beta (it lies in the GF(2^z)
  // subfield of the locator).
  gf::FieldPtr fz = gf::Field::create(2, static_cast<std::uint32_t>(z));
  gf::FieldPtr f2 = gf::Field::create(2, 1);
  auto z_in_locator = gf::subfield_map(fz, c.locator);
  const std::uint64_t nu = c.n / s;
  Elem beta_small = z_in_locator->project(c.locator->pow(c.alpha, nu));
  std::vector<Elem> v_small(s);
  for (std::uint64_t i = 0; i < s; ++i) v_small[i] = fz->pow(beta_small, i);
  linalg::LinearCode vz = cyclic::trace_span(*gf::subfield_map(f2, fz), v_small);
  if (!vz.same_row_space(V)) throw std::logic_error("prop44: V_m differs from V_z");
  return out;
}

Frac prop45_irreducible_distance_bound(std::uint64_t s, std::uint64_t m, std::uint64_t q) {
  if (m < 1) throw std::invalid_argument("prop45: m must be >= 1");
  long long qm = 1, qm1 = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    qm *= static_cast<long long>(q);
    if (i + 1 < m) qm1 *= static_cast<long long>(q);
  }
  long long num = static_cast<long long>(s) * (qm - qm1);
  long long den = qm - 1;
  long long g = std::gcd(num, den);
  return Frac{num / g, den / g};
}

std::uint64_t prop46_locality_bound(const cyclic::CyclicCode& c, std::uint64_t s) {
  if (c.n % s != 0) throw std::invalid_argument("prop46: s must divide n");
  if (!coset_in_zeros(c, s, 1))
    throw std::invalid_argument("prop46: defining set lacks the coset alpha G_s");
  const std::uint64_t m = gf::nt::mul_order_mod(c.symbol->order(), s);
  Frac bound = prop45_irreducible_distance_bound(s, m, c.symbol->order());
  // strict inequality: integral bound excludes itself
  if (bound.num % bound.den == 0) return static_cast<std::uint64_t>(bound.num / bound.den) - 1;
  return static_cast<std::uint64_t>(bound.num / bound.den);
}

Prop48Result prop48_ternary_report(const cyclic::CyclicCode& c, std::uint64_t t) {
  if (c.symbol->order() != 3) throw std::invalid_argument("prop48: code must be ternary");
  if (t == 0 || c.n % t != 0) throw std::invalid_argument("prop48: t must divide n");
  if (!coset_in_zeros(c, t, 1))
    throw std::invalid_argument("prop48: defining set lacks the coset alpha G_t");
  const std::uint64_t m = gf::nt::mul_order_mod(3, t);
  if (m % 2 != 0) throw std::invalid_argument("prop48: ord_t(3) must be even");
  std::uint64_t p3m = 1;
  for (std::uint64_t i = 0; i < m; ++i) p3m *= 3;
  const std::uint64_t big_n = (p3m - 1) / t;
  if ((p3m - 1) % t != 0 || std::gcd((p3m - 1) / 2, big_n) != 2)
    throw std::invalid_argument("prop48: gcd((3^m - 1)/2, N) = 2 fails; two-weight theorem inapplicable");

  std::uint64_t half_power = 1;
  for (std::uint64_t i = 0; i < m / 2; ++i) half_power *= 3;

  Prop48Result out;
  out.m = m;
  out.big_n = big_n;
  out.lower_weight = 2 * (p3m - half_power) / (3 * big_n);
  out.upper_weight = 2 * (p3m + half_power) / (3 * big_n);
  out.set_size = out.lower_weight - 1;
  out.dual_distance_bound = out.lower_weight;

  // enumerate the dual subspace V and count, per coordinate, the
  // lower-weight codewords through it
  TraceRecoverySubspace trs = trace_recovery_subspace(c, 1, t - 1);
  auto dist = linalg::weight_distribution(trs.V);
  const std::uint64_t expect_count = (p3m - 1) / 2;
  if (dist.counts.size() != 3 || dist.counts[0] != 1 ||
      dist.counts[out.lower_weight] != expect_count ||
      dist.counts[out.upper_weight] != expect_count)
    throw std::logic_error("prop48: V is not the expected two-weight code");

  std::vector<std::uint64_t> through(t, 0);
  linalg::enumerate_codewords(
      trs.V, {}, [&](const std::vector<Elem>& y, std::size_t wt, const std::vector<Elem>&) {
        if (wt != out.lower_weight) return;
        for (std::uint64_t i = 0; i < t; ++i)
          if (y[i] != 0) ++through[i];
      });
  for (std::uint64_t i = 0; i < t; ++i)
    if (through[i] != through[0])
      throw std::logic_error("prop48: per-coordinate counts are not uniform");
  const std::uint64_t claimed = p3m / 3 - half_power / 3;  // 3^(m-1) - 3^(m/2-1)
  if (through[0] != claimed)
    throw std::logic_error("prop48: per-coordinate count differs from 3^(m-1) - 3^(m/2-1)");
  out.set_count = through[0];
  return out;
}

SupportIntersection support_intersection(std::uint32_t z, const std::vector<std::uint64_t>& u_list) {
  if (z == 0 || z > 62) throw std::invalid_argument("support_intersection: need 1 <= z <= 62");
  for (std::uint64_t u : u_list)
    if (u == 0 || u >> z)
      throw std::invalid_argument("support_intersection: u vectors must be nonzero and fit z bits");

  // Gaussian elimination on rows (u | 1) over GF(2); rhs tracked in bit z.
  std::vector<std::uint64_t> rows;
  for (std::uint64_t u : u_list) rows.push_back(u | (1ull << z));
  std::uint32_t rank = 0;
  bool consistent = true;
  std::vector<std::uint64_t> basis;
  for (std::uint64_t row : rows) {
    for (std::uint64_t b : basis) {
      std::uint64_t low = b & ~(~0ull << z);
      int piv = std::countr_zero(low);
      if (row >> piv & 1ull) row ^= b;
    }
    if ((row & ~(~0ull << z)) != 0) {
      basis.push_back(row);
      ++rank;
    } else if (row >> z & 1ull) {
      consistent = false;
    }
  }
  SupportIntersection out;
  out.rank = rank;
  out.consistent = consistent;
  out.bound = 1ull << (z - rank);
  out.exact = consistent ? out.bound : 0;
  return out;
}

std::vector<RecoveryPartition> multiple_recovery_partitions(const cyclic::CyclicCode& c,
                                                            const std::vector<std::uint64_t>& divisors) {
  std::vector<RecoveryPartition> found;
  for (std::uint64_t nu : divisors) {
    if (nu == 0 || c.n % nu != 0)
      throw std::invalid_argument("multiple_recovery_partitions: divisor does not divide n");
    const std::uint64_t size = c.n / nu;  // r + 1 for this partition
    std::optional<std::uint64_t> found_l;
    for (std::uint64_t l = 0; l < size && !found_l; ++l)
      if (coset_in_zeros(c, size, l)) found_l = l;
    if (!found_l) continue;

    RecoveryPartition part;
    part.nu = nu;
    part.set_size = size;
    part.l = *found_l;
    const Elem beta = c.locator->pow(c.alpha, nu);
    std::vector<Elem> v(c.n, 0);
    for (std::uint64_t jj = 0; jj < size; ++jj)
      v[jj * nu] = c.locator->pow(beta, *found_l * jj % size);
    for (std::uint64_t shift = 0; shift < nu; ++shift) {
      std::vector<Elem> shifted = cyclic::cyclic_shift(v, shift);
      if (!dual_over_locator(c, shifted))
        throw std::logic_error("multiple_recovery_partitions: witness not dual");
      auto supp = support_of(shifted);
      part.sets.push_back(supp);
      part.dual_vectors.push_back(std::move(shifted));
    }
    found.push_back(std::move(part));
  }

  // pairwise-coprime partitions must meet in single symbols
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = a + 1; b < found.size(); ++b) {
      if (std::gcd(found[a].nu, found[b].nu) != 1) continue;
      std::vector<const std::vector<std::uint32_t>*> of_a(c.n), of_b(c.n);
      for (const auto& s : found[a].sets)
        for (std::uint32_t pos : s) of_a[pos] = &s;
      for (const auto& s : found[b].sets)
        for (std::uint32_t pos : s) of_b[pos] = &s;
      for (std::uint32_t p = 0; p < c.n; ++p) {
        std::vector<std::uint32_t> inter;
        std::set_intersection(of_a[p]->begin(), of_a[p]->end(), of_b[p]->begin(), of_b[p]->end(),
                              std::back_inserter(inter));
        if (inter != std::vector<std::uint32_t>{p})
          throw std::logic_error(
              "multiple_recovery_partitions: coprime partitions share helpers");
      }
    }
  }
  return found;
}

}  // namespace cyclrc::lrc
