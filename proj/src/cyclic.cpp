#include "cyclrc/cyclic.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cyclrc::cyclic {

using gf::Elem;
using gf::FieldPtr;
using gf::Poly;

bool DefiningSet::contains(std::uint32_t e) const {
  return std::binary_search(exponents.begin(), exponents.end(), e);
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw std::invalid_argument("cyclotomic_cosets: n must be positive");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("cyclotomic_cosets: gcd(n, q) != 1");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t rep = 0; rep < n; ++rep) {
    if (seen[rep]) continue;
    std::vector<std::uint32_t> coset;
    std::uint64_t cur = rep;
    do {
      seen[cur] = true;
      coset.push_back(static_cast<std::uint32_t>(cur));
      cur = cur * (q % n) % n;
    } while (cur != rep);
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

DefiningSet complete_defining_set(std::vector<std::uint32_t> seeds, std::uint64_t n,
                                  std::uint64_t q) {
  if (std::gcd(n, q) != 1) throw std::invalid_argument("complete_defining_set: gcd(n, q) != 1");
  std::vector<bool> in(n, false);
  for (std::uint32_t s : seeds) {
    if (s >= n) throw std::invalid_argument("complete_defining_set: seed exponent >= n");
    std::uint64_t cur = s;
    while (!in[cur]) {
      in[cur] = true;
      cur = cur * (q % n) % n;
    }
  }
  DefiningSet z;
  z.n = n;
  z.q = q;
  z.complete = true;
  for (std::uint32_t e = 0; e < n; ++e)
    if (in[e]) z.exponents.push_back(e);
  return z;
}

std::vector<std::uint32_t> coset_representatives(const DefiningSet& z) {
  std::vector<std::uint32_t> reps;
  std::vector<bool> visited(z.n, false);
  for (std::uint32_t e : z.exponents) {
    if (visited[e]) continue;
    std::uint32_t rep = e;
    std::uint64_t cur = e;
    do {
      visited[cur] = true;
      rep = std::min<std::uint32_t>(rep, static_cast<std::uint32_t>(cur));
      cur = cur * (z.q % z.n) % z.n;
    } while (cur != e);
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

DefiningSet dual_defining_set(const DefiningSet& z) {
  DefiningSet d;
  d.n = z.n;
  d.q = z.q;
  d.complete = z.complete;
  for (std::uint32_t e = 0; e < z.n; ++e) {
    if (!z.contains(e)) d.exponents.push_back(static_cast<std::uint32_t>((z.n - e) % z.n));
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  return d;
}

CyclicCode code_from_zeros(const FieldPtr& symbol, std::uint64_t n,
                           std::vector<std::uint32_t> seeds) {
  const std::uint64_t q = symbol->order();
  if (n == 0) throw std::invalid_argument("code_from_zeros: n must be positive");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("code_from_zeros: gcd(n, q) != 1");

  const std::uint64_t mm = gf::nt::mul_order_mod(q, n);
  FieldPtr locator =
      mm == 1 ? symbol : gf::Field::create(symbol->p(), symbol->m() * static_cast<std::uint32_t>(mm));
  gf::SubfieldMapPtr map = gf::subfield_map(symbol, locator);
  const Elem alpha = gf::root_of_unity(locator, n).code();

  DefiningSet z = complete_defining_set(seeds, n, q);

  // g(x) = product over cosets of the minimal polynomial of alpha^rep.
  Poly g = Poly::one(symbol);
  std::vector<bool> visited(n, false);
  for (std::uint32_t e : z.exponents) {
    if (visited[e]) continue;
    Poly mp = Poly::one(locator);
    std::uint64_t cur = e;
    do {
      visited[cur] = true;
      Elem root = locator->pow(alpha, cur);
      Poly lin(locator, {locator->neg(root), 1});
      mp = mp * lin;
      cur = cur * (q % n) % n;
    } while (cur != e);
    std::vector<Elem> down(mp.coeffs().size());
    for (std::size_t i = 0; i < down.size(); ++i) {
      if (!map->in_subfield(mp.coeff(i)))
        throw std::logic_error("code_from_zeros: minimal polynomial not over the symbol field");
      down[i] = map->project(mp.coeff(i));
    }
    g = g * Poly(symbol, down);
  }

  if (!g.divides(Poly::xn_minus_one(symbol, n)))
    throw std::logic_error("code_from_zeros: g(x) does not divide x^n - 1");

  const std::size_t deg = static_cast<std::size_t>(g.degree());
  if (deg != z.exponents.size())
    throw std::logic_error("code_from_zeros: deg g != |complete defining set|");
  const std::size_t k = static_cast<std::size_t>(n) - deg;
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= deg; ++j) rows[i][i + j] = g.coeff(j);
  linalg::LinearCode lin(symbol, n, rows);
  if (lin.k() != k) throw std::logic_error("code_from_zeros: generator rank mismatch");

  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return CyclicCode{symbol, locator, map, n, alpha, std::move(seeds), std::move(z), std::move(g),
                    std::move(lin)};
}

std::uint32_t bch_bound(const DefiningSet& z) {
  const std::uint64_t n = z.n;
  if (z.exponents.empty()) return 1;
  if (z.exponents.size() == n) return static_cast<std::uint32_t>(n) + 1;
  std::vector<bool> in(n, false);
  for (std::uint32_t e : z.exponents) in[e] = true;

  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < n; ++b) {
    if (std::gcd(b, n) != 1) continue;
    // longest run of members along the cycle 0, b, 2b, ...
    std::uint64_t run = 0, longest = 0;
    for (std::uint64_t j = 0; j < 2 * n; ++j) {
      if (in[j * b % n]) {
        ++run;
        longest = std::max(longest, run);
      } else {
        run = 0;
      }
    }
    best = std::max(best, std::min<std::uint64_t>(longest, n));
  }
  return static_cast<std::uint32_t>(best) + 1;
}

CyclicCode dual_cyclic(const CyclicCode& c) {
  DefiningSet d = dual_defining_set(c.zeros);
  CyclicCode out = code_from_zeros(c.symbol, c.n, d.exponents);
  if (out.k() != c.n - c.k()) throw std::logic_error("dual_cyclic: dimension mismatch");
  return out;
}

CyclicCode subfield_subcode(const CyclicCode& c, std::uint64_t target_q) {
  auto fac = gf::nt::factorize(target_q);
  if (fac.size() != 1 || fac[0].first != c.symbol->p())
    throw std::invalid_argument("subfield_subcode: target order incompatible with symbol field");
  const std::uint32_t at = fac[0].second;
  if (c.symbol->m() % at != 0)
    throw std::invalid_argument("subfield_subcode: target field is not a subfield");
  FieldPtr target = at == c.symbol->m() ? c.symbol : gf::Field::create(c.symbol->p(), at);

  // Route 1: closure of the defining set with respect to target_q.
  CyclicCode by_closure = code_from_zeros(target, c.n, c.zeros.exponents);

  // Route 2: the literal vector filter {x in GF(target)^n : x in C}, solved
  // as a GF(p)-linear system from the parity check of C.
  const FieldPtr big = c.symbol;
  gf::SubfieldMapPtr up = gf::subfield_map(target, big);
  linalg::LinearCode big_dual = linalg::dual(c.code);
  const auto& h = big_dual.generator();

  FieldPtr fp = gf::Field::create(big->p(), 1);
  const std::uint32_t bigdeg = big->m();
  const std::size_t hrows = h.rows();
  const std::size_t sys_rows = hrows * bigdeg, sys_cols = static_cast<std::size_t>(c.n) * at;
  linalg::Matrix sys(fp, sys_rows, sys_cols);
  for (std::size_t i = 0; i < hrows; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      Elem hij = h.at(i, j);
      if (hij == 0) continue;
      for (std::uint32_t t = 0; t < at; ++t) {
        Elem basis = target->from_coeffs([&] {
          std::vector<std::uint32_t> v(at, 0);
          v[t] = 1;
          return v;
        }());
        Elem prod = big->mul(hij, up->embed(basis));
        auto digits = big->coeffs(prod);
        for (std::uint32_t s = 0; s < bigdeg; ++s)
          sys.at(i * bigdeg + s, j * at + t) = digits[s];
      }
    }
  }
  auto rr = linalg::rref(std::move(sys));
  // nullspace of the system
  std::vector<bool> is_pivot(sys_cols, false);
  for (std::size_t pcol : rr.pivots) is_pivot[pcol] = true;
  std::vector<std::vector<Elem>> words;
  for (std::size_t fc = 0; fc < sys_cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Elem> x(sys_cols, 0);
    x[fc] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r)
      x[rr.pivots[r]] = fp->neg(rr.mat.at(r, fc));
    std::vector<Elem> word(c.n, 0);
    for (std::size_t j = 0; j < c.n; ++j) {
      std::vector<std::uint32_t> digits(at);
      for (std::uint32_t t = 0; t < at; ++t) digits[t] = x[j * at + t];
      word[j] = target->from_coeffs(digits);
    }
    words.push_back(std::move(word));
  }
  linalg::LinearCode by_filter(target, c.n, words);

  if (!by_filter.same_row_space(by_closure.code))
    throw std::logic_error("subfield_subcode: filter and closure constructions disagree");
  return by_closure;
}

linalg::LinearCode trace_code(const linalg::LinearCode& big_code, const gf::SubfieldMap& map) {
  if (big_code.field().get() != map.big().get())
    throw std::invalid_argument("trace_code: code is not over the big field of the map");
  const FieldPtr& big = map.big();
  const std::size_t n = big_code.n();
  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> scaled(n);
  for (std::size_t r = 0; r < big_code.k(); ++r) {
    for (std::uint32_t t = 0; t < big->m(); ++t) {
      Elem basis = big->from_coeffs([&] {
        std::vector<std::uint32_t> v(big->m(), 0);
        v[t] = 1;
        return v;
      }());
      for (std::size_t j = 0; j < n; ++j)
        scaled[j] = big->mul(basis, big_code.generator().at(r, j));
      rows.push_back(map.trace(scaled));
    }
  }
  return linalg::LinearCode(map.small(), n, rows);
}

linalg::LinearCode trace_span(const gf::SubfieldMap& map, const std::vector<Elem>& v) {
  const FieldPtr& big = map.big();
  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> scaled(v.size());
  for (std::uint32_t t = 0; t < big->m(); ++t) {
    Elem basis = big->from_coeffs([&] {
      std::vector<std::uint32_t> vv(big->m(), 0);
      vv[t] = 1;
      return vv;
    }());
    for (std::size_t j = 0; j < v.size(); ++j) scaled[j] = big->mul(basis, v[j]);
    rows.push_back(map.trace(scaled));
  }
  return linalg::LinearCode(map.small(), v.size(), rows);
}

linalg::LinearCode irreducible_code(std::uint64_t q, std::uint64_t s,
                                    std::optional<std::uint64_t> beta_order) {
  if (s == 0) throw std::invalid_argument("irreducible_code: s must be positive");
  const std::uint64_t t = beta_order.value_or(s);
  if (t == 0 || s % t != 0) throw std::invalid_argument("irreducible_code: beta order must divide s");
  FieldPtr symbol = gf::Field::of_order(q);
  if (std::gcd(s, q) != 1) throw std::invalid_argument("irreducible_code: gcd(s, q) != 1");
  const std::uint64_t m = gf::nt::mul_order_mod(q, s);
  FieldPtr locator =
      m == 1 ? symbol : gf::Field::create(symbol->p(), symbol->m() * static_cast<std::uint32_t>(m));
  gf::SubfieldMapPtr map = gf::subfield_map(symbol, locator);
  const Elem beta = gf::root_of_unity(locator, t).code();
  std::vector<Elem> v(s);
  for (std::uint64_t i = 0; i < s; ++i) v[i] = locator->pow(beta, i);
  linalg::LinearCode code = trace_span(*map, v);

  if (t == s) {
    if (code.k() != m) throw std::logic_error("irreducible_code: dimension differs from ord_s(q)");
  } else {
    const std::uint64_t mt = gf::nt::mul_order_mod(q, t);
    if (code.k() != mt)
      throw std::logic_error("irreducible_code: degenerate dimension differs from ord_t(q)");
    for (std::size_t r = 0; r < code.k(); ++r)
      for (std::uint64_t j = 0; j < s; ++j)
        if (code.generator().at(r, j) != code.generator().at(r, j % t))
          throw std::logic_error("irreducible_code: repetition structure violated");
  }
  return code;
}

std::vector<Elem> cyclic_shift(const std::vector<Elem>& v, std::size_t shift) {
  const std::size_t n = v.size();
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[(i + shift) % n] = v[i];
  return out;
}

}  // namespace cyclrc::cyclic
