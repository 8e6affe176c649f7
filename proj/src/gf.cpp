#include "cyclrc/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cyclrc::gf {

namespace nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t mul_order_mod(std::uint64_t q, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(q, n) != 1) throw std::invalid_argument("mul_order_mod: gcd(q, n) != 1");
  std::uint64_t acc = q % n;
  for (std::uint64_t t = 1; t <= n; ++t) {
    if (acc == 1) return t;
    acc = acc * q % n;
  }
  throw std::logic_error("mul_order_mod: order not found");
}

std::uint64_t pow_capped(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (acc > cap / q) return cap + 1;
    acc *= q;
  }
  return acc;
}

}  // namespace nt

namespace {

// --- polynomial helpers over GF(p), digit vectors low degree first ---------

using PPoly = std::vector<std::uint32_t>;

void pp_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p); b monic-after-normalization is not required.
PPoly pp_mod(PPoly a, const PPoly& b, std::uint32_t p) {
  pp_trim(a);
  const std::size_t db = b.size() - 1;
  // inverse of leading coefficient of b mod p
  std::uint32_t lead = b.back(), lead_inv = 1;
  for (std::uint32_t t = 1; t < p; ++t)
    if (lead * t % p == 1) { lead_inv = t; break; }
  while (a.size() > db) {
    std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t v =
          a[shift + i] + static_cast<std::uint64_t>(p) - static_cast<std::uint64_t>(c) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>(v % p);
    }
    pp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool pp_is_irreducible(const PPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t u = 0; u < count; ++u) {
      PPoly div(d + 1, 0);
      std::uint64_t t = u;
      for (std::size_t i = 0; i < d; ++i) { div[i] = static_cast<std::uint32_t>(t % p); t /= p; }
      div[d] = 1;
      if (pp_mod(f, div, p).empty()) return false;
    }
  }
  return true;
}

// Iterate candidates in lexicographic order (coefficients compared
// low-degree-first): u's base-p digits are read top-down as c_0, c_1, ...
std::vector<std::uint32_t> lex_digits(std::uint64_t u, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> c(m, 0);
  for (std::uint32_t i = m; i-- > 0;) { c[i] = static_cast<std::uint32_t>(u % p); u /= p; }
  return c;
}

std::mutex g_registry_mutex;
std::map<std::string, FieldPtr> g_field_registry;
std::map<std::pair<const Field*, const Field*>, SubfieldMapPtr> g_map_registry;

std::string field_key(std::uint32_t p, std::uint32_t m, const std::vector<Elem>& modulus) {
  std::ostringstream os;
  os << p << '^' << m << ':';
  for (Elem c : modulus) os << c << ',';
  return os.str();
}

}  // namespace

// --- Field ------------------------------------------------------------------

Elem Field::poly_mul_mod(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  if (p_ == 2) {
    // carryless multiply then reduce by the modulus bit mask
    std::uint64_t acc = 0, x = a;
    for (std::uint32_t i = 0; i < m_; ++i)
      if (b >> i & 1u) acc ^= x << i;
    std::uint64_t mod_mask = 0;
    for (std::uint32_t i = 0; i <= m_; ++i)
      if (modulus_[i]) mod_mask |= 1ull << i;
    for (std::uint32_t bit = 2 * m_ - 1; bit >= m_; --bit)
      if (acc >> bit & 1u) acc ^= mod_mask << (bit - m_);
    return static_cast<Elem>(acc);
  }
  std::vector<std::uint32_t> da = coeffs(a), db = coeffs(b);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  }
  PPoly r = pp_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

void Field::build(std::uint32_t p, std::uint32_t m, std::optional<std::vector<Elem>> modulus,
                  std::uint64_t order_cap) {
  if (!nt::is_prime(p)) throw std::invalid_argument("field_create: p is not prime");
  if (m < 1) throw std::invalid_argument("field_create: m must be >= 1");
  std::uint64_t q = nt::pow_capped(p, m, order_cap);
  if (q > order_cap)
    throw std::invalid_argument("field_create: field order exceeds the configured cap");
  p_ = p;
  m_ = m;
  q_ = q;

  pow_p_.resize(m_ + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  if (modulus) {
    modulus_ = *modulus;
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
      throw std::invalid_argument("field_create: modulus must be monic of degree m");
    for (Elem c : modulus_)
      if (c >= p_) throw std::invalid_argument("field_create: modulus coefficient out of range");
    if (!pp_is_irreducible(modulus_, p_))
      throw std::invalid_argument("field_create: modulus is reducible");
  } else {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
    for (std::uint64_t u = 0; u < count; ++u) {
      PPoly cand = lex_digits(u, p_, m_);
      cand.push_back(1);
      if (pp_is_irreducible(cand, p_)) { modulus_ = cand; break; }
    }
    if (modulus_.empty()) throw std::logic_error("field_create: no irreducible modulus found");
  }

  // Designated generator: lexicographically smallest element of order q - 1.
  auto bare_pow = [&](Elem a, std::uint64_t e) {
    Elem acc = 1, base = a;
    while (e) {
      if (e & 1) acc = poly_mul_mod(acc, base);
      base = poly_mul_mod(base, base);
      e >>= 1;
    }
    return acc;
  };
  const std::uint64_t group = q_ - 1;
  auto primes = nt::distinct_prime_factors(group);
  gen_ = 0;
  for (std::uint64_t u = 0; u < q_ && gen_ == 0; ++u) {
    Elem cand = from_coeffs(lex_digits(u, p_, m_));
    if (cand == 0) continue;
    if (group > 1 && bare_pow(cand, group) != 1) throw std::logic_error("element order exceeds group");
    bool full = true;
    for (std::uint64_t ell : primes)
      if (bare_pow(cand, group / ell) == 1) { full = false; break; }
    if (full) gen_ = cand;
  }
  if (gen_ == 0) throw std::logic_error("field_create: no generator found");

  exp_.assign(group, 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    if (seen[cur]) throw std::logic_error("field_create: generator order too small");
    seen[cur] = true;
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = poly_mul_mod(cur, gen_);
  }
  if (cur != 1) throw std::logic_error("field_create: generator does not close the cycle");
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m, std::optional<std::vector<Elem>> modulus,
                       std::uint64_t order_cap) {
  const std::string lookup_key =
      modulus ? field_key(p, m, *modulus) : field_key(p, m, {/*default*/});
  {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = g_field_registry.find(lookup_key);
    if (it != g_field_registry.end()) return it->second;
  }
  std::shared_ptr<Field> fresh(new Field());
  fresh->build(p, m, modulus, order_cap);
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto it = g_field_registry.find(lookup_key);
  if (it != g_field_registry.end()) return it->second;
  g_field_registry.emplace(lookup_key, fresh);
  // An explicit modulus equal to the default should share the instance.
  g_field_registry.emplace(field_key(p, m, fresh->modulus()), fresh);
  return fresh;
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto fac = nt::factorize(q);
  if (fac.size() != 1) throw std::invalid_argument("of_order: not a prime power");
  return create(static_cast<std::uint32_t>(fac[0].first), fac[0].second);
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  Elem out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t da = a / pow_p_[i] % p_, db = b / pow_p_[i] % p_;
    out += (da + db) % p_ * pow_p_[i];
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = a / pow_p_[i] % p_;
    out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = log_[a] + static_cast<std::uint64_t>(log_[b]);
  return exp_[e % (q_ - 1)];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::invalid_argument("inv: zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    return 0;
  }
  std::uint64_t le = static_cast<std::uint64_t>(log_[a]) % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[le];
}

std::uint32_t Field::log_of(Elem a) const {
  if (a == 0) throw std::invalid_argument("log_of: zero");
  return log_[a];
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) out[i] = a / pow_p_[i] % p_;
  return out;
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elem out = 0;
  for (std::uint32_t i = 0; i < m_ && i < c.size(); ++i) {
    if (c[i] >= p_) throw std::invalid_argument("from_coeffs: digit out of range");
    out += c[i] * pow_p_[i];
  }
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  if (m_ == 1)
    os << p_;
  else
    os << p_ << '^' << m_;
  return os.str();
}

// --- FieldElement -----------------------------------------------------------

void FieldElement::check_same(const FieldElement& o) const {
  if (field_.get() != o.field_.get())
    throw std::invalid_argument("field mismatch: explicit embedding required");
}

FieldElement FieldElement::bin(const FieldElement& o, Elem (Field::*op)(Elem, Elem) const) const {
  check_same(o);
  return {field_, (field_.get()->*op)(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return code_ == o.code_;
}

// --- SubfieldMap ------------------------------------------------------------

SubfieldMap::SubfieldMap(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p())
    throw std::invalid_argument("subfield_map: different characteristic");
  if (big_->m() % small_->m() != 0)
    throw std::invalid_argument("subfield_map: small degree does not divide big degree");
  if (small_->m() == big_->m() && small_.get() != big_.get())
    throw std::invalid_argument("subfield_map: equal-size fields must be the same instance");
  steps_ = big_->m() / small_->m();

  const std::uint64_t qs = small_->order(), Q = big_->order();
  emb_.assign(qs, 0);
  inv_.assign(Q, -1);

  if (steps_ == 1) {
    for (std::uint64_t c = 0; c < qs; ++c) {
      emb_[c] = static_cast<Elem>(c);
      inv_[c] = static_cast<std::int32_t>(c);
    }
    return;
  }

  if (small_->m() == 1) {
    // Prime subfield: c -> c * 1.
    Elem acc = 0;
    for (std::uint64_t c = 0; c < qs; ++c) {
      emb_[c] = acc;
      acc = big_->add(acc, 1);
    }
  } else {
    // Map the small generator to the lexicographically smallest root of its
    // minimal polynomial inside the subgroup of order qs - 1.
    std::vector<Elem> minpoly{1};  // over GF(p), but tracked in the small field
    Elem conj = small_->generator();
    for (std::uint32_t i = 0; i < small_->m(); ++i) {
      // multiply by (x - conj)
      std::vector<Elem> next(minpoly.size() + 1, 0);
      for (std::size_t j = 0; j < minpoly.size(); ++j) {
        next[j + 1] = small_->add(next[j + 1], minpoly[j]);
        next[j] = small_->sub(next[j], small_->mul(conj, minpoly[j]));
      }
      minpoly = std::move(next);
      conj = small_->pow(conj, small_->p());
    }
    for (Elem c : minpoly)
      if (c >= small_->p()) throw std::logic_error("subfield_map: minimal polynomial not over GF(p)");

    const Elem h0 = big_->exp_of((Q - 1) / (qs - 1));
    Elem root = 0;
    bool have_root = false;
    Elem cand = 1;
    for (std::uint64_t k = 0; k < qs - 1; ++k) {
      Elem val = 0;
      for (std::size_t j = minpoly.size(); j-- > 0;)
        val = big_->add(big_->mul(val, cand), big_->from_int(minpoly[j]));
      if (val == 0 && (!have_root || cand < root)) {
        root = cand;
        have_root = true;
      }
      cand = big_->mul(cand, h0);
    }
    if (!have_root) throw std::logic_error("subfield_map: no root of minimal polynomial");

    emb_[0] = 0;
    const std::uint64_t rlog = big_->log_of(root);
    for (std::uint64_t j = 0; j < qs - 1; ++j)
      emb_[small_->exp_of(j)] = big_->exp_of(rlog % (Q - 1) * (j % (Q - 1)) % (Q - 1));
  }

  for (std::uint64_t c = 0; c < qs; ++c) {
    if (inv_[emb_[c]] >= 0) throw std::logic_error("subfield_map: embedding not injective");
    inv_[emb_[c]] = static_cast<std::int32_t>(c);
  }
  if (emb_[1] != 1) throw std::logic_error("subfield_map: embedding does not fix 1");

  // Ring-homomorphism spot check: multiplicativity holds by construction,
  // additivity is verified exhaustively for small fields.
  if (qs <= 1024) {
    for (std::uint64_t a = 0; a < qs; ++a)
      for (std::uint64_t b = a; b < qs; ++b)
        if (emb_[small_->add(static_cast<Elem>(a), static_cast<Elem>(b))] !=
            big_->add(emb_[a], emb_[b]))
          throw std::logic_error("subfield_map: embedding is not additive");
  }
}

Elem SubfieldMap::project(Elem big_code) const {
  std::int32_t v = inv_[big_code];
  if (v < 0) throw std::invalid_argument("project: element not in the subfield");
  return static_cast<Elem>(v);
}

Elem SubfieldMap::trace(Elem x) const {
  if (steps_ == 1) return x;
  if (x == 0) return 0;
  const std::uint64_t Q = big_->order(), qs = small_->order();
  std::uint64_t e = big_->log_of(x);
  Elem acc = 0;
  std::uint64_t cur = e;
  for (std::uint32_t i = 0; i < steps_; ++i) {
    acc = big_->add(acc, big_->exp_of(cur));
    cur = cur % (Q - 1) * (qs % (Q - 1)) % (Q - 1);
  }
  return project(acc);
}

std::vector<Elem> SubfieldMap::trace(const std::vector<Elem>& big_vec) const {
  std::vector<Elem> out(big_vec.size());
  for (std::size_t i = 0; i < big_vec.size(); ++i) out[i] = trace(big_vec[i]);
  return out;
}

SubfieldMapPtr subfield_map(const FieldPtr& small, const FieldPtr& big) {
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto key = std::make_pair(small.get(), big.get());
  auto it = g_map_registry.find(key);
  if (it != g_map_registry.end()) return it->second;
  auto map = std::make_shared<const SubfieldMap>(small, big);
  g_map_registry.emplace(key, map);
  return map;
}

// --- free operations ---------------------------------------------------------

FieldElement root_of_unity(const FieldPtr& f, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  const std::uint64_t group = f->order() - 1;
  if (group % n != 0)
    throw std::invalid_argument("root_of_unity: n does not divide q - 1");
  Elem a = f->exp_of(group / n);
  // order check: alpha^n = 1 and alpha^(n/ell) != 1 for prime ell | n
  if (f->pow(a, n) != 1) throw std::logic_error("root_of_unity: not an n-th root");
  for (std::uint64_t ell : nt::distinct_prime_factors(n))
    if (f->pow(a, n / ell) == 1) throw std::logic_error("root_of_unity: order below n");
  return {f, a};
}

FieldElement geometric_root_sum(const FieldElement& alpha, std::uint64_t n) {
  const auto& f = alpha.field();
  if (n == 0) throw std::invalid_argument("geometric_root_sum: n must be positive");
  if (f->pow(alpha.code(), n) != 1)
    throw std::invalid_argument("geometric_root_sum: alpha is not an n-th root of unity");
  if (alpha.code() == 1) return {f, f->from_int(n)};
  return {f, 0};
}

FieldElement trace(const SubfieldMap& map, const FieldElement& x) {
  if (x.field().get() != map.big().get())
    throw std::invalid_argument("trace: element not in the big field of the map");
  return {map.small(), map.trace(x.code())};
}

// --- Poly --------------------------------------------------------------------

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::x_power(FieldPtr f, std::size_t deg, Elem c) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return {std::move(f), std::move(v)};
}

Poly Poly::xn_minus_one(FieldPtr f, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[0] = f->neg(1);
  v[n] = 1;
  return {std::move(f), std::move(v)};
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elem> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
  return {field_, std::move(v)};
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elem> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
  return {field_, std::move(v)};
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = field_->add(v[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  return {field_, std::move(v)};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  Poly rem = *this;
  if (degree() < o.degree()) return {Poly(field_), rem};
  std::vector<Elem> quot(degree() - o.degree() + 1, 0);
  const Elem lead_inv = field_->inv(o.coeffs_.back());
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    std::size_t shift = rem.degree() - o.degree();
    Elem c = field_->mul(rem.coeffs_.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] = field_->sub(rem.coeffs_[shift + i], field_->mul(c, o.coeffs_[i]));
    rem.trim();
  }
  return {Poly(field_, std::move(quot)), rem};
}

bool Poly::divides(const Poly& dividend) const {
  return dividend.divmod(*this).second.is_zero();
}

bool Poly::operator==(const Poly& o) const {
  return field_.get() == o.field_.get() && coeffs_ == o.coeffs_;
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

std::size_t Poly::weight() const {
  std::size_t w = 0;
  for (Elem c : coeffs_)
    if (c != 0) ++w;
  return w;
}

}  // namespace cyclrc::gf
