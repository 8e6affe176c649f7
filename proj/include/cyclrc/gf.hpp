#ifndef CYCLRC_GF_HPP
#define CYCLRC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclrc::gf {

/// Element of a finite field, stored as the integer code sum c_i * p^i of its
/// coefficient vector (c_0, ..., c_{m-1}) over GF(p).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace nt {

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Multiplicative order of q modulo n; requires gcd(q, n) = 1.
std::uint64_t mul_order_mod(std::uint64_t q, std::uint64_t n);

/// min(q^k, cap + 1) without overflow; handy for budget checks.
std::uint64_t pow_capped(std::uint64_t q, std::uint64_t k, std::uint64_t cap);

}  // namespace nt

/// A finite field GF(p^m) with p prime, m >= 1 and p^m bounded by a memory
/// cap (default 2^20). The modulus is the lexicographically smallest monic
/// irreducible polynomial of degree m over GF(p) unless supplied explicitly;
/// the designated generator is the lexicographically smallest element of full
/// multiplicative order. Both comparisons read coefficient vectors
/// low-degree-first, so constructions are deterministic.
///
/// Multiplication runs on discrete-log tables; fields and tables are
/// immutable after construction and safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr std::uint64_t kDefaultOrderCap = 1ull << 20;

  /// Returns the cached field for (p, m, modulus); constructs it on first use.
  static FieldPtr create(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<Elem>> modulus = std::nullopt,
                         std::uint64_t order_cap = kDefaultOrderCap);

  /// Factors q as p^m and returns create(p, m). Rejects non-prime-powers.
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t order() const { return q_; }
  /// Modulus coefficients, low degree first, length m+1, monic.
  const std::vector<Elem>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// generator^i (i taken mod q-1).
  Elem exp_of(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
  /// Discrete log w.r.t. the generator; throws on 0.
  std::uint32_t log_of(Elem a) const;

  /// Image of the integer c under the prime-subfield map (c mod p copies of 1).
  Elem from_int(std::uint64_t c) const { return static_cast<Elem>(c % p_); }

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

  std::string name() const;  // "2^12" style

 private:
  Field() = default;
  void build(std::uint32_t p, std::uint32_t m, std::optional<std::vector<Elem>> modulus,
             std::uint64_t order_cap);
  Elem poly_mul_mod(Elem a, Elem b) const;  // table-free bootstrap multiply

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Elem> modulus_;
  Elem gen_ = 0;
  std::vector<Elem> exp_;          // size q-1
  std::vector<std::uint32_t> log_; // size q, log_[0] unused
  std::vector<Elem> pow_p_;        // p^i codes for digit decompose
};

/// Typed field element; arithmetic between elements of different Field
/// instances is rejected, including isomorphic fields built with different
/// moduli.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr f, Elem code) : field_(std::move(f)), code_(code) {}

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }

  FieldElement operator+(const FieldElement& o) const { return bin(o, &Field::add); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, &Field::sub); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, &Field::mul); }
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

 private:
  FieldElement bin(const FieldElement& o, Elem (Field::*op)(Elem, Elem) const) const;
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem code_ = 0;
};

/// Embedding GF(p^a) -> GF(p^A) with a | A, plus the trace back down.
/// The embedding sends the small field's generator to a deterministic root of
/// its minimal polynomial inside the big field, which makes it a ring
/// homomorphism (spot-checked exhaustively at construction for small fields).
class SubfieldMap {
 public:
  SubfieldMap(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  /// Extension degree [big : small].
  std::uint32_t steps() const { return steps_; }

  Elem embed(Elem small_code) const { return emb_[small_code]; }
  bool in_subfield(Elem big_code) const { return inv_[big_code] >= 0; }
  /// Preimage under the embedding; throws if big_code is not in the image.
  Elem project(Elem big_code) const;

  /// Trace T(x) = x + x^Q + ... + x^(Q^(steps-1)) with Q = |small|, mapped
  /// into the small field.
  Elem trace(Elem big_code) const;

  std::vector<Elem> trace(const std::vector<Elem>& big_vec) const;

 private:
  FieldPtr small_, big_;
  std::uint32_t steps_ = 0;
  std::vector<Elem> emb_;
  std::vector<std::int32_t> inv_;
};

using SubfieldMapPtr = std::shared_ptr<const SubfieldMap>;

/// Cached map between two registered fields.
SubfieldMapPtr subfield_map(const FieldPtr& small, const FieldPtr& big);

/// The deterministic primitive n-th root of unity g^((q-1)/n); requires
/// n | q - 1.
FieldElement root_of_unity(const FieldPtr& f, std::uint64_t n);

/// Sum of the geometric series 1 + alpha + ... + alpha^(n-1) for alpha with
/// alpha^n = 1: equals n mod p if alpha = 1 and 0 otherwise.
FieldElement geometric_root_sum(const FieldElement& alpha, std::uint64_t n);

FieldElement trace(const SubfieldMap& map, const FieldElement& x);

/// Dense univariate polynomial over a field, coefficients low degree first.
class Poly {
 public:
  explicit Poly(FieldPtr f) : field_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Elem> coeffs);

  static Poly one(FieldPtr f) { return {std::move(f), {1}}; }
  static Poly x_power(FieldPtr f, std::size_t deg, Elem c = 1);
  /// x^n - 1.
  static Poly xn_minus_one(FieldPtr f, std::size_t n);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  bool divides(const Poly& dividend) const;
  bool operator==(const Poly& o) const;

  Elem eval(Elem x) const;
  std::size_t weight() const;  // number of nonzero coefficients

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

}  // namespace cyclrc::gf

#endif  // CYCLRC_GF_HPP
