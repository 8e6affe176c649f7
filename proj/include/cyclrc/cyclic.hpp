#ifndef CYCLRC_CYCLIC_HPP
#define CYCLRC_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclrc/gf.hpp"
#include "cyclrc/linalg.hpp"

namespace cyclrc::cyclic {

/// Set of zero exponents of a cyclic code of length n over a field of order
/// q. `complete` means closed under multiplication by q mod n.
struct DefiningSet {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> exponents;  // sorted, unique, < n
  bool complete = false;

  bool contains(std::uint32_t e) const;
};

/// Orbits of {0..n-1} under multiplication by q mod n, each sorted with the
/// smallest member first; orbits ordered by representative.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t n, std::uint64_t q);

/// Smallest Frobenius-closed superset of the seeds.
DefiningSet complete_defining_set(std::vector<std::uint32_t> seeds, std::uint64_t n, std::uint64_t q);

/// Smallest member of each coset represented in a complete set.
std::vector<std::uint32_t> coset_representatives(const DefiningSet& z);

/// Defining set of the dual code: negate the complement mod n.
DefiningSet dual_defining_set(const DefiningSet& z);

struct CyclicCode {
  gf::FieldPtr symbol;
  gf::FieldPtr locator;          // GF(q^m), m = ord_n(q)
  gf::SubfieldMapPtr embedding;  // symbol -> locator
  std::uint64_t n = 0;
  gf::Elem alpha = 0;            // primitive n-th root of unity in the locator
  std::vector<std::uint32_t> seeds;
  DefiningSet zeros;             // complete
  gf::Poly generator_poly;       // over the symbol field
  linalg::LinearCode code;

  std::size_t k() const { return code.k(); }
};

/// Cyclic code over `symbol` with the given zero exponents (completed
/// automatically). g(x) is the product of the minimal polynomials of the
/// alpha^i over the symbol field.
CyclicCode code_from_zeros(const gf::FieldPtr& symbol, std::uint64_t n,
                           std::vector<std::uint32_t> seeds);

/// 1 + length of the longest arithmetic progression mod n (step coprime to n)
/// inside the exponent set; a lower bound on the minimum distance.
std::uint32_t bch_bound(const DefiningSet& z);

/// The dual as a cyclic code, via the negated-complement defining set.
CyclicCode dual_cyclic(const CyclicCode& c);

/// Subfield subcode over the field of order target_q. Computes both the
/// vector-filter definition and the closure-of-defining-set construction and
/// requires them to agree.
CyclicCode subfield_subcode(const CyclicCode& c, std::uint64_t target_q);

/// Trace image of a code over the big field of `map`, as a code over the
/// small field.
linalg::LinearCode trace_code(const linalg::LinearCode& big_code, const gf::SubfieldMap& map);

/// GF(q)-span of {T(gamma * v) : gamma in the big field} for a fixed vector v
/// over the big field.
linalg::LinearCode trace_span(const gf::SubfieldMap& map, const std::vector<gf::Elem>& v);

/// The [s, ord_s(q)] irreducible cyclic code (T(gamma beta^i))_i, with an
/// optional beta of order t | s giving s/t concatenated repetitions of the
/// length-t code.
linalg::LinearCode irreducible_code(std::uint64_t q, std::uint64_t s,
                                    std::optional<std::uint64_t> beta_order = std::nullopt);

/// Right cyclic shift by `shift` positions.
std::vector<gf::Elem> cyclic_shift(const std::vector<gf::Elem>& v, std::size_t shift);

}  // namespace cyclrc::cyclic

#endif  // CYCLRC_CYCLIC_HPP
