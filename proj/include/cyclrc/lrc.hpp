#ifndef CYCLRC_LRC_HPP
#define CYCLRC_LRC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclrc/cyclic.hpp"
#include "cyclrc/gf.hpp"
#include "cyclrc/linalg.hpp"

namespace cyclrc::lrc {

struct LrcParams {
  std::uint64_t n = 0, k = 0, r = 0;
  std::uint64_t nu = 0;  // n / (r+1)
  std::uint64_t mu = 0;  // k / r

  /// Validates (r+1) | n, r | k and mu <= nu.
  static LrcParams make(std::uint64_t n, std::uint64_t k, std::uint64_t r);
};

/// One recovering set: the helper coordinates and the dual vector (over
/// `coeff_field`, possibly the locator field) whose support is
/// {target} + helpers.
struct RecoveringSet {
  std::uint32_t target = 0;
  std::vector<std::uint32_t> helpers;
  gf::FieldPtr coeff_field;
  gf::SubfieldMapPtr embed;  // symbol -> coeff_field; null when identical
  std::vector<std::pair<std::uint32_t, gf::Elem>> dual_vector;  // (position, coefficient)
};

/// Solves the recovering set's single linear equation for the erased target
/// symbol; `word` is the codeword over the symbol field.
gf::Elem recover_symbol(const RecoveringSet& rs, const std::vector<gf::Elem>& word);

struct Certificate {
  std::string prop;  // "3.4", "4.4", "4.6", "4.8"
  std::map<std::string, long long> params;
};

struct LocalityReport {
  bool dual_exists = true;  // false for the full space, where locality is undefined
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> dual_distance;
  std::vector<RecoveringSet> recovering_sets;  // one per coordinate
  std::optional<std::uint64_t> w;
  std::vector<Certificate> certificates;
};

struct RsLikeResult {
  linalg::LinearCode evaluation_code;
  cyclic::CyclicCode cyclic_code;
  LrcParams params;
};

/// The RS-like evaluation construction for n | q-1, together with the
/// equivalent cyclic code from its zero set; the two row spaces are checked
/// for equality, and with `verify` the distance n - k(r+1)/r + 2 and the
/// exact locality r are brute-forced.
RsLikeResult rs_like_construct(std::uint64_t q, std::uint64_t n, std::uint64_t k, std::uint64_t r,
                               bool verify = true, const linalg::SearchLimits& limits = {});

/// Optimal cyclic LRC code with defining set L union D, where
/// L = {i : i = l mod (r+1)} and D = {j + s*b mod n : s = 0..n - mu(r+1)}.
cyclic::CyclicCode thm31_construct(std::uint64_t q, std::uint64_t n, std::uint64_t k,
                                   std::uint64_t r, std::uint64_t l, std::uint64_t b,
                                   std::optional<std::uint64_t> j = std::nullopt,
                                   bool verify = true, const linalg::SearchLimits& limits = {});

/// Exact locality r = d(dual) - 1 for a cyclic code, with one recovering-set
/// witness per coordinate obtained by shift transitivity.
LocalityReport locality_exact(const cyclic::CyclicCode& c, const linalg::SearchLimits& limits = {});

/// Exact locality of a general linear code: per-coordinate minimum dual
/// weights, reporting max_i r_i.
LocalityReport locality_exact_linear(const linalg::LinearCode& c,
                                     const linalg::SearchLimits& limits = {});

/// True when {i : i = l mod modulus} is contained in the complete defining set.
bool has_coset(const cyclic::CyclicCode& c, std::uint64_t modulus, std::uint64_t l);

struct Prop34Certificate {
  std::uint64_t l = 0;
  std::uint64_t s = 0;                  // r + 1
  std::vector<std::uint32_t> coset;     // the contained coset of exponents
  std::vector<gf::Elem> v;              // weight-(r+1) dual vector over the locator
};

/// Finds l with {i : i = l mod (r+1)} inside the complete defining set; when
/// found, materializes the weight-(r+1) vector v, checks that all its cyclic
/// shifts are dual to the code and that their supports partition the
/// coordinates.
std::optional<Prop34Certificate> prop34_certificate(const cyclic::CyclicCode& c, std::uint64_t r);

struct TraceRecoverySubspace {
  std::vector<gf::Elem> v;   // length s over the locator: (1, b^l, ..., b^(rl))
  linalg::LinearCode V;      // trace span over the symbol field, length s
  std::uint64_t l = 0, s = 0;
  std::uint64_t t = 0;       // multiplicative order of beta^l
  std::uint64_t copies = 1;  // s / t repetition factor
  std::uint64_t min_weight = 0;
  std::uint64_t locality_bound = 0;  // min_weight - 1
  std::uint64_t w = 0;  // distinct codeword supports through a fixed coordinate
};

/// The subspace V = <T(gamma v)> of the dual of the subfield subcode; every
/// nonzero element, re-expanded on the Eq.-style support pattern and shifted,
/// is checked to be dual to the code.
TraceRecoverySubspace trace_recovery_subspace(const cyclic::CyclicCode& c, std::uint64_t l,
                                              std::uint64_t r);

struct Prop44Result {
  std::uint64_t z = 0;
  std::uint64_t r_bound = 0;  // 2^(z-1) - 1
  std::uint64_t w_bound = 0;  // 2^(z-1)
  TraceRecoverySubspace subspace;
};

/// Binary locality bound from the simplex structure of V for s = 2^z - 1;
/// also checks V computed over the locator equals V computed over GF(2^z).
Prop44Result prop44_bound(const cyclic::CyclicCode& c, std::uint64_t z);

struct Frac {
  long long num = 0;
  long long den = 1;
};

/// d <= s (1 - (q^(m-1) - 1)/(q^m - 1)) as an exact fraction.
Frac prop45_irreducible_distance_bound(std::uint64_t s, std::uint64_t m, std::uint64_t q);

/// Strict locality bound r < s (1 - (q^(m-1) - 1)/(q^m - 1)); returns the
/// largest admissible r.
std::uint64_t prop46_locality_bound(const cyclic::CyclicCode& c, std::uint64_t s);

struct Prop48Result {
  std::uint64_t m = 0;
  std::uint64_t big_n = 0;        // N = (3^m - 1)/t
  std::uint64_t lower_weight = 0; // 2(3^m - 3^(m/2))/(3N)
  std::uint64_t upper_weight = 0;
  std::uint64_t set_size = 0;     // lower_weight - 1
  std::uint64_t set_count = 0;    // per-coordinate count of lower-weight words
  std::uint64_t dual_distance_bound = 0;
};

/// Ternary recovering-set report from the two-weight irreducible subspace.
Prop48Result prop48_ternary_report(const cyclic::CyclicCode& c, std::uint64_t t);

struct SupportIntersection {
  std::uint64_t exact = 0;  // #solutions x of x.u_i = 1 for all i
  std::uint64_t bound = 0;  // 2^(z - rk)
  std::uint32_t rank = 0;
  bool consistent = true;
};

/// Exact size of the intersection of simplex-codeword supports described by
/// the vectors u_i in GF(2)^z (given as bit masks).
SupportIntersection support_intersection(std::uint32_t z, const std::vector<std::uint64_t>& u_list);

struct RecoveryPartition {
  std::uint64_t nu = 0;        // number of sets
  std::uint64_t set_size = 0;  // n / nu
  std::uint64_t l = 0;
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<std::vector<gf::Elem>> dual_vectors;  // over the locator, one per set
};

/// One recovery partition per divisor nu whose coset lies in the defining
/// set; for pairwise-coprime divisors the per-symbol recovering sets of
/// different partitions are checked to meet only in that symbol.
std::vector<RecoveryPartition> multiple_recovery_partitions(const cyclic::CyclicCode& c,
                                                            const std::vector<std::uint64_t>& divisors);

}  // namespace cyclrc::lrc

#endif  // CYCLRC_LRC_HPP
