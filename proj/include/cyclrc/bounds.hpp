#ifndef CYCLRC_BOUNDS_HPP
#define CYCLRC_BOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cyclrc::bounds {

/// d <= n - k - ceil(k/r) + 2 for (n, k, r) LRC codes; returns the bound on d.
long long singleton_like(std::uint64_t n, std::uint64_t k, std::uint64_t r);

/// Largest k whose Singleton-like d-bound is still >= d (0 if none).
std::uint64_t singleton_k_max(std::uint64_t n, std::uint64_t d, std::uint64_t r);

/// Table of best-known k_q(n, d) values; unknown triples fall back to the
/// analytic bound. CSV format: header "q,n,d,k", one entry per line.
class KqTable {
 public:
  KqTable() = default;
  static KqTable load_csv(const std::string& path);

  void insert(std::uint64_t q, std::uint64_t n, std::uint64_t d, long long k);
  std::optional<long long> lookup(std::uint64_t q, std::uint64_t n, std::uint64_t d) const;
  std::size_t size() const { return entries_.size(); }

 private:
  void validate_monotone() const;
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, long long> entries_;
};

/// Upper bound on the dimension of a q-ary [n, ., d] linear code: a user
/// table entry when available, otherwise even-distance reduction plus the
/// sphere-packing bound.
long long kq_upper(std::uint64_t q, std::uint64_t n, std::uint64_t d,
                   const KqTable* table = nullptr);

struct ShorteningBound {
  long long k_bound = 0;
  std::uint64_t t_min = 0;                                  // minimizing t
  std::vector<std::pair<std::uint64_t, long long>> terms;   // (t, t*r + k_q(...))
};

/// min over t = 1..floor(n/(r+1)) of t*r + k_q(n - t(r+1), d).
ShorteningBound shortening_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d,
                                 std::uint64_t r, const KqTable* table = nullptr);

/// Krawtchouk polynomial value K_k(x) for parameters (n, q), exact.
mpz_class krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t k, std::uint64_t x);

struct LpBound {
  bool feasible = true;
  mpq_class optimum;      // max sum a_i
  mpq_class cardinality;  // 1 + optimum
  double log_q = 0.0;     // log base q of the cardinality
  long long k_bound = 0;  // floor(log_q cardinality)
};

/// Delsarte-style linear programming bound on the cardinality of a q-ary
/// cyclic code of length n, distance d, locality r, solved with an exact
/// rational simplex (Bland's rule). Throws std::logic_error if the LP is
/// unbounded, which cannot happen for valid inputs.
LpBound lp_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t r);

}  // namespace cyclrc::bounds

#endif  // CYCLRC_BOUNDS_HPP
