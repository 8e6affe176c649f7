#include "cyclrc/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclrc::bounds {

long long singleton_like(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  if (!(1 <= r && r <= k && k <= n))
    throw std::invalid_argument("singleton_like: need 1 <= r <= k <= n");
  const std::uint64_t ceil_kr = (k + r - 1) / r;
  return static_cast<long long>(n) - static_cast<long long>(k) -
         static_cast<long long>(ceil_kr) + 2;
}

std::uint64_t singleton_k_max(std::uint64_t n, std::uint64_t d, std::uint64_t r) {
  std::uint64_t best = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (r > k) {
      // r <= k required by the bound; small k with r > k still satisfies the
      // classical Singleton bound d <= n - k + 1
      if (d <= n - k + 1) best = k;
      continue;
    }
    if (singleton_like(n, k, r) >= static_cast<long long>(d)) best = k;
  }
  return best;
}

KqTable KqTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("kq table: cannot open " + path);
  KqTable t;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      if (cells.size() != 4 || cells[0] != "q" || cells[1] != "n" || cells[2] != "d" ||
          cells[3] != "k")
        throw std::invalid_argument("kq table: expected header q,n,d,k");
      first = false;
      continue;
    }
    if (cells.size() != 4)
      throw std::invalid_argument("kq table: bad row at line " + std::to_string(lineno));
    t.insert(std::stoull(cells[0]), std::stoull(cells[1]), std::stoull(cells[2]),
             std::stoll(cells[3]));
  }
  t.validate_monotone();
  return t;
}

void KqTable::insert(std::uint64_t q, std::uint64_t n, std::uint64_t d, long long k) {
  entries_[{q, n, d}] = k;
}

std::optional<long long> KqTable::lookup(std::uint64_t q, std::uint64_t n,
                                         std::uint64_t d) const {
  auto it = entries_.find({q, n, d});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KqTable::validate_monotone() const {
  for (const auto& [key, k] : entries_) {
    auto [q, n, d] = key;
    auto right = entries_.find({q, n + 1, d});
    if (right != entries_.end() && k > right->second)
      throw std::invalid_argument("kq table: k(n, d) > k(n+1, d)");
    auto down = entries_.find({q, n, d + 1});
    if (down != entries_.end() && k < down->second)
      throw std::invalid_argument("kq table: k(n, d) < k(n, d+1)");
  }
}

long long kq_upper(std::uint64_t q, std::uint64_t n, std::uint64_t d, const KqTable* table) {
  if (d < 1) throw std::invalid_argument("kq_upper: d must be >= 1");
  if (table) {
    if (auto v = table->lookup(q, n, d)) return *v;
  }
  if (n == 0 || d > n) return 0;
  if (d % 2 == 0) return kq_upper(q, n - 1, d - 1, table);
  // sphere packing with e = (d-1)/2
  const std::uint64_t e = (d - 1) / 2;
  mpz_class ball = 0, binom, qm1pow = 1;
  for (std::uint64_t i = 0; i <= e; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    ball += binom * qm1pow;
    qm1pow *= static_cast<unsigned long>(q - 1);
  }
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  long long k = 0;
  mpz_class lhs = ball;
  while (k < static_cast<long long>(n)) {
    lhs *= static_cast<unsigned long>(q);
    if (lhs > qn) break;
    ++k;
  }
  return k;
}

ShorteningBound shortening_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d,
                                 std::uint64_t r, const KqTable* table) {
  if (r + 1 > n) throw std::invalid_argument("shortening_bound: need r + 1 <= n");
  ShorteningBound out;
  const std::uint64_t nu = n / (r + 1);
  long long best = -1;
  for (std::uint64_t t = 1; t <= nu; ++t) {
    const std::uint64_t rem = n - t * (r + 1);
    long long term = static_cast<long long>(t * r) + kq_upper(q, rem, d, table);
    out.terms.emplace_back(t, term);
    if (best < 0 || term < best) {
      best = term;
      out.t_min = t;
    }
  }
  out.k_bound = best;
  return out;
}

mpz_class krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t k, std::uint64_t x) {
  if (k > n || x > n) throw std::invalid_argument("krawtchouk: need k, x <= n");
  mpz_class sum = 0, c1, c2, pw;
  for (std::uint64_t j = 0; j <= k; ++j) {
    if (j > x || k - j > n - x) continue;
    mpz_bin_uiui(c1.get_mpz_t(), x, j);
    mpz_bin_uiui(c2.get_mpz_t(), n - x, k - j);
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q - 1),
                  static_cast<unsigned long>(k - j));
    mpz_class term = c1 * c2 * pw;
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

// Dense exact-rational simplex, Bland's rule for both the entering and the
// leaving variable, so it terminates without cycling.
class Simplex {
 public:
  Simplex(std::size_t rows, std::size_t vars)
      : m_(rows), n_(vars), a_(rows, std::vector<mpq_class>(vars, 0)), rhs_(rows, 0),
        basis_(rows, SIZE_MAX) {}

  std::vector<mpq_class>& row(std::size_t i) { return a_[i]; }
  mpq_class& rhs(std::size_t i) { return rhs_[i]; }
  void set_basis(std::size_t i, std::size_t var) { basis_[i] = var; }

  struct Outcome {
    bool bounded = true;
    mpq_class value;
  };

  // Maximizes obj over the current feasible tableau. `allowed[j]` masks
  // columns out of the pricing step (used to retire artificials).
  Outcome maximize(const std::vector<mpq_class>& obj, const std::vector<bool>& allowed) {
    while (true) {
      // reduced costs: rc_j = obj_j - sum_i obj_basis[i] * a[i][j]
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        mpq_class rc = obj[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (obj[basis_[i]] != 0 && a_[i][j] != 0) rc -= obj[basis_[i]] * a_[i][j];
        }
        if (rc > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter == SIZE_MAX) break;
      std::size_t leave = SIZE_MAX;
      mpq_class best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        mpq_class ratio = rhs_[i] / a_[i][enter];
        if (leave == SIZE_MAX || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == SIZE_MAX) return {false, 0};
      pivot(leave, enter);
    }
    Outcome out;
    out.bounded = true;
    out.value = 0;
    for (std::size_t i = 0; i < m_; ++i) out.value += obj[basis_[i]] * rhs_[i];
    return out;
  }

  bool is_basic(std::size_t var) const {
    return std::find(basis_.begin(), basis_.end(), var) != basis_.end();
  }

  // Pivots artificial variables out of the basis; drops rows that turn out
  // redundant. Returns false if an artificial remains basic at nonzero value.
  bool retire_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial) continue;
      if (rhs_[i] != 0) return false;
      std::size_t piv = SIZE_MAX;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (a_[i][j] != 0) { piv = j; break; }
      if (piv == SIZE_MAX) {
        // redundant constraint
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
        --i;
        continue;
      }
      pivot(i, piv);
    }
    return true;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / a_[r][c];
    for (auto& v : a_[r]) v *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      mpq_class f = a_[i][c];
      for (std::size_t j = 0; j < n_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      a_[i][c] = 0;
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpBound lp_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t r) {
  if (d < 1 || d > n) throw std::invalid_argument("lp_bound: need 1 <= d <= n");
  if (r + 1 > n) throw std::invalid_argument("lp_bound: need r + 1 <= n");

  const std::size_t na = static_cast<std::size_t>(n - d + 1);  // a_d .. a_n
  const std::size_t n_eq = static_cast<std::size_t>(r + 1);    // k = 1..r+1
  const std::size_t n_ineq = static_cast<std::size_t>(n - r - 1);
  const std::size_t rows = n_eq + n_ineq;
  const std::size_t first_slack = na;
  const std::size_t first_art = na + n_ineq;
  const std::size_t vars = na + n_ineq + n_eq;

  // Both constraint families normalize to sum_i (-K_k(i)) a_i {=, <=} B_k
  // with B_k = binom(n, k) (q-1)^k > 0.
  Simplex sx(rows, vars);
  std::size_t row_idx = 0, slack_idx = first_slack, art_idx = first_art;
  for (std::uint64_t k = 1; k <= n; ++k) {
    auto& row = sx.row(row_idx);
    for (std::size_t i = 0; i < na; ++i)
      row[i] = mpq_class(-krawtchouk(n, q, k, d + i));
    mpz_class binom, pw;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q - 1),
                  static_cast<unsigned long>(k));
    sx.rhs(row_idx) = mpq_class(binom * pw);
    if (k <= r + 1) {
      row[art_idx] = 1;
      sx.set_basis(row_idx, art_idx);
      ++art_idx;
    } else {
      row[slack_idx] = 1;
      sx.set_basis(row_idx, slack_idx);
      ++slack_idx;
    }
    ++row_idx;
  }

  LpBound out;

  // Phase 1: maximize minus the artificial sum.
  std::vector<mpq_class> phase1(vars, 0);
  for (std::size_t j = first_art; j < vars; ++j) phase1[j] = -1;
  std::vector<bool> all_cols(vars, true);
  auto p1 = sx.maximize(phase1, all_cols);
  if (!p1.bounded) throw std::logic_error("lp_bound: phase 1 unbounded");
  if (p1.value != 0) {
    out.feasible = false;
    return out;
  }
  if (!sx.retire_artificials(first_art))
    throw std::logic_error("lp_bound: artificial stuck at nonzero value");

  // Phase 2: maximize the a_i sum with artificial columns frozen.
  std::vector<mpq_class> phase2(vars, 0);
  for (std::size_t j = 0; j < na; ++j) phase2[j] = 1;
  std::vector<bool> real_cols(vars, false);
  for (std::size_t j = 0; j < first_art; ++j) real_cols[j] = true;
  auto p2 = sx.maximize(phase2, real_cols);
  if (!p2.bounded)
    throw std::logic_error("lp_bound: unbounded LP; the model admits arbitrarily large codes");

  out.feasible = true;
  out.optimum = p2.value;
  out.cardinality = 1 + out.optimum;
  out.log_q = std::log(mpq_get_d(out.cardinality.get_mpq_t())) / std::log(static_cast<double>(q));
  // exact floor(log_q M)
  long long k = 0;
  mpz_class qpow = 1;
  while (true) {
    qpow *= static_cast<unsigned long>(q);
    if (mpq_class(qpow) > out.cardinality) break;
    ++k;
    if (k > static_cast<long long>(n) + 1) break;
  }
  out.k_bound = k;
  return out;
}

}  // namespace cyclrc::bounds
