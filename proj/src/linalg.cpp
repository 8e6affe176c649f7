#include "cyclrc/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <thread>

namespace cyclrc::linalg {

namespace {

std::uint64_t code_size_capped(const LinearCode& c, std::uint64_t cap) {
  return gf::nt::pow_capped(c.field()->order(), c.k(), cap);
}

// Lexicographic order on binary message vectors (m_0, ..., m_{k-1}) packed as
// bit i of an integer.
bool bit_msg_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  int j = std::countr_zero(a ^ b);
  return (a >> j & 1u) == 0;
}

struct PackedRows {
  std::size_t words;
  std::vector<std::uint64_t> rows;  // k * words
};

PackedRows pack_binary(const LinearCode& c) {
  PackedRows p;
  p.words = (c.n() + 63) / 64;
  p.rows.assign(c.k() * p.words, 0);
  for (std::size_t r = 0; r < c.k(); ++r)
    for (std::size_t j = 0; j < c.n(); ++j)
      if (c.generator().at(r, j)) p.rows[r * p.words + j / 64] |= 1ull << (j % 64);
  return p;
}

std::vector<Elem> unpack_word(const std::vector<std::uint64_t>& w, std::size_t n) {
  std::vector<Elem> out(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (w[j / 64] >> (j % 64) & 1u) out[j] = 1;
  return out;
}

// Visits gray(t) for t in [lo, hi); the visitor sees the packed codeword and
// the Gray-coded message bits.
template <class Visit>
void binary_gray_scan(const PackedRows& p, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const std::size_t W = p.words;
  std::vector<std::uint64_t> cw(W, 0);
  std::uint64_t start_msg = lo ? (lo - 1) ^ ((lo - 1) >> 1) : 0;
  for (int b = 0; b < 64; ++b)
    if (start_msg >> b & 1u)
      for (std::size_t w = 0; w < W; ++w) cw[w] ^= p.rows[static_cast<std::size_t>(b) * W + w];
  for (std::uint64_t t = lo; t < hi; ++t) {
    int bit = std::countr_zero(t);
    for (std::size_t w = 0; w < W; ++w) cw[w] ^= p.rows[static_cast<std::size_t>(bit) * W + w];
    visit(cw, t ^ (t >> 1));
  }
}

struct BinaryBest {
  std::size_t weight = SIZE_MAX;
  std::uint64_t msg = 0;
  void offer(std::size_t w, std::uint64_t m) {
    if (w < weight || (w == weight && bit_msg_lex_less(m, msg))) {
      weight = w;
      msg = m;
    }
  }
};

MinWeightResult min_weight_binary_enum(const LinearCode& c, const SearchLimits& limits) {
  PackedRows p = pack_binary(c);
  const std::uint64_t total = 1ull << c.k();
  unsigned T = limits.threads;
  if (T < 2 || c.k() < 22) T = 1;

  std::vector<BinaryBest> best(T);
  auto scan = [&](unsigned id, std::uint64_t lo, std::uint64_t hi) {
    BinaryBest b;
    binary_gray_scan(p, lo, hi, [&](const std::vector<std::uint64_t>& cw, std::uint64_t msg) {
      std::size_t w = 0;
      for (std::uint64_t word : cw) w += static_cast<std::size_t>(std::popcount(word));
      if (w <= b.weight) b.offer(w, msg);
    });
    best[id] = b;
  };
  if (T == 1) {
    scan(0, 1, total);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total - 1) / T + 1;
    for (unsigned i = 0; i < T; ++i) {
      std::uint64_t lo = std::max<std::uint64_t>(1, i * chunk);
      std::uint64_t hi = std::min(total, (i + 1) * chunk);
      if (lo >= hi) { best[i] = BinaryBest{}; continue; }
      pool.emplace_back(scan, i, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  BinaryBest overall;
  for (const auto& b : best)
    if (b.weight != SIZE_MAX) overall.offer(b.weight, b.msg);

  std::vector<Elem> msg_vec(c.k(), 0);
  for (std::size_t i = 0; i < c.k(); ++i) msg_vec[i] = overall.msg >> i & 1u;
  MinWeightResult res;
  res.weight = overall.weight;
  res.found = true;
  res.witness = c.encode(msg_vec);
  return res;
}

// Minimal dependent-column search on the parity-check matrix. Exhausting
// sizes 1..w-1 first guarantees that the first dependency found at size w is
// supported on all w chosen columns.
class SupportSearcher {
 public:
  SupportSearcher(const Matrix& h, bool anchor, std::uint64_t node_budget)
      : h_(h), f_(h.field()), anchor_(anchor), budget_(node_budget) {
    n_ = h.cols();
    hr_ = h.rows();
    cols_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      cols_[j].resize(hr_);
      for (std::size_t i = 0; i < hr_; ++i) cols_[j][i] = h.at(i, j);
    }
  }

  bool find(std::size_t w, std::vector<std::size_t>& out_cols, std::vector<Elem>& out_coeffs) {
    w_ = w;
    chosen_.clear();
    basis_.clear();
    if (w == 1) {
      std::size_t limit = anchor_ ? 1 : n_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (std::all_of(cols_[j].begin(), cols_[j].end(), [](Elem e) { return e == 0; })) {
          out_cols = {j};
          out_coeffs = {1};
          return true;
        }
      }
      return false;
    }
    bool ok = recurse(0);
    if (ok) {
      out_cols = found_cols_;
      out_coeffs = found_coeffs_;
    }
    return ok;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct BasisEntry {
    std::vector<Elem> vec;    // reduced column, pivot scaled to 1
    std::size_t pivot;
    std::vector<Elem> combo;  // expression over chosen columns
  };

  void bump() {
    if (++nodes_ > budget_) throw BudgetExceeded("support search exceeded combination budget");
  }

  // reduce column j against the basis; returns remainder and combination
  void reduce(std::size_t j, std::vector<Elem>& res, std::vector<Elem>& combo) {
    bump();
    res = cols_[j];
    combo.assign(chosen_.size(), 0);
    for (const auto& b : basis_) {
      Elem cc = res[b.pivot];
      if (cc == 0) continue;
      for (std::size_t i = 0; i < hr_; ++i) res[i] = f_->sub(res[i], f_->mul(cc, b.vec[i]));
      for (std::size_t i = 0; i < b.combo.size(); ++i)
        combo[i] = f_->sub(combo[i], f_->mul(cc, b.combo[i]));
    }
  }

  bool recurse(std::size_t start) {
    const std::size_t depth = chosen_.size();
    if (depth == w_ - 1) {
      for (std::size_t j = start; j < n_; ++j) {
        std::vector<Elem> res, combo;
        reduce(j, res, combo);
        if (std::all_of(res.begin(), res.end(), [](Elem e) { return e == 0; })) {
          // 0 = col_j + sum combo[i] * col_chosen[i], so the dependency is
          // (combo..., 1)
          found_cols_ = chosen_;
          found_cols_.push_back(j);
          found_coeffs_ = combo;
          found_coeffs_.push_back(1);
          normalize(found_coeffs_);
          return true;
        }
      }
      return false;
    }
    std::size_t first = (depth == 0 && anchor_) ? 0 : start;
    std::size_t last = (depth == 0 && anchor_) ? 1 : n_ - (w_ - depth) + 1;
    for (std::size_t j = first; j < last; ++j) {
      std::vector<Elem> res, combo;
      reduce(j, res, combo);
      std::size_t piv = hr_;
      for (std::size_t i = 0; i < hr_; ++i)
        if (res[i] != 0) { piv = i; break; }
      if (piv == hr_)
        throw std::logic_error("support search: dependency below current size");
      Elem s = f_->inv(res[piv]);
      BasisEntry e;
      e.pivot = piv;
      e.vec.resize(hr_);
      for (std::size_t i = 0; i < hr_; ++i) e.vec[i] = f_->mul(s, res[i]);
      e.combo.resize(depth + 1);
      for (std::size_t i = 0; i < depth; ++i) e.combo[i] = f_->mul(s, combo[i]);
      e.combo[depth] = s;
      chosen_.push_back(j);
      basis_.push_back(std::move(e));
      if (recurse(j + 1)) return true;
      chosen_.pop_back();
      basis_.pop_back();
    }
    return false;
  }

  void normalize(std::vector<Elem>& coeffs) {
    for (Elem c : coeffs)
      if (c != 0) {
        Elem s = f_->inv(c);
        for (Elem& x : coeffs) x = f_->mul(s, x);
        return;
      }
  }

  const Matrix& h_;
  FieldPtr f_;
  bool anchor_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t n_ = 0, hr_ = 0, w_ = 0;
  std::vector<std::vector<Elem>> cols_;
  std::vector<std::size_t> chosen_;
  std::vector<BasisEntry> basis_;
  std::vector<std::size_t> found_cols_;
  std::vector<Elem> found_coeffs_;
};

// q-ary reflected Gray enumeration: one message digit changes per step, the
// codeword and its weight are maintained incrementally.
template <class Visit>
void enumerate_impl(const LinearCode& c, const SearchLimits& limits, Visit&& visit) {
  const FieldPtr& f = c.field();
  const std::size_t k = c.k(), n = c.n();
  const std::uint64_t q = f->order();
  if (code_size_capped(c, limits.enum_budget) > limits.enum_budget)
    throw BudgetExceeded("enumeration budget exceeded");
  if (k == 0) return;

  std::vector<Elem> digits(k, 0);
  std::vector<std::size_t> focus(k + 1);
  for (std::size_t i = 0; i <= k; ++i) focus[i] = i;
  std::vector<int> dir(k, 1);
  std::vector<Elem> cw(n, 0);
  std::size_t weight = 0;

  while (true) {
    std::size_t j = focus[0];
    focus[0] = 0;
    if (j == k) break;
    Elem old = digits[j];
    Elem next = static_cast<Elem>(old + dir[j]);
    digits[j] = next;
    Elem delta = f->sub(next, old);
    const Elem* grow = c.generator().row(j);
    for (std::size_t col = 0; col < n; ++col) {
      Elem rv = grow[col];
      if (rv == 0) continue;
      Elem before = cw[col];
      cw[col] = f->add(before, f->mul(delta, rv));
      if (before == 0 && cw[col] != 0) ++weight;
      else if (before != 0 && cw[col] == 0) --weight;
    }
    if (next == 0 || next == q - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    visit(cw, weight, digits);
  }
}

MinWeightResult min_weight_support(const LinearCode& c, std::optional<std::size_t> cap,
                                   const SearchLimits& limits, bool cyclic) {
  LinearCode d = dual(c);
  // parity check of c = generator of dual
  SupportSearcher searcher(d.generator(), cyclic, limits.comb_budget);
  const std::size_t wmax = cap ? std::min(*cap, c.n()) : c.n();
  for (std::size_t w = 1; w <= wmax; ++w) {
    std::vector<std::size_t> cols;
    std::vector<Elem> coeffs;
    if (searcher.find(w, cols, coeffs)) {
      MinWeightResult res;
      res.weight = w;
      res.found = true;
      res.witness.assign(c.n(), 0);
      for (std::size_t i = 0; i < cols.size(); ++i) res.witness[cols[i]] = coeffs[i];
      if (!c.contains(res.witness))
        throw std::logic_error("support search produced a non-codeword");
      return res;
    }
  }
  MinWeightResult res;
  res.weight = wmax;
  res.found = false;
  return res;
}

}  // namespace

RrefResult rref(Matrix m) {
  const FieldPtr& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Elem s = f->inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = f->mul(s, m.at(row, j));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Elem cc = m.at(r, col);
      if (cc == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = f->sub(m.at(r, j), f->mul(cc, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), row, std::move(pivots)};
}

LinearCode::LinearCode(FieldPtr f, std::size_t n, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(f)), n_(n), g_(field_, rows.size(), n) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("LinearCode: row length mismatch");
    for (std::size_t j = 0; j < n; ++j) g_.at(r, j) = rows[r][j];
  }
  auto rr = rref(std::move(g_));
  pivots_ = std::move(rr.pivots);
  Matrix trimmed(field_, rr.rank, n);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t j = 0; j < n; ++j) trimmed.at(r, j) = rr.mat.at(r, j);
  g_ = std::move(trimmed);
}

LinearCode::LinearCode(Matrix rows) : field_(rows.field()), n_(rows.cols()), g_(rows.field(), 0, 0) {
  auto rr = rref(std::move(rows));
  pivots_ = std::move(rr.pivots);
  Matrix trimmed(field_, rr.rank, n_);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t j = 0; j < n_; ++j) trimmed.at(r, j) = rr.mat.at(r, j);
  g_ = std::move(trimmed);
}

std::vector<Elem> LinearCode::encode(const std::vector<Elem>& msg) const {
  if (msg.size() != k()) throw std::invalid_argument("encode: message length mismatch");
  std::vector<Elem> out(n_, 0);
  for (std::size_t r = 0; r < k(); ++r) {
    if (msg[r] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      out[j] = field_->add(out[j], field_->mul(msg[r], g_.at(r, j)));
  }
  return out;
}

bool LinearCode::contains(const std::vector<Elem>& word) const {
  if (word.size() != n_) throw std::invalid_argument("contains: word length mismatch");
  std::vector<Elem> w = word;
  for (std::size_t r = 0; r < k(); ++r) {
    Elem cc = w[pivots_[r]];
    if (cc == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] = field_->sub(w[j], field_->mul(cc, g_.at(r, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

LinearCode dual(const LinearCode& c) {
  const FieldPtr& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : c.pivots()) is_pivot[p] = true;
  std::vector<std::vector<Elem>> rows;
  rows.reserve(n - k);
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Elem> h(n, 0);
    for (std::size_t j = 0; j < k; ++j) h[c.pivots()[j]] = c.generator().at(j, fcol);
    h[fcol] = f->neg(1);
    rows.push_back(std::move(h));
  }
  LinearCode d(f, n, rows);
  if (d.k() != n - k) throw std::logic_error("dual: unexpected dimension");
  // G * H^T = 0
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < d.k(); ++s) {
      Elem acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc = f->add(acc, f->mul(c.generator().at(r, j), d.generator().at(s, j)));
      if (acc != 0) throw std::logic_error("dual: rows are not orthogonal");
    }
  return d;
}

void enumerate_codewords(
    const LinearCode& c, const SearchLimits& limits,
    const std::function<void(const std::vector<Elem>&, std::size_t, const std::vector<Elem>&)>& visit) {
  enumerate_impl(c, limits, visit);
}

MinWeightResult min_weight(const LinearCode& c, std::optional<std::size_t> cap,
                           const SearchLimits& limits, bool cyclic) {
  if (c.k() == 0) throw std::invalid_argument("min_weight: zero code");
  const std::uint64_t q = c.field()->order();
  const bool enum_fits = code_size_capped(c, limits.enum_budget) <= limits.enum_budget;

  bool use_support = !enum_fits;
  if (enum_fits && cap) {
    // With a cap, the column search is often far cheaper than enumerating the
    // whole code; compare rough operation counts.
    long double nodes = 0, binom = 1;
    const std::size_t base = cyclic ? c.n() - 1 : c.n();
    for (std::size_t w = 1; w <= *cap && w <= base; ++w) {
      binom = binom * static_cast<long double>(base - w + 1) / static_cast<long double>(w);
      nodes += binom;
    }
    long double support_ops = nodes * static_cast<long double>(c.n() - c.k());
    long double enum_ops = static_cast<long double>(code_size_capped(c, limits.enum_budget)) *
                           static_cast<long double>(q == 2 ? 1 : c.n());
    if (support_ops < enum_ops) use_support = true;
  }
  if (use_support) return min_weight_support(c, cap, limits, cyclic);

  MinWeightResult res;
  if (q == 2) {
    res = min_weight_binary_enum(c, limits);
  } else {
    std::size_t best_w = SIZE_MAX;
    std::vector<Elem> best_msg;
    enumerate_impl(c, limits,
                   [&](const std::vector<Elem>&, std::size_t w, const std::vector<Elem>& msg) {
                     if (w < best_w || (w == best_w && msg < best_msg)) {
                       best_w = w;
                       best_msg = msg;
                     }
                   });
    res.weight = best_w;
    res.found = true;
    res.witness = c.encode(best_msg);
  }
  if (cap && res.weight > *cap) {
    res.found = false;
    res.weight = *cap;
    res.witness.clear();
  }
  return res;
}

WeightProfile weight_distribution(const LinearCode& c, const SearchLimits& limits) {
  WeightProfile out;
  out.exact = true;
  out.counts[0] = 1;
  if (c.k() == 0) return out;
  if (c.field()->order() == 2) {
    if (code_size_capped(c, limits.enum_budget) > limits.enum_budget)
      throw BudgetExceeded("enumeration budget exceeded");
    PackedRows p = pack_binary(c);
    std::vector<std::uint64_t> hist(c.n() + 1, 0);
    binary_gray_scan(p, 1, 1ull << c.k(), [&](const std::vector<std::uint64_t>& cw, std::uint64_t) {
      std::size_t w = 0;
      for (std::uint64_t word : cw) w += static_cast<std::size_t>(std::popcount(word));
      ++hist[w];
    });
    for (std::size_t w = 1; w <= c.n(); ++w)
      if (hist[w]) out.counts[w] = hist[w];
    return out;
  }
  enumerate_impl(c, limits,
                 [&](const std::vector<Elem>&, std::size_t w, const std::vector<Elem>&) {
                   ++out.counts[w];
                 });
  return out;
}

CoordinateMinWeights per_coordinate_min_weight(const LinearCode& c, const SearchLimits& limits) {
  CoordinateMinWeights out;
  out.weight.assign(c.n(), std::nullopt);
  out.witness.assign(c.n(), {});
  if (c.k() == 0) return out;
  std::vector<std::vector<Elem>> best_msg(c.n());
  enumerate_impl(c, limits,
                 [&](const std::vector<Elem>& cw, std::size_t w, const std::vector<Elem>& msg) {
                        for (std::size_t i = 0; i < cw.size(); ++i) {
                          if (cw[i] == 0) continue;
                          if (!out.weight[i] || w < *out.weight[i] ||
                              (w == *out.weight[i] && msg < best_msg[i])) {
                            out.weight[i] = w;
                            best_msg[i] = msg;
                          }
                        }
                      });
  for (std::size_t i = 0; i < c.n(); ++i)
    if (out.weight[i]) out.witness[i] = c.encode(best_msg[i]);
  return out;
}

}  // namespace cyclrc::linalg
