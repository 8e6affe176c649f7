#ifndef CYCLRC_LINALG_HPP
#define CYCLRC_LINALG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclrc/gf.hpp"

namespace cyclrc::linalg {

using gf::Elem;
using gf::FieldPtr;

/// Thrown when an exhaustive search would exceed the configured budgets.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  std::uint64_t enum_budget = 1ull << 27;  // max codewords to enumerate
  std::uint64_t comb_budget = 1ull << 31;  // max column-subset nodes to visit
  unsigned threads = 1;
};

class Matrix {
 public:
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }
  Elem* row(std::size_t r) { return a_.data() + r * cols_; }
  std::vector<Elem> row_vec(std::size_t r) const {
    return {row(r), row(r) + cols_};
  }
  bool operator==(const Matrix& o) const {
    return field_.get() == o.field_.get() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix m);

/// Linear code stored by its RREF generator matrix, which makes row-space
/// comparison a plain equality check.
class LinearCode {
 public:
  LinearCode(FieldPtr f, std::size_t n, const std::vector<std::vector<Elem>>& rows);
  explicit LinearCode(Matrix rows);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return g_.rows(); }
  const Matrix& generator() const { return g_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Elem> encode(const std::vector<Elem>& msg) const;
  bool contains(const std::vector<Elem>& word) const;
  bool same_row_space(const LinearCode& o) const {
    return g_ == o.g_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  Matrix g_;
  std::vector<std::size_t> pivots_;
};

/// Dual code; the result satisfies G_dual * G^T = 0 and dim n - k.
LinearCode dual(const LinearCode& c);

struct MinWeightResult {
  std::size_t weight = 0;        // exact minimum if found, else the cap
  bool found = true;             // false means "minimum weight > cap"
  std::vector<Elem> witness;     // a minimum-weight codeword when found
};

/// Exact minimum nonzero weight. Full message enumeration when q^k fits the
/// enumeration budget, otherwise a minimal-dependent-column search on the
/// parity-check matrix. `cyclic` permits anchoring supports at coordinate 0,
/// valid only for shift-invariant codes.
MinWeightResult min_weight(const LinearCode& c, std::optional<std::size_t> cap = std::nullopt,
                           const SearchLimits& limits = {}, bool cyclic = false);

struct WeightProfile {
  std::map<std::size_t, std::uint64_t> counts;
  bool exact = true;
};

/// Full weight distribution by enumeration; requires q^k within budget.
WeightProfile weight_distribution(const LinearCode& c, const SearchLimits& limits = {});

struct CoordinateMinWeights {
  // weight[i]: minimum weight over codewords nonzero at coordinate i
  std::vector<std::optional<std::size_t>> weight;
  std::vector<std::vector<Elem>> witness;  // empty vector when no such codeword
};

/// Per-coordinate constrained minima by enumeration (used for the locality of
/// codes without shift transitivity).
CoordinateMinWeights per_coordinate_min_weight(const LinearCode& c, const SearchLimits& limits = {});

/// Visits every nonzero codeword exactly once in q-ary reflected Gray order.
/// visit(codeword, weight, message_digits).
void enumerate_codewords(
    const LinearCode& c, const SearchLimits& limits,
    const std::function<void(const std::vector<Elem>&, std::size_t, const std::vector<Elem>&)>& visit);

}  // namespace cyclrc::linalg

#endif  // CYCLRC_LINALG_HPP
