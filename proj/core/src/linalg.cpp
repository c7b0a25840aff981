#include "mpres/linalg.hpp"

#include "mpres/error.hpp"

namespace mpres {
namespace {

// In-place RREF over a list of rows; returns pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    Vec& prow = rows[pivot_row];
    const Scalar inv = prow[c].inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!prow[k].is_zero()) prow[k] *= inv;
    }
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == pivot_row || rows[other][c].is_zero()) continue;
      const Scalar factor = -rows[other][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!prow[k].is_zero()) rows[other][k] += factor * prow[k];
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const DenseMatrix& m) {
  m.validate();
  std::vector<Vec> rows = m.row_vectors();
  auto pivots = reduce_rows(rows, m.cols());
  RrefResult out{DenseMatrix::from_rows(m.field(), rows, m.cols()), pivots, pivots.size()};
  return out;
}

std::vector<Vec> kernel_basis(const DenseMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(m.field(), m.cols(), f);
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
      v[r.pivot_cols[row]] = -r.rref(row, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const DenseMatrix& m) { return rref(m).rank; }

std::optional<Vec> solve_in_span(Field field, std::span<const Vec> basis, const Vec& target) {
  const std::size_t len = target.size();
  for (const auto& b : basis) {
    if (b.size() != len) throw DimensionMismatch("solve_in_span: vector lengths differ");
  }
  const std::size_t k = basis.size();
  std::vector<Vec> rows(len, Vec());
  for (std::size_t i = 0; i < len; ++i) {
    rows[i].reserve(k + 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j][i].field() != field) throw FieldMismatch("solve_in_span: mixed fields");
      rows[i].push_back(basis[j][i]);
    }
    if (target[i].field() != field) throw FieldMismatch("solve_in_span: mixed fields");
    rows[i].push_back(target[i]);
  }
  const auto pivots = reduce_rows(rows, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vec coeffs = zero_vec(field, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = rows[r][k];
  return coeffs;
}

DenseMatrix inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(hstack(m, DenseMatrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) {
    throw InvalidInput("matrix is singular");
  }
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return r.rref.select_columns(right);
}

bool is_invertible(const DenseMatrix& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

DenseMatrix row_space_basis(const DenseMatrix& rows) {
  const RrefResult r = rref(rows);
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  return r.rref.select_rows(keep);
}

bool row_space_contains(const DenseMatrix& rows, const Vec& v) {
  if (v.size() != rows.cols()) throw DimensionMismatch("row_space_contains: length mismatch");
  EchelonBasis basis(rows.field(), rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) basis.insert(rows.row(r));
  return basis.contains(v);
}

bool row_space_subset(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("row_space_subset: length mismatch");
  EchelonBasis basis(b.field(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) basis.insert(b.row(r));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!basis.contains(a.row(r))) return false;
  }
  return true;
}

bool same_row_space(const DenseMatrix& a, const DenseMatrix& b) {
  return a.cols() == b.cols() && row_space_basis(a) == row_space_basis(b);
}

EchelonBasis::EchelonBasis(Field field, std::size_t length) : field_(field), length_(length) {}

Vec EchelonBasis::reduce(const Vec& v) const {
  if (v.size() != length_) throw DimensionMismatch("EchelonBasis: vector length mismatch");
  Vec out = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (!c.is_zero()) out = axpy(out, -c, rows_[i]);
  }
  return out;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < length_ && r[pivot].is_zero()) ++pivot;
  if (pivot == length_) return false;
  r = scale(r[pivot].inverse(), r);
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (!c.is_zero()) row = axpy(row, -c, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace mpres
