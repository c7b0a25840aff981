#include "mpres/matrix.hpp"

#include <sstream>
#include <utility>

#include "mpres/error.hpp"

namespace mpres {

Vec zero_vec(Field field, std::size_t length) {
  return Vec(length, Scalar::zero(field));
}

Vec unit_vec(Field field, std::size_t length, std::size_t index) {
  Vec v = zero_vec(field, length);
  v.at(index) = Scalar::one(field);
  return v;
}

Vec vec_from_ints(Field field, std::initializer_list<std::int64_t> values) {
  Vec v;
  v.reserve(values.size());
  for (auto x : values) v.emplace_back(field, x);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

Vec axpy(const Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec out = a;
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) out[i] += c * b[i];
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].to_string();
  }
  os << ')';
  return os.str();
}

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(field);
  return m;
}

DenseMatrix DenseMatrix::from_ints(
    Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_ints(field, copy);
}

DenseMatrix DenseMatrix::from_ints(Field field,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = Scalar(field, rows[r][c]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, std::span<const Vec> rows, std::size_t cols) {
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_columns(Field field, std::span<const Vec> columns,
                                      std::size_t rows) {
  DenseMatrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void DenseMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_) {
    throw FieldMismatch("entry over " + value.field().to_string() + " in matrix over " +
                        field_.to_string());
  }
  entries_.at(r * cols_ + c) = value;
}

void DenseMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  entries_.at(r * cols_ + c) = Scalar(field_, value);
}

Vec DenseMatrix::row(std::size_t r) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec DenseMatrix::column(std::size_t c) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Vec> DenseMatrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vec> DenseMatrix::column_vectors() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::size_t> cols) const {
  DenseMatrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out.entries_[r * cols.size() + k] = entries_.at(r * cols_ + cols[k]);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::select_rows(std::span<const std::size_t> rows) const {
  DenseMatrix out(field_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw DimensionMismatch("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[k * cols_ + c] = (*this)(rows[k], c);
  }
  return out;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }
}

void DenseMatrix::validate() const {
  for (const auto& e : entries_) {
    if (e.field() != field_) throw FieldMismatch("matrix mixes coefficient fields");
  }
}

bool DenseMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("matrix product over different fields");
  if (cols_ != rhs.rows_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(rhs.rows_) + "x" +
                            std::to_string(rhs.cols_));
  }
  DenseMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!b.is_zero()) out.entries_[i * rhs.cols_ + j] += a * b;
      }
    }
  }
  return out;
}

Vec DenseMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector length mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).to_string();
    }
  }
  os << ']';
  return os.str();
}

DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  if (a.field() != b.field()) throw FieldMismatch("hstack over different fields");
  DenseMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  if (a.field() != b.field()) throw FieldMismatch("vstack over different fields");
  DenseMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

}  // namespace mpres
