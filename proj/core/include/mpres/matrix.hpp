#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mpres/field.hpp"

namespace mpres {

/// Column vector over a field. Length-0 vectors carry no field tag.
using Vec = std::vector<Scalar>;

Vec zero_vec(Field field, std::size_t length);
Vec unit_vec(Field field, std::size_t length, std::size_t index);
Vec vec_from_ints(Field field, std::initializer_list<std::int64_t> values);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a + c*b
Vec axpy(const Vec& a, const Scalar& c, const Vec& b);
std::string to_string(const Vec& v);

/// Dense row-major matrix whose entries share one field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  static DenseMatrix zeros(Field field, std::size_t rows, std::size_t cols) {
    return DenseMatrix(field, rows, cols);
  }
  static DenseMatrix identity(Field field, std::size_t n);
  static DenseMatrix from_ints(
      Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static DenseMatrix from_ints(Field field,
                               const std::vector<std::vector<std::int64_t>>& rows);
  /// Rows of the result are the given vectors; `cols` is used when `rows` is empty.
  static DenseMatrix from_rows(Field field, std::span<const Vec> rows, std::size_t cols);
  static DenseMatrix from_columns(Field field, std::span<const Vec> columns,
                                  std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, std::int64_t value);

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_vectors() const;
  std::vector<Vec> column_vectors() const;

  DenseMatrix transpose() const;
  DenseMatrix select_columns(std::span<const std::size_t> cols) const;
  DenseMatrix select_rows(std::span<const std::size_t> rows) const;
  void swap_rows(std::size_t a, std::size_t b);

  /// Throws FieldMismatch if any entry is tagged with another field.
  void validate() const;

  bool is_zero() const;

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  Vec operator*(const Vec& v) const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// [a | b]; row counts must agree.
DenseMatrix hstack(const DenseMatrix& a, const DenseMatrix& b);
/// [a ; b]; column counts must agree.
DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace mpres
