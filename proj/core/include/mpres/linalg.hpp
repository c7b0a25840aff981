#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpres/matrix.hpp"

namespace mpres {

struct RrefResult {
  DenseMatrix rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are taken at the first nonzero entry
/// scanning rows top-down within each column, so the output is deterministic.
RrefResult rref(const DenseMatrix& m);

/// Right null space basis, one vector per free column of rref(m): the free
/// coordinate is 1, other free coordinates 0, pivot coordinates the negated
/// pivot-row entries. Ordered by increasing free column.
std::vector<Vec> kernel_basis(const DenseMatrix& m);

std::size_t rank_of(const DenseMatrix& m);

/// Coefficients c with sum_i c_i * basis[i] == target, or nullopt if the
/// target is outside the span. When the basis is dependent, the coefficients
/// of the non-pivot basis vectors are zero. Throws DimensionMismatch on
/// unequal lengths.
std::optional<Vec> solve_in_span(Field field, std::span<const Vec> basis, const Vec& target);

/// Inverse of a square matrix; throws InvalidInput if singular.
DenseMatrix inverse(const DenseMatrix& m);
bool is_invertible(const DenseMatrix& m);

// Subspaces of F^m are stored as matrices whose rows span them.

/// Canonical basis of the row space: the nonzero rows of its RREF.
DenseMatrix row_space_basis(const DenseMatrix& rows);
bool row_space_contains(const DenseMatrix& rows, const Vec& v);
/// Row space of `a` is contained in row space of `b`.
bool row_space_subset(const DenseMatrix& a, const DenseMatrix& b);
bool same_row_space(const DenseMatrix& a, const DenseMatrix& b);

/// Incrementally maintained echelon basis, used to pick vectors that extend
/// a span without recomputing a full RREF each time.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t length);

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// Reduces v against the basis; the result is zero iff v is in the span.
  Vec reduce(const Vec& v) const;
  /// Pivot columns of the stored rows, in insertion order.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  Field field_;
  std::size_t length_;
  std::vector<Vec> rows_;  // each row has a 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace mpres
