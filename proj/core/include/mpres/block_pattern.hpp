#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "mpres/degree.hpp"
#include "mpres/matrix.hpp"
#include "mpres/multiset.hpp"

namespace mpres {

/// Zero-block shape of GL_<=(xi0). Block i is the run of slots belonging to
/// degrees()[i]; (i, j) is a zero block iff degrees()[i] is not <= degrees()[j].
/// Indices are 0-based.
class BlockPattern {
 public:
  BlockPattern(Multiset xi0, std::vector<DegreeVec> degrees);

  const Multiset& xi0() const { return xi0_; }
  const std::vector<DegreeVec>& degrees() const { return degrees_; }
  const std::set<std::pair<std::size_t, std::size_t>>& zero_blocks() const {
    return zero_blocks_;
  }
  std::size_t block_count() const { return degrees_.size(); }
  /// m0
  std::size_t size() const { return slot_block_.size(); }
  /// Block index of a matrix row/column.
  std::size_t block_of(std::size_t slot) const { return slot_block_.at(slot); }
  /// Whether entry (r, c) of a GL_<= matrix is forced to zero.
  bool entry_forced_zero(std::size_t r, std::size_t c) const;
  /// Number of entries not forced to zero.
  std::size_t free_entry_count() const;

 private:
  Multiset xi0_;
  std::vector<DegreeVec> degrees_;
  std::vector<std::size_t> slot_block_;
  std::set<std::pair<std::size_t, std::size_t>> zero_blocks_;
};

/// Pattern for the canonical (lexicographic) enumeration of V0.
BlockPattern block_pattern(const Multiset& xi0);
/// Pattern for an explicit enumeration of V0; `order` must list each degree
/// of the support exactly once.
BlockPattern block_pattern(const Multiset& xi0, const std::vector<DegreeVec>& order);

/// M is invertible and vanishes on every zero block. Throws DimensionMismatch
/// unless M is m0 x m0.
bool is_in_gl_leq(const DenseMatrix& M, const BlockPattern& pattern);

}  // namespace mpres
