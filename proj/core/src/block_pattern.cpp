#include "mpres/block_pattern.hpp"

#include <algorithm>

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {

BlockPattern::BlockPattern(Multiset xi0, std::vector<DegreeVec> degrees)
    : xi0_(std::move(xi0)), degrees_(std::move(degrees)) {
  auto sorted = degrees_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted != xi0_.support()) {
    throw InvalidInput("block enumeration must list each degree of xi0 exactly once");
  }
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    for (std::size_t k = 0; k < xi0_.multiplicity(degrees_[i]); ++k) slot_block_.push_back(i);
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
      if (!leq(degrees_[i], degrees_[j])) zero_blocks_.emplace(i, j);
    }
  }
}

bool BlockPattern::entry_forced_zero(std::size_t r, std::size_t c) const {
  return zero_blocks_.count({block_of(r), block_of(c)}) != 0;
}

std::size_t BlockPattern::free_entry_count() const {
  std::size_t count = 0;
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) count += entry_forced_zero(r, c) ? 0 : 1;
  }
  return count;
}

BlockPattern block_pattern(const Multiset& xi0) { return BlockPattern(xi0, xi0.support()); }

BlockPattern block_pattern(const Multiset& xi0, const std::vector<DegreeVec>& order) {
  return BlockPattern(xi0, order);
}

bool is_in_gl_leq(const DenseMatrix& M, const BlockPattern& pattern) {
  if (M.rows() != pattern.size() || M.cols() != pattern.size()) {
    throw DimensionMismatch("matrix is " + std::to_string(M.rows()) + "x" +
                            std::to_string(M.cols()) + ", pattern needs " +
                            std::to_string(pattern.size()));
  }
  for (std::size_t r = 0; r < M.rows(); ++r) {
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (pattern.entry_forced_zero(r, c) && !M(r, c).is_zero()) return false;
    }
  }
  return is_invertible(M);
}

}  // namespace mpres
