#pragma once

#include <cstddef>
#include <vector>

#include "mpres/filtration.hpp"
#include "mpres/matrix.hpp"
#include "mpres/persistence_module.hpp"

namespace mpres {

/// Chains are coordinate vectors over all l-simplices of the full complex,
/// in input order, so the inclusion X_u -> X_v is the identity on chains.
struct HomologyResult {
  std::size_t dim = 0;
  /// Cycle representatives of a basis of H_l(X_u), chosen greedily from the
  /// canonical kernel basis of the restricted boundary map.
  std::vector<Vec> basis;
  /// A basis of the boundary space B_l(X_u).
  std::vector<Vec> boundaries;
};

/// Boundary map C_l -> C_{l-1} of the full complex with alternating signs.
/// For l = 0 this is the 0 x (#vertices) matrix.
DenseMatrix boundary_matrix(const MultifilteredComplex& X, std::size_t l, Field field);

/// Throws InvalidInput for l < 0.
HomologyResult homology_at(const MultifilteredComplex& X, const DegreeVec& u, int l, Field field);

/// The module u -> H_l(X_u) on the box of X. Grid points are processed by up
/// to `threads` workers; the result does not depend on the thread count.
PersistenceModule build_persistence_module(const MultifilteredComplex& X, int l, Field field,
                                           unsigned threads = 1);

}  // namespace mpres
