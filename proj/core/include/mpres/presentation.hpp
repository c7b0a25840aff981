#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mpres/free_module.hpp"
#include "mpres/multiset.hpp"
#include "mpres/persistence_module.hpp"

namespace mpres {

/// A homogeneous element of F(xi0): its degree and its length-m0 coefficient
/// vector (zero on slots whose degree is not <= degree).
struct HomogeneousElement {
  DegreeVec degree;
  Vec vector;

  friend bool operator==(const HomogeneousElement&, const HomogeneousElement&) = default;
};

struct MinimalGenerators {
  Multiset xi0;
  /// Per degree v, vectors of M_v whose classes form a basis of the cokernel
  /// of the incoming steps. Their count is the multiplicity of v.
  std::map<DegreeVec, std::vector<Vec>> lifts;
};

/// Rank of the sum of the images of M_{v - e_i} -> M_v over all axes i.
std::size_t incoming_rank(const PersistenceModule& M, const DegreeVec& v);

MinimalGenerators minimal_generators(const PersistenceModule& M);

struct FreeHull {
  FreeGradedModule F;
  Grid grid;
  /// p0 at every grid point (by grid index): dim M_v x m0, zero on dead slots.
  std::vector<DenseMatrix> p0;

  const DenseMatrix& at(const DegreeVec& v) const { return p0[grid.index(grid.clamp(v))]; }
};

FreeHull free_hull(const PersistenceModule& M);
FreeHull free_hull(const PersistenceModule& M, const MinimalGenerators& gens);

struct KernelModule {
  PersistenceModule module;
  /// Per grid index, the rows form the canonical basis of ker p0 at that
  /// degree, written in m0 coordinates.
  std::vector<DenseMatrix> basis;
};

/// K0 = ker p0 as a module on the box of M. Throws InternalError if the
/// dimensions do not add up.
KernelModule kernel_module(const FreeHull& hull, const PersistenceModule& M);

struct Presentation {
  Field field;
  Multiset xi0;
  Multiset xi1;
  /// One relation per element of xi1, ordered by degree.
  std::vector<HomogeneousElement> relations;
};

Presentation minimal_presentation(const PersistenceModule& M);

/// RREF basis (rows, m0 columns) of L_v, the degree-v part of the submodule
/// generated by `gens`.
DenseMatrix submodule_span(const FreeGradedModule& F, std::span<const HomogeneousElement> gens,
                           const DegreeVec& v);

/// For every v in V0 that is also a generator degree, the degree-v part of
/// the generated submodule vanishes on the slots of degree exactly v.
/// Throws on generators that are not valid at their degree.
bool tensor_condition(const FreeGradedModule& F, std::span<const HomogeneousElement> gens);
bool tensor_condition(std::span<const HomogeneousElement> gens, const Multiset& xi0);

/// Smallest box holding every generator degree of F and every element degree.
DegreeVec required_box(const FreeGradedModule& F, std::span<const HomogeneousElement> gens);

/// F / <gens> on a grid box. `box` defaults to required_box and must contain it.
PersistenceModule quotient_module(const FreeGradedModule& F,
                                  std::span<const HomogeneousElement> gens,
                                  std::optional<DegreeVec> box = std::nullopt);

/// The submodule <gens> itself, with basis at v given by submodule_span.
PersistenceModule submodule_module(const FreeGradedModule& F,
                                   std::span<const HomogeneousElement> gens,
                                   std::optional<DegreeVec> box = std::nullopt);

/// Types xi0, xi1, xi2, ... of iterated free hulls. Stops after appending
/// the first empty multiset or after max_steps entries.
std::vector<Multiset> resolve(const PersistenceModule& M, std::size_t max_steps);

}  // namespace mpres
