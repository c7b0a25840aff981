#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpres/free_module.hpp"
#include "mpres/matrix.hpp"
#include "mpres/multiset.hpp"
#include "mpres/presentation.hpp"

namespace mpres {

/// (L_w) for w in V1. Each L_w is given by a matrix whose rows are a basis,
/// written in the length-m0 slot coordinates of F(xi0)_w.
struct RelationFamily {
  Field field;
  Multiset xi0;
  Multiset xi1;
  std::map<DegreeVec, DenseMatrix> spaces;

  friend bool operator==(const RelationFamily&, const RelationFamily&) = default;
};

/// (tau_w(L_w)) for w in V1: subspaces of F^{m0}, stored as RREF bases.
struct FramedFamily {
  Field field;
  Multiset xi0;
  Multiset xi1;
  std::map<DegreeVec, DenseMatrix> spaces;

  friend bool operator==(const FramedFamily&, const FramedFamily&) = default;
};

struct FamilyReport {
  bool ok = true;
  int failed_condition = 0;  // 1-based, 0 when ok
  std::optional<DegreeVec> witness;
  std::string message;
};

/// Checks the five relation-family conditions degree by degree (lexicographic
/// order on V1) and reports the first failure. Throws InvalidInput if the
/// spaces do not match V1, have the wrong width, or have dependent rows.
FamilyReport verify_relation_family(const RelationFamily& family);

/// Checks the three framed-family conditions degree by degree. Throws
/// InvalidInput on malformed spaces, including dim L_w != delta1(w).
FamilyReport verify_framed_family(const FramedFamily& family);

/// Minimal homogeneous generators of the submodule generated by the union of
/// the L_w: mu1(w) vectors of L_w completing the sum of the lower L_v.
/// Throws InvalidInput if the family is not valid.
std::vector<HomogeneousElement> submodule_from_family(const RelationFamily& family);

/// (L_w)_{w in V1} for the submodule generated by `gens`.
RelationFamily family_from_submodule(const FreeGradedModule& F, const Multiset& xi1,
                                     std::span<const HomogeneousElement> gens);

FramedFamily frame_family(const RelationFamily& family);
RelationFamily unframe_family(const FramedFamily& family);

/// RREF basis of M * span(rows of basis).
DenseMatrix act_on_subspace(const DenseMatrix& M, const DenseMatrix& basis);
FramedFamily act(const DenseMatrix& M, const FramedFamily& family);
RelationFamily act(const DenseMatrix& M, const RelationFamily& family);

}  // namespace mpres
