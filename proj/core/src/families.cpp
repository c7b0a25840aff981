#include "mpres/families.hpp"

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {
namespace {

template <typename Family>
void check_shape(const Family& family) {
  const std::size_t m0 = family.xi0.size();
  if (family.xi0.ambient_dim() != family.xi1.ambient_dim()) {
    throw DimensionMismatch("xi0 and xi1 live in different dimensions");
  }
  if (family.spaces.size() != family.xi1.entries().size()) {
    throw InvalidInput("family must have exactly one space per degree of xi1");
  }
  for (const auto& [w, L] : family.spaces) {
    if (!family.xi1.contains(w)) {
      throw InvalidInput("space at " + w.to_string() + " is not indexed by xi1");
    }
    if (L.cols() != m0) {
      throw DimensionMismatch("space at " + w.to_string() + " has " + std::to_string(L.cols()) +
                              " columns, expected " + std::to_string(m0));
    }
    if (L.field() != family.field) throw FieldMismatch("space at " + w.to_string());
    L.validate();
    if (rank_of(L) != L.rows()) {
      throw InvalidInput("basis of the space at " + w.to_string() + " has dependent rows");
    }
  }
}

FamilyReport failure(int condition, const DegreeVec& w, std::string message) {
  return FamilyReport{false, condition, w, "condition " + std::to_string(condition) +
                                               " fails at " + w.to_string() + ": " + message};
}

bool vanishes_on_slots_of(const DenseMatrix& L, const FreeGradedModule& F, const DegreeVec& v) {
  for (std::size_t j = 0; j < F.rank(); ++j) {
    if (F.slot_degree(j) != v) continue;
    for (std::size_t r = 0; r < L.rows(); ++r) {
      if (!L(r, j).is_zero()) return false;
    }
  }
  return true;
}

// Rows of all L_v with v in V1 and v < w, stacked.
template <typename Family>
DenseMatrix lower_sum(const Family& family, const DegreeVec& w) {
  DenseMatrix acc(family.field, 0, family.xi0.size());
  for (const auto& [v, L] : family.spaces) {
    if (lt(v, w)) acc = vstack(acc, L);
  }
  return acc;
}

template <typename Family>
Family canonical(const Family& family) {
  Family out = family;
  for (auto& [w, L] : out.spaces) L = row_space_basis(L);
  return out;
}

}  // namespace

FamilyReport verify_relation_family(const RelationFamily& family) {
  check_shape(family);
  const FreeGradedModule F(family.field, family.xi0);
  for (const auto& [w, L] : family.spaces) {
    for (std::size_t r = 0; r < L.rows(); ++r) {
      if (!F.is_valid_at(w, L.row(r))) {
        return failure(1, w, "basis vector uses a generator not alive at this degree");
      }
    }
    const std::size_t delta = graded_dim(family.xi1, w);
    if (L.rows() != delta) {
      return failure(2, w, "dimension " + std::to_string(L.rows()) + " != " +
                               std::to_string(delta));
    }
    for (const auto& [v, Lv] : family.spaces) {
      if (lt(v, w) && !row_space_subset(Lv, L)) {
        return failure(3, w, "shift of L" + v.to_string() + " is not contained");
      }
    }
    if (family.xi0.contains(w) && !vanishes_on_slots_of(L, F, w)) {
      return failure(4, w, "projection onto the generators of the same degree is nonzero");
    }
    const std::size_t quotient = L.rows() - rank_of(lower_sum(family, w));
    if (quotient != family.xi1.multiplicity(w)) {
      return failure(5, w, "quotient by lower spaces has dimension " + std::to_string(quotient) +
                               " != " + std::to_string(family.xi1.multiplicity(w)));
    }
  }
  return {};
}

FamilyReport verify_framed_family(const FramedFamily& family) {
  check_shape(family);
  const FreeGradedModule F(family.field, family.xi0);
  for (const auto& [w, L] : family.spaces) {
    const std::size_t delta = graded_dim(family.xi1, w);
    if (L.rows() != delta) {
      throw InvalidInput("framed space at " + w.to_string() + " has dimension " +
                         std::to_string(L.rows()) + ", expected " + std::to_string(delta));
    }
  }
  for (const auto& [w, L] : family.spaces) {
    for (const auto& [v, mult] : family.xi0) {
      if (!lt(v, w) && !vanishes_on_slots_of(L, F, v)) {
        return failure(1, w, "projection onto generators of degree " + v.to_string() +
                                 " is nonzero");
      }
    }
    for (const auto& [v, Lv] : family.spaces) {
      if (lt(v, w) && !row_space_subset(Lv, L)) {
        return failure(2, w, "L" + v.to_string() + " is not contained");
      }
    }
    const std::size_t quotient = L.rows() - rank_of(lower_sum(family, w));
    if (quotient != family.xi1.multiplicity(w)) {
      return failure(3, w, "quotient by lower spaces has dimension " + std::to_string(quotient) +
                               " != " + std::to_string(family.xi1.multiplicity(w)));
    }
  }
  return {};
}

std::vector<HomogeneousElement> submodule_from_family(const RelationFamily& family) {
  const FamilyReport report = verify_relation_family(family);
  if (!report.ok) throw InvalidInput("not a relation family: " + report.message);
  std::vector<HomogeneousElement> gens;
  for (const auto& [w, L] : family.spaces) {
    EchelonBasis span(family.field, family.xi0.size());
    for (const auto& [v, Lv] : family.spaces) {
      if (!lt(v, w)) continue;
      for (std::size_t r = 0; r < Lv.rows(); ++r) span.insert(Lv.row(r));
    }
    const DenseMatrix canon = row_space_basis(L);
    for (std::size_t r = 0; r < canon.rows(); ++r) {
      if (span.insert(canon.row(r))) gens.push_back({w, canon.row(r)});
    }
  }
  return gens;
}

RelationFamily family_from_submodule(const FreeGradedModule& F, const Multiset& xi1,
                                     std::span<const HomogeneousElement> gens) {
  RelationFamily out{F.field(), F.xi(), xi1, {}};
  for (const auto& [w, mult] : xi1) out.spaces.emplace(w, submodule_span(F, gens, w));
  return out;
}

FramedFamily frame_family(const RelationFamily& family) {
  const FamilyReport report = verify_relation_family(family);
  if (!report.ok) throw InvalidInput("not a relation family: " + report.message);
  const FreeGradedModule F(family.field, family.xi0);
  FramedFamily out{family.field, family.xi0, family.xi1, {}};
  for (const auto& [w, L] : family.spaces) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < L.rows(); ++r) rows.push_back(tau_embed(F, w, L.row(r)));
    out.spaces.emplace(w, row_space_basis(DenseMatrix::from_rows(family.field, rows, F.rank())));
  }
  return out;
}

RelationFamily unframe_family(const FramedFamily& family) {
  const FamilyReport report = verify_framed_family(family);
  if (!report.ok) throw InvalidInput("not a framed family: " + report.message);
  const FramedFamily canon = canonical(family);
  return RelationFamily{canon.field, canon.xi0, canon.xi1, canon.spaces};
}

DenseMatrix act_on_subspace(const DenseMatrix& M, const DenseMatrix& basis) {
  if (M.rows() != M.cols() || M.cols() != basis.cols()) {
    throw DimensionMismatch("act_on_subspace: shape mismatch");
  }
  return row_space_basis(basis * M.transpose());
}

FramedFamily act(const DenseMatrix& M, const FramedFamily& family) {
  FramedFamily out = family;
  for (auto& [w, L] : out.spaces) L = act_on_subspace(M, L);
  return out;
}

RelationFamily act(const DenseMatrix& M, const RelationFamily& family) {
  RelationFamily out = family;
  for (auto& [w, L] : out.spaces) L = act_on_subspace(M, L);
  return out;
}

}  // namespace mpres
