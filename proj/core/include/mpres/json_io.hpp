#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include "mpres/barcode.hpp"
#include "mpres/families.hpp"
#include "mpres/multiset.hpp"
#include "mpres/orbits.hpp"
#include "mpres/persistence_module.hpp"
#include "mpres/presentation.hpp"
#include "mpres/rank_invariant.hpp"

namespace mpres {

using json = nlohmann::json;

// Scalars are JSON integers; rationals that are not integers (or do not fit
// in 64 bits) are strings "a/b".
json to_json(const Scalar& s);
json to_json(const Vec& v);
json to_json(const DenseMatrix& m);
json to_json(const DegreeVec& v);
json to_json(const Multiset& xi);
json to_json(const Presentation& p);
json to_json(const Barcode& b);
json to_json(const RankInvariant& r);
json to_json(const RelationFamily& f);
json to_json(const FramedFamily& f);
json to_json(const FamilyReport& r);
json to_json(const OrbitReport& r);
json to_json(const PersistenceModule& m);

Scalar scalar_from_json(Field field, const json& j);
Vec vec_from_json(Field field, const json& j);
DegreeVec degree_from_json(const json& j);
/// `n_if_empty` supplies the dimension of an empty list.
Multiset multiset_from_json(const json& j, std::size_t n_if_empty = 0);
Presentation presentation_from_json(const json& j);
/// Dispatches on "kind": "relation" or "framed".
std::variant<RelationFamily, FramedFamily> family_from_json(const json& j);

}  // namespace mpres
