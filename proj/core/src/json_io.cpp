#include "mpres/json_io.hpp"

#include <limits>

#include "mpres/error.hpp"

namespace mpres {
namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::size_t infer_dim(const json& j) {
  for (const auto& key : {"xi0", "xi1"}) {
    if (j.contains(key) && j.at(key).is_array() && !j.at(key).empty()) {
      return member(j.at(key).front(), "degree").size();
    }
  }
  if (j.contains("n") && j.at("n").is_number_unsigned()) return j.at("n").get<std::size_t>();
  throw InvalidInput("cannot infer the grading dimension; add an \"n\" field");
}

DenseMatrix matrix_from_json(Field field, const json& rows, std::size_t cols) {
  if (!rows.is_array()) throw InvalidInput("basis must be an array of rows");
  std::vector<Vec> vs;
  for (const auto& row : rows) {
    vs.push_back(vec_from_json(field, row));
    if (vs.back().size() != cols) {
      throw DimensionMismatch("basis row has length " + std::to_string(vs.back().size()) +
                              ", expected " + std::to_string(cols));
    }
  }
  return DenseMatrix::from_rows(field, vs, cols);
}

template <typename Family>
json family_json(const Family& f, const char* kind) {
  json spaces = json::array();
  for (const auto& [w, L] : f.spaces) spaces.push_back({{"degree", to_json(w)}, {"basis", to_json(L)}});
  return {{"kind", kind},
          {"field", f.field.to_string()},
          {"n", f.xi0.ambient_dim()},
          {"xi0", to_json(f.xi0)},
          {"xi1", to_json(f.xi1)},
          {"spaces", spaces}};
}

}  // namespace

json to_json(const Scalar& s) {
  if (s.field().is_prime()) return s.fp_value();
  const mpq_class& q = s.rational_value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json to_json(const DenseMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const DegreeVec& v) { return v.coords(); }

json to_json(const Multiset& xi) {
  json out = json::array();
  for (const auto& [v, count] : xi) out.push_back({{"degree", to_json(v)}, {"multiplicity", count}});
  return out;
}

json to_json(const Presentation& p) {
  json relations = json::array();
  for (const auto& r : p.relations) {
    relations.push_back({{"degree", to_json(r.degree)}, {"vector", to_json(r.vector)}});
  }
  return {{"field", p.field.to_string()},
          {"n", p.xi0.ambient_dim()},
          {"xi0", to_json(p.xi0)},
          {"xi1", to_json(p.xi1)},
          {"relations", relations}};
}

json to_json(const Barcode& b) {
  json bars = json::array();
  for (const Bar& bar : b.bars()) {
    bars.push_back({{"birth", bar.birth}, {"death", bar.death ? json(*bar.death) : json(nullptr)}});
  }
  return {{"bars", bars}};
}

json to_json(const RankInvariant& r) {
  json out = json::array();
  for (const auto& [uv, e] : r.table()) {
    out.push_back({{"u", to_json(uv.first)}, {"v", to_json(uv.second)}, {"rank", e.rank}, {"dim", e.dim}});
  }
  return out;
}

json to_json(const RelationFamily& f) { return family_json(f, "relation"); }
json to_json(const FramedFamily& f) { return family_json(f, "framed"); }

json to_json(const FamilyReport& r) {
  return {{"ok", r.ok},
          {"failed_condition", r.ok ? json(nullptr) : json(r.failed_condition)},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"message", r.message}};
}

json to_json(const OrbitReport& r) {
  json sizes = json::object();
  for (const auto& [size, count] : r.sizes) sizes[std::to_string(size)] = count;
  return {{"q", r.q},
          {"total", r.total},
          {"orbits", r.orbit_count},
          {"group_order", r.group_order},
          {"distinct_line_orbits",
           r.distinct_line_orbits ? json(*r.distinct_line_orbits) : json(nullptr)},
          {"sizes", sizes}};
}

json to_json(const PersistenceModule& m) {
  const Grid& grid = m.grid();
  json dims = json::array();
  json steps = json::array();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec u = grid.point(idx);
    dims.push_back({{"degree", to_json(u)}, {"dim", m.dim_at_index(idx)}});
    for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
      if (u[axis] >= grid.box()[axis]) continue;
      steps.push_back({{"degree", to_json(u)}, {"axis", axis}, {"matrix", to_json(m.step(u, axis))}});
    }
  }
  return {{"field", m.field().to_string()}, {"box", to_json(m.box())}, {"dims", dims}, {"steps", steps}};
}

Scalar scalar_from_json(Field field, const json& j) {
  if (j.is_number_integer()) return Scalar(field, j.get<std::int64_t>());
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  throw InvalidInput("scalar must be an integer or a string 'a/b', got " + j.dump());
}

Vec vec_from_json(Field field, const json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be a JSON array");
  Vec out;
  for (const auto& x : j) out.push_back(scalar_from_json(field, x));
  return out;
}

DegreeVec degree_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("degree must be a non-empty array");
  std::vector<std::uint32_t> coords;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidInput("degree coordinates must be natural numbers, got " + x.dump());
    }
    coords.push_back(x.get<std::uint32_t>());
  }
  return DegreeVec(std::move(coords));
}

Multiset multiset_from_json(const json& j, std::size_t n_if_empty) {
  if (!j.is_array()) throw InvalidInput("multiset must be a JSON array");
  if (j.empty()) {
    if (n_if_empty == 0) throw InvalidInput("cannot infer the dimension of an empty multiset");
    return Multiset(n_if_empty);
  }
  Multiset xi(member(j.front(), "degree").size());
  for (const auto& e : j) {
    const json& mult = member(e, "multiplicity");
    if (!mult.is_number_unsigned() || mult.get<std::size_t>() == 0) {
      throw InvalidInput("multiplicity must be a positive integer");
    }
    xi.add(degree_from_json(member(e, "degree")), mult.get<std::size_t>());
  }
  return xi;
}

Presentation presentation_from_json(const json& j) {
  const Field field = Field::parse(member(j, "field").get<std::string>());
  const std::size_t n = infer_dim(j);
  Presentation p{field, multiset_from_json(member(j, "xi0"), n),
                 multiset_from_json(member(j, "xi1"), n), {}};
  for (const auto& r : member(j, "relations")) {
    p.relations.push_back({degree_from_json(member(r, "degree")),
                           vec_from_json(field, member(r, "vector"))});
  }
  return p;
}

std::variant<RelationFamily, FramedFamily> family_from_json(const json& j) {
  const std::string kind = member(j, "kind").get<std::string>();
  const Field field = Field::parse(member(j, "field").get<std::string>());
  const std::size_t n = infer_dim(j);
  Multiset xi0 = multiset_from_json(member(j, "xi0"), n);
  Multiset xi1 = multiset_from_json(member(j, "xi1"), n);
  std::map<DegreeVec, DenseMatrix> spaces;
  for (const auto& s : member(j, "spaces")) {
    DegreeVec w = degree_from_json(member(s, "degree"));
    if (spaces.count(w)) throw InvalidInput("two spaces given for " + w.to_string());
    spaces.emplace(std::move(w), matrix_from_json(field, member(s, "basis"), xi0.size()));
  }
  if (kind == "relation") return RelationFamily{field, std::move(xi0), std::move(xi1), std::move(spaces)};
  if (kind == "framed") return FramedFamily{field, std::move(xi0), std::move(xi1), std::move(spaces)};
  throw InvalidInput("family kind must be 'relation' or 'framed', got '" + kind + "'");
}

}  // namespace mpres
