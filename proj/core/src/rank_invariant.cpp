#include "mpres/rank_invariant.hpp"

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"
#include "mpres/presentation.hpp"

namespace mpres {

TypeInvariant type_invariant(const PersistenceModule& M) {
  Presentation p = minimal_presentation(M);
  return TypeInvariant{std::move(p.xi0), std::move(p.xi1)};
}

RankInvariant::RankInvariant(DegreeVec box, Table table)
    : box_(std::move(box)), grid_(box_), table_(std::move(table)) {
  for (std::size_t a = 0; a < grid_.size(); ++a) {
    const DegreeVec u = grid_.point(a);
    for (std::size_t b = a; b < grid_.size(); ++b) {
      const DegreeVec v = grid_.point(b);
      if (leq(u, v) && !table_.count({u, v})) {
        throw InvalidInput("rank table is missing (" + u.to_string() + ", " + v.to_string() +
                           ")");
      }
    }
  }
}

const RankEntry& RankInvariant::entry(const DegreeVec& u, const DegreeVec& v) const {
  if (!leq(u, v)) throw InvalidInput("rank needs " + u.to_string() + " <= " + v.to_string());
  return table_.at({grid_.clamp(u), grid_.clamp(v)});
}

std::size_t RankInvariant::rank(const DegreeVec& u, const DegreeVec& v) const {
  return entry(u, v).rank;
}

std::size_t RankInvariant::dim(const DegreeVec& u) const { return entry(u, u).dim; }

RankInvariant rank_invariant(const PersistenceModule& M) {
  const Grid& grid = M.grid();
  RankInvariant::Table table;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    const DegreeVec u = grid.point(a);
    const std::size_t du = M.dim_at_index(a);
    for (std::size_t b = a; b < grid.size(); ++b) {
      const DegreeVec v = grid.point(b);
      if (!leq(u, v)) continue;
      table.emplace(std::make_pair(u, v), RankEntry{rank_of(M.structure_map(u, v)), du});
    }
  }
  return RankInvariant(M.box(), std::move(table));
}

}  // namespace mpres
