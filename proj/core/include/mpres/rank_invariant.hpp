#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "mpres/degree.hpp"
#include "mpres/multiset.hpp"
#include "mpres/persistence_module.hpp"

namespace mpres {

struct TypeInvariant {
  Multiset xi0;
  Multiset xi1;

  friend bool operator==(const TypeInvariant&, const TypeInvariant&) = default;
};

TypeInvariant type_invariant(const PersistenceModule& M);

struct RankEntry {
  std::size_t rank = 0;
  std::size_t dim = 0;  // dim M_u

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// (u, v) -> (rank M_u -> M_v, dim M_u) for all u <= v <= box. Queries
/// outside the box are clamped.
class RankInvariant {
 public:
  using Table = std::map<std::pair<DegreeVec, DegreeVec>, RankEntry>;

  RankInvariant(DegreeVec box, Table table);

  const DegreeVec& box() const { return box_; }
  std::size_t ambient_dim() const { return box_.dim(); }
  const Table& table() const { return table_; }
  std::size_t rank(const DegreeVec& u, const DegreeVec& v) const;
  std::size_t dim(const DegreeVec& u) const;

  friend bool operator==(const RankInvariant& a, const RankInvariant& b) {
    return a.box_ == b.box_ && a.table_ == b.table_;
  }

 private:
  const RankEntry& entry(const DegreeVec& u, const DegreeVec& v) const;

  DegreeVec box_;
  Grid grid_;
  Table table_;
};

RankInvariant rank_invariant(const PersistenceModule& M);

}  // namespace mpres
