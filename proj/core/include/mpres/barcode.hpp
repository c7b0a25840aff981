#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpres/persistence_module.hpp"
#include "mpres/rank_invariant.hpp"

namespace mpres {

/// [birth, death); no death means the bar never ends.
struct Bar {
  std::uint32_t birth = 0;
  std::optional<std::uint32_t> death;

  bool contains(std::uint32_t t) const { return birth <= t && (!death || t < *death); }
  std::string to_string() const;

  friend auto operator<=>(const Bar&, const Bar&) = default;
};

/// A multiset of bars, kept sorted.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const { return bars_; }
  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }
  std::string to_string() const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

/// One-parameter barcode. Bars alive at the top of the box get no death.
/// Throws InvalidInput unless M has n = 1.
Barcode barcode(const PersistenceModule& M);

/// rank(u, v) = #{bars containing [u, v]}, dim(u) = rank(u, u), for u <= v <= top.
RankInvariant rank_from_barcode(const Barcode& B, std::uint32_t top);

/// Inverse of rank_from_barcode. Throws InvalidInput naming the violated
/// inequality when no barcode realizes the table.
Barcode barcode_from_rank(const RankInvariant& R);

}  // namespace mpres
