#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mpres {

/// A point of N^n. The built-in comparison is lexicographic (used for
/// canonical orderings and as map key); the product partial order is leq().
class DegreeVec {
 public:
  DegreeVec() = default;
  explicit DegreeVec(std::size_t n) : coords_(n, 0) {}
  DegreeVec(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit DegreeVec(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  /// this + e_axis
  DegreeVec step_up(std::size_t axis) const;
  /// this - e_axis; requires the coordinate to be positive.
  DegreeVec step_down(std::size_t axis) const;

  std::string to_string() const;  // "(a b c)"

  friend auto operator<=>(const DegreeVec&, const DegreeVec&) = default;
  friend bool operator==(const DegreeVec&, const DegreeVec&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// u_i <= v_i for all i. Throws DimensionMismatch on unequal lengths.
bool leq(const DegreeVec& u, const DegreeVec& v);
/// leq(u, v) and u != v.
bool lt(const DegreeVec& u, const DegreeVec& v);
/// Componentwise maximum.
DegreeVec join(const DegreeVec& u, const DegreeVec& v);
/// Componentwise minimum.
DegreeVec meet(const DegreeVec& u, const DegreeVec& v);

/// Parses "(a b ... )" (whitespace or comma separated).
DegreeVec parse_degree(std::string_view text);

/// The finite box {u : u <= box} with a mixed-radix index. The first
/// coordinate is most significant, so index order is lexicographic and
/// therefore a linear extension of the partial order.
class Grid {
 public:
  Grid() = default;
  explicit Grid(DegreeVec box);

  const DegreeVec& box() const { return box_; }
  std::size_t dim() const { return box_.dim(); }
  std::size_t size() const { return size_; }
  bool contains(const DegreeVec& u) const;
  std::size_t index(const DegreeVec& u) const;  // throws if outside
  DegreeVec point(std::size_t index) const;
  /// Componentwise min(u, box).
  DegreeVec clamp(const DegreeVec& u) const;

 private:
  DegreeVec box_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace mpres
