#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpres/degree.hpp"

namespace mpres {

/// Finite multiset of degrees xi = (V, mu). Iteration is in lexicographic
/// degree order.
class Multiset {
 public:
  explicit Multiset(std::size_t n) : n_(n) {}
  Multiset(std::size_t n, std::initializer_list<std::pair<DegreeVec, std::size_t>> entries);

  std::size_t ambient_dim() const { return n_; }
  /// Adds `count` copies of v (count 0 is a no-op).
  void add(const DegreeVec& v, std::size_t count = 1);
  std::size_t multiplicity(const DegreeVec& v) const;
  bool contains(const DegreeVec& v) const { return entries_.count(v) != 0; }
  /// |xi| = sum of multiplicities.
  std::size_t size() const;
  bool empty() const { return entries_.empty(); }
  std::vector<DegreeVec> support() const;
  const std::map<DegreeVec, std::size_t>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// "{(0 0):2, (1 3):1}"
  std::string to_string() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::size_t n_;
  std::map<DegreeVec, std::size_t> entries_;
};

/// xi1 dominates xi0: every v in xi1 is strictly above every w in xi0.
bool dominates(const Multiset& xi1, const Multiset& xi0);

/// Sum of mu(w) over w <= v; the dimension of F(xi)_v.
std::size_t graded_dim(const Multiset& xi, const DegreeVec& v);

/// Parses "{(v1 ... vn):mult, ...}". An empty multiset needs `n` from the caller.
Multiset parse_multiset(std::string_view text, std::size_t n_if_empty = 0);

}  // namespace mpres
