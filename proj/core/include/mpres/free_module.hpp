#pragma once

#include <cstddef>
#include <vector>

#include "mpres/degree.hpp"
#include "mpres/matrix.hpp"
#include "mpres/multiset.hpp"

namespace mpres {

/// The free graded module F(xi). Generator slots 0..m0-1 follow the
/// lexicographic order of degrees with multiplicity copies adjacent.
/// An element of F(xi)_v is a length-m0 coefficient vector that vanishes on
/// slots whose degree is not <= v; the coefficient of slot j stands for
/// x^{v - deg(j)} e_j.
class FreeGradedModule {
 public:
  FreeGradedModule(Field field, Multiset xi);

  const Field& field() const { return field_; }
  const Multiset& xi() const { return xi_; }
  std::size_t ambient_dim() const { return xi_.ambient_dim(); }
  std::size_t rank() const { return slot_degrees_.size(); }
  const DegreeVec& slot_degree(std::size_t slot) const { return slot_degrees_.at(slot); }
  const std::vector<DegreeVec>& slot_degrees() const { return slot_degrees_; }

  /// Slots whose degree is <= v, increasing.
  std::vector<std::size_t> alive_slots(const DegreeVec& v) const;
  bool slot_alive(std::size_t slot, const DegreeVec& v) const;
  std::size_t dim_at(const DegreeVec& v) const { return graded_dim(xi_, v); }

  /// True iff x has length m0 and vanishes on dead slots at v.
  bool is_valid_at(const DegreeVec& v, const Vec& x) const;
  /// Throws InvalidInput unless is_valid_at(v, x).
  void check_valid_at(const DegreeVec& v, const Vec& x) const;

  /// Dense matrix whose columns are the unit vectors of the alive slots;
  /// maps F^{dim F_v} (alive-slot coordinates) into F^{m0}.
  DenseMatrix alive_inclusion(const DegreeVec& v) const;

 private:
  Field field_;
  Multiset xi_;
  std::vector<DegreeVec> slot_degrees_;
};

/// tau_v: F(xi)_v -> F^{m0}. Validates x and returns its coordinates.
Vec tau_embed(const FreeGradedModule& F, const DegreeVec& v, const Vec& x);

/// Multiplication by x^{to - from}. Throws InvalidInput unless from <= to.
Vec shift_vector(const FreeGradedModule& F, const DegreeVec& from, const DegreeVec& to,
                 const Vec& x);

}  // namespace mpres
