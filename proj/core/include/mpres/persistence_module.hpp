#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpres/degree.hpp"
#include "mpres/matrix.hpp"

namespace mpres {

/// A persistence module restricted to the grid box {u : u <= box}. Outside
/// the box the module is constant: dims and structure maps are those of the
/// clamped degrees, and steps leaving the box are identities.
class PersistenceModule {
 public:
  using DimFn = std::function<std::size_t(const DegreeVec&)>;
  /// Called for every u in the box and axis with u[axis] < box[axis]; must
  /// return a dim(u + e_axis) x dim(u) matrix.
  using StepFn = std::function<DenseMatrix(const DegreeVec&, std::size_t axis)>;

  PersistenceModule(Field field, DegreeVec box, const DimFn& dims, const StepFn& steps);
  /// The zero module on the given box.
  static PersistenceModule zero(Field field, DegreeVec box);

  const Field& field() const { return field_; }
  const DegreeVec& box() const { return grid_.box(); }
  const Grid& grid() const { return grid_; }
  std::size_t ambient_dim() const { return grid_.dim(); }

  std::size_t dim(const DegreeVec& u) const;
  std::size_t dim_at_index(std::size_t index) const { return dims_[index]; }
  /// M_u -> M_{u + e_axis}.
  DenseMatrix step(const DegreeVec& u, std::size_t axis) const;
  /// x^{v-u}: M_u -> M_v, composed along a monotone path. Requires u <= v.
  DenseMatrix structure_map(const DegreeVec& u, const DegreeVec& v) const;

  /// First non-commuting square, as a description; nullopt if all commute.
  std::optional<std::string> find_noncommuting_square() const;
  bool is_zero() const;

 private:
  const DenseMatrix* stored_step(std::size_t index, std::size_t axis) const;

  Field field_;
  Grid grid_;
  std::vector<std::size_t> dims_;
  // steps_[index * n + axis]; absent where the step would leave the box.
  std::vector<std::optional<DenseMatrix>> steps_;
};

/// Same field, box, dims and step matrices.
bool same_representation(const PersistenceModule& a, const PersistenceModule& b);

}  // namespace mpres
