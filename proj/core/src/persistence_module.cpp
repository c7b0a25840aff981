#include "mpres/persistence_module.hpp"

#include "mpres/error.hpp"

namespace mpres {

PersistenceModule::PersistenceModule(Field field, DegreeVec box, const DimFn& dims,
                                     const StepFn& steps)
    : field_(field), grid_(std::move(box)) {
  const std::size_t n = grid_.dim();
  dims_.resize(grid_.size());
  for (std::size_t idx = 0; idx < grid_.size(); ++idx) dims_[idx] = dims(grid_.point(idx));
  steps_.resize(grid_.size() * n);
  for (std::size_t idx = 0; idx < grid_.size(); ++idx) {
    const DegreeVec u = grid_.point(idx);
    for (std::size_t axis = 0; axis < n; ++axis) {
      if (u[axis] >= grid_.box()[axis]) continue;
      DenseMatrix m = steps(u, axis);
      const std::size_t target = dims_[grid_.index(u.step_up(axis))];
      if (m.rows() != target || m.cols() != dims_[idx] || m.field() != field_) {
        throw DimensionMismatch("step at " + u.to_string() + " along axis " +
                                std::to_string(axis) + " has shape " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                ", expected " + std::to_string(target) + "x" +
                                std::to_string(dims_[idx]));
      }
      steps_[idx * n + axis] = std::move(m);
    }
  }
}

PersistenceModule PersistenceModule::zero(Field field, DegreeVec box) {
  return PersistenceModule(
      field, std::move(box), [](const DegreeVec&) { return std::size_t{0}; },
      [field](const DegreeVec&, std::size_t) { return DenseMatrix(field, 0, 0); });
}

std::size_t PersistenceModule::dim(const DegreeVec& u) const {
  return dims_[grid_.index(grid_.clamp(u))];
}

const DenseMatrix* PersistenceModule::stored_step(std::size_t index, std::size_t axis) const {
  const auto& slot = steps_[index * grid_.dim() + axis];
  return slot ? &*slot : nullptr;
}

DenseMatrix PersistenceModule::step(const DegreeVec& u, std::size_t axis) const {
  if (axis >= grid_.dim()) throw DimensionMismatch("step axis out of range");
  const std::size_t idx = grid_.index(grid_.clamp(u));
  if (const DenseMatrix* m = stored_step(idx, axis)) {
    if (u[axis] < grid_.box()[axis]) return *m;
  }
  return DenseMatrix::identity(field_, dims_[idx]);
}

DenseMatrix PersistenceModule::structure_map(const DegreeVec& u, const DegreeVec& v) const {
  if (!leq(u, v)) {
    throw InvalidInput("structure map needs " + u.to_string() + " <= " + v.to_string());
  }
  DegreeVec cur = grid_.clamp(u);
  const DegreeVec end = grid_.clamp(v);
  DenseMatrix acc = DenseMatrix::identity(field_, dim(cur));
  for (std::size_t axis = 0; axis < grid_.dim(); ++axis) {
    while (cur[axis] < end[axis]) {
      acc = *stored_step(grid_.index(cur), axis) * acc;
      cur = cur.step_up(axis);
    }
  }
  return acc;
}

std::optional<std::string> PersistenceModule::find_noncommuting_square() const {
  const std::size_t n = grid_.dim();
  for (std::size_t idx = 0; idx < grid_.size(); ++idx) {
    const DegreeVec u = grid_.point(idx);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] >= grid_.box()[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (u[j] >= grid_.box()[j]) continue;
        const DenseMatrix via_i = step(u.step_up(i), j) * step(u, i);
        const DenseMatrix via_j = step(u.step_up(j), i) * step(u, j);
        if (!(via_i == via_j)) {
          return "square at " + u.to_string() + " on axes " + std::to_string(i) + "," +
                 std::to_string(j) + " does not commute";
        }
      }
    }
  }
  return std::nullopt;
}

bool PersistenceModule::is_zero() const {
  for (std::size_t d : dims_) {
    if (d) return false;
  }
  return true;
}

bool same_representation(const PersistenceModule& a, const PersistenceModule& b) {
  if (a.field() != b.field() || a.box() != b.box()) return false;
  const Grid& grid = a.grid();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (a.dim_at_index(idx) != b.dim_at_index(idx)) return false;
  }
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec u = grid.point(idx);
    for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
      if (u[axis] < grid.box()[axis] && !(a.step(u, axis) == b.step(u, axis))) return false;
    }
  }
  return true;
}

}  // namespace mpres
