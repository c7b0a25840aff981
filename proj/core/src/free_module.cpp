#include "mpres/free_module.hpp"

#include "mpres/error.hpp"

namespace mpres {

FreeGradedModule::FreeGradedModule(Field field, Multiset xi)
    : field_(field), xi_(std::move(xi)) {
  for (const auto& [v, count] : xi_) {
    for (std::size_t k = 0; k < count; ++k) slot_degrees_.push_back(v);
  }
}

std::vector<std::size_t> FreeGradedModule::alive_slots(const DegreeVec& v) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < slot_degrees_.size(); ++j) {
    if (leq(slot_degrees_[j], v)) out.push_back(j);
  }
  return out;
}

bool FreeGradedModule::slot_alive(std::size_t slot, const DegreeVec& v) const {
  return leq(slot_degrees_.at(slot), v);
}

bool FreeGradedModule::is_valid_at(const DegreeVec& v, const Vec& x) const {
  if (x.size() != rank()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].field() != field_) return false;
    if (!x[j].is_zero() && !leq(slot_degrees_[j], v)) return false;
  }
  return true;
}

void FreeGradedModule::check_valid_at(const DegreeVec& v, const Vec& x) const {
  if (x.size() != rank()) {
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " in a free module of rank " + std::to_string(rank()));
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].field() != field_) throw FieldMismatch("vector entry over the wrong field");
    if (!x[j].is_zero() && !leq(slot_degrees_[j], v)) {
      throw InvalidInput("nonzero coefficient on slot " + std::to_string(j) + " of degree " +
                         slot_degrees_[j].to_string() + " at degree " + v.to_string());
    }
  }
}

DenseMatrix FreeGradedModule::alive_inclusion(const DegreeVec& v) const {
  const auto alive = alive_slots(v);
  DenseMatrix out(field_, rank(), alive.size());
  for (std::size_t k = 0; k < alive.size(); ++k) out.set(alive[k], k, 1);
  return out;
}

Vec tau_embed(const FreeGradedModule& F, const DegreeVec& v, const Vec& x) {
  F.check_valid_at(v, x);
  return x;
}

Vec shift_vector(const FreeGradedModule& F, const DegreeVec& from, const DegreeVec& to,
                 const Vec& x) {
  if (!leq(from, to)) {
    throw InvalidInput("cannot shift from " + from.to_string() + " to " + to.to_string());
  }
  F.check_valid_at(from, x);
  return x;
}

}  // namespace mpres
