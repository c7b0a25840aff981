#include "mpres/presentation.hpp"

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {
namespace {

std::vector<Vec> incoming_images(const PersistenceModule& M, const DegreeVec& v) {
  std::vector<Vec> images;
  for (std::size_t axis = 0; axis < v.dim(); ++axis) {
    if (v[axis] == 0) continue;
    const DenseMatrix s = M.step(v.step_down(axis), axis);
    for (std::size_t c = 0; c < s.cols(); ++c) images.push_back(s.column(c));
  }
  return images;
}

// Quotient coordinates of F_v / L_v: the alive slots that are not pivots of L_v.
std::vector<std::size_t> quotient_slots(const FreeGradedModule& F, const DegreeVec& v,
                                        const EchelonBasis& L) {
  std::vector<bool> pivot(F.rank(), false);
  for (auto p : L.pivots()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (auto slot : F.alive_slots(v)) {
    if (!pivot[slot]) out.push_back(slot);
  }
  return out;
}

EchelonBasis span_at(const FreeGradedModule& F, std::span<const HomogeneousElement> gens,
                     const DegreeVec& v) {
  EchelonBasis basis(F.field(), F.rank());
  for (const auto& g : gens) {
    if (leq(g.degree, v)) basis.insert(g.vector);
  }
  return basis;
}

void check_generators(const FreeGradedModule& F, std::span<const HomogeneousElement> gens) {
  for (const auto& g : gens) {
    if (g.degree.dim() != F.ambient_dim()) {
      throw DimensionMismatch("generator degree " + g.degree.to_string() +
                              " has the wrong length");
    }
    F.check_valid_at(g.degree, g.vector);
  }
}

DegreeVec resolve_box(const FreeGradedModule& F, std::span<const HomogeneousElement> gens,
                      const std::optional<DegreeVec>& box) {
  const DegreeVec needed = required_box(F, gens);
  if (!box) return needed;
  if (box->dim() != needed.dim() || !leq(needed, *box)) {
    throw InvalidInput("box " + box->to_string() + " does not contain " + needed.to_string());
  }
  return *box;
}

}  // namespace

std::size_t incoming_rank(const PersistenceModule& M, const DegreeVec& v) {
  const std::size_t d = M.dim(v);
  const auto images = incoming_images(M, v);
  return rank_of(DenseMatrix::from_rows(M.field(), images, d));
}

MinimalGenerators minimal_generators(const PersistenceModule& M) {
  MinimalGenerators out{Multiset(M.ambient_dim()), {}};
  const Grid& grid = M.grid();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec v = grid.point(idx);
    const std::size_t d = M.dim_at_index(idx);
    if (d == 0) continue;
    const auto images = incoming_images(M, v);
    const RrefResult r = rref(DenseMatrix::from_rows(M.field(), images, d));
    if (r.rank == d) continue;
    std::vector<bool> pivot(d, false);
    for (auto p : r.pivot_cols) pivot[p] = true;
    std::vector<Vec> lifts;
    for (std::size_t c = 0; c < d; ++c) {
      if (!pivot[c]) lifts.push_back(unit_vec(M.field(), d, c));
    }
    out.xi0.add(v, lifts.size());
    out.lifts.emplace(v, std::move(lifts));
  }
  return out;
}

FreeHull free_hull(const PersistenceModule& M) { return free_hull(M, minimal_generators(M)); }

FreeHull free_hull(const PersistenceModule& M, const MinimalGenerators& gens) {
  FreeHull hull{FreeGradedModule(M.field(), gens.xi0), M.grid(), {}};
  const FreeGradedModule& F = hull.F;
  const Grid& grid = hull.grid;
  const std::size_t m0 = F.rank();

  hull.p0.reserve(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec v = grid.point(idx);
    DenseMatrix p(M.field(), M.dim_at_index(idx), m0);
    for (std::size_t j = 0; j < m0; ++j) {
      const DegreeVec& g = F.slot_degree(j);
      if (!leq(g, v)) continue;
      Vec col;
      if (g == v) {
        std::size_t copy = 0;
        for (std::size_t k = j; k > 0 && F.slot_degree(k - 1) == g; --k) ++copy;
        col = gens.lifts.at(g).at(copy);
      } else {
        std::size_t axis = 0;
        while (g[axis] >= v[axis]) ++axis;
        const DegreeVec below = v.step_down(axis);
        col = M.step(below, axis) * hull.p0[grid.index(below)].column(j);
      }
      for (std::size_t r = 0; r < col.size(); ++r) p.set(r, j, col[r]);
    }
    hull.p0.push_back(std::move(p));
  }
  return hull;
}

KernelModule kernel_module(const FreeHull& hull, const PersistenceModule& M) {
  const FreeGradedModule& F = hull.F;
  const Grid& grid = hull.grid;
  const Field field = M.field();
  std::vector<DenseMatrix> basis;
  basis.reserve(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec v = grid.point(idx);
    const auto alive = F.alive_slots(v);
    std::vector<Vec> rows;
    for (const Vec& k : kernel_basis(hull.p0[idx].select_columns(alive))) {
      Vec full = zero_vec(field, F.rank());
      for (std::size_t i = 0; i < alive.size(); ++i) full[alive[i]] = k[i];
      rows.push_back(std::move(full));
    }
    if (rows.size() + M.dim_at_index(idx) != alive.size()) {
      throw InternalError("free hull is not surjective at " + v.to_string());
    }
    basis.push_back(DenseMatrix::from_rows(field, rows, F.rank()));
  }

  PersistenceModule module(
      field, grid.box(), [&](const DegreeVec& v) { return basis[grid.index(v)].rows(); },
      [&](const DegreeVec& v, std::size_t axis) {
        const DenseMatrix& src = basis[grid.index(v)];
        const std::vector<Vec> dst = basis[grid.index(v.step_up(axis))].row_vectors();
        DenseMatrix m(field, dst.size(), src.rows());
        for (std::size_t c = 0; c < src.rows(); ++c) {
          auto coeffs = solve_in_span(field, dst, src.row(c));
          if (!coeffs) throw InternalError("kernel is not closed under shifts at " + v.to_string());
          for (std::size_t r = 0; r < dst.size(); ++r) m.set(r, c, (*coeffs)[r]);
        }
        return m;
      });
  return KernelModule{std::move(module), std::move(basis)};
}

Presentation minimal_presentation(const PersistenceModule& M) {
  const MinimalGenerators gens = minimal_generators(M);
  const FreeHull hull = free_hull(M, gens);
  const KernelModule K = kernel_module(hull, M);
  const MinimalGenerators rel = minimal_generators(K.module);

  Presentation out{M.field(), gens.xi0, rel.xi0, {}};
  for (const auto& [w, lifts] : rel.lifts) {
    const DenseMatrix& basis = K.basis[hull.grid.index(w)];
    for (const Vec& c : lifts) {
      Vec vec = zero_vec(M.field(), hull.F.rank());
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) vec = axpy(vec, c[k], basis.row(k));
      }
      out.relations.push_back({w, std::move(vec)});
    }
  }
  return out;
}

DenseMatrix submodule_span(const FreeGradedModule& F, std::span<const HomogeneousElement> gens,
                           const DegreeVec& v) {
  check_generators(F, gens);
  std::vector<Vec> rows;
  for (const auto& g : gens) {
    if (leq(g.degree, v)) rows.push_back(g.vector);
  }
  return row_space_basis(DenseMatrix::from_rows(F.field(), rows, F.rank()));
}

bool tensor_condition(const FreeGradedModule& F, std::span<const HomogeneousElement> gens) {
  check_generators(F, gens);
  for (const auto& [v, mult] : F.xi()) {
    bool is_relation_degree = false;
    for (const auto& g : gens) is_relation_degree = is_relation_degree || g.degree == v;
    if (!is_relation_degree) continue;
    for (const auto& g : gens) {
      if (!leq(g.degree, v)) continue;
      for (std::size_t j = 0; j < F.rank(); ++j) {
        if (F.slot_degree(j) == v && !g.vector[j].is_zero()) return false;
      }
    }
  }
  return true;
}

bool tensor_condition(std::span<const HomogeneousElement> gens, const Multiset& xi0) {
  if (gens.empty() || xi0.empty()) return true;
  if (gens.front().vector.empty()) throw DimensionMismatch("generator vector has length 0");
  return tensor_condition(FreeGradedModule(gens.front().vector.front().field(), xi0), gens);
}

DegreeVec required_box(const FreeGradedModule& F, std::span<const HomogeneousElement> gens) {
  DegreeVec box(F.ambient_dim());
  for (const auto& g : F.slot_degrees()) box = join(box, g);
  for (const auto& g : gens) box = join(box, g.degree);
  return box;
}

PersistenceModule quotient_module(const FreeGradedModule& F,
                                  std::span<const HomogeneousElement> gens,
                                  std::optional<DegreeVec> box) {
  check_generators(F, gens);
  const Grid grid(resolve_box(F, gens, box));
  std::vector<EchelonBasis> spans;
  std::vector<std::vector<std::size_t>> slots;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const DegreeVec v = grid.point(idx);
    spans.push_back(span_at(F, gens, v));
    slots.push_back(quotient_slots(F, v, spans.back()));
  }
  return PersistenceModule(
      F.field(), grid.box(), [&](const DegreeVec& v) { return slots[grid.index(v)].size(); },
      [&](const DegreeVec& v, std::size_t axis) {
        const std::size_t to = grid.index(v.step_up(axis));
        const auto& src = slots[grid.index(v)];
        const auto& dst = slots[to];
        DenseMatrix m(F.field(), dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
          const Vec reduced = spans[to].reduce(unit_vec(F.field(), F.rank(), src[c]));
          for (std::size_t r = 0; r < dst.size(); ++r) m.set(r, c, reduced[dst[r]]);
        }
        return m;
      });
}

PersistenceModule submodule_module(const FreeGradedModule& F,
                                   std::span<const HomogeneousElement> gens,
                                   std::optional<DegreeVec> box) {
  check_generators(F, gens);
  const Grid grid(resolve_box(F, gens, box));
  std::vector<std::vector<Vec>> bases;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    bases.push_back(submodule_span(F, gens, grid.point(idx)).row_vectors());
  }
  return PersistenceModule(
      F.field(), grid.box(), [&](const DegreeVec& v) { return bases[grid.index(v)].size(); },
      [&](const DegreeVec& v, std::size_t axis) {
        const auto& src = bases[grid.index(v)];
        const auto& dst = bases[grid.index(v.step_up(axis))];
        DenseMatrix m(F.field(), dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
          auto coeffs = solve_in_span(F.field(), dst, src[c]);
          if (!coeffs) throw InternalError("submodule is not closed under shifts");
          for (std::size_t r = 0; r < dst.size(); ++r) m.set(r, c, (*coeffs)[r]);
        }
        return m;
      });
}

std::vector<Multiset> resolve(const PersistenceModule& M, std::size_t max_steps) {
  if (max_steps == 0) throw InvalidInput("resolve needs max_steps >= 1");
  std::vector<Multiset> out;
  PersistenceModule current = M;
  for (;;) {
    const MinimalGenerators gens = minimal_generators(current);
    out.push_back(gens.xi0);
    if (gens.xi0.empty() || out.size() == max_steps) break;
    current = kernel_module(free_hull(current, gens), current).module;
  }
  return out;
}

}  // namespace mpres
