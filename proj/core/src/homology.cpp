#include "mpres/homology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {
namespace {

struct ChainData {
  DenseMatrix d_l;       // C_l -> C_{l-1}
  DenseMatrix d_above;   // C_{l+1} -> C_l
  const std::vector<std::size_t>* cells;
  const std::vector<std::size_t>* cofaces;
};

HomologyResult compute(const MultifilteredComplex& X, const ChainData& data,
                       const DegreeVec& u, Field field) {
  const auto& simplices = X.simplices();
  std::vector<std::size_t> alive;
  for (std::size_t k = 0; k < data.cells->size(); ++k) {
    if (simplices[(*data.cells)[k]].alive_at(u)) alive.push_back(k);
  }
  const std::size_t length = data.cells->size();

  EchelonBasis span(field, length);
  HomologyResult out;
  for (std::size_t k = 0; k < data.cofaces->size(); ++k) {
    if (!simplices[(*data.cofaces)[k]].alive_at(u)) continue;
    Vec col = data.d_above.column(k);
    if (span.insert(col)) out.boundaries.push_back(std::move(col));
  }

  const DenseMatrix restricted = data.d_l.select_columns(alive);
  for (const Vec& z : kernel_basis(restricted)) {
    Vec cycle = zero_vec(field, length);
    for (std::size_t k = 0; k < alive.size(); ++k) cycle[alive[k]] = z[k];
    if (span.insert(cycle)) out.basis.push_back(std::move(cycle));
  }
  out.dim = out.basis.size();
  return out;
}

ChainData chain_data(const MultifilteredComplex& X, std::size_t l, Field field) {
  return ChainData{boundary_matrix(X, l, field), boundary_matrix(X, l + 1, field),
                   &X.simplices_of_dim(l), &X.simplices_of_dim(l + 1)};
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

DenseMatrix boundary_matrix(const MultifilteredComplex& X, std::size_t l, Field field) {
  const auto& cells = X.simplices_of_dim(l);
  if (l == 0) return DenseMatrix(field, 0, cells.size());
  const auto& faces = X.simplices_of_dim(l - 1);
  DenseMatrix d(field, faces.size(), cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& vertices = X.simplices()[cells[c]].vertices;
    for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
      auto face = vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      d.set(X.position_in_dim(face), c, drop % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

HomologyResult homology_at(const MultifilteredComplex& X, const DegreeVec& u, int l,
                           Field field) {
  if (l < 0) throw InvalidInput("homological degree must be >= 0");
  if (u.dim() != X.ambient_dim()) throw DimensionMismatch("homology_at: dimension mismatch");
  return compute(X, chain_data(X, static_cast<std::size_t>(l), field), u, field);
}

PersistenceModule build_persistence_module(const MultifilteredComplex& X, int l, Field field,
                                           unsigned threads) {
  if (l < 0) throw InvalidInput("homological degree must be >= 0");
  const ChainData data = chain_data(X, static_cast<std::size_t>(l), field);
  const Grid grid(X.box());
  const std::size_t n = grid.dim();

  std::vector<HomologyResult> homology(grid.size());
  parallel_for(grid.size(), threads,
               [&](std::size_t idx) { homology[idx] = compute(X, data, grid.point(idx), field); });

  std::vector<std::optional<DenseMatrix>> steps(grid.size() * n);
  parallel_for(grid.size() * n, threads, [&](std::size_t job) {
    const std::size_t idx = job / n;
    const std::size_t axis = job % n;
    const DegreeVec u = grid.point(idx);
    if (u[axis] >= grid.box()[axis]) return;
    const HomologyResult& src = homology[idx];
    const HomologyResult& dst = homology[grid.index(u.step_up(axis))];
    std::vector<Vec> basis = dst.basis;
    basis.insert(basis.end(), dst.boundaries.begin(), dst.boundaries.end());
    DenseMatrix m(field, dst.dim, src.dim);
    for (std::size_t c = 0; c < src.dim; ++c) {
      auto coeffs = solve_in_span(field, basis, src.basis[c]);
      if (!coeffs) throw InternalError("cycle does not survive an inclusion at " + u.to_string());
      for (std::size_t r = 0; r < dst.dim; ++r) m.set(r, c, (*coeffs)[r]);
    }
    steps[job] = std::move(m);
  });

  return PersistenceModule(
      field, grid.box(),
      [&](const DegreeVec& u) { return homology[grid.index(u)].dim; },
      [&](const DegreeVec& u, std::size_t axis) { return *steps[grid.index(u) * n + axis]; });
}

}  // namespace mpres
