#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mpres/linalg.hpp"

namespace mpres::fixtures {
namespace {

std::uint32_t uniform(std::mt19937& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

Vec random_vec(Field field, std::size_t length, std::mt19937& rng) {
  Vec v;
  for (std::size_t i = 0; i < length; ++i) {
    v.emplace_back(field, static_cast<std::int64_t>(uniform(rng, 0, field.characteristic() - 1)));
  }
  return v;
}

}  // namespace

PersistenceModule interval_sum_module(Field field, const Barcode& bars, std::uint32_t top) {
  auto alive = [&](std::uint32_t t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bars.size(); ++i) {
      if (bars.bars()[i].contains(t)) out.push_back(i);
    }
    return out;
  };
  return PersistenceModule(
      field, DegreeVec{top}, [&](const DegreeVec& u) { return alive(u[0]).size(); },
      [&](const DegreeVec& u, std::size_t) {
        const auto src = alive(u[0]);
        const auto dst = alive(u[0] + 1);
        DenseMatrix m(field, dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
          auto it = std::find(dst.begin(), dst.end(), src[c]);
          if (it != dst.end()) m.set(static_cast<std::size_t>(it - dst.begin()), c, 1);
        }
        return m;
      });
}

DenseMatrix random_invertible(Field field, std::size_t k, std::mt19937& rng) {
  for (;;) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < k; ++r) rows.push_back(random_vec(field, k, rng));
    DenseMatrix m = DenseMatrix::from_rows(field, rows, k);
    if (is_invertible(m)) return m;
  }
}

PersistenceModule scramble_bases(const PersistenceModule& M, std::mt19937& rng) {
  const Grid& grid = M.grid();
  std::vector<DenseMatrix> change;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    change.push_back(random_invertible(M.field(), M.dim_at_index(idx), rng));
  }
  return PersistenceModule(
      M.field(), M.box(), [&](const DegreeVec& u) { return M.dim(u); },
      [&](const DegreeVec& u, std::size_t axis) {
        return change[grid.index(u.step_up(axis))] * M.step(u, axis) *
               inverse(change[grid.index(u)]);
      });
}

Barcode random_barcode(std::mt19937& rng, std::uint32_t top, std::size_t max_alive) {
  std::vector<Bar> bars;
  const std::uint32_t attempts = uniform(rng, 0, 10);
  for (std::uint32_t a = 0; a < attempts; ++a) {
    Bar bar;
    bar.birth = uniform(rng, 0, top);
    const std::uint32_t end = uniform(rng, bar.birth + 1, top + 1);
    if (end <= top) bar.death = end;
    bool fits = true;
    for (std::uint32_t t = 0; t <= top && fits; ++t) {
      std::size_t alive = bar.contains(t) ? 1 : 0;
      for (const Bar& b : bars) alive += b.contains(t) ? 1 : 0;
      fits = alive <= max_alive;
    }
    if (fits) bars.push_back(bar);
  }
  return Barcode(std::move(bars));
}

MultifilteredComplex random_bifiltration(std::mt19937& rng, std::size_t max_simplices,
                                         std::uint32_t bound) {
  std::vector<Simplex> simplices;
  std::map<std::vector<std::uint32_t>, std::size_t> index;

  auto random_entries = [&](const std::vector<std::vector<DegreeVec>*>& faces) {
    auto one = [&] {
      DegreeVec base{0, 0};
      for (const auto* entries : faces) {
        base = join(base, (*entries)[uniform(rng, 0, static_cast<std::uint32_t>(entries->size() - 1))]);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        base[i] = std::min(bound, base[i] + (uniform(rng, 0, 3) == 0 ? uniform(rng, 0, bound) : 0));
      }
      return base;
    };
    std::vector<DegreeVec> entries{one()};
    if (uniform(rng, 0, 4) == 0) {
      DegreeVec other = one();
      if (!leq(entries[0], other) && !leq(other, entries[0])) entries.push_back(other);
    }
    return entries;
  };
  auto add = [&](std::vector<std::uint32_t> vertices) {
    std::vector<std::vector<DegreeVec>*> faces;
    if (vertices.size() > 1) {
      for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
        auto face = vertices;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        faces.push_back(&simplices[index.at(face)].entries);
      }
    }
    Simplex s;
    s.entries = faces.empty() ? std::vector<DegreeVec>{} : random_entries(faces);
    if (faces.empty()) {
      s.entries.push_back(DegreeVec{uniform(rng, 0, bound), uniform(rng, 0, bound)});
      if (uniform(rng, 0, 5) == 0) {
        DegreeVec other{uniform(rng, 0, bound), uniform(rng, 0, bound)};
        if (!leq(s.entries[0], other) && !leq(other, s.entries[0])) s.entries.push_back(other);
      }
    }
    s.vertices = vertices;
    index.emplace(vertices, simplices.size());
    simplices.push_back(std::move(s));
  };

  const std::uint32_t nv = uniform(rng, 2, 6);
  for (std::uint32_t v = 0; v < nv && simplices.size() < max_simplices; ++v) add({v});
  for (std::uint32_t a = 0; a < nv; ++a) {
    for (std::uint32_t b = a + 1; b < nv; ++b) {
      if (simplices.size() < max_simplices && uniform(rng, 0, 2) != 0 && index.count({a}) &&
          index.count({b})) {
        add({a, b});
      }
    }
  }
  for (std::uint32_t a = 0; a < nv; ++a)
    for (std::uint32_t b = a + 1; b < nv; ++b)
      for (std::uint32_t c = b + 1; c < nv; ++c) {
        if (simplices.size() < max_simplices && index.count({a, b}) && index.count({a, c}) &&
            index.count({b, c}) && uniform(rng, 0, 1) == 0) {
          add({a, b, c});
        }
      }
  return MultifilteredComplex(2, std::move(simplices));
}

MultifilteredComplex shuffled(const MultifilteredComplex& X, std::mt19937& rng) {
  std::vector<Simplex> simplices = X.simplices();
  std::shuffle(simplices.begin(), simplices.end(), rng);
  return MultifilteredComplex(X.ambient_dim(), std::move(simplices));
}

std::string to_filtration_text(const MultifilteredComplex& X) {
  std::ostringstream os;
  os << "dim " << X.ambient_dim() << '\n';
  for (const Simplex& s : X.simplices()) {
    os << "simplex";
    for (auto v : s.vertices) os << ' ' << v;
    os << " @";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      os << (i ? " | " : " ") << s.entries[i].to_string();
    }
    os << '\n';
  }
  return os.str();
}

Multiset PaperExamples::small_xi0() { return Multiset(1, {{d1(1), 1}, {d1(2), 1}}); }

std::vector<HomogeneousElement> PaperExamples::small_L(Field f) {
  return {{d1(2), vec_from_ints(f, {1, 0})}, {d1(3), vec_from_ints(f, {0, 1})}};
}

std::vector<HomogeneousElement> PaperExamples::small_N(Field f) {
  return {{d1(3), vec_from_ints(f, {1, 0})}, {d1(2), vec_from_ints(f, {0, 1})}};
}

std::vector<DegreeVec> PaperExamples::monomial_degrees() {
  return {d2(3, 0), d2(2, 1), d2(1, 2), d2(0, 3)};
}

PersistenceModule PaperExamples::monomial_ideal_module(Field f) {
  const FreeGradedModule A(f, Multiset(2, {{d2(0, 0), 1}}));
  std::vector<HomogeneousElement> gens;
  for (const auto& d : monomial_degrees()) gens.push_back({d, vec_from_ints(f, {1})});
  return submodule_module(A, gens, d2(4, 4));
}

Multiset PaperExamples::rank_two_xi0() { return Multiset(2, {{d2(0, 0), 2}}); }

Multiset PaperExamples::four_monomials_xi1() {
  Multiset xi(2);
  for (const auto& d : monomial_degrees()) xi.add(d);
  return xi;
}

std::vector<HomogeneousElement> PaperExamples::rank_two_L(Field f) {
  std::vector<HomogeneousElement> gens;
  for (const auto& d : monomial_degrees()) gens.push_back({d, vec_from_ints(f, {1, 0})});
  return gens;
}

std::vector<HomogeneousElement> PaperExamples::rank_two_N(Field f) {
  return {{d2(3, 0), vec_from_ints(f, {1, 1})},
          {d2(2, 1), vec_from_ints(f, {1, 0})},
          {d2(1, 2), vec_from_ints(f, {1, 0})},
          {d2(0, 3), vec_from_ints(f, {0, 1})}};
}

RelationFamily PaperExamples::dim_one_family(Field f) {
  RelationFamily fam{f, Multiset(1, {{d1(1), 2}, {d1(2), 1}, {d1(3), 2}}),
                     Multiset(1, {{d1(2), 1}, {d1(3), 1}, {d1(4), 2}}), {}};
  fam.spaces.emplace(d1(2), DenseMatrix::from_ints(f, {{1, 0, 0, 0, 0}}));
  fam.spaces.emplace(d1(3), DenseMatrix::from_ints(f, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
  fam.spaces.emplace(d1(4), DenseMatrix::from_ints(f, {{1, 0, 0, 0, 0},
                                                       {0, 1, 0, 0, 0},
                                                       {0, 0, 1, 0, 0},
                                                       {0, 0, 0, 1, 0}}));
  return fam;
}

RelationFamily PaperExamples::dim_two_family(Field f) {
  RelationFamily fam{f, rank_two_xi0(), four_monomials_xi1(), {}};
  for (const auto& d : monomial_degrees()) fam.spaces.emplace(d, DenseMatrix::from_ints(f, {{1, 0}}));
  return fam;
}

MultifilteredComplex triangle(std::uint32_t vertex_deg, std::uint32_t edge_deg, int fill_deg) {
  std::vector<Simplex> s;
  for (std::uint32_t v = 0; v < 3; ++v) s.push_back({{v}, {d1(vertex_deg)}, 0});
  s.push_back({{0, 1}, {d1(edge_deg)}, 0});
  s.push_back({{0, 2}, {d1(edge_deg)}, 0});
  s.push_back({{1, 2}, {d1(edge_deg)}, 0});
  if (fill_deg >= 0) s.push_back({{0, 1, 2}, {d1(static_cast<std::uint32_t>(fill_deg))}, 0});
  return MultifilteredComplex(1, std::move(s));
}

RelationFamily random_relation_family(std::mt19937& rng, std::uint32_t q) {
  const Field field = Field::prime(q);
  for (;;) {
    const std::size_t n = uniform(rng, 1, 2);
    auto random_degree = [&](std::uint32_t hi) {
      DegreeVec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, 0, hi);
      return v;
    };
    Multiset xi0(n);
    const std::uint32_t g0 = uniform(rng, 1, 3);
    for (std::uint32_t i = 0; i < g0 && xi0.size() < 4; ++i) xi0.add(random_degree(2), uniform(rng, 1, 2));
    Multiset xi1(n);
    const std::uint32_t g1 = uniform(rng, 1, 3);
    for (std::uint32_t i = 0; i < g1; ++i) xi1.add(random_degree(4), uniform(rng, 1, 2));

    const FreeGradedModule F(field, xi0);
    RelationFamily fam{field, xi0, xi1, {}};
    bool ok = true;
    for (const auto& [w, mult] : xi1) {
      std::vector<std::size_t> allowed;
      for (std::size_t j = 0; j < F.rank(); ++j) {
        if (lt(F.slot_degree(j), w)) allowed.push_back(j);
      }
      EchelonBasis span(field, F.rank());
      std::vector<Vec> rows;
      for (const auto& [v, Lv] : fam.spaces) {
        if (!lt(v, w)) continue;
        for (std::size_t r = 0; r < Lv.rows(); ++r) {
          if (span.insert(Lv.row(r))) rows.push_back(Lv.row(r));
        }
      }
      if (span.dim() + mult != graded_dim(xi1, w) || span.dim() + mult > allowed.size()) {
        ok = false;
        break;
      }
      std::size_t added = 0;
      for (int attempt = 0; attempt < 50 && added < mult; ++attempt) {
        Vec v = zero_vec(field, F.rank());
        for (auto j : allowed) v[j] = Scalar(field, static_cast<std::int64_t>(uniform(rng, 0, q - 1)));
        if (span.insert(v)) {
          rows.push_back(std::move(v));
          ++added;
        }
      }
      if (added < mult) {
        ok = false;
        break;
      }
      std::shuffle(rows.begin(), rows.end(), rng);
      fam.spaces.emplace(w, DenseMatrix::from_rows(field, rows, F.rank()));
    }
    if (ok && verify_relation_family(fam).ok) return fam;
  }
}

}  // namespace mpres::fixtures
