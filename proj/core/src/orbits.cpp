#include "mpres/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mpres/block_pattern.hpp"
#include "mpres/error.hpp"
#include "mpres/linalg.hpp"

namespace mpres {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

// Candidate subspaces for each w in V1: delta1(w)-dimensional subspaces of
// the slots whose degree is strictly below w (framed condition 1).
struct Pools {
  std::vector<DegreeVec> degrees;
  std::vector<std::vector<GrassmannPoint>> points;
};

Pools candidate_pools(std::uint32_t q, const Multiset& xi0, const Multiset& xi1,
                      std::uint64_t guard) {
  if (xi0.ambient_dim() != xi1.ambient_dim()) {
    throw DimensionMismatch("xi0 and xi1 live in different dimensions");
  }
  const FreeGradedModule F(Field::prime(q), xi0);
  Pools pools;
  std::uint64_t product = 1;
  for (const auto& [w, mult] : xi1) {
    std::vector<std::size_t> slots;
    for (std::size_t j = 0; j < F.rank(); ++j) {
      if (lt(F.slot_degree(j), w)) slots.push_back(j);
    }
    auto points = grassmann_points_on(q, graded_dim(xi1, w), slots, F.rank(), guard);
    product = points.empty() ? 0 : std::min<std::uint64_t>(
                                       product > guard / points.size() ? guard + 1
                                                                        : product * points.size(),
                                       guard + 1);
    if (product > guard) {
      throw GuardExceeded("more than " + std::to_string(guard) + " candidate families");
    }
    pools.degrees.push_back(w);
    pools.points.push_back(std::move(points));
  }
  return pools;
}

// Depth-first search over pool indices, pruning on nesting and quotient
// dimension at each degree. Calls fn(choice) for each complete family.
template <typename Fn>
void search_families(const Pools& pools, const Multiset& xi1, Field field, std::size_t m0,
                     Fn&& fn) {
  const std::size_t k = pools.degrees.size();
  std::vector<std::size_t> choice(k, 0);
  auto accept = [&](std::size_t level) {
    const DegreeVec& w = pools.degrees[level];
    const DenseMatrix& L = pools.points[level][choice[level]].basis;
    DenseMatrix lower(field, 0, m0);
    for (std::size_t i = 0; i < level; ++i) {
      if (!lt(pools.degrees[i], w)) continue;
      const DenseMatrix& Lv = pools.points[i][choice[i]].basis;
      if (!row_space_subset(Lv, L)) return false;
      lower = vstack(lower, Lv);
    }
    return L.rows() - rank_of(lower) == xi1.multiplicity(w);
  };
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == k) {
      fn(choice);
      return;
    }
    for (std::size_t p = 0; p < pools.points[level].size(); ++p) {
      choice[level] = p;
      if (accept(level)) self(self, level + 1);
    }
  };
  recurse(recurse, 0);
}

FramedFamily make_family(const Pools& pools, const std::vector<std::size_t>& choice, Field field,
                         const Multiset& xi0, const Multiset& xi1) {
  FramedFamily family{field, xi0, xi1, {}};
  for (std::size_t i = 0; i < choice.size(); ++i) {
    family.spaces.emplace(pools.degrees[i], pools.points[i][choice[i]].basis);
  }
  return family;
}

std::uint64_t mod_pow_count(std::uint32_t q, std::size_t e, std::uint64_t guard) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (acc > guard / q) return guard + 1;
    acc *= q;
  }
  return acc;
}

}  // namespace

std::vector<FramedFamily> enumerate_framed_families(std::uint32_t q, const Multiset& xi0,
                                                    const Multiset& xi1, std::uint64_t guard) {
  const Field field = Field::prime(q);
  const Pools pools = candidate_pools(q, xi0, xi1, guard);
  std::vector<FramedFamily> out;
  search_families(pools, xi1, field, xi0.size(), [&](const std::vector<std::size_t>& choice) {
    out.push_back(make_family(pools, choice, field, xi0, xi1));
  });
  return out;
}

std::vector<DenseMatrix> gl_leq_elements(std::uint32_t q, const Multiset& xi0,
                                         std::uint64_t guard) {
  const Field field = Field::prime(q);
  const BlockPattern pattern = block_pattern(xi0);
  const std::size_t m0 = pattern.size();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < m0; ++r) {
    for (std::size_t c = 0; c < m0; ++c) {
      if (!pattern.entry_forced_zero(r, c)) free.emplace_back(r, c);
    }
  }
  if (mod_pow_count(q, free.size(), guard) > guard) {
    throw GuardExceeded("GL_<= over F_" + std::to_string(q) + " needs more than " +
                        std::to_string(guard) + " candidate matrices");
  }
  std::vector<DenseMatrix> out;
  std::vector<std::uint32_t> digits(free.size(), 0);
  for (;;) {
    DenseMatrix M(field, m0, m0);
    for (std::size_t k = 0; k < free.size(); ++k) M.set(free[k].first, free[k].second, digits[k]);
    if (is_invertible(M)) out.push_back(std::move(M));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

OrbitReport orbit_count(std::uint32_t q, const Multiset& xi0, const Multiset& xi1,
                        std::uint64_t guard) {
  const Field field = Field::prime(q);
  const Pools pools = candidate_pools(q, xi0, xi1, guard);
  const std::vector<DenseMatrix> group = gl_leq_elements(q, xi0, guard);
  const std::size_t k = pools.degrees.size();

  // Families as index tuples, keyed by their mixed-radix code.
  std::vector<std::vector<std::size_t>> families;
  std::unordered_map<std::uint64_t, std::size_t> lookup;
  auto code = [&](const std::vector<std::size_t>& choice) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < k; ++i) c = c * pools.points[i].size() + choice[i];
    return c;
  };
  search_families(pools, xi1, field, xi0.size(), [&](const std::vector<std::size_t>& choice) {
    lookup.emplace(code(choice), families.size());
    families.push_back(choice);
  });

  // action[i][g][p]: index of g . point p in pool i.
  std::vector<std::vector<std::vector<std::size_t>>> action(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& pool = pools.points[i];
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    auto key = [](const DenseMatrix& m) {
      std::vector<std::uint32_t> out;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c).fp_value());
      }
      return out;
    };
    for (std::size_t p = 0; p < pool.size(); ++p) index.emplace(key(pool[p].basis), p);
    action[i].resize(group.size());
    for (std::size_t g = 0; g < group.size(); ++g) {
      action[i][g].resize(pool.size());
      for (std::size_t p = 0; p < pool.size(); ++p) {
        auto it = index.find(key(act_on_subspace(group[g], pool[p].basis)));
        if (it == index.end()) throw InternalError("candidate subspaces are not GL-stable");
        action[i][g][p] = it->second;
      }
    }
  }

  DisjointSets sets(families.size());
  std::vector<std::size_t> image(k);
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (std::size_t g = 0; g < group.size(); ++g) {
      for (std::size_t i = 0; i < k; ++i) image[i] = action[i][g][families[f][i]];
      auto it = lookup.find(code(image));
      if (it == lookup.end()) throw InternalError("group action leaves the framed families");
      sets.unite(f, it->second);
    }
  }

  OrbitReport report;
  report.q = q;
  report.total = families.size();
  report.group_order = group.size();
  std::map<std::size_t, std::size_t> orbit_size;  // root -> size
  std::vector<std::size_t> first_member;           // in enumeration order
  for (std::size_t f = 0; f < families.size(); ++f) {
    const std::size_t root = sets.find(f);
    if (orbit_size[root]++ == 0) first_member.push_back(f);
  }
  report.orbit_count = orbit_size.size();
  for (const auto& [root, size] : orbit_size) ++report.sizes[size];

  bool all_lines = true;
  for (const auto& [w, mult] : xi1) all_lines = all_lines && graded_dim(xi1, w) == 1;
  if (all_lines) {
    std::size_t distinct = 0;
    for (std::size_t f : first_member) {
      bool pairwise = true;
      for (std::size_t a = 0; a < k && pairwise; ++a) {
        for (std::size_t b = a + 1; b < k && pairwise; ++b) {
          pairwise = !(pools.points[a][families[f][a]].basis ==
                       pools.points[b][families[f][b]].basis);
        }
      }
      distinct += pairwise ? 1 : 0;
    }
    report.distinct_line_orbits = distinct;
  }
  for (std::size_t f : first_member) {
    report.representatives.push_back(make_family(pools, families[f], field, xi0, xi1));
  }
  return report;
}

std::size_t cross_ratio_orbits(std::uint32_t q) {
  if (!is_prime_number(q)) throw InvalidInput("q must be prime");
  // Normalized projective points: (1, y) for y in F_q, then (0, 1).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lines;
  for (std::uint32_t y = 0; y < q; ++y) lines.emplace_back(1, y);
  lines.emplace_back(0, 1);
  const std::size_t count = lines.size();

  auto inv = [q](std::uint32_t a) {
    std::uint64_t result = 1, base = a, e = q - 2;
    while (e) {
      if (e & 1) result = result * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  };
  auto normalize = [&](std::uint64_t x, std::uint64_t y) -> std::size_t {
    x %= q;
    y %= q;
    if (x == 0) return count - 1;
    return static_cast<std::size_t>(y * inv(static_cast<std::uint32_t>(x)) % q);
  };

  // Permutations of the lines induced by each invertible 2x2 matrix.
  std::vector<std::vector<std::size_t>> perms;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if ((static_cast<std::uint64_t>(a) * d + static_cast<std::uint64_t>(q - b) * c) % q == 0)
            continue;
          std::vector<std::size_t> perm(count);
          for (std::size_t l = 0; l < count; ++l) {
            const auto [x, y] = lines[l];
            perm[l] = normalize(static_cast<std::uint64_t>(a) * x + static_cast<std::uint64_t>(b) * y,
                                static_cast<std::uint64_t>(c) * x + static_cast<std::uint64_t>(d) * y);
          }
          perms.push_back(std::move(perm));
        }

  auto encode = [count](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * count + b) * count + c) * count + d;
  };
  const std::size_t space = count * count * count * count;
  DisjointSets sets(space);
  std::vector<bool> used(space, false);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      for (std::size_t c = 0; c < count; ++c)
        for (std::size_t d = 0; d < count; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          const std::size_t here = encode(a, b, c, d);
          used[here] = true;
          for (const auto& p : perms) sets.unite(here, encode(p[a], p[b], p[c], p[d]));
        }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < space; ++i) orbits += (used[i] && sets.find(i) == i) ? 1 : 0;
  return orbits;
}

std::optional<DenseMatrix> find_matching_element(std::span<const DenseMatrix> group,
                                                 const FramedFamily& a, const FramedFamily& b) {
  if (a.spaces.size() != b.spaces.size()) return std::nullopt;
  for (const DenseMatrix& g : group) {
    bool match = true;
    for (const auto& [w, L] : a.spaces) {
      auto it = b.spaces.find(w);
      if (it == b.spaces.end() || !(act_on_subspace(g, L) == row_space_basis(it->second))) {
        match = false;
        break;
      }
    }
    if (match) return g;
  }
  return std::nullopt;
}

}  // namespace mpres
