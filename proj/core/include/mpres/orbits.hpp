#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mpres/families.hpp"
#include "mpres/grassmann.hpp"
#include "mpres/multiset.hpp"

namespace mpres {

/// Every framed family over F_q for (xi0, xi1), in depth-first order over
/// V1 (lexicographic) and the Grassmannian order at each degree.
std::vector<FramedFamily> enumerate_framed_families(std::uint32_t q, const Multiset& xi0,
                                                    const Multiset& xi1,
                                                    std::uint64_t guard = kEnumerationGuard);

/// All matrices of GL_<=(xi0) over F_q in the lexicographic block order.
std::vector<DenseMatrix> gl_leq_elements(std::uint32_t q, const Multiset& xi0,
                                         std::uint64_t guard = kEnumerationGuard);

struct OrbitReport {
  std::uint32_t q = 0;
  std::size_t total = 0;
  std::size_t orbit_count = 0;
  std::size_t group_order = 0;
  /// orbit size -> number of orbits of that size
  std::map<std::size_t, std::size_t> sizes;
  /// When every delta1(w) is 1: orbits made of families whose lines are
  /// pairwise distinct.
  std::optional<std::size_t> distinct_line_orbits;
  /// One family per orbit (the first in enumeration order), by orbit.
  std::vector<FramedFamily> representatives;
};

/// Orbits of GL_<=(xi0) acting on the framed families by M . (L_w) = (M L_w).
OrbitReport orbit_count(std::uint32_t q, const Multiset& xi0, const Multiset& xi1,
                        std::uint64_t guard = kEnumerationGuard);

/// GL_2(F_q)-orbits of ordered quadruples of pairwise distinct lines in
/// F_q^2, by direct brute force on projective coordinates.
std::size_t cross_ratio_orbits(std::uint32_t q);

/// Some g in `group` with g . a == b, if any.
std::optional<DenseMatrix> find_matching_element(std::span<const DenseMatrix> group,
                                                 const FramedFamily& a, const FramedFamily& b);

}  // namespace mpres
