#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mpres/matrix.hpp"

namespace mpres {

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// A d-dimensional subspace of F_q^m in its unique RREF basis.
struct GrassmannPoint {
  std::size_t d = 0;
  std::size_t m = 0;
  DenseMatrix basis;

  friend bool operator==(const GrassmannPoint& a, const GrassmannPoint& b) {
    return a.basis == b.basis;
  }
};

/// All points of G(d, m) over F_q, grouped by pivot columns in
/// lexicographic order. Throws GuardExceeded above `guard` points.
std::vector<GrassmannPoint> grassmann_points(std::uint32_t q, std::size_t d, std::size_t m,
                                             std::uint64_t guard = kEnumerationGuard);

/// d-dimensional subspaces of F_q^m contained in the coordinate subspace
/// spanned by `slots` (increasing).
std::vector<GrassmannPoint> grassmann_points_on(std::uint32_t q, std::size_t d,
                                                std::span<const std::size_t> slots,
                                                std::size_t m,
                                                std::uint64_t guard = kEnumerationGuard);

/// Number of points grassmann_points would return, saturating at guard + 1.
std::uint64_t grassmann_count(std::uint32_t q, std::size_t d, std::size_t m,
                              std::uint64_t guard = kEnumerationGuard);

}  // namespace mpres
