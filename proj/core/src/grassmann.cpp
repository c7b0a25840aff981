#include "mpres/grassmann.hpp"

#include <string>

#include "mpres/error.hpp"

namespace mpres {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap + 1;
  return std::min(a * b, cap + 1);
}

// Calls fn(pivots) for every increasing d-subset of {0..m-1} until fn
// returns false.
template <typename Fn>
void for_each_pivot_set(std::size_t d, std::size_t m, Fn&& fn) {
  if (d > m) return;
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  for (;;) {
    if (!fn(pivots)) return;
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == m - d + i - 1) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t k = i; k < d; ++k) pivots[k] = pivots[k - 1] + 1;
  }
}

// Positions (row, col) left free by a pivot set: right of the row's pivot
// and not in another pivot column.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(
    const std::vector<std::size_t>& pivots, std::size_t m) {
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = pivots[r] + 1; c < m; ++c) {
      if (!is_pivot[c]) out.emplace_back(r, c);
    }
  }
  return out;
}

}  // namespace

std::uint64_t grassmann_count(std::uint32_t q, std::size_t d, std::size_t m,
                              std::uint64_t guard) {
  std::uint64_t total = 0;
  for_each_pivot_set(d, m, [&](const std::vector<std::size_t>& pivots) {
    // Row r has one free entry per non-pivot column right of its pivot.
    std::size_t free = 0;
    for (std::size_t r = 0; r < d; ++r) free += m - pivots[r] - (d - r);
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < free && count <= guard; ++k) count = saturating_mul(count, q, guard);
    total = std::min(total + count, guard + 1);
    return total <= guard;
  });
  return total;
}

std::vector<GrassmannPoint> grassmann_points(std::uint32_t q, std::size_t d, std::size_t m,
                                             std::uint64_t guard) {
  const Field field = Field::prime(q);
  const std::uint64_t count = grassmann_count(q, d, m, guard);
  if (count > guard) {
    throw GuardExceeded("G(" + std::to_string(d) + "," + std::to_string(m) + ") over F_" +
                        std::to_string(q) + " has more than " + std::to_string(guard) +
                        " points");
  }
  std::vector<GrassmannPoint> out;
  out.reserve(count);
  for_each_pivot_set(d, m, [&](const std::vector<std::size_t>& pivots) {
    const auto free = free_positions(pivots, m);
    std::vector<std::uint32_t> digits(free.size(), 0);
    for (;;) {
      DenseMatrix basis(field, d, m);
      for (std::size_t r = 0; r < d; ++r) basis.set(r, pivots[r], 1);
      for (std::size_t k = 0; k < free.size(); ++k) {
        basis.set(free[k].first, free[k].second, digits[k]);
      }
      out.push_back({d, m, std::move(basis)});
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    return true;
  });
  return out;
}

std::vector<GrassmannPoint> grassmann_points_on(std::uint32_t q, std::size_t d,
                                                std::span<const std::size_t> slots,
                                                std::size_t m, std::uint64_t guard) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] >= m || (i > 0 && slots[i] <= slots[i - 1])) {
      throw InvalidInput("slots must be increasing and below " + std::to_string(m));
    }
  }
  const Field field = Field::prime(q);
  std::vector<GrassmannPoint> out;
  for (auto& local : grassmann_points(q, d, slots.size(), guard)) {
    DenseMatrix basis(field, d, m);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < slots.size(); ++c) basis.set(r, slots[c], local.basis(r, c));
    }
    out.push_back({d, m, std::move(basis)});
  }
  return out;
}

}  // namespace mpres
