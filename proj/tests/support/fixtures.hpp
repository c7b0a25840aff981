#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mpres/barcode.hpp"
#include "mpres/families.hpp"
#include "mpres/filtration.hpp"
#include "mpres/persistence_module.hpp"
#include "mpres/presentation.hpp"

namespace mpres::fixtures {

inline DegreeVec d1(std::uint32_t a) { return DegreeVec{a}; }
inline DegreeVec d2(std::uint32_t a, std::uint32_t b) { return DegreeVec{a, b}; }

/// Direct sum of interval modules on {0..top}; the basis of M_t is the bars
/// alive at t in barcode order.
PersistenceModule interval_sum_module(Field field, const Barcode& bars, std::uint32_t top);

/// Conjugates every M_t by a random invertible matrix.
PersistenceModule scramble_bases(const PersistenceModule& M, std::mt19937& rng);

/// Random barcode on {0..top} with at most `max_alive` bars alive at once.
Barcode random_barcode(std::mt19937& rng, std::uint32_t top, std::size_t max_alive);

/// Random invertible k x k matrix over a prime field.
DenseMatrix random_invertible(Field field, std::size_t k, std::mt19937& rng);

/// Random one- or two-critical bifiltration with at most `max_simplices`
/// simplices and entry degrees inside [0, bound]^2.
MultifilteredComplex random_bifiltration(std::mt19937& rng, std::size_t max_simplices,
                                         std::uint32_t bound);

/// Same complex with simplices listed in a random order.
MultifilteredComplex shuffled(const MultifilteredComplex& X, std::mt19937& rng);

std::string to_filtration_text(const MultifilteredComplex& X);

/// The worked examples.
struct PaperExamples {
  // n = 1, xi0 = {1, 2}; L = <(x,0),(0,x)>, N = <(x^2,0),(0,1)>.
  static Multiset small_xi0();
  static std::vector<HomogeneousElement> small_L(Field f);
  static std::vector<HomogeneousElement> small_N(Field f);
  // n = 2, the monomial ideal <x1^3, x1^2 x2, x1 x2^2, x2^3> in A_2.
  static std::vector<DegreeVec> monomial_degrees();
  static PersistenceModule monomial_ideal_module(Field f);
  // n = 2, xi0 = {(0,0) x2} and the two submodules L, N.
  static Multiset rank_two_xi0();
  static Multiset four_monomials_xi1();
  static std::vector<HomogeneousElement> rank_two_L(Field f);
  static std::vector<HomogeneousElement> rank_two_N(Field f);
  // n = 1, xi0 = {1 x2, 2, 3 x2}, xi1 = {2, 3, 4 x2} with L2, L3, L4.
  static RelationFamily dim_one_family(Field f);
  // The dim-2 family of four copies of the line <(1,0)>.
  static RelationFamily dim_two_family(Field f);
};

/// Hollow triangle with vertices at `vertex_deg`, edges at `edge_deg`, and
/// optionally the 2-cell at `fill_deg` (n = 1).
MultifilteredComplex triangle(std::uint32_t vertex_deg, std::uint32_t edge_deg, int fill_deg);

/// Random valid relation family over F_q by rejection sampling.
RelationFamily random_relation_family(std::mt19937& rng, std::uint32_t q);

}  // namespace mpres::fixtures
