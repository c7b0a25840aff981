#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mpres/barcode.hpp"
#include "mpres/error.hpp"
#include "mpres/homology.hpp"
#include "mpres/linalg.hpp"
#include "mpres/presentation.hpp"
#include "mpres/rank_invariant.hpp"

using namespace mpres;
using fixtures::d1;
using fixtures::d2;
using fixtures::PaperExamples;

namespace {

Barcode figure_barcode() {
  return Barcode({Bar{0, std::nullopt}, Bar{0, 2}, Bar{0, 1}, Bar{1, std::nullopt}, Bar{1, 3},
                  Bar{1, 3}, Bar{2, 3}, Bar{2, 3}});
}

// Direct count of bars containing [u, v].
std::size_t bars_containing(const Barcode& B, std::uint32_t u, std::uint32_t v) {
  std::size_t c = 0;
  for (const auto& b : B.bars()) c += (b.contains(u) && b.contains(v)) ? 1 : 0;
  return c;
}

}  // namespace

TEST(TypeInvariant, FreeModule) {
  const Field f = Field::prime(2);
  const Multiset xi(2, {{d2(0, 0), 1}, {d2(1, 2), 2}});
  const auto t = type_invariant(quotient_module(FreeGradedModule(f, xi), {}, d2(3, 3)));
  EXPECT_EQ(t.xi0, xi);
  EXPECT_TRUE(t.xi1.empty());
}

TEST(TypeInvariant, SmallSubmodulesShareXi1) {
  const Field f = Field::prime(2);
  const FreeGradedModule F(f, PaperExamples::small_xi0());
  const Multiset xi1(1, {{d1(2), 1}, {d1(3), 1}});
  EXPECT_EQ(minimal_generators(submodule_module(F, PaperExamples::small_L(f))).xi0, xi1);
  EXPECT_EQ(minimal_generators(submodule_module(F, PaperExamples::small_N(f))).xi0, xi1);
  EXPECT_EQ(type_invariant(quotient_module(F, PaperExamples::small_L(f))),
            (TypeInvariant{PaperExamples::small_xi0(), xi1}));
  EXPECT_EQ(type_invariant(quotient_module(F, PaperExamples::small_N(f))),
            (TypeInvariant{Multiset(1, {{d1(1), 1}}), Multiset(1, {{d1(3), 1}})}));
}

TEST(TypeInvariant, DimTwoPairSharesType) {
  for (const Field f : {Field::prime(2), Field::prime(3)}) {
    const FreeGradedModule F(f, PaperExamples::rank_two_xi0());
    const TypeInvariant expected{PaperExamples::rank_two_xi0(), PaperExamples::four_monomials_xi1()};
    EXPECT_EQ(type_invariant(quotient_module(F, PaperExamples::rank_two_L(f))), expected);
    EXPECT_EQ(type_invariant(quotient_module(F, PaperExamples::rank_two_N(f))), expected);
  }
}

TEST(RankInvariant, DiagonalIsDimension) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto M = build_persistence_module(fixtures::random_bifiltration(rng, 20, 4), 0,
                                            Field::prime(2));
    const auto R = rank_invariant(M);
    for (std::size_t i = 0; i < M.grid().size(); ++i) {
      const auto u = M.grid().point(i);
      EXPECT_EQ(R.rank(u, u), M.dim(u));
      EXPECT_EQ(R.dim(u), M.dim(u));
    }
  }
}

TEST(RankInvariant, IntervalModule) {
  const auto M = fixtures::interval_sum_module(Field::prime(2), Barcode({Bar{1, 3}}), 4);
  const auto R = rank_invariant(M);
  EXPECT_EQ(R.rank(d1(1), d1(2)), 1u);
  EXPECT_EQ(R.rank(d1(1), d1(3)), 0u);
  EXPECT_EQ(R.dim(d1(1)), 1u);
  EXPECT_THROW(R.rank(d1(2), d1(1)), InvalidInput);
}

TEST(RankInvariant, FreeRankOne) {
  const Field f = Field::prime(3);
  const auto M = quotient_module(FreeGradedModule(f, Multiset(2, {{d2(0, 0), 1}})), {}, d2(2, 3));
  const auto R = rank_invariant(M);
  for (const auto& [key, entry] : R.table()) EXPECT_EQ(entry.rank, 1u);
  EXPECT_EQ(R.rank(d2(0, 0), d2(9, 9)), 1u);
}

TEST(RankInvariant, MonotoneAndBounded) {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto M = build_persistence_module(fixtures::random_bifiltration(rng, 20, 3), 1,
                                            Field::prime(3));
    const auto R = rank_invariant(M);
    const Grid& g = M.grid();
    for (const auto& [key, entry] : R.table()) {
      const auto& [u, v] = key;
      EXPECT_LE(entry.rank, std::min(M.dim(u), M.dim(v)));
      for (std::size_t axis = 0; axis < 2; ++axis) {
        if (v[axis] < g.box()[axis]) EXPECT_LE(R.rank(u, v.step_up(axis)), entry.rank);
        // Shrinking [u, v] from below can only keep or raise the rank.
        if (u[axis] < v[axis]) EXPECT_GE(R.rank(u.step_up(axis), v), entry.rank);
      }
    }
  }
}

TEST(Barcode, HollowThenFilled) {
  const auto M = build_persistence_module(fixtures::triangle(0, 1, 3), 1, Field::prime(2));
  EXPECT_EQ(barcode(M), Barcode({Bar{1, 3}}));
}

TEST(Barcode, FreeModule) {
  const Field f = Field::prime(2);
  const auto M = quotient_module(FreeGradedModule(f, Multiset(1, {{d1(0), 1}})), {}, d1(3));
  EXPECT_EQ(barcode(M), Barcode({Bar{0, std::nullopt}}));
}

TEST(Barcode, FigureFromScrambledIntervalSum) {
  std::mt19937 rng(13);
  for (const Field f : {Field::prime(2), Field::prime(5)}) {
    const auto M = fixtures::scramble_bases(fixtures::interval_sum_module(f, figure_barcode(), 4), rng);
    EXPECT_EQ(barcode(M), figure_barcode());
  }
}

TEST(Barcode, RejectsTwoParameters) {
  EXPECT_THROW(barcode(PaperExamples::monomial_ideal_module(Field::prime(2))), InvalidInput);
  EXPECT_THROW(Barcode({Bar{2, 2}}), InvalidInput);
}

TEST(RankFromBarcode, FigureAtZeroOne) {
  const auto R = rank_from_barcode(figure_barcode(), 4);
  EXPECT_EQ(R.rank(d1(0), d1(1)), 2u);
  EXPECT_EQ(R.dim(d1(0)), 3u);
}

TEST(RankFromBarcode, TrivialCases) {
  const auto empty = rank_from_barcode(Barcode(), 5);
  for (const auto& [key, entry] : empty.table()) EXPECT_EQ(entry.rank, 0u);
  const auto single = rank_from_barcode(Barcode({Bar{0, std::nullopt}}), 5);
  for (const auto& [key, entry] : single.table()) EXPECT_EQ(entry.rank, 1u);
}

TEST(RankFromBarcode, MatchesDirectCount) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto B = fixtures::random_barcode(rng, 10, 6);
    const auto R = rank_from_barcode(B, 10);
    for (std::uint32_t u = 0; u <= 10; ++u)
      for (std::uint32_t v = u; v <= 10; ++v) EXPECT_EQ(R.rank(d1(u), d1(v)), bars_containing(B, u, v));
  }
}

TEST(BarcodeFromRank, Examples) {
  const auto M = fixtures::interval_sum_module(Field::prime(2), Barcode({Bar{1, 3}}), 4);
  EXPECT_EQ(barcode_from_rank(rank_invariant(M)), Barcode({Bar{1, 3}}));
  EXPECT_TRUE(barcode_from_rank(rank_from_barcode(Barcode(), 4)).empty());
  EXPECT_EQ(barcode_from_rank(rank_from_barcode(figure_barcode(), 4)), figure_barcode());
}

TEST(BarcodeFromRank, InconsistentTablesThrow) {
  auto table = rank_from_barcode(Barcode({Bar{1, 3}}), 3).table();
  table[{d1(1), d1(1)}].rank = 0;  // rank(u,u) != dim(u)
  EXPECT_THROW(barcode_from_rank(RankInvariant(d1(3), table)), InvalidInput);

  table = rank_from_barcode(Barcode({Bar{1, 3}}), 3).table();
  table[{d1(1), d1(3)}].rank = 1;  // rank grows along v
  table[{d1(1), d1(2)}].rank = 0;
  EXPECT_THROW(barcode_from_rank(RankInvariant(d1(3), table)), InvalidInput);
}

TEST(BarcodeRank, RoundTripOnRandomBarcodes) {
  std::mt19937 rng(19);
  for (int t = 0; t < 150; ++t) {
    const std::uint32_t top = 1 + rng() % 12;
    const auto B = fixtures::random_barcode(rng, top, 6);
    EXPECT_EQ(barcode_from_rank(rank_from_barcode(B, top)), B) << B.to_string();
  }
}

TEST(BarcodeRank, AgreementOnModules) {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t top = 1 + rng() % 12;
    const Field f = t % 2 ? Field::prime(2) : Field::prime(5);
    const auto M = fixtures::scramble_bases(
        fixtures::interval_sum_module(f, fixtures::random_barcode(rng, top, 6), top), rng);
    const auto B = barcode(M);
    EXPECT_EQ(rank_invariant(M), rank_from_barcode(B, top));
    EXPECT_EQ(barcode_from_rank(rank_invariant(M)), B);
  }
}

TEST(BarcodeRank, DistinctBarcodesGiveDistinctRanks) {
  std::mt19937 rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto A = fixtures::random_barcode(rng, 6, 4);
    const auto B = fixtures::random_barcode(rng, 6, 4);
    if (A == B) continue;
    EXPECT_FALSE(rank_from_barcode(A, 6) == rank_from_barcode(B, 6));
  }
}

TEST(BarcodeRank, EndpointsMatchType) {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t top = 1 + rng() % 10;
    const auto B = fixtures::random_barcode(rng, top, 5);
    const auto M = fixtures::scramble_bases(fixtures::interval_sum_module(Field::prime(3), B, top), rng);
    Multiset births(1), deaths(1);
    for (const auto& b : B.bars()) {
      births.add(d1(b.birth));
      if (b.death) deaths.add(d1(*b.death));
    }
    const auto type = type_invariant(M);
    EXPECT_EQ(type.xi0, births);
    EXPECT_EQ(type.xi1, deaths);
  }
}
