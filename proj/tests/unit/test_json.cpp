#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mpres/error.hpp"
#include "mpres/homology.hpp"
#include "mpres/json_io.hpp"
#include "mpres/orbits.hpp"
#include "mpres/rank_invariant.hpp"

using namespace mpres;
using fixtures::d1;
using fixtures::d2;
using fixtures::PaperExamples;

TEST(Json, Scalars) {
  const Field q = Field::rationals();
  EXPECT_EQ(to_json(Scalar::parse(q, "3/6")), json("1/2"));
  EXPECT_EQ(to_json(Scalar(q, -4)), json(-4));
  EXPECT_EQ(to_json(Scalar(Field::prime(5), -1)), json(4));
  EXPECT_EQ(scalar_from_json(q, json("2/4")), Scalar::parse(q, "1/2"));
  EXPECT_EQ(scalar_from_json(Field::prime(3), json(7)), Scalar(Field::prime(3), 1));
  EXPECT_THROW(scalar_from_json(q, json(0.5)), InvalidInput);
}

TEST(Json, MultisetAndDegree) {
  const Multiset xi(2, {{d2(0, 0), 2}, {d2(1, 3), 1}});
  EXPECT_EQ(to_json(xi).dump(),
            R"([{"degree":[0,0],"multiplicity":2},{"degree":[1,3],"multiplicity":1}])");
  EXPECT_EQ(multiset_from_json(to_json(xi)), xi);
  EXPECT_EQ(multiset_from_json(json::array(), 2), Multiset(2));
  EXPECT_THROW(degree_from_json(json::parse("[1,-1]")), InvalidInput);
}

TEST(Json, PresentationRoundTrip) {
  for (const Field f : {Field::prime(3), Field::rationals()}) {
    const auto P = minimal_presentation(PaperExamples::monomial_ideal_module(f));
    const auto j = to_json(P);
    EXPECT_EQ(j.at("field"), f.to_string());
    const auto back = presentation_from_json(j);
    EXPECT_EQ(back.xi0, P.xi0);
    EXPECT_EQ(back.xi1, P.xi1);
    EXPECT_EQ(back.relations, P.relations);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Json, BarcodeAndRank) {
  const Barcode B({Bar{0, 2}, Bar{1, std::nullopt}});
  EXPECT_EQ(to_json(B).dump(), R"({"bars":[{"birth":0,"death":2},{"birth":1,"death":null}]})");
  const auto R = rank_from_barcode(Barcode({Bar{0, 1}}), 1);
  EXPECT_EQ(to_json(R).dump(),
            R"([{"dim":1,"rank":1,"u":[0],"v":[0]},{"dim":1,"rank":0,"u":[0],"v":[1]},)"
            R"({"dim":0,"rank":0,"u":[1],"v":[1]}])");
}

TEST(Json, FamilyRoundTrip) {
  const auto fam = PaperExamples::dim_one_family(Field::prime(2));
  const auto j = to_json(fam);
  EXPECT_EQ(j.at("kind"), "relation");
  EXPECT_EQ(std::get<RelationFamily>(family_from_json(j)), fam);
  const auto framed = frame_family(fam);
  EXPECT_EQ(std::get<FramedFamily>(family_from_json(to_json(framed))), framed);
  auto bad = j;
  bad["kind"] = "other";
  EXPECT_THROW(family_from_json(bad), InvalidInput);
  bad = j;
  bad["spaces"][0]["basis"][0] = json::array({1, 0});
  EXPECT_THROW(family_from_json(bad), DimensionMismatch);
}

TEST(Json, ReportAndOrbits) {
  const auto report = to_json(FamilyReport{false, 4, d1(2), "x"});
  EXPECT_EQ(report.dump(), R"({"failed_condition":4,"message":"x","ok":false,"witness":[2]})");
  const auto orbits =
      to_json(orbit_count(3, PaperExamples::rank_two_xi0(), PaperExamples::four_monomials_xi1()));
  EXPECT_EQ(orbits.at("q"), 3);
  EXPECT_EQ(orbits.at("total"), 256);
  EXPECT_EQ(orbits.at("orbits"), 15);
  EXPECT_EQ(orbits.at("distinct_line_orbits"), 1);
  EXPECT_TRUE(orbits.at("sizes").is_object());
}

TEST(Json, OutputIsDeterministicUnderInputOrder) {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto X = fixtures::random_bifiltration(rng, 20, 4);
    const auto a = to_json(minimal_presentation(build_persistence_module(X, 0, Field::prime(2)))).dump();
    const auto b = to_json(minimal_presentation(
        build_persistence_module(fixtures::shuffled(X, rng), 0, Field::prime(2)))).dump();
    // Generator lifts depend on the chain basis, so only the type is compared.
    EXPECT_EQ(json::parse(a).at("xi0"), json::parse(b).at("xi0"));
    EXPECT_EQ(json::parse(a).at("xi1"), json::parse(b).at("xi1"));
    EXPECT_EQ(a, to_json(minimal_presentation(build_persistence_module(X, 0, Field::prime(2)))).dump());
  }
}
