#include <gtest/gtest.h>

#include "core/errors.hpp"
#include "core/grothendieck.hpp"
#include "core/mesh_oracle.hpp"
#include "core/serialization.hpp"

using namespace meshk0;

TEST(Json, GroupSchema) {
  AbelianGroup g(2, {Integer(2), Integer(4)});
  Json j = group_to_json(g);
  EXPECT_EQ(j.dump(), R"({"rank":2,"torsion":[2,4]})");
  EXPECT_EQ(group_from_json(j), g);
  AbelianGroup huge(0, {Integer("123456789012345678901234567890")});
  EXPECT_EQ(group_from_json(Json::parse(group_to_json(huge).dump())), huge);
}

TEST(Json, MatrixSchema) {
  IntMatrix m{{1, -2}, {3, 4}};
  Json j = matrix_to_json(m);
  EXPECT_EQ(j.dump(), R"({"cols":2,"data":["1","-2","3","4"],"rows":2})");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"data":["1"]})")), ParseError);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(group_from_json(Json::parse(R"({"rank":"x"})")), ParseError);
  EXPECT_THROW(parse_characteristic("3"), ParseError);
  EXPECT_THROW(verdict_from_json(Json::parse(R"({"kind":"Maybe"})")), ParseError);
}

TEST(Json, GridRoundTrip) {
  for (const auto& t : triple_grid(8, 6)) {
    AbelianGroup g = k0_closed_form(t);
    EXPECT_EQ(group_from_json(Json::parse(group_to_json(g).dump())), g);
    for (auto ch : {Characteristic::Zero, Characteristic::Two}) {
      InvariantProfile p = invariant_profile(t, ch);
      EXPECT_EQ(profile_from_json(Json::parse(profile_to_json(p).dump())), p) << t.to_string();
    }
  }
  for (const auto& t : triple_grid(4, 2)) {
    IntMatrix c = cartan_matrix(t);
    EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(c).dump())), c);
  }
}

TEST(Json, VerdictRoundTrip) {
  auto p1 = invariant_profile(MeshTriple::parse("A6:l=2:t=1"), Characteristic::Zero);
  auto p2 = invariant_profile(MeshTriple::parse("E6:l=2:t=2"), Characteristic::Zero);
  Verdict v = distinguish(p1, p2);
  Json j = Json::parse(verdict_to_json(v, p1, p2).dump());
  EXPECT_EQ(j["kind"], "DistinguishedBy");
  EXPECT_EQ(j["separator"], "GrothendieckGroup");
  EXPECT_EQ(verdict_from_json(j), v);
  EXPECT_EQ(profile_from_json(j["details"]["second"]), p2);
}

TEST(Text, ProfileUsesGroupNotation) {
  auto p = invariant_profile(MeshTriple::parse("E7:l=1:t=1"), Characteristic::Zero);
  EXPECT_EQ(profile_to_text(p),
            "E7:l=1:t=1  type IX  char 0\na = 56\nb = {1}\nc = {56}\nd_group = (Z/2)^6\nhas_ct = true\n");
}
