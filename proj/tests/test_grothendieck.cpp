#include <gtest/gtest.h>

#include "core/circulant.hpp"
#include "core/grothendieck.hpp"
#include "core/smith.hpp"

using namespace meshk0;

namespace {

MeshTriple T(const char* s) { return MeshTriple::parse(s); }

AbelianGroup Z(long r) { return AbelianGroup::free(r); }
AbelianGroup Zmod(long d, long copies = 1) { return power(AbelianGroup(0, {Integer(d)}), copies); }

}  // namespace

TEST(ClosedForm, Examples) {
  EXPECT_EQ(k0_closed_form(T("A2:l=1:t=1")), Z(1));
  EXPECT_EQ(k0_closed_form(T("E7:l=1:t=1")), Zmod(2, 6));
  EXPECT_EQ(k0_closed_form(T("D4:l=3:t=3")), Zmod(2, 4));
  EXPECT_EQ(k0_closed_form(T("A1:l=1:t=1")), AbelianGroup::trivial());
  EXPECT_EQ(k0_closed_form(T("E6:l=2:t=2")), Z(2) + Zmod(2, 2));
  EXPECT_EQ(k0_closed_form(T("A6:l=2:t=1")), Z(3));
  EXPECT_EQ(k0_closed_form(T("E7:l=2:t=1")), Z(6) + Zmod(3));
}

TEST(ClosedForm, A1IsAlwaysTrivial) {
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(k0_closed_form(MeshTriple::make(Family::A, 1, l, 1)), AbelianGroup::trivial());
}

TEST(GeneratorRoute, Examples) {
  EXPECT_EQ(k0_from_generators(T("A2:l=1:t=1")), Z(1));
  EXPECT_EQ(k0_from_generators(T("A3:l=2:t=1")), Z(1) + Zmod(2));
  EXPECT_EQ(k0_from_generators(T("E6:l=1:t=1")), Z(2) + Zmod(2, 2));
}

TEST(ReducedRoute, Examples) {
  EXPECT_EQ(k0_from_reduced(T("A3:l=1:t=1")), Z(1));
  EXPECT_EQ(k0_from_reduced(T("E8:l=1:t=1")), Zmod(2, 8));
  EXPECT_EQ(k0_from_reduced(T("D4:l=3:t=3")), Zmod(2, 4));
  EXPECT_EQ(k0_from_reduced(T("A1:l=4:t=1")), AbelianGroup::trivial());
}

TEST(Routes, AgreeOnGrid) {
  for (const auto& t : triple_grid(8, 6)) {
    AbelianGroup closed = k0_closed_form(t);
    EXPECT_EQ(k0_from_generators(t), closed) << t.to_string();
    EXPECT_EQ(k0_from_reduced(t), closed) << t.to_string();
  }
}

TEST(Routes, BeyondTheGrid) {
  // Larger k reaches closed-form rows the grid only touches once (d = 5, 9, 10, 15).
  for (int k : {9, 10, 15, 20, 30}) {
    for (auto [family, n] : std::vector<std::pair<Family, int>>{{Family::A, 9}, {Family::D, 6}, {Family::E, 8}}) {
      MeshTriple t = MeshTriple::make(family, n, k, 1);
      EXPECT_EQ(k0_from_reduced(t), k0_closed_form(t)) << t.to_string();
    }
  }
}

TEST(Routes, FullPeriodIsFree) {
  for (const auto& t : triple_grid(8, 1)) {
    if (t.t() != 1) continue;
    MeshTriple full = MeshTriple::make(t.family(), t.n(), t.c(), 1);
    EXPECT_EQ(k0_closed_form(full), Z(static_cast<long>(t.n()) * (t.c() - 2) / 2)) << full.to_string();
    EXPECT_EQ(k0_from_generators(full), k0_closed_form(full)) << full.to_string();
  }
}

TEST(Routes, Names) {
  EXPECT_STREQ(route_name(Route::ClosedForm), "closed");
  EXPECT_STREQ(route_name(Route::GeneratorMatrix), "matrix");
  EXPECT_STREQ(route_name(Route::ReducedPresentation), "reduced");
  EXPECT_STREQ(route_name(Route::Cartan), "cartan");
}
