#include <gtest/gtest.h>

#include <map>

#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/grothendieck.hpp"

using namespace meshk0;

namespace {

MeshTriple T(const char* s) { return MeshTriple::parse(s); }

AbelianGroup Z(long r) { return AbelianGroup::free(r); }
AbelianGroup Zmod(long d, long copies = 1) { return power(AbelianGroup(0, {Integer(d)}), copies); }

struct SubtypeRow {
  AbelianGroup group;
  long f_char0;
  long f_char2;
};

// Grothendieck group and (f) columns of the subtype table, written out per
// row from n, d, r and keyed by subtype label.
SubtypeRow subtype_row(const MeshTriple& t, const std::string& label) {
  const long n = t.n(), d = t.d(), r = t.r();
  static const std::map<std::string, int> kRows{
      {"I-1", 0},  {"I-2", 1},  {"I-3", 2},  {"II-1", 3}, {"II-2", 4}, {"II-3", 5}, {"II-4", 6},
      {"IV-1", 7}, {"IV-2", 8}, {"IV-3", 9}, {"IV-4", 10}, {"IV-5", 11}, {"IV-6", 12}, {"V-1", 13},
      {"V-2", 14}, {"V-3", 15}, {"V-4", 16}, {"V-5", 17}, {"V-6", 18}};
  switch (kRows.at(label)) {
    case 0: return {Z((n * d - 3 * d + 2) / 2), d, d};
    case 1: return {Z((n * d - 3 * d + 2) / 2) + Zmod(2, d - 1), d, d};
    case 2: return {Z((n * d - 2 * d + 2) / 2), d, d};
    case 3: return {Z((n * d - 3 * d) / 2) + Zmod(4), 2 * d, 2 * d};
    case 4: return {Z((n * d - 3 * d) / 2) + Zmod(2, d - 1) + Zmod(4), 2 * d, 2 * d};
    case 5: return {Zmod(2, n * d - 2 * d + 1), 2 * d, 4 * d};
    case 6: return {Z((n * d - d) / 4), d, d};
    case 7: return {Z(d - 1) + Zmod(2, n * d - 3 * d + 1), d, d};
    case 8: return {Z(d - 1) + Zmod(2, n * d - 3 * d) + Zmod(r), d, d};
    case 9: return {Z((n * d - d - 2) / 2), d, d};
    case 10: return {Z((n * d - d - 2) / 2) + Zmod(r), d, d};
    case 11: return {Z(d) + Zmod(2, n * d - 3 * d), d, d};
    case 12: return {Zmod(2, n * d - d - 1), d, 2 * d};
    case 13: return {Z(d) + Zmod(2, n * d - 3 * d), 2 * d, 2 * d};
    case 14: return {Zmod(2, n * d - d - 1), 2 * d, 4 * d};
    case 15: return {Z((n * d - 2 * d) / 2), d, d};
    case 16: return {Z(d - 1) + Zmod(2, n * d - 3 * d + 1), 2 * d, 2 * d};
    case 17: return {Z(d - 1) + Zmod(2, n * d - 3 * d) + Zmod(r), 2 * d, 2 * d};
    default: return {Zmod(2, n * d - 3 * d) + Zmod(r), 2 * d, 2 * d};
  }
}

std::vector<MeshTriple> subtype_grid(int nmax, int kmax) {
  std::vector<MeshTriple> out;
  for (const auto& t : triple_grid(nmax, kmax))
    if (has_shift_invariants(t)) out.push_back(t);
  return out;
}

}  // namespace

TEST(Invariants, RigidCount) {
  EXPECT_EQ(invariant_a(T("A5:l=2:t=2")), 10);
  EXPECT_EQ(invariant_a(T("E8:l=1:t=1")), 112);
  EXPECT_EQ(invariant_a(T("A2:l=1:t=1")), 1);
  EXPECT_EQ(invariant_a(T("A6:l=3:t=2")), 18);
  EXPECT_EQ(invariant_a(T("A1:l=3:t=1")), 0);
}

TEST(Invariants, SerreOrder) {
  EXPECT_EQ(invariant_b(T("D5:l=3:t=1")), (std::set<long>{3}));
  EXPECT_EQ(invariant_b(T("A4:l=3:t=2")), (std::set<long>{3, 6}));
  EXPECT_EQ(invariant_b(T("E6:l=4:t=2")), (std::set<long>{4}));
  EXPECT_THROW(invariant_b(T("A1:l=2:t=1")), UndefinedInvariantError);
}

TEST(Invariants, ShiftOrder) {
  EXPECT_EQ(invariant_e(T("A4:l=5:t=1"), Characteristic::Zero), 6);
  EXPECT_EQ(invariant_e(T("A4:l=5:t=1"), Characteristic::Two), 6);
  EXPECT_EQ(invariant_e(T("A5:l=2:t=2"), Characteristic::Two), 3);
  EXPECT_EQ(subtype(T("A5:l=2:t=2")), "II-3");
  EXPECT_THROW(invariant_e(T("A3:l=2:t=1"), Characteristic::Zero), UndefinedInvariantError);
  EXPECT_THROW(invariant_e(T("E7:l=2:t=1"), Characteristic::Zero), UndefinedInvariantError);
  EXPECT_THROW(invariant_e(T("A4:l=3:t=2"), Characteristic::Zero), UndefinedInvariantError);
}

TEST(Invariants, ShiftOrderMatchesSubtypeFormula) {
  for (const auto& t : subtype_grid(8, 6))
    for (auto ch : {Characteristic::Zero, Characteristic::Two})
      EXPECT_EQ(invariant_e(t, ch), tabulated_e(t, ch)) << t.to_string() << " " << subtype(t);
}

TEST(Subtypes, Examples) {
  EXPECT_EQ(subtype(T("A4:l=2:t=1")), "I-3");
  EXPECT_EQ(subtype(T("D4:l=2:t=1")), "IV-4");
  EXPECT_EQ(subtype(T("D5:l=2:t=2")), "V-6");
  EXPECT_THROW(subtype(T("E6:l=2:t=1")), UndefinedInvariantError);
}

TEST(Subtypes, RowsAgreeWithClosedForm) {
  std::set<std::string> seen;
  for (const auto& t : subtype_grid(12, 12)) {
    const std::string label = subtype(t);
    seen.insert(label);
    EXPECT_EQ(subtype_row(t, label).group, k0_closed_form(t)) << t.to_string() << " " << label;
  }
  EXPECT_EQ(seen.size(), 19u);
}

// The (f) column is tabulated as 6l/e, so f_table * e = 6l.
TEST(Subtypes, QuotientColumnAgreesWithShiftOrder) {
  for (const auto& t : subtype_grid(8, 6)) {
    SubtypeRow row = subtype_row(t, subtype(t));
    EXPECT_EQ(6L * t.l(), row.f_char0 * invariant_e(t, Characteristic::Zero)) << t.to_string();
    EXPECT_EQ(6L * t.l(), row.f_char2 * invariant_e(t, Characteristic::Two)) << t.to_string();
  }
}

TEST(Profile, Examples) {
  InvariantProfile e7 = invariant_profile(T("E7:l=2:t=1"), Characteristic::Zero);
  EXPECT_EQ(e7.a, 112);
  EXPECT_EQ(e7.b, (std::set<long>{2}));
  EXPECT_EQ(e7.c, (std::set<Rational>{Rational(56)}));
  EXPECT_EQ(e7.d_group, Z(6) + Zmod(3));
  EXPECT_EQ(e7.has_ct, true);
  EXPECT_FALSE(e7.e.has_value());

  InvariantProfile a1 = invariant_profile(T("A1:l=3:t=1"), Characteristic::Zero);
  EXPECT_TRUE(a1.d_group.is_trivial());
  EXPECT_FALSE(a1.a || a1.b || a1.c || a1.has_ct || a1.e || a1.f || a1.subtype);

  InvariantProfile a6 = invariant_profile(T("A6:l=3:t=2"), Characteristic::Zero);
  EXPECT_EQ(a6.a, 18);
  EXPECT_EQ(a6.b, (std::set<long>{3, 6}));
  EXPECT_EQ(a6.c, (std::set<Rational>{Rational(6), Rational(3)}));
  EXPECT_EQ(a6.has_ct, false);

  InvariantProfile a4 = invariant_profile(T("A4:l=5:t=1"), Characteristic::Zero);
  EXPECT_EQ(a4.e, 6);
  EXPECT_EQ(a4.f, (std::set<Rational>{Rational(5)}));
  EXPECT_EQ(a4.subtype, "I-3");
}

TEST(Profile, QuotientIsRigidCountOverSerreOrder) {
  for (const auto& t : triple_grid(8, 6)) {
    if (t.is_a1()) continue;
    InvariantProfile p = invariant_profile(t, Characteristic::Zero);
    std::set<Rational> want;
    for (long b : *p.b) {
      Rational q(*p.a, b);
      q.canonicalize();
      want.insert(q);
    }
    EXPECT_EQ(*p.c, want) << t.to_string();
  }
}

TEST(Distinguish, Examples) {
  auto verdict = [](const char* a, const char* b) { return distinguish(T(a), T(b), Characteristic::Zero); };
  EXPECT_EQ(verdict("A2:l=1:t=1", "A2:l=1:t=1").kind, Verdict::Kind::SameQuiver);
  EXPECT_EQ(verdict("A1:l=2:t=1", "A1:l=5:t=1").kind, Verdict::Kind::BothA1);
  Verdict v = verdict("A6:l=2:t=1", "E6:l=2:t=2");
  EXPECT_EQ(v.kind, Verdict::Kind::DistinguishedBy);
  EXPECT_EQ(v.separator, "GrothendieckGroup");
  EXPECT_EQ(verdict("A4:l=3:t=2", "A4:l=2:t=1").separator, "ClusterTilting");
  EXPECT_EQ(verdict("A1:l=1:t=1", "A2:l=1:t=1").separator, "GrothendieckGroup");
}

TEST(Distinguish, IsSymmetric) {
  const auto grid = triple_grid(6, 4);
  std::vector<InvariantProfile> profiles;
  for (const auto& t : grid) profiles.push_back(invariant_profile(t, Characteristic::Two));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      ASSERT_EQ(distinguish(profiles[i], profiles[j]), distinguish(profiles[j], profiles[i]));
}

TEST(Distinguish, GridIsCompletelySeparated) {
  const auto grid = triple_grid(8, 6);
  for (auto ch : {Characteristic::Zero, Characteristic::Two}) {
    std::vector<InvariantProfile> profiles;
    for (const auto& t : grid) profiles.push_back(invariant_profile(t, ch));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        Verdict v = distinguish(profiles[i], profiles[j]);
        if (grid[i].is_a1() && grid[j].is_a1()) {
          EXPECT_EQ(v.kind, Verdict::Kind::BothA1);
        } else {
          ASSERT_EQ(v.kind, Verdict::Kind::DistinguishedBy) << grid[i].to_string() << " " << grid[j].to_string();
        }
      }
    }
  }
}
