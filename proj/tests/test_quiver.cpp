#include <gtest/gtest.h>

#include "core/errors.hpp"
#include "core/quiver.hpp"

using namespace meshk0;

namespace {

MeshTriple T(const char* s) { return MeshTriple::parse(s); }

std::vector<VertexId> successors(const TranslationQuiver& q, const VertexId& v) {
  std::vector<VertexId> out;
  for (int a : q.arrows_from(q.index_of(v))) out.push_back(q.vertices()[q.arrows()[a].target]);
  return out;
}

}  // namespace

TEST(Dynkin, Diagrams) {
  DynkinDiagram a2 = build_dynkin(Family::A, 2);
  EXPECT_EQ(a2.arrows, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(a2.coxeter, 3);
  DynkinDiagram a1 = build_dynkin(Family::A, 1);
  EXPECT_TRUE(a1.arrows.empty());
  EXPECT_EQ(a1.coxeter, 2);
  DynkinDiagram e8 = build_dynkin(Family::E, 8);
  EXPECT_EQ(e8.coxeter, 30);
  EXPECT_EQ(e8.arrows.size(), 7u);
  EXPECT_NE(std::find(e8.arrows.begin(), e8.arrows.end(), std::pair(5, 8)), e8.arrows.end());
  EXPECT_EQ(build_dynkin(Family::D, 6).coxeter, 10);
  EXPECT_THROW(build_dynkin(Family::D, 3), ParameterError);
  EXPECT_THROW(build_dynkin(Family::E, 9), ParameterError);
}

TEST(Dynkin, TripleValidation) {
  EXPECT_EQ(T("A5:l=4:t=2").type(), MeshType::II);
  EXPECT_EQ(T("A4:l=3:t=2").type(), MeshType::III);
  EXPECT_EQ(T("A4:l=3:t=2").k(), 2);
  EXPECT_EQ(T("D4:l=3:t=3").type(), MeshType::VI);
  EXPECT_EQ(T("E8:l=2:t=1").type(), MeshType::X);
  EXPECT_THROW(T("A4:l=4:t=2"), ParameterError);
  EXPECT_THROW(T("D5:l=3:t=3"), ParameterError);
  EXPECT_THROW(T("E7:l=2:t=2"), ParameterError);
  EXPECT_THROW(T("A5:l=3:t=2"), ParameterError);
  EXPECT_THROW(T("A5-l=3"), ParseError);
  EXPECT_EQ(T("D4:l=6:t=3").to_string(), "D4:l=6:t=3");
}

TEST(Dynkin, GridContents) {
  auto grid = triple_grid(8, 6);
  EXPECT_EQ(grid.size(), 186u);
  EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
  EXPECT_EQ(std::adjacent_find(grid.begin(), grid.end()), grid.end());
}

TEST(Quiver, SmallQuotients) {
  TranslationQuiver a2(T("A2:l=1:t=1"));
  EXPECT_EQ(a2.vertex_count(), 2u);
  EXPECT_EQ(a2.arrows().size(), 2u);
  EXPECT_EQ(a2.arrow_count(0, 1), 1);
  EXPECT_EQ(a2.arrow_count(1, 0), 1);
  EXPECT_EQ(a2.tau(0), 0);
  EXPECT_EQ(a2.tau(1), 1);

  TranslationQuiver a1(T("A1:l=4:t=1"));
  EXPECT_EQ(a1.vertex_count(), 4u);
  EXPECT_TRUE(a1.arrows().empty());
  EXPECT_EQ(automorphism_order(automorphism(a1, AutomorphismName::Tau)), 4);

  TranslationQuiver a3(T("A3:l=2:t=2"));
  EXPECT_EQ(a3.vertex_count(), 3u);
}

TEST(Quiver, VertexCounts) {
  for (const auto& t : triple_grid(8, 6)) {
    TranslationQuiver q(t);
    const long cover = static_cast<long>(t.n()) * t.l();
    EXPECT_EQ(static_cast<long>(q.vertex_count()) * t.t(), cover) << t.to_string();
    if (t.type() == MeshType::III) EXPECT_EQ(static_cast<long>(q.vertex_count()) * 2, t.n() * (2L * t.k() - 1));
    if (t.type() == MeshType::VI) EXPECT_EQ(static_cast<long>(q.vertex_count()), 4L * t.k());
  }
}

TEST(Quiver, MeshLawOnGrid) {
  for (const auto& t : triple_grid(8, 6)) {
    TranslationQuiver q(t);
    const int count = static_cast<int>(q.vertex_count());
    for (int u = 0; u < count; ++u)
      for (int v = 0; v < count; ++v)
        ASSERT_EQ(q.arrow_count(u, v), q.arrow_count(v, q.tau_inverse(u))) << t.to_string();
  }
}

TEST(Quiver, Meshes) {
  TranslationQuiver a2(T("A2:l=1:t=1"));
  auto meshes = a2.mesh_list();
  EXPECT_EQ(meshes[0].start, (VertexId{1, 0}));
  EXPECT_EQ(meshes[0].successors, (std::vector<VertexId>{{2, 0}}));
  EXPECT_EQ(meshes[0].end, (VertexId{1, 0}));

  for (const auto& m : TranslationQuiver(T("A1:l=3:t=1")).mesh_list()) EXPECT_TRUE(m.successors.empty());

  TranslationQuiver d4(T("D4:l=1:t=1"));
  EXPECT_EQ(successors(d4, {2, 0}), (std::vector<VertexId>{{1, 0}, {3, 0}, {4, 0}}));
  EXPECT_EQ(d4.mesh_list()[d4.index_of({2, 0})].end, (VertexId{2, 0}));
}

TEST(Automorphism, Examples) {
  TranslationQuiver d5(T("D5:l=3:t=1"));
  auto psi = automorphism(d5, AutomorphismName::Psi);
  for (long a = 0; a < 3; ++a) {
    EXPECT_EQ(psi(d5.index_of({4, a})), d5.index_of({5, a}));
    EXPECT_EQ(psi(d5.index_of({5, a})), d5.index_of({4, a}));
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(psi(d5.index_of({i, a})), d5.index_of({i, a}));
  }

  TranslationQuiver d4(T("D4:l=3:t=1"));
  auto chi = automorphism(d4, AutomorphismName::Chi);
  EXPECT_TRUE(chi.pow(3).same_vertex_map(chi.pow(0)));
  EXPECT_FALSE(chi.same_vertex_map(chi.pow(0)));

  TranslationQuiver a2(T("A2:l=1:t=1"));
  auto pi = automorphism(a2, AutomorphismName::Pi);
  EXPECT_EQ(pi(0), 1);
  EXPECT_EQ(pi(1), 0);

  EXPECT_THROW(automorphism(a2, AutomorphismName::Psi), ParameterError);
  EXPECT_THROW(automorphism(d5, AutomorphismName::Chi), ParameterError);
}

TEST(Automorphism, Orders) {
  TranslationQuiver a3(T("A3:l=4:t=1"));
  EXPECT_EQ(automorphism_order(automorphism(a3, AutomorphismName::Tau)), 4);
  EXPECT_EQ(automorphism_order(automorphism(a3, AutomorphismName::Tau).pow(0)), 1);

  TranslationQuiver a4(T("A4:l=5:t=1"));
  auto pt = automorphism(a4, AutomorphismName::Pi).after(automorphism(a4, AutomorphismName::Tau).inverse());
  EXPECT_EQ(a4.vertex_count(), 20u);
  EXPECT_EQ(automorphism_order(pt), 2);
  // pi tau^-1 = phi^(n+1) on A_n with n even
  EXPECT_TRUE(pt.same_vertex_map(automorphism(a4, AutomorphismName::Phi).pow(5)));
}

TEST(Automorphism, NakayamaIsNotStoredAsTable) {
  // The Coxeter identity holds on the cover independently of any quotient.
  for (auto [family, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::A, 7}, {Family::D, 4}, {Family::D, 7},
           {Family::E, 6}, {Family::E, 7}, {Family::E, 8}}) {
    DynkinDiagram delta = build_dynkin(family, n);
    CoverMap pt = nakayama_map(delta).after(CoverMap::tau_power(n, -1));
    EXPECT_EQ(pt.pow(2), CoverMap::tau_power(n, -delta.coxeter)) << delta.name();
    EXPECT_NE(pt, CoverMap::tau_power(n, -delta.coxeter / 2 - 1)) << delta.name();
  }
}

TEST(Automorphism, PreservesArrowsOnGrid) {
  for (const auto& t : triple_grid(8, 6)) {
    TranslationQuiver q(t);
    auto pi = automorphism(q, AutomorphismName::Pi);
    for (const Arrow& arrow : q.arrows()) EXPECT_GT(q.arrow_count(pi(arrow.source), pi(arrow.target)), 0);
  }
}
