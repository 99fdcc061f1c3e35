#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "core/circulant.hpp"
#include "core/errors.hpp"
#include "core/lemma_catalog.hpp"
#include "core/mesh_oracle.hpp"
#include "core/smith.hpp"

using namespace meshk0;

namespace {

MeshTriple T(const char* s) { return MeshTriple::parse(s); }

ZPoly x(long e) { return ZPoly::monomial(e); }

// Dimension vectors of projectives of the cover Z(Delta)/<tau^l> at the
// vertices used by the first-principles presentation.
IntMatrix cover_projectives(const MeshTriple& t) {
  MeshTriple cover = MeshTriple::make(t.family(), t.n(), t.l(), 1);
  std::vector<VertexId> subset;
  for (auto [i, a] : first_principles_projective_vertices(t)) subset.push_back({i, a});
  return projective_columns(cover, subset);
}

}  // namespace

TEST(Circulant, Powers) {
  EXPECT_EQ(circulant_power(3, 0), IntMatrix::identity(3));
  EXPECT_EQ(circulant_power(2, 1), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(circulant_power(4, -1), circulant_power(4, 3));
  EXPECT_EQ(circulant_power(5, 2) * circulant_power(5, 3), IntMatrix::identity(5));
  EXPECT_THROW(circulant_power(0, 1), ParameterError);
  // X e_b = e_{b+1}
  IntMatrix x4 = circulant_power(4, 1);
  for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(x4((b + 1) % 4, b), 1);
}

TEST(Circulant, PolynomialEvaluation) {
  EXPECT_EQ((1 - x(1)).evaluate(1), IntMatrix(1, 1));
  EXPECT_EQ((1 + x(2)).evaluate(4), IntMatrix::identity(4) + circulant_power(4, 2));
  IntMatrix s3 = alternating_sum(3).evaluate(3);
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<long> row;
    for (std::size_t c = 0; c < 3; ++c) row.push_back(s3(r, c).get_si());
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<long>{-1, 1, 1}));
  }
  EXPECT_EQ(x(-1).evaluate(5), circulant_power(5, 4));
}

TEST(Circulant, EvaluationIsRingHomomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-4, 4), exponent(-3, 9);
  for (int trial = 0; trial < 200; ++trial) {
    ZPoly f = ZPoly::from_terms({{exponent(rng), coeff(rng)}, {exponent(rng), coeff(rng)}, {0, coeff(rng)}});
    ZPoly g = ZPoly::from_terms({{exponent(rng), coeff(rng)}, {exponent(rng), coeff(rng)}});
    long m = 1 + trial % 9;
    EXPECT_EQ((f * g).evaluate(m), f.evaluate(m) * g.evaluate(m));
    EXPECT_EQ((f + g).evaluate(m), f.evaluate(m) + g.evaluate(m));
  }
}

TEST(Circulant, OrbitPermutationExamples) {
  for (long m = 1; m <= 6; ++m) {
    IntMatrix y = orbit_permutation(m, 1);
    EXPECT_EQ(y.transposed() * circulant_power(m, 1) * y, circulant_power(m, 1));
  }
  IntMatrix y42 = orbit_permutation(4, 2);
  EXPECT_EQ(y42.transposed() * circulant_power(4, 2) * y42, block_diagonal_power(circulant_power(2, 1), 2));
  IntMatrix y63 = orbit_permutation(6, 3);
  EXPECT_EQ(y63.transposed() * circulant_power(6, 3) * y63, block_diagonal_power(circulant_power(2, 1), 3));
}

TEST(Circulant, OrbitPermutationConjugatesBattery) {
  for (const ZPoly& f : polynomial_battery()) {
    for (long m = 1; m <= 12; ++m) {
      for (long p = 0; p <= 12; ++p) {
        const long d = std::gcd(p, m), q = m / d;
        IntMatrix y = orbit_permutation(m, p);
        ASSERT_EQ(y.transposed() * f.substitute_power(p).evaluate(m) * y, block_diagonal_power(f.evaluate(q), d))
            << f.to_string() << " m=" << m << " p=" << p;
      }
    }
  }
}

TEST(Circulant, StandardBlocks) {
  StandardBlocks b2 = standard_blocks(2);
  EXPECT_EQ(b2.t(0, 0), ZPoly(0));
  EXPECT_EQ(b2.t(0, 1), x(2));
  EXPECT_EQ(b2.t(1, 0), x(1));
  EXPECT_EQ(b2.t(1, 1), ZPoly(0));

  StandardBlocks b3 = standard_blocks(3);
  ASSERT_EQ(b3.u.rows(), 3u);
  ASSERT_EQ(b3.u.cols(), 1u);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(b3.u(r, 0), ZPoly(1));

  StandardBlocks b5 = standard_blocks(5);
  EXPECT_EQ(b5.f, 1 + x(2));
  EXPECT_EQ(b5.g, x(1) + x(3));
  ASSERT_EQ(b5.v.rows(), 3u);
  EXPECT_EQ(b5.v(0, 0), 1 + x(3));
  EXPECT_EQ(b5.v(2, 0), 1 + x(1));
  EXPECT_EQ(b5.w(0, 0), x(3));
  EXPECT_EQ(b5.w(2, 0), x(1) + x(2) + x(3));
}

TEST(Circulant, AssembledExamples) {
  EXPECT_EQ(assemble_generator_matrix(T("A2:l=1:t=1")), (IntMatrix{{1, 1, 1}, {1, 1, 1}}));

  IntMatrix e7 = assemble_generator_matrix(T("E7:l=1:t=1"));
  ASSERT_EQ(e7.rows(), 7u);
  ASSERT_EQ(e7.cols(), 9u);
  EXPECT_EQ(e7.submatrix(0, 0, 7, 7), IntMatrix::scalar(7, 2));

  for (const auto& t : triple_grid(8, 6)) {
    IntMatrix m = assemble_generator_matrix(t);
    EXPECT_EQ(m.rows(), static_cast<std::size_t>(t.n()) * t.l()) << t.to_string();
    EXPECT_EQ(m.cols() % t.l(), 0u) << t.to_string();
  }
}

TEST(Circulant, ColumnCountsPerType) {
  auto block_columns = [](const char* s) {
    MeshTriple t = T(s);
    return assemble_generator_matrix(t).cols() / t.l();
  };
  EXPECT_EQ(block_columns("A5:l=2:t=1"), 6u);
  EXPECT_EQ(block_columns("A5:l=4:t=2"), 11u);
  EXPECT_EQ(block_columns("A4:l=3:t=2"), 9u);
  EXPECT_EQ(block_columns("D6:l=4:t=2"), 11u);
  EXPECT_EQ(block_columns("D4:l=3:t=3"), 7u);
  EXPECT_EQ(block_columns("E6:l=2:t=1"), 8u);
  EXPECT_EQ(block_columns("E6:l=2:t=2"), 14u);
  EXPECT_EQ(block_columns("E7:l=2:t=1"), 9u);
  EXPECT_EQ(block_columns("E8:l=2:t=1"), 10u);
}

TEST(Circulant, LiteralBlocksAgreeWithFirstPrinciples) {
  for (const auto& t : triple_grid(8, 6)) {
    IntMatrix direct = assemble_from_first_principles(t, cover_projectives(t));
    EXPECT_EQ(cokernel(direct), cokernel(assemble_generator_matrix(t))) << t.to_string();
  }
}

TEST(Circulant, FirstPrinciplesExamples) {
  IntMatrix a2 = assemble_from_first_principles(T("A2:l=1:t=1"), cover_projectives(T("A2:l=1:t=1")));
  EXPECT_EQ(a2, (IntMatrix{{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(cokernel(a2), AbelianGroup::free(1));

  IntMatrix a1 = assemble_from_first_principles(T("A1:l=1:t=1"), cover_projectives(T("A1:l=1:t=1")));
  EXPECT_EQ(a1, (IntMatrix{{2, 1}}));
  EXPECT_EQ(cokernel(a1), AbelianGroup::trivial());

  // Rows are the six cover vertices; the psi-columns glue them into three orbits.
  IntMatrix a3 = assemble_from_first_principles(T("A3:l=2:t=2"), cover_projectives(T("A3:l=2:t=2")));
  EXPECT_EQ(a3.rows(), 6u);
  EXPECT_EQ(a3.cols(), 6u + 2u + 6u);
  EXPECT_THROW(assemble_from_first_principles(T("A3:l=2:t=2"), IntMatrix(6, 3)), ParameterError);
}

TEST(Circulant, ReducedPresentationExamples) {
  for (long k = 1; k <= 5; ++k) {
    MeshTriple a3 = MeshTriple::make(Family::A, 3, k, 1);
    auto parts = reduced_presentation(a3);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0], ((1 - x(1)) * (1 + x(2))).evaluate(k));

    MeshTriple e7 = MeshTriple::make(Family::E, 7, k, 1);
    auto e7_parts = reduced_presentation(e7);
    ASSERT_EQ(e7_parts.size(), 7u);
    for (int i = 0; i < 6; ++i) EXPECT_EQ(e7_parts[i], (1 + x(9)).evaluate(k));
    EXPECT_EQ(e7_parts[6], (1 - x(1) + x(2)).evaluate(k));
  }
  auto d4 = reduced_presentation(T("D4:l=3:t=3"));
  ASSERT_EQ(d4.size(), 2u);
  EXPECT_EQ(d4[0], IntMatrix::scalar(3, 2));
  EXPECT_EQ(d4[1], IntMatrix::identity(3) + circulant_power(3, 1));
  EXPECT_TRUE(reduced_presentation(T("A1:l=3:t=1")).empty());
}

TEST(Circulant, NegativeExponentWrapFlag) {
  EXPECT_TRUE(uses_negative_exponent_wrap(T("E6:l=2:t=2")));
  EXPECT_FALSE(uses_negative_exponent_wrap(T("E6:l=12:t=2")));
  EXPECT_FALSE(uses_negative_exponent_wrap(T("E6:l=2:t=1")));
}
