#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "core/circulant.hpp"
#include "core/exact_rank.hpp"
#include "core/smith.hpp"

using namespace meshk0;

namespace {

IntMatrix diagonal_of(const SmithForm& s) {
  IntMatrix d(s.d.rows(), s.d.cols());
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) d(i, i) = s.d(i, i);
  return d;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace

TEST(AbelianGroup, CanonicalForm) {
  AbelianGroup g(1, {Integer(2), Integer(3), Integer(1), Integer(0), Integer(4)});
  EXPECT_EQ(g.free_rank(), 2);
  ASSERT_EQ(g.torsion().size(), 2u);
  EXPECT_EQ(g.torsion()[0], 2);
  EXPECT_EQ(g.torsion()[1], 12);
  EXPECT_EQ(g.to_text(), "Z^2 + Z/2 + Z/12");
  EXPECT_EQ(AbelianGroup::trivial().to_text(), "0");
  EXPECT_EQ(AbelianGroup(0, {Integer(2), Integer(2), Integer(2), Integer(4)}).to_text(), "(Z/2)^3 + Z/4");
}

TEST(AbelianGroup, DirectSum) {
  EXPECT_EQ(AbelianGroup::free(1) + AbelianGroup::trivial(), AbelianGroup::free(1));
  AbelianGroup z2(0, {Integer(2)}), z3(0, {Integer(3)});
  EXPECT_EQ((z2 + z2).torsion(), (std::vector<Integer>{2, 2}));
  EXPECT_EQ((z2 + z3).torsion(), (std::vector<Integer>{6}));
  EXPECT_EQ(power(z2, 3), AbelianGroup(0, {Integer(2), Integer(2), Integer(2)}));
  EXPECT_EQ(power(z2, 0), AbelianGroup::trivial());
  // Z/4 + Z/6 = Z/2 + Z/12
  EXPECT_EQ(AbelianGroup(0, {Integer(4), Integer(6)}).torsion(), (std::vector<Integer>{2, 12}));
}

TEST(Smith, CoprimeDiagonal) {
  SmithForm s = smith_normal_form({{2, 0}, {0, 3}}, true);
  EXPECT_EQ(s.d, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ((*s.u * IntMatrix{{2, 0}, {0, 3}} * *s.v), s.d);
}

TEST(Smith, Identity) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(5)).d, IntMatrix::identity(5));
}

TEST(Smith, AllOnesRankOne) {
  SmithForm s = smith_normal_form({{1, 1, 1}, {1, 1, 1}}, true);
  EXPECT_EQ(s.d, (IntMatrix{{1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(s.rank, 1u);
}

TEST(Smith, EmptyMatrices) {
  EXPECT_EQ(cokernel(IntMatrix(3, 0)), AbelianGroup::free(3));
  EXPECT_EQ(cokernel(IntMatrix(0, 4)), AbelianGroup::trivial());
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 0), true).rank, 0u);
}

TEST(Smith, CokernelExamples) {
  for (long k = 1; k <= 7; ++k) {
    IntMatrix m = IntMatrix::identity(k) - circulant_power(k, 1);
    EXPECT_EQ(cokernel(m), AbelianGroup::free(1)) << k;
  }
  IntMatrix m = IntMatrix::identity(6) + circulant_power(6, 2);
  EXPECT_EQ(cokernel(m), (AbelianGroup(0, {Integer(2), Integer(2)})));
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix m{{1000000, 999999}, {999998, 1000000}};
  Integer det = Integer(1000000) * 1000000 - Integer(999999) * 999998;
  AbelianGroup g = cokernel(m);
  Integer order = 1;
  for (const auto& d : g.torsion()) order *= d;
  EXPECT_EQ(order, abs(det));
  EXPECT_EQ(g.free_rank(), 0);
}

TEST(SmithProperty, TransformsAndChain) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 12, trial % 2 ? 5 : 1000000);
    SmithForm s = smith_normal_form(m, true);
    ASSERT_EQ(*s.u * m * *s.v, s.d);
    EXPECT_EQ(s.d, diagonal_of(s));
    EXPECT_EQ(abs(determinant(*s.u)), 1);
    EXPECT_EQ(abs(determinant(*s.v)), 1);
    EXPECT_EQ(s.rank, rational_rank(m));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
    EXPECT_EQ(cokernel(m).free_rank(), static_cast<long>(m.rows() - rational_rank(m)));
  }
}

TEST(SmithProperty, CokernelInvariantUnderColumnOperations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 8, 6);
    AbelianGroup g = cokernel(m);

    std::vector<std::size_t> perm(m.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(cokernel(m.columns(perm)), g);

    IntMatrix negated = m;
    for (std::size_t r = 0; r < m.rows(); ++r) negated(r, trial % m.cols()) = -negated(r, trial % m.cols());
    EXPECT_EQ(cokernel(negated), g);

    EXPECT_EQ(cokernel(m.hconcat(IntMatrix(m.rows(), 3))), g);
  }
}

TEST(SmithProperty, BlockDiagonalIsDirectSum) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 6, 8), b = random_matrix(rng, 6, 8);
    EXPECT_EQ(cokernel(block_diagonal({a, b})), cokernel(a) + cokernel(b));
  }
}

TEST(ExactRank, Determinant) {
  EXPECT_EQ(determinant({{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(rational_rank({{1, 2}, {2, 4}, {0, 1}}), 2u);
}
