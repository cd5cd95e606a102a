#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace toric;
using toric::testing::iv;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Leibniz expansion.
Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Integer p = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) p *= m(i, perm[i]);
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Invariant factors from determinantal divisors: s_k = D_k / D_{k-1}, where
// D_k is the gcd of all k x k minors.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(m.rows(), k))
      for (const auto& cs : subsets(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        g = gcd(g, leibniz_det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST(Smith, DecompositionIdentityAndShape) {
  std::mt19937_64 rng(toric::testing::seed());
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    SmithDecomposition s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k)
      EXPECT_TRUE(mpz_divisible_p(s.invariant_factors[k + 1].get_mpz_t(),
                                  s.invariant_factors[k].get_mpz_t()));
  }
}

TEST(Smith, InvariantFactorsMatchDeterminantalDivisors) {
  std::mt19937_64 rng(toric::testing::seed() + 1);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -4, 4);
    EXPECT_EQ(smith_normal_form(m).invariant_factors, invariant_factors_by_minors(m)) << m.to_string();
  }
}

TEST(Smith, KnownExamples) {
  IntMatrix m = IntMatrix::from_rows({iv({2, 4, 4}), iv({-6, 6, 12}), iv({10, -4, -16})}, 3);
  EXPECT_EQ(smith_normal_form(m).invariant_factors, (std::vector<Integer>{2, 6, 12}));
  EXPECT_TRUE(smith_normal_form(IntMatrix(2, 3)).invariant_factors.empty());
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(toric::testing::seed() + 2);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(determinant(m), leibniz_det(m));
    EXPECT_EQ(rank(m) == n, determinant(m) != 0);
  }
}

TEST(Unimodular, InverseRoundTrip) {
  std::mt19937_64 rng(toric::testing::seed() + 3);
  for (int t = 0; t < 20; ++t) {
    IntMatrix u = smith_normal_form(random_matrix(rng, 4, 4, -5, 5)).U;
    IntMatrix inv = unimodular_inverse(u);
    EXPECT_EQ(u * inv, IntMatrix::identity(4));
    EXPECT_EQ(inv * u, IntMatrix::identity(4));
  }
  EXPECT_THROW(unimodular_inverse(IntMatrix::from_rows({iv({2, 0}), iv({0, 1})}, 2)),
               std::invalid_argument);
}

TEST(Cokernel, DescribeAndProject) {
  EXPECT_EQ(cokernel(IntMatrix::from_rows({iv({2})}, 1)).describe(), "Z/2");
  EXPECT_EQ(cokernel(IntMatrix::from_rows({iv({1}), iv({-1})}, 1)).describe(), "Z");
  EXPECT_EQ(cokernel(IntMatrix::from_rows({iv({1, 0}), iv({0, 1})}, 2)).describe(), "0");
  IntMatrix m = IntMatrix::from_rows({iv({2, 0}), iv({0, 3}), iv({0, 0})}, 2);
  FinitelyGeneratedAbelianGroup g = cokernel(m);
  EXPECT_EQ(g.describe(), "Z + Z/6");
  EXPECT_EQ(g.free_rank(), 1u);
}

TEST(Cokernel, ImageProjectsToZeroAndSectionSplits) {
  std::mt19937_64 rng(toric::testing::seed() + 4);
  for (int t = 0; t < 30; ++t) {
    std::size_t d = 2 + rng() % 3, n = 1 + rng() % 2;
    IntMatrix m = random_matrix(rng, d, n, -3, 3);
    FinitelyGeneratedAbelianGroup g = cokernel(m);
    for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(g.project(m.col(c)), g.zero());
    IntVector a(d);
    for (auto& x : a) x = static_cast<long>(rng() % 9) - 4;
    IntVector cls = g.project(a);
    EXPECT_EQ(g.project(g.section(cls)), cls);
    EXPECT_EQ(g.add(cls, g.negate(cls)), g.zero());
    for (const auto& u : dual_lattice_basis(g))
      for (std::size_t c = 0; c < n; ++c) {
        Integer s = 0;
        for (std::size_t i = 0; i < d; ++i) s += u[i] * m(i, c);
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Cokernel, DualBasisReadsFreeCoordinates) {
  IntMatrix rays = IntMatrix::from_rows({iv({1, 0}), iv({0, 1}), iv({-1, 1}), iv({0, -1})}, 2);
  FinitelyGeneratedAbelianGroup g = cokernel(rays);
  auto dual = dual_lattice_basis(g);
  ASSERT_EQ(dual.size(), 2u);
  for (int t = 0; t < 5; ++t) {
    IntVector a = iv({t, 2 * t - 1, 3, -t});
    IntVector cls = g.project(a);
    for (std::size_t j = 0; j < 2; ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += dual[j][i] * a[i];
      EXPECT_EQ(s, cls[j]);
    }
  }
}

TEST(IntMatrixOps, RowAndColumnOperations) {
  IntMatrix m = IntMatrix::from_rows({iv({1, 2}), iv({3, 4})}, 2);
  m.add_row_multiple(1, 0, -3);
  EXPECT_EQ(m.row(1), iv({0, -2}));
  m.swap_cols(0, 1);
  EXPECT_EQ(m.col(0), iv({2, -2}));
  m.negate_row(1);
  EXPECT_EQ(m.apply(iv({1, 1})), iv({3, 2}));
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(to_string(iv({1, -2})), "[1, -2]");
}
