#include <gtest/gtest.h>

#include <polechart/linalg.hpp>
#include <polechart/polynomial.hpp>
#include <polechart/smith.hpp>

#include "support.hpp"

using namespace polechart;
using namespace testing_support;

namespace {

// Laplace expansion along the first row.
template <typename T>
T laplace_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    T term = m(0, j) * laplace_det(minor);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4/2"), Rational(-2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"1/0", "0.5", "1e3", "", "/2", "3/", "a", "1//2", "- 1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Gaussian, FieldOperations) {
  Gaussian z(Rational(2), Rational(-3)), w(Rational(1, 2), Rational(5));
  EXPECT_EQ((z * w) / w, z);
  EXPECT_EQ(z * Gaussian(Rational(0), Rational(1)), Gaussian(Rational(3), Rational(2)));
  EXPECT_THROW(z / Gaussian(0), std::domain_error);
}

TEST(Linalg, DeterminantMatchesLaplace) {
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(1, 5));
    RatMatrix m = rand_matrix(n, n, 4, 3);
    EXPECT_EQ(det(m), laplace_det(m));
  }
}

TEST(Linalg, InverseIsTwoSided) {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    RatMatrix m = rand_invertible(n, 4);
    RatMatrix inv = inverse(m);
    EXPECT_EQ(m * inv, RatMatrix::identity(n));
    EXPECT_EQ(inv * m, RatMatrix::identity(n));
  }
}

TEST(Linalg, SingularInverseNamesDependentColumn) {
  RatMatrix m{{1, 2, 3}, {0, 1, 1}, {2, 5, 7}};
  try {
    inverse(m);
    FAIL() << "expected SingularMatrix";
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.column, 2u);
  }
  RatMatrix z{{0, 1}, {0, 2}};
  try {
    inverse(z);
    FAIL() << "expected SingularMatrix";
  } catch (const SingularMatrix& e) {
    EXPECT_EQ(e.column, 0u);
  }
}

TEST(Linalg, RankOfLowRankProducts) {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = static_cast<std::size_t>(uniform(1, 6)), c = static_cast<std::size_t>(uniform(1, 6));
    std::size_t k = static_cast<std::size_t>(uniform(0, std::min(r, c)));
    RatMatrix m = rand_matrix(r, k, 3) * rand_matrix(k, c, 3);
    std::size_t rk = rank(m);
    EXPECT_LE(rk, k);
    EXPECT_EQ(rk, rref(m).second.size());
  }
}

TEST(Linalg, NullspaceVectorsAreAnnihilated) {
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m = rand_matrix(3, 5, 2) * rand_matrix(5, 6, 2);
    auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), 6u);
    for (const auto& v : basis) EXPECT_TRUE((m * v).all_zero());
  }
}

TEST(Poly, DivisionIdentity) {
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> a, d;
    for (long i = 0, n = uniform(0, 6); i <= n; ++i) a.push_back(rand_rational());
    for (long i = 0, n = uniform(0, 3); i <= n; ++i) d.push_back(rand_rational());
    d.back() = 1;
    Poly pa(a), pd(d);
    auto [q, r] = divmod(pa, pd);
    EXPECT_EQ(q * pd + r, pa);
    EXPECT_LT(r.degree(), pd.degree());
  }
}

TEST(Poly, GcdIsMonicCommonDivisor) {
  Poly s = Poly::s();
  Poly a = (s - 1) * (s - 1) * (s + 2), b = (s - 1) * (s * s + 1);
  EXPECT_EQ(gcd(a, b), s - 1);
  EXPECT_EQ(gcd(Rational(3) * a, Poly()), a.monic());
  EXPECT_EQ(Poly::s().str(), "s");
  EXPECT_EQ((s * s * s * s + s * s).str(), "s^4 + s^2");
  EXPECT_EQ((Rational(-1, 2) * s + Poly(3)).str(), "-1/2*s + 3");
}

TEST(Smith, CompanionHasSingleNontrivialFactor) {
  // companion matrix of s^3 - 2 s + 5
  RatMatrix c{{0, 0, -5}, {1, 0, 2}, {0, 1, 0}};
  auto chain = invariant_polynomials(c);
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[0], Poly(1));
  EXPECT_EQ(chain[1], Poly(1));
  EXPECT_EQ(chain[2], Poly(std::vector<Rational>{5, -2, 0, 1}));
}

TEST(Smith, ScalarMatrix) {
  auto chain = invariant_polynomials(Rational(3) * RatMatrix::identity(4));
  for (const auto& p : chain) EXPECT_EQ(p, Poly::s() - 3);
}

TEST(Smith, InvariantUnderSimilarity) {
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(1, 5));
    RatMatrix a = rand_matrix(n, n, 2);
    RatMatrix t = rand_invertible(n);
    EXPECT_EQ(invariant_polynomials(a), invariant_polynomials(inverse(t) * a * t));
  }
}
