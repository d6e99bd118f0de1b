#include <gtest/gtest.h>

#include <polechart/reduction.hpp>

#include "support.hpp"

using namespace polechart;
using namespace testing_support;

namespace {

RatMatrix random_block_p1(std::size_t r, const Partition& w) {
  for (;;) {
    RatMatrix p1 = rand_matrix(r, static_cast<std::size_t>(total(w)), 3);
    try {
      find_admissible_block(p1, w);
      return p1;
    } catch (const NotAdmissible&) {
    }
  }
}

template <typename T>
void expect_pattern(const Matrix<T>& red, const Matrix<int>& pat) {
  for (std::size_t i = 0; i < pat.rows(); ++i)
    for (std::size_t c = 0; c < pat.cols(); ++c) {
      if (pat(i, c) == 0) EXPECT_TRUE(is_zero(red(i, c))) << i << "," << c;
      if (pat(i, c) == 1) EXPECT_TRUE(red(i, c) == T(1)) << i << "," << c;
    }
}

// Random invertible element of the centralizer of A.
RatMatrix rand_centralizer_unit(const SpectralData& sd) {
  for (;;) {
    RatMatrix y = centralizer_element(sd, rand_vector(centralizer_dimension(sd), 3, 2));
    if (is_invertible(y)) return y;
  }
}

}  // namespace

TEST(Reduction, MultiIndexTextRoundTrip) {
  MultiIndex idx = parse_multi_index("2;2,1|1");
  ASSERT_EQ(idx.size(), 2u);
  EXPECT_EQ(idx[0], (BlockIndex{{1}, {1, 0}}));
  EXPECT_EQ(idx[1], (BlockIndex{{0}}));
  EXPECT_EQ(to_string(idx), "2;2,1|1");
  EXPECT_THROW(parse_multi_index("2;x"), ParseError);
  EXPECT_THROW(parse_multi_index("0"), ParseError);
}

TEST(Reduction, ValidatesIndexShape) {
  Partition w{2, 1};  // tau = (1, 2)
  EXPECT_NO_THROW(validate_block_index({{1}, {1, 0}}, w, 2));
  EXPECT_THROW(validate_block_index({{1}, {0, 1}}, w, 2), std::invalid_argument);
  EXPECT_THROW(validate_block_index({{1, 0}, {1, 0}}, w, 2), std::invalid_argument);
  EXPECT_THROW(validate_block_index({{2}, {2, 0}}, w, 2), std::invalid_argument);
  Partition w3{2, 2, 1};  // tau = (1, 2, 2)
  EXPECT_NO_THROW(validate_block_index({{0}, {0, 2}, {0, 2}}, w3, 3));
  EXPECT_THROW(validate_block_index({{0}, {0, 2}, {0, 1}}, w3, 3), std::invalid_argument);
}

TEST(Reduction, WorkedExampleAdmissibility) {
  // real block of the 5-state example: columns of W(0) with w = (2, 1)
  Partition w{2, 1};
  RatMatrix p1{{3, 1, 4}, {2, 5, 1}};
  EXPECT_TRUE(admissible_block(p1, w, {{1}, {1, 0}}));
  EXPECT_TRUE(admissible_block(p1, w, {{0}, {0, 1}}));
  EXPECT_EQ(find_admissible_block(p1, w), (BlockIndex{{0}, {0, 1}}));
  RatMatrix q1{{0, 1, 4}, {2, 5, 1}};
  std::size_t bad = 0;
  EXPECT_FALSE(admissible_block(q1, w, {{0}, {0, 1}}, &bad));
  EXPECT_EQ(bad, 1u);
  EXPECT_EQ(find_admissible_block(q1, w), (BlockIndex{{1}, {1, 0}}));
  RatMatrix s1{{1, 2, 0}, {2, 4, 1}};
  EXPECT_THROW(find_admissible_block(s1, w), NotAdmissible);
}

TEST(Reduction, WorkedExampleClosedForms) {
  Partition w{2, 1};
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix p1 = rand_matrix(2, 3, 4, 3);
    if (is_zero(p1(1, 0)) || !admissible_block(p1, w, {{1}, {1, 0}})) continue;
    auto red = reduce_block(p1, w, {{1}, {1, 0}});
    EXPECT_EQ(red.reduced(1, 0), Rational(1));
    EXPECT_EQ(red.reduced(1, 1), Rational(0));
    EXPECT_EQ(red.reduced(0, 1), Rational(1));
    EXPECT_EQ(red.reduced(0, 0), Rational(p1(0, 0) / p1(1, 0)));
    EXPECT_TRUE(is_zero(red.reduced(0, 2)) && is_zero(red.reduced(1, 2)));
  }
  // complex block: cells (p14, p15) and (p24, p25)
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix cells = rand_matrix(2, 2, 4, 3);
    Rational n2 = cells(0, 0) * cells(0, 0) + cells(0, 1) * cells(0, 1);
    if (is_zero(n2)) continue;
    auto red = reduce_block(cells_to_gaussian(cells), Partition{1}, {{0}});
    RatMatrix out = gaussian_to_cells(red.reduced);
    EXPECT_EQ(out(0, 0), Rational(1));
    EXPECT_EQ(out(0, 1), Rational(0));
    EXPECT_EQ(out(1, 0), Rational((cells(0, 0) * cells(1, 0) + cells(0, 1) * cells(1, 1)) / n2));
    EXPECT_EQ(out(1, 1), Rational((cells(0, 0) * cells(1, 1) - cells(0, 1) * cells(1, 0)) / n2));
  }
}

TEST(Reduction, LargeRealExampleHasThirtyFreeEntries) {
  Partition w{6, 4, 1, 1};
  const std::size_t r = 7;
  RatMatrix p1 = random_block_p1(r, w);
  BlockIndex idx = find_admissible_block(p1, w);
  auto pat = reduced_pattern(w, r, idx);
  std::size_t free_count = 0;
  for (std::size_t i = 0; i < pat.rows(); ++i)
    for (std::size_t c = 0; c < pat.cols(); ++c) free_count += pat(i, c) == -1;
  EXPECT_EQ(free_count, 30u);
  EXPECT_EQ(free_positions(w, r, idx).size(), 30u);
  auto red = reduce_block(p1, w, idx);
  expect_pattern(red.reduced, pat);
  EXPECT_EQ(p1 * red.y, red.reduced);
  RatMatrix a = weyr_matrix(Rational(0), w);
  EXPECT_EQ(red.y * a, a * red.y);
}

TEST(Reduction, FreeCountIsRowsTimesWidthMinusCentralizer) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& segre : partitions_of(n)) {
      Partition w = weyr_characteristic(segre);
      for (std::size_t r = static_cast<std::size_t>(w[0]); r <= static_cast<std::size_t>(w[0]) + 2; ++r) {
        RatMatrix p1 = random_block_p1(r, w);
        BlockIndex idx = find_admissible_block(p1, w);
        EXPECT_EQ(free_positions(w, r, idx).size(), r * static_cast<std::size_t>(n) - centralizer_param_count(w));
        auto red = reduce_block(p1, w, idx);
        expect_pattern(red.reduced, reduced_pattern(w, r, idx));
      }
    }
}

TEST(Reduction, ThrowsWhenPivotIsSingular) {
  Partition w{2, 1};
  RatMatrix p1{{0, 1, 4}, {2, 5, 1}};
  EXPECT_THROW(reduce_block(p1, w, {{0}, {0, 1}}), NotAdmissible);
}

TEST(Reduction, OrbitRepresentativeIsUnique) {
  for (int trial = 0; trial < 15; ++trial) {
    SpectralData sd = rand_spectrum(7);
    RatMatrix a = spectral_matrix(sd);
    int n = sd.size();
    Partition r = rand_partition(n);
    if (!nonempty(invariant_chain(sd), r)) continue;
    RatMatrix p1 = rand_observability_p1(a, r);
    MultiIndex idx = find_admissible(sd, p1);
    RatMatrix y0 = rand_centralizer_unit(sd);
    auto red = reduce(sd, p1, idx);
    EXPECT_EQ(p1 * red.y, red.reduced);
    EXPECT_EQ(red.y * a, a * red.y);
    EXPECT_TRUE(admissible(sd, p1 * y0, idx));
    EXPECT_EQ(reduce(sd, p1 * y0, idx).reduced, red.reduced);
    EXPECT_EQ(assemble_observability(a, r, red.reduced), assemble_observability(a, r, p1) * red.y);
  }
}

TEST(Reduction, ComplexPatternHolds) {
  for (int trial = 0; trial < 10; ++trial) {
    Partition segre = rand_partition(static_cast<int>(uniform(1, 4)));
    Partition w = weyr_characteristic(segre);
    std::size_t r = static_cast<std::size_t>(w[0] + uniform(0, 2));
    Matrix<Gaussian> p1 = cells_to_gaussian(rand_matrix(r, 2 * static_cast<std::size_t>(total(w)), 3));
    BlockIndex idx = find_admissible_block(p1, w);
    auto red = reduce_block(p1, w, idx);
    expect_pattern(red.reduced, reduced_pattern(w, r, idx));
    EXPECT_EQ(p1 * red.y, red.reduced);
    RatMatrix a = realify(weyr_matrix(Gaussian(Rational(1), Rational(2)), w));
    RatMatrix y = realify(red.y);
    EXPECT_EQ(y * a, a * y);
    // diamond-expanded minors carry the admissibility test
    RatMatrix cells = gaussian_to_cells(p1);
    auto tau = taus(w);
    for (std::size_t j = 1; j <= w.size(); ++j)
      EXPECT_TRUE(is_invertible(diamond(cells.select_rows(idx[j - 1]).block(0, 0, tau[j], 2 * tau[j]))));
  }
}
