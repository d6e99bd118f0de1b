#include <gtest/gtest.h>

#include <polechart/partitions.hpp>

using namespace polechart;

TEST(Partitions, ConjugateExamples) {
  EXPECT_EQ(conjugate({4, 2, 2, 2, 1, 1}), (Partition{6, 4, 1, 1}));
  EXPECT_EQ(conjugate({3, 2}), (Partition{2, 2, 1}));
  EXPECT_EQ(conjugate({}), Partition{});
}

TEST(Partitions, CountsOfSmallN) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}

TEST(Partitions, ConjugateIsInvolutionAndPreservesTotal) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(a)), a);
      EXPECT_EQ(total(conjugate(a)), n);
      EXPECT_TRUE(is_partition(conjugate(a)));
    }
}

TEST(Partitions, ConjugateOfSumIsUnionOfConjugates) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      for (const auto& a : partitions_of(n))
        for (const auto& b : partitions_of(m))
          EXPECT_EQ(conjugate(partition_sum(a, b)), partition_union(conjugate(a), conjugate(b)));
}

TEST(Partitions, MajorizationReversesUnderConjugation) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        EXPECT_EQ(majorized(a, b), majorized(conjugate(b), conjugate(a)));
}

TEST(Partitions, MajorizationExamples) {
  EXPECT_TRUE(majorized({3, 2}, {4, 1}));
  EXPECT_TRUE(majorized({2, 1, 1, 1}, {2, 2, 1}));
  EXPECT_FALSE(majorized({4, 1}, {3, 2}));
  EXPECT_EQ(majorization_violation({5}, {3, 2}), std::optional<std::size_t>(1));
  EXPECT_EQ(majorization_violation({2, 2}, {2, 1}), std::optional<std::size_t>(2));
  EXPECT_EQ(majorization_violation({1}, {1, 1}), std::optional<std::size_t>(2));
  EXPECT_TRUE(majorized({1, 1, 0}, {2}));
}

TEST(Partitions, NormalizeSortsAndDropsZeros) {
  EXPECT_EQ(normalize({0, 1, 3, 0, 2}), (Partition{3, 2, 1}));
  EXPECT_THROW(normalize({1, -1}), std::invalid_argument);
  EXPECT_FALSE(is_partition({1, 2}));
  EXPECT_FALSE(is_partition({2, 0}));
}
