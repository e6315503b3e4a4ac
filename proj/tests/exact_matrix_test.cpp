#include "densepm/exact_matrix.hpp"

#include <gtest/gtest.h>

#include "densepm/errors.hpp"

namespace densepm {
namespace {

TEST(ExactMatrix, EmptyIsNormalized) {
  EXPECT_TRUE(ExactMatrix(0, 3).empty());
  EXPECT_EQ(ExactMatrix(0, 3), ExactMatrix());
  EXPECT_TRUE(ExactMatrix().symmetric());
}

TEST(ExactMatrix, ProductAndTranspose) {
  const ExactMatrix l{{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  EXPECT_EQ(l * l.transpose(), (ExactMatrix{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}}));
  EXPECT_THROW(ExactMatrix(2, 3) * ExactMatrix(2, 3), InputError);
}

TEST(ExactMatrix, RaggedRowsRejected) {
  EXPECT_THROW(ExactMatrix::from_rows({{1, 2}, {3}}), InputError);
}

TEST(SchurProduct, Examples) {
  const ExactMatrix b{{1, 1}, {1, 3}};
  EXPECT_EQ(schur_product(b, b), (ExactMatrix{{1, 1}, {1, 9}}));
  const ExactMatrix m{{4, -2, 7}, {0, 5, 1}};
  EXPECT_EQ(schur_product(m, ExactMatrix::filled(2, 3, 1)), m);
  EXPECT_EQ(schur_product(ExactMatrix{{2}}, ExactMatrix{{3}}), ExactMatrix{{6}});
  EXPECT_THROW(schur_product(ExactMatrix(2, 2), ExactMatrix(2, 3)), InputError);
}

TEST(ExactMatrix, BlockAndPermutation) {
  const ExactMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(m.block(1, 0, 2, 2), (ExactMatrix{{4, 5}, {7, 8}}));
  const std::vector<std::size_t> order{0, 2, 1};
  EXPECT_EQ(m.permuted(order, order), (ExactMatrix{{1, 3, 2}, {7, 9, 8}, {4, 6, 5}}));
  EXPECT_THROW(m.block(2, 2, 2, 1), InputError);
}

TEST(Formatting, RowsNestedAndVector) {
  const ExactMatrix m{{1, 1}, {1, 9}};
  EXPECT_EQ(format_rows(m), "1 1\n1 9\n");
  EXPECT_EQ(format_nested(m), "[[1,1],[1,9]]");
  EXPECT_EQ(format_nested(ExactMatrix()), "[]");
  EXPECT_EQ(format_vector({BigInt(6), BigInt(13), BigInt(44)}), "6 13 44");
  EXPECT_EQ(to_decimal(pow2(70)), "1180591620717411303424");
}

}  // namespace
}  // namespace densepm
