#include "butson/bh_matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "butson/errors.hpp"
#include "butson/matrix_io.hpp"
#include "oracles.hpp"

using namespace butson;
using butson::testing::float_gram_valid;
using butson::testing::permute;
using butson::testing::random_matrix;

namespace {

std::vector<std::int32_t> table(const BhMatrix& m) { return {m.exponents().begin(), m.exponents().end()}; }

}  // namespace

TEST(BhMatrix, NormalizesExponents) {
  const std::vector<std::int64_t> raw{5, -1, -7, 3};
  BhMatrix m(2, 3, raw);
  EXPECT_EQ(table(m), (std::vector<std::int32_t>{2, 2, 2, 0}));
  EXPECT_THROW(BhMatrix(2, 3, std::vector<std::int64_t>{0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(BhMatrix(0, 3, std::vector<std::int64_t>{}), UnsupportedOrder);
  EXPECT_THROW(BhMatrix(1, kMaxRootOrder + 1, std::vector<std::int64_t>{0}), UnsupportedOrder);
}

TEST(Fourier, Tables) {
  EXPECT_EQ(table(fourier(1)), (std::vector<std::int32_t>{0}));
  EXPECT_EQ(table(fourier(2)), (std::vector<std::int32_t>{0, 0, 0, 1}));
  EXPECT_EQ(table(fourier(3)), (std::vector<std::int32_t>{0, 0, 0, 0, 1, 2, 0, 2, 1}));
  EXPECT_EQ(fourier(3).root_order(), 3);
}

TEST(Fourier, ValidForAllSmallOrders) {
  for (int m = 1; m <= 16; ++m) {
    EXPECT_TRUE(verify(fourier(m)).valid()) << "m=" << m;
    EXPECT_TRUE(float_gram_valid(fourier(m))) << "m=" << m;
  }
}

TEST(Kronecker, TwoByTwoSquared) {
  const BhMatrix k4 = kronecker(fourier(2), fourier(2));
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.root_order(), 2);
  // Expanded by hand from the block definition.
  EXPECT_EQ(table(k4), (std::vector<std::int32_t>{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0}));
}

TEST(Kronecker, TrivialFactor) {
  const BhMatrix one(1, 1, std::vector<std::int64_t>{0});
  const BhMatrix f5 = fourier(5);
  EXPECT_EQ(kronecker(f5, one), f5);
  EXPECT_EQ(kronecker(one, f5), f5);
}

TEST(Kronecker, MixedRootOrders) {
  const BhMatrix k6 = kronecker(fourier(2), fourier(3));
  EXPECT_EQ(k6.order(), 6);
  EXPECT_EQ(k6.root_order(), 6);
  EXPECT_TRUE(verify(k6).valid());
  EXPECT_TRUE(float_gram_valid(k6));
  // Block (1,1), sub-position (1,2): 1 * 3 + 2 * 2 = 7 = 1 (mod 6).
  EXPECT_EQ(k6.at(4, 5), 1);
}

TEST(Kronecker, ClosedOnValidPairs) {
  const std::vector<BhMatrix> fs{fourier(2), fourier(3), fourier(4), fourier(5)};
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      EXPECT_TRUE(verify(kronecker(a, b)).valid()) << a.order() << "x" << b.order();
    }
  }
}

TEST(Kronecker, Envelope) {
  EXPECT_THROW(kronecker(fourier(200), fourier(100)), UnsupportedOrder);
  const BhMatrix big_root(1, 9973, std::vector<std::int64_t>{0});
  EXPECT_THROW(kronecker(big_root, fourier(2)), UnsupportedOrder);
}

TEST(GramEntry, Examples) {
  const BhMatrix f5 = fourier(5);
  for (int i = 0; i < 5; ++i) {
    const auto g = gram_entry(f5, i, i);
    EXPECT_EQ(g.count(0), 5);
  }
  const auto g01 = gram_entry(fourier(2), 0, 1);
  EXPECT_EQ(g01.count(0), 1);
  EXPECT_EQ(g01.count(1), 1);
  EXPECT_TRUE(g01.is_zero());
  const auto g12 = gram_entry(fourier(3), 1, 2);
  EXPECT_EQ(g12.count(0), 1);
  EXPECT_EQ(g12.count(1), 1);
  EXPECT_EQ(g12.count(2), 1);
  EXPECT_TRUE(g12.is_zero());
}

TEST(GramEntry, ConjugateSymmetric) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    const int n = 1 + it % 7;
    const int k = 1 + it % 13;
    const BhMatrix a = random_matrix(rng, n, k);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_TRUE(gram_entry(a, i, j).same_counts(gram_entry(a, j, i).conj()));
      }
    }
  }
}

TEST(Verify, AllOnesWitness) {
  const BhMatrix ones(2, 2, std::vector<std::int64_t>{0, 0, 0, 0});
  const VerifyReport report = verify(ones);
  ASSERT_FALSE(report.valid());
  EXPECT_EQ(report.witness->row_i, 0);
  EXPECT_EQ(report.witness->row_j, 1);
  EXPECT_EQ(report.witness->residue.count(0), 2);
  EXPECT_EQ(report.witness->residue.count(1), 0);
}

TEST(Verify, WitnessIsLexicographicallyFirst) {
  // Rows 0..3 of F_4 with row 3 overwritten by a copy of row 2.
  std::vector<std::int64_t> exps{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 2, 0, 2};
  const VerifyReport report = verify(BhMatrix(4, 4, exps));
  ASSERT_FALSE(report.valid());
  EXPECT_EQ(report.witness->row_i, 2);
  EXPECT_EQ(report.witness->row_j, 3);
}

TEST(Verify, AgreesWithFloatOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + it % 4;
    const int k = 1 + it % 6;
    const BhMatrix a = random_matrix(rng, n, k);
    EXPECT_EQ(verify(a).valid(), float_gram_valid(a)) << write_matrix(a);
  }
}

TEST(Verify, PermutationsPreserveValidity) {
  std::mt19937_64 rng(3);
  const BhMatrix base = kronecker(fourier(3), fourier(4));
  std::vector<int> rows(12);
  std::vector<int> cols(12);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  for (int it = 0; it < 20; ++it) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    EXPECT_TRUE(verify(permute(base, rows, cols)).valid());
  }
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

TEST(MatrixIo, ReadsFourier) { EXPECT_EQ(read_matrix("BH 2 2\n0 0\n0 1\n"), fourier(2)); }

TEST(MatrixIo, WriteIsCanonical) {
  EXPECT_EQ(write_matrix(fourier(2)), "BH 2 2\n0 0\n0 1\n");
  const std::string canonical = "BH 3 3\n0 0 0\n0 1 2\n0 2 1\n";
  EXPECT_EQ(write_matrix(read_matrix(canonical)), canonical);
}

TEST(MatrixIo, NormalizesOnRead) {
  const BhMatrix m = read_matrix("BH 2 2\n0 0\n0 3\n");
  EXPECT_EQ(m.at(1, 1), 1);
  EXPECT_EQ(read_matrix("BH 2 2\n0 -4\n+2 -1\n"), fourier(2));
}

TEST(MatrixIo, CommentsAndBlankLines) {
  EXPECT_EQ(read_matrix("# generated\nBH 2 2\n# row 0\n0 0\n\n0 1\n# end\n"), fourier(2));
  EXPECT_EQ(read_matrix("BH 2 2\n0 0\n0 1"), fourier(2));
}

TEST(MatrixIo, RoundTripsGeneratedMatrices) {
  std::mt19937_64 rng(8);
  std::vector<BhMatrix> ms{fourier(1), fourier(7), kronecker(fourier(2), fourier(6))};
  for (int it = 0; it < 10; ++it) ms.push_back(random_matrix(rng, 1 + it, 1 + 3 * it));
  for (const auto& m : ms) {
    const std::string text = write_matrix(m);
    EXPECT_EQ(read_matrix(text), m);
    EXPECT_EQ(write_matrix(read_matrix(text)), text);
  }
}

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    read_matrix(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

}  // namespace

TEST(MatrixIo, Errors) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("HB 2 2\n0 0\n0 1\n"), 1u);
  EXPECT_EQ(parse_error_line("BH 2\n0 0\n0 1\n"), 1u);
  EXPECT_EQ(parse_error_line("BH 2 x\n0 0\n0 1\n"), 1u);
  EXPECT_EQ(parse_error_line("BH 0 2\n"), 1u);
  EXPECT_EQ(parse_error_line("BH 2 0\n0 0\n0 1\n"), 1u);
  EXPECT_EQ(parse_error_line("# c\nBH 2 2\n0 0\n0 1 1\n"), 4u);
  EXPECT_EQ(parse_error_line("BH 2 2\n0 0\n0 1.5\n"), 3u);
  EXPECT_EQ(parse_error_line("BH 2 2\n0 0\n"), 3u);
  EXPECT_EQ(parse_error_line("BH 2 2\n0 0\n0 1\n1 1\n"), 4u);
  EXPECT_EQ(parse_error_line("BH 2 2\n0 0\n0 99999999999999999999\n"), 3u);
}
