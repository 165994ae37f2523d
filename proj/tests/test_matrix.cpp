#include <doctest.h>

#include "dilatekit/matrix.hpp"
#include "test_support.hpp"

using namespace dilatekit;
using dilatekit::testing::naive_multiply;

namespace {
const Complex I1{0.0, 1.0};
}

TEST_CASE("adjoint conjugates and transposes") {
  CHECK(adjoint(ComplexMatrix::from_rows({{I1}})) == ComplexMatrix::from_rows({{-I1}}));
  CHECK(adjoint(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}})) ==
        ComplexMatrix::from_rows({{1.0, 3.0}, {2.0, 4.0}}));
  CHECK(adjoint(ComplexMatrix::from_rows({{1.0 + I1, 0.0}, {2.0, 3.0 - I1}})) ==
        ComplexMatrix::from_rows({{1.0 - I1, 2.0}, {0.0, 3.0 + I1}}));

  const ComplexMatrix wide(2, 5);
  CHECK(adjoint(wide).rows() == 5);
  CHECK(adjoint(wide).cols() == 2);
}

TEST_CASE("adjoint is an involution bit-exactly") {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::random_matrix(rng.between(1, 9), rng.between(1, 9), rng);
    REQUIRE(adjoint(adjoint(m)) == m);
  }
}

TEST_CASE("multiply examples") {
  const auto m = ComplexMatrix::from_rows({{1.0 + I1, 2.0}, {-3.0, 0.5 * I1}});
  CHECK(ComplexMatrix::identity(2) * m == m);

  const auto nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK(nil * nil == ComplexMatrix(2, 2));
}

TEST_CASE("multiply rejects mismatched shapes naming both") {
  try {
    (void)multiply(ComplexMatrix(2, 3), ComplexMatrix(2, 3));
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    const std::string what = e.what();
    CHECK(what.find("2x3") != std::string::npos);
    CHECK(what.find("by 2x3") != std::string::npos);
  }
}

TEST_CASE("multiply agrees with the triple-loop oracle") {
  Xoshiro256 rng(3);
  {
    const auto a = testing::random_matrix(3, 2, rng);
    const auto b = testing::random_matrix(2, 4, rng);
    const auto expected = naive_multiply(a, b);
    const auto got = multiply(a, b);
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::abs(got.entries()[k] - expected.entries()[k]) <=
            1e-13 * std::abs(expected.entries()[k]) + 1e-15);
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng.between(1, 16), inner = rng.between(1, 16), c = rng.between(1, 16);
    const auto a = testing::random_matrix(r, inner, rng);
    const auto b = testing::random_matrix(inner, c, rng);
    const auto expected = naive_multiply(a, b);
    const double scale = testing::naive_frobenius(a) * testing::naive_frobenius(b);
    REQUIRE(testing::distance(multiply(a, b), expected) <= 1e-13 * scale);
  }
}

TEST_CASE("block assembly and extraction") {
  const ComplexMatrix one = ComplexMatrix::identity(1);
  CHECK(assemble_blocks(one, ComplexMatrix(1, 1), ComplexMatrix(1, 1), one) ==
        ComplexMatrix::identity(2));

  const Blocks b = extract_blocks(ComplexMatrix::identity(4), 2, 2);
  CHECK(b.tl == ComplexMatrix::identity(2));
  CHECK(b.tr == ComplexMatrix(2, 2));
  CHECK(b.bl == ComplexMatrix(2, 2));
  CHECK(b.br == ComplexMatrix::identity(2));

  CHECK_THROWS_AS(assemble_blocks(one, ComplexMatrix(2, 1), one, one), DimensionError);
  CHECK_THROWS_AS(assemble_blocks(one, one, ComplexMatrix(1, 2), one), DimensionError);
  CHECK_THROWS_AS(extract_blocks(ComplexMatrix::identity(3), 0, 1), DimensionError);
  CHECK_THROWS_AS(extract_blocks(ComplexMatrix::identity(3), 1, 3), DimensionError);
}

TEST_CASE("assemble then extract is a bit-identical round trip") {
  Xoshiro256 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t top = rng.between(1, 6), bottom = rng.between(1, 6);
    const std::size_t left = rng.between(1, 6), right = rng.between(1, 6);
    const auto tl = testing::random_matrix(top, left, rng);
    const auto tr = testing::random_matrix(top, right, rng);
    const auto bl = testing::random_matrix(bottom, left, rng);
    const auto br = testing::random_matrix(bottom, right, rng);
    const Blocks b = extract_blocks(assemble_blocks(tl, tr, bl, br), top, left);
    REQUIRE(b.tl == tl);
    REQUIRE(b.tr == tr);
    REQUIRE(b.bl == bl);
    REQUIRE(b.br == br);
  }
}

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), std::invalid_argument);
}

TEST_CASE("frobenius norm matches the oracle and survives tiny scales") {
  Xoshiro256 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testing::random_matrix(rng.between(1, 10), rng.between(1, 10), rng);
    CHECK(frobenius_norm(m) == doctest::Approx(testing::naive_frobenius(m)).epsilon(1e-14));
  }
  ComplexMatrix tiny(1, 2);
  tiny(0, 0) = 3e-200;
  tiny(0, 1) = Complex(0.0, 4e-200);
  CHECK(frobenius_norm(tiny) == doctest::Approx(5e-200).epsilon(1e-14));
}
