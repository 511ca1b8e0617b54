#include <doctest.h>

#include <cmath>
#include <numbers>

#include "combstat/closed.hpp"

using namespace combstat;

TEST_CASE("sequence_value") {
  CHECK(sequence_value(SequenceId::Catalan, 3) == Rational(5));
  CHECK(sequence_value(SequenceId::Narayana, 3, 2) == Rational(3));
  CHECK(sequence_value(SequenceId::NoncrossingTPrime, 2) == Rational(7));
  CHECK(sequence_value(SequenceId::Harmonic, 3) == Rational(11, 6));
  CHECK(sequence_value(SequenceId::LittleSchroeder, 3) == Rational(11));
  CHECK(sequence_value(SequenceId::NoncrossingT, 3) == Rational(12));
  CHECK_THROWS(sequence_value(SequenceId::Catalan, -1));
  CHECK(parse_sequence("catalan") == SequenceId::Catalan);
  CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("exact_average") {
  CHECK(exact_average(AvgFormulaId::BinaryLeaf, 20, 0) == Rational(30, 11));
  CHECK(exact_average(AvgFormulaId::DyckVertex, 3, 3) == Rational(7, 5));
  CHECK(exact_average(AvgFormulaId::DyckUpstep, 20, 1) == Rational(1));
  CHECK(exact_average(AvgFormulaId::DyckUpstep, 20, 2) == Rational(45, 26));
  CHECK(exact_average(AvgFormulaId::SchroederLeaf, 2, 0) == Rational(4, 3));
  CHECK(exact_average(AvgFormulaId::NoncrossingNode, 2, 1) == Rational(4, 3));
  CHECK(exact_average(AvgFormulaId::IncreasingLeaf, 3, 0) == Rational(11, 6));
  CHECK(exact_average(AvgFormulaId::BinaryAbscissa, 3, 0) == Rational(-9, 5));
  CHECK(exact_average(AvgFormulaId::IncreasingInternal, 1, 0) == Rational(0));
  CHECK_THROWS(exact_average(AvgFormulaId::BinaryLeaf, 3, 4));
  CHECK_THROWS(exact_average(AvgFormulaId::DyckUpstep, 3, 0));
}

TEST_CASE("binary leaf averages are symmetric in r") {
  for (long n = 1; n <= 15; ++n)
    for (long r = 0; r <= n; ++r)
      CHECK(exact_average(AvgFormulaId::BinaryLeaf, n, r) == exact_average(AvgFormulaId::BinaryLeaf, n, n - r));
}

TEST_CASE("fixed_r_limit_average") {
  CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::BinaryLeaf, 2), Rational(13, 2)));
  CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::DyckUpstep, 4), Rational(187, 64)));
  CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::DyckDownstep, 2), Rational(4)));
  CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::SchroederLeaf, 2), Quad2(-5, 7)));
  CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::NoncrossingNode, 2), Rational(28, 9)));
  CHECK_THROWS(fixed_r_limit_average(AvgFormulaId::IncreasingLeaf, 1));
  CHECK_THROWS(fixed_r_limit_average(AvgFormulaId::IncreasingInternal, 1));
  for (long r = 0; r <= 7; ++r)
    CHECK(exact_equal(fixed_r_limit_average(AvgFormulaId::SchroederLeaf, r), schroeder_fixed_r_closed(r)));
}

TEST_CASE("table2 rows") {
  auto rows = table2();
  REQUIRE(rows.size() == 6);
  std::vector<Rational> binary{3, 5, Rational(13, 2), Rational(31, 4), Rational(283, 32), Rational(629, 64),
                               Rational(2747, 256), Rational(5923, 512)};
  REQUIRE(rows[0].values.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(exact_equal(rows[0].values[i], binary[i]));
  CHECK(to_string(rows[1].values[0]) == "1+1*rt2");
  CHECK(to_string(rows[1].values[3]) == "-113+84*rt2");
  CHECK(to_string(rows[1].values[7]) == "-38214497+27021736*rt2");
  CHECK(to_string(rows[2].values[1]) == "2");
  CHECK(to_string(rows[2].values[7]) == "823239002/129140163");
  CHECK(rows[4].first_r == 1);
  CHECK(rows[5].first_r == 1);
}

TEST_CASE("down-step r+1 minus up-step r tends to 3") {
  for (long r = 1; r <= 12; ++r) {
    Quad2 up = as_quad(fixed_r_limit_average(AvgFormulaId::DyckUpstep, r));
    Quad2 down = as_quad(fixed_r_limit_average(AvgFormulaId::DyckDownstep, r + 1));
    CHECK(down - up == Quad2(3));
  }
}

TEST_CASE("growing_r_average") {
  const double n = 1e8;
  CHECK(growing_r_average(AvgFormulaId::BinaryLeaf, static_cast<long>(n), static_cast<long>(n / 2)) ==
        doctest::Approx(4 / std::sqrt(std::numbers::pi) * std::sqrt(n)).epsilon(1e-9));
  CHECK(growing_r_average(AvgFormulaId::DyckVertex, static_cast<long>(n), static_cast<long>(n)) ==
        doctest::Approx(2 / std::sqrt(std::numbers::pi) * std::sqrt(n)).epsilon(1e-9));
}

TEST_CASE("uniform_statistic_average") {
  CHECK(uniform_statistic_average(UniformId::DyckUpstep, 1) == Rational(1));
  CHECK(uniform_statistic_average(UniformId::BinaryLeaf, 1) == Rational(1));
}

TEST_CASE("coefficient identities") {
  for (long n = 1; n <= 12; ++n) {
    for (long r = 0; r <= n; ++r) {
      CHECK(coef_dB(n, r) == coef_dB_sum(n, r));
      CHECK(coef_dD(n, 2 * r) == coef_dD_sum(n, 2 * r));
    }
    for (long r = 1; r <= n; ++r) CHECK(coef_dU(n, r) == coef_dU_sum(n, r));
    auto [a, b] = schroeder_convolution(n);
    CHECK(a == b);
    auto [c, d] = noncrossing_convolution(n);
    CHECK(c == d);
  }
}
