#include <doctest.h>

#include "combstat/closed.hpp"
#include "combstat/gfcat.hpp"

using namespace combstat;

TEST_CASE("catalog lookup") {
  CHECK(all_gf_families().size() == 9);
  CHECK(parse_gf_family("U") == GfFamily::U);
  CHECK_THROWS(parse_gf_family("Q"));
  CHECK(gf_info(GfFamily::I).egf);
  CHECK(gf_info(GfFamily::A).objects == Family::Schroeder);
  CHECK(available_paths(GfFamily::D).size() == 3);
  CHECK(parse_path("fixed-point") == GfPath::FixedPoint);
}

TEST_CASE("expand I gives the increasing-tree counts") {
  Truncation t = default_truncation(GfFamily::I, 3);
  Series s = expand_counts(GfFamily::I, t);
  CHECK(s.coeff(3, 0).coeffs() == std::vector<Rational>{0, 2, 3, 1});
  Series raw = expand(GfFamily::I, t);
  CHECK(raw.coeff(3, 0).coeffs() == std::vector<Rational>{0, Rational(1, 3), Rational(1, 2), Rational(1, 6)});
}

TEST_CASE("distribution_from_gf") {
  DistributionTable u = distribution_from_gf(GfFamily::U, 3);
  auto col = u.column(2);
  CHECK(col.size() == 2);
  CHECK(col.at(1) == 2);
  CHECK(col.at(2) == 3);
  DistributionTable g = distribution_from_gf(GfFamily::G, 2);
  auto gc = g.column(1);
  CHECK(gc.at(1) == 2);
  CHECK(gc.at(2) == 1);
  DistributionTable p = distribution_from_gf(GfFamily::P, 3);
  CHECK(p.count(1, 1, 2) == 1);
  CHECK(p.count(1, 2, 2) == 2);
  CHECK(distribution_from_gf(GfFamily::D, 3).column(3) == std::map<int, BigInt>{{1, 4}, {3, 1}});
}

TEST_CASE("gf tables equal enumeration for small n") {
  for (const auto& info : all_gf_families()) {
    if (info.id == GfFamily::Babs) continue;
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(info.name);
      CAPTURE(n);
      DistributionTable e = distribution_table(info.objects, info.statistic, n);
      for (GfPath path : available_paths(info.id)) CHECK(distribution_from_gf(info.id, n, path) == e);
    }
  }
}

TEST_CASE("residuals vanish") {
  for (const auto& info : all_gf_families()) {
    CAPTURE(info.name);
    Truncation t = default_truncation(info.id, 8);
    CHECK(residual(info.id, t).is_zero());
  }
}

TEST_CASE("derivative_at_y1") {
  Truncation tb = default_truncation(GfFamily::B, 3);
  CHECK(derivative_at_y1(GfFamily::B, tb).get({3, 0, 0, 0, 0}) == Rational(9));
  Truncation td = default_truncation(GfFamily::D, 3);
  CHECK(derivative_at_y1(GfFamily::D, td).get({3, 1, 0, 0, 0}) == Rational(5));

  // [z^5] dB(1, z) / (6 c_5) = 4^5 / binom(10,5) - 1
  Truncation t5 = default_truncation(GfFamily::B, 5);
  Series d = derivative_at_y1(GfFamily::B, t5);
  Rational sum;
  for (int r = 0; r <= 5; ++r) sum += d.get({5, r, 0, 0, 0});
  CHECK(sum / Rational(6 * 42) == Rational(193, 63));

  for (const auto& info : all_gf_families()) {
    auto res = derivative_identity_residual(info.id, default_truncation(info.id, 6));
    if (res) CHECK(res->is_zero());
  }
}

TEST_CASE("abscissa average") {
  AbscissaCheck a = abscissa_check(8);
  CHECK(a.passed);
  CHECK(a.closed_form_agrees);
}

TEST_CASE("truncation budget") {
  CHECK_THROWS_AS(check_truncation_budget({1000, 1000, 100, 0, 0}), BudgetError);
  CHECK_NOTHROW(check_truncation_budget({10, 10, 10, 0, 0}));
}

TEST_CASE("series_json") {
  Series s = expand(GfFamily::B, default_truncation(GfFamily::B, 1));
  std::string j = series_json(s, "x,y,z");
  CHECK(j.find("\"entries\"") != std::string::npos);
  CHECK(j.find("\"field\"") != std::string::npos);
}
