#include <doctest.h>

#include "combstat/closed.hpp"
#include "combstat/series.hpp"

using namespace combstat;

namespace {

struct Vars {
  Truncation t;
  Series one, z, x, y;
  explicit Vars(Truncation tr, YMode m = YMode::Polynomial)
      : t(tr),
        one(Series::constant(tr, Rational(1), m)),
        z(Series::variable(tr, Var::Z, m)),
        x(Series::variable(tr, Var::X, m)),
        y(Series::variable(tr, Var::Y, m)) {}
};

}  // namespace

TEST_CASE("ps_mul") {
  Vars v({2, 0, 0, 0, 0});
  CHECK((v.one + v.z) * (v.one - v.z) == v.one - v.z * v.z);

  Vars w({6, 0, 0, 0, 0});
  Series c = catalan_series(6).subst_scale(w.t, {1, 0, 0, 0, 0});
  CHECK((c * c).get({3, 0, 0, 0, 0}) == Rational(14));
  CHECK((w.z * c * c + w.one - c).is_zero());
}

TEST_CASE("mismatched truncations are rejected") {
  Vars a({2, 0, 0, 0, 0}), b({3, 0, 0, 0, 0});
  CHECK_THROWS(a.z * b.z);
}

TEST_CASE("ps_inv") {
  Vars v({5, 0, 0, 0, 0});
  Series g = inv(v.one - v.z);
  for (int k = 0; k <= 5; ++k) CHECK(g.get({k, 0, 0, 0, 0}) == Rational(1));

  Vars b({3, 0, 3, 0, 0});
  Series c = catalan_series(3).subst_scale(b.t, {1, 0, 0, 0, 0});
  Series x0 = inv(b.one - b.y * b.z * c);
  CHECK(x0.coeff(3, 0).coeffs() == std::vector<Rational>{0, 2, 2, 1});

  Vars p({2, 0, 4, 0, 0});
  CHECK_THROWS_AS(inv(p.one * Rational(2) - p.y), SeriesError);
  Vars q({2, 0, 4, 0, 0}, YMode::Variable);
  Series unit = q.one * Rational(2) - q.y;
  CHECK(inv(unit) * unit == q.one);

  CHECK_THROWS_AS(inv(v.z), MathError);
}

TEST_CASE("ps_sqrt") {
  Vars v({3, 4, 0, 0, 0});
  Series s = sqrt(v.one - v.z * Rational(4));
  CHECK(s.get({2, 0, 0, 0, 0}) == Rational(-2));
  CHECK(s.get({3, 0, 0, 0, 0}) == Rational(-4));
  CHECK(sqrt(v.one) == v.one);
  Series r = sqrt(v.one - v.x * v.x);
  CHECK(r.get({0, 2, 0, 0, 0}) == Rational(-1, 2));
  CHECK(r.get({0, 4, 0, 0, 0}) == Rational(-1, 8));
  CHECK(r.get({0, 1, 0, 0, 0}) == Rational(0));
  CHECK_THROWS_AS(sqrt(v.one * Rational(4)), MathError);
}

TEST_CASE("ps_exp") {
  Vars v({3, 3, 3, 0, 0});
  CHECK(exp(Series(v.t)) == v.one);
  CHECK(exp(v.z) * exp(-v.z) == v.one);
  Series e = exp(v.z);
  CHECK(e.get({3, 0, 0, 0, 0}) == Rational(1, 6));
  CHECK(log(e) == v.z);
  Series ey = exp(v.y * v.z);
  CHECK(ey.coeff(2, 0).coeffs() == std::vector<Rational>{0, 0, Rational(1, 2)});
  CHECK_THROWS_AS(exp(v.one), MathError);
}

TEST_CASE("ps_integrate_z") {
  Vars v({4, 0, 0, 0, 0});
  CHECK(integrate_z(v.one) == v.z);
  Series geo = inv(v.one - v.z);
  Series in = integrate_z(geo);
  CHECK(in.get({0, 0, 0, 0, 0}) == Rational(0));
  for (int k = 1; k <= 4; ++k) CHECK(in.get({k, 0, 0, 0, 0}) == Rational(1, k));
  Series back = derivative_z(in);
  for (int k = 0; k < 4; ++k) CHECK(back.get({k, 0, 0, 0, 0}) == Rational(1));
  CHECK(back.get({4, 0, 0, 0, 0}) == Rational(0));
}

TEST_CASE("ps_subst_scale") {
  Truncation t{4, 4, 0, 0, 0};
  Uni c = catalan_series(4);
  CHECK(c.subst_scale(t, {1, 1, 0, 0, 0}).get({2, 2, 0, 0, 0}) == Rational(2));
  CHECK(c.subst_scale(t, {1, 2, 0, 0, 0}).get({2, 4, 0, 0, 0}) == Rational(2));
  Uni tt = noncrossing_series(4);
  CHECK(tt.subst_scale(t, {0, 1, 0, 0, 0}, Rational(4, 27)).get({0, 1, 0, 0, 0}) == Rational(4, 27));
  CHECK(c.subst_scale(t, {1, 2, 0, 0, 0}).nonzero_count() == 3);
}

TEST_CASE("solve_fixed_point") {
  Truncation t{5, 0, 0, 0, 0};
  Uni c = std::get<Uni>(solve_fixed_point(EquationId::Catalan, t));
  CHECK(c.coeffs() == std::vector<Rational>{1, 1, 2, 5, 14, 42});
  Uni s = schroeder_series(4);
  CHECK(s.coeffs() == std::vector<Rational>{1, 1, 3, 11, 45});
  Uni tt = std::get<Uni>(solve_fixed_point(EquationId::NoncrossingT, {4, 0, 0, 0, 0}));
  CHECK(tt.coeffs() == std::vector<Rational>{1, 1, 3, 12, 55});
  Series n = std::get<Series>(solve_fixed_point(EquationId::Narayana, {4, 0, 0, 4, 0}));
  CHECK(narayana_residual(n).is_zero());
  CHECK(n.get({3, 0, 2, 0, 0}) == Rational(3));
}

TEST_CASE("fixed points agree with the closed forms") {
  CHECK(catalan_series(25) == catalan_closed_form(25));
  CHECK(schroeder_series(25) == schroeder_closed_form(25));
  Truncation t{10, 0, 0, 10, 0};
  CHECK(narayana_series(t) == narayana_closed_form(t));
  Uni r = noncrossing_residual(noncrossing_series(20));
  for (const auto& q : r.coeffs()) CHECK(q.is_zero());
}

TEST_CASE("substitution, restriction and y-evaluation") {
  Vars v({3, 3, 3, 0, 0});
  Series f = (v.one + v.x * v.y) * (v.one + v.z);
  SubstitutionMap<Rational> m;
  m.x = MonomialImage<Rational>{{1, 0, 0, 0, 0}, Rational(2)};
  Series g = substitute(f, m);
  CHECK(g.get({1, 0, 0, 0, 1}) == Rational(2));
  CHECK(at_y(f, Rational(1)).get({1, 1, 0, 0, 0}) == Rational(1));
  CHECK(dy_at_one(f).get({0, 1, 0, 0, 0}) == Rational(1));
  Series small = restrict_to(f, {1, 1, 1, 0, 0});
  CHECK(small.truncation().nz == 1);
  CHECK(small.get({1, 1, 0, 0, 1}) == Rational(1));
}

TEST_CASE("monomial division and quotients") {
  Vars v({4, 4, 4, 0, 0}, YMode::Variable);
  Series a = v.y * v.y * (v.one + v.x);
  Exponents m = min_monomial(a);
  CHECK(m.y == 2);
  Series q = divide_monomial(a, m);
  CHECK(q.get({0, 1, 0, 0, 0}) == Rational(1));
  CHECK(quotient(a, v.y * v.y).get({0, 0, 0, 0, 0}) == Rational(1));
}

TEST_CASE("Truncation validates and renders") {
  Truncation bad{-1, 0, 0, 0, 0};
  CHECK_THROWS(bad.validate());
  Truncation t{2, 3, 4, 0, 0};
  CHECK(t.cells() == 3 * 4 * 5);
}
