#include "combstat/gfcat.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>

#include "combstat/closed.hpp"

namespace combstat {

namespace {

// Variables and the auxiliary series, all on one truncation.
struct Ring {
  Truncation t;
  Series one, z, x, y, v, u;

  explicit Ring(const Truncation& tr)
      : t(tr),
        one(Series::constant(tr, 1)),
        z(Series::variable(tr, Var::Z)),
        x(Series::variable(tr, Var::X)),
        y(Series::variable(tr, Var::Y)),
        v(Series::variable(tr, Var::V)),
        u(Series::variable(tr, Var::U)) {}

  Series lift(const Uni& s, Exponents mono = {1, 0, 0, 0, 0}) const { return s.subst_scale(t, mono); }
  Series C() const { return lift(catalan_series(t.nz)); }
  Series C_xz() const { return lift(catalan_series(t.nz), {1, 1, 0, 0, 0}); }
  Series C_x2z() const { return lift(catalan_series(t.nz), {1, 2, 0, 0, 0}); }
  Series T() const { return lift(noncrossing_series(t.nz)); }
  Series T_xz() const { return lift(noncrossing_series(t.nz), {1, 1, 0, 0, 0}); }
  Series St() const { return lift(schroeder_tilde_series(t.nz)); }
  Series St_xz() const { return lift(schroeder_tilde_series(t.nz), {1, 1, 0, 0, 0}); }
  Series u_inv() const { return Series::monomial(t, {0, 0, 0, -1, 0}); }
  // F(z) = 1/(1-z) and F(xz)
  Series F() const { return inv(one - z); }
  Series F_xz() const { return inv(one - x * z); }
  // -log((1-z)(1-xz))
  Series L() const { return -log((one - z) * (one - x * z)); }

  Series N() const { return narayana_series(t); }
  Series N_vx() const {
    SubstitutionMap<Rational> m;
    m.v = {{0, 1, 1, 0, 0}};
    return substitute(N(), m);
  }
  // 1 / ((1 - z N(vx,z)) (1 - z N(v,z)))
  Series plane_sides() const { return inv((one - z * N_vx()) * (one - z * N())); }
  // 1 / ((1 - S~(z)) (1 - S~(xz)))
  Series schroeder_sides() const { return inv((one - St()) * (one - St_xz())); }
};

Series fixed_point(const Truncation& t, Series start, const std::function<Series(const Series&)>& step,
                   const char* what) {
  Series cur = std::move(start);
  for (int it = 0; it <= t.nz + 2; ++it) {
    Series next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw SeriesError(std::string("fixed point did not stabilise: ") + what);
}

// z * (lhs - rhs) + (f(z=0) - init): the initial-condition defect sits alone in z^0.
Series ode_residual(const Ring& R, const Series& f, const Series& rhs, const Rational& init) {
  Series r = R.z * (derivative_z(f) - rhs);
  Series at0(R.t);
  f.for_each_nonzero([&](const Exponents& e, const Rational& c) {
    if (e.z == 0) at0.set(e, c);
  });
  at0 = at0 - init;
  return r + at0;
}

Series closed_form(GfFamily f, const Ring& R) {
  const Series& one = R.one;
  const Series &z = R.z, &x = R.x, &y = R.y, &v = R.v;
  switch (f) {
    case GfFamily::B: return inv(one - y * z * R.C() - x * y * z * R.C_xz());
    case GfFamily::Babs: return inv(one - y * z * R.u_inv() * R.C() - R.u * x * y * z * R.C_xz());
    case GfFamily::D: return R.C() / (one - x * y * z * R.C() - x * x * z * R.C_x2z());
    case GfFamily::U: {
      Series c = R.C();
      return x * y * z * c * c / (one - x * z * (y * c + R.C_xz()));
    }
    case GfFamily::P: {
      SubstitutionMap<Rational> m;
      m.v = {{0, 1, 1, 0, 0}};
      Series n = R.N();
      Series nvx = substitute(n, m);
      return v / (one - y * z * (nvx - x * v + one) * (n - v + one));
    }
    case GfFamily::A: return inv(one + y - y * R.schroeder_sides());
    case GfFamily::G: {
      Series t = R.T(), tx = R.T_xz();
      return (t + y * (one - t) * tx) / (one - y * z * t * tx * (t + x * tx));
    }
    case GfFamily::I: return exp(y * R.L());
    case GfFamily::J: return exp(y * R.L()) * integrate_z(exp((one - y) * R.L()));
  }
  throw std::invalid_argument("unknown generating function");
}

Series alt_closed_form(GfFamily f, const Ring& R) {
  const Series &one = R.one, &z = R.z, &x = R.x, &y = R.y;
  switch (f) {
    case GfFamily::D: {
      Series cc = R.C() * R.C_x2z();
      return cc / (one - x * y * z * cc);
    }
    case GfFamily::U: {
      Series c = R.C(), cx = R.C_xz();
      return x * y * z * c * c * cx / (one - x * y * z * c * cx);
    }
    default: throw std::invalid_argument("no alternate closed form for " + std::string(gf_info(f).name));
  }
}

Series fixed_point_form(GfFamily f, const Ring& R) {
  const Series &one = R.one, &z = R.z, &x = R.x, &y = R.y, &v = R.v;
  const Truncation& t = R.t;
  switch (f) {
    case GfFamily::B: {
      Series a = y * z * R.C() + x * y * z * R.C_xz();
      return fixed_point(t, Series(t), [&](const Series& b) { return one + a * b; }, "B");
    }
    case GfFamily::D: {
      Series c = R.C();
      Series a = x * y * z * c + x * x * z * R.C_x2z();
      return fixed_point(t, Series(t), [&](const Series& d) { return c + a * d; }, "D");
    }
    case GfFamily::U: {
      Series c = R.C();
      Series base = x * y * z * c * c;
      Series a = x * y * z * c + x * z * R.C_xz();
      return fixed_point(t, Series(t), [&](const Series& w) { return base + a * w; }, "U");
    }
    case GfFamily::P: {
      Series a = y * z * R.plane_sides();
      return fixed_point(t, Series(t), [&](const Series& p) { return v + a * p; }, "P");
    }
    case GfFamily::A: {
      Series a = y * (R.schroeder_sides() - one);
      return fixed_point(t, Series(t), [&](const Series& w) { return one + a * w; }, "A");
    }
    case GfFamily::G: {
      Series tz = R.T(), tx = R.T_xz();
      Series outer = tx * tz;
      Series left = y * z * tz;
      Series right = x * y * z * tx;
      return fixed_point(
          t, Series(t), [&](const Series& g) { return tz + outer * (left * (g - tz) + right * g); }, "G");
    }
    case GfFamily::I: {
      Series a = y * R.F() + x * y * R.F_xz();
      return fixed_point(t, one, [&](const Series& w) { return one + integrate_z(a * w); }, "I");
    }
    default: throw std::invalid_argument("no fixed-point path for " + std::string(gf_info(f).name));
  }
}

Series scale_egf(Series s) {
  std::vector<Rational> fact;
  const int nz = s.truncation().nz;
  for (int n = 0; n <= nz; ++n) fact.emplace_back(factorial(n));
  auto& raw = s.raw();
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!raw[i].is_zero()) raw[i] *= fact[static_cast<std::size_t>(s.exponents(i).z)];
  return s;
}

}  // namespace

const std::vector<GfInfo>& all_gf_families() {
  static const std::vector<GfInfo> registry = {
      {GfFamily::B, "B", "x,y,z", Field::Q, false, Family::Binary, StatisticId::BinaryLeafDepth,
       "1/(1 - y z C(z) - x y z C(x z))"},
      {GfFamily::Babs, "Babs", "u,x,y,z", Field::Q, false, Family::Binary, StatisticId::BinaryLeafAbscissa,
       "1/(1 - (y z/u) C(z) - u x y z C(x z))"},
      {GfFamily::D, "D", "x,y,z", Field::Q, false, Family::Dyck, StatisticId::DyckVertexHeight,
       "C(z)/(1 - x y z C(z) - x^2 z C(x^2 z))"},
      {GfFamily::U, "U", "x,y,z", Field::Q, false, Family::Dyck, StatisticId::DyckUpstepHeight,
       "x y z C(z)^2 C(x z)/(1 - x y z C(z) C(x z))"},
      {GfFamily::P, "P", "v,x,y,z", Field::Q, false, Family::Plane, StatisticId::PlaneLeafDepth,
       "v/(1 - y z (N(v x, z) - v x + 1)(N(v, z) - v + 1))"},
      {GfFamily::A, "A", "x,y,z", Field::Q, false, Family::Schroeder, StatisticId::SchroederLeafDepth,
       "1/(1 + y - y/((1 - S~(z))(1 - S~(x z))))"},
      {GfFamily::G, "G", "x,y,z", Field::Q, false, Family::Noncrossing, StatisticId::NoncrossingNodeDepth,
       "(T(z) + y (1 - T(z)) T(x z))/(1 - y z T(z) T(x z)(T(z) + x T(x z)))"},
      {GfFamily::I, "I", "x,y,z", Field::Q, true, Family::Increasing, StatisticId::IncreasingLeafDepth,
       "((1 - z)(1 - x z))^(-y)"},
      {GfFamily::J, "J", "x,y,z", Field::Q, true, Family::Increasing, StatisticId::IncreasingInternalDepthInorder,
       "((1 - z)(1 - x z))^(-y) * int_0^z ((1 - t)(1 - x t))^(y - 1) dt"},
  };
  return registry;
}

const GfInfo& gf_info(GfFamily f) {
  for (const auto& g : all_gf_families())
    if (g.id == f) return g;
  throw std::invalid_argument("unknown generating function");
}

GfFamily parse_gf_family(std::string_view name) {
  for (const auto& g : all_gf_families())
    if (g.name == name) return g.id;
  throw std::invalid_argument("unknown generating function: " + std::string(name));
}

std::string_view path_name(GfPath p) {
  switch (p) {
    case GfPath::ClosedForm: return "closed";
    case GfPath::AltClosedForm: return "alt-closed";
    case GfPath::FixedPoint: return "fixed-point";
  }
  return "?";
}

GfPath parse_path(std::string_view name) {
  for (auto p : {GfPath::ClosedForm, GfPath::AltClosedForm, GfPath::FixedPoint})
    if (path_name(p) == name) return p;
  throw std::invalid_argument("unknown computation path: " + std::string(name));
}

std::vector<GfPath> available_paths(GfFamily f) {
  switch (f) {
    case GfFamily::Babs:
    case GfFamily::J: return {GfPath::ClosedForm};
    case GfFamily::D:
    case GfFamily::U: return {GfPath::ClosedForm, GfPath::AltClosedForm, GfPath::FixedPoint};
    default: return {GfPath::ClosedForm, GfPath::FixedPoint};
  }
}

Truncation default_truncation(GfFamily f, int n) {
  if (n < 0) throw std::out_of_range("size must be non-negative");
  Truncation t;
  t.nz = n;
  t.nx = f == GfFamily::D ? 2 * n : n;
  t.ny = n;
  if (f == GfFamily::P) t.nv = std::max(n, 1);
  if (f == GfFamily::Babs) t.u_range = n;
  return t;
}

void check_truncation_budget(const Truncation& t, std::size_t max_cells) {
  t.validate();
  if (t.cells() > max_cells)
    throw BudgetError("truncation " + t.str() + " needs " + std::to_string(t.cells()) + " cells, budget is " +
                      std::to_string(max_cells));
}

Series expand(GfFamily f, const Truncation& t, GfPath path) {
  check_truncation_budget(t);
  Ring R(t);
  switch (path) {
    case GfPath::ClosedForm: return closed_form(f, R);
    case GfPath::AltClosedForm: return alt_closed_form(f, R);
    case GfPath::FixedPoint: return fixed_point_form(f, R);
  }
  throw std::invalid_argument("unknown computation path");
}

Series expand_counts(GfFamily f, const Truncation& t, GfPath path) {
  Series s = expand(f, t, path);
  return gf_info(f).egf ? scale_egf(std::move(s)) : s;
}

Series residual(GfFamily f, const Truncation& t) {
  check_truncation_budget(t);
  Ring R(t);
  const Series &one = R.one, &z = R.z, &x = R.x, &y = R.y, &v = R.v;
  const Series s = closed_form(f, R);
  switch (f) {
    case GfFamily::B: return s - (one + y * z * s * R.C() + x * y * z * R.C_xz() * s);
    case GfFamily::Babs: return s - (one + y * z * R.u_inv() * s * R.C() + R.u * x * y * z * R.C_xz() * s);
    case GfFamily::D: return s - (R.C() + x * y * z * s * R.C() + x * x * z * R.C_x2z() * s);
    case GfFamily::U: {
      Series c = R.C();
      return s - (x * y * z * c * c + x * y * z * s * c + x * z * R.C_xz() * s);
    }
    case GfFamily::P: return s - (v + y * z * s * R.plane_sides());
    case GfFamily::A: return s - (one + y * s * (R.schroeder_sides() - one));
    case GfFamily::G: {
      Series tz = R.T(), tx = R.T_xz();
      return s - (tz + tx * tz * (y * z * (s - tz) * tz + x * y * z * tx * s));
    }
    case GfFamily::I: return ode_residual(R, s, y * s * R.F() + x * y * R.F_xz() * s, Rational(1));
    case GfFamily::J:
      return ode_residual(R, s, R.F_xz() * R.F() + y * s * R.F() + x * y * R.F_xz() * s, Rational(0));
  }
  throw std::invalid_argument("unknown generating function");
}

DistributionTable distribution_from_gf(GfFamily f, int n, GfPath path) {
  const GfInfo& info = gf_info(f);
  Truncation t = default_truncation(f, n);
  Series s = expand_counts(f, t, path);
  DistributionTable table;
  table.family = info.objects;
  table.statistic = info.statistic;
  table.n = n;
  table.stratified = f == GfFamily::P;
  s.for_each_nonzero([&](const Exponents& e, const Rational& c) {
    if (e.z != n) return;
    if (!c.is_integer()) throw MathError("non-integral coefficient in " + std::string(info.name));
    // Babs is tabulated by abscissa, summing over depths
    const int d = f == GfFamily::Babs ? e.u : e.y;
    const int k = table.stratified ? e.v : 0;
    table.counts[{k, e.x, d}] += c.num();
    table.totals[{k, e.x}] += c.num();
  });
  const int first = statistic_info(info.statistic).first_index;
  for (const auto& [key, tot] : table.totals)
    if (key.second == first) table.object_count += tot;
  return table;
}

Series derivative_at_y1(GfFamily f, const Truncation& t) { return dy_at_one(expand(f, t)); }

std::optional<Series> derivative_identity_residual(GfFamily f, const Truncation& t) {
  if (f == GfFamily::Babs || f == GfFamily::J) return std::nullopt;
  check_truncation_budget(t);
  Ring R(t);
  const Series s = closed_form(f, R);
  const Series d = dy_at_one(s);
  const Series s1 = at_y(s, Rational(1));
  Truncation t1 = t;
  t1.ny = 0;
  Ring R1(t1);
  const Series &one = R1.one, &z = R1.z, &x = R1.x;
  switch (f) {
    case GfFamily::B:
    case GfFamily::A: return d - s1 * (s1 - one);
    case GfFamily::D: return d - x * z * s1 * s1;
    case GfFamily::U: return d - s1 * (one + s1 / R1.C());
    case GfFamily::P: {
      Series prod = s1 * (s1 - R1.v);
      Series q = divide_monomial(prod, {0, 0, 1, 0, 0});
      return restrict_to(d, q.truncation()) - q;
    }
    case GfFamily::G: {
      Series tz = R1.T(), tx = R1.T_xz();
      Series w = (tz * tz - x * tx * tx) / (one - x);
      return d - x * z * w * w;
    }
    case GfFamily::I: {
      Series ff = R1.F() * R1.F_xz();
      return d - ff * R1.L();
    }
    default: return std::nullopt;
  }
}

AbscissaCheck abscissa_check(int max_n) {
  AbscissaCheck out;
  out.max_n = max_n;
  Truncation t{max_n, max_n, 0, 0, max_n};
  Ring R(t);
  // y is set to 1 before expanding: the abscissa average does not need depths
  Series b = inv(R.one - R.z * R.u_inv() * R.C() - R.u * R.x * R.z * R.C_xz());
  Series du = du_at_one(b);
  for (int n = 0; n <= max_n && out.passed; ++n) {
    const BigInt cn = catalan(n);
    for (int r = 0; r <= n; ++r) {
      Rational got = du.get({n, r, 0, 0, 0}) / Rational(cn);
      Rational want(BigInt(6 * r - 3 * n), BigInt(n + 2));
      if (got != want) {
        out.passed = false;
        out.counterexample = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": got " + got.str() +
                             ", expected " + want.str();
        break;
      }
    }
  }
  // (x(1-3z-xz)C(xz) - (1-z-3xz)C(z)) / (z(1-x)^2) + 1/(z(1-x)), computed one z-order higher
  Truncation th{max_n + 1, max_n, 0, 0, 0};
  Ring H(th);
  Series num = H.x * (H.one - H.z * Rational(3) - H.x * H.z) * H.C_xz() -
               (H.one - H.z - H.x * H.z * Rational(3)) * H.C() + (H.one - H.x);
  Series q = divide_monomial(num, {1, 0, 0, 0, 0});
  const Truncation tq = q.truncation();
  Ring Q(tq);
  q = q / ((Q.one - Q.x) * (Q.one - Q.x));
  Series ref = restrict_to(at_u_one(du), tq);
  out.closed_form_agrees = ref.truncation() == q.truncation() && (ref - q).is_zero();
  if (!out.closed_form_agrees) out.passed = false;
  return out;
}

namespace {

template <class S>
std::string dump(const BasicSeries<S>& s, std::string_view vars, int indent) {
  using nlohmann::json;
  const Truncation& t = s.truncation();
  json j;
  j["vars"] = std::string(vars);
  j["truncation"] = {{"nz", t.nz}, {"nx", t.nx}, {"ny", t.ny}, {"nv", t.nv}, {"u_range", t.u_range}};
  j["field"] = std::string(field_name(field_of<S>()));
  json entries = json::array();
  for (int z = 0; z <= t.nz; ++z)
    for (int x = 0; x <= t.nx; ++x)
      for (int v = 0; v <= t.nv; ++v)
        for (int u = -t.u_range; u <= t.u_range; ++u) {
          YPoly<S> p = s.coeff(z, x, v, u);
          if (p.is_zero()) continue;
          json e = {{"z", z}, {"x", x}};
          if (t.nv > 0) e["v"] = v;
          if (t.u_range > 0) e["u"] = u;
          json ys = json::array();
          for (const auto& c : p.coeffs()) ys.push_back(scalar_text(c));
          e["ypoly"] = std::move(ys);
          entries.push_back(std::move(e));
        }
  j["entries"] = std::move(entries);
  return j.dump(indent);
}

}  // namespace

std::string series_json(const Series& s, std::string_view vars, int indent) { return dump(s, vars, indent); }
std::string series_json(const SeriesQ2& s, std::string_view vars, int indent) { return dump(s, vars, indent); }

}  // namespace combstat
