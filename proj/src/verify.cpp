#include "combstat/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "combstat/closed.hpp"
#include "combstat/gfcat.hpp"
#include "combstat/limits.hpp"
#include "combstat/maps.hpp"
#include "combstat/series.hpp"

namespace combstat {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Warn: return "WARN";
    case CheckStatus::Fail: return "FAIL";
  }
  return "FAIL";
}

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

int VerifyReport::exit_code() const { return count(CheckStatus::Fail) > 0 ? 1 : 0; }

std::string VerifyReport::json(int indent) const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["check_id"] = c.check_id;
    e["family"] = c.family;
    e["n_or_r"] = c.n_or_r;
    e["status"] = status_name(c.status);
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    if (c.note) e["note"] = *c.note;
    list.push_back(std::move(e));
  }
  return list.dump(indent);
}

const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> s = {"exact",      "series", "objects", "bijections", "gf",
                                                  "identities", "closed", "limits",  "all"};
  return s;
}

const std::vector<std::string_view>& discrepancy_watch() {
  static const std::vector<std::string_view> w = {"limit-normalization/schroeder-leaf",
                                                  "limit-specialization (printed form off by a constant factor)"};
  return w;
}

const std::vector<FormulaSource>& formula_sources() {
  static const std::vector<FormulaSource> v = {
      {AvgFormulaId::BinaryLeaf, Family::Binary, StatisticId::BinaryLeafDepth},
      {AvgFormulaId::BinaryAbscissa, Family::Binary, StatisticId::BinaryLeafAbscissa},
      {AvgFormulaId::DyckVertex, Family::Dyck, StatisticId::DyckVertexHeight},
      {AvgFormulaId::DyckUpstep, Family::Dyck, StatisticId::DyckUpstepHeight},
      {AvgFormulaId::DyckDownstep, Family::Dyck, StatisticId::DyckDownstepHeight},
      {AvgFormulaId::SchroederLeaf, Family::Schroeder, StatisticId::SchroederLeafDepth},
      {AvgFormulaId::NoncrossingNode, Family::Noncrossing, StatisticId::NoncrossingNodeDepth},
      {AvgFormulaId::IncreasingLeaf, Family::Increasing, StatisticId::IncreasingLeafDepth},
      {AvgFormulaId::IncreasingInternal, Family::Increasing, StatisticId::IncreasingInternalDepthInorder},
  };
  return v;
}


namespace {

using Task = std::function<CheckResult()>;

struct Suite {
  std::vector<Task> tasks;
  int max_n;
  const VerifyOptions& opts;

  int cap(int family_limit) const { return max_n < 0 ? family_limit : std::min(max_n, family_limit); }

  // failure is empty on success.
  void add(std::string id, std::string family, std::string nr, std::function<std::optional<std::string>()> body) {
    tasks.push_back([id = std::move(id), family = std::move(family), nr = std::move(nr), body = std::move(body)] {
      CheckResult r{id, family, nr, CheckStatus::Pass, std::nullopt, std::nullopt};
      try {
        if (auto f = body()) {
          r.status = CheckStatus::Fail;
          r.counterexample = *f;
        }
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.counterexample = std::string("exception: ") + e.what();
      }
      return r;
    });
  }
  void add_full(Task t) { tasks.push_back(std::move(t)); }
};

std::string str(long v) { return std::to_string(v); }
std::string scalar_str(const Quad2& q) { return q.is_rational() ? q.a().str() : q.str(); }
std::string range(long lo, long hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

template <class A, class B>
std::optional<std::string> expect_eq(const A& got, const B& want, const std::string& what) {
  if (got == want) return std::nullopt;
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

Rational column_mean(const DistributionTable& t, int r, int k = 0) {
  Rational s;
  BigInt total = t.total(r, k);
  if (total == 0) throw MathError("empty column");
  for (const auto& [d, c] : t.column(r, k)) s += Rational(c) * Rational(d);
  return s / Rational(total);
}

std::optional<std::string> first_table_difference(const DistributionTable& a, const DistributionTable& b) {
  if (a == b) return std::nullopt;
  std::map<std::tuple<int, int, int>, std::pair<BigInt, BigInt>> diff;
  for (const auto& [key, c] : a.counts) diff[key].first = c;
  for (const auto& [key, c] : b.counts) diff[key].second = c;
  for (const auto& [key, p] : diff)
    if (p.first != p.second) {
      auto [k, r, d] = key;
      std::ostringstream os;
      os << "k=" << k << " r=" << r << " d=" << d << ": gf " << p.first << ", enumeration " << p.second;
      return os.str();
    }
  return std::string("totals differ");
}

// ---------------------------------------------------------------- exact

Rational random_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  return rat_normalize(BigInt(num(g)), BigInt(den(g)));
}

void exact_suite(Suite& s) {
  s.add("rational-canonical", "Q", "1000", []() -> std::optional<std::string> {
    std::mt19937_64 g(17);
    std::uniform_int_distribution<long> num(-100000, 100000), den(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
      long p = num(g), q = den(g);
      if (q == 0) continue;
      Rational r = rat_normalize(BigInt(p), BigInt(q));
      BigInt gg;
      mpz_gcd(gg.get_mpz_t(), BigInt(abs(r.num())).get_mpz_t(), r.den().get_mpz_t());
      if (r.den() <= 0 || gg != 1 || r * Rational(BigInt(q)) != Rational(BigInt(p)))
        return str(p) + "/" + str(q) + " -> " + r.str();
    }
    return std::nullopt;
  });
  s.add("quad-field-axioms", "Q(sqrt2)", "1000", []() -> std::optional<std::string> {
    std::mt19937_64 g(29);
    for (int i = 0; i < 1000; ++i) {
      Quad2 p(random_rational(g), random_rational(g)), q(random_rational(g), random_rational(g)),
          r(random_rational(g), random_rational(g));
      if (p.is_zero()) continue;
      if (quad_mul(quad_mul(p, q), r) != quad_mul(p, quad_mul(q, r))) return "associativity at " + p.str();
      if (quad_mul(p, q + r) != quad_mul(p, q) + quad_mul(p, r)) return "distributivity at " + p.str();
      if (quad_mul(p, quad_inv(p)) != Quad2(1)) return "inverse at " + p.str();
    }
    return std::nullopt;
  });
  s.add("quad-examples", "Q(sqrt2)", "-", []() -> std::optional<std::string> {
    if (auto f = expect_eq(quad_mul(Quad2(3, -2), Quad2(3, 2)), Quad2(1), "rho * rho^-1")) return f;
    if (auto f = expect_eq(quad_mul(Quad2(0, 1), Quad2(0, 1)), Quad2(2), "sqrt2^2")) return f;
    if (auto f = expect_eq(quad_mul(Quad2(3, -2), Quad2(3, -2)), Quad2(17, -12), "rho^2")) return f;
    if (auto f = expect_eq(quad_inv(Quad2(0, 1)), Quad2(0, Rational(1, 2)), "1/sqrt2")) return f;
    return std::nullopt;
  });
  s.add("ypoly-mean", "Q", "-", []() -> std::optional<std::string> {
    YPoly<Rational> p({0, 2, 2, 1}), q({0, 4, 0, 1});
    if (auto f = expect_eq(ypoly_mean(p, Rational(5)), Rational(9, 5), "2y+2y^2+y^3")) return f;
    return expect_eq(ypoly_mean(q, Rational(5)), Rational(7, 5), "4y+y^3");
  });
}

// ---------------------------------------------------------------- series

Series random_series(std::mt19937_64& g, const Truncation& t) {
  std::uniform_int_distribution<int> coin(0, 3), val(-5, 5);
  Series s(t);
  for (int z = 0; z <= t.nz; ++z)
    for (int x = 0; x <= t.nx; ++x)
      for (int y = 0; y <= t.ny; ++y)
        if (coin(g) == 0) s.set({z, x, 0, 0, y}, Rational(val(g)));
  return s;
}

void series_suite(Suite& s) {
  s.add("ring-laws", "series", "200", []() -> std::optional<std::string> {
    std::mt19937_64 g(41);
    Truncation t{8, 8, 2, 0, 0};
    for (int i = 0; i < 200; ++i) {
      Series a = random_series(g, t), b = random_series(g, t), c = random_series(g, t);
      if ((a * b) * c != a * (b * c)) return "associativity, instance " + str(i);
      if (a * (b + c) != a * b + a * c) return "distributivity, instance " + str(i);
      if (a * b != b * a) return "commutativity, instance " + str(i);
    }
    return std::nullopt;
  });
  s.add("inverse-and-sqrt", "series", "nz=nx=12", []() -> std::optional<std::string> {
    Truncation t{12, 12, 4, 0, 0};
    Series one = Series::constant(t, Rational(1)), z = Series::variable(t, Var::Z), x = Series::variable(t, Var::X),
           y = Series::variable(t, Var::Y);
    std::vector<Series> inputs = {one - z * Rational(4), one - x * z * Rational(4), one - x * x,
                                  one - z * Rational(4) - x * z * Rational(2)};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      Series r = sqrt(inputs[i]);
      if (r * r != inputs[i]) return "sqrt, input " + str(static_cast<long>(i));
      if (inv(inputs[i]) * inputs[i] != one) return "inverse, input " + str(static_cast<long>(i));
    }
    Series c = catalan_series(12).subst_scale(t, {1, 0, 0, 0, 0});
    Series d = one - y * z * c;
    if (inv(d) * d != one) return "inverse of 1 - yzC(z)";
    Series e = exp(z * y + x * z);
    if (e * exp(-(z * y + x * z)) != one) return "exp(a) exp(-a)";
    if (log(e) != z * y + x * z) return "log(exp(a))";
    return std::nullopt;
  });
  s.add("solver-vs-closed-form", "catalan", "nz=30", [] {
    Uni c = catalan_series(30);
    if (c != catalan_closed_form(30)) return std::optional<std::string>("fixed point differs from closed form");
    for (int n = 0; n <= 30; ++n)
      if (c[n] != Rational(catalan(n))) return std::optional<std::string>("coefficient " + str(n));
    return std::optional<std::string>();
  });
  s.add("solver-vs-closed-form", "schroeder", "nz=30", [] {
    Uni sr = schroeder_series(30);
    if (sr != schroeder_closed_form(30)) return std::optional<std::string>("fixed point differs from closed form");
    const Uni res = schroeder_residual(schroeder_tilde_series(30));
    if (std::any_of(res.coeffs().begin(), res.coeffs().end(), [](const Rational& q) { return !q.is_zero(); }))
      return std::optional<std::string>("residual non-zero");
    for (int n = 0; n <= 30; ++n)
      if (sr[n] != Rational(little_schroeder(n))) return std::optional<std::string>("coefficient " + str(n));
    return std::optional<std::string>();
  });
  s.add("solver-vs-closed-form", "noncrossing", "nz=30", [] {
    Uni t = noncrossing_series(30);
    Uni res = noncrossing_residual(t);
    for (int n = 0; n <= 30; ++n) {
      if (!res[n].is_zero()) return std::optional<std::string>("residual at z^" + str(n));
      if (t[n] != Rational(noncrossing_t(n))) return std::optional<std::string>("coefficient " + str(n));
    }
    return std::optional<std::string>();
  });
  s.add("solver-vs-closed-form", "narayana", "nz=nv=14", [] {
    Truncation t{14, 0, 0, 14, 0};
    Series nn = narayana_series(t);
    if (!narayana_residual(nn).is_zero()) return std::optional<std::string>("residual non-zero");
    if (nn != narayana_closed_form(t)) return std::optional<std::string>("fixed point differs from closed form");
    return std::optional<std::string>();
  });
  s.add("integrate-derivative", "series", "nz=nx=10", []() -> std::optional<std::string> {
    std::mt19937_64 g(53);
    Truncation t{10, 10, 2, 0, 0};
    for (int i = 0; i < 50; ++i) {
      Series a = random_series(g, t);
      Series back = derivative_z(integrate_z(a));
      Series a_cut = a;
      for (int x = 0; x <= t.nx; ++x)
        for (int y = 0; y <= t.ny; ++y) a_cut.set({t.nz, x, 0, 0, y}, Rational());
      if (back != a_cut) return "instance " + str(i);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- objects

BigInt expected_count(Family f, int n) {
  switch (f) {
    case Family::Binary:
    case Family::Plane:
    case Family::Dyck:
    case Family::Triangulation: return catalan(n);
    case Family::Schroeder:
    case Family::Dissection: return little_schroeder(n);
    case Family::Noncrossing: return noncrossing_t(n);
    case Family::Increasing: return factorial(n);
  }
  return 0;
}

void objects_suite(Suite& s) {
  const Budgets& b = s.opts.budgets;
  for (Family f : all_families()) {
    const int top = s.cap(b.limit(f));
    s.add("cardinality", std::string(family_name(f)), range(0, top), [f, top, b]() -> std::optional<std::string> {
      for (int n = 0; n <= top; ++n) {
        auto objs = generate_all(f, n, b);
        if (BigInt(static_cast<long>(objs.size())) != expected_count(f, n)) return "n=" + str(n) + " count " + str(static_cast<long>(objs.size()));
        auto sorted = objs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate at n=" + str(n);
      }
      return std::nullopt;
    });
  }
  for (const auto& st : all_statistics()) {
    const int top = s.cap(b.limit(st.family));
    s.add("row-sums", std::string(family_name(st.family)) + "/" + std::string(st.name), range(0, top),
          [st, top, b]() -> std::optional<std::string> {
            for (int n = 0; n <= top; ++n) {
              TableOptions o;
              o.budgets = b;
              DistributionTable t = distribution_table(st.family, st.id, n, o);
              if (t.object_count != expected_count(st.family, n)) return "object count at n=" + str(n);
              for (int k : t.strata())
                for (int r : t.positions(k)) {
                  BigInt sum = 0;
                  for (const auto& [d, c] : t.column(r, k)) sum += c;
                  if (sum != t.total(r, k)) return "n=" + str(n) + " r=" + str(r);
                  if (!t.stratified && t.total(r, k) != t.object_count) return "column total n=" + str(n) + " r=" + str(r);
                }
            }
            return std::nullopt;
          });
  }
  const int nb = s.cap(b.limit(Family::Binary)), nd = s.cap(b.limit(Family::Dyck));
  s.add("mirror-symmetry", "binary/leaf-depth", range(0, nb), [nb]() -> std::optional<std::string> {
    for (int n = 0; n <= nb; ++n) {
      auto t = distribution_table(Family::Binary, StatisticId::BinaryLeafDepth, n);
      for (int r = 0; r <= n; ++r)
        if (t.column(r) != t.column(n - r)) return "n=" + str(n) + " r=" + str(r);
    }
    return std::nullopt;
  });
  s.add("mirror-symmetry", "dyck/vertex-height", range(0, nd), [nd]() -> std::optional<std::string> {
    for (int n = 0; n <= nd; ++n) {
      auto t = distribution_table(Family::Dyck, StatisticId::DyckVertexHeight, n);
      for (int r = 0; r <= 2 * n; ++r)
        if (t.column(r) != t.column(2 * n - r)) return "n=" + str(n) + " r=" + str(r);
    }
    return std::nullopt;
  });
  const int np = s.cap(std::min(b.limit(Family::Plane), b.limit(Family::Binary)));
  s.add("leftmost-leaf-plane-vs-binary", "plane", range(0, np), [np]() -> std::optional<std::string> {
    for (int n = 0; n <= np; ++n) {
      std::map<int, long> plane, binary;
      for (const auto& t : all_plane_trees(n)) ++plane[statistic_vector(t, StatisticId::PlaneLeafDepth).at(0)];
      for (const auto& t : all_binary_trees(n)) ++binary[statistic_vector(t, StatisticId::BinaryLeafDepth).at(0)];
      if (plane != binary) return "n=" + str(n);
    }
    return std::nullopt;
  });
  const int ni = s.cap(b.limit(Family::Increasing));
  s.add("increasing-leaf-mean", "increasing", range(1, ni), [ni]() -> std::optional<std::string> {
    for (int n = 1; n <= ni; ++n) {
      auto t = distribution_table(Family::Increasing, StatisticId::IncreasingLeafDepth, n);
      for (int r = 0; r <= n; ++r)
        if (column_mean(t, r) != harmonic(r) + harmonic(n - r)) return "n=" + str(n) + " r=" + str(r);
    }
    return std::nullopt;
  });
  const int nn = s.cap(std::min(b.limit(Family::Noncrossing), 6));
  s.add("generators-agree", "noncrossing", range(0, nn), [nn]() -> std::optional<std::string> {
    for (int n = 0; n <= nn; ++n) {
      auto a = all_noncrossing_trees(n), c = all_noncrossing_trees_by_search(n);
      std::sort(a.begin(), a.end());
      std::sort(c.begin(), c.end());
      if (a != c) return "n=" + str(n);
    }
    return std::nullopt;
  });
  for (SubdivisionKind kind : {SubdivisionKind::Triangulation, SubdivisionKind::Dissection}) {
    const Family f = kind == SubdivisionKind::Triangulation ? Family::Triangulation : Family::Dissection;
    const int top = s.cap(std::min(b.limit(f), 7));
    s.add("generators-agree", std::string(family_name(f)), range(0, top), [kind, top]() -> std::optional<std::string> {
      for (int n = 0; n <= top; ++n) {
        auto a = all_subdivisions(n, kind), c = all_subdivisions_by_search(n, kind);
        std::sort(a.begin(), a.end());
        std::sort(c.begin(), c.end());
        if (a != c) return "n=" + str(n);
      }
      return std::nullopt;
    });
  }
}

// ---------------------------------------------------------------- bijections

void bijection_suite(Suite& s) {
  const Budgets& b = s.opts.budgets;
  for (const auto& bi : all_bijections()) {
    int lim = b.limit(bi.domain);
    if (bi.codomain) lim = std::min(lim, b.limit(*bi.codomain));
    const int top = s.cap(lim);
    for (int n = 0; n <= top; ++n) {
      s.add_full([bi, n, b] {
        MapReport r = roundtrip_check(bi.id, n, b);
        return CheckResult{"roundtrip", std::string(bi.name), str(n), r.passed ? CheckStatus::Pass : CheckStatus::Fail,
                           r.counterexample, std::nullopt};
      });
      s.add_full([bi, n, b] {
        MapReport r = bijectivity_check(bi.id, n, b);
        return CheckResult{"bijectivity", std::string(bi.name), str(n), r.passed ? CheckStatus::Pass : CheckStatus::Fail,
                           r.counterexample, std::nullopt};
      });
    }
  }
  for (const auto& c : all_correspondences()) {
    const auto& bi = bijection_info(c.bijection);
    int lim = b.limit(bi.domain);
    if (bi.codomain) lim = std::min(lim, b.limit(*bi.codomain));
    const int top = s.cap(lim);
    for (int n = 0; n <= top; ++n)
      s.add_full([&c, n, b] {
        MapReport r = transport_check(c, n, b);
        return CheckResult{"transport/" + std::string(c.id), std::string(bijection_info(c.bijection).name), str(n),
                           r.passed ? CheckStatus::Pass : CheckStatus::Fail, r.counterexample, std::nullopt};
      });
  }
}

// ---------------------------------------------------------------- gf

// Enumeration limits for the three-way comparison.
int gf_limit(const GfInfo& g, const Budgets& b) {
  static const std::map<Family, int> caps = {{Family::Binary, 10},    {Family::Plane, 10}, {Family::Dyck, 10},
                                             {Family::Schroeder, 9},  {Family::Noncrossing, 7},
                                             {Family::Increasing, 7}};
  return std::min(caps.at(g.objects), b.limit(g.objects));
}

void gf_suite(Suite& s) {
  const Budgets& b = s.opts.budgets;
  const int order = s.opts.residual_order;
  for (const auto& g : all_gf_families()) {
    const int top = s.cap(gf_limit(g, b));
    const std::string name(g.name);
    for (int n = 0; n <= top; ++n)
      s.add("gf-vs-enumeration", name, str(n), [g, n, b] {
        TableOptions o;
        o.budgets = b;
        return first_table_difference(distribution_from_gf(g.id, n), distribution_table(g.objects, g.statistic, n, o));
      });
    s.add("residual", name, "nz=nx=" + str(order), [g, order]() -> std::optional<std::string> {
      Truncation t = default_truncation(g.id, order);
      t.nx = order;
      Series r = residual(g.id, t);
      if (r.is_zero()) return std::nullopt;
      return "non-zero at " + [&] {
        Exponents e = min_monomial(r);
        return "z^" + str(e.z) + " x^" + str(e.x);
      }();
    });
    for (GfPath p : available_paths(g.id)) {
      if (p == GfPath::ClosedForm) continue;
      const int depth = 12;
      s.add("path-agreement/" + std::string(path_name(p)), name, "n<=" + str(depth), [g, p]() -> std::optional<std::string> {
        Truncation t = default_truncation(g.id, depth);
        if (expand(g.id, t, p) == expand(g.id, t)) return std::nullopt;
        return std::string("differs from the closed form");
      });
    }
    s.add("derivative-identity", name, "nz=nx=" + str(order), [g, order]() -> std::optional<std::string> {
      Truncation t = default_truncation(g.id, order);
      t.nx = order;
      auto r = derivative_identity_residual(g.id, t);
      if (!r || r->is_zero()) return std::nullopt;
      return std::string("product form differs from the termwise derivative");
    });
  }
  s.add("reflection-symmetry", "D", "n<=14", []() -> std::optional<std::string> {
    Series d = expand(GfFamily::D, default_truncation(GfFamily::D, 14));
    for (int n = 0; n <= 14; ++n)
      for (int r = 0; r <= 2 * n; ++r)
        if (d.coeff(n, r) != d.coeff(n, 2 * n - r)) return "n=" + str(n) + " r=" + str(r);
    return std::nullopt;
  });
  s.add("abscissa-average", "Babs", "n<=12", []() -> std::optional<std::string> {
    AbscissaCheck a = abscissa_check(12);
    if (a.passed && a.closed_form_agrees) return std::nullopt;
    return a.counterexample.value_or("stated derivative expression disagrees");
  });
  s.add("uniform-average-from-gf", "B", "n<=12", []() -> std::optional<std::string> {
    Series d = derivative_at_y1(GfFamily::B, default_truncation(GfFamily::B, 12));
    for (int n = 1; n <= 12; ++n) {
      Rational sum;
      for (int r = 0; r <= n; ++r) sum += d.get({n, r, 0, 0, 0});
      Rational avg = sum / Rational(BigInt(catalan(n) * (n + 1)));
      if (avg != uniform_statistic_average(UniformId::BinaryLeaf, n)) return "n=" + str(n) + " got " + avg.str();
    }
    return std::nullopt;
  });
  s.add("derivative-examples", "B,D", "3", []() -> std::optional<std::string> {
    Series db = derivative_at_y1(GfFamily::B, default_truncation(GfFamily::B, 3));
    Series dd = derivative_at_y1(GfFamily::D, default_truncation(GfFamily::D, 3));
    if (auto f = expect_eq(db.get({3, 0, 0, 0, 0}), Rational(9), "[x^0 z^3] dB")) return f;
    return expect_eq(dd.get({3, 1, 0, 0, 0}), Rational(5), "[x^1 z^3] dD");
  });
}

// ---------------------------------------------------------------- identities

void identities_suite(Suite& s) {
  s.add("avg-depth-vs-sum", "binary", "n<=30", []() -> std::optional<std::string> {
    for (long n = 0; n <= 30; ++n)
      for (long r = 0; r <= n; ++r) {
        if (coef_dB(n, r) != coef_dB_sum(n, r)) return "n=" + str(n) + " r=" + str(r);
        if (exact_average(AvgFormulaId::BinaryLeaf, n, r) != Rational(coef_dB_sum(n, r), catalan(n)))
          return "average n=" + str(n) + " r=" + str(r);
      }
    return std::nullopt;
  });
  s.add("coef-dD-vs-sum", "dyck", "n<=25", []() -> std::optional<std::string> {
    for (long n = 1; n <= 25; ++n)
      for (long r = 0; r <= 2 * n; ++r)
        if (coef_dD(n, r) != coef_dD_sum(n, r)) return "n=" + str(n) + " r=" + str(r);
    return std::nullopt;
  });
  s.add("coef-dU-vs-sum", "dyck", "n<=25", []() -> std::optional<std::string> {
    for (long n = 1; n <= 25; ++n)
      for (long r = 1; r <= n; ++r)
        if (coef_dU(n, r) != coef_dU_sum(n, r)) return "n=" + str(n) + " r=" + str(r);
    return std::nullopt;
  });
  s.add("coef-dG-vs-sum", "noncrossing", "n<=25", []() -> std::optional<std::string> {
    for (long n = 1; n <= 25; ++n)
      for (long r = 1; r <= n; ++r)
        if (coef_dG(n, r) != coef_dG_sum(n, r)) return "n=" + str(n) + " r=" + str(r);
    return std::nullopt;
  });
  s.add("upstep-leaf-relation", "dyck", "n<=25", []() -> std::optional<std::string> {
    for (long n = 0; n <= 25; ++n)
      for (long r = 0; r <= n; ++r) {
        auto [l, rr] = upstep_leaf_relation(n, r);
        if (l != rr) return "n=" + str(n) + " r=" + str(r);
      }
    return std::nullopt;
  });
  s.add("downstep-minus-upstep", "dyck", "r<=12", []() -> std::optional<std::string> {
    for (long r = 1; r <= 12; ++r) {
      Quad2 diff = as_quad(fixed_r_limit_average(AvgFormulaId::DyckDownstep, r + 1)) -
                   as_quad(fixed_r_limit_average(AvgFormulaId::DyckUpstep, r));
      if (diff != Quad2(3)) return "r=" + str(r) + " difference " + diff.str();
    }
    return std::nullopt;
  });
  s.add("boundary-3n/(n+2)", "dyck,binary", "n<=30", []() -> std::optional<std::string> {
    for (long n = 1; n <= 30; ++n) {
      Rational want(BigInt(3 * n), BigInt(n + 2));
      if (exact_average(AvgFormulaId::DyckUpstep, n, n) != want) return "up-step n=" + str(n);
      if (exact_average(AvgFormulaId::BinaryLeaf, n, 0) != want) return "leaf n=" + str(n);
    }
    return std::nullopt;
  });
  s.add("convolution", "schroeder", "n<=25", []() -> std::optional<std::string> {
    for (long n = 0; n <= 25; ++n) {
      auto [l, r] = schroeder_convolution(n);
      if (l != r) return "n=" + str(n);
    }
    return std::nullopt;
  });
  s.add("convolution", "noncrossing", "n<=25", []() -> std::optional<std::string> {
    for (long n = 1; n <= 25; ++n) {
      auto [l, r] = noncrossing_convolution(n);
      if (l != r) return "n=" + str(n);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- closed

Rational uniform_from_table(UniformId u, const DistributionTable& t) {
  Rational sum;
  long positions = 0;
  for (int r : t.positions()) {
    ++positions;
    for (const auto& [d, c] : t.column(r)) sum += Rational(c) * Rational(d);
  }
  if (u == UniformId::DyckArea) return sum / Rational(t.object_count);
  return sum / (Rational(t.object_count) * Rational(positions));
}

void closed_suite(Suite& s) {
  const Budgets& b = s.opts.budgets;
  for (const auto& fs : formula_sources()) {
    const int top = s.cap(b.limit(fs.family));
    s.add("exact-average-vs-enumeration", std::string(formula_name(fs.formula)), range(1, top),
          [fs, top, b]() -> std::optional<std::string> {
            for (int n = 1; n <= top; ++n) {
              TableOptions o;
              o.budgets = b;
              auto t = distribution_table(fs.family, fs.statistic, n, o);
              for (int r : t.positions()) {
                if (r < formula_first_index(fs.formula) || r > formula_last_index(fs.formula, n)) continue;
                Rational got = exact_average(fs.formula, n, r), want = column_mean(t, r);
                if (got != want) return "n=" + str(n) + " r=" + str(r) + ": " + got.str() + " vs " + want.str();
              }
            }
            return std::nullopt;
          });
  }
  const std::vector<std::tuple<UniformId, Family, StatisticId>> uniform = {
      {UniformId::BinaryLeaf, Family::Binary, StatisticId::BinaryLeafDepth},
      {UniformId::DyckArea, Family::Dyck, StatisticId::DyckVertexHeight},
      {UniformId::DyckUpstep, Family::Dyck, StatisticId::DyckUpstepHeight},
      {UniformId::NoncrossingNode, Family::Noncrossing, StatisticId::NoncrossingNodeDepth},
  };
  for (const auto& [u, f, st] : uniform) {
    const int top = s.cap(b.limit(f));
    s.add("uniform-average-vs-enumeration", std::string(uniform_name(u)), range(1, top),
          [u, f, st, top, b]() -> std::optional<std::string> {
            for (int n = 1; n <= top; ++n) {
              TableOptions o;
              o.budgets = b;
              Rational got = uniform_statistic_average(u, n), want = uniform_from_table(u, distribution_table(f, st, n, o));
              if (got != want) return "n=" + str(n) + ": " + got.str() + " vs " + want.str();
            }
            return std::nullopt;
          });
  }
  s.add("sequence-examples", "sequences", "-", []() -> std::optional<std::string> {
    if (auto f = expect_eq(sequence_value(SequenceId::Catalan, 3), Rational(5), "c_3")) return f;
    if (auto f = expect_eq(sequence_value(SequenceId::Narayana, 3, 2), Rational(3), "N_{3,2}")) return f;
    if (auto f = expect_eq(sequence_value(SequenceId::NoncrossingTPrime, 2), Rational(7), "t'_2")) return f;
    if (auto f = expect_eq(sequence_value(SequenceId::Harmonic, 3), Rational(11, 6), "H_3")) return f;
    for (long n = 0; n <= 30; ++n) {
      if (catalan(n) != binomial(2 * n, n) / (n + 1)) return "c_" + str(n);
      if (noncrossing_t(n) != binomial(3 * n, n) / (2 * n + 1)) return "t_" + str(n);
      if (noncrossing_t_prime(n) != binomial(3 * n + 1, n) / (n + 1)) return "t'_" + str(n);
    }
    return std::nullopt;
  });
  s.add("schroeder-fixed-r-forms", "schroeder-leaf", "r<=12", []() -> std::optional<std::string> {
    for (long r = 0; r <= 12; ++r)
      if (as_quad(fixed_r_limit_average(AvgFormulaId::SchroederLeaf, r)) != schroeder_fixed_r_closed(r))
        return "r=" + str(r);
    return std::nullopt;
  });
  s.add("no-fixed-r-limit", "increasing", "-", []() -> std::optional<std::string> {
    for (AvgFormulaId f : {AvgFormulaId::IncreasingLeaf, AvgFormulaId::IncreasingInternal}) {
      try {
        (void)fixed_r_limit_average(f, 1);
        return std::string(formula_name(f)) + " returned a value";
      } catch (const MathError&) {
      }
    }
    return std::nullopt;
  });
  s.add("table2-vs-limit-means", "table2", "r<=7", []() -> std::optional<std::string> {
    const std::vector<LimitLaw> order = {LimitLaw::BinaryLeaf, LimitLaw::SchroederLeaf, LimitLaw::NoncrossingNode,
                                         LimitLaw::DyckVertex,  LimitLaw::DyckUpstep,    LimitLaw::DyckDownstep};
    auto rows = table2(7);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const LimitLaw law = order[i];
      std::vector<ExactScalar> means;
      if (law == LimitLaw::SchroederLeaf) means = *stated_derivative(law, 7);
      else means = limit_means(law, 7);
      const int first = limit_info(law).first_index;
      for (std::size_t j = 0; j < rows[i].values.size(); ++j) {
        const int r = rows[i].first_r + static_cast<int>(j);
        if (r < first) continue;  // the root of a noncrossing tree has no limit law
        if (!exact_equal(rows[i].values[j], means.at(static_cast<std::size_t>(r - first))))
          return rows[i].label + " r=" + str(r);
      }
    }
    return std::nullopt;
  });
  struct Trend {
    AvgFormulaId f;
    std::function<long(long)> r_of;
  };
  const std::vector<Trend> trends = {{AvgFormulaId::BinaryLeaf, [](long n) { return n / 2; }},
                                     {AvgFormulaId::DyckVertex, [](long n) { return n; }},
                                     {AvgFormulaId::NoncrossingNode, [](long n) { return n / 2; }}};
  for (const auto& tr : trends)
    s.add("growing-r-trend", std::string(formula_name(tr.f)), "250,1000", [tr]() -> std::optional<std::string> {
      auto err = [&](long n) {
        long r = tr.r_of(n);
        return std::abs(exact_average(tr.f, n, r).to_double() / growing_r_average(tr.f, n, r) - 1);
      };
      double e250 = err(250), e1000 = err(1000);
      if (e1000 < e250 && e1000 < 0.05) return std::nullopt;
      std::ostringstream os;
      os << "relative error " << e250 << " at n=250, " << e1000 << " at n=1000";
      return os.str();
    });
}

// ---------------------------------------------------------------- limits

std::optional<std::string> compare_columns(const LimitColumn& a, const LimitColumn& b) {
  for (std::size_t d = 0; d < std::min(a.size(), b.size()); ++d)
    if (!exact_equal(a[d].second, b[d].second))
      return "d=" + str(a[d].first) + ": " + scalar_str(as_quad(a[d].second)) + " vs " + scalar_str(as_quad(b[d].second));
  if (a.size() != b.size()) return std::string("length");
  return std::nullopt;
}

// Constant c with a = c b entrywise, if one exists.
std::optional<Quad2> constant_ratio(const LimitColumn& a, const LimitColumn& b) {
  std::optional<Quad2> c;
  for (std::size_t d = 0; d < a.size(); ++d) {
    Quad2 p = as_quad(a[d].second), q = as_quad(b[d].second);
    if (q.is_zero()) {
      if (!p.is_zero()) return std::nullopt;
      continue;
    }
    Quad2 k = p / q;
    if (c && *c != k) return std::nullopt;
    c = k;
  }
  return c;
}

void limits_suite(Suite& s) {
  for (const auto& law : all_limit_laws()) {
    const std::string name(law.name);
    s.add_full([law, name] {
      CheckResult r{"limit-normalization", name, "r<=20", CheckStatus::Pass, std::nullopt, std::nullopt};
      try {
        auto masses = limit_masses(law.id, 20);
        for (std::size_t i = 0; i < masses.size(); ++i)
          if (!exact_equal(masses[i], ExactScalar(Rational(1)))) {
            r.counterexample = "r=" + str(law.first_index + static_cast<long>(i)) + " mass " + scalar_str(as_quad(masses[i]));
            break;
          }
        if (r.counterexample) {
          if (law.id == LimitLaw::SchroederLeaf) {
            r.status = CheckStatus::Warn;
            SchroederReport rep = schroeder_discrepancy_report();
            std::string joined;
            for (const auto& f : rep.findings) joined += (joined.empty() ? "" : "; ") + f;
            r.note = joined;
          } else {
            r.status = CheckStatus::Fail;
          }
        }
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.counterexample = e.what();
      }
      return r;
    });
    if (law.id != LimitLaw::SchroederLeaf)
      s.add("limit-mean-vs-table", name, "r<=7", [law]() -> std::optional<std::string> {
        auto means = limit_means(law.id, 7);
        for (std::size_t i = 0; i < means.size(); ++i) {
          long r = law.first_index + static_cast<long>(i);
          if (!exact_equal(means[i], fixed_r_limit_average(law.average, r)))
            return "r=" + str(r) + ": " + to_string(means[i]);
        }
        return std::nullopt;
      });
    if (law.id != LimitLaw::DyckDownstep)
      s.add("stated-derivative-vs-table", name, "r<=7", [law]() -> std::optional<std::string> {
        auto der = *stated_derivative(law.id, 7);
        for (std::size_t i = 0; i < der.size(); ++i) {
          long r = law.first_index + static_cast<long>(i);
          if (!exact_equal(der[i], fixed_r_limit_average(law.average, r)))
            return "r=" + str(r) + ": " + to_string(der[i]);
        }
        return std::nullopt;
      });
  }
  // the printed Schroeder r = 0 law is compared inside the protocol below
  for (const auto& sp : stated_specializations()) {
    if (sp.law == LimitLaw::SchroederLeaf) continue;
    s.add_full([sp] {
      CheckResult r{"limit-specialization", std::string(limit_info(sp.law).name), str(sp.r), CheckStatus::Pass,
                    std::nullopt, std::string(sp.formula)};
      try {
        LimitColumn printed = specialization_column(sp, 20);
        LimitColumn law = limit_distribution(sp.law, sp.r, 20);
        if (auto diff = compare_columns(printed, law)) {
          if (auto c = constant_ratio(printed, law)) {
            r.status = CheckStatus::Warn;
            r.counterexample = "printed form is " + scalar_str(*c) + " times the law column (" + *diff + ")";
          } else {
            r.status = CheckStatus::Fail;
            r.counterexample = *diff;
          }
        }
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.counterexample = e.what();
      }
      return r;
    });
  }
  s.add("spot-values", "binary-leaf", "r=0 d<=20", []() -> std::optional<std::string> {
    auto col = limit_distribution(LimitLaw::BinaryLeaf, 0, 20);
    for (int d = 0; d <= 20; ++d)
      if (!exact_equal(col[d].second, ExactScalar(Rational(BigInt(d), pow_int(2, d + 1))))) return "d=" + str(d);
    return std::nullopt;
  });
  s.add("spot-values", "dyck-upstep", "r=2", []() -> std::optional<std::string> {
    auto col = limit_distribution(LimitLaw::DyckUpstep, 2, 6);
    const std::vector<Rational> want = {0, Rational(1, 4), Rational(3, 4), 0, 0, 0, 0};
    for (int d = 0; d <= 6; ++d)
      if (!exact_equal(col[d].second, ExactScalar(want[d]))) return "d=" + str(d);
    return std::nullopt;
  });
  s.add("spot-values", "dyck-downstep", "r=1 d<=20", [] {
    return compare_columns(limit_distribution(LimitLaw::DyckDownstep, 1, 20),
                           limit_distribution(LimitLaw::BinaryLeaf, 0, 20));
  });
  s.add("spot-values", "noncrossing-node", "r=1 d<=20", []() -> std::optional<std::string> {
    auto col = limit_distribution(LimitLaw::NoncrossingNode, 1, 20);
    for (int d = 0; d <= 20; ++d)
      if (!exact_equal(col[d].second, ExactScalar(Rational(BigInt(4 * d), pow_int(3, d + 1))))) return "d=" + str(d);
    return std::nullopt;
  });
  s.add("spot-values", "schroeder-leaf", "r=0 d=1", [] {
    auto col = limit_distribution(LimitLaw::SchroederLeaf, 0, 1);
    return expect_eq(as_quad(col[1].second), Quad2(6, -4), "p_{0,1}");
  });
  for (LimitLaw law : {LimitLaw::BinaryLeaf, LimitLaw::DyckUpstep})
    s.add("convergence", std::string(limit_info(law).name), "n=25,50,100", [law]() -> std::optional<std::string> {
      double d25 = max_abs_deviation(law, 25, 3, 5), d50 = max_abs_deviation(law, 50, 3, 5),
             d100 = max_abs_deviation(law, 100, 3, 5);
      if (d25 > d50 && d50 > d100 && d100 <= 0.05) return std::nullopt;
      std::ostringstream os;
      os << "deviations " << d25 << ", " << d50 << ", " << d100;
      return os.str();
    });
  s.add("schroeder-protocol", "schroeder-leaf", "r<=3", []() -> std::optional<std::string> {
    SchroederReport rep = schroeder_discrepancy_report();
    if (!rep.derivative_matches_table) return std::string("stated derivative disagrees with the fixed-r averages");
    if (!rep.printed_r0_matches_empirical) return std::string("printed r=0 law disagrees with the n=60 distribution");
    if (!rep.empirical_agrees_with_table) return std::string("n=60 means disagree with the fixed-r averages");
    return std::nullopt;
  });
}

std::string natural_key(const std::string& s) {
  // zero-pad leading digit runs so that "10" sorts after "9"
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += std::string(j - i < 12 ? 12 - (j - i) : 0, '0') + s.substr(i, j - i);
      i = j;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), opts.suite) == names.end())
    throw std::invalid_argument("unknown verify suite '" + opts.suite + "'");
  Suite s{{}, opts.max_n, opts};
  const bool all = opts.suite == "all";
  if (all || opts.suite == "exact") exact_suite(s);
  if (all || opts.suite == "series") series_suite(s);
  if (all || opts.suite == "objects") objects_suite(s);
  if (all || opts.suite == "bijections") bijection_suite(s);
  if (all || opts.suite == "gf") gf_suite(s);
  if (all || opts.suite == "identities") identities_suite(s);
  if (all || opts.suite == "closed") closed_suite(s);
  if (all || opts.suite == "limits") limits_suite(s);

  std::vector<CheckResult> results(s.tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < s.tasks.size(); i = next++) results[i] = s.tasks[i]();
  };
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tuple(a.check_id, a.family, natural_key(a.n_or_r)) <
           std::tuple(b.check_id, b.family, natural_key(b.n_or_r));
  });
  return VerifyReport{std::move(results)};
}

}  // namespace combstat
