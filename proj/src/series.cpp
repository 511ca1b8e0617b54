#include "combstat/series.hpp"

#include <sstream>

namespace combstat {

void Truncation::validate() const {
  if (nz < 0 || nx < 0 || ny < 0 || nv < 0 || u_range < 0)
    throw SeriesError("truncation bounds must be non-negative: " + str());
}

std::string Truncation::str() const {
  std::ostringstream os;
  os << "{nz=" << nz << ", nx=" << nx << ", ny=" << ny << ", nv=" << nv << ", u_range=" << u_range << "}";
  return os.str();
}

std::size_t Truncation::cells() const {
  return static_cast<std::size_t>(nz + 1) * static_cast<std::size_t>(nx + 1) *
         static_cast<std::size_t>(nv + 1) * static_cast<std::size_t>(2 * u_range + 1) *
         static_cast<std::size_t>(ny + 1);
}

namespace {

template <class Step>
Uni iterate_uni(int nz, Uni start, Step step, const char* name) {
  Uni cur = std::move(start);
  for (int it = 0; it <= nz + 1; ++it) {
    Uni next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw SeriesError(std::string("fixed point did not stabilise: ") + name);
}

void require_zero(const Uni& r, const char* name) {
  for (const auto& c : r.coeffs())
    if (!c.is_zero()) throw SeriesError(std::string("non-zero residual: ") + name);
}

}  // namespace

Uni catalan_residual(const Uni& c) {
  Uni one = Uni::constant(c.nz(), 1);
  return c - one - (c * c).shift_up();
}

Uni schroeder_residual(const Uni& s) {
  // S~ = z + S~^2 / (1 - S~)
  Uni one = Uni::constant(s.nz(), 1);
  return s - Uni::z(s.nz()) - (s * s) * (one - s).inverse();
}

Uni noncrossing_residual(const Uni& t) {
  Uni one = Uni::constant(t.nz(), 1);
  return t - one - (t * t * t).shift_up();
}

Series narayana_residual(const Series& n) {
  const Truncation& tr = n.truncation();
  Series z = Series::variable(tr, Var::Z);
  Series v = Series::variable(tr, Var::V);
  Series one = Series::constant(tr, 1);
  return n - (inv(one - z * n) - one + v);
}

Uni catalan_series(int nz) {
  Uni c = iterate_uni(
      nz, Uni::constant(nz, 1),
      [](const Uni& cur) { return Uni::constant(cur.nz(), 1) + (cur * cur).shift_up(); }, "Catalan");
  require_zero(catalan_residual(c), "Catalan");
  return c;
}

Uni schroeder_tilde_series(int nz) {
  Uni s = iterate_uni(
      nz, Uni(nz),
      [](const Uni& cur) {
        Uni one = Uni::constant(cur.nz(), 1);
        return Uni::z(cur.nz()) + (cur * cur) * (one - cur).inverse();
      },
      "Schroeder");
  require_zero(schroeder_residual(s), "Schroeder");
  return s;
}

Uni schroeder_series(int nz) {
  // one extra order so that dividing by z keeps nz correct coefficients
  Uni s = schroeder_tilde_series(nz + 1).shift_down();
  Uni out(nz);
  for (int k = 0; k <= nz; ++k) out[k] = s[k];
  return out;
}

Uni noncrossing_series(int nz) {
  Uni t = iterate_uni(
      nz, Uni::constant(nz, 1),
      [](const Uni& cur) { return Uni::constant(cur.nz(), 1) + (cur * cur * cur).shift_up(); },
      "NoncrossingT");
  require_zero(noncrossing_residual(t), "NoncrossingT");
  return t;
}

Series narayana_series(const Truncation& trunc) {
  Truncation tr = trunc;
  Series z = Series::variable(tr, Var::Z);
  Series v = Series::variable(tr, Var::V);
  Series one = Series::constant(tr, 1);
  Series cur = v;
  for (int it = 0; it <= tr.nz + 1; ++it) {
    Series next = inv(one - z * cur) - one + v;
    if (next == cur) {
      if (!narayana_residual(cur).is_zero()) throw SeriesError("non-zero residual: Narayana");
      return cur;
    }
    cur = std::move(next);
  }
  throw SeriesError("fixed point did not stabilise: Narayana");
}

std::variant<Uni, Series> solve_fixed_point(EquationId id, const Truncation& trunc) {
  switch (id) {
    case EquationId::Catalan: return catalan_series(trunc.nz);
    case EquationId::Schroeder: return schroeder_tilde_series(trunc.nz);
    case EquationId::NoncrossingT: return noncrossing_series(trunc.nz);
    case EquationId::Narayana: return narayana_series(trunc);
  }
  throw SeriesError("unregistered equation id");
}

Uni catalan_closed_form(int nz) {
  // (1 - sqrt(1-4z)) / (2z), computed one order higher before dividing by z
  Uni a = Uni::constant(nz + 1, 1);
  a[1] = -4;
  Uni num = Uni::constant(nz + 1, 1) - a.sqrt();
  Uni q = num.shift_down() * Rational(1, 2);
  Uni out(nz);
  for (int k = 0; k <= nz; ++k) out[k] = q[k];
  return out;
}

Uni schroeder_closed_form(int nz) {
  // (1 + z - sqrt(1 - 6z + z^2)) / (4z)
  Uni a = Uni::constant(nz + 1, 1);
  a[1] = -6;
  if (nz + 1 >= 2) a[2] = 1;
  Uni num = Uni::constant(nz + 1, 1) + Uni::z(nz + 1) - a.sqrt();
  Uni q = num.shift_down() * Rational(1, 4);
  Uni out(nz);
  for (int k = 0; k <= nz; ++k) out[k] = q[k];
  return out;
}

Series narayana_closed_form(const Truncation& trunc) {
  // (1 - (1-v)z - sqrt(1 - 2(1+v)z + (1-v)^2 z^2)) / (2z)
  Truncation up = trunc;
  up.nz += 1;
  Series z = Series::variable(up, Var::Z);
  Series v = Series::variable(up, Var::V);
  Series one = Series::constant(up, 1);
  Series w = one - v;
  Series disc = one - Rational(2) * (one + v) * z + w * w * z * z;
  Series num = one - w * z - sqrt(disc);
  Series q = divide_monomial(num, Exponents{1, 0, 0, 0, 0}) * Rational(1, 2);
  return restrict_to(q, trunc);
}

}  // namespace combstat
