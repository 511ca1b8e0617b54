#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "combstat/exact.hpp"

namespace combstat {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-variable exponent bounds. u is Laurent: exponents run over -u_range..u_range.
struct Truncation {
  int nz = 0;
  int nx = 0;
  int ny = 0;
  int nv = 0;
  int u_range = 0;

  friend bool operator==(const Truncation&, const Truncation&) = default;
  void validate() const;
  std::string str() const;
  std::size_t cells() const;
};

// In Polynomial mode y is a coefficient ring variable: inverting anything whose
// z^0 part involves y is refused. Variable mode treats y as one more truncated
// power-series variable.
enum class YMode { Polynomial, Variable };

enum class Var { Z, X, V, U, Y };

struct Exponents {
  int z = 0;
  int x = 0;
  int v = 0;
  int u = 0;
  int y = 0;

  friend bool operator==(const Exponents&, const Exponents&) = default;
  Exponents operator+(const Exponents& o) const { return {z + o.z, x + o.x, v + o.v, u + o.u, y + o.y}; }
  Exponents operator-(const Exponents& o) const { return {z - o.z, x - o.x, v - o.v, u - o.u, y - o.y}; }
  Exponents scaled(int k) const { return {z * k, x * k, v * k, u * k, y * k}; }
  bool is_zero() const { return z == 0 && x == 0 && v == 0 && u == 0 && y == 0; }
};

// Image of one source variable under a monomial substitution: var -> factor * monomial.
template <class S>
struct MonomialImage {
  Exponents e;
  S factor = S(1);
};

template <class S>
class BasicSeries {
 public:
  struct Term {
    Exponents e;
    std::size_t idx;
  };

  BasicSeries() = default;
  explicit BasicSeries(const Truncation& t, YMode mode = YMode::Polynomial) : t_(t), mode_(mode) {
    t_.validate();
    su_ = static_cast<std::size_t>(t_.ny) + 1;
    sv_ = su_ * (2 * static_cast<std::size_t>(t_.u_range) + 1);
    sx_ = sv_ * (static_cast<std::size_t>(t_.nv) + 1);
    sz_ = sx_ * (static_cast<std::size_t>(t_.nx) + 1);
    c_.assign(sz_ * (static_cast<std::size_t>(t_.nz) + 1), S());
  }

  static BasicSeries constant(const Truncation& t, const S& c, YMode mode = YMode::Polynomial) {
    BasicSeries r(t, mode);
    r.set({}, c);
    return r;
  }
  static BasicSeries monomial(const Truncation& t, const Exponents& e, const S& c = S(1),
                              YMode mode = YMode::Polynomial) {
    BasicSeries r(t, mode);
    if (r.in_range(e)) r.set(e, c);
    return r;
  }
  static BasicSeries variable(const Truncation& t, Var var, YMode mode = YMode::Polynomial) {
    Exponents e;
    switch (var) {
      case Var::Z: e.z = 1; break;
      case Var::X: e.x = 1; break;
      case Var::V: e.v = 1; break;
      case Var::U: e.u = 1; break;
      case Var::Y: e.y = 1; break;
    }
    return monomial(t, e, S(1), mode);
  }

  const Truncation& truncation() const { return t_; }
  YMode y_mode() const { return mode_; }
  static constexpr Field field() { return field_of<S>(); }

  BasicSeries with_y_mode(YMode m) const {
    BasicSeries r = *this;
    r.mode_ = m;
    return r;
  }

  bool in_range(const Exponents& e) const {
    return e.z >= 0 && e.z <= t_.nz && e.x >= 0 && e.x <= t_.nx && e.v >= 0 && e.v <= t_.nv &&
           e.y >= 0 && e.y <= t_.ny && std::abs(e.u) <= t_.u_range;
  }
  std::size_t index(const Exponents& e) const {
    return e.z * sz_ + e.x * sx_ + e.v * sv_ + static_cast<std::size_t>(e.u + t_.u_range) * su_ + e.y;
  }
  Exponents exponents(std::size_t idx) const {
    Exponents e;
    e.z = static_cast<int>(idx / sz_);
    idx %= sz_;
    e.x = static_cast<int>(idx / sx_);
    idx %= sx_;
    e.v = static_cast<int>(idx / sv_);
    idx %= sv_;
    e.u = static_cast<int>(idx / su_) - t_.u_range;
    e.y = static_cast<int>(idx % su_);
    return e;
  }
  std::size_t lattice_offset() const { return static_cast<std::size_t>(t_.u_range) * su_; }

  S get(const Exponents& e) const { return in_range(e) ? c_[index(e)] : S(); }
  const S& ref(const Exponents& e) const {
    if (!in_range(e)) throw SeriesError("coefficient outside truncation");
    return c_[index(e)];
  }
  void set(const Exponents& e, S c) {
    if (!in_range(e)) throw SeriesError("coefficient outside truncation");
    c_[index(e)] = std::move(c);
  }
  void add_to(const Exponents& e, const S& c) {
    if (!in_range(e)) return;
    c_[index(e)] += c;
  }

  YPoly<S> coeff(int z, int x, int v = 0, int u = 0) const {
    std::vector<S> ys;
    Exponents e{z, x, v, u, 0};
    if (!in_range(e)) return {};
    std::size_t base = index(e);
    ys.assign(c_.begin() + static_cast<std::ptrdiff_t>(base),
              c_.begin() + static_cast<std::ptrdiff_t>(base + su_));
    return YPoly<S>(std::move(ys));
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const S& s) { return s.is_zero(); });
  }
  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const S& s) { return !s.is_zero(); }));
  }
  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) out.push_back({exponents(i), i});
    return out;
  }
  template <class F>
  void for_each_nonzero(F&& f) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) f(exponents(i), c_[i]);
  }

  const std::vector<S>& raw() const { return c_; }
  std::vector<S>& raw() { return c_; }

  BasicSeries operator-() const {
    BasicSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  BasicSeries& operator+=(const BasicSeries& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
  }
  BasicSeries& operator*=(const S& s) {
    for (auto& c : c_)
      if (!c.is_zero()) c *= s;
    return *this;
  }
  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const S& s) { return a *= s; }
  friend BasicSeries operator*(const S& s, BasicSeries a) { return a *= s; }
  // adding a scalar touches only the constant term
  friend BasicSeries operator+(BasicSeries a, const S& s) {
    a.c_[a.index({})] += s;
    return a;
  }
  friend BasicSeries operator+(const S& s, BasicSeries a) { return std::move(a) + s; }
  friend BasicSeries operator-(BasicSeries a, const S& s) {
    a.c_[a.index({})] -= s;
    return a;
  }
  friend BasicSeries operator-(const S& s, const BasicSeries& a) { return (-a) + s; }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.t_ == b.t_ && a.c_ == b.c_; }

  void require_compatible(const BasicSeries& o) const {
    if (!(t_ == o.t_)) throw SeriesError("truncation mismatch: " + t_.str() + " vs " + o.t_.str());
    if (mode_ != o.mode_) throw SeriesError("y-mode mismatch");
  }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) { return mul(a, b); }

  static BasicSeries mul(const BasicSeries& a, const BasicSeries& b) {
    a.require_compatible(b);
    BasicSeries r(a.t_, a.mode_);
    const auto ta = a.terms();
    const auto tb = b.terms();
    const std::size_t off = a.lattice_offset();
    const Truncation& t = a.t_;
    for (const auto& p : ta) {
      for (const auto& q : tb) {
        if (p.e.z + q.e.z > t.nz) break;
        if (p.e.x + q.e.x > t.nx || p.e.v + q.e.v > t.nv || p.e.y + q.e.y > t.ny ||
            std::abs(p.e.u + q.e.u) > t.u_range)
          continue;
        addmul(r.c_[p.idx + q.idx - off], a.c_[p.idx], b.c_[q.idx]);
      }
    }
    return r;
  }

  // a / b by forward substitution in the lexicographic order of (z, x, v, u, y).
  // Every non-constant term of b must be lexicographically positive, which holds
  // as soon as the z^0 part of b carries no u (and, in Polynomial mode, no y).
  static BasicSeries divide(const BasicSeries& a, const BasicSeries& b) {
    a.require_compatible(b);
    const S& b0 = b.c_[b.index({})];
    if (b0.is_zero()) throw MathError("series inverse: constant term is zero");
    std::vector<Term> tb;
    for (const auto& q : b.terms()) {
      if (q.e.is_zero()) continue;
      if (q.e.z == 0 && q.e.u != 0)
        throw SeriesError("series inverse: z^0 part depends on the Laurent variable u");
      if (q.e.z == 0 && q.e.y != 0 && b.mode_ == YMode::Polynomial)
        throw SeriesError("series inverse: y-dependent unit in polynomial mode; use y-as-variable mode");
      tb.push_back(q);
    }
    const S inv0 = S(1) / b0;
    BasicSeries r = a;
    const Truncation& t = a.t_;
    const std::size_t off = a.lattice_offset();
    std::size_t i = 0;
    for (int z = 0; z <= t.nz; ++z)
      for (int x = 0; x <= t.nx; ++x)
        for (int v = 0; v <= t.nv; ++v)
          for (int u = -t.u_range; u <= t.u_range; ++u)
            for (int y = 0; y <= t.ny; ++y, ++i) {
              S& cur = r.c_[i];
              if (cur.is_zero()) continue;
              cur *= inv0;
              for (const auto& q : tb) {
                if (z + q.e.z > t.nz) break;
                if (x + q.e.x > t.nx || v + q.e.v > t.nv || y + q.e.y > t.ny ||
                    std::abs(u + q.e.u) > t.u_range)
                  continue;
                submul(r.c_[i + q.idx - off], b.c_[q.idx], cur);
              }
            }
    return r;
  }

 private:
  Truncation t_;
  YMode mode_ = YMode::Polynomial;
  std::size_t su_ = 1, sv_ = 1, sx_ = 1, sz_ = 1;
  std::vector<S> c_;
};

using Series = BasicSeries<Rational>;
using SeriesQ2 = BasicSeries<Quad2>;

template <class S>
BasicSeries<S> inv(const BasicSeries<S>& a) {
  return BasicSeries<S>::divide(BasicSeries<S>::constant(a.truncation(), S(1), a.y_mode()), a);
}

template <class S>
BasicSeries<S> operator/(const BasicSeries<S>& a, const BasicSeries<S>& b) {
  return BasicSeries<S>::divide(a, b);
}

inline int total_bound(const Truncation& t) {
  return t.nz + t.nx + t.nv + t.ny;
}

template <class S>
void require_constant(const BasicSeries<S>& a, const S& expected, const char* what) {
  if (!(a.get({}) == expected)) throw MathError(std::string(what));
}

// Newton iteration s <- (s + a/s)/2 from s = 1.
template <class S>
BasicSeries<S> sqrt(const BasicSeries<S>& a) {
  require_constant(a, S(1), "series sqrt: constant term must be 1");
  const YMode mode = a.y_mode();
  BasicSeries<S> av = a.with_y_mode(YMode::Variable);
  BasicSeries<S> s = BasicSeries<S>::constant(a.truncation(), S(1), YMode::Variable);
  const S half = S(1) / S(2);
  for (int it = 0; it < 64; ++it) {
    BasicSeries<S> next = (s + av / s) * half;
    if (next == s) return s.with_y_mode(mode);
    s = std::move(next);
  }
  throw SeriesError("series sqrt: Newton iteration did not stabilise");
}

// The power sum of a^k/k! terminates because a has no constant term.
template <class S>
BasicSeries<S> exp(const BasicSeries<S>& a) {
  require_constant(a, S(), "series exp: constant term must be 0");
  BasicSeries<S> term = BasicSeries<S>::constant(a.truncation(), S(1), a.y_mode());
  BasicSeries<S> sum = term;
  const int limit = total_bound(a.truncation()) + 2;
  for (int k = 1; k <= limit; ++k) {
    term = term * a;
    term *= S(1) / S(k);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw SeriesError("series exp: power sum did not terminate");
}

template <class S>
BasicSeries<S> log(const BasicSeries<S>& a) {
  require_constant(a, S(1), "series log: constant term must be 1");
  BasicSeries<S> b = a - S(1);
  BasicSeries<S> power = b;
  BasicSeries<S> sum(a.truncation(), a.y_mode());
  const int limit = total_bound(a.truncation()) + 2;
  for (int k = 1; k <= limit; ++k) {
    if (power.is_zero()) return sum;
    BasicSeries<S> scaled = power * (S(k % 2 == 1 ? 1 : -1) / S(k));
    sum += scaled;
    power = power * b;
  }
  if (!power.is_zero()) throw SeriesError("series log: power sum did not terminate");
  return sum;
}

template <class S>
BasicSeries<S> integrate_z(const BasicSeries<S>& a) {
  BasicSeries<S> r(a.truncation(), a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    Exponents f = e;
    f.z += 1;
    if (r.in_range(f)) r.set(f, c / S(e.z + 1));
  });
  return r;
}

template <class S>
BasicSeries<S> derivative_z(const BasicSeries<S>& a) {
  BasicSeries<S> r(a.truncation(), a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    if (e.z == 0) return;
    Exponents f = e;
    f.z -= 1;
    r.set(f, c * S(e.z));
  });
  return r;
}

// Replace each source variable by factor * monomial and re-truncate to `target`.
template <class S>
struct SubstitutionMap {
  MonomialImage<S> z{{1, 0, 0, 0, 0}};
  MonomialImage<S> x{{0, 1, 0, 0, 0}};
  MonomialImage<S> v{{0, 0, 1, 0, 0}};
  MonomialImage<S> u{{0, 0, 0, 1, 0}};
  MonomialImage<S> y{{0, 0, 0, 0, 1}};
};

template <class S>
BasicSeries<S> substitute(const BasicSeries<S>& a, const SubstitutionMap<S>& m, const Truncation& target,
                          YMode mode) {
  BasicSeries<S> r(target, mode);
  auto power = [](const S& f, int k) {
    S p(1);
    for (int i = 0; i < k; ++i) p *= f;
    return p;
  };
  auto scaled = [&](const MonomialImage<S>& img, int k, Exponents& acc, S& coef) {
    if (k == 0) return;
    acc = acc + img.e.scaled(k);
    if (!(img.factor == S(1))) coef *= power(img.factor, k);
  };
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    Exponents f{};
    S coef = c;
    scaled(m.z, e.z, f, coef);
    scaled(m.x, e.x, f, coef);
    scaled(m.v, e.v, f, coef);
    scaled(m.u, e.u, f, coef);
    scaled(m.y, e.y, f, coef);
    if (r.in_range(f)) r.add_to(f, coef);
  });
  return r;
}

template <class S>
BasicSeries<S> substitute(const BasicSeries<S>& a, const SubstitutionMap<S>& m) {
  return substitute(a, m, a.truncation(), a.y_mode());
}

template <class S>
BasicSeries<S> restrict_to(const BasicSeries<S>& a, const Truncation& t) {
  return substitute(a, SubstitutionMap<S>{}, t, a.y_mode());
}

// Componentwise minimum exponent over the support (u excluded).
template <class S>
Exponents min_monomial(const BasicSeries<S>& a) {
  bool first = true;
  Exponents m;
  a.for_each_nonzero([&](const Exponents& e, const S&) {
    if (first) {
      m = e;
      m.u = 0;
      first = false;
      return;
    }
    m.z = std::min(m.z, e.z);
    m.x = std::min(m.x, e.x);
    m.v = std::min(m.v, e.v);
    m.y = std::min(m.y, e.y);
  });
  if (first) throw MathError("min monomial of the zero series");
  return m;
}

// Exact division by a monomial; the truncation shrinks by the same amount.
template <class S>
BasicSeries<S> divide_monomial(const BasicSeries<S>& a, const Exponents& m) {
  if (m.u != 0) throw SeriesError("monomial division by a power of u is not supported");
  Truncation t = a.truncation();
  t.nz -= m.z;
  t.nx -= m.x;
  t.nv -= m.v;
  t.ny -= m.y;
  if (t.nz < 0 || t.nx < 0 || t.nv < 0 || t.ny < 0) throw SeriesError("monomial exceeds truncation");
  BasicSeries<S> r(t, a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    Exponents f = e - m;
    f.u = e.u;
    if (f.z < 0 || f.x < 0 || f.v < 0 || f.y < 0) throw MathError("series is not divisible by the monomial");
    if (r.in_range(f)) r.set(f, c);
  });
  return r;
}

// a / b where b = m * (unit); m is the componentwise-minimal monomial of b.
template <class S>
BasicSeries<S> quotient(const BasicSeries<S>& a, const BasicSeries<S>& b) {
  Exponents m = min_monomial(b);
  if (m.is_zero()) return a / b;
  BasicSeries<S> bb = divide_monomial(b, m);
  if (bb.get({}).is_zero()) throw MathError("quotient: denominator has no leading monomial");
  return divide_monomial(a, m) / bb;
}

// Collapse the y dimension: evaluate at y = y0.
template <class S>
BasicSeries<S> at_y(const BasicSeries<S>& a, const S& y0) {
  Truncation t = a.truncation();
  t.ny = 0;
  BasicSeries<S> r(t, a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    Exponents f = e;
    f.y = 0;
    r.add_to(f, c * y0.pow(e.y));
  });
  return r;
}

// d/dy at y = 1, termwise.
template <class S>
BasicSeries<S> dy_at_one(const BasicSeries<S>& a) {
  Truncation t = a.truncation();
  t.ny = 0;
  BasicSeries<S> r(t, a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    if (e.y == 0) return;
    Exponents f = e;
    f.y = 0;
    r.add_to(f, c * S(e.y));
  });
  return r;
}

template <class S>
BasicSeries<S> at_u_one(const BasicSeries<S>& a) {
  Truncation t = a.truncation();
  t.u_range = 0;
  BasicSeries<S> r(t, a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    Exponents f = e;
    f.u = 0;
    r.add_to(f, c);
  });
  return r;
}

template <class S>
BasicSeries<S> du_at_one(const BasicSeries<S>& a) {
  Truncation t = a.truncation();
  t.u_range = 0;
  BasicSeries<S> r(t, a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) {
    if (e.u == 0) return;
    Exponents f = e;
    f.u = 0;
    r.add_to(f, c * S(e.u));
  });
  return r;
}

template <class T, class S>
BasicSeries<T> convert_field(const BasicSeries<S>& a) {
  BasicSeries<T> r(a.truncation(), a.y_mode());
  a.for_each_nonzero([&](const Exponents& e, const S& c) { r.set(e, T(c)); });
  return r;
}

// Univariate series in z with scalar coefficients.
template <class S>
class UniSeries {
 public:
  UniSeries() = default;
  explicit UniSeries(int nz) : c_(static_cast<std::size_t>(nz) + 1) {
    if (nz < 0) throw SeriesError("negative truncation");
  }
  UniSeries(int nz, std::vector<S> coeffs) : UniSeries(nz) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }
  static UniSeries constant(int nz, const S& c) {
    UniSeries r(nz);
    r.c_[0] = c;
    return r;
  }
  static UniSeries z(int nz) {
    UniSeries r(nz);
    if (nz >= 1) r.c_[1] = S(1);
    return r;
  }

  int nz() const { return static_cast<int>(c_.size()) - 1; }
  const S& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  S& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<S>& coeffs() const { return c_; }

  UniSeries& operator+=(const UniSeries& o) {
    require(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  UniSeries& operator-=(const UniSeries& o) {
    require(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  UniSeries& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(UniSeries a, const S& s) { return a *= s; }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    a.require(b);
    UniSeries r(a.nz());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) addmul(r.c_[i + j], a.c_[i], b.c_[j]);
    }
    return r;
  }
  friend bool operator==(const UniSeries& a, const UniSeries& b) = default;

  // multiply by z, dropping the top coefficient
  UniSeries shift_up() const {
    UniSeries r(nz());
    for (int k = nz(); k >= 1; --k) r.c_[k] = c_[k - 1];
    return r;
  }
  // divide by z; requires a zero constant term; the top coefficient becomes unknown (0)
  UniSeries shift_down() const {
    if (!c_[0].is_zero()) throw MathError("shift_down: constant term is not zero");
    UniSeries r(nz());
    for (int k = 0; k < nz(); ++k) r.c_[k] = c_[k + 1];
    return r;
  }
  UniSeries inverse() const {
    if (c_[0].is_zero()) throw MathError("series inverse: constant term is zero");
    UniSeries r(nz());
    S inv0 = S(1) / c_[0];
    for (int n = 0; n <= nz(); ++n) {
      S acc = n == 0 ? S(1) : S();
      for (int k = 1; k <= n; ++k) submul(acc, c_[k], r.c_[n - k]);
      r.c_[n] = acc * inv0;
    }
    return r;
  }
  UniSeries sqrt() const {
    if (!(c_[0] == S(1))) throw MathError("series sqrt: constant term must be 1");
    UniSeries s = constant(nz(), S(1));
    const S half = S(1) / S(2);
    for (int it = 0; it < 64; ++it) {
      UniSeries next = (s + *this * s.inverse()) * half;
      if (next == s) return s;
      s = std::move(next);
    }
    throw SeriesError("series sqrt: Newton iteration did not stabilise");
  }

  // Substitute z -> factor * monomial into a multivariate series (C(xz), T(4x/27), ...).
  BasicSeries<S> subst_scale(const Truncation& target, const Exponents& monomial, const S& factor = S(1),
                             YMode mode = YMode::Polynomial) const {
    BasicSeries<S> r(target, mode);
    S f(1);
    for (int k = 0; k <= nz(); ++k) {
      Exponents e = monomial.scaled(k);
      if (!c_[k].is_zero() && r.in_range(e)) r.add_to(e, c_[k] * f);
      f *= factor;
    }
    return r;
  }

 private:
  void require(const UniSeries& o) const {
    if (c_.size() != o.c_.size()) throw SeriesError("univariate truncation mismatch");
  }
  std::vector<S> c_;
};

using Uni = UniSeries<Rational>;

template <class S>
UniSeries<S> ps_integrate_z(const UniSeries<S>& a) {
  UniSeries<S> r(a.nz());
  for (int k = 0; k < a.nz(); ++k) r[k + 1] = a[k] / S(k + 1);
  return r;
}

// Implicitly defined series solved by z-adic fixed-point iteration.
enum class EquationId { Catalan, Schroeder, NoncrossingT, Narayana };

// Catalan, Schroeder (the tilde series zS, z marking leaves) and NoncrossingT give a
// UniSeries; Narayana gives N(v, z) as a series in z and v.
std::variant<Uni, Series> solve_fixed_point(EquationId id, const Truncation& trunc);

Uni catalan_series(int nz);
Uni schroeder_tilde_series(int nz);  // sum over trees of z^(leaves)
Uni schroeder_series(int nz);        // S(z) = sum s_n z^n
Uni noncrossing_series(int nz);      // T(z)
Series narayana_series(const Truncation& trunc);

// Residuals of the defining equations, used to certify the solvers.
Uni catalan_residual(const Uni& c);
Uni schroeder_residual(const Uni& s_tilde);
Uni noncrossing_residual(const Uni& t);
Series narayana_residual(const Series& n);

// Closed forms through sqrt, as an independent path.
Uni catalan_closed_form(int nz);
Uni schroeder_closed_form(int nz);
Series narayana_closed_form(const Truncation& trunc);

}  // namespace combstat
