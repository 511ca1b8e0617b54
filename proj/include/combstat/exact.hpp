#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace combstat {

using BigInt = mpz_class;

class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt pow_int(long base, unsigned long e);

// Arbitrary-precision rational in canonical form (reduced, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const;
  Rational pow(long e) const;

  std::string str() const;
  std::string decimal(int digits = 4) const;
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }
  mpq_class& raw() { return v_; }

 private:
  mpq_class v_;
};

Rational rat_normalize(const BigInt& num, const BigInt& den);

// acc += a * b without temporaries on the caller side.
void addmul(Rational& acc, const Rational& a, const Rational& b);
void submul(Rational& acc, const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// a + b*sqrt(2)
class Quad2 {
 public:
  Quad2() = default;
  Quad2(int a) : a_(a) {}
  Quad2(long a) : a_(a) {}
  Quad2(Rational a) : a_(std::move(a)) {}
  Quad2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Quad2 sqrt2() { return Quad2(0, 1); }
  static Quad2 parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  Quad2 conjugate() const { return Quad2(a_, -b_); }
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

  Quad2 operator-() const { return Quad2(-a_, -b_); }
  Quad2& operator+=(const Quad2& o);
  Quad2& operator-=(const Quad2& o);
  Quad2& operator*=(const Quad2& o);
  Quad2& operator/=(const Quad2& o);

  friend Quad2 operator+(Quad2 p, const Quad2& q) { return p += q; }
  friend Quad2 operator-(Quad2 p, const Quad2& q) { return p -= q; }
  friend Quad2 operator*(Quad2 p, const Quad2& q) { return p *= q; }
  friend Quad2 operator/(Quad2 p, const Quad2& q) { return p /= q; }
  friend bool operator==(const Quad2& p, const Quad2& q) = default;

  Quad2 inverse() const;
  Quad2 pow(long e) const;

  std::string str() const;
  std::string decimal(int digits = 4) const;
  double to_double() const;

 private:
  Rational a_;
  Rational b_;
};

Quad2 quad_mul(const Quad2& p, const Quad2& q);
Quad2 quad_inv(const Quad2& p);
void addmul(Quad2& acc, const Quad2& a, const Quad2& b);
void submul(Quad2& acc, const Quad2& a, const Quad2& b);

std::ostream& operator<<(std::ostream& os, const Quad2& q);

// A value that lives in Q or in Q(sqrt 2); printed in the smallest field that holds it.
using ExactScalar = std::variant<Rational, Quad2>;
std::string to_string(const ExactScalar& s);
std::string to_decimal(const ExactScalar& s, int digits = 4);
Quad2 as_quad(const ExactScalar& s);
bool exact_equal(const ExactScalar& a, const ExactScalar& b);

enum class Field { Q, Q_sqrt2 };
std::string_view field_name(Field f);

template <class S>
constexpr Field field_of();
template <>
constexpr Field field_of<Rational>() { return Field::Q; }
template <>
constexpr Field field_of<Quad2>() { return Field::Q_sqrt2; }

inline std::string scalar_text(const Rational& r) { return r.str(); }
inline std::string scalar_text(const Quad2& q) { return q.str(); }

// Dense polynomial in y; the trailing coefficient is never zero.
template <class S>
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static YPoly monomial(int d, S c) {
    std::vector<S> v(static_cast<std::size_t>(d) + 1);
    v[d] = std::move(c);
    return YPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : S(); }

  S eval(const S& y) const {
    S acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
  }
  S at_one() const {
    S acc;
    for (const auto& c : c_) acc += c;
    return acc;
  }
  // p'(1)
  S slope_at_one() const {
    S acc;
    for (std::size_t d = 1; d < c_.size(); ++d) acc += c_[d] * S(static_cast<long>(d));
    return acc;
  }
  YPoly derivative() const {
    std::vector<S> v;
    for (std::size_t d = 1; d < c_.size(); ++d) v.push_back(c_[d] * S(static_cast<long>(d)));
    return YPoly(std::move(v));
  }

  YPoly& operator+=(const YPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  YPoly& operator-=(const YPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) addmul(v[i + j], a.c_[i], b.c_[j]);
    return YPoly(std::move(v));
  }
  friend YPoly operator*(YPoly a, const S& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const YPoly& a, const YPoly& b) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < c_.size(); ++d) {
      if (c_[d].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + scalar_text(c_[d]) + ")";
      if (d == 1) out += "*y";
      if (d > 1) out += "*y^" + std::to_string(d);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
S ypoly_mean(const YPoly<S>& p, const S& total) {
  if (total.is_zero()) throw MathError("ypoly_mean: total count is zero");
  return p.slope_at_one() / total;
}

}  // namespace combstat
