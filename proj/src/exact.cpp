#include "combstat/exact.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace combstat {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw MathError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt pow_int(long base, unsigned long e) {
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational rat_normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string t) {
    std::size_t b = 0, e = t.size();
    while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
    return t.substr(b, e - b);
  };
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
    } else {
      num = BigInt(strip(s.substr(0, slash)));
      den = BigInt(strip(s.substr(slash + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational r;
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.v_ = mpq_class(n, d);
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

constexpr mp_bitcnt_t kDecimalBits = 512;

std::string format_mpf(const mpf_class& f, int digits) {
  if (digits < 1) digits = 1;
  std::array<char, 128> buf{};
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

mpf_class to_mpf(const Rational& r) {
  mpf_class f(0, kDecimalBits);
  mpf_set_q(f.get_mpf_t(), r.raw().get_mpq_t());
  return f;
}

}  // namespace

std::string Rational::decimal(int digits) const { return format_mpf(to_mpf(*this), digits); }

void addmul(Rational& acc, const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.raw().get_mpq_t(), b.raw().get_mpq_t());
  mpq_add(acc.raw().get_mpq_t(), acc.raw().get_mpq_t(), tmp.get_mpq_t());
}

void submul(Rational& acc, const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.raw().get_mpq_t(), b.raw().get_mpq_t());
  mpq_sub(acc.raw().get_mpq_t(), acc.raw().get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Quad2& Quad2::operator+=(const Quad2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}
Quad2& Quad2::operator-=(const Quad2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}
Quad2& Quad2::operator*=(const Quad2& o) {
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_;
  addmul(na, Rational(2) * b_, o.b_);
  Rational nb = a_ * o.b_;
  addmul(nb, b_, o.a_);
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}
Quad2& Quad2::operator/=(const Quad2& o) { return *this *= o.inverse(); }

Quad2 Quad2::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in Q(sqrt 2)");
  Rational n = norm();
  // a^2 - 2b^2 vanishes only at zero because sqrt 2 is irrational
  if (n.is_zero()) throw MathError("degenerate norm in Q(sqrt 2)");
  return Quad2(a_ / n, -b_ / n);
}

Quad2 Quad2::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Quad2 r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Quad2 Quad2::parse(std::string_view text) {
  std::string s(text);
  std::string compact;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  auto tag = compact.find("*rt2");
  if (tag == std::string::npos) return Quad2(Rational::parse(compact));
  if (tag + 4 != compact.size()) throw std::invalid_argument("malformed Q(sqrt 2) literal: " + s);
  std::size_t split = std::string::npos;
  for (std::size_t i = tag; i-- > 1;) {
    if ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return Quad2(0, Rational::parse(compact.substr(0, tag)));
  Rational a = Rational::parse(compact.substr(0, split));
  std::string bs = compact.substr(split, tag - split);
  if (bs[0] == '+') bs.erase(0, 1);
  return Quad2(a, Rational::parse(bs));
}

std::string Quad2::str() const {
  std::string out = a_.str();
  if (b_.sign() < 0)
    out += "-" + (-b_).str();
  else
    out += "+" + b_.str();
  return out + "*rt2";
}

std::string Quad2::decimal(int digits) const {
  mpf_class two(2, kDecimalBits), root(0, kDecimalBits);
  mpf_sqrt(root.get_mpf_t(), two.get_mpf_t());
  mpf_class v = to_mpf(a_) + to_mpf(b_) * root;
  return format_mpf(v, digits);
}

double Quad2::to_double() const {
  std::istringstream in(decimal(30));
  double d = 0;
  in >> d;
  return d;
}

Quad2 quad_mul(const Quad2& p, const Quad2& q) { return p * q; }
Quad2 quad_inv(const Quad2& p) { return p.inverse(); }

void addmul(Quad2& acc, const Quad2& a, const Quad2& b) { acc += a * b; }
void submul(Quad2& acc, const Quad2& a, const Quad2& b) { acc -= a * b; }

std::ostream& operator<<(std::ostream& os, const Quad2& q) { return os << q.str(); }

std::string to_string(const ExactScalar& s) {
  return std::visit([](const auto& v) { return v.str(); }, s);
}

std::string to_decimal(const ExactScalar& s, int digits) {
  return std::visit([digits](const auto& v) { return v.decimal(digits); }, s);
}

Quad2 as_quad(const ExactScalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) return Quad2(*r);
  return std::get<Quad2>(s);
}

bool exact_equal(const ExactScalar& a, const ExactScalar& b) { return as_quad(a) == as_quad(b); }

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Q(sqrt2)"; }

}  // namespace combstat
