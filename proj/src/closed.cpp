#include "combstat/closed.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>

namespace combstat {

namespace {

// Grow-only cache; readers share the lock, the first reader past the end extends it.
class SequenceCache {
 public:
  explicit SequenceCache(std::function<BigInt(const std::vector<BigInt>&, long)> next) : next_(std::move(next)) {}

  BigInt get(long n) {
    if (n < 0) throw std::out_of_range("negative sequence index");
    {
      std::shared_lock lock(mu_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mu_);
    while (values_.size() <= static_cast<std::size_t>(n))
      values_.push_back(next_(values_, static_cast<long>(values_.size())));
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::function<BigInt(const std::vector<BigInt>&, long)> next_;
  std::vector<BigInt> values_;
  std::shared_mutex mu_;
};

SequenceCache& schroeder_cache() {
  // (n+1) s_n = 3(2n-1) s_{n-1} - (n-2) s_{n-2}
  static SequenceCache cache([](const std::vector<BigInt>& s, long n) -> BigInt {
    if (n <= 1) return 1;
    BigInt num = BigInt(3 * (2 * n - 1)) * s[static_cast<std::size_t>(n - 1)] -
                 BigInt(n - 2) * s[static_cast<std::size_t>(n - 2)];
    return num / (n + 1);
  });
  return cache;
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

BigInt exact_div(const Rational& q) {
  if (!q.is_integer()) throw std::logic_error("expected an integer coefficient, got " + q.str());
  return q.num();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

BigInt pow2(long e) { return pow_int(2, static_cast<unsigned long>(e)); }
BigInt pow4(long e) { return pow_int(4, static_cast<unsigned long>(e)); }

}  // namespace

std::string_view sequence_name(SequenceId id) {
  switch (id) {
    case SequenceId::Catalan: return "catalan";
    case SequenceId::Narayana: return "narayana";
    case SequenceId::LittleSchroeder: return "little-schroeder";
    case SequenceId::NoncrossingT: return "noncrossing-t";
    case SequenceId::NoncrossingTPrime: return "noncrossing-t-prime";
    case SequenceId::Harmonic: return "harmonic";
  }
  return "?";
}

SequenceId parse_sequence(std::string_view name) {
  for (auto id : {SequenceId::Catalan, SequenceId::Narayana, SequenceId::LittleSchroeder, SequenceId::NoncrossingT,
                  SequenceId::NoncrossingTPrime, SequenceId::Harmonic})
    if (sequence_name(id) == name) return id;
  throw std::invalid_argument("unknown sequence: " + std::string(name));
}

BigInt catalan(long n) {
  require(n >= 0, "Catalan index must be non-negative");
  return binomial(2 * n, n) / (n + 1);
}

BigInt narayana(long n, long k) {
  require(n >= 1 && k >= 1 && k <= n, "Narayana index needs 1 <= k <= n");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt little_schroeder(long n) { return schroeder_cache().get(n); }

BigInt noncrossing_t(long n) {
  require(n >= 0, "t_n index must be non-negative");
  return binomial(3 * n, n) / (2 * n + 1);
}

BigInt noncrossing_t_prime(long n) {
  require(n >= 0, "t'_n index must be non-negative");
  return binomial(3 * n + 1, n) / (n + 1);
}

Rational harmonic(long n) {
  require(n >= 0, "harmonic index must be non-negative");
  Rational h;
  for (long i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

Rational sequence_value(SequenceId seq, long n, long k) {
  switch (seq) {
    case SequenceId::Catalan: return Rational(catalan(n));
    case SequenceId::Narayana: return Rational(narayana(n, k));
    case SequenceId::LittleSchroeder: return Rational(little_schroeder(n));
    case SequenceId::NoncrossingT: return Rational(noncrossing_t(n));
    case SequenceId::NoncrossingTPrime: return Rational(noncrossing_t_prime(n));
    case SequenceId::Harmonic: return harmonic(n);
  }
  throw std::invalid_argument("unknown sequence id");
}

// ---- coefficient identities

BigInt delta(long r, long n) { return r % 2 == 0 ? BigInt(n) : BigInt(2 * n + 1); }

BigInt coef_dB(long n, long r) {
  require(0 <= r && r <= n, "leaf index out of range");
  Rational v = Rational(BigInt(2 * (2 * r + 1) * (2 * (n - r) + 1)), BigInt((n + 1) * (n + 2))) *
               Rational(binomial(2 * r, r) * binomial(2 * (n - r), n - r));
  return exact_div(v) - catalan(n);
}

BigInt coef_dB_sum(long n, long r) {
  require(0 <= r && r <= n, "leaf index out of range");
  if (2 * r > n) r = n - r;
  BigInt s = catalan(n + 1) - catalan(n);
  for (long i = 0; i < r; ++i) s += 2 * i * catalan(i) * catalan(n - i);
  for (long i = r; i <= n - r; ++i) s += r * catalan(i) * catalan(n - i);
  return s;
}

BigInt coef_dD(long n, long r) {
  require(n >= 1 && 0 <= r && r <= 2 * n, "vertex index out of range");
  long h = r / 2;
  Rational v = Rational(delta(r, n) + r * (2 * n - r), BigInt(n * (n + 1))) *
               Rational(binomial(r, h) * binomial(2 * n - r, n - h));
  return exact_div(v) - catalan(n);
}

BigInt coef_dD_sum(long n, long r) {
  require(n >= 1 && 0 <= r && r <= 2 * n, "vertex index out of range");
  if (r > n) r = 2 * n - r;
  long h = r / 2;
  BigInt s = 0;
  for (long i = 0; i < h; ++i) s += 2 * (2 * i + 1) * catalan(i) * catalan(n - i - 1);
  for (long i = h; i <= n - h - 1; ++i) s += r * catalan(i) * catalan(n - i - 1);
  return s;
}

BigInt coef_dU(long n, long r) {
  require(0 <= r && r <= n, "up-step index out of range");
  Rational v = Rational(2 * r) * Rational(catalan(n)) - Rational(r + 1, 2) * Rational(catalan(n + 1)) +
               Rational(BigInt((2 * r + 1) * (2 * (n - r) + 1)), BigInt((n + 1) * (n + 2))) *
                   Rational(binomial(2 * r, r) * binomial(2 * (n - r), n - r));
  return exact_div(v);
}

BigInt coef_dU_sum(long n, long r) {
  require(0 <= r && r <= n, "up-step index out of range");
  BigInt s = 2 * r * catalan(n);
  for (long i = 0; i < r; ++i) s -= (r - i) * catalan(i) * catalan(n - i);
  return s;
}

Rational coef_dA(long n, long r) {
  require(0 <= r && r <= n, "leaf index out of range");
  if (2 * r > n) r = n - r;
  Rational v = Rational(r + 1, 2) * Rational(little_schroeder(n + 1) + little_schroeder(n)) -
               Rational(little_schroeder(n));
  for (long i = 0; i < r; ++i) v -= Rational(2 * (r - i) * little_schroeder(i) * little_schroeder(n - i));
  return v;
}

BigInt coef_dG(long n, long r) {
  require(0 <= r && r <= n, "node index out of range");
  if (r == 0) return 0;
  // node r and node n+1-r are exchanged by the reflection fixing the root
  long q = std::min(r, n + 1 - r);
  BigInt s = q * (noncrossing_t_prime(n) - noncrossing_t(n));
  for (long i = 1; i < q; ++i) s -= 2 * (q - i) * noncrossing_t_prime(i - 1) * noncrossing_t_prime(n - i);
  return s;
}

BigInt coef_dG_sum(long n, long r) {
  require(0 <= r && r <= n, "node index out of range");
  if (r == 0) return 0;
  BigInt s = 0;
  for (long i = 0; i <= n - 1; ++i) {
    long m = std::min({r, n + 1 - r, i + 1, n - i});
    s += m * noncrossing_t_prime(i) * noncrossing_t_prime(n - 1 - i);
  }
  return s;
}

BigInt total_dG_at_one(long n) {
  require(n >= 0, "size must be non-negative");
  BigInt s = 0;
  for (long i = 0; i <= n - 1; ++i) s += (i + 1) * (n - i) * noncrossing_t_prime(i) * noncrossing_t_prime(n - 1 - i);
  return s;
}

std::pair<BigInt, BigInt> schroeder_convolution(long n) {
  BigInt lhs = 0;
  for (long i = 0; i <= n; ++i) lhs += little_schroeder(i) * little_schroeder(n - i);
  return {2 * lhs, little_schroeder(n + 1) + little_schroeder(n)};
}

std::pair<BigInt, BigInt> noncrossing_convolution(long n) {
  BigInt lhs = 0;
  for (long i = 1; i <= n; ++i) lhs += noncrossing_t_prime(i - 1) * noncrossing_t_prime(n - i);
  return {lhs, noncrossing_t_prime(n) - noncrossing_t(n)};
}

std::pair<BigInt, BigInt> upstep_leaf_relation(long n, long r) {
  return {2 * coef_dU(n, r) - coef_dB(n, r), (4 * r + 1) * catalan(n) - (r + 1) * catalan(n + 1)};
}

// ---- averages

std::string_view formula_name(AvgFormulaId id) {
  switch (id) {
    case AvgFormulaId::BinaryLeaf: return "binary-leaf";
    case AvgFormulaId::BinaryAbscissa: return "binary-abscissa";
    case AvgFormulaId::DyckVertex: return "dyck-vertex";
    case AvgFormulaId::DyckUpstep: return "dyck-upstep";
    case AvgFormulaId::DyckDownstep: return "dyck-downstep";
    case AvgFormulaId::SchroederLeaf: return "schroeder-leaf";
    case AvgFormulaId::NoncrossingNode: return "noncrossing-node";
    case AvgFormulaId::IncreasingLeaf: return "increasing-leaf";
    case AvgFormulaId::IncreasingInternal: return "increasing-internal";
  }
  return "?";
}

int formula_first_index(AvgFormulaId id) {
  return id == AvgFormulaId::DyckUpstep || id == AvgFormulaId::DyckDownstep ? 1 : 0;
}

long formula_last_index(AvgFormulaId id, long n) {
  switch (id) {
    case AvgFormulaId::DyckVertex: return 2 * n;
    case AvgFormulaId::IncreasingInternal: return n - 1;
    default: return n;
  }
}

Rational exact_average(AvgFormulaId f, long n, long r) {
  require(n >= 0, "size must be non-negative");
  require(r >= formula_first_index(f) && r <= formula_last_index(f, n),
          "position " + std::to_string(r) + " out of range for " + std::string(formula_name(f)) +
              " at n=" + std::to_string(n));
  switch (f) {
    case AvgFormulaId::BinaryLeaf:
      return Rational(BigInt(2 * (2 * r + 1) * (2 * (n - r) + 1)), BigInt(n + 2)) *
                 ratio(binomial(2 * r, r) * binomial(2 * (n - r), n - r), binomial(2 * n, n)) -
             Rational(1);
    case AvgFormulaId::BinaryAbscissa: return Rational(BigInt(6 * r - 3 * n), BigInt(n + 2));
    case AvgFormulaId::DyckVertex: {
      if (n == 0) return Rational(0);
      long h = r / 2;
      return Rational(delta(r, n) + r * (2 * n - r), BigInt(n)) *
                 ratio(binomial(r, h) * binomial(2 * n - r, n - h), binomial(2 * n, n)) -
             Rational(1);
    }
    case AvgFormulaId::DyckUpstep:
      return Rational(BigInt((2 * r + 1) * (2 * (n - r) + 1)), BigInt(n + 2)) *
                 ratio(binomial(2 * r, r) * binomial(2 * (n - r), n - r), binomial(2 * n, n)) +
             Rational(BigInt(3 * (r + 1)), BigInt(n + 2)) - Rational(2);
    case AvgFormulaId::DyckDownstep:
      // reflection sends up-step r to down-step n+1-r
      return exact_average(AvgFormulaId::DyckUpstep, n, n + 1 - r);
    case AvgFormulaId::SchroederLeaf: {
      if (2 * r > n) r = n - r;
      const BigInt sn = little_schroeder(n);
      Rational v = Rational((r + 1) * little_schroeder(n + 1), 2 * sn) + Rational(r - 1, 2);
      BigInt s = 0;
      for (long i = 0; i < r; ++i) s += (r - i) * little_schroeder(i) * little_schroeder(n - i);
      return v - Rational(2 * s, sn);
    }
    case AvgFormulaId::NoncrossingNode: return Rational(coef_dG(n, r), noncrossing_t(n));
    case AvgFormulaId::IncreasingLeaf: return harmonic(r) + harmonic(n - r);
    case AvgFormulaId::IncreasingInternal: return harmonic(r + 1) + harmonic(n - r) - Rational(2);
  }
  throw std::invalid_argument("unknown formula id");
}

Quad2 schroeder_fixed_r_closed(long r) {
  require(r >= 0, "leaf index must be non-negative");
  const Quad2 rho(3, -2);
  Quad2 v = rho.pow(r - 1) * Quad2(Rational(binomial(r + 2, 2) * little_schroeder(r + 1), 2)) -
            rho.pow(r) * Quad2(Rational(binomial(r + 1, 2) * little_schroeder(r))) - Quad2(Rational(1, 2));
  if (r >= 1) v += rho.pow(r + 1) * Quad2(Rational(binomial(r, 2) * little_schroeder(r - 1), 2));
  return v;
}

ExactScalar fixed_r_limit_average(AvgFormulaId f, long r) {
  require(r >= formula_first_index(f), "position out of range for " + std::string(formula_name(f)));
  switch (f) {
    case AvgFormulaId::BinaryLeaf:
      // (2r+1) C(2r,r) / 4^(r-1) - 1
      return Rational(BigInt(4 * (2 * r + 1)) * binomial(2 * r, r), pow4(r)) - Rational(1);
    case AvgFormulaId::DyckVertex:
      if (r % 2 == 0) return Rational(BigInt(2 * r + 1) * binomial(r, r / 2), pow2(r)) - Rational(1);
      return Rational(BigInt(2 * r + 2) * binomial(r, (r - 1) / 2), pow2(r)) - Rational(1);
    case AvgFormulaId::DyckUpstep:
      return Rational(BigInt(4 * r + 2) * binomial(2 * r, r), pow4(r)) - Rational(2);
    case AvgFormulaId::DyckDownstep: {
      long s = r - 1;
      return Rational(BigInt(4 * s + 2) * binomial(2 * s, s), pow4(s)) + Rational(1);
    }
    case AvgFormulaId::SchroederLeaf: {
      const Quad2 rho(3, -2);
      Quad2 v = Quad2(2, 1) * Quad2(r + 1) - Quad2(1);
      Quad2 pw(1);
      for (long i = 0; i < r; ++i) {
        v -= Quad2(Rational(2 * (r - i) * little_schroeder(i))) * pw;
        pw *= rho;
      }
      return v;
    }
    case AvgFormulaId::NoncrossingNode: {
      Rational v(2 * r);
      for (long i = 1; i < r; ++i)
        v -= Rational(6 * (r - i) * noncrossing_t_prime(i - 1)) * Rational(pow4(i), pow_int(27, static_cast<unsigned long>(i)));
      return v;
    }
    case AvgFormulaId::BinaryAbscissa:
      throw MathError("no fixed-r limit is registered for the abscissa average");
    case AvgFormulaId::IncreasingLeaf:
    case AvgFormulaId::IncreasingInternal:
      throw MathError("no finite fixed-r limit: the average is unbounded for increasing trees");
  }
  throw std::invalid_argument("unknown formula id");
}

double growing_r_average(AvgFormulaId f, long n, long r) {
  const double pi = std::numbers::pi;
  const double rr = static_cast<double>(r), nn = static_cast<double>(n);
  const double bulk = std::sqrt(rr * (1.0 - rr / nn));
  switch (f) {
    case AvgFormulaId::BinaryLeaf: return 8.0 / std::sqrt(pi) * bulk;
    case AvgFormulaId::DyckVertex: return 2.0 / std::sqrt(pi) * std::sqrt(rr * (2.0 - rr / nn));
    case AvgFormulaId::DyckUpstep: return 4.0 / std::sqrt(pi) * bulk;
    case AvgFormulaId::SchroederLeaf: {
      const double rho = 3.0 - 2.0 * std::sqrt(2.0);
      return std::sqrt(1.0 - rho * rho) / (rho * std::sqrt(pi)) * bulk;
    }
    case AvgFormulaId::NoncrossingNode: return 8.0 / std::sqrt(3.0 * pi) * bulk;
    default: throw MathError("no growing-r asymptotic is registered for " + std::string(formula_name(f)));
  }
}

std::string_view uniform_name(UniformId id) {
  switch (id) {
    case UniformId::BinaryLeaf: return "binary-leaf";
    case UniformId::DyckArea: return "dyck-area";
    case UniformId::DyckUpstep: return "dyck-upstep";
    case UniformId::NoncrossingNode: return "noncrossing-node";
  }
  return "?";
}

Rational uniform_statistic_average(UniformId u, long n) {
  require(n >= 1, "uniform averages need n >= 1");
  switch (u) {
    case UniformId::BinaryLeaf: return Rational(pow4(n), binomial(2 * n, n)) - Rational(1);
    case UniformId::DyckArea: return Rational(pow4(n) * 2 - binomial(2 * n + 2, n + 1), 2 * catalan(n));
    case UniformId::DyckUpstep: return Rational(pow4(n) - binomial(2 * n, n), 2 * n * catalan(n));
    case UniformId::NoncrossingNode:
      // total depth over all n+1 nodes of all trees, per node
      return Rational(total_dG_at_one(n), (n + 1) * noncrossing_t(n));
  }
  throw std::invalid_argument("unknown uniform statistic id");
}

std::vector<Table2Row> table2(int max_r) {
  auto row = [max_r](std::string label, AvgFormulaId f) {
    Table2Row t{std::move(label), formula_first_index(f), {}};
    for (int r = t.first_r; r <= max_r; ++r) t.values.push_back(fixed_r_limit_average(f, r));
    return t;
  };
  return {
      row("depth of rth leaf in binary trees", AvgFormulaId::BinaryLeaf),
      row("depth of rth leaf in Schroeder trees", AvgFormulaId::SchroederLeaf),
      row("depth of node r in noncrossing trees", AvgFormulaId::NoncrossingNode),
      row("height of rth vertex in Dyck paths", AvgFormulaId::DyckVertex),
      row("height of rth up-step in Dyck paths", AvgFormulaId::DyckUpstep),
      row("height of rth down-step in Dyck paths", AvgFormulaId::DyckDownstep),
  };
}

}  // namespace combstat
