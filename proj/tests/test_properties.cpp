// Randomised invariants; every generator is seeded so failures replay.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "combstat/closed.hpp"
#include "combstat/maps.hpp"
#include "combstat/series.hpp"

using namespace combstat;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Rational random_rational(Rng& g) {
  int den = uniform(g, 1, 9);
  return Rational(BigInt(uniform(g, -20, 20)), BigInt(den));
}

Quad2 random_quad(Rng& g) { return Quad2(random_rational(g), random_rational(g)); }

// Binary tree of size n with a random left subtree size at every node.
BinaryTree random_binary(Rng& g, int n) {
  if (n == 0) return BinaryTree::leaf();
  int k = uniform(g, 0, n - 1);
  return BinaryTree::node(random_binary(g, k), random_binary(g, n - 1 - k));
}

// Uniform Dyck path by the cycle lemma: rotate a random +1/-1 word with one extra -1.
DyckPath random_dyck(Rng& g, int n) {
  std::vector<int> w(static_cast<std::size_t>(2 * n + 1), -1);
  std::fill_n(w.begin(), n, 1);
  std::shuffle(w.begin(), w.end(), g);
  int h = 0, low = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w[i];
    if (h < low) {
      low = h;
      at = i + 1;
    }
  }
  std::rotate(w.begin(), w.begin() + static_cast<long>(at % w.size()), w.end());
  std::string s;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) s += w[i] > 0 ? 'U' : 'D';
  return DyckPath(s);
}

Permutation random_permutation(Rng& g, int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

Series random_series(Rng& g, const Truncation& t, bool unit) {
  Series s(t);
  for (int z = 0; z <= t.nz; ++z)
    for (int x = 0; x <= t.nx; ++x)
      for (int y = 0; y <= t.ny; ++y)
        if (uniform(g, 0, 2) == 0) s.set({z, x, 0, 0, y}, random_rational(g));
  if (unit) {
    for (int x = 0; x <= t.nx; ++x)
      for (int y = 1; y <= t.ny; ++y) s.set({0, x, 0, 0, y}, Rational());
    s.set({}, Rational(1));
  }
  return s;
}

BinaryTree mirror(const BinaryTree& t) {
  if (t.is_leaf()) return t;
  return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

}  // namespace

TEST_CASE("rational normal form") {
  Rng g(1);
  for (int i = 0; i < 500; ++i) {
    BigInt a = uniform(g, -1000, 1000), b = uniform(g, 1, 1000) * (uniform(g, 0, 1) ? 1 : -1);
    Rational r = rat_normalize(a, b);
    CHECK(r.den() > 0);
    BigInt gg;
    mpz_gcd(gg.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    CHECK(gg == 1);
    CHECK(r * Rational(b) == Rational(a));
  }
}

TEST_CASE("quadratic field axioms") {
  Rng g(2);
  for (int i = 0; i < 300; ++i) {
    Quad2 p = random_quad(g), q = random_quad(g), r = random_quad(g);
    CHECK(quad_mul(p, q) == quad_mul(q, p));
    CHECK(quad_mul(quad_mul(p, q), r) == quad_mul(p, quad_mul(q, r)));
    CHECK(quad_mul(p, q + r) == quad_mul(p, q) + quad_mul(p, r));
    if (!q.is_zero()) CHECK(quad_mul(quad_mul(p, q), quad_inv(q)) == p);
    CHECK(Quad2::parse(p.str()) == p);
  }
}

TEST_CASE("series ring laws") {
  Rng g(3);
  Truncation t{5, 4, 2, 0, 0};
  for (int i = 0; i < 40; ++i) {
    Series a = random_series(g, t, false), b = random_series(g, t, false), c = random_series(g, t, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    Series u = random_series(g, t, true);
    CHECK(inv(u) * u == Series::constant(t, Rational(1)));
    CHECK(a / u * u == a);
    Series s = sqrt(u);
    CHECK(s * s == u);
    CHECK(exp(log(u)) == u);
    CHECK(derivative_z(integrate_z(a)) == restrict_to(restrict_to(a, {t.nz - 1, t.nx, t.ny, 0, 0}), t));
  }
}

TEST_CASE("codec and bijection round trips on random objects") {
  Rng g(4);
  for (int i = 0; i < 200; ++i) {
    int n = uniform(g, 0, 40);
    BinaryTree b = random_binary(g, n);
    CHECK(decode(Family::Binary, encode(b)) == CombObject(b));
    CHECK(dyck_to_binary(binary_to_dyck(b, true), true) == b);
    CHECK(dyck_to_binary(binary_to_dyck(b, false), false) == b);
    CHECK(triangulation_to_binary(binary_to_triangulation(b)) == b);

    DyckPath p = random_dyck(g, n);
    CHECK(p.size() == n);
    CHECK(plane_to_dyck(dyck_to_plane(p)) == p);
    CHECK(decode(Family::Dyck, encode(p)) == CombObject(p));

    Permutation w = random_permutation(g, uniform(g, 0, 30));
    IncreasingBinaryTree inc = permutation_to_increasing(w);
    CHECK(increasing_to_permutation(inc) == w);
    CHECK(decode(Family::Increasing, encode(inc)) == CombObject(inc));
    CHECK(decode_permutation(encode_permutation(w)) == w);
  }
}

TEST_CASE("statistics on random objects") {
  Rng g(5);
  for (int i = 0; i < 200; ++i) {
    int n = uniform(g, 1, 40);
    BinaryTree b = random_binary(g, n);
    auto depth = statistic_vector(b, StatisticId::BinaryLeafDepth).values;
    CHECK(static_cast<int>(depth.size()) == n + 1);
    // Kraft equality over the leaves
    Rational kraft;
    for (int d : depth) kraft += Rational(BigInt(1), pow_int(2, static_cast<unsigned long>(d)));
    CHECK(kraft == Rational(1));
    auto md = statistic_vector(mirror(b), StatisticId::BinaryLeafDepth).values;
    std::reverse(md.begin(), md.end());
    CHECK(md == depth);
    auto abs = statistic_vector(b, StatisticId::BinaryLeafAbscissa).values;
    auto ma = statistic_vector(mirror(b), StatisticId::BinaryLeafAbscissa).values;
    std::reverse(ma.begin(), ma.end());
    for (auto& v : ma) v = -v;
    CHECK(ma == abs);
    // leaf depth is one plus the separating diagonals of the triangulation
    auto sep = statistic_vector(binary_to_triangulation(b), StatisticId::SeparatingDiagonalsTriangulation).values;
    for (auto& v : sep) ++v;
    CHECK(sep == depth);
    CHECK(depth.front() == initial_run(binary_to_dyck(b, false)));
    CHECK(depth.front() == returns(binary_to_dyck(b, true)));

    DyckPath p = random_dyck(g, n);
    auto heights = statistic_vector(p, StatisticId::DyckVertexHeight).values;
    CHECK(heights.front() == 0);
    CHECK(heights.back() == 0);
    for (std::size_t k = 1; k < heights.size(); ++k) CHECK(std::abs(heights[k] - heights[k - 1]) == 1);
    PlaneTree t = dyck_to_plane(p);
    auto pre = statistic_vector(t, StatisticId::PlaneNodeDepthPreorder).values;
    pre.erase(pre.begin());
    CHECK(pre == statistic_vector(p, StatisticId::DyckUpstepHeight).values);
    CHECK(t.root_degree() == returns(p));
  }
}

TEST_CASE("exact averages against random-size closed forms") {
  Rng g(6);
  for (int i = 0; i < 50; ++i) {
    long n = uniform(g, 1, 60);
    long r = uniform(g, 0, static_cast<int>(n));
    CHECK(exact_average(AvgFormulaId::BinaryLeaf, n, r) == exact_average(AvgFormulaId::BinaryLeaf, n, n - r));
    CHECK(exact_average(AvgFormulaId::DyckVertex, n, 2 * r) ==
          exact_average(AvgFormulaId::DyckVertex, n, 2 * n - 2 * r));
    CHECK(exact_average(AvgFormulaId::IncreasingLeaf, n, r) == harmonic(r) + harmonic(n - r));
  }
}
