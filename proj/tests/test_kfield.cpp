#include "doctest.h"

#include <random>
#include <vector>

#include "tss/kfield.hpp"

using tss::Rational;
using tss::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Scalar::Coords c{};
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Scalar(c);
}

// Oracle: solve (multiplication-by-a) * x = e_0 with a separate dense
// rational Gaussian elimination.
Scalar inverse_by_linear_system(const Scalar& a) {
  constexpr int n = Scalar::kDegree;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    const Scalar col = a * Scalar::basis(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coord(i);
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Scalar::Coords x{};
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return Scalar(x);
}

}  // namespace

TEST_CASE("basis products") {
  CHECK(tss::constants::sqrt2() * tss::constants::sqrt3() == tss::constants::sqrt6());
  CHECK(tss::constants::i_unit() * tss::constants::i_unit() == Scalar(-1));
  CHECK(tss::constants::sqrt6() * tss::constants::sqrt6() == Scalar(6));
  const Scalar z = tss::constants::zeta();
  CHECK((z * z.conj()).is_one());
}

TEST_CASE("sporadic root and its conjugate") {
  const Scalar mu = tss::constants::mu_sporadic();
  CHECK((Scalar(3) * mu * mu + Scalar(2) * mu + Scalar(3)).is_zero());
  CHECK((mu * mu.conj()).is_one());
  // quadratic formula: (-2 + sqrt(-32)) / 6
  CHECK((Scalar(-2) + tss::sqrt_restricted(Scalar(-32))) / Scalar(6) == mu);
}

TEST_CASE("zeta identities") {
  const Scalar z = tss::constants::zeta();
  CHECK((z * z - z + Scalar(1)).is_zero());
  CHECK(Scalar(1) - z == tss::constants::zeta_inv());
  CHECK(z.inverse() == tss::constants::zeta_inv());
}

TEST_CASE("inverse") {
  CHECK(tss::constants::sqrt2().inverse() == tss::constants::sqrt2() * Scalar::rational(1, 2));
  CHECK_THROWS_AS(Scalar().inverse(), tss::ZeroDivision);
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Scalar x = random_scalar(rng);
    if (x.is_zero()) continue;
    const Scalar inv = x.inverse();
    CHECK((inv * x).is_one());
    CHECK(inv == inverse_by_linear_system(x));
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    const Scalar p = a * b;
    CHECK(Scalar(p.coords()) == p);
  }
}

TEST_CASE("sqrt_restricted") {
  CHECK(tss::sqrt_restricted(Scalar(-3)) == tss::constants::i_unit() * tss::constants::sqrt3());
  CHECK(tss::sqrt_restricted(Scalar(-32)) == Scalar(4) * Scalar::basis(5));
  CHECK_THROWS_AS(tss::sqrt_restricted(Scalar(5)), tss::NotRepresentable);
  CHECK_THROWS_AS(tss::sqrt_restricted(tss::constants::zeta()), tss::NotRepresentable);
  for (long v : {1L, 4L, 8L, 12L, 24L, -2L, -6L, -27L}) {
    for (long d : {1L, 2L, 3L, 9L}) {
      const Scalar a = Scalar::rational(v, d);
      const Scalar s = tss::sqrt_restricted(a);
      CHECK(s * s == a);
    }
  }
}

TEST_CASE("parse and print") {
  CHECK(tss::parse_scalar("1/2 + 1/2*i*sqrt3") == tss::constants::zeta());
  CHECK(tss::parse_scalar("zeta") == tss::constants::zeta());
  CHECK(tss::parse_scalar("(-1 + 2*sqrt2*i)/3") == tss::constants::mu_sporadic());
  CHECK(tss::parse_scalar(tss::constants::mu_sporadic().to_string()) ==
        tss::constants::mu_sporadic());
  CHECK_THROWS_AS(tss::parse_scalar("1/0"), tss::ParseError);
  CHECK_THROWS_AS(tss::parse_scalar("sqrt5"), tss::ParseError);
  CHECK_THROWS_AS(tss::parse_scalar("2 +"), tss::ParseError);
}
