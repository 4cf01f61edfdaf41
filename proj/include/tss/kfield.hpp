#pragma once

// Exact arithmetic in K = Q(i, sqrt2, sqrt3), a degree-8 number field.
//
// Elements are stored as 8 rational coordinates over the fixed basis
//   (1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6).
// Basis index = 4*[i] + 2*[sqrt3] + [sqrt2], so products of basis vectors
// reduce to an xor of indices plus a rational factor.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tss/errors.hpp"

namespace tss {

using Rational = mpq_class;

class Scalar {
 public:
  static constexpr int kDegree = 8;
  using Coords = std::array<Rational, kDegree>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational& value);                            // NOLINT
  explicit Scalar(Coords coords);

  /// The basis vector with the given index (0..7).
  static Scalar basis(int index);
  static Scalar rational(long num, long den);

  /// All eight coordinates (zeros included).
  Coords coords() const;
  const Rational& coord(int index) const;
  /// Bit j set iff coordinate j is nonzero.
  std::uint8_t support() const { return support_; }

  bool is_zero() const { return support_ == 0; }
  bool is_rational() const { return (support_ & 0xFE) == 0; }
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.support_ == b.support_ && a.values_ == b.values_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Throws ZeroDivision for zero.
  Scalar inverse() const;
  /// Complex conjugation: negates the four i-carrying coordinates.
  Scalar conj() const;

  /// Display-only embedding into C (sqrt2, sqrt3 positive, i the usual unit).
  std::complex<double> to_complex() const;
  /// Human-readable form such as "1/2 + 1/2*i*sqrt3".
  std::string to_string() const;

 private:
  // Only nonzero coordinates are stored, in basis order, so that zeros and
  // rationals (the bulk of every matrix) are cheap to copy.
  std::uint8_t support_ = 0;
  std::vector<Rational> values_;
};

/// Fixed total order on coordinates (lexicographic in basis order).
bool scalar_less(const Scalar& a, const Scalar& b);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return scalar_less(a, b); }
};

/// Square root of a rational whose squarefree part is in {1, 2, 3, 6}
/// (a negative sign contributes a factor i). The returned root has a
/// nonnegative leading surd coordinate. Throws NotRepresentable otherwise.
Scalar sqrt_restricted(const Scalar& a);

namespace constants {
Scalar zeta();      // (1 + i*sqrt3)/2, a primitive sixth root of unity
Scalar zeta_inv();  // (1 - i*sqrt3)/2
Scalar sqrt2();
Scalar sqrt3();
Scalar sqrt6();
Scalar i_unit();
Scalar mu_sporadic();     // (-1 + 2*sqrt2*i)/3, a root of 3x^2 + 2x + 3
Scalar alpha_sporadic();  // (mu - 1/mu)/2
}  // namespace constants

/// Named constants, keyed by the tokens accepted by parse_scalar.
const std::map<std::string, Scalar>& constants_table();

/// Parses "p/q" rationals and named constants combined with + - * / and
/// parentheses, e.g. "1/2 + 1/2*i*sqrt3" or "zeta". Throws ParseError.
Scalar parse_scalar(std::string_view text);

}  // namespace tss
