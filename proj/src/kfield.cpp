#include "tss/kfield.hpp"

#include <cctype>
#include <bit>
#include <cmath>
#include <sstream>

namespace tss {

namespace {

constexpr int kIBit = 4;
constexpr int kSqrt3Bit = 2;
constexpr int kSqrt2Bit = 1;

const char* const kBasisNames[Scalar::kDegree] = {
    "", "sqrt2", "sqrt3", "sqrt6", "i", "i*sqrt2", "i*sqrt3", "i*sqrt6"};

// Rational factor of basis(a) * basis(b), the product being basis(a ^ b).
long product_factor(int a, int b) {
  long f = 1;
  if ((a & kIBit) && (b & kIBit)) f = -f;
  if ((a & kSqrt2Bit) && (b & kSqrt2Bit)) f *= 2;
  if ((a & kSqrt3Bit) && (b & kSqrt3Bit)) f *= 3;
  return f;
}

int rank_below(std::uint8_t support, int j) {
  return std::popcount(static_cast<unsigned>(support & ((1u << j) - 1u)));
}

const Rational& zero_rational() {
  static const Rational zero;
  return zero;
}

}  // namespace

Scalar::Scalar(long value) {
  if (value != 0) {
    support_ = 1;
    values_.emplace_back(value);
  }
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) {
    support_ = 1;
    values_.push_back(value);
    values_.back().canonicalize();
  }
}

Scalar::Scalar(Coords coords) {
  for (int j = 0; j < kDegree; ++j) {
    coords[j].canonicalize();
    if (sgn(coords[j]) != 0) {
      support_ |= static_cast<std::uint8_t>(1u << j);
      values_.push_back(std::move(coords[j]));
    }
  }
}

Scalar Scalar::basis(int index) {
  Scalar s;
  s.support_ = static_cast<std::uint8_t>(1u << index);
  s.values_.emplace_back(1);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ZeroDivision("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar::Coords Scalar::coords() const {
  Coords c{};
  int slot = 0;
  for (int j = 0; j < kDegree; ++j) {
    if (support_ & (1u << j)) c[j] = values_[static_cast<std::size_t>(slot++)];
  }
  return c;
}

const Rational& Scalar::coord(int index) const {
  if (!(support_ & (1u << index))) return zero_rational();
  return values_[static_cast<std::size_t>(rank_below(support_, index))];
}

bool Scalar::is_one() const { return support_ == 1 && values_[0] == 1; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

namespace {

// a + sign * b, coordinate-wise.
Scalar combine(const Scalar& a, const Scalar& b, int sign) {
  Scalar::Coords c{};
  for (int j = 0; j < Scalar::kDegree; ++j) {
    const bool in_a = a.support() & (1u << j), in_b = b.support() & (1u << j);
    if (in_a && in_b) {
      c[j] = sign > 0 ? Rational(a.coord(j) + b.coord(j)) : Rational(a.coord(j) - b.coord(j));
    } else if (in_a) {
      c[j] = a.coord(j);
    } else if (in_b) {
      c[j] = sign > 0 ? b.coord(j) : Rational(-b.coord(j));
    }
  }
  return Scalar(std::move(c));
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.support_ == 0) return *this;
  if (support_ == 0) return *this = other;
  if (support_ == 1 && other.support_ == 1) {
    values_[0] += other.values_[0];
    if (sgn(values_[0]) == 0) {
      values_.clear();
      support_ = 0;
    }
    return *this;
  }
  return *this = combine(*this, other, 1);
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (other.support_ == 0) return *this;
  if (support_ == 0) return *this = -other;
  if (support_ == 1 && other.support_ == 1) {
    values_[0] -= other.values_[0];
    if (sgn(values_[0]) == 0) {
      values_.clear();
      support_ = 0;
    }
    return *this;
  }
  return *this = combine(*this, other, -1);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.support_ == 0 || b.support_ == 0) return Scalar();
  if (b.support_ == 1 || a.support_ == 1) {
    const Scalar& wide = b.support_ == 1 ? a : b;
    const Rational& q = b.support_ == 1 ? b.values_[0] : a.values_[0];
    Scalar r = wide;
    if (q != 1) {
      for (auto& v : r.values_) v *= q;
    }
    return r;
  }
  Scalar::Coords acc{};
  Rational term;
  int sx = 0;
  for (int x = 0; x < Scalar::kDegree; ++x) {
    if (!(a.support_ & (1u << x))) continue;
    const Rational& ax = a.values_[static_cast<std::size_t>(sx++)];
    int sy = 0;
    for (int y = 0; y < Scalar::kDegree; ++y) {
      if (!(b.support_ & (1u << y))) continue;
      term = ax * b.values_[static_cast<std::size_t>(sy++)];
      const long f = product_factor(x, y);
      if (f != 1) term *= f;
      acc[x ^ y] += term;
    }
  }
  return Scalar(std::move(acc));
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  *this = *this * other.inverse();
  return *this;
}

namespace {

// Field automorphism negating every coordinate whose index has `bit` set.
Scalar flip(const Scalar& a, int bit) {
  Scalar::Coords c = a.coords();
  for (int j = 0; j < Scalar::kDegree; ++j) {
    if (j & bit) c[j] = -c[j];
  }
  return Scalar(std::move(c));
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero in K");
  if (is_rational()) return Scalar(Rational(1) / values_[0]);
  // Norm tower K -> Q(sqrt2, sqrt3) -> Q(sqrt2) -> Q.
  const Scalar ci = flip(*this, kIBit);
  const Scalar n1 = *this * ci;
  const Scalar c3 = flip(n1, kSqrt3Bit);
  const Scalar n2 = n1 * c3;
  const Scalar c2 = flip(n2, kSqrt2Bit);
  const Scalar n3 = n2 * c2;
  return ci * c3 * c2 * Scalar(Rational(1) / n3.coord(0));
}

Scalar Scalar::conj() const { return flip(*this, kIBit); }

std::complex<double> Scalar::to_complex() const {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const double surd[4] = {1.0, s2, s3, s6};
  double re = 0, im = 0;
  for (int j = 0; j < kDegree; ++j) {
    const double v = coord(j).get_d() * surd[j & 3];
    if (j & kIBit) im += v; else re += v;
  }
  return {re, im};
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < kDegree; ++j) {
    if (!(support_ & (1u << j))) continue;
    Rational c = coord(j);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << c.get_str();
    } else if (c == 1) {
      os << kBasisNames[j];
    } else {
      os << c.get_str() << "*" << kBasisNames[j];
    }
  }
  return os.str();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  for (int j = 0; j < Scalar::kDegree; ++j) {
    const int c = cmp(a.coord(j), b.coord(j));
    if (c != 0) return c < 0;
  }
  return false;
}

Scalar sqrt_restricted(const Scalar& a) {
  if (!a.is_rational()) {
    throw NotRepresentable("sqrt_restricted: argument is not rational: " + a.to_string());
  }
  const Rational& r = a.coord(0);
  if (sgn(r) == 0) return Scalar();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class m = abs(r.get_num()) * r.get_den();
  static const int kFree[4] = {1, 2, 3, 6};
  for (int idx = 0; idx < 4; ++idx) {
    const int f = kFree[idx];
    if (m % f != 0) continue;
    mpz_class sq = m / f;
    if (!mpz_perfect_square_p(sq.get_mpz_t())) continue;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    Rational coeff(root, r.get_den());
    coeff.canonicalize();
    Scalar::Coords c{};
    c[idx + (sgn(r) < 0 ? kIBit : 0)] = coeff;
    return Scalar(std::move(c));
  }
  throw NotRepresentable("sqrt_restricted: squarefree part of " + r.get_str() +
                         " is not in {1, 2, 3, 6}");
}

namespace constants {

Scalar zeta() { return Scalar::rational(1, 2) + Scalar::rational(1, 2) * Scalar::basis(6); }
Scalar zeta_inv() { return Scalar::rational(1, 2) - Scalar::rational(1, 2) * Scalar::basis(6); }
Scalar sqrt2() { return Scalar::basis(1); }
Scalar sqrt3() { return Scalar::basis(2); }
Scalar sqrt6() { return Scalar::basis(3); }
Scalar i_unit() { return Scalar::basis(4); }
Scalar mu_sporadic() {
  return Scalar::rational(-1, 3) + Scalar::rational(2, 3) * Scalar::basis(5);
}
Scalar alpha_sporadic() {
  const Scalar mu = mu_sporadic();
  return (mu - mu.inverse()) * Scalar::rational(1, 2);
}

}  // namespace constants

const std::map<std::string, Scalar>& constants_table() {
  static const std::map<std::string, Scalar> table = {
      {"zeta", constants::zeta()},
      {"zeta_inv", constants::zeta_inv()},
      {"sqrt2", constants::sqrt2()},
      {"sqrt3", constants::sqrt3()},
      {"sqrt6", constants::sqrt6()},
      {"i_unit", constants::i_unit()},
      {"mu_sporadic", constants::mu_sporadic()},
      {"alpha_sporadic", constants::alpha_sporadic()},
  };
  return table;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    while (true) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        const Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Scalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      Scalar value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return constants::i_unit();
      if (name == "mu") return constants::mu_sporadic();
      const auto& table = constants_table();
      const auto it = table.find(name);
      if (it == table.end()) fail("unknown name '" + name + "'");
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace tss
