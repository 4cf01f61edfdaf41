#pragma once

// Dense exact linear algebra over K (and, through the templates, over Q).
//
// Matrices are Eigen containers over an exact scalar. Elimination never
// looks at magnitudes: the pivot is always the first nonzero entry, so all
// results are reproducible and canonical forms can be compared with ==.

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "tss/kfield.hpp"

namespace Eigen {

template <>
struct NumTraits<tss::Scalar> : GenericNumTraits<tss::Scalar> {
  using Real = tss::Scalar;
  using NonInteger = tss::Scalar;
  using Nested = tss::Scalar;
  using Literal = tss::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tss {

using Index = Eigen::Index;

template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

inline bool exact_is_zero(const Scalar& x) { return x.is_zero(); }
inline bool exact_is_zero(const Rational& x) { return sgn(x) == 0; }

template <class T>
struct RowEchelon {
  MatrixX<T> reduced;         // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  RowEchelon<T> out;
  MatrixX<T>& a = out.reduced;
  a = m;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && exact_is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const T inv = T(1) / a(r, c);
    for (Index j = c; j < cols; ++j) {
      if (!exact_is_zero(a(r, j))) a(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || exact_is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!exact_is_zero(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

/// Columns form a basis of the null space (one column per free variable).
template <class Derived>
MatrixX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  MatrixX<T> basis = MatrixX<T>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const Index fc = free[f];
    basis(fc, static_cast<Index>(f)) = T(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const T& v = ech.reduced(static_cast<Index>(r), fc);
      if (!exact_is_zero(v)) basis(ech.pivots[r], static_cast<Index>(f)) = -v;
    }
  }
  return basis;
}

/// Some X with m * X = b, or nullopt if the system is inconsistent.
template <class DerivedA, class DerivedB>
std::optional<MatrixX<typename DerivedA::Scalar>> particular_solution(
    const Eigen::MatrixBase<DerivedA>& m, const Eigen::MatrixBase<DerivedB>& b) {
  using T = typename DerivedA::Scalar;
  const Index n = m.cols(), extra = b.cols();
  MatrixX<T> aug(m.rows(), n + extra);
  aug << m, b;
  const auto ech = row_reduce(aug);
  MatrixX<T> x = MatrixX<T>::Zero(n, extra);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Index p = ech.pivots[r];
    if (p >= n) return std::nullopt;
    x.row(p) = ech.reduced.block(static_cast<Index>(r), n, 1, extra);
  }
  return x;
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  MatrixX<T> a = m;
  const Index n = a.rows();
  T det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && exact_is_zero(a(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const T inv = T(1) / a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (exact_is_zero(a(i, c))) continue;
      const T f = a(i, c) * inv;
      for (Index j = c; j < n; ++j) {
        if (!exact_is_zero(a(c, j))) a(i, j) -= f * a(c, j);
      }
    }
  }
  return det;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!exact_is_zero(m(i, j))) return false;
    }
  }
  return true;
}

inline Matrix identity(Index n) { return Matrix::Identity(n, n); }

/// Block diagonal matrix diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// One bracketed row of exact entries per line, for display.
std::string to_display_string(const Matrix& m);

// ---------------------------------------------------------------------------
// Subspaces

/// A subspace of K^n, stored by its canonical basis: the columns are the
/// nonzero rows of the reduced row echelon form of any spanning set.
/// Two subspaces are equal iff their canonical bases are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  /// The column space of `generators`.
  static Subspace span(const Matrix& generators);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains_vector(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.cols() == b.basis_.cols() &&
           (a.basis_.array() == b.basis_.array()).all();
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
/// The column space of m.
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// True iff v is contained in u.
bool contains(const Subspace& u, const Subspace& v);
/// The image of a subspace under a linear map.
Subspace transport(const Matrix& map, const Subspace& u);
/// Row vectors spanning the annihilator of u: an (n - d) x n matrix N with
/// N v = 0 exactly for v in u.
Matrix annihilator(const Subspace& u);

struct Solution {
  Matrix particular;  // m * particular = b
  Subspace kernel;    // null space of m
};

/// Throws NoSolution if m * X = b is inconsistent, ShapeMismatch on bad shapes.
Solution solve(const Matrix& m, const Matrix& b);

/// Throws Singular when det = 0.
std::pair<Scalar, Matrix> det_inverse(const Matrix& m);
Matrix inverse(const Matrix& m);

// ---------------------------------------------------------------------------
// Polynomials

struct Polynomial {
  std::vector<Scalar> coefficients;  // ascending degree, trimmed

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  bool is_zero() const { return coefficients.empty(); }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Scalar operator()(const Scalar& x) const;
  Matrix operator()(const Matrix& m) const;
  /// Quotient and remainder of division by (x - root).
  std::pair<Polynomial, Scalar> divide_linear(const Scalar& root) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients == b.coefficients;
  }
};

/// Monic characteristic polynomial det(xI - m) by the Faddeev-LeVerrier
/// recurrence.
Polynomial char_poly(const Matrix& m);

// ---------------------------------------------------------------------------
// Matrix spaces, vectorized row-major: entry (r, c) of an R x C matrix is
// coordinate r * C + c.

Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Index rows, Index cols);
/// Basis of a matrix-space subspace as matrices.
std::vector<Matrix> matrix_basis(const Subspace& space, Index rows, Index cols);

/// A homogeneous linear system with sparse rows, solved by exact elimination.
class LinearSystem {
 public:
  explicit LinearSystem(Index unknowns) : unknowns_(unknowns) {}

  Index unknowns() const { return unknowns_; }
  /// Adds the equation sum_j coeff_j * x_{index_j} = 0 (duplicates summed).
  void add_equation(const std::vector<std::pair<Index, Scalar>>& terms);
  /// The full solution space.
  Subspace solution_space() const;
  Index rank() const { return static_cast<Index>(pivots_.size()); }

 private:
  using Row = std::vector<std::pair<Index, Scalar>>;
  Index unknowns_;
  std::vector<std::pair<Index, Row>> pivots_;  // (pivot column, normalized row)
  std::vector<Index> pivot_slot_;              // column -> slot in pivots_ or -1
};

/// All X (n x n) with X * as[i] = bs[i] * X for every i.
Subspace intertwiner_space(const std::vector<Matrix>& as, const std::vector<Matrix>& bs);

/// An invertible element of a matrix space, found by a deterministic sweep
/// followed by seeded pseudo-random combinations; nullopt if none was found.
/// Every returned matrix has an exactly certified nonzero determinant.
std::optional<Matrix> find_invertible(const Subspace& space, Index n);
/// As find_invertible, but throws NoneInvertible.
Matrix invertible_in_space(const Subspace& space, Index n);

/// Seed for the pseudo-random stage (environment variable TSS_SEED).
unsigned long long sweep_seed();

/// Incrementally maintained span with fast membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(Index length) : length_(length) {}
  /// Adds v; returns false if v was already in the span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  Index dim() const { return static_cast<Index>(rows_.size()); }

 private:
  Vector reduce(const Vector& v) const;
  Index length_;
  std::vector<std::pair<Index, Vector>> rows_;  // (pivot, row zero at other pivots)
};

struct AlgebraClosure {
  Index dimension = 0;
  std::vector<Matrix> basis;
};

/// The unital algebra generated by `gens` (all n x n).
AlgebraClosure algebra_closure(const std::vector<Matrix>& gens, Index n);

}  // namespace tss
