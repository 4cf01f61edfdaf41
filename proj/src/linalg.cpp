#include "tss/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace tss {

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

std::string to_display_string(const Matrix& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, 0);
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = identity(ambient);
  return s;
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s;
  s.ambient_ = generators.rows();
  if (generators.cols() == 0) {
    s.basis_ = Matrix(s.ambient_, 0);
    return s;
  }
  const Matrix t = generators.transpose();
  const auto ech = row_reduce(t);
  const Index r = static_cast<Index>(ech.pivots.size());
  s.basis_ = ech.reduced.topRows(r).transpose();
  return s;
}

bool Subspace::contains_vector(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeMismatch("contains_vector: wrong length");
  if (tss::is_zero(v)) return true;
  Matrix aug(ambient_, dim() + 1);
  aug << basis_, v;
  return tss::rank(aug) == dim();
}

Subspace kernel(const Matrix& m) { return Subspace::span(kernel_basis(m)); }

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeMismatch("intersect: ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient_dim());
  Matrix joined(u.ambient_dim(), u.dim() + v.dim());
  joined << u.basis(), -v.basis();
  const Matrix coeffs = kernel_basis(joined);
  return Subspace::span(u.basis() * coeffs.topRows(u.dim()));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeMismatch("sum: ambient mismatch");
  Matrix joined(u.ambient_dim(), u.dim() + v.dim());
  joined << u.basis(), v.basis();
  return Subspace::span(joined);
}

bool contains(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ShapeMismatch("contains: ambient mismatch");
  if (v.dim() > u.dim()) return false;
  return sum(u, v).dim() == u.dim();
}

Subspace transport(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw ShapeMismatch("transport: shape mismatch");
  if (u.is_zero()) return Subspace::zero(map.rows());
  return Subspace::span(map * u.basis());
}

Matrix annihilator(const Subspace& u) {
  if (u.is_zero()) return identity(u.ambient_dim());
  const Matrix t = u.basis().transpose();
  return kernel_basis(t).transpose();
}

Solution solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw ShapeMismatch("solve: row count mismatch");
  auto x = particular_solution(m, b);
  if (!x) throw NoSolution("linear system is inconsistent");
  return {std::move(*x), kernel(m)};
}

std::pair<Scalar, Matrix> det_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("det_inverse: matrix is not square");
  const Index n = m.rows();
  Matrix aug(n, 2 * n);
  aug << m, identity(n);
  // Elimination with a running determinant, then back-substitution.
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && aug(p, c).is_zero()) ++p;
    if (p == n) throw Singular("matrix is singular");
    if (p != c) {
      aug.row(p).swap(aug.row(c));
      det = -det;
    }
    det *= aug(c, c);
    const Scalar inv = aug(c, c).inverse();
    for (Index j = c; j < 2 * n; ++j) {
      if (!aug(c, j).is_zero()) aug(c, j) *= inv;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == c || aug(i, c).is_zero()) continue;
      const Scalar f = aug(i, c);
      for (Index j = c; j < 2 * n; ++j) {
        if (!aug(c, j).is_zero()) aug(i, j) -= f * aug(c, j);
      }
    }
  }
  return {det, aug.rightCols(n)};
}

Matrix inverse(const Matrix& m) { return det_inverse(m).second; }

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coefficients(std::move(coeffs)) {
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (m.rows() != m.cols()) throw ShapeMismatch("polynomial of a non-square matrix");
  Matrix acc = Matrix::Zero(m.rows(), m.cols());
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * m;
    for (Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

std::pair<Polynomial, Scalar> Polynomial::divide_linear(const Scalar& root) const {
  if (coefficients.empty()) return {Polynomial(), Scalar()};
  const std::size_t n = coefficients.size();
  std::vector<Scalar> q(n - 1);
  Scalar carry;
  for (std::size_t k = n; k-- > 0;) {
    const Scalar value = coefficients[k] + carry * root;
    if (k == 0) return {Polynomial(std::move(q)), value};
    q[k - 1] = value;
    carry = value;
  }
  return {Polynomial(std::move(q)), Scalar()};
}

std::string Polynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (coefficients[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coefficients[k].to_string() << ")";
    if (k >= 1) os << "*x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("char_poly: matrix is not square");
  const Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix mk = Matrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    for (Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix amk = a * mk;
    Scalar tr;
    for (Index i = 0; i < n; ++i) tr += amk(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<long>(k));
    mk = amk;
  }
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------

Vector vectorize(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  }
  return v;
}

Matrix unvectorize(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw ShapeMismatch("unvectorize: wrong length");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
  }
  return m;
}

std::vector<Matrix> matrix_basis(const Subspace& space, Index rows, Index cols) {
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(space.dim()));
  for (Index j = 0; j < space.dim(); ++j) {
    out.push_back(unvectorize(space.basis().col(j), rows, cols));
  }
  return out;
}

void LinearSystem::add_equation(const std::vector<std::pair<Index, Scalar>>& terms) {
  if (pivot_slot_.empty()) pivot_slot_.assign(static_cast<std::size_t>(unknowns_), -1);
  std::map<Index, Scalar> row;
  for (const auto& [j, v] : terms) {
    if (j < 0 || j >= unknowns_) throw ShapeMismatch("equation index out of range");
    if (v.is_zero()) continue;
    auto [it, inserted] = row.emplace(j, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
  auto it = row.begin();
  while (it != row.end()) {
    const Index col = it->first;
    const Index slot = pivot_slot_[static_cast<std::size_t>(col)];
    if (slot < 0) {
      ++it;
      continue;
    }
    const Scalar f = it->second;
    for (const auto& [c, v] : pivots_[static_cast<std::size_t>(slot)].second) {
      auto [jt, inserted] = row.emplace(c, Scalar());
      jt->second -= f * v;
      if (jt->second.is_zero()) row.erase(jt);
    }
    it = row.upper_bound(col);
  }
  if (row.empty()) return;
  const Index lead = row.begin()->first;
  const Scalar inv = row.begin()->second.inverse();
  Row normalized;
  normalized.reserve(row.size());
  for (const auto& [c, v] : row) normalized.emplace_back(c, c == lead ? Scalar(1) : v * inv);
  pivot_slot_[static_cast<std::size_t>(lead)] = static_cast<Index>(pivots_.size());
  pivots_.emplace_back(lead, std::move(normalized));
}

Subspace LinearSystem::solution_space() const {
  // Back-substitute so that each pivot row is zero at every other pivot column.
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a].first > pivots_[b].first; });
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns_), false);
  for (const auto& p : pivots_) is_pivot[static_cast<std::size_t>(p.first)] = true;
  std::map<Index, std::map<Index, Scalar>> reduced;  // pivot column -> free-column coefficients
  for (std::size_t idx : order) {
    const auto& [lead, row] = pivots_[idx];
    std::map<Index, Scalar> acc;
    for (const auto& [c, v] : row) {
      if (c == lead) continue;
      if (!is_pivot[static_cast<std::size_t>(c)]) {
        acc[c] += v;
        continue;
      }
      for (const auto& [fc, fv] : reduced.at(c)) acc[fc] -= v * fv;
    }
    for (auto jt = acc.begin(); jt != acc.end();) {
      jt = jt->second.is_zero() ? acc.erase(jt) : std::next(jt);
    }
    reduced.emplace(lead, std::move(acc));
  }
  std::vector<Index> free;
  std::vector<Index> free_slot(static_cast<std::size_t>(unknowns_), -1);
  for (Index c = 0; c < unknowns_; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free_slot[static_cast<std::size_t>(c)] = static_cast<Index>(free.size());
      free.push_back(c);
    }
  }
  Matrix basis = Matrix::Zero(unknowns_, static_cast<Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) basis(free[f], static_cast<Index>(f)) = Scalar(1);
  for (const auto& [lead, coeffs] : reduced) {
    for (const auto& [fc, v] : coeffs) basis(lead, free_slot[static_cast<std::size_t>(fc)]) = -v;
  }
  return Subspace::span(basis);
}

Subspace intertwiner_space(const std::vector<Matrix>& as, const std::vector<Matrix>& bs) {
  if (as.size() != bs.size() || as.empty()) throw ShapeMismatch("intertwiner_space: bad family");
  const Index n = as.front().rows();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i].rows() != n || as[i].cols() != n || bs[i].rows() != n || bs[i].cols() != n) {
      throw ShapeMismatch("intertwiner_space: matrices must share one square size");
    }
  }
  LinearSystem sys(n * n);
  std::vector<std::pair<Index, Scalar>> terms;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const Matrix& a = as[i];
    const Matrix& b = bs[i];
    // (X a - b X)(r, c) = sum_s X(r,s) a(s,c) - sum_s b(r,s) X(s,c)
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        terms.clear();
        for (Index s = 0; s < n; ++s) {
          if (!a(s, c).is_zero()) terms.emplace_back(r * n + s, a(s, c));
          if (!b(r, s).is_zero()) terms.emplace_back(s * n + c, -b(r, s));
        }
        sys.add_equation(terms);
      }
    }
  }
  return sys.solution_space();
}

unsigned long long sweep_seed() {
  if (const char* env = std::getenv("TSS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20240607ULL;
}

std::optional<Matrix> find_invertible(const Subspace& space, Index n) {
  if (space.ambient_dim() != n * n) throw ShapeMismatch("find_invertible: ambient is not n^2");
  const Index m = space.dim();
  if (m == 0) return std::nullopt;
  const std::vector<Matrix> basis = matrix_basis(space, n, n);
  auto certify = [&](const std::vector<long>& coeffs) -> std::optional<Matrix> {
    Matrix x = Matrix::Zero(n, n);
    bool any = false;
    for (Index j = 0; j < m; ++j) {
      const long c = coeffs[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      any = true;
      x += basis[static_cast<std::size_t>(j)] * Scalar(c);
    }
    if (!any) return std::nullopt;
    if (determinant(x).is_zero()) return std::nullopt;
    return x;
  };
  std::vector<long> coeffs(static_cast<std::size_t>(m), 0);
  for (Index j = 0; j < m; ++j) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[static_cast<std::size_t>(j)] = 1;
    if (auto x = certify(coeffs)) return x;
  }
  std::fill(coeffs.begin(), coeffs.end(), 1);
  if (auto x = certify(coeffs)) return x;
  if (m <= 4) {
    std::fill(coeffs.begin(), coeffs.end(), -2);
    while (true) {
      if (auto x = certify(coeffs)) return x;
      Index j = 0;
      while (j < m && coeffs[static_cast<std::size_t>(j)] == 2) {
        coeffs[static_cast<std::size_t>(j)] = -2;
        ++j;
      }
      if (j == m) break;
      ++coeffs[static_cast<std::size_t>(j)];
    }
  }
  std::mt19937_64 rng(sweep_seed());
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& c : coeffs) c = dist(rng);
    if (auto x = certify(coeffs)) return x;
  }
  return std::nullopt;
}

Matrix invertible_in_space(const Subspace& space, Index n) {
  auto x = find_invertible(space, n);
  if (!x) {
    throw NoneInvertible("no invertible element found in a space of dimension " +
                         std::to_string(space.dim()));
  }
  return *x;
}

Vector SpanBuilder::reduce(const Vector& v) const {
  Vector r = v;
  for (const auto& [p, row] : rows_) {
    if (r(p).is_zero()) continue;
    const Scalar f = r(p);
    for (Index j = 0; j < length_; ++j) {
      if (!row(j).is_zero()) r(j) -= f * row(j);
    }
  }
  return r;
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.size() != length_) throw ShapeMismatch("SpanBuilder: wrong length");
  return is_zero(reduce(v));
}

bool SpanBuilder::insert(const Vector& v) {
  if (v.size() != length_) throw ShapeMismatch("SpanBuilder: wrong length");
  Vector r = reduce(v);
  Index p = 0;
  while (p < length_ && r(p).is_zero()) ++p;
  if (p == length_) return false;
  const Scalar inv = r(p).inverse();
  for (Index j = 0; j < length_; ++j) {
    if (!r(j).is_zero()) r(j) *= inv;
  }
  for (auto& [q, row] : rows_) {
    if (row(p).is_zero()) continue;
    const Scalar f = row(p);
    for (Index j = 0; j < length_; ++j) {
      if (!r(j).is_zero()) row(j) -= f * r(j);
    }
  }
  rows_.emplace_back(p, std::move(r));
  return true;
}

AlgebraClosure algebra_closure(const std::vector<Matrix>& gens, Index n) {
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("algebra_closure: wrong size");
  }
  AlgebraClosure out;
  SpanBuilder span(n * n);
  std::deque<Matrix> queue;
  const Matrix one = identity(n);
  if (n == 0) return out;
  span.insert(vectorize(one));
  out.basis.push_back(one);
  queue.push_back(one);
  while (!queue.empty()) {
    const Matrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix p = g * m;
      if (span.insert(vectorize(p))) {
        out.basis.push_back(p);
        queue.push_back(std::move(p));
      }
    }
    if (span.dim() == n * n) break;
  }
  out.dimension = span.dim();
  return out;
}

}  // namespace tss
