#include "tss/core.hpp"

#include <algorithm>
#include <numeric>

namespace tss {

Permutation identity_permutation(int k) {
  Permutation p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

Permutation transposition(int k, int j) {
  Permutation p = identity_permutation(k);
  std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j) + 1]);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> adjacent_word(const Permutation& p) {
  // Peel descents off the right: p = p' o tau_j with fewer inversions.
  Permutation cur = p;
  std::vector<int> found;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (cur[j] > cur[j + 1]) {
        std::swap(cur[j], cur[j + 1]);
        found.push_back(static_cast<int>(j));
        changed = true;
      }
    }
  }
  std::reverse(found.begin(), found.end());
  return found;
}

namespace {

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

void check_witness_shape(const RealizationWitness& w, Index k, Index n) {
  if (static_cast<Index>(w.transpositions.size()) != std::max<Index>(k - 1, 0)) {
    throw ShapeMismatch("witness must hold k - 1 matrices");
  }
  for (const auto& p : w.transpositions) {
    if (p.rows() != n || p.cols() != n) throw ShapeMismatch("witness matrix has the wrong size");
  }
}

// Equations N_{to[i]} X M_{from[i]} = 0 on the n x n unknown X.
void add_transport_equations(LinearSystem& sys, const Subspace& from, const Subspace& to) {
  const Index n = from.ambient_dim();
  const Matrix ann = annihilator(to);
  const Matrix& m = from.basis();
  std::vector<std::pair<Index, Scalar>> terms;
  for (Index a = 0; a < ann.rows(); ++a) {
    for (Index b = 0; b < m.cols(); ++b) {
      terms.clear();
      for (Index r = 0; r < n; ++r) {
        if (ann(a, r).is_zero()) continue;
        for (Index s = 0; s < n; ++s) {
          if (!m(s, b).is_zero()) terms.emplace_back(r * n + s, ann(a, r) * m(s, b));
        }
      }
      sys.add_equation(terms);
    }
  }
}

}  // namespace

bool Tss::degenerate() const {
  if (k <= 1) return true;
  for (const auto& e : elements) {
    if (!same_matrix(e, elements.front())) return false;
  }
  return true;
}

Tss make_tss(std::vector<Matrix> elements, std::optional<RealizationWitness> witness,
             std::vector<Scalar> parameters) {
  Tss t;
  t.k = static_cast<Index>(elements.size());
  t.n = elements.empty() ? 0 : elements.front().rows();
  for (const auto& e : elements) {
    if (e.rows() != t.n || e.cols() != t.n) throw ShapeMismatch("Tss elements must be square of one size");
  }
  t.elements = std::move(elements);
  if (witness) check_witness_shape(*witness, t.k, t.n);
  t.witness = std::move(witness);
  t.parameters = std::move(parameters);
  return t;
}

Tss degenerate_tss(const Matrix& a, Index k) {
  RealizationWitness w;
  for (Index j = 0; j + 1 < k; ++j) w.transpositions.push_back(identity(a.rows()));
  return make_tss(std::vector<Matrix>(static_cast<std::size_t>(k), a), w);
}

bool Arrangement::degenerate() const {
  if (k <= 1) return true;
  return std::all_of(planes.begin(), planes.end(), [&](const Subspace& p) { return p == planes.front(); });
}

Arrangement make_arrangement(std::vector<Subspace> planes, std::optional<RealizationWitness> witness,
                             std::optional<StrongWitness> strong) {
  Arrangement a;
  a.k = static_cast<Index>(planes.size());
  if (!planes.empty()) {
    a.n = planes.front().ambient_dim();
    a.d = planes.front().dim();
  }
  for (const auto& p : planes) {
    if (p.ambient_dim() != a.n || p.dim() != a.d) {
      throw ShapeMismatch("arrangement planes must share ambient space and dimension");
    }
  }
  a.planes = std::move(planes);
  if (witness) check_witness_shape(*witness, a.k, a.n);
  a.witness = std::move(witness);
  if (strong) {
    if (strong->representatives.size() != a.planes.size()) {
      throw ShapeMismatch("strong witness needs one representative per plane");
    }
    for (std::size_t i = 0; i < a.planes.size(); ++i) {
      if (Subspace::span(strong->representatives[i]) != a.planes[i]) {
        throw ShapeMismatch("strong representative does not span its plane");
      }
    }
    check_witness_shape(RealizationWitness{strong->transpositions}, a.k, a.n);
  }
  a.strong = std::move(strong);
  return a;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TotallySymmetric: return "TotallySymmetric";
    case Verdict::NotTotallySymmetric: return "NotTotallySymmetric";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

bool check_witness(const Tss& t, const RealizationWitness& w) {
  if (static_cast<Index>(w.transpositions.size()) != std::max<Index>(t.k - 1, 0)) return false;
  for (std::size_t j = 0; j < w.transpositions.size(); ++j) {
    const Matrix& p = w.transpositions[j];
    if (p.rows() != t.n || p.cols() != t.n) return false;
    if (determinant(p).is_zero()) return false;
    const Permutation tau = transposition(static_cast<int>(t.k), static_cast<int>(j));
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      const Matrix lhs = p * t.elements[i];
      const Matrix rhs = t.elements[static_cast<std::size_t>(tau[i])] * p;
      if (!same_matrix(lhs, rhs)) return false;
    }
  }
  return true;
}

bool check_witness(const Arrangement& a, const RealizationWitness& w) {
  if (static_cast<Index>(w.transpositions.size()) != std::max<Index>(a.k - 1, 0)) return false;
  for (std::size_t j = 0; j < w.transpositions.size(); ++j) {
    const Matrix& p = w.transpositions[j];
    if (p.rows() != a.n || p.cols() != a.n) return false;
    if (determinant(p).is_zero()) return false;
    const Permutation tau = transposition(static_cast<int>(a.k), static_cast<int>(j));
    for (std::size_t i = 0; i < a.planes.size(); ++i) {
      if (transport(p, a.planes[i]) != a.planes[static_cast<std::size_t>(tau[i])]) return false;
    }
  }
  return true;
}

bool check_strong_witness(const StrongWitness& s) {
  const int k = static_cast<int>(s.representatives.size());
  if (static_cast<int>(s.transpositions.size()) != std::max(k - 1, 0)) return false;
  for (int j = 0; j + 1 < k; ++j) {
    const Matrix& p = s.transpositions[static_cast<std::size_t>(j)];
    if (determinant(p).is_zero()) return false;
    const Permutation tau = transposition(k, j);
    for (int i = 0; i < k; ++i) {
      if (!same_matrix(p * s.representatives[static_cast<std::size_t>(i)],
                       s.representatives[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])])) {
        return false;
      }
    }
  }
  return true;
}

Certificate verify_tss(const Tss& t) {
  Certificate cert;
  if (t.degenerate()) {
    cert.verdict = Verdict::Degenerate;
    RealizationWitness w;
    for (Index j = 0; j + 1 < t.k; ++j) w.transpositions.push_back(identity(t.n));
    cert.witness = w;
    return cert;
  }
  if (t.witness && check_witness(t, *t.witness)) {
    cert.verdict = Verdict::TotallySymmetric;
    cert.witness = t.witness;
    return cert;
  }
  RealizationWitness w;
  for (Index j = 0; j + 1 < t.k; ++j) {
    std::vector<Matrix> swapped = t.elements;
    std::swap(swapped[static_cast<std::size_t>(j)], swapped[static_cast<std::size_t>(j) + 1]);
    const auto p = find_invertible(intertwiner_space(t.elements, swapped), t.n);
    if (!p) {
      cert.verdict = Verdict::NotTotallySymmetric;
      cert.failing_transposition = static_cast<int>(j);
      return cert;
    }
    w.transpositions.push_back(*p);
  }
  cert.verdict = Verdict::TotallySymmetric;
  cert.witness = std::move(w);
  return cert;
}

Certificate verify_arrangement(const Arrangement& a) {
  Certificate cert;
  if (a.degenerate()) {
    cert.verdict = Verdict::Degenerate;
    RealizationWitness w;
    for (Index j = 0; j + 1 < a.k; ++j) w.transpositions.push_back(identity(a.n));
    cert.witness = w;
    return cert;
  }
  if (a.witness && check_witness(a, *a.witness)) {
    cert.verdict = Verdict::TotallySymmetric;
    cert.witness = a.witness;
    return cert;
  }
  RealizationWitness w;
  for (Index j = 0; j + 1 < a.k; ++j) {
    const Permutation tau = transposition(static_cast<int>(a.k), static_cast<int>(j));
    LinearSystem sys(a.n * a.n);
    for (std::size_t i = 0; i < a.planes.size(); ++i) {
      add_transport_equations(sys, a.planes[i], a.planes[static_cast<std::size_t>(tau[i])]);
    }
    const auto p = find_invertible(sys.solution_space(), a.n);
    if (!p) {
      cert.verdict = Verdict::NotTotallySymmetric;
      cert.failing_transposition = static_cast<int>(j);
      return cert;
    }
    w.transpositions.push_back(*p);
  }
  cert.verdict = Verdict::TotallySymmetric;
  cert.witness = std::move(w);
  return cert;
}

Matrix realize_permutation(const RealizationWitness& w, const Permutation& sigma, Index n) {
  if (!is_permutation(sigma)) throw ShapeMismatch("realize_permutation: not a permutation");
  if (sigma.size() > w.transpositions.size() + 1) {
    throw MissingWitness("witness covers fewer indices than the permutation");
  }
  Matrix out = identity(n);
  for (int j : adjacent_word(sigma)) out = out * w.transpositions[static_cast<std::size_t>(j)];
  return out;
}

bool is_commutative(const Tss& t) {
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < t.elements.size(); ++j) {
      if (!same_matrix(t.elements[i] * t.elements[j], t.elements[j] * t.elements[i])) return false;
    }
  }
  return true;
}

std::optional<Matrix> isomorphic(const Tss& a, const Tss& b) {
  if (a.n != b.n || a.k != b.k) return std::nullopt;
  if (a.k == 0) return identity(a.n);
  return find_invertible(intertwiner_space(a.elements, b.elements), a.n);
}

Matrix extend_to_basis(const Matrix& basis) {
  const Index n = basis.rows();
  Matrix cur = basis;
  Index r = rank(cur);
  for (Index j = 0; j < n && r < n; ++j) {
    Matrix next(n, cur.cols() + 1);
    next << cur, Vector::Unit(n, j);
    if (rank(next) > r) {
      cur = std::move(next);
      ++r;
    }
  }
  return cur;
}

namespace {

// Coordinates of `map` in the basis f = (w | c), split into the invariant
// block (top left) and the quotient block (bottom right).
std::pair<Matrix, Matrix> split_blocks(const Matrix& map, const Matrix& f, const Matrix& f_inv, Index d) {
  const Matrix local = f_inv * map * f;
  const Index n = map.rows();
  return {local.topLeftCorner(d, d), local.bottomRightCorner(n - d, n - d)};
}

}  // namespace

std::pair<Tss, Tss> restriction_quotient(const Tss& t, const Subspace& w,
                                         const RealizationWitness& witness) {
  if (w.ambient_dim() != t.n) throw ShapeMismatch("restriction_quotient: ambient mismatch");
  check_witness_shape(witness, t.k, t.n);
  for (const auto& a : t.elements) {
    if (!contains(w, transport(a, w))) throw NotInvariant("subspace is not invariant under an element");
  }
  for (const auto& p : witness.transpositions) {
    if (!contains(w, transport(p, w))) throw NotInvariant("subspace is not invariant under the witness");
  }
  const Index d = w.dim();
  const Matrix f = extend_to_basis(w.basis());
  const Matrix f_inv = inverse(f);
  std::vector<Matrix> sub, quo;
  RealizationWitness wsub, wquo;
  for (const auto& a : t.elements) {
    auto [s, q] = split_blocks(a, f, f_inv, d);
    sub.push_back(std::move(s));
    quo.push_back(std::move(q));
  }
  for (const auto& p : witness.transpositions) {
    auto [s, q] = split_blocks(p, f, f_inv, d);
    wsub.transpositions.push_back(std::move(s));
    wquo.transpositions.push_back(std::move(q));
  }
  return {make_tss(std::move(sub), wsub, t.parameters), make_tss(std::move(quo), wquo, t.parameters)};
}

Arrangement dual_arrangement(const Arrangement& a) {
  std::vector<Subspace> planes;
  for (const auto& p : a.planes) planes.push_back(Subspace::span(annihilator(p).transpose()));
  std::optional<RealizationWitness> w;
  if (a.witness) {
    w.emplace();
    for (const auto& p : a.witness->transpositions) w->transpositions.push_back(inverse(p).transpose());
  }
  Arrangement out = make_arrangement(std::move(planes), std::move(w));
  if (a.k == 0) out.n = a.n;
  return out;
}

Arrangement reduce_arrangement(const Arrangement& a) {
  if (a.planes.empty()) return a;
  Subspace q = a.planes.front();
  for (const auto& p : a.planes) q = intersect(q, p);
  if (q.is_zero()) return a;
  const Index qd = q.dim();
  const Matrix f = extend_to_basis(q.basis());
  const Matrix f_inv = inverse(f);
  const Index m = a.n - qd;
  std::vector<Subspace> planes;
  for (const auto& p : a.planes) {
    const Matrix coords = f_inv * p.basis();
    planes.push_back(Subspace::span(coords.bottomRows(m)));
  }
  std::optional<RealizationWitness> w;
  if (a.witness) {
    w.emplace();
    for (const auto& p : a.witness->transpositions) w->transpositions.push_back(split_blocks(p, f, f_inv, qd).second);
  }
  return make_arrangement(std::move(planes), std::move(w));
}

Stabilizer stabilizer_dimension(const Arrangement& a) {
  LinearSystem sys(a.n * a.n);
  for (const auto& p : a.planes) add_transport_equations(sys, p, p);
  const Subspace space = sys.solution_space();
  return {space.dim(), matrix_basis(space, a.n, a.n)};
}

HalfDimNormalForm half_dim_normal_form(const Arrangement& a) {
  if (a.n != 2 * a.d) throw ShapeMismatch("half_dim_normal_form: planes must have half dimension");
  if (a.k < 3) throw ShapeMismatch("half_dim_normal_form: need at least three planes");
  for (Index i = 0; i < a.k; ++i) {
    for (Index j = i + 1; j < a.k; ++j) {
      if (!sum(a.planes[static_cast<std::size_t>(i)], a.planes[static_cast<std::size_t>(j)]).is_full()) {
        throw NotComplementary("planes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " do not span the whole space");
      }
    }
  }
  const Index d = a.d;
  const Matrix& m1 = a.planes[0].basis();
  const Matrix& m2 = a.planes[1].basis();
  const Matrix& m3 = a.planes[2].basis();
  Matrix m12(a.n, 2 * d);
  m12 << m1, m2;
  const Matrix xy = solve(m12, m3).particular;
  Matrix s(a.n, 2 * d);
  s << m1 * xy.topRows(d), m2 * xy.bottomRows(d);
  const Matrix s_inv = inverse(s);
  std::vector<Matrix> elements;
  for (Index i = 3; i < a.k; ++i) {
    const Matrix uv = s_inv * a.planes[static_cast<std::size_t>(i)].basis();
    elements.push_back(uv.topRows(d) * inverse(uv.bottomRows(d)));
  }
  HalfDimNormalForm out{s, make_tss(std::move(elements))};
  out.tss.n = d;
  return out;
}

std::vector<InvolutionCheck> involution_checks(const Tss& t) {
  std::vector<InvolutionCheck> out;
  for (const auto& a : t.elements) {
    const Matrix a_inv = det_inverse(a).second;
    const Matrix comp = identity(a.rows()) - a;
    InvolutionCheck c;
    c.inverse_conjugate = find_invertible(intertwiner_space({a}, {a_inv}), a.rows()).has_value();
    c.complement_conjugate = find_invertible(intertwiner_space({a}, {comp}), a.rows()).has_value();
    out.push_back(c);
  }
  return out;
}

Tss suspension(const Arrangement& a, const Scalar& lambda) {
  if (!a.strong || !check_strong_witness(*a.strong)) {
    throw NoStrongWitness("suspension needs a valid strong witness");
  }
  const Index n = a.n, d = a.d;
  std::vector<Matrix> elements;
  for (const auto& m : a.strong->representatives) {
    Matrix e = Matrix::Zero(n + d, n + d);
    for (Index i = 0; i < n + d; ++i) e(i, i) = lambda;
    e.topRightCorner(n, d) = m;
    elements.push_back(std::move(e));
  }
  RealizationWitness w;
  for (const auto& p : a.strong->transpositions) w.transpositions.push_back(direct_sum(p, identity(d)));
  return make_tss(std::move(elements), w, {lambda});
}

}  // namespace tss
