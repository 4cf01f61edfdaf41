#include "tss/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tss/errors.hpp"

namespace tss {

namespace {

Matrix shifted(const Matrix& a, const Scalar& lambda) {
  Matrix m = a;
  for (Index i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
  return m;
}

std::vector<Scalar> distinct(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end(), scalar_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool column_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
}

std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), scalar_less);
  return v;
}

// Smallest subspace containing v and stable under every matrix in gens.
Subspace cyclic_span(const Vector& v, const std::vector<Matrix>& gens) {
  const Index n = v.size();
  SpanBuilder span(n);
  std::vector<Vector> queue;
  if (span.insert(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Vector w = g * queue[head];
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  Matrix basis(n, static_cast<Index>(queue.size()));
  for (std::size_t j = 0; j < queue.size(); ++j) basis.col(static_cast<Index>(j)) = queue[j];
  return Subspace::span(basis);
}

}  // namespace

Subspace generalized_eigenspace(const Matrix& a, const Scalar& lambda, Index c) {
  const Matrix n = shifted(a, lambda);
  Matrix p = n;
  for (Index j = 1; j < c; ++j) p = p * n;
  return kernel(p);
}

std::vector<Index> EigenFiltration::dims() const {
  std::vector<Index> out;
  for (const auto& s : spaces) out.push_back(s.dim());
  return out;
}

bool EigenFiltration::jordan_inequalities() const {
  const auto d = dims();
  std::vector<Index> step;
  Index prev = 0;
  for (Index x : d) {
    step.push_back(x - prev);
    prev = x;
  }
  for (std::size_t c = 0; c < step.size(); ++c) {
    if (step[c] < 0) return false;
    if (c + 1 < step.size() && step[c] < step[c + 1]) return false;
    if (d[c] < static_cast<Index>(c + 1) * step[c]) return false;
  }
  return true;
}

EigenFiltration filtration(const Matrix& a, const Scalar& lambda) {
  EigenFiltration f;
  f.eigenvalue = lambda;
  const Matrix n = shifted(a, lambda);
  Matrix p = n;
  for (Index c = 1; c <= a.rows() + 1; ++c) {
    Subspace e = kernel(p);
    if (!f.spaces.empty() && e.dim() == f.spaces.back().dim()) break;
    f.spaces.push_back(std::move(e));
    p = p * n;
  }
  return f;
}

Subspace jfold(const Tss& t, const Scalar& lambda, Index c, const std::vector<int>& subset) {
  Subspace out = Subspace::full(t.n);
  for (int i : subset) {
    out = intersect(out, generalized_eigenspace(t.elements[static_cast<std::size_t>(i)], lambda, c));
    if (out.is_zero()) break;
  }
  return out;
}

DepthProfile depth_profile(const Tss& t, const Scalar& lambda) {
  const int k = static_cast<int>(t.k);
  std::vector<Subspace> single;
  bool found = false;
  for (const auto& a : t.elements) {
    single.push_back(kernel(shifted(a, lambda)));
    found = found || !single.back().is_zero();
  }
  if (!found) throw NotAnEigenvalue(lambda.to_string() + " is not an eigenvalue of any element");

  auto fold = [&](const std::vector<int>& s) {
    Subspace out = Subspace::full(t.n);
    for (int i : s) out = intersect(out, single[static_cast<std::size_t>(i)]);
    return out.dim();
  };

  DepthProfile p;
  p.eigenvalue = lambda;
  for (int j = 1; j <= k; ++j) {
    std::vector<int> first(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) first[static_cast<std::size_t>(i)] = i;
    const Index m = fold(first);
    p.mu.push_back(m);
    if (m > 0) p.depth = j;
    if (k <= 5) {
      for (const auto& s : subsets_of(k, j)) {
        if (fold(s) != m) p.subset_independent = false;
      }
    }
  }
  return p;
}

bool is_direct_sum(const std::vector<Subspace>& pieces) {
  if (pieces.empty()) return true;
  Subspace total = Subspace::zero(pieces.front().ambient_dim());
  Index dims = 0;
  for (const auto& s : pieces) {
    total = sum(total, s);
    dims += s.dim();
  }
  return total.dim() == dims;
}

std::vector<Scalar> default_pool() {
  std::vector<Scalar> pool;
  for (long r = -3; r <= 3; ++r) pool.emplace_back(r);
  pool.push_back(constants::zeta());
  pool.push_back(constants::zeta_inv());
  return pool;
}

EigenvalueDiscovery discover_eigenvalues(const Matrix& a, const std::vector<Scalar>& pool) {
  std::vector<Scalar> candidates = default_pool();
  candidates.insert(candidates.end(), pool.begin(), pool.end());
  candidates = distinct(std::move(candidates));

  EigenvalueDiscovery out;
  Polynomial p = char_poly(a);
  for (const auto& c : candidates) {
    while (p.degree() >= 1) {
      auto [q, r] = p.divide_linear(c);
      if (!r.is_zero()) break;
      out.values.push_back(c);
      p = std::move(q);
    }
  }
  const auto& co = p.coefficients;
  if (p.degree() == 1) {
    out.values.push_back(-co[0] / co[1]);
  } else if (p.degree() == 2) {
    const Scalar disc = co[1] * co[1] - Scalar(4) * co[2] * co[0];
    try {
      const Scalar s = sqrt_restricted(disc);
      const Scalar den = (Scalar(2) * co[2]).inverse();
      out.values.push_back((-co[1] + s) * den);
      out.values.push_back((-co[1] - s) * den);
    } catch (const NotRepresentable&) {
      out.residual = p;
    }
  } else if (p.degree() > 2) {
    out.residual = p;
  }
  out.complete = out.residual.is_zero();
  std::sort(out.values.begin(), out.values.end(), scalar_less);
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Irreducible: return "Irreducible";
    case Classification::ReducibleWitness: return "ReducibleWitness";
    case Classification::NonDiagonalizable: return "NonDiagonalizable";
    case Classification::NotClassified: return "NotClassified";
  }
  return "?";
}

ClassificationResult classify_commutative(const Tss& t) {
  if (!is_commutative(t)) throw NotCommutative("classify_commutative needs commuting elements");
  ClassificationResult res;
  const Index n = t.n;

  std::vector<std::vector<Scalar>> spectra;
  for (const auto& a : t.elements) {
    auto d = discover_eigenvalues(a, t.parameters);
    if (!d.complete) return res;
    spectra.push_back(distinct(std::move(d.values)));
  }

  struct Block {
    Matrix basis;
    std::vector<Scalar> column;
  };
  std::vector<Block> blocks{{identity(n), {}}};
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    std::vector<Block> next;
    for (const auto& b : blocks) {
      const Matrix r = solve(b.basis, t.elements[i] * b.basis).particular;
      Index covered = 0;
      for (const auto& lambda : spectra[i]) {
        const Subspace e = kernel(shifted(r, lambda));
        if (e.is_zero()) continue;
        covered += e.dim();
        auto column = b.column;
        column.push_back(lambda);
        next.push_back({b.basis * e.basis(), std::move(column)});
      }
      if (covered < b.basis.cols()) {
        res.verdict = Classification::NonDiagonalizable;
        return res;
      }
    }
    blocks = std::move(next);
  }
  for (const auto& b : blocks) res.columns.emplace_back(b.column, b.basis.cols());
  if (blocks.empty()) return res;

  const std::vector<Scalar> orbit = sorted(blocks.front().column);
  bool single_orbit = true, lines = true;
  std::set<std::vector<Scalar>, decltype(&column_less)> seen(&column_less);
  for (const auto& b : blocks) {
    if (sorted(b.column) != orbit) single_orbit = false;
    if (b.basis.cols() != 1) lines = false;
    seen.insert(b.column);
  }
  const Weight w{orbit};
  if (single_orbit && lines && seen.size() == blocks.size() &&
      static_cast<Index>(blocks.size()) == multinomial(w.partition())) {
    res.verdict = Classification::Irreducible;
    res.weight = w;
    res.partition = w.partition_string();
    return res;
  }

  res.verdict = Classification::ReducibleWitness;
  if (!single_orbit) {
    Matrix gens(n, 0);
    for (const auto& b : blocks) {
      if (sorted(b.column) != orbit) continue;
      Matrix g(n, gens.cols() + b.basis.cols());
      g << gens, b.basis;
      gens = std::move(g);
    }
    res.subspace = Subspace::span(gens);
    return res;
  }
  std::optional<RealizationWitness> witness;
  if (t.witness && check_witness(t, *t.witness)) {
    witness = t.witness;
  } else {
    witness = verify_tss(t).witness;
  }
  if (witness) {
    Subspace s = cyclic_span(blocks.front().basis.col(0), witness->transpositions);
    if (!s.is_full()) res.subspace = std::move(s);
  }
  return res;
}

IrreducibilityCertificate irreducibility_certificate(const Tss& t, const RealizationWitness& w) {
  IrreducibilityCertificate cert;
  const Index n = t.n;
  std::vector<Matrix> gens = t.elements;
  gens.insert(gens.end(), w.transpositions.begin(), w.transpositions.end());
  const AlgebraClosure closure = algebra_closure(gens, n);
  cert.dimension = closure.dimension;
  cert.full_algebra = closure.dimension == n * n;
  if (cert.full_algebra || t.elements.empty()) return cert;

  const Matrix& a = t.elements.front();
  const auto found = discover_eigenvalues(a, t.parameters);
  for (const auto& lambda : distinct(found.values)) {
    const Subspace e = kernel(shifted(a, lambda));
    for (Index j = 0; j < e.dim(); ++j) {
      const Vector v = e.basis().col(j);
      Matrix images(n, static_cast<Index>(closure.basis.size()));
      for (std::size_t m = 0; m < closure.basis.size(); ++m) {
        images.col(static_cast<Index>(m)) = closure.basis[m] * v;
      }
      Subspace s = Subspace::span(images);
      if (!s.is_zero() && !s.is_full()) {
        cert.invariant_subspace = std::move(s);
        return cert;
      }
    }
  }
  return cert;
}

std::pair<Scalar, Scalar> braid_coefficients(Index n) {
  if (n < 3) throw BadParams("braid_coefficients needs n >= 3");
  const Index k = n - 1;
  const Scalar c = Scalar::rational(2, static_cast<long>(n - 2));
  auto reflection = [&](Index i) {
    Matrix alpha = Matrix::Constant(1, k, Scalar(-1));
    alpha(0, i) = Scalar(static_cast<long>(k - 1));
    Matrix m = identity(k);
    m.row(i) -= c * alpha.row(0);
    return m;
  };
  const Matrix a1 = reflection(0), a2 = reflection(1);
  return {(a1 * a2 * a1)(0, 0), (a2 * a1 * a2)(0, 0)};
}

Report rep_obstruction_suite() {
  Report r;
  r.title = "low-dimensional representation obstructions";
  for (Index n = 3; n <= 6; ++n) {
    const auto [x, y] = braid_coefficients(n);
    const std::string tag = "braid coefficients n=" + std::to_string(n);
    r.add(boolean_check(tag, "e1-coefficients of A1A2A1(e1) and A2A1A2(e1) agree iff n = 4",
                        (x == y) == (n == 4), x.to_string() + " vs " + y.to_string()));
    if (n >= 4) {
      const Tss t = ncsimplex(n - 1, Scalar(-1), Scalar(1));
      const Matrix& a1 = t.elements[0];
      const Matrix& a2 = t.elements[1];
      Matrix lhs(1, 2), rhs(1, 2);
      lhs << (a1 * a2 * a1)(0, 0), (a2 * a1 * a2)(0, 0);
      rhs << x, y;
      r.add(equality_check(tag + " quotient coordinates",
                           "the same coefficients read off the reflection set in K^(n-2)", lhs, rhs));
    }
  }
  const Tss s5 = tilde_sigma5_construction(Scalar(1), Scalar(-1));
  const auto printed = tilde_sigma5_printed_pair();
  r.add(equality_check("double cover construction A1", "A1 of the (1, -1) construction as printed",
                       s5.elements[0], printed[0]));
  r.add(equality_check("double cover construction A2", "A2 of the (1, -1) construction as printed",
                       s5.elements[1], printed[1]));
  const Matrix a12 = s5.elements[0] * s5.elements[1];
  const Matrix cube = a12 * a12 * a12;
  Check braid = boolean_check("double cover construction braid", "(A1 A2)^3 != I",
                              !is_zero(Matrix(cube - identity(4))));
  braid.evidence = {{"(A1 A2)^3", cube}};
  r.add(std::move(braid));
  return r;
}

Report s5_nonexistence_suite() {
  Report r;
  r.title = "nonexistence of half-dimensional sets";
  const auto b = tilde_sigma5_blocks();
  Matrix target(2, 2);
  target << Scalar(0), constants::sqrt2(), -constants::sqrt2(), Scalar(0);

  Check literal = equality_check("s5 pair identity as displayed",
                                 "P45 Q34 - P34 Q34 = (0 sqrt2; -sqrt2 0)",
                                 Matrix(b.p45 * b.q34 - b.p34 * b.q34), target);
  literal.informational = true;
  literal.detail = "does not hold as displayed; see the corrected form";
  r.add(std::move(literal));
  r.add(equality_check("s5 pair identity corrected", "P45 Q34 - P34 P45 = (0 sqrt2; -sqrt2 0)",
                       Matrix(b.p45 * b.q34 - b.p34 * b.p45), target));
  const Matrix other = b.p34 * b.p45 * inverse(b.q34);
  Check distinct_conj = boolean_check("s5 pair conjugator mismatch", "P45 != P34 P45 Q34^-1",
                                      !is_zero(Matrix(b.p45 - other)));
  if (!distinct_conj.passed) distinct_conj.evidence = {{"P45", b.p45}, {"P34 P45 Q34^-1", other}};
  r.add(std::move(distinct_conj));

  const auto x = k3n2_matrices(constants::zeta(), constants::zeta_inv());
  const Matrix& a4 = x[0];
  const Matrix& a6 = x[2];
  Matrix yc(2, 2), yd(2, 2);
  yc << Scalar(1), Scalar(1), Scalar(-1), Scalar(-1);
  yd << Scalar(1), Scalar(-1), Scalar(1), Scalar(-1);
  const Matrix rc = a6 * yc * a4 - a4 * yc;
  const Matrix rd = a6 * yd * a4 - a4 * yd;
  Matrix system(4, 2);
  system.col(0) = vectorize(rc);
  system.col(1) = vectorize(rd);
  Matrix lead(1, 2), printed(1, 2);
  lead << rc(0, 0), rd(0, 0);
  printed << parse_scalar("(1 - 2*sqrt3*i)/2"), parse_scalar("(-2 + sqrt3*i)/2");
  r.add(equality_check("s5 pair cd system leading entry",
                       "(1,1) entry is ((1 - 2 sqrt3 i) c + (-2 + sqrt3 i) d)/2", lead, printed));
  Check rk = boolean_check("s5 pair cd system rank", "the (c, d) system has rank 2",
                           rank(system) == 2);
  if (!rk.passed) rk.evidence = {{"system", system}};
  r.add(std::move(rk));
  r.add(boolean_check("s5 pair cd system trivial", "the only solution is c = d = 0",
                      kernel(system).is_zero()));
  return r;
}

}  // namespace tss
