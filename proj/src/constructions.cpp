#include "tss/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tss {

namespace {

Scalar sc(const char* text) { return parse_scalar(text); }

Matrix mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix diagonal(const std::vector<Scalar>& values) {
  const Index n = static_cast<Index>(values.size());
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

Matrix blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  m << a, b, c, d;
  return m;
}

}  // namespace

Matrix permutation_matrix(const Permutation& sigma) {
  const Index n = static_cast<Index>(sigma.size());
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) m(sigma[static_cast<std::size_t>(j)], j) = Scalar(1);
  return m;
}

Tss standard(Index k, const Scalar& lambda, const Scalar& nu) {
  if (lambda == nu) throw EqualEigenvalues("standard: lambda must differ from nu");
  if (k < 1) throw BadParams("standard: k must be positive");
  std::vector<Matrix> elements;
  for (Index i = 0; i < k; ++i) {
    std::vector<Scalar> d(static_cast<std::size_t>(k), lambda);
    d[static_cast<std::size_t>(i)] = nu;
    elements.push_back(diagonal(d));
  }
  RealizationWitness w;
  for (int j = 0; j + 1 < k; ++j) w.transpositions.push_back(permutation_matrix(transposition(static_cast<int>(k), j)));
  return make_tss(std::move(elements), w, {lambda, nu});
}

// ---------------------------------------------------------------------------

std::vector<Index> Weight::partition() const {
  std::map<Scalar, Index, ScalarLess> counts;
  for (const auto& v : values) ++counts[v];
  std::vector<Index> parts;
  for (const auto& [v, c] : counts) parts.push_back(c);
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::string Weight::partition_string() const { return tss::partition_string(partition()); }

Weight Weight::canonical() const {
  Weight w = *this;
  std::sort(w.values.begin(), w.values.end(), ScalarLess());
  return w;
}

std::string partition_string(const std::vector<Index>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "≤";
    out += std::to_string(parts[i]);
  }
  return out;
}

Index multinomial(const std::vector<Index>& parts) {
  Index total = 0;
  mpz_class result = 1;
  for (Index p : parts) {
    for (Index j = 1; j <= p; ++j) {
      ++total;
      result *= total;
      result /= j;
    }
  }
  return static_cast<Index>(result.get_si());
}

std::vector<std::vector<Index>> partitions_of(Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index remaining, Index min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (Index p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, 1);
  return out;
}

Weight weight_for_partition(const std::vector<Index>& parts) {
  Weight w;
  long value = 1;
  for (Index p : parts) {
    for (Index j = 0; j < p; ++j) w.values.emplace_back(value);
    ++value;
  }
  return w;
}

Tss partition_construction(const Weight& w) {
  const int k = static_cast<int>(w.k());
  if (k == 0) throw BadParams("partition_construction: empty weight");
  std::vector<std::vector<Scalar>> functions;
  Permutation sigma = identity_permutation(k);
  do {
    std::vector<Scalar> f(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = w.values[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
    if (std::find(functions.begin(), functions.end(), f) == functions.end()) functions.push_back(std::move(f));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const Index dim = static_cast<Index>(functions.size());
  std::vector<Matrix> elements;
  for (int i = 0; i < k; ++i) {
    std::vector<Scalar> d;
    for (const auto& f : functions) d.push_back(f[static_cast<std::size_t>(i)]);
    elements.push_back(diagonal(d));
  }
  // tau acts by f -> f o tau^-1; for an adjacent transposition that swaps two entries.
  RealizationWitness witness;
  for (int j = 0; j + 1 < k; ++j) {
    Matrix p = Matrix::Zero(dim, dim);
    for (Index c = 0; c < dim; ++c) {
      std::vector<Scalar> g = functions[static_cast<std::size_t>(c)];
      std::swap(g[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j) + 1]);
      const auto it = std::find(functions.begin(), functions.end(), g);
      p(static_cast<Index>(it - functions.begin()), c) = Scalar(1);
    }
    witness.transpositions.push_back(std::move(p));
  }
  std::vector<Scalar> params = w.values;
  std::sort(params.begin(), params.end(), ScalarLess());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return make_tss(std::move(elements), witness, std::move(params));
}

Tss permutation_type(const std::vector<Scalar>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) throw NotInjective("permutation_type: values must be distinct");
    }
  }
  return partition_construction(Weight{values});
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> subsets_of(int total, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < total; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Permutation shuffle_representative(const std::vector<int>& subset, int total) {
  const int p = static_cast<int>(subset.size());
  const int k = total - p;
  Permutation sigma(static_cast<std::size_t>(total));
  int low = 0, high = k;
  for (int i = 0; i < total; ++i) {
    const bool in = std::find(subset.begin(), subset.end(), i) != subset.end();
    sigma[static_cast<std::size_t>(i)] = in ? high++ : low++;
  }
  return sigma;
}

Tss induction(const Tss& t, Index p, const Scalar& lambda) {
  if (p < 1) throw BadParams("induction: p must be positive");
  RealizationWitness base;
  if (t.witness) {
    base = *t.witness;
  } else if (t.degenerate()) {
    for (Index j = 0; j + 1 < t.k; ++j) base.transpositions.push_back(identity(t.n));
  } else {
    throw MissingWitness("induction needs a realization witness");
  }
  const int k = static_cast<int>(t.k);
  const int total = k + static_cast<int>(p);
  const auto subsets = subsets_of(total, static_cast<int>(p));
  const Index blocks_count = static_cast<Index>(subsets.size());
  const Index n = t.n, dim = blocks_count * n;
  std::map<std::vector<int>, Index> slot;
  std::vector<Permutation> reps;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    slot[subsets[s]] = static_cast<Index>(s);
    reps.push_back(shuffle_representative(subsets[s], total));
  }
  const Matrix lambda_block = identity(n) * lambda;
  auto element = [&](int j) -> const Matrix& {
    return j < k ? t.elements[static_cast<std::size_t>(j)] : lambda_block;
  };
  std::vector<Matrix> elements;
  for (int i = 0; i < total; ++i) {
    Matrix a = Matrix::Zero(dim, dim);
    for (Index s = 0; s < blocks_count; ++s) {
      a.block(s * n, s * n, n, n) = element(reps[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]);
    }
    elements.push_back(std::move(a));
  }
  RealizationWitness witness;
  for (int j = 0; j + 1 < total; ++j) {
    const Permutation tau = transposition(total, j);
    Matrix m = Matrix::Zero(dim, dim);
    for (Index s = 0; s < blocks_count; ++s) {
      std::vector<int> image;
      for (int v : subsets[static_cast<std::size_t>(s)]) image.push_back(tau[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      const Index target = slot.at(image);
      const Permutation pi = compose(reps[static_cast<std::size_t>(target)],
                                     compose(tau, inverse_permutation(reps[static_cast<std::size_t>(s)])));
      const Permutation pi_low(pi.begin(), pi.begin() + k);
      m.block(target * n, s * n, n, n) = k > 0 ? realize_permutation(base, pi_low, n) : identity(n);
    }
    witness.transpositions.push_back(std::move(m));
  }
  std::vector<Scalar> params = t.parameters;
  params.push_back(lambda);
  return make_tss(std::move(elements), witness, std::move(params));
}

// ---------------------------------------------------------------------------

namespace {

// e_1, ..., e_n, -(e_1 + ... + e_n) as columns.
std::vector<Matrix> simplex_vectors(Index n) {
  std::vector<Matrix> out;
  for (Index i = 0; i < n; ++i) out.push_back(Vector::Unit(n, i));
  out.push_back(Matrix::Constant(n, 1, Scalar(-1)));
  return out;
}

RealizationWitness simplex_witness(Index n) {
  RealizationWitness w;
  for (Index j = 0; j + 1 < n; ++j) {
    w.transpositions.push_back(permutation_matrix(transposition(static_cast<int>(n), static_cast<int>(j))));
  }
  if (n >= 1) {
    Matrix last = identity(n);
    last.col(n - 1) = Vector::Constant(n, Scalar(-1));
    w.transpositions.push_back(last);
  }
  return w;
}

}  // namespace

Arrangement simplex_arrangement(Index n) {
  if (n < 1) throw BadParams("simplex: n must be positive");
  const auto reps = simplex_vectors(n);
  std::vector<Subspace> planes;
  for (const auto& m : reps) planes.push_back(Subspace::span(m));
  const RealizationWitness w = simplex_witness(n);
  return make_arrangement(std::move(planes), w, StrongWitness{reps, w.transpositions});
}

Matrix simplex_functionals(Index n) {
  Matrix a = Matrix::Constant(n + 1, n, Scalar(-1));
  for (Index i = 0; i < n; ++i) a(i, i) = Scalar(static_cast<long>(n));
  return a;
}

Arrangement dual_simplex_arrangement(Index n) {
  if (n < 1) throw BadParams("dual simplex: n must be positive");
  const Matrix alpha = simplex_functionals(n);
  std::vector<Subspace> planes;
  for (Index i = 0; i <= n; ++i) planes.push_back(kernel(alpha.row(i)));
  return make_arrangement(std::move(planes), simplex_witness(n));
}

Matrix dualizing_map(Index n) { return identity(n) + Matrix::Constant(n, n, Scalar(1)); }

void check_system(const DecompositionSystem& d) {
  if (static_cast<Index>(d.subspaces.size()) != d.k) throw ShapeMismatch("system: wrong row count");
  for (const auto& row : d.subspaces) {
    if (static_cast<Index>(row.size()) != d.parts) throw ShapeMismatch("system: wrong part count");
    Index total = 0;
    Subspace s = Subspace::zero(d.n);
    for (const auto& w : row) {
      if (w.ambient_dim() != d.n) throw ShapeMismatch("system: ambient mismatch");
      total += w.dim();
      s = sum(s, w);
    }
    if (total != d.n || !s.is_full()) throw NotComplementary("system row is not a direct-sum decomposition");
  }
}

bool check_system_witness(const DecompositionSystem& d) {
  if (static_cast<Index>(d.witness.transpositions.size()) != std::max<Index>(d.k - 1, 0)) return false;
  for (std::size_t j = 0; j < d.witness.transpositions.size(); ++j) {
    const Matrix& p = d.witness.transpositions[j];
    if (determinant(p).is_zero()) return false;
    const Permutation tau = transposition(static_cast<int>(d.k), static_cast<int>(j));
    for (std::size_t i = 0; i < d.subspaces.size(); ++i) {
      for (std::size_t c = 0; c < d.subspaces[i].size(); ++c) {
        if (transport(p, d.subspaces[i][c]) != d.subspaces[static_cast<std::size_t>(tau[i])][c]) return false;
      }
    }
  }
  return true;
}

DecompositionSystem simplex_system(Index n) {
  const Arrangement lines = simplex_arrangement(n);
  const Arrangement hyper = dual_simplex_arrangement(n);
  DecompositionSystem d;
  d.n = n;
  d.k = n + 1;
  d.parts = 2;
  for (Index i = 0; i <= n; ++i) {
    d.subspaces.push_back({lines.planes[static_cast<std::size_t>(i)], hyper.planes[static_cast<std::size_t>(i)]});
  }
  d.witness = *lines.witness;
  return d;
}

Tss eigenspace_construction(const DecompositionSystem& d, const std::vector<Scalar>& eigenvalues) {
  if (static_cast<Index>(eigenvalues.size()) != d.parts) throw BadParams("one eigenvalue per part is required");
  for (std::size_t a = 0; a < eigenvalues.size(); ++a) {
    for (std::size_t b = a + 1; b < eigenvalues.size(); ++b) {
      if (eigenvalues[a] == eigenvalues[b]) throw DuplicateEigenvalue("eigenvalues must be distinct");
    }
  }
  check_system(d);
  std::vector<Matrix> elements;
  for (const auto& row : d.subspaces) {
    Matrix s(d.n, d.n);
    std::vector<Scalar> diag;
    Index col = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      s.middleCols(col, row[c].dim()) = row[c].basis();
      col += row[c].dim();
      for (Index r = 0; r < row[c].dim(); ++r) diag.push_back(eigenvalues[c]);
    }
    elements.push_back(s * diagonal(diag) * inverse(s));
  }
  return make_tss(std::move(elements), d.witness, eigenvalues);
}

Tss ncsimplex(Index k, const Scalar& lambda, const Scalar& mu) {
  if (lambda == mu) throw EqualEigenvalues("ncsimplex: lambda must differ from mu");
  if (k < 2) throw BadParams("ncsimplex: k must be at least 2");
  return eigenspace_construction(simplex_system(k - 1), {lambda, mu});
}

std::vector<Matrix> k3n2_matrices(const Scalar& lambda, const Scalar& mu) {
  const Scalar half = Scalar::rational(1, 2);
  const Scalar d = (mu - lambda) * half;
  return {mat2(lambda, d, 0, mu), mat2(mu, 0, d, lambda),
          mat2((lambda + mu) * half, -d, -d, (lambda + mu) * half)};
}

// ---------------------------------------------------------------------------

Sigma5Blocks tilde_sigma5_blocks() {
  const Scalar z = constants::zeta();
  const Scalar z2 = z * z;
  Sigma5Blocks b;
  b.p12 = mat2(0, -1, 1, 0);
  b.p23 = b.p12;
  b.p34 = mat2(0, -z2, -z, 0);
  b.q34 = mat2(0, -z, -z2, 0);
  const Scalar c = sc("i/sqrt3");
  b.p45 = mat2(c * constants::sqrt2(), c, c, -c * constants::sqrt2());
  return b;
}

std::array<Matrix, 4> tilde_sigma5_rep() {
  const Sigma5Blocks b = tilde_sigma5_blocks();
  const Matrix z = Matrix::Zero(2, 2);
  return {blocks(z, b.p12, b.p12, z), blocks(b.p23, -b.p23, z, -b.p23), blocks(b.p34, z, z, b.q34),
          blocks(b.p45, z, z, b.p45)};
}

std::array<Matrix, 2> tilde_sigma5_normal_matrices() {
  const Matrix a4 = mat2(constants::zeta(), 0, 0, constants::zeta_inv());
  const Matrix a5 = mat2(sc("(3 + i*sqrt3)/6"), sc("sqrt2*i/sqrt3"), sc("sqrt2*i/sqrt3"), sc("(3 - i*sqrt3)/6"));
  return {a4, a5};
}

Matrix tilde_sigma5_complement() {
  Matrix m(4, 2);
  m << sc("i/(2*sqrt6)"), sc("2*i/(sqrt3 + 3*i)"), sc("2/(3 + i*sqrt3)"), sc("i/(2*sqrt6)"), Scalar(0), Scalar(1),
      Scalar(1), Scalar(0);
  return m;
}

Matrix tilde_sigma5_transport(int i) {
  const auto t = tilde_sigma5_rep();
  Matrix s = identity(4);
  for (int j = 0; j < i; ++j) s = t[static_cast<std::size_t>(j)] * s;
  return s;
}

Arrangement tilde_sigma5_arrangement() {
  const auto a = tilde_sigma5_normal_matrices();
  const Matrix id = identity(2), z = Matrix::Zero(2, 2);
  const std::vector<Matrix> reps{blocks(id, z, z, id).leftCols(2), (Matrix(4, 2) << z, id).finished(),
                                 (Matrix(4, 2) << id, id).finished(), (Matrix(4, 2) << a[0], id).finished(),
                                 (Matrix(4, 2) << a[1], id).finished()};
  std::vector<Subspace> planes;
  for (const auto& m : reps) planes.push_back(Subspace::span(m));
  const auto t = tilde_sigma5_rep();
  return make_arrangement(std::move(planes), RealizationWitness{{t[0], t[1], t[2], t[3]}});
}

DecompositionSystem tilde_sigma5_system() {
  const Arrangement a = tilde_sigma5_arrangement();
  const Matrix w1a = tilde_sigma5_complement();
  DecompositionSystem d;
  d.n = 4;
  d.k = 5;
  d.parts = 2;
  for (int i = 0; i < 5; ++i) {
    d.subspaces.push_back({a.planes[static_cast<std::size_t>(i)], Subspace::span(tilde_sigma5_transport(i) * w1a)});
  }
  d.witness = *a.witness;
  return d;
}

Tss tilde_sigma5_construction(const Scalar& lambda, const Scalar& mu) {
  if (lambda == mu) throw EqualEigenvalues("s5 construction: lambda must differ from mu");
  return eigenspace_construction(tilde_sigma5_system(), {lambda, mu});
}

std::array<Matrix, 2> tilde_sigma5_printed_pair() {
  Matrix a1(4, 4), a2(4, 4);
  a1 << Scalar(1), Scalar(0), sc("-4*i/(sqrt3 + 3*i)"), sc("-i/sqrt6"),
      Scalar(0), Scalar(1), sc("-i/sqrt6"), sc("4*i/(sqrt3 - 3*i)"),
      Scalar(0), Scalar(0), Scalar(-1), Scalar(0),
      Scalar(0), Scalar(0), Scalar(0), Scalar(-1);
  a2 << Scalar(-1), Scalar(0), Scalar(0), Scalar(0),
      Scalar(0), Scalar(-1), Scalar(0), Scalar(0),
      sc("4*i/(sqrt3 - 3*i)"), sc("i/sqrt6"), Scalar(1), Scalar(0),
      sc("i/sqrt6"), sc("-4*i/(sqrt3 + 3*i)"), Scalar(0), Scalar(1);
  return {a1, a2};
}

// ---------------------------------------------------------------------------

SporadicData sporadic_data() {
  SporadicData s;
  s.mu = constants::mu_sporadic();
  s.lambda = s.mu.inverse();
  s.alpha = (s.mu - s.lambda) * Scalar::rational(1, 2);
  s.b = (Scalar(1) - s.mu) / s.alpha;
  s.p = mat2(1, s.b, 2, -1);
  s.q_printed = mat2(s.lambda, s.alpha + s.mu * s.b, Scalar(2) * s.lambda, -s.lambda);
  const auto x = k3n2_matrices(s.lambda, s.mu);
  s.x = {identity(2), x[0], x[1], x[2]};
  s.q = s.p * s.x[1];
  return s;
}

Tss sporadic4(const Scalar& nu) {
  const SporadicData s = sporadic_data();
  const Matrix nu_block = identity(2) * nu, z = Matrix::Zero(2, 2);
  std::vector<Matrix> elements;
  for (const auto& x : s.x) elements.push_back(blocks(nu_block, x, z, nu_block));
  const RealizationWitness inner = simplex_witness(2);
  RealizationWitness w;
  w.transpositions.push_back(direct_sum(s.p, s.q));
  for (const auto& p : inner.transpositions) w.transpositions.push_back(direct_sum(p, p));
  return make_tss(std::move(elements), w, {nu, s.mu, s.lambda});
}

}  // namespace tss
