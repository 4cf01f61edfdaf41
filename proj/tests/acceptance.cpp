// Acceptance harness: one PASS/FAIL line per criterion.
//
// Printed matrices are transcribed here as exact strings and compared with
// the library's constructions; derived quantities are recomputed by the
// dense oracles in oracles.hpp. Usage: acceptance [--expect-fail N]...
// The exit status is 0 iff the set of failing criteria is exactly the set
// named by --expect-fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tss/constructions.hpp"
#include "tss/spectral.hpp"

using namespace tss;

namespace {

Scalar s(const char* text) { return parse_scalar(text); }

Matrix mat(Index rows, Index cols, std::initializer_list<const char*> entries) {
  Matrix m(rows, cols);
  auto it = entries.begin();
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = s(*it++);
  }
  return m;
}

bool same(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

Matrix blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
  m << a, b, c, d;
  return m;
}

struct Outcome {
  bool pass = false;
  std::string note;
};

// ---------------------------------------------------------------------------

struct Printed {
  Matrix p12, p34, q34, p45;
  std::array<Matrix, 4> t;
};

Printed printed_rep() {
  Printed p;
  p.p12 = mat(2, 2, {"0", "-1", "1", "0"});
  p.p34 = mat(2, 2, {"0", "-zeta*zeta", "-zeta", "0"});
  p.q34 = mat(2, 2, {"0", "-zeta", "-zeta*zeta", "0"});
  p.p45 = mat(2, 2, {"i/sqrt3*sqrt2", "i/sqrt3", "i/sqrt3", "-i/sqrt3*sqrt2"});
  const Matrix z = Matrix::Zero(2, 2);
  p.t[0] = blocks(z, p.p12, p.p12, z);
  p.t[1] = blocks(p.p12, -p.p12, z, -p.p12);
  p.t[2] = blocks(p.p34, z, z, p.q34);
  p.t[3] = blocks(p.p45, z, z, p.p45);
  return p;
}

Outcome criterion1() {
  const Printed p = printed_rep();
  const auto lib = tilde_sigma5_rep();
  const Matrix z = -identity(4);
  int relations = 0, held = 0;
  auto tally = [&](bool ok) { ++relations, held += ok; };
  for (int i = 0; i < 4; ++i) {
    tally(same(lib[static_cast<std::size_t>(i)], p.t[static_cast<std::size_t>(i)]));
    tally(same(p.t[static_cast<std::size_t>(i)] * p.t[static_cast<std::size_t>(i)], z));
  }
  for (int i = 0; i < 3; ++i) {
    const Matrix m = p.t[static_cast<std::size_t>(i)] * p.t[static_cast<std::size_t>(i) + 1];
    tally(same(m * m * m, z));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 2; j < 4; ++j) {
      const Matrix& a = p.t[static_cast<std::size_t>(i)];
      const Matrix& b = p.t[static_cast<std::size_t>(j)];
      tally(same(a * b, -(b * a)));
    }
  }
  return {held == relations, std::to_string(held) + "/" + std::to_string(relations) +
                                 " relations (incl. library T_i = printed T_i)"};
}

Outcome criterion2() {
  const Printed p = printed_rep();
  const Matrix target = mat(2, 2, {"0", "sqrt2", "-sqrt2", "0"});
  const Matrix literal = p.p45 * p.q34 - p.p34 * p.q34;
  const Matrix corrected = p.p45 * p.q34 - p.p34 * p.p45;
  std::string note = "P45 Q34 - P34 Q34 = " + to_display_string(literal);
  note.pop_back();
  for (auto& ch : note) {
    if (ch == '\n') ch = ' ';
  }
  note += "; corrected P45 Q34 - P34 P45 = (0 sqrt2; -sqrt2 0) ";
  note += same(corrected, target) ? "holds" : "fails";
  return {same(literal, target), note};
}

Outcome criterion3() {
  const Scalar mu = s("(-1 + 2*sqrt2*i)/3");
  const Scalar lambda = mu.inverse();
  const Scalar alpha = (mu - lambda) * Scalar::rational(1, 2);
  const Scalar b = (Scalar(1) - mu) / alpha;
  const bool quadratic = (Scalar(3) * mu * mu + Scalar(2) * mu + Scalar(3)).is_zero();
  const Scalar third = Scalar::rational(1, 3);
  // The block entries of A_1, ..., A_4 as displayed.
  Matrix x1 = identity(2), x2(2, 2), x3(2, 2), x4(2, 2);
  x2 << -mu - Scalar(2) * third, mu + third, Scalar(0), mu;
  x3 << mu, Scalar(0), mu + third, -mu - Scalar(2) * third;
  x4 << -third, -mu - third, -mu - third, -third;
  Matrix p(2, 2), q(2, 2);
  p << Scalar(1), b, Scalar(2), Scalar(-1);
  q << lambda, alpha + mu * b, Scalar(2) * lambda, -lambda;
  const Matrix qi = inverse(q);
  int held = 0;
  held += same(p * x1 * qi, x2);
  held += same(p * x2 * qi, x1);
  held += same(p * x3 * qi, x3);
  held += same(p * x4 * qi, x4);
  const SporadicData lib = sporadic_data();
  const bool matches = lib.mu == mu && same(lib.x[1], x2) && same(lib.x[2], x3) && same(lib.x[3], x4) &&
                       same(lib.q, q);
  bool verified = true;
  for (const char* nu : {"0", "1", "zeta"}) {
    const Tss t = sporadic4(s(nu));
    const Matrix top = t.elements[1].topRightCorner(2, 2);
    verified = verified && same(top, x2) && verify_tss(t).verdict == Verdict::TotallySymmetric;
    verified = verified && verify_tss(make_tss(t.elements)).verdict == Verdict::TotallySymmetric;
  }
  std::ostringstream note;
  note << "3mu^2+2mu+3=0 " << (quadratic ? "yes" : "no") << ", conjugations " << held
       << "/4, library matches display " << (matches ? "yes" : "no") << ", verify_tss "
       << (verified ? "TotallySymmetric" : "failed");
  return {quadratic && held == 4 && matches && verified, note.str()};
}

Outcome criterion4() {
  const std::vector<std::vector<Index>> tables = {{1, 2}, {1, 3, 6}, {1, 4, 6, 12, 24}};
  int weights = 0, recovered = 0;
  bool dims_ok = true;
  for (Index k = 2; k <= 4; ++k) {
    std::set<Index> dims;
    for (const auto& parts : partitions_of(k)) {
      const Weight w = weight_for_partition(parts);
      const Tss t = partition_construction(w);
      dims.insert(t.n);
      ++weights;
      const auto res = classify_commutative(t);
      if (res.verdict != Classification::Irreducible || !res.weight) continue;
      // Oracle: same multiset of values, and isomorphic as sets.
      std::vector<Scalar> a = res.weight->values, b = w.values;
      std::sort(a.begin(), a.end(), scalar_less);
      std::sort(b.begin(), b.end(), scalar_less);
      const bool iso = isomorphic(t, partition_construction(*res.weight)).has_value();
      recovered += (a == b && iso && res.partition == partition_string(parts));
    }
    const auto& want = tables[static_cast<std::size_t>(k - 2)];
    dims_ok = dims_ok && std::vector<Index>(dims.begin(), dims.end()) == want;
  }
  return {recovered == weights && dims_ok,
          std::to_string(recovered) + "/" + std::to_string(weights) +
              " weights recovered; dimensions k=3 {1,3,6}, k=4 {1,4,6,12,24} " + (dims_ok ? "match" : "differ")};
}

Outcome criterion5() {
  const Tss bases[2] = {degenerate_tss(identity(1), 1), standard(2, Scalar(1), Scalar(2))};
  const Scalar fresh(3);
  int ok = 0, total = 0;
  std::string note;
  for (const Tss& base : bases) {
    for (Index p = 1; p <= 2; ++p) {
      const Tss t = induction(base, p, fresh);
      ++total;
      const auto prof = depth_profile(t, fresh);
      // Oracle: the p-fold eigenspaces, stacked, have full rank and the
      // right total dimension.
      Index dims = 0;
      Matrix all(t.n, 0);
      for (const auto& sub : subsets_of(static_cast<int>(t.k), static_cast<int>(p))) {
        Matrix stacked(0, t.n);
        for (int i : sub) {
          Matrix next(stacked.rows() + t.n, t.n);
          next << stacked, Matrix(t.elements[static_cast<std::size_t>(i)] - identity(t.n) * fresh);
          stacked = next;
        }
        const Matrix ker = kernel_basis(stacked);
        dims += ker.cols();
        Matrix grown(t.n, all.cols() + ker.cols());
        grown << all, ker;
        all = grown;
      }
      const bool direct = dims == t.n && rank(all) == t.n;
      ok += (prof.depth == p && direct);
      note += "(" + std::to_string(base.k) + "," + std::to_string(p) + ")->" + std::to_string(prof.depth) + " ";
    }
  }
  note += "direct sums " + std::string(ok == total ? "full" : "not full");
  return {ok == total, note};
}

// Oracle: dimension of {X : N_i X B_i = 0} via the dense Kronecker system.
Index stabilizer_oracle(const std::vector<Subspace>& planes, Index n) {
  Matrix big(0, n * n);
  for (const auto& w : planes) {
    const Matrix b = w.basis();
    const Matrix nrows = kernel_basis(Matrix(b.transpose())).transpose();
    Matrix block(nrows.rows() * b.cols(), n * n);
    for (Index a = 0; a < nrows.rows(); ++a) {
      for (Index c = 0; c < b.cols(); ++c) {
        for (Index r = 0; r < n; ++r) {
          for (Index col = 0; col < n; ++col) block(a * b.cols() + c, r * n + col) = nrows(a, r) * b(col, c);
        }
      }
    }
    Matrix grown(big.rows() + block.rows(), n * n);
    grown << big, block;
    big = grown;
  }
  return n * n - rank(big);
}

Outcome criterion6() {
  std::vector<std::pair<std::string, Arrangement>> cases;
  for (Index n = 1; n <= 5; ++n) {
    cases.emplace_back("S" + std::to_string(n), simplex_arrangement(n));
    cases.emplace_back("S" + std::to_string(n) + "*", dual_simplex_arrangement(n));
  }
  cases.emplace_back("double cover", tilde_sigma5_arrangement());
  int ok = 0;
  std::string bad;
  for (const auto& [name, a] : cases) {
    const Index lib = stabilizer_dimension(a).dimension;
    const Index ref = stabilizer_oracle(a.planes, a.n);
    if (lib == 1 && ref == 1) {
      ++ok;
    } else {
      bad += " " + name + "=" + std::to_string(lib) + "/" + std::to_string(ref);
    }
  }
  return {ok == static_cast<int>(cases.size()),
          std::to_string(ok) + "/" + std::to_string(cases.size()) + " arrangements with dim 1 (library and oracle)" + bad};
}

Outcome criterion7() {
  std::string note;
  bool pattern = true;
  for (Index n = 3; n <= 6; ++n) {
    const auto [x, y] = braid_coefficients(n);
    // Oracle: the closed forms 1 - 4/(n-2)^2 and its negative.
    const Scalar q = Scalar::rational(4, static_cast<long>((n - 2) * (n - 2)));
    bool ok = x == Scalar(1) - q && y == q - Scalar(1) && ((x == y) == (n == 4));
    if (n >= 4) {
      const Tss t = ncsimplex(n - 1, Scalar(-1), Scalar(1));
      const Matrix& a1 = t.elements[0];
      const Matrix& a2 = t.elements[1];
      ok = ok && (a1 * a2 * a1)(0, 0) == x && (a2 * a1 * a2)(0, 0) == y;
    }
    pattern = pattern && ok;
    note += "n=" + std::to_string(n) + ":" + (x == y ? "equal " : "differ ");
  }
  const Matrix a1 = mat(4, 4, {"1", "0", "-4*i/(sqrt3+3*i)", "-i/sqrt6",  //
                               "0", "1", "-i/sqrt6", "4*i/(sqrt3-3*i)",   //
                               "0", "0", "-1", "0",                       //
                               "0", "0", "0", "-1"});
  const Matrix a2 = mat(4, 4, {"-1", "0", "0", "0",                       //
                               "0", "-1", "0", "0",                       //
                               "4*i/(sqrt3-3*i)", "i/sqrt6", "1", "0",    //
                               "i/sqrt6", "-4*i/(sqrt3+3*i)", "0", "1"});
  const Tss c = tilde_sigma5_construction(Scalar(1), Scalar(-1));
  const bool printed = same(c.elements[0], a1) && same(c.elements[1], a2);
  const Matrix m = a1 * a2;
  const bool not_braid = !same(m * m * m, identity(4));
  note += std::string("; A1, A2 ") + (printed ? "match display" : "differ from display") +
          ", (A1A2)^3 " + (not_braid ? "!= I" : "= I");
  return {pattern && printed && not_braid, note};
}

Outcome criterion8() {
  const auto nf = half_dim_normal_form(tilde_sigma5_arrangement());
  const Matrix a4 = mat(2, 2, {"zeta", "0", "0", "1/zeta"});
  const Matrix a5 = mat(2, 2, {"(3+i*sqrt3)/6", "sqrt2*i/sqrt3", "sqrt2*i/sqrt3", "(3-i*sqrt3)/6"});
  const bool printed = nf.tss.k == 2 && same(nf.tss.elements[0], a4) && same(nf.tss.elements[1], a5);
  const bool verified = verify_tss(make_tss(nf.tss.elements)).verdict == Verdict::TotallySymmetric;
  bool inv = true;
  for (const auto& c : involution_checks(nf.tss)) inv = inv && c.inverse_conjugate && c.complement_conjugate;
  // Oracle: the spectrum {zeta, zeta^-1} is closed under both involutions.
  const Scalar z = constants::zeta();
  const bool closed = z.inverse() == constants::zeta_inv() && Scalar(1) - z == constants::zeta_inv();
  return {printed && verified && inv && closed,
          std::string("A4, A5 ") + (printed ? "match display" : "differ") + ", verify " +
              (verified ? "TotallySymmetric" : "failed") + ", involutions " + (inv && closed ? "both" : "missing")};
}

Outcome criterion9() {
  const std::vector<const char*> pool = {"2", "1/2", "-2", "3", "1/3", "-1/2", "zeta", "i", "sqrt2", "-3"};
  const Arrangement s2 = simplex_arrangement(2);
  int rejected = 0;
  for (const char* slope : pool) {
    Matrix v(2, 1);
    v << Scalar(1), s(slope);
    auto planes = s2.planes;
    planes.push_back(Subspace::span(v));
    rejected += verify_arrangement(make_arrangement(planes)).verdict == Verdict::NotTotallySymmetric;
  }
  std::vector<Matrix> diag;
  for (const auto& v : {std::vector<long>{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}}) {
    Matrix m = Matrix::Zero(3, 3);
    for (Index i = 0; i < 3; ++i) m(i, i) = Scalar(v[static_cast<std::size_t>(i)]);
    diag.push_back(m);
  }
  const Tss big = make_tss(diag);
  const bool commuting_rejected = is_commutative(big) && verify_tss(big).verdict == Verdict::NotTotallySymmetric;
  return {rejected == 10 && commuting_rejected,
          std::to_string(rejected) + "/10 four-line arrangements rejected; 4-element diagonal set in K^3 " +
              (commuting_rejected ? "rejected" : "accepted")};
}

Matrix random_matrix(std::mt19937& rng, Index n) {
  static const int kBasis[6] = {0, 0, 0, 1, 4, 6};
  std::uniform_int_distribution<int> coeff(-2, 2), basis(0, 5), sparse(0, 2);
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      m(r, c) = sparse(rng) == 0 ? Scalar(0) : Scalar(coeff(rng)) * Scalar::basis(kBasis[basis(rng)]);
    }
  }
  return m;
}

Outcome criterion10() {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> size(1, 3), count(1, 2);
  int agree = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = size(rng);
    std::vector<Matrix> as, bs;
    const int m = count(rng);
    for (int j = 0; j < m; ++j) {
      as.push_back(random_matrix(rng, n));
      // Half the instances use a conjugate of A as B, so the space is nonzero.
      if (trial % 2) {
        Matrix p = random_matrix(rng, n) + identity(n) * Scalar(5);
        bs.push_back(p * as.back() * inverse(p));
      } else {
        bs.push_back(random_matrix(rng, n));
      }
    }
    const Subspace fast = intertwiner_space(as, bs);
    const Subspace dense = oracle::intertwiners_dense(as, bs);
    bool ok = fast.dim() == dense.dim() && contains(fast, dense) && contains(dense, fast);

    std::vector<Matrix> gens = as;
    const AlgebraClosure cl = algebra_closure(gens, n);
    ok = ok && cl.dimension == oracle::closure_dim_bruteforce(gens, n);
    // Membership: every closure basis element lies in the span of words,
    // which has the same dimension, so the spans coincide.
    Matrix cols(n * n, static_cast<Index>(cl.basis.size()) + 1);
    for (std::size_t j = 0; j < cl.basis.size(); ++j) cols.col(static_cast<Index>(j)) = vectorize(cl.basis[j]);
    const Matrix word = gens.front() * gens.back() * gens.front();
    cols.col(cols.cols() - 1) = vectorize(word);
    ok = ok && rank(cols) == cl.dimension;
    agree += ok;
  }
  return {agree == 25, std::to_string(agree) + "/25 random instances agree"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0) expected.insert(std::atoi(argv[++i]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"double cover presentation", criterion1},
      {"s5 pair identity as displayed", criterion2},
      {"sporadic example", criterion3},
      {"classification round trip", criterion4},
      {"depth law for induction", criterion5},
      {"stabilizers are scalars", criterion6},
      {"low-dimensional obstruction", criterion7},
      {"half-dimensional normal form", criterion8},
      {"size bounds", criterion9},
      {"oracle equivalence", criterion10},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): " << o.note
              << " [" << secs << " s]" << (expected.count(id) ? " (expected failure)" : "") << "\n";
  }
  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass\n";
  return failed == expected ? EXIT_SUCCESS : EXIT_FAILURE;
}
