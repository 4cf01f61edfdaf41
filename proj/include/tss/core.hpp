#pragma once

// Totally symmetric sets of matrices and totally symmetric subspace
// arrangements, with exact verification of their realization witnesses.
//
// Indices are 0-based throughout. A permutation is stored as a vector
// `perm` with perm[i] = sigma(i). Witness matrix j realizes the adjacent
// transposition (j, j+1): P A_i P^-1 = A_{tau_j(i)}.

#include <optional>
#include <vector>

#include "tss/linalg.hpp"

namespace tss {

using Permutation = std::vector<int>;

Permutation identity_permutation(int k);
/// (a o b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse_permutation(const Permutation& p);
Permutation transposition(int k, int j);  // swaps j and j+1
bool is_permutation(const Permutation& p);
/// Adjacent transpositions j_1, ..., j_m with p = tau_{j_1} o ... o tau_{j_m}.
std::vector<int> adjacent_word(const Permutation& p);

struct RealizationWitness {
  std::vector<Matrix> transpositions;  // k - 1 matrices
};

struct Tss {
  Index n = 0;
  Index k = 0;
  std::vector<Matrix> elements;
  std::optional<RealizationWitness> witness;
  /// Construction parameters, used as eigenvalue hints by the spectral tools.
  std::vector<Scalar> parameters;

  /// True when k <= 1 or all elements coincide.
  bool degenerate() const;
};

/// Builds a Tss from its elements, checking shapes (ShapeMismatch).
Tss make_tss(std::vector<Matrix> elements, std::optional<RealizationWitness> witness = {},
             std::vector<Scalar> parameters = {});
/// A k-element degenerate set {A, ..., A} with identity witnesses.
Tss degenerate_tss(const Matrix& a, Index k);

/// Representatives M_i with P_j M_i = M_{tau_j(i)} exactly.
struct StrongWitness {
  std::vector<Matrix> representatives;
  std::vector<Matrix> transpositions;
};

struct Arrangement {
  Index n = 0;
  Index d = 0;
  Index k = 0;
  std::vector<Subspace> planes;
  std::optional<RealizationWitness> witness;
  std::optional<StrongWitness> strong;

  bool degenerate() const;
};

Arrangement make_arrangement(std::vector<Subspace> planes,
                             std::optional<RealizationWitness> witness = {},
                             std::optional<StrongWitness> strong = {});

enum class Verdict { TotallySymmetric, NotTotallySymmetric, Degenerate };
const char* to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::NotTotallySymmetric;
  std::optional<RealizationWitness> witness;
  std::optional<int> failing_transposition;
};

/// Exact check that w realizes every adjacent transposition on t.
bool check_witness(const Tss& t, const RealizationWitness& w);
bool check_witness(const Arrangement& a, const RealizationWitness& w);
bool check_strong_witness(const StrongWitness& s);

/// Uses the attached witness when it checks out, otherwise solves for one.
Certificate verify_tss(const Tss& t);
Certificate verify_arrangement(const Arrangement& a);

/// The product of witness matrices along adjacent_word(sigma).
Matrix realize_permutation(const RealizationWitness& w, const Permutation& sigma, Index n);

bool is_commutative(const Tss& t);

/// Some invertible T with T A_i T^-1 = B_i for all i.
std::optional<Matrix> isomorphic(const Tss& a, const Tss& b);

/// Restriction to an invariant subspace w and the quotient by it. The
/// quotient uses w's basis extended by standard vectors in index order.
/// Throws NotInvariant.
std::pair<Tss, Tss> restriction_quotient(const Tss& t, const Subspace& w,
                                         const RealizationWitness& witness);

/// Standard basis vectors appended to `basis` (in index order) until it
/// spans the whole space.
Matrix extend_to_basis(const Matrix& basis);

Arrangement dual_arrangement(const Arrangement& a);
/// The arrangement induced in K^n / Q, Q the common intersection.
Arrangement reduce_arrangement(const Arrangement& a);

struct Stabilizer {
  Index dimension = 0;
  std::vector<Matrix> basis;
};
/// All X with X W_i contained in W_i for every i.
Stabilizer stabilizer_dimension(const Arrangement& a);

struct HalfDimNormalForm {
  Matrix coordinates;  // S with S^-1 W_1 = (I;0), S^-1 W_2 = (0;I), S^-1 W_3 = (I;I)
  Tss tss;             // the k - 3 matrices A_i with S^-1 W_i = (A_i; I)
};
/// Throws NotComplementary, ShapeMismatch.
HalfDimNormalForm half_dim_normal_form(const Arrangement& a);

struct InvolutionCheck {
  bool inverse_conjugate = false;     // A ~ A^-1
  bool complement_conjugate = false;  // A ~ I - A
};
/// Throws Singular when an element is not invertible.
std::vector<InvolutionCheck> involution_checks(const Tss& t);

/// The block matrices (lambda I, M_i; 0, lambda I). Throws NoStrongWitness.
Tss suspension(const Arrangement& a, const Scalar& lambda);

}  // namespace tss
