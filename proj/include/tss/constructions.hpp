#pragma once

// Catalog of explicit totally symmetric sets, arrangements and
// decomposition systems. Every constructor attaches a witness that
// verify_tss / verify_arrangement accept without solving.

#include <array>
#include <string>
#include <vector>

#include "tss/core.hpp"

namespace tss {

/// A_i = diag with nu in slot i and lambda elsewhere (k x k).
/// Throws EqualEigenvalues.
Tss standard(Index k, const Scalar& lambda, const Scalar& nu);

struct Weight {
  std::vector<Scalar> values;

  Index k() const { return static_cast<Index>(values.size()); }
  /// Level-set sizes, ascending.
  std::vector<Index> partition() const;
  /// e.g. "1≤2" for the standard weight on three letters.
  std::string partition_string() const;
  /// Values sorted by scalar_less: the canonical representative of the
  /// weight up to precomposition by a permutation.
  Weight canonical() const;
};

std::string partition_string(const std::vector<Index>& parts);
/// k! / (k_1! ... k_m!)
Index multinomial(const std::vector<Index>& parts);
/// All partitions of k as ascending part lists.
std::vector<std::vector<Index>> partitions_of(Index k);
/// The weight (1, ..., 1, 2, ..., 2, ...) realizing an ascending partition.
Weight weight_for_partition(const std::vector<Index>& parts);

/// Diagonal set on the distinct functions w o sigma, listed in order of first
/// appearance as sigma runs through permutations lexicographically.
Tss partition_construction(const Weight& w);
/// Throws NotInjective.
Tss permutation_type(const std::vector<Scalar>& values);

/// Ind_k^{k+p}(lambda). Basis S (x) v, subsets S in lexicographic order.
/// Throws MissingWitness when t has no witness and is not degenerate.
Tss induction(const Tss& t, Index p, const Scalar& lambda);
/// sigma_S: S onto the top block {k, ..., k+p-1}, its complement onto
/// {0, ..., k-1}, both order-preserving (0-based subsets).
Permutation shuffle_representative(const std::vector<int>& subset, int total);
/// p-element subsets of {0, ..., total-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of(int total, int p);

/// n+1 lines in K^n spanned by e_1, ..., e_n and -(e_1 + ... + e_n), with
/// the strong witness coming from the permutation action.
Arrangement simplex_arrangement(Index n);
/// The hyperplanes ker alpha_i, alpha_i(e_j) = (n+1) delta_ij - 1.
Arrangement dual_simplex_arrangement(Index n);
/// The functionals alpha_i as rows.
Matrix simplex_functionals(Index n);
/// I + J: carries dual_arrangement(simplex(n)) onto dual_simplex(n).
Matrix dualizing_map(Index n);

struct DecompositionSystem {
  Index n = 0;
  Index k = 0;
  Index parts = 0;
  std::vector<std::vector<Subspace>> subspaces;  // k rows of `parts` subspaces
  RealizationWitness witness;
};

/// Throws NotComplementary when a row fails to decompose K^n.
void check_system(const DecompositionSystem& d);
bool check_system_witness(const DecompositionSystem& d);

/// Rows (line_i, ker alpha_i) of the simplex arrangement.
DecompositionSystem simplex_system(Index n);
/// A_i acts by eigenvalues[j] on subspaces[i][j]. Throws DuplicateEigenvalue.
Tss eigenspace_construction(const DecompositionSystem& d, const std::vector<Scalar>& eigenvalues);

/// A_i v = mu v + (lambda - mu)/n alpha_i(v) e_i on K^n, n = k - 1.
/// Throws EqualEigenvalues.
Tss ncsimplex(Index k, const Scalar& lambda, const Scalar& mu);
/// The three 2x2 matrices (lambda, (mu-lambda)/2; 0, mu), ... as printed.
std::vector<Matrix> k3n2_matrices(const Scalar& lambda, const Scalar& mu);

struct Sigma5Blocks {
  Matrix p12, p23, p34, q34, p45;
};
Sigma5Blocks tilde_sigma5_blocks();
/// T_1, ..., T_4 in GL_4(K).
std::array<Matrix, 4> tilde_sigma5_rep();
/// The normal-form matrices A_4 = diag(zeta, zeta^-1) and A_5.
std::array<Matrix, 2> tilde_sigma5_normal_matrices();
/// W_1^a as printed (4 x 2).
Matrix tilde_sigma5_complement();
/// T_{sigma_i} = T_{i-1} ... T_1 (0-based i: T[i-1] * ... * T[0]).
Matrix tilde_sigma5_transport(int i);
Arrangement tilde_sigma5_arrangement();
DecompositionSystem tilde_sigma5_system();
/// Throws EqualEigenvalues.
Tss tilde_sigma5_construction(const Scalar& lambda, const Scalar& mu);
/// The two 4x4 matrices printed for (lambda, mu) = (1, -1).
std::array<Matrix, 2> tilde_sigma5_printed_pair();

struct SporadicData {
  Scalar mu, lambda, alpha, b;
  Matrix p, q;             // the conjugators of the (1 2) witness
  std::vector<Matrix> x;   // X_1 = I, X_2, X_3, X_4
  Matrix q_printed;        // Q exactly as displayed
};
SporadicData sporadic_data();
/// A_i = (nu I, X_i; 0, nu I).
Tss sporadic4(const Scalar& nu);

/// Permutation matrix of sigma: e_j -> e_{sigma(j)}.
Matrix permutation_matrix(const Permutation& sigma);

}  // namespace tss
