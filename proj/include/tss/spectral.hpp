#pragma once

// Eigenstructure of totally symmetric sets: generalized eigenspace
// filtrations, j-fold eigenspaces and depth, pool-based eigenvalue
// discovery, the classification of commutative sets, and Burnside-type
// irreducibility certificates.

#include <optional>
#include <string>
#include <vector>

#include "tss/constructions.hpp"
#include "tss/core.hpp"
#include "tss/report.hpp"

namespace tss {

/// ker (A - lambda I)^c
Subspace generalized_eigenspace(const Matrix& a, const Scalar& lambda, Index c);

struct EigenFiltration {
  Scalar eigenvalue;
  /// spaces[c - 1] = E_{lambda, c}, up to the first c with E_c = E_{c+1}.
  std::vector<Subspace> spaces;

  std::vector<Index> dims() const;
  /// dim(E_c / E_{c-1}) >= dim(E_{c+1} / E_c) and dim E_c >= c dim(E_c / E_{c-1}).
  bool jordan_inequalities() const;
};

EigenFiltration filtration(const Matrix& a, const Scalar& lambda);

/// Intersection of E(A_i)_{lambda, c} over i in `subset` (0-based). The
/// empty subset gives the whole space.
Subspace jfold(const Tss& t, const Scalar& lambda, Index c, const std::vector<int>& subset);

struct DepthProfile {
  Scalar eigenvalue;
  std::vector<Index> mu;  // mu[j - 1] = dim of the j-fold eigenspace, j = 1..k
  Index depth = 0;
  /// Every j-subset gave the same dimension (checked over all subsets for k <= 5).
  bool subset_independent = true;
};

/// Throws NotAnEigenvalue.
DepthProfile depth_profile(const Tss& t, const Scalar& lambda);

/// True iff the dimensions of the pieces add up to the dimension of their sum.
bool is_direct_sum(const std::vector<Subspace>& pieces);

struct EigenvalueDiscovery {
  std::vector<Scalar> values;  // with multiplicity, sorted by scalar_less
  bool complete = false;
  Polynomial residual;  // unresolved factor when incomplete
};

/// Small rationals -3..3 and zeta^(+-1).
std::vector<Scalar> default_pool();
/// Trial division of the characteristic polynomial by x - c for c in the
/// default pool and `pool`; a residual of degree <= 2 is solved directly.
EigenvalueDiscovery discover_eigenvalues(const Matrix& a, const std::vector<Scalar>& pool = {});

enum class Classification { Irreducible, ReducibleWitness, NonDiagonalizable, NotClassified };
const char* to_string(Classification c);

struct ClassificationResult {
  Classification verdict = Classification::NotClassified;
  std::optional<Weight> weight;      // canonical, when irreducible
  std::string partition;             // from the weight
  std::optional<Subspace> subspace;  // a proper invariant subspace, when found
  /// One k-tuple of eigenvalues per common eigenspace, with its dimension.
  std::vector<std::pair<std::vector<Scalar>, Index>> columns;
};

/// Throws NotCommutative.
ClassificationResult classify_commutative(const Tss& t);

struct IrreducibilityCertificate {
  bool full_algebra = false;
  Index dimension = 0;  // of the algebra generated by elements and witness
  std::optional<Subspace> invariant_subspace;
};

IrreducibilityCertificate irreducibility_certificate(const Tss& t, const RealizationWitness& w);

/// e_1-coefficients of A_1 A_2 A_1 (e_1) and A_2 A_1 A_2 (e_1) for the
/// reflections A_i = I - 2/(n-2) e_i alpha_i in the permutation module K^(n-1).
std::pair<Scalar, Scalar> braid_coefficients(Index n);

Report rep_obstruction_suite();
Report s5_nonexistence_suite();

}  // namespace tss
