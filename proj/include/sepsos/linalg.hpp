#pragma once

#include <optional>
#include <vector>

#include "sepsos/matrix.hpp"

namespace sepsos {

// ---- floating eigenvalues ---------------------------------------------------

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the embedded
// 2n x 2n real symmetric matrix; sweeps stop when the off-diagonal norm drops
// below 1e-14 * ||M|| or after 50 sweeps.
std::vector<double> hermitian_eigenvalues(const CHerm& m);

// Real symmetric eigendecomposition (same Jacobi kernel), used by the SDP
// solver for cone projections. Columns of `vectors` are eigenvectors, sorted
// ascending with `values`.
struct SymEig {
  std::vector<double> values;
  Mat<double> vectors;
};
SymEig jacobi_sym_eig(Mat<double> a, bool want_vectors = true);

// ---- exact PSD decision -----------------------------------------------------

// Outcome of the exact semidefiniteness check. Either a factorization
// M = P L D L^dagger P^T with unit lower-triangular L and nonnegative real
// diagonal D (PSD), or a vector v with v^dagger M v < 0 (not PSD). Both sides
// re-verify by direct multiplication.
struct PsdWitness {
  bool psd = false;

  // factorization witness (psd == true); perm[k] is the original index of
  // eliminated position k
  Mat<GQ> unit_lower;
  std::vector<mpq_class> diag;
  std::vector<std::size_t> perm;

  // violation witness (psd == false)
  std::vector<GQ> violating_vector;
  mpq_class violation_value;  // v^dagger M v, negative

  // Multiply the factorization back out (PSD case only).
  Mat<GQ> reconstruct() const;
};

// Exact PSD decision over Gaussian rationals via pivoted LDL^T. The pivot is
// the largest-|.| diagonal entry; once every remaining diagonal entry is zero,
// any surviving off-diagonal entry yields a 2x2-minor violating vector, which
// is what makes the semidefinite (rather than just definite) case exact.
PsdWitness rational_psd_check(const QHerm& m);

// ---- exact linear systems ---------------------------------------------------

struct LinearSolveResult {
  bool consistent = false;
  std::vector<GQ> particular;            // one solution (free variables at 0)
  std::vector<std::vector<GQ>> kernel;   // basis of the homogeneous solutions
  bool unique() const { return consistent && kernel.empty(); }
};

// Exact reduced row echelon solve of A x = b over Gaussian rationals.
// A may be rectangular; b may be omitted (kernel only).
LinearSolveResult solve_linear_exact(const Mat<GQ>& a, const std::vector<GQ>& b);

}  // namespace sepsos
