#pragma once

#include <cstdint>
#include <vector>

#include "qsynth/types.hpp"

namespace qsynth {

/// Eigensystem of a unitary matrix: phases[k] in (-pi, pi] sorted ascending,
/// vectors.col(k) the matching eigenvector. vectors is unitary even when the
/// spectrum is degenerate.
struct EigenPairs {
  std::vector<double> phases;
  CMat vectors;
};

/// Tensor product with the first factor on the first (control-side) qudit:
/// result((i1*dB + i2), (j1*dB + j2)) = a(i1, j1) * b(i2, j2).
CMat kron(const CMat& a, const CMat& b);

/// True iff max elementwise |A^dagger A - I| <= tol.
bool is_unitary(const CMat& a, double tol);

/// Eigendecomposition of a unitary matrix via complex Schur form. Phases are
/// sorted ascending; clusters with phase gap < 1e-8 are re-orthonormalized by
/// modified Gram-Schmidt. Throws NotUnitary / EigFailure.
EigenPairs eig_unitary(const CMat& a, const Tolerances& tol);

/// Haar-distributed d x d unitary: complex Gaussian matrix, Householder QR,
/// columns rephased by the R diagonal. Deterministic per seed.
CMat haar_random_unitary(Eigen::Index d, std::uint64_t seed);

/// Max elementwise |a_ij - b_ij|. Throws DimMismatch.
double max_abs_diff(const CMat& a, const CMat& b);

}  // namespace qsynth
