#pragma once

#include <optional>

#include "qsynth/gates.hpp"

namespace qsynth {

struct SynthOptions {
  bool prune_zero = false;
  std::optional<Tolerances> tol;
};

struct CircuitStats {
  long gates_single = 0;
  long gates_cm = 0;
  long gates_total = 0;
};

/// Diagonal phase imprint on the single two-qudit basis state |a>|b>:
/// e^{i sigma} at index a*d + b, identity elsewhere.
Circuit x_tilde(Eigen::Index d, Eigen::Index a, Eigen::Index b, double sigma);

/// Z(a,b) = S^-1 X(a,b) S: multiplies eigvec by e^{i sigma} and fixes the
/// orthogonal complement.
Circuit z_gate(Eigen::Index d, Eigen::Index a, Eigen::Index b, double sigma,
               const CVec& eigvec, bool prune_zero = false);

/// Spectral synthesis of an arbitrary U(d^2) matrix as the product of its
/// d^2 eigenphase factors Z(a,b), pairs assigned row-major in ascending
/// phase order.
Circuit synthesize(const CMat& u_tilde, const SynthOptions& opts = {});

CircuitStats stats(const Circuit& c);

}  // namespace qsynth
