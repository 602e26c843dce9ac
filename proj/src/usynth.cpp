#include "qsynth/usynth.hpp"

#include <cmath>

#include "qsynth/csynth.hpp"
#include "qsynth/matcore.hpp"
#include "qsynth/stateprep.hpp"

namespace qsynth {

Circuit x_tilde(Eigen::Index d, Eigen::Index a, Eigen::Index b, double sigma) {
  if (a < 0 || a >= d || b < 0 || b >= d) {
    throw IndexOutOfRange("x_tilde: indices out of range");
  }
  return c_u(d, a, x_ab_matrix(d, b, sigma), 0);
}

Circuit z_gate(Eigen::Index d, Eigen::Index a, Eigen::Index b, double sigma,
               const CVec& eigvec, bool prune_zero) {
  Circuit s = s_tilde(eigvec, a, b, prune_zero);
  Circuit out = s;
  out.append(x_tilde(d, a, b, sigma));
  out.append(invert_circuit(s));
  return out;
}

Circuit synthesize(const CMat& u_tilde, const SynthOptions& opts) {
  const Eigen::Index n = u_tilde.rows();
  Eigen::Index d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d < 2 || d * d != n || u_tilde.cols() != n) {
    throw DimMismatch("synthesize: matrix is not d^2 x d^2 with d >= 2");
  }
  Tolerances tol = opts.tol.value_or(Tolerances::for_dim(n));
  if (!is_unitary(u_tilde, tol.unitary)) {
    throw NotUnitary("synthesize: input fails the unitarity check");
  }
  EigenPairs ep = eig_unitary(u_tilde, tol);

  Circuit out;
  out.dim = d;
  for (Eigen::Index m = 0; m < n; ++m) {
    CVec v = ep.vectors.col(m);
    // Fix the free eigenvector phase: first component of largest magnitude
    // made real positive, so emitted circuits are byte-reproducible.
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double mag = std::abs(v(i));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    v *= std::conj(v(imax)) / best;
    v /= v.norm();
    out.append(z_gate(d, m / d, m % d, ep.phases[static_cast<std::size_t>(m)], v,
                      opts.prune_zero));
  }
  return out;
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  for (const Gate& g : c.gates) {
    if (g.is_single()) {
      ++s.gates_single;
    } else {
      ++s.gates_cm;
    }
  }
  s.gates_total = s.gates_single + s.gates_cm;
  return s;
}

}  // namespace qsynth
