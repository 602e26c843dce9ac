#include "qsynth/sim.hpp"

#include "qsynth/matcore.hpp"

namespace qsynth {

namespace {

Eigen::Index flipped_index(const ControlledMGate& cm, Eigen::Index d) {
  return (cm.control_qudit == 0) ? cm.control_state * d + cm.target_state
                                 : cm.target_state * d + cm.control_state;
}

// Left-multiplies the accumulator by the two-qudit realization of g.
// Qudit-0 gates mix row blocks, qudit-1 gates act inside each row block.
void apply_gate_left(const Gate& g, Eigen::Index d, CMat& m) {
  if (!g.is_single()) {
    m.row(flipped_index(g.as_cm(), d)) *= -1.0;
    return;
  }
  const SingleQuditGate& s = g.as_single();
  if (s.matrix.rows() != d || s.matrix.cols() != d) {
    throw DimMismatch("circuit_matrix: single-qudit matrix has wrong dimension");
  }
  if (s.qudit == 1) {
    for (Eigen::Index blk = 0; blk < d; ++blk) {
      m.middleRows(blk * d, d) = s.matrix * m.middleRows(blk * d, d);
    }
    return;
  }
  CMat tmp = CMat::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) {
      Complex w = s.matrix(i, k);
      if (w != Complex(0.0, 0.0)) {
        tmp.middleRows(i * d, d) += w * m.middleRows(k * d, d);
      }
    }
  }
  m = std::move(tmp);
}

}  // namespace

CVec apply(const Circuit& c, const CVec& psi) {
  const Eigen::Index d = c.dim;
  if (psi.size() != d * d) {
    throw DimMismatch("apply: state length differs from d^2");
  }
  CVec out = psi;
  using Grid = Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  for (const Gate& g : c.gates) {
    if (!g.is_single()) {
      out(flipped_index(g.as_cm(), d)) *= -1.0;
      continue;
    }
    const SingleQuditGate& s = g.as_single();
    if (s.matrix.rows() != d || s.matrix.cols() != d) {
      throw DimMismatch("apply: single-qudit matrix has wrong dimension");
    }
    Grid grid(out.data(), d, d);
    if (s.qudit == 0) {
      grid = (s.matrix * grid).eval();
    } else {
      grid = (grid * s.matrix.transpose()).eval();
    }
  }
  return out;
}

CMat circuit_matrix(const Circuit& c) {
  const Eigen::Index n = c.dim * c.dim;
  CMat m = CMat::Identity(n, n);
  for (const Gate& g : c.gates) {
    apply_gate_left(g, c.dim, m);
  }
  return m;
}

VerifyReport verify(const Circuit& c, const CMat& target, double tol) {
  if (target.rows() != c.dim * c.dim || target.cols() != c.dim * c.dim) {
    throw DimMismatch("verify: target dimension differs from circuit");
  }
  VerifyReport r;
  r.max_err = max_abs_diff(circuit_matrix(c), target);
  r.pass = r.max_err <= tol;
  r.counts = stats(c);
  return r;
}

}  // namespace qsynth
