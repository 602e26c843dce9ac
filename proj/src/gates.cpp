#include "qsynth/gates.hpp"

#include <cmath>

#include "qsynth/matcore.hpp"

namespace qsynth {

namespace {

void check_index(Eigen::Index d, Eigen::Index i, const char* who) {
  if (i < 0 || i >= d) {
    throw IndexOutOfRange(std::string(who) + ": state index out of range");
  }
}

}  // namespace

void Circuit::append(const Circuit& other) {
  if (dim != other.dim) {
    throw DimMismatch("Circuit::append: dimension mismatch");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

CMat p_matrix(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  check_index(d, a, "p_matrix");
  check_index(d, b, "p_matrix");
  CMat m = CMat::Identity(d, d);
  if (a != b) {
    m(a, a) = 0.0;
    m(b, b) = 0.0;
    m(a, b) = 1.0;
    m(b, a) = 1.0;
  }
  return m;
}

CMat h_matrix(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  check_index(d, a, "h_matrix");
  check_index(d, b, "h_matrix");
  if (a == b) {
    throw DegenerateIndices("h_matrix: a == b");
  }
  if (a > b) {
    throw IndexOutOfRange("h_matrix: requires a < b");
  }
  CMat m = CMat::Identity(d, d);
  m(a, a) = M_SQRT1_2;
  m(a, b) = M_SQRT1_2;
  m(b, a) = M_SQRT1_2;
  m(b, b) = -M_SQRT1_2;
  return m;
}

CMat m_matrix(Eigen::Index d, Eigen::Index b) {
  check_index(d, b, "m_matrix");
  CMat m = CMat::Identity(d, d);
  m(b, b) = -1.0;
  return m;
}

CMat theta_b_matrix(Eigen::Index d, Eigen::Index b, double theta) {
  check_index(d, b, "theta_b_matrix");
  if (b == 0) {
    throw IndexOutOfRange("theta_b_matrix: b must be >= 1");
  }
  CMat m = CMat::Identity(d, d);
  m(0, 0) = std::polar(1.0, -theta);
  m(b, b) = std::polar(1.0, theta);
  return m;
}

CMat theta_vec_matrix(Eigen::Index d, const std::vector<double>& thetas) {
  if (static_cast<Eigen::Index>(thetas.size()) != d - 1) {
    throw LengthMismatch("theta_vec_matrix: expected d-1 angles");
  }
  CMat m = CMat::Identity(d, d);
  double sum = 0.0;
  for (Eigen::Index b = 1; b < d; ++b) {
    double th = thetas[static_cast<std::size_t>(b - 1)];
    sum += th;
    m(b, b) = std::polar(1.0, th);
  }
  m(0, 0) = std::polar(1.0, -sum);
  return m;
}

CMat e_matrix(Eigen::Index d, Eigen::Index a, double delta) {
  check_index(d, a, "e_matrix");
  CMat m = CMat::Identity(d, d);
  m(a, a) = std::polar(1.0, delta);
  return m;
}

CMat x_ab_matrix(Eigen::Index d, Eigen::Index b, double sigma) {
  check_index(d, b, "x_ab_matrix");
  return e_matrix(d, b, sigma);
}

CMat cm_matrix(Eigen::Index d, int control_qudit, Eigen::Index a, Eigen::Index b) {
  check_index(d, a, "cm_matrix");
  check_index(d, b, "cm_matrix");
  if (control_qudit != 0 && control_qudit != 1) {
    throw IndexOutOfRange("cm_matrix: control_qudit must be 0 or 1");
  }
  CMat m = CMat::Identity(d * d, d * d);
  Eigen::Index flipped = (control_qudit == 0) ? a * d + b : b * d + a;
  m(flipped, flipped) = -1.0;
  return m;
}

CMat gate_matrix(const Gate& g, Eigen::Index d) {
  if (g.is_single()) {
    const SingleQuditGate& s = g.as_single();
    if (s.matrix.rows() != d || s.matrix.cols() != d) {
      throw DimMismatch("gate_matrix: single-qudit matrix has wrong dimension");
    }
    CMat eye = CMat::Identity(d, d);
    return (s.qudit == 0) ? kron(s.matrix, eye) : kron(eye, s.matrix);
  }
  const ControlledMGate& cm = g.as_cm();
  return cm_matrix(d, cm.control_qudit, cm.control_state, cm.target_state);
}

std::vector<CMat> p_generator_expand(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  check_index(d, a, "p_generator_expand");
  check_index(d, b, "p_generator_expand");
  if (a > b) {
    throw IndexOutOfRange("p_generator_expand: requires a <= b");
  }
  if (a == b) {
    return {};  // P_aa = I
  }
  if (a == 0) {
    return {p_matrix(d, 0, b)};
  }
  return {p_matrix(d, 0, a), p_matrix(d, 0, b), p_matrix(d, 0, a)};
}

std::vector<CMat> h_generator_expand(Eigen::Index d, Eigen::Index a, Eigen::Index b) {
  check_index(d, a, "h_generator_expand");
  check_index(d, b, "h_generator_expand");
  if (a == b) {
    throw DegenerateIndices("h_generator_expand: a == b");
  }
  if (a > b) {
    throw IndexOutOfRange("h_generator_expand: requires a < b");
  }
  // H_ab = P_0a P_1b H P_1b P_0a; overlapping index pairs collapse to I
  // and are dropped from the list.
  std::vector<CMat> out;
  CMat p0a = p_matrix(d, 0, a);
  CMat p1b = p_matrix(d, 1, b);
  bool keep_p0a = (a != 0);
  bool keep_p1b = (b != 1);
  if (keep_p0a) out.push_back(p0a);
  if (keep_p1b) out.push_back(p1b);
  out.push_back(h_matrix(d, 0, 1));
  if (keep_p1b) out.push_back(p1b);
  if (keep_p0a) out.push_back(p0a);
  return out;
}

Circuit invert_circuit(const Circuit& c) {
  Circuit inv;
  inv.dim = c.dim;
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (it->is_single()) {
      const SingleQuditGate& s = it->as_single();
      inv.push_single(s.qudit, s.label + "^-1", s.matrix.adjoint());
    } else {
      inv.gates.push_back(*it);
    }
  }
  return inv;
}

}  // namespace qsynth
