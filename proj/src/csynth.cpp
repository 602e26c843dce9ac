#include "qsynth/csynth.hpp"

#include <cmath>

#include "qsynth/matcore.hpp"

namespace qsynth {

namespace {

int target_line(int control_qudit) { return 1 - control_qudit; }

void check_control(Eigen::Index d, Eigen::Index a, int control_qudit, const char* who) {
  if (a < 0 || a >= d) {
    throw IndexOutOfRange(std::string(who) + ": control state out of range");
  }
  if (control_qudit != 0 && control_qudit != 1) {
    throw IndexOutOfRange(std::string(who) + ": control_qudit must be 0 or 1");
  }
}

}  // namespace

Circuit c_exchange(Eigen::Index d, Eigen::Index a, Eigen::Index b, Eigen::Index c,
                   int control_qudit) {
  check_control(d, a, control_qudit, "c_exchange");
  if (b < 0 || c <= b || c >= d) {
    throw IndexOutOfRange("c_exchange: requires 0 <= b < c < d");
  }
  Circuit out;
  out.dim = d;
  CMat h = h_matrix(d, b, c);
  out.push_single(target_line(control_qudit), "H_" + std::to_string(b) + std::to_string(c), h);
  out.push_cm(control_qudit, static_cast<int>(a), static_cast<int>(c));
  out.push_single(target_line(control_qudit), "H_" + std::to_string(b) + std::to_string(c), h);
  return out;
}

Circuit c_theta_b(Eigen::Index d, Eigen::Index a, Eigen::Index b, double theta,
                  int control_qudit) {
  check_control(d, a, control_qudit, "c_theta_b");
  if (b < 1 || b >= d) {
    throw IndexOutOfRange("c_theta_b: requires 1 <= b < d");
  }
  int tq = target_line(control_qudit);
  std::string tag = std::to_string(b);
  Circuit out;
  out.dim = d;
  out.push_single(tq, "Theta_" + tag + "(t/4)", theta_b_matrix(d, b, theta / 4.0));
  out.append(c_exchange(d, a, 0, b, control_qudit));
  out.push_single(tq, "Theta_" + tag + "(-t/2)", theta_b_matrix(d, b, -theta / 2.0));
  out.append(c_exchange(d, a, 0, b, control_qudit));
  out.push_single(tq, "Theta_" + tag + "(t/4)", theta_b_matrix(d, b, theta / 4.0));
  return out;
}

Circuit c_theta_vec(Eigen::Index d, Eigen::Index a, const std::vector<double>& thetas,
                    int control_qudit) {
  check_control(d, a, control_qudit, "c_theta_vec");
  if (static_cast<Eigen::Index>(thetas.size()) != d - 1) {
    throw LengthMismatch("c_theta_vec: expected d-1 angles");
  }
  Circuit out;
  out.dim = d;
  for (Eigen::Index b = 1; b < d; ++b) {
    out.append(c_theta_b(d, a, b, thetas[static_cast<std::size_t>(b - 1)], control_qudit));
  }
  return out;
}

Circuit c_su(Eigen::Index d, Eigen::Index a, const CMat& w, int control_qudit) {
  check_control(d, a, control_qudit, "c_su");
  if (w.rows() != d || w.cols() != d) {
    throw DimMismatch("c_su: matrix dimension mismatch");
  }
  Complex det = w.determinant();
  if (std::abs(det - Complex(1.0, 0.0)) > 1e-8) {
    throw NotSpecialUnitary("c_su: determinant differs from 1");
  }
  EigenPairs ep = eig_unitary(w, Tolerances::for_dim(d));

  // W = Q diag(e^{i sigma}) Q^dagger = V^dagger Theta(theta) V with V = Q^dagger,
  // theta_b = sigma_b; det = 1 pins the position-0 entry to e^{i sigma_0}.
  std::vector<double> thetas(ep.phases.begin() + 1, ep.phases.end());
  double sum = 0.0;
  for (double th : thetas) {
    sum += th;
  }
  if (std::abs(std::polar(1.0, -sum) - std::polar(1.0, ep.phases[0])) > 1e-6) {
    throw NotSpecialUnitary("c_su: eigenphase sum inconsistent with det 1");
  }

  int tq = target_line(control_qudit);
  Circuit out;
  out.dim = d;
  out.push_single(tq, "V", ep.vectors.adjoint());
  out.append(c_theta_vec(d, a, thetas, control_qudit));
  out.push_single(tq, "V^-1", ep.vectors);
  return out;
}

Circuit c_phase(Eigen::Index d, Eigen::Index a, double delta, int control_qudit) {
  check_control(d, a, control_qudit, "c_phase");
  Circuit out;
  out.dim = d;
  out.push_single(control_qudit, "E_" + std::to_string(a), e_matrix(d, a, delta));
  return out;
}

Circuit c_u(Eigen::Index d, Eigen::Index a, const CMat& u, int control_qudit) {
  check_control(d, a, control_qudit, "c_u");
  if (u.rows() != d || u.cols() != d) {
    throw DimMismatch("c_u: matrix dimension mismatch");
  }
  if (!is_unitary(u, Tolerances::for_dim(d).unitary)) {
    throw NotUnitary("c_u: input fails the unitarity check");
  }
  double delta = std::arg(u.determinant()) / static_cast<double>(d);
  CMat w = std::polar(1.0, -delta) * u;
  Circuit out = c_phase(d, a, delta, control_qudit);
  out.append(c_su(d, a, w, control_qudit));
  return out;
}

}  // namespace qsynth
