#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qsynth/types.hpp"

namespace qsynth {

/// Arbitrary single-qudit unitary bound to one of the two qudit lines.
/// The label is diagnostic only; circuit equality is always matrix-level.
struct SingleQuditGate {
  int qudit = 0;  // 0 or 1
  std::string label;
  CMat matrix;  // d x d unitary
};

/// Elementary controlled sign-flip: negates the single basis state with
/// control state a on control_qudit and target state b on the other line.
struct ControlledMGate {
  int control_qudit = 0;
  int control_state = 0;
  int target_state = 0;
};

struct Gate {
  std::variant<SingleQuditGate, ControlledMGate> op;

  static Gate single(int qudit, std::string label, CMat matrix) {
    return Gate{SingleQuditGate{qudit, std::move(label), std::move(matrix)}};
  }
  static Gate controlled_m(int control_qudit, int a, int b) {
    return Gate{ControlledMGate{control_qudit, a, b}};
  }

  bool is_single() const { return std::holds_alternative<SingleQuditGate>(op); }
  const SingleQuditGate& as_single() const { return std::get<SingleQuditGate>(op); }
  const ControlledMGate& as_cm() const { return std::get<ControlledMGate>(op); }
};

/// Ordered two-qudit gate list. gates[0] acts first on a state, so the
/// circuit matrix is the reversed-order product gates[n-1] * ... * gates[0].
struct Circuit {
  Eigen::Index dim = 0;  // d of one qudit; the circuit acts on d^2 amplitudes
  std::vector<Gate> gates;

  void push_single(int qudit, std::string label, CMat matrix) {
    gates.push_back(Gate::single(qudit, std::move(label), std::move(matrix)));
  }
  void push_cm(int control_qudit, int a, int b) {
    gates.push_back(Gate::controlled_m(control_qudit, a, b));
  }
  void append(const Circuit& other);
};

/// Exchange gate P_ab: swaps basis states a and b, identity elsewhere.
CMat p_matrix(Eigen::Index d, Eigen::Index a, Eigen::Index b);

/// Walsh-Hadamard extension H_ab: the 2x2 block (1/sqrt2)[[1,1],[1,-1]] on
/// states (a, b), identity elsewhere. Requires a < b.
CMat h_matrix(Eigen::Index d, Eigen::Index a, Eigen::Index b);

/// Sign flip M_b = diag(1, ..., -1 at b, ..., 1).
CMat m_matrix(Eigen::Index d, Eigen::Index b);

/// Theta_b(theta) = diag(e^{-i theta} at 0, 1, ..., e^{i theta} at b, ..., 1).
/// b = 0 is rejected: position 0 carries the compensating phase.
CMat theta_b_matrix(Eigen::Index d, Eigen::Index b, double theta);

/// Theta(theta_1..theta_{d-1}) = diag(e^{-i sum}, e^{i theta_1}, ...).
CMat theta_vec_matrix(Eigen::Index d, const std::vector<double>& thetas);

/// Phase gate E_a = diag(1, ..., e^{i delta} at a, ..., 1).
CMat e_matrix(Eigen::Index d, Eigen::Index a, double delta);

/// X(a,b): e^{i sigma} on entry b. Same matrix as e_matrix; separate
/// constructor kept for circuit readability.
CMat x_ab_matrix(Eigen::Index d, Eigen::Index b, double sigma);

/// Two-qudit controlled sign-flip matrix, d^2 x d^2 diagonal with -1 at
/// index a*d + b (control_qudit 0) or b*d + a (control_qudit 1).
CMat cm_matrix(Eigen::Index d, int control_qudit, Eigen::Index a, Eigen::Index b);

/// d^2 x d^2 realization of one gate: qudit 0 -> G (x) I, qudit 1 -> I (x) G.
CMat gate_matrix(const Gate& g, Eigen::Index d);

/// P_ab = P_0a P_0b P_0a. Identity factors (and the a == b case) collapse,
/// so the list may be shorter than three.
std::vector<CMat> p_generator_expand(Eigen::Index d, Eigen::Index a, Eigen::Index b);

/// H_ab = P_0a P_1b H P_1b P_0a with H = H_01; identity factors collapse.
std::vector<CMat> h_generator_expand(Eigen::Index d, Eigen::Index a, Eigen::Index b);

/// Reverses the gate list, conjugate-transposing single-qudit matrices.
/// ControlledM gates are self-inverse and pass through unchanged.
Circuit invert_circuit(const Circuit& c);

}  // namespace qsynth
