#pragma once

#include <vector>

#include "qsynth/gates.hpp"

namespace qsynth {

/// Controlled exchange: when the control qudit is in state a, swap target
/// states b and c. Emitted as [H_bc, ControlledM(a, c), H_bc]. With
/// control_qudit = 1 the single-qudit gates land on qudit 0 instead.
Circuit c_exchange(Eigen::Index d, Eigen::Index a, Eigen::Index b, Eigen::Index c,
                   int control_qudit = 0);

/// Controlled single-phase: block a of the result is Theta_b(theta).
/// Five-step sandwich around two controlled exchanges; exactly 2 ControlledM.
Circuit c_theta_b(Eigen::Index d, Eigen::Index a, Eigen::Index b, double theta,
                  int control_qudit = 0);

/// Controlled multi-phase: block a is Theta(theta_1..theta_{d-1});
/// concatenation of c_theta_b over b = 1..d-1.
Circuit c_theta_vec(Eigen::Index d, Eigen::Index a, const std::vector<double>& thetas,
                    int control_qudit = 0);

/// Controlled-W for W in SU(d), via diagonalization W = V^dagger Theta V.
/// Throws NotSpecialUnitary when |det W - 1| is not small.
Circuit c_su(Eigen::Index d, Eigen::Index a, const CMat& w, int control_qudit = 0);

/// Controlled global phase: a single E_a gate on the control line.
Circuit c_phase(Eigen::Index d, Eigen::Index a, double delta, int control_qudit = 0);

/// Controlled-U for any U in U(d): U = e^{i delta} W with delta =
/// arg(det U)/d on the principal branch, then c_phase followed by c_su.
Circuit c_u(Eigen::Index d, Eigen::Index a, const CMat& u, int control_qudit = 0);

}  // namespace qsynth
