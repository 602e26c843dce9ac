#pragma once

#include <vector>

#include "qsynth/gates.hpp"

namespace qsynth {

/// Tail norms N_n = (sum_{i >= n} |c_i|^2)^{1/2}, n = 0..d-1.
std::vector<double> tail_norms(const CVec& x);

/// Chain of 2x2-block rotations h_0..h_{d-2} with
/// (h_{d-2} ... h_0)^dagger x = (N_0, 0, ..., 0). Blocks use the
/// sign-corrected form so every h_k is unitary for complex amplitudes;
/// exhausted tails (N_k = 0) yield identity blocks.
std::vector<CMat> givens_chain(const CVec& x);

/// T_k(x) = P_0k (h_{d-2} ... h_0)^dagger: maps x to ||x|| e_k with a real
/// nonnegative coefficient.
CMat t_k(const CVec& x, Eigen::Index k);

/// Two-qudit state-to-basis circuit: controlled T_b(x_i) for each control
/// value i (descending), then a role-swapped controlled T_a(y) on the norm
/// vector y. Maps the normalized input state to |a>|b>. Zero row slices emit
/// a controlled identity unless prune_zero is set.
Circuit s_tilde(const CVec& x_tilde, Eigen::Index a, Eigen::Index b,
                bool prune_zero = false);

}  // namespace qsynth
