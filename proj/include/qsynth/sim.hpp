#pragma once

#include "qsynth/gates.hpp"
#include "qsynth/usynth.hpp"

namespace qsynth {

/// Applies the circuit to a d^2 statevector, gates in list order.
/// Single-qudit gates run as d x d block operations on the reshaped
/// amplitude grid; the norm is preserved.
CVec apply(const Circuit& c, const CVec& psi);

/// Dense d^2 x d^2 matrix of the circuit: the reversed-order gate product
/// (last gate leftmost), accumulated by per-gate block operations.
CMat circuit_matrix(const Circuit& c);

struct VerifyReport {
  double max_err = 0.0;
  bool pass = false;
  CircuitStats counts;
};

/// Compares the circuit matrix against a target unitary.
VerifyReport verify(const Circuit& c, const CMat& target, double tol);

}  // namespace qsynth
