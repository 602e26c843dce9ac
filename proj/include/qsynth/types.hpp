#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsynth {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Numerical tolerances used across the library. The unitarity and
/// eigen-residual bounds scale with the matrix dimension to absorb
/// double-precision accumulation in long gate products.
struct Tolerances {
  double unitary = 2e-10;
  double norm = 1e-12;
  double eig = 2e-9;
  double verify = 1e-8;

  static Tolerances for_dim(Eigen::Index n) {
    Tolerances t;
    t.unitary = 1e-10 * static_cast<double>(n);
    t.eig = 1e-9 * static_cast<double>(n);
    return t;
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DegenerateIndices : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct NotSpecialUnitary : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct EigFailure : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qsynth
