#include "qsynth/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace qsynth {

CMat kron(const CMat& a, const CMat& b) {
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  CMat out(da * db, da * db);
  for (Eigen::Index i1 = 0; i1 < da; ++i1) {
    for (Eigen::Index j1 = 0; j1 < da; ++j1) {
      out.block(i1 * db, j1 * db, db, db) = a(i1, j1) * b;
    }
  }
  return out;
}

bool is_unitary(const CMat& a, double tol) {
  if (a.rows() != a.cols()) {
    return false;
  }
  CMat g = a.adjoint() * a;
  g -= CMat::Identity(a.rows(), a.cols());
  return g.cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimMismatch("max_abs_diff: shapes differ");
  }
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - b).cwiseAbs().maxCoeff();
}

namespace {

double principal_phase(Complex z) {
  double p = std::arg(z);
  if (p <= -M_PI) {
    p += 2.0 * M_PI;
  }
  return p;
}

Eigen::Index first_significant_row(const CVec& v) {
  const double cutoff = 1e-12;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) {
      return i;
    }
  }
  return v.size();
}

// In-place modified Gram-Schmidt on columns [lo, hi) of v.
void orthonormalize_block(CMat& v, Eigen::Index lo, Eigen::Index hi) {
  for (Eigen::Index j = lo; j < hi; ++j) {
    for (Eigen::Index k = lo; k < j; ++k) {
      v.col(j) -= v.col(k).dot(v.col(j)) * v.col(k);
    }
    double nrm = v.col(j).norm();
    if (nrm == 0.0) {
      throw EigFailure("eig_unitary: degenerate cluster collapsed");
    }
    v.col(j) /= nrm;
  }
}

}  // namespace

EigenPairs eig_unitary(const CMat& a, const Tolerances& tol) {
  if (!is_unitary(a, tol.unitary)) {
    throw NotUnitary("eig_unitary: input fails the unitarity check");
  }
  const Eigen::Index n = a.rows();
  Eigen::ComplexSchur<CMat> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw EigFailure("eig_unitary: Schur decomposition did not converge");
  }

  std::vector<double> phases(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    phases[static_cast<std::size_t>(k)] = principal_phase(schur.matrixT()(k, k));
  }
  const CMat& q = schur.matrixU();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    double pl = phases[static_cast<std::size_t>(l)];
    double pr = phases[static_cast<std::size_t>(r)];
    if (pl != pr) {
      return pl < pr;
    }
    return first_significant_row(q.col(l)) < first_significant_row(q.col(r));
  });

  EigenPairs out;
  out.phases.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.phases[static_cast<std::size_t>(k)] = phases[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    out.vectors.col(k) = q.col(order[static_cast<std::size_t>(k)]);
  }

  // Re-orthonormalize within near-degenerate phase clusters.
  const double cluster_gap = 1e-8;
  Eigen::Index lo = 0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    bool split = (k == n) || (out.phases[static_cast<std::size_t>(k)] -
                                  out.phases[static_cast<std::size_t>(k - 1)] >=
                              cluster_gap);
    if (split) {
      if (k - lo > 1) {
        orthonormalize_block(out.vectors, lo, k);
      }
      lo = k;
    }
  }

  CMat lambda = CMat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    lambda(k, k) = std::polar(1.0, out.phases[static_cast<std::size_t>(k)]);
  }
  double residual = (a * out.vectors - out.vectors * lambda).cwiseAbs().maxCoeff();
  if (residual > tol.eig) {
    throw EigFailure("eig_unitary: residual " + std::to_string(residual) +
                     " exceeds tolerance");
  }
  return out;
}

CMat haar_random_unitary(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(i, j) = Complex(re, im) * M_SQRT1_2;
    }
  }
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CVec rdiag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < d; ++j) {
    double mag = std::abs(rdiag(j));
    Complex phase = (mag > 0.0) ? rdiag(j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace qsynth
