#include "qsynth/stateprep.hpp"

#include <cmath>

#include "qsynth/csynth.hpp"
#include "qsynth/matcore.hpp"

namespace qsynth {

std::vector<double> tail_norms(const CVec& x) {
  const Eigen::Index d = x.size();
  std::vector<double> n(static_cast<std::size_t>(d));
  double acc = 0.0;
  for (Eigen::Index i = d - 1; i >= 0; --i) {
    acc += std::norm(x(i));
    n[static_cast<std::size_t>(i)] = std::sqrt(acc);
  }
  return n;
}

std::vector<CMat> givens_chain(const CVec& x) {
  const Eigen::Index d = x.size();
  if (d < 2) {
    throw DimMismatch("givens_chain: requires d >= 2");
  }
  std::vector<double> n = tail_norms(x);
  if (n[0] == 0.0) {
    throw ZeroVector("givens_chain: zero input vector");
  }
  std::vector<CMat> hs;
  hs.reserve(static_cast<std::size_t>(d - 1));
  for (Eigen::Index k = 0; k <= d - 3; ++k) {
    CMat h = CMat::Identity(d, d);
    double nk = n[static_cast<std::size_t>(k)];
    if (nk != 0.0) {
      double nk1 = n[static_cast<std::size_t>(k + 1)];
      h(k, k) = x(k) / nk;
      h(k, k + 1) = -nk1 / nk;
      h(k + 1, k) = nk1 / nk;
      h(k + 1, k + 1) = std::conj(x(k)) / nk;
    }
    hs.push_back(std::move(h));
  }
  {
    Eigen::Index k = d - 2;
    CMat h = CMat::Identity(d, d);
    double nk = n[static_cast<std::size_t>(k)];
    if (nk != 0.0) {
      h(k, k) = x(k) / nk;
      h(k, k + 1) = -std::conj(x(k + 1)) / nk;
      h(k + 1, k) = x(k + 1) / nk;
      h(k + 1, k + 1) = std::conj(x(k)) / nk;
    }
    hs.push_back(std::move(h));
  }
  return hs;
}

CMat t_k(const CVec& x, Eigen::Index k) {
  const Eigen::Index d = x.size();
  if (k < 0 || k >= d) {
    throw IndexOutOfRange("t_k: k out of range");
  }
  std::vector<CMat> hs = givens_chain(x);
  CMat chain = CMat::Identity(d, d);
  for (const CMat& h : hs) {
    chain = h * chain;  // chain = h_{d-2} ... h_0
  }
  return p_matrix(d, 0, k) * chain.adjoint();
}

Circuit s_tilde(const CVec& x_tilde, Eigen::Index a, Eigen::Index b, bool prune_zero) {
  const Eigen::Index n = x_tilde.size();
  Eigen::Index d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d < 2 || d * d != n) {
    throw DimMismatch("s_tilde: state length is not d^2 with d >= 2");
  }
  if (a < 0 || a >= d || b < 0 || b >= d) {
    throw IndexOutOfRange("s_tilde: basis indices out of range");
  }
  if (std::abs(x_tilde.squaredNorm() - 1.0) > Tolerances{}.norm) {
    throw NotNormalized("s_tilde: input state is not normalized");
  }

  Circuit out;
  out.dim = d;
  CVec y(d);
  for (Eigen::Index i = d - 1; i >= 0; --i) {
    CVec slice = x_tilde.segment(i * d, d);
    double nrm = slice.norm();
    y(i) = nrm;
    if (nrm == 0.0) {
      if (!prune_zero) {
        out.append(c_u(d, i, CMat::Identity(d, d), 0));
      }
      continue;
    }
    out.append(c_u(d, i, t_k(slice, b), 0));
  }
  // y is real nonnegative with ||y|| = 1; control rides on the target line.
  out.append(c_u(d, b, t_k(y, a), 1));
  return out;
}

}  // namespace qsynth
