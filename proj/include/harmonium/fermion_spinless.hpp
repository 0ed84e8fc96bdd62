#pragma once

#include "harmonium/model.hpp"
#include "harmonium/parallel.hpp"
#include "harmonium/polyalg.hpp"

namespace harmonium {

/// Gaussian-part parameters of the spinless one-body kernel
/// rho1(r,r') = norm * e^{-a_n (r^2 + r'^2) + 2 c_n r r'} * P(r,r').
///
/// c_n carries denominator 4N, not the 2N that appears in print: the 2N
/// variant fails pointwise against direct integration of the Vandermonde
/// wavefunction, the 4N variant reproduces it to quadrature accuracy (the
/// verify suite records the comparison). a_n = a - b_n - c_n on top of the
/// corrected c_n, which also makes the closed-form trace come out at 1.
struct KernelParams {
  double a;        // mu/2
  double b_n;      // (mu - omega) / (2N)
  double c_n;      // (mu - omega)^2 / ((N-1) omega + mu) * (N-1) / (4N)
  double a_n;      // a - b_n - c_n
  double beta_sq;  // (mu - omega) / ((N-1) omega + mu)
  int n;
};

KernelParams kernel_params(const Frequencies& f, int n);

/// Coefficient polynomial sum_j (1/2^j j!) * hermite_cross_integral(j, q, q',
/// beta^2) / sqrt(pi), j = 0..terms-1, with q = sqrt(mu)[r - beta^2(r+r')/2].
/// Shared by the spinless and spinned pipelines.
BivariatePoly hermite_pair_sum(int terms, double mu, double beta_sq,
                               int cap = kDefaultDegreeCap);

/// The c^N_{t,s} polynomial of the spinless density, degree 2(N-1).
BivariatePoly density_polynomial(const Frequencies& f, int n,
                                 int cap = kDefaultDegreeCap);

/// Gaussian-times-polynomial reduced density kernel with unit trace.
struct OneBodyKernel {
  KernelParams params;
  BivariatePoly poly;
  double norm;
  /// Deviation of the closed-form trace from the target before any rescale;
  /// nonzero only if the closed-form prefactor missed.
  double trace_defect = 0.0;

  double operator()(double r, double rp) const;
};

/// Closed-form trace integral of a Gaussian x polynomial kernel.
double kernel_trace(const OneBodyKernel& k);

OneBodyKernel build_kernel(const Frequencies& f, int n);

/// Tr[rho1^2] assembled from gaussian_moment over the coefficient pairs.
double trace_rho1_squared(const OneBodyKernel& k, Exec exec = Exec::parallel);

/// Purity Pi_N = N Tr[rho1^2], in (0, 1].
double purity(const Frequencies& f, int n, Exec exec = Exec::parallel);

/// S_L = 1 - Pi_N.
double linear_entropy(const Frequencies& f, int n, Exec exec = Exec::parallel);

}  // namespace harmonium
