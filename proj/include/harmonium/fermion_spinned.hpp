#pragma once

#include "harmonium/fermion_spinless.hpp"

namespace harmonium {

/// Parameters of one spin block of the closed-shell 2N-fermion kernel.
/// Frequencies must be computed with n_total = 2 * n_pairs.
struct SpinnedKernelParams {
  double a;           // mu/2
  double b_2n;        // (mu - omega) / (4N)
  double c_tilde;     // (mu - omega)^2 / ((2N-1) omega + mu) * (2N-1) / (8N)
  double a_prime;     // a - b_2n - c_tilde
  double beta_sq_2n;  // (mu - omega) / ((2N-1) omega + mu)
  int n_pairs;
};

SpinnedKernelParams spinned_kernel_params(const Frequencies& f, int n_pairs);

/// The full spinned rho1 is block-diagonal in spin with two identical
/// blocks; up_block holds the shared block, normalised to trace 1/2.
struct SpinBlockKernel {
  OneBodyKernel up_block;
  int n_pairs;
};

SpinBlockKernel spinned_block(const Frequencies& f, int n_pairs);

/// Total purity Pi = 2N Tr[rho1^2] = 4N Tr[block^2]. The factor-of-two
/// bookkeeping (two spin blocks, 2N particles) lives here and nowhere else.
double spinned_purity(const Frequencies& f, int n_pairs,
                      Exec exec = Exec::parallel);

double spinned_linear_entropy(const Frequencies& f, int n_pairs,
                              Exec exec = Exec::parallel);

}  // namespace harmonium
