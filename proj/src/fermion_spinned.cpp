#include "harmonium/fermion_spinned.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace harmonium {

SpinnedKernelParams spinned_kernel_params(const Frequencies& f, int n_pairs) {
  if (n_pairs < 1) throw std::domain_error("n_pairs must be >= 1");
  const double om = f.omega, mu = f.mu;
  const int n_total = 2 * n_pairs;
  const double ratio = (mu * mu / (om * om) - 1.0) / n_total;
  if (ratio + 1.0 / n_total < 1e-6) {
    std::ostringstream msg;
    msg << "coupling delta/k = " << ratio << " within 1e-6 of the unbinding "
        << "threshold -1/" << n_total;
    throw divergent_integral(msg.str());
  }
  SpinnedKernelParams p;
  p.a = mu / 2.0;
  p.b_2n = (mu - om) / (4.0 * n_pairs);
  p.c_tilde = (mu - om) * (mu - om) / ((2.0 * n_pairs - 1.0) * om + mu) *
              (2.0 * n_pairs - 1.0) / (8.0 * n_pairs);
  p.a_prime = p.a - p.b_2n - p.c_tilde;
  p.beta_sq_2n = (mu - om) / ((2.0 * n_pairs - 1.0) * om + mu);
  p.n_pairs = n_pairs;
  if (!(p.a_prime > std::abs(p.c_tilde))) {
    std::ostringstream msg;
    msg << "spin block not integrable: a' = " << p.a_prime
        << " <= |c~| = " << std::abs(p.c_tilde);
    throw divergent_integral(msg.str());
  }
  return p;
}

SpinBlockKernel spinned_block(const Frequencies& f, int n_pairs) {
  const SpinnedKernelParams sp = spinned_kernel_params(f, n_pairs);

  OneBodyKernel block;
  block.params = KernelParams{sp.a, sp.b_2n, sp.c_tilde, sp.a_prime,
                              sp.beta_sq_2n, n_pairs};
  block.poly = hermite_pair_sum(n_pairs, f.mu, sp.beta_sq_2n);
  // (1/2pi)(1/sqrt N) sqrt(2 w mu / ((2N-1) w + mu)) times the sqrt(pi)
  // factored out of the Hermite sum.
  block.norm = 0.5 / std::sqrt(std::numbers::pi) /
               std::sqrt(static_cast<double>(n_pairs)) *
               std::sqrt(2.0 * f.omega * f.mu /
                         ((2.0 * n_pairs - 1.0) * f.omega + f.mu));
  const double tr = kernel_trace(block);
  block.trace_defect = tr - 0.5;
  if (std::abs(block.trace_defect) > 1e-10) block.norm *= 0.5 / tr;
  return SpinBlockKernel{block, n_pairs};
}

double spinned_purity(const Frequencies& f, int n_pairs, Exec exec) {
  // Pi = n_total Tr[rho1^2]; rho1 has two identical blocks, so
  // Tr[rho1^2] = 2 Tr[block^2]. With block trace 1/2 this gives Pi = 1 at
  // delta = 0 exactly.
  const SpinBlockKernel b = spinned_block(f, n_pairs);
  return 2.0 * n_pairs * 2.0 * trace_rho1_squared(b.up_block, exec);
}

double spinned_linear_entropy(const Frequencies& f, int n_pairs, Exec exec) {
  return 1.0 - spinned_purity(f, n_pairs, exec);
}

}  // namespace harmonium
