#include "harmonium/fermion_spinless.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace harmonium {

KernelParams kernel_params(const Frequencies& f, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  const double om = f.omega, mu = f.mu;
  const double ratio = (mu * mu / (om * om) - 1.0) / n;  // delta/k
  if (ratio + 1.0 / n < 1e-6) {
    std::ostringstream msg;
    msg << "coupling delta/k = " << ratio << " within 1e-6 of the unbinding "
        << "threshold -1/" << n;
    throw divergent_integral(msg.str());
  }
  KernelParams p;
  p.a = mu / 2.0;
  p.b_n = (mu - om) / (2.0 * n);
  // Denominator 4N; see the header note on the 2N-vs-4N resolution.
  p.c_n = (mu - om) * (mu - om) / ((n - 1.0) * om + mu) * (n - 1.0) / (4.0 * n);
  p.a_n = p.a - p.b_n - p.c_n;
  p.beta_sq = (mu - om) / ((n - 1.0) * om + mu);
  p.n = n;
  if (!(p.a_n > std::abs(p.c_n))) {
    std::ostringstream msg;
    msg << "kernel not integrable: a_n = " << p.a_n << " <= |c_n| = "
        << std::abs(p.c_n);
    throw divergent_integral(msg.str());
  }
  return p;
}

BivariatePoly hermite_pair_sum(int terms, double mu, double beta_sq, int cap) {
  if (terms < 1) throw std::domain_error("terms must be >= 1");
  const int deg = 2 * (terms - 1);
  if (deg > cap) {
    std::ostringstream msg;
    msg << "hermite_pair_sum: degree " << deg << " exceeds cap " << cap;
    throw degree_too_large(msg.str());
  }
  const double sm = std::sqrt(mu);
  const LinearForm q{sm * (1.0 - 0.5 * beta_sq), sm * (-0.5 * beta_sq)};
  const LinearForm q_swapped{q.coef_rp, q.coef_r};

  BivariatePoly sum(deg, deg, cap);
  double weight = 1.0;  // 1 / (2^j j!)
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  for (int j = 0; j < terms; ++j) {
    if (j > 0) weight /= 2.0 * j;
    BivariatePoly term = hermite_cross_integral(j, q, q_swapped, beta_sq, cap);
    sum = poly_add(sum, poly_scale(term, weight * inv_sqrt_pi), cap);
  }
  return sum;
}

BivariatePoly density_polynomial(const Frequencies& f, int n, int cap) {
  const KernelParams p = kernel_params(f, n);
  return hermite_pair_sum(n, f.mu, p.beta_sq, cap);
}

double OneBodyKernel::operator()(double r, double rp) const {
  return norm *
         std::exp(-params.a_n * (r * r + rp * rp) + 2.0 * params.c_n * r * rp) *
         poly(r, rp);
}

double kernel_trace(const OneBodyKernel& k) {
  // int rho(r,r) dr: the diagonal Gaussian has exponent 2(a_n - c_n) and the
  // polynomial contributes 1D moments Gamma((d+1)/2) p^{-(d+1)/2}.
  const double p = 2.0 * (k.params.a_n - k.params.c_n);
  if (!(p > 0.0)) throw divergent_integral("kernel trace diverges");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const int deg = k.poly.degree_r();
  std::vector<double> diag_coef(2 * deg + 1, 0.0);
  for (int t = 0; t <= deg; ++t)
    for (int s = 0; s <= k.poly.degree_rp(); ++s)
      diag_coef[t + s] += k.poly.at(t, s);
  double total = 0.0;
  for (int d = 0; d <= 2 * deg; d += 2)
    total += diag_coef[d] * sqrt_pi * gamma_half_ratio(d) *
             std::pow(p, -0.5 * (d + 1));
  return k.norm * total;
}

OneBodyKernel build_kernel(const Frequencies& f, int n) {
  OneBodyKernel k;
  k.params = kernel_params(f, n);
  k.poly = density_polynomial(f, n);
  k.norm = 1.0 / std::sqrt(std::numbers::pi) / std::sqrt(static_cast<double>(n)) *
           std::sqrt(f.omega * f.mu / ((n - 1.0) * f.omega + f.mu));
  const double tr = kernel_trace(k);
  k.trace_defect = tr - 1.0;
  // The closed-form prefactor is cross-checked at build time; a miss beyond
  // tolerance is repaired by rescaling and kept visible in trace_defect.
  if (std::abs(k.trace_defect) > 1e-10) k.norm /= tr;
  return k;
}

namespace {

/// Table of I_(n,m) at the squared-kernel Gaussian parameters (2 a_n, 2 c_n),
/// indexed n * stride + m.
std::vector<double> moment_table(const OneBodyKernel& k, Exec exec) {
  const int deg = k.poly.degree_r();
  const int stride = 2 * deg + 1;
  std::vector<double> table(static_cast<size_t>(stride) * stride, 0.0);
  const double a2 = 2.0 * k.params.a_n, c2 = 2.0 * k.params.c_n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
  for (int n = 0; n < stride; ++n)
    for (int m = 0; m < stride; ++m) {
      if ((n + m) % 2) continue;
      table[static_cast<size_t>(n) * stride + m] = gaussian_moment(n, m, a2, c2);
    }
  return table;
}

}  // namespace

double trace_rho1_squared(const OneBodyKernel& k, Exec exec) {
  const int deg = k.poly.degree_r();

  if (exec == Exec::serial) {
    // Reference path: direct quadruple sum, no table, fixed order.
    const double a2 = 2.0 * k.params.a_n, c2 = 2.0 * k.params.c_n;
    double total = 0.0;
    for (int t = 0; t <= deg; ++t)
      for (int s = 0; s <= deg; ++s) {
        const double cts = k.poly.at(t, s);
        if (cts == 0.0) continue;
        for (int e = 0; e <= deg; ++e)
          for (int fidx = 0; fidx <= deg; ++fidx) {
            const double cef = k.poly.at(e, fidx);
            if (cef == 0.0) continue;
            total += cts * cef * gaussian_moment(t + fidx, e + s, a2, c2);
          }
      }
    return k.norm * k.norm * total;
  }

  // Parallel path: precompute the moment table, then reduce row partials in
  // a fixed order so the result does not depend on the thread count.
  const std::vector<double> table = moment_table(k, exec);
  const int stride = 2 * deg + 1;
  const int rows = (deg + 1) * (deg + 1);
  std::vector<double> partial(rows, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int row = 0; row < rows; ++row) {
    const int t = row / (deg + 1);
    const int s = row % (deg + 1);
    const double cts = k.poly.at(t, s);
    if (cts == 0.0) continue;
    double acc = 0.0;
    for (int e = 0; e <= deg; ++e)
      for (int fidx = 0; fidx <= deg; ++fidx) {
        const double cef = k.poly.at(e, fidx);
        if (cef == 0.0) continue;
        acc += cef * table[static_cast<size_t>(t + fidx) * stride + (e + s)];
      }
    partial[row] = cts * acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return k.norm * k.norm * total;
}

double purity(const Frequencies& f, int n, Exec exec) {
  const OneBodyKernel k = build_kernel(f, n);
  return n * trace_rho1_squared(k, exec);
}

double linear_entropy(const Frequencies& f, int n, Exec exec) {
  return 1.0 - purity(f, n, exec);
}

}  // namespace harmonium
