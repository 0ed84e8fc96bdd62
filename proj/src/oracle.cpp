#include "harmonium/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "harmonium/boson.hpp"
#include "harmonium/errors.hpp"
#include "harmonium/polyalg.hpp"

namespace harmonium::oracle {

namespace {

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come
/// from the first eigenvector components.
QuadratureRule golub_welsch(const std::vector<double>& off_diag, double mu0,
                            QuadratureRule::Kind kind) {
  const int n = static_cast<int>(off_diag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = off_diag[i];
    jacobi(i + 1, i) = off_diag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadratureRule rule;
  rule.kind = kind;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw std::domain_error("gauss_hermite: n >= 1");
  std::vector<double> off(n - 1);
  for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(0.5 * i);
  return golub_welsch(off, std::sqrt(std::numbers::pi),
                      QuadratureRule::Kind::gauss_hermite);
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::domain_error("gauss_legendre: n >= 1");
  std::vector<double> off(n - 1);
  for (int i = 1; i < n; ++i)
    off[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  QuadratureRule rule =
      golub_welsch(off, 2.0, QuadratureRule::Kind::gauss_legendre);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (auto& x : rule.nodes) x = mid + half * x;
  for (auto& w : rule.weights) w *= half;
  return rule;
}

namespace {

/// Vandermonde x Gaussian, no normalisation.
double psi_unnormalized(const Frequencies& f, std::span<const double> pos) {
  const int n = static_cast<int>(pos.size());
  double v = vandermonde(pos);
  double sum = 0.0, sum_sq = 0.0;
  for (double r : pos) {
    sum += r;
    sum_sq += r * r;
  }
  return v * std::exp(-0.5 * (f.omega - f.mu) * sum * sum / n -
                      0.5 * f.mu * sum_sq);
}

/// Integral of |Psi_u|^2 over all N coordinates on a tensor Gauss-Hermite
/// grid with the substitution x_i = y_i / sqrt(mu).
double wavefunction_norm_sq(const Frequencies& f, int n, int nodes) {
  const QuadratureRule gh = gauss_hermite(nodes);
  const double inv_sm = 1.0 / std::sqrt(f.mu);
  const double om_mu = f.omega - f.mu;
  long total = 1;
  for (int d = 0; d < n; ++d) total *= nodes;

  double acc = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : acc) schedule(static)
#endif
  for (long flat = 0; flat < total; ++flat) {
    long rem = flat;
    double w = 1.0, sum = 0.0;
    double x[4];
    for (int d = 0; d < n; ++d) {
      const int idx = static_cast<int>(rem % nodes);
      rem /= nodes;
      x[d] = gh.nodes[idx] * inv_sm;
      w *= gh.weights[idx];
      sum += x[d];
    }
    double v = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v *= x[i] - x[j];
    // |Psi_u|^2 with the e^{-mu x^2} part absorbed into the GH weight
    acc += w * v * v * std::exp(-om_mu * sum * sum / n);
  }
  return acc * std::pow(f.mu, -0.5 * n);
}

}  // namespace

SpinlessWavefunction::SpinlessWavefunction(const Frequencies& f, int n,
                                           int nodes_per_axis)
    : f_(f), n_(n) {
  if (n < 1 || n > 4)
    throw std::domain_error("SpinlessWavefunction supports N <= 4");
  norm_ = std::sqrt(wavefunction_norm_sq(f, n, nodes_per_axis));
}

double SpinlessWavefunction::unnormalized(std::span<const double> pos) const {
  return psi_unnormalized(f_, pos);
}

double SpinlessWavefunction::operator()(std::span<const double> pos) const {
  return psi_unnormalized(f_, pos) / norm_;
}

double wavefunction_spinless(const Frequencies& f, int n,
                             std::span<const double> positions) {
  return SpinlessWavefunction(f, n)(positions);
}

DirectRho1::DirectRho1(const Frequencies& f, int n, int nodes_per_axis)
    : f_(f), n_(n) {
  if (n != 2 && n != 3)
    throw std::domain_error("DirectRho1 supports N in {2, 3}");
  const QuadratureRule gh = gauss_hermite(nodes_per_axis);
  nodes_ = gh.nodes;
  weights_ = gh.weights;
  inv_norm_sq_ = 1.0 / wavefunction_norm_sq(f, n, nodes_per_axis);
}

double DirectRho1::operator()(double r, double rp) const {
  const int g = static_cast<int>(nodes_.size());
  const double inv_sm = 1.0 / std::sqrt(f_.mu);
  const double om_mu = f_.omega - f_.mu;
  const double base = -0.5 * f_.mu * (r * r + rp * rp);
  double acc = 0.0;
  if (n_ == 2) {
    for (int i = 0; i < g; ++i) {
      const double x = nodes_[i] * inv_sm;
      const double s1 = r + x, s2 = rp + x;
      acc += weights_[i] * (r - x) * (rp - x) *
             std::exp(-0.25 * om_mu * (s1 * s1 + s2 * s2) + base);
    }
  } else {
    for (int i = 0; i < g; ++i) {
      const double x = nodes_[i] * inv_sm;
      for (int j = 0; j < g; ++j) {
        const double y = nodes_[j] * inv_sm;
        const double s1 = r + x + y, s2 = rp + x + y;
        const double v = (r - x) * (r - y) * (x - y);
        const double vp = (rp - x) * (rp - y) * (x - y);
        acc += weights_[i] * weights_[j] * v * vp *
               std::exp(-om_mu * (s1 * s1 + s2 * s2) / 6.0 + base);
      }
    }
  }
  return acc * std::pow(f_.mu, -0.5 * (n_ - 1)) * inv_norm_sq_;
}

std::vector<double> DirectRho1::on_grid(std::span<const double> r,
                                        std::span<const double> rp,
                                        Exec exec) const {
  const int nr = static_cast<int>(r.size());
  const int np = static_cast<int>(rp.size());
  std::vector<double> out(static_cast<size_t>(nr) * np);
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) \
    if (exec == Exec::parallel)
#endif
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < np; ++j)
      out[static_cast<size_t>(i) * np + j] = (*this)(r[i], rp[j]);
  return out;
}

SpectralResult nystrom_occupations(const KernelFn& kernel, double half_width,
                                   int grid_size, Exec exec) {
  const auto solve = [&](int g) {
    const QuadratureRule gl = gauss_legendre(g, -half_width, half_width);
    Eigen::MatrixXd m(g, g);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
    for (int i = 0; i < g; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = std::sqrt(gl.weights[i] * gl.weights[j]) *
                         kernel(gl.nodes[i], gl.nodes[j]);
        m(i, j) = v;
        m(j, i) = v;
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + g);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
  };

  SpectralResult res;
  res.grid_size = grid_size;
  res.eigenvalues = solve(grid_size);
  const std::vector<double> coarse = solve(std::max(grid_size / 2, 2));
  res.residual = std::abs(res.eigenvalues[0] - coarse[0]);
  res.converged = res.residual <= 1e-6;
  return res;
}

double GaussianKernel::operator()(double r, double rp) const {
  return norm * std::exp(-diag * (r * r + rp * rp) + 2.0 * cross * r * rp);
}

GaussianKernel wigner_to_position_kernel(const Frequencies& f, int n) {
  // rho(r,r') = int W((r+r')/2, p) e^{i p (r-r')} dp applied to the 1D
  // Gibbs factor (lambda/pi) e^{-lambda (gamma^2 r^2 + p^2/gamma^2)}.
  const BosonOneBody ob = boson_one_body(f, n);
  const double g2 = ob.gamma_n * ob.gamma_n;
  const double lam = ob.lambda_n;
  GaussianKernel k;
  k.norm = ob.gamma_n * std::sqrt(lam / std::numbers::pi);
  k.diag = 0.25 * g2 * (lam + 1.0 / lam);
  k.cross = 0.25 * g2 * (1.0 / lam - lam);
  return k;
}

double entropy_by_summation(double t, double floor) {
  if (t <= 0.0) return 0.0;
  double n = 1.0 - t;
  double s = 0.0;
  for (long r = 0; r < 1000000 && n >= floor; ++r, n *= t)
    s -= n * std::log(n);
  return s;
}

double purity_by_quadrature(const KernelFn& kernel, double half_width,
                            int nodes, Exec exec) {
  const QuadratureRule gl = gauss_legendre(nodes, -half_width, half_width);
  std::vector<double> partial(nodes, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
  for (int i = 0; i < nodes; ++i) {
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const double v = kernel(gl.nodes[i], gl.nodes[j]);
      acc += gl.weights[j] * v * v;
    }
    partial[i] = gl.weights[i] * acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double trace_by_quadrature(const KernelFn& kernel, double half_width,
                           int nodes) {
  const QuadratureRule gl = gauss_legendre(nodes, -half_width, half_width);
  double total = 0.0;
  for (int i = 0; i < nodes; ++i)
    total += gl.weights[i] * kernel(gl.nodes[i], gl.nodes[i]);
  return total;
}

}  // namespace harmonium::oracle
