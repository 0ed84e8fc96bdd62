#pragma once

#include <functional>
#include <span>
#include <vector>

#include "harmonium/model.hpp"
#include "harmonium/parallel.hpp"

namespace harmonium::oracle {

/// Quadrature rule; Gauss-Hermite rules carry the e^{-x^2} weight.
struct QuadratureRule {
  enum class Kind { gauss_hermite, gauss_legendre };
  std::vector<double> nodes;
  std::vector<double> weights;
  Kind kind;
};

QuadratureRule gauss_hermite(int n);
QuadratureRule gauss_legendre(int n, double a, double b);

/// Normalised spinless ground-state wavefunction for N <= 4 (Vandermonde x
/// Gaussian); the normalisation integral is evaluated numerically on an
/// N-dimensional Gauss-Hermite grid at construction.
class SpinlessWavefunction {
 public:
  SpinlessWavefunction(const Frequencies& f, int n, int nodes_per_axis = 80);
  double operator()(std::span<const double> positions) const;
  double unnormalized(std::span<const double> positions) const;
  double norm() const { return norm_; }

 private:
  Frequencies f_;
  int n_;
  double norm_;
};

double wavefunction_spinless(const Frequencies& f, int n,
                             std::span<const double> positions);

/// rho1(r, r') by (N-1)-dimensional tensor-product Gauss-Hermite quadrature
/// of Psi(r, x...) Psi(r', x...), N in {2, 3}. Accuracy ~1e-9 at the default
/// 80 nodes per axis.
class DirectRho1 {
 public:
  DirectRho1(const Frequencies& f, int n, int nodes_per_axis = 80);
  double operator()(double r, double rp) const;

  /// Evaluate on a grid of (r, r') pairs; parallel over points.
  std::vector<double> on_grid(std::span<const double> r,
                              std::span<const double> rp,
                              Exec exec = Exec::parallel) const;

 private:
  Frequencies f_;
  int n_;
  std::vector<double> nodes_, weights_;
  double inv_norm_sq_;
};

struct SpectralResult {
  std::vector<double> eigenvalues;  // descending
  int grid_size;
  /// Shift of the top eigenvalue when the grid is halved; > 1e-6 means the
  /// grid has not converged.
  double residual;
  bool converged;
};

using KernelFn = std::function<double(double, double)>;

/// Eigenvalues of the symmetric kernel via the weighted Gram matrix
/// K_ij = sqrt(w_i w_j) k(x_i, x_j) on a Gauss-Legendre grid over
/// [-half_width, half_width].
SpectralResult nystrom_occupations(const KernelFn& kernel, double half_width,
                                   int grid_size, Exec exec = Exec::parallel);

/// Gaussian kernel norm * e^{-diag (r^2 + r'^2) + 2 cross r r'}.
struct GaussianKernel {
  double norm, diag, cross;
  double operator()(double r, double rp) const;
};

/// Position-space kernel of the 1D factor of the bosonic quasidensity,
/// obtained by Fourier transform over momentum at the midpoint. Spectrum is
/// the geometric sequence (1-t) t^r.
GaussianKernel wigner_to_position_kernel(const Frequencies& f, int n);

/// -sum_r n_r log n_r by direct summation, truncated at n_r < floor or
/// r = 10^6.
double entropy_by_summation(double t, double floor = 1e-18);

/// Tr[rho^2] = int int rho(r,r')^2 dr dr' by 2D Gauss-Legendre quadrature.
double purity_by_quadrature(const KernelFn& kernel, double half_width,
                            int nodes = 400, Exec exec = Exec::parallel);

/// int rho(r,r) dr by 1D quadrature.
double trace_by_quadrature(const KernelFn& kernel, double half_width,
                           int nodes = 400);

}  // namespace harmonium::oracle
