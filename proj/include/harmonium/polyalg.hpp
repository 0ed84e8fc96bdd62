#pragma once

#include <span>
#include <vector>

#include "harmonium/errors.hpp"

namespace harmonium {

inline constexpr int kDefaultDegreeCap = 64;

/// Dense univariate polynomial, coeffs[k] multiplies x^k.
class UnivariatePoly {
 public:
  UnivariatePoly() : coeffs_(1, 0.0) {}
  explicit UnivariatePoly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

/// alpha * r + alpha' * r', the shape of the q_(r,r') arguments.
struct LinearForm {
  double coef_r = 0.0;
  double coef_rp = 0.0;
};

/// Dense bivariate polynomial; coefficient (i,j) multiplies r^i r'^j.
class BivariatePoly {
 public:
  BivariatePoly() : rows_(1), cols_(1), c_(1, 0.0) {}
  BivariatePoly(int deg_r, int deg_rp, int cap = kDefaultDegreeCap);

  int degree_r() const { return rows_ - 1; }
  int degree_rp() const { return cols_ - 1; }
  double at(int i, int j) const { return c_[static_cast<size_t>(i) * cols_ + j]; }
  double& at(int i, int j) { return c_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(double r, double rp) const;

  bool is_symmetric(double tol = 0.0) const;

 private:
  int rows_, cols_;
  std::vector<double> c_;
};

/// Physicists' Hermite polynomial H_n via the three-term recurrence.
/// Integer coefficients are exact for n <= 20.
UnivariatePoly hermite(int n, int cap = kDefaultDegreeCap);

BivariatePoly poly_compose_linear(const UnivariatePoly& p, const LinearForm& f,
                                  int cap = kDefaultDegreeCap);
BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b,
                       int cap = kDefaultDegreeCap);
BivariatePoly poly_add(const BivariatePoly& a, const BivariatePoly& b,
                       int cap = kDefaultDegreeCap);
BivariatePoly poly_scale(const BivariatePoly& a, double s);

/// int e^{-u^2} H_k(q_a - beta u) H_k(q_b - beta u) du as a bivariate
/// polynomial in (r, r'). Only even powers of beta survive, so the sum is
/// organised over beta_sq = beta^2 and stays real for beta_sq < 0 (the
/// attractive branch). The sqrt(pi) of the Gaussian measure is included.
BivariatePoly hermite_cross_integral(int k, const LinearForm& q_a,
                                     const LinearForm& q_b, double beta_sq,
                                     int cap = kDefaultDegreeCap);

/// Which form of the second gamma factor the closed-form moment uses. The
/// radial_split form Gamma((i+j+1)/2) is the one the quadrature oracle
/// confirms; as_printed keeps Gamma((n+m+1)/2) for comparison only.
enum class MomentGammaForm { radial_split, as_printed };

/// I_(n,m) = int int x^n y^m e^{-a(x^2+y^2) + 2 c x y} dx dy, a > |c|.
/// Symmetric in (n,m); zero for odd n+m.
double gaussian_moment(int n, int m, double a, double c,
                       MomentGammaForm form = MomentGammaForm::radial_split);

/// Product over i<j of (points[i] - points[j]).
double vandermonde(std::span<const double> points);

/// Exact binomial coefficient as a double, n <= kDefaultDegreeCap.
double binomial(int n, int k);

/// (n-1)!! / 2^(n/2) for even n >= 0, i.e. Gamma((n+1)/2)/sqrt(pi).
double gamma_half_ratio(int n);

}  // namespace harmonium
