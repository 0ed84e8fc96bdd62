#include "harmonium/polyalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace harmonium {

namespace {

void check_degree(int deg, int cap, const char* where) {
  if (deg > cap) {
    std::ostringstream msg;
    msg << where << ": degree " << deg << " exceeds cap " << cap;
    throw degree_too_large(msg.str());
  }
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.assign(1, 0.0);
}

double UnivariatePoly::operator()(double x) const {
  double v = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

BivariatePoly::BivariatePoly(int deg_r, int deg_rp, int cap)
    : rows_(deg_r + 1), cols_(deg_rp + 1),
      c_(static_cast<size_t>(deg_r + 1) * (deg_rp + 1), 0.0) {
  check_degree(deg_r, cap, "BivariatePoly");
  check_degree(deg_rp, cap, "BivariatePoly");
}

double BivariatePoly::operator()(double r, double rp) const {
  double v = 0.0;
  for (int i = rows_; i-- > 0;) {
    double row = 0.0;
    for (int j = cols_; j-- > 0;) row = row * rp + at(i, j);
    v = v * r + row;
  }
  return v;
}

bool BivariatePoly::is_symmetric(double tol) const {
  const int n = std::max(rows_, cols_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double a = (i < rows_ && j < cols_) ? at(i, j) : 0.0;
      const double b = (j < rows_ && i < cols_) ? at(j, i) : 0.0;
      if (std::abs(a - b) > tol) return false;
    }
  return true;
}

UnivariatePoly hermite(int n, int cap) {
  if (n < 0) throw std::domain_error("hermite: n must be >= 0");
  check_degree(n, cap, "hermite");
  std::vector<double> prev{1.0};
  if (n == 0) return UnivariatePoly(prev);
  std::vector<double> cur{0.0, 2.0};
  for (int m = 1; m < n; ++m) {
    // H_{m+1} = 2 x H_m - 2 m H_{m-1}
    std::vector<double> nxt(m + 2, 0.0);
    for (int i = 0; i <= m; ++i) nxt[i + 1] += 2.0 * cur[i];
    for (int i = 0; i < m; ++i) nxt[i] -= 2.0 * m * prev[i];
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return UnivariatePoly(cur);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return std::round(v);
}

double gamma_half_ratio(int n) {
  // (n-1)!!/2^{n/2} for even n; equals Gamma((n+1)/2)/Gamma(1/2).
  double v = 1.0;
  for (int i = 1; i < n; i += 2) v *= 0.5 * i;
  return v;
}

BivariatePoly poly_compose_linear(const UnivariatePoly& p, const LinearForm& f,
                                  int cap) {
  const int deg = p.degree();
  check_degree(deg, cap, "poly_compose_linear");
  BivariatePoly out(deg, deg, cap);
  for (int k = 0; k <= deg; ++k) {
    const double ck = p.coeffs()[k];
    if (ck == 0.0) continue;
    // (A r + B r')^k
    for (int i = 0; i <= k; ++i)
      out.at(k - i, i) += ck * binomial(k, i) *
                          std::pow(f.coef_r, k - i) * std::pow(f.coef_rp, i);
  }
  return out;
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b,
                       int cap) {
  const int dr = a.degree_r() + b.degree_r();
  const int dp = a.degree_rp() + b.degree_rp();
  check_degree(dr, cap, "poly_mul");
  check_degree(dp, cap, "poly_mul");
  BivariatePoly out(dr, dp, cap);
  for (int i = 0; i <= a.degree_r(); ++i)
    for (int j = 0; j <= a.degree_rp(); ++j) {
      const double va = a.at(i, j);
      if (va == 0.0) continue;
      for (int k = 0; k <= b.degree_r(); ++k)
        for (int l = 0; l <= b.degree_rp(); ++l)
          out.at(i + k, j + l) += va * b.at(k, l);
    }
  return out;
}

BivariatePoly poly_add(const BivariatePoly& a, const BivariatePoly& b,
                       int cap) {
  BivariatePoly out(std::max(a.degree_r(), b.degree_r()),
                    std::max(a.degree_rp(), b.degree_rp()), cap);
  for (int i = 0; i <= a.degree_r(); ++i)
    for (int j = 0; j <= a.degree_rp(); ++j) out.at(i, j) += a.at(i, j);
  for (int i = 0; i <= b.degree_r(); ++i)
    for (int j = 0; j <= b.degree_rp(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

BivariatePoly poly_scale(const BivariatePoly& a, double s) {
  BivariatePoly out = a;
  for (int i = 0; i <= out.degree_r(); ++i)
    for (int j = 0; j <= out.degree_rp(); ++j) out.at(i, j) *= s;
  return out;
}

BivariatePoly hermite_cross_integral(int k, const LinearForm& q_a,
                                     const LinearForm& q_b, double beta_sq,
                                     int cap) {
  if (k < 0) throw std::domain_error("hermite_cross_integral: k >= 0");
  check_degree(2 * k, cap, "hermite_cross_integral");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  BivariatePoly out(2 * k, 2 * k, cap);

  // Precompose H_{k-n}(q) once per degree.
  std::vector<BivariatePoly> ha(k + 1), hb(k + 1);
  for (int n = 0; n <= k; ++n) {
    ha[n] = poly_compose_linear(hermite(k - n, cap), q_a, cap);
    hb[n] = poly_compose_linear(hermite(k - n, cap), q_b, cap);
  }

  // Sum over even n1+n2 = 2s. The sign flips from H(-q) = (-1)^deg H(q)
  // cancel pairwise, and (2 beta)^{2s} = (4 beta_sq)^s keeps everything real
  // on the attractive branch where beta itself would be imaginary.
  const double w = 4.0 * beta_sq;
  for (int n1 = 0; n1 <= k; ++n1)
    for (int n2 = (n1 % 2); n2 <= k; n2 += 2) {
      const int s = (n1 + n2) / 2;
      double coef = sqrt_pi * binomial(k, n1) * binomial(k, n2) *
                    gamma_half_ratio(2 * s) * std::pow(w, s);
      BivariatePoly term = poly_mul(ha[n1], hb[n2], cap);
      out = poly_add(out, poly_scale(term, coef), cap);
    }
  return out;
}

double gaussian_moment(int n, int m, double a, double c, MomentGammaForm form) {
  if (n < 0 || m < 0) throw std::domain_error("gaussian_moment: n,m >= 0");
  if (!(a > std::abs(c))) {
    std::ostringstream msg;
    msg << "gaussian_moment diverges: a = " << a << " <= |c| = " << std::abs(c);
    throw divergent_integral(msg.str());
  }
  if ((n + m) % 2) return 0.0;

  const double pi = std::numbers::pi;
  const double l1 = 2.0 * (a - c), l2 = 2.0 * (a + c);
  const double printed_gamma = gamma_half_ratio(n + m);

  // After x = u+v, y = u-v the integral splits into 1D moments with
  // exponents lambda1, lambda2; odd powers vanish.
  double total = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = (i % 2); j <= m; j += 2) {
      const int u2 = n + m - i - j;  // even by construction
      const int v2 = i + j;
      const double g2 = (form == MomentGammaForm::radial_split)
                            ? gamma_half_ratio(v2)
                            : printed_gamma;
      total += binomial(n, i) * binomial(m, j) * ((j % 2) ? -1.0 : 1.0) *
               gamma_half_ratio(u2) * g2 *
               std::pow(l1, -0.5 * (u2 + 1)) * std::pow(l2, -0.5 * (v2 + 1));
    }
  return 2.0 * pi * total;
}

double vandermonde(std::span<const double> points) {
  double v = 1.0;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) v *= points[i] - points[j];
  return v;
}

}  // namespace harmonium
