#include "harmonium/boson.hpp"

#include <cmath>
#include <numbers>

#include "harmonium/errors.hpp"

namespace harmonium {

namespace {

double a_big(double om, double mu, double n) {
  return ((n - 1.0) * om + mu) * (om + (n - 1.0) * mu);
}

double entropy_nats(double t) {
  if (t <= 0.0) return 0.0;
  return -std::log1p(-t) - t / (1.0 - t) * std::log(t);
}

}  // namespace

BosonOneBody boson_one_body(const Frequencies& f, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  const double om = f.omega, mu = f.mu;
  const double A = a_big(om, mu, n);
  const double lambda = n * std::sqrt(om * mu) / std::sqrt(A);
  const double t = (1.0 - lambda) / (1.0 + lambda);
  const double gamma =
      std::pow(om * mu, 0.25) *
      std::pow((om + (n - 1.0) * mu) / ((n - 1.0) * om + mu), 0.25);
  return BosonOneBody{lambda, t, gamma, A};
}

double occupation_number(const BosonOneBody& ob, long r) {
  if (r < 0) throw std::domain_error("r must be >= 0");
  if (ob.t_n == 0.0) return r == 0 ? 1.0 : 0.0;
  return (1.0 - ob.t_n) * std::pow(ob.t_n, static_cast<double>(r));
}

double von_neumann_entropy(const BosonOneBody& ob, LogBase base) {
  const double s = entropy_nats(ob.t_n);
  return base == LogBase::natural ? s : s / std::numbers::ln2;
}

double quasidensity_1d(const Frequencies& f, int n, double r, double p) {
  const double om = f.omega, mu = f.mu;
  const double A = a_big(om, mu, n);
  const double pref = n / std::numbers::pi * std::sqrt(om * mu / A);
  return pref * std::exp(-n * om * mu * r * r / ((n - 1.0) * om + mu) -
                         n * p * p / (om + (n - 1.0) * mu));
}

double quasidensity(const Frequencies& f, int n, const std::array<double, 3>& r,
                    const std::array<double, 3>& p) {
  double v = 1.0;
  for (int d = 0; d < 3; ++d) v *= quasidensity_1d(f, n, r[d], p[d]);
  return v;
}

double entropy_at_continuous_n(double n, double coupling_ratio,
                               double well_constant) {
  const double k = well_constant;
  const double om = std::sqrt(k);
  const double mu_sq = k * (1.0 + n * coupling_ratio);
  if (mu_sq <= 0.0) return 0.0;
  const double mu = std::sqrt(mu_sq);
  const double lambda = n * std::sqrt(om * mu) / std::sqrt(a_big(om, mu, n));
  return entropy_nats((1.0 - lambda) / (1.0 + lambda));
}

double critical_particle_number(double coupling_ratio, double well_constant) {
  if (!(coupling_ratio > 0.0))
    throw std::domain_error("critical_particle_number needs delta/k > 0");

  double lo = 1.0, hi = 100.0;
  const auto s = [&](double n) {
    return entropy_at_continuous_n(n, coupling_ratio, well_constant);
  };

  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = s(x1), f2 = s(x2);
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2; f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = s(x2);
    } else {
      hi = x2;
      x2 = x1; f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = s(x1);
    }
  }
  const double n_star = 0.5 * (lo + hi);
  // Monotone objectives collapse onto a bracket endpoint.
  if (n_star - 1.0 < 1e-3 || 100.0 - n_star < 1e-3)
    throw no_interior_maximum("entropy is monotone on N in [1, 100]");
  return n_star;
}

}  // namespace harmonium
