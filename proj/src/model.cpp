#include "harmonium/model.hpp"

#include <cmath>
#include <sstream>

namespace harmonium {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::boson: return "boson";
    case Variant::fermion_spinless: return "fermion-spinless";
    case Variant::fermion_spinned: return "fermion-spinned";
  }
  return "?";
}

Frequencies frequencies(const ModelParams& params, int n_total) {
  if (params.n_particles < 1)
    throw std::domain_error("n_particles must be >= 1");
  if (!(params.well_constant > 0.0))
    throw std::domain_error("well_constant must be > 0");
  if (n_total < 1) throw std::domain_error("n_total must be >= 1");

  const double k = params.well_constant;
  const double mu_sq = k * (1.0 + n_total * params.coupling_ratio);
  if (mu_sq <= 0.0) {
    std::ostringstream msg;
    msg << "system unbound: delta/k = " << params.coupling_ratio
        << " <= -1/" << n_total;
    throw unbound_system(msg.str());
  }
  return Frequencies{std::sqrt(k), std::sqrt(mu_sq)};
}

double boson_ground_energy(const Frequencies& f, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  return 1.5 * (f.omega + (n - 1) * f.mu);
}

double fermion_spinless_ground_energy(const Frequencies& f, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  return 0.5 * f.omega + 0.5 * f.mu * (static_cast<double>(n) * n - 1.0);
}

double fermion_spinned_ground_energy(const Frequencies& f, int n_pairs) {
  if (n_pairs < 1) throw std::domain_error("n_pairs must be >= 1");
  return 0.5 * (f.omega + f.mu) +
         f.mu * (static_cast<double>(n_pairs) * n_pairs - 1.0);
}

double ratio_from_energy(double e_over_omega, int n, Variant variant) {
  // Solve E/w for mu/w, then delta/k = ((mu/w)^2 - 1)/n_total. The energy
  // relations as printed stop at (mu/w)^2 - 1; composing with the energy
  // maps only round-trips once the 1/n_total of mu^2 = k + n_total delta is
  // restored, which is what the round-trip contract demands.
  double mu_over_omega;
  int n_total;
  switch (variant) {
    case Variant::fermion_spinless:
      if (n < 2) throw std::domain_error("spinless inversion needs N >= 2");
      mu_over_omega =
          (2.0 * e_over_omega - 1.0) / (static_cast<double>(n) * n - 1.0);
      n_total = n;
      break;
    case Variant::fermion_spinned:
      if (n < 1) throw std::domain_error("n_pairs must be >= 1");
      mu_over_omega = (2.0 * e_over_omega - 1.0) /
                      (2.0 * static_cast<double>(n) * n - 1.0);
      n_total = 2 * n;
      break;
    default:
      throw std::domain_error("ratio_from_energy: fermion variants only");
  }
  if (!(mu_over_omega > 0.0))
    throw std::domain_error("E/omega below the valid energy range");
  const double ratio = (mu_over_omega * mu_over_omega - 1.0) / n_total;
  if (ratio <= -1.0 / n_total) {
    std::ostringstream msg;
    msg << "recovered delta/k = " << ratio << " <= -1/" << n_total;
    throw unbound_system(msg.str());
  }
  return ratio;
}

}  // namespace harmonium
