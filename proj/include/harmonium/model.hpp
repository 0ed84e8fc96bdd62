#pragma once

#include "harmonium/errors.hpp"

namespace harmonium {

/// User-facing input: particle count, relative coupling delta/k and the well
/// constant k. For the spinned variant n_particles counts *pairs*; the total
/// is 2N.
struct ModelParams {
  int n_particles = 1;
  double coupling_ratio = 0.0;
  double well_constant = 1.0;
};

/// Normal-mode frequencies: omega for the centre-of-mass mode, mu for the
/// N-1 relative modes.
struct Frequencies {
  double omega;
  double mu;
};

enum class Variant { boson, fermion_spinless, fermion_spinned };

const char* variant_name(Variant v);

/// omega = sqrt(k), mu = sqrt(k + n_total * delta). Throws unbound_system
/// when k + n_total*delta <= 0 (delta/k <= -1/n_total).
Frequencies frequencies(const ModelParams& params, int n_total);

/// 3D bosonic ground state: (3/2) [omega + (N-1) mu].
double boson_ground_energy(const Frequencies& f, int n);

/// 1D spinless fermions: omega/2 + mu (N^2 - 1)/2.
double fermion_spinless_ground_energy(const Frequencies& f, int n);

/// 1D closed-shell spinned fermions (N pairs): (omega+mu)/2 + mu (N^2 - 1).
double fermion_spinned_ground_energy(const Frequencies& f, int n_pairs);

/// Inverse of the ground-state energy maps: given E/omega, recover delta/k.
/// `n` is the particle count (spinless) or the pair count (spinned). Throws
/// std::domain_error when E/omega lies outside the image of the valid
/// coupling domain.
double ratio_from_energy(double e_over_omega, int n, Variant variant);

}  // namespace harmonium
