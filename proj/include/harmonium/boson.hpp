#pragma once

#include <array>

#include "harmonium/model.hpp"

namespace harmonium {

enum class LogBase { natural, two };

/// Parameters of the bosonic one-body quasidensity in its Gibbs form.
/// lambda_n <= 1 always; t_n = (1 - lambda_n)/(1 + lambda_n) is the ratio of
/// the geometric occupation spectrum; a_big_n = [(N-1)w + mu][w + (N-1)mu].
struct BosonOneBody {
  double lambda_n;
  double t_n;
  double gamma_n;
  double a_big_n;
};

BosonOneBody boson_one_body(const Frequencies& f, int n);

/// n_r = (1 - t) t^r.
double occupation_number(const BosonOneBody& ob, long r);

/// S = -sum_r n_r log n_r in closed form: -log(1-t) - t/(1-t) log t.
double von_neumann_entropy(const BosonOneBody& ob,
                           LogBase base = LogBase::natural);

/// 3D one-body Wigner quasidensity, evaluated as a product of three 1D
/// factors.
double quasidensity(const Frequencies& f, int n, const std::array<double, 3>& r,
                    const std::array<double, 3>& p);

/// 1D factor of the quasidensity at scalar (r, p).
double quasidensity_1d(const Frequencies& f, int n, double r, double p);

/// Continuous particle number N* in [1, 100] maximising the von Neumann
/// entropy at fixed coupling_ratio > 0 (golden-section search, 1e-6).
/// Throws no_interior_maximum when S is monotone on the bracket.
double critical_particle_number(double coupling_ratio, double well_constant = 1.0);

/// S(N) for continuous N at fixed coupling (helper behind the search; the
/// frequencies track N through mu^2 = k (1 + N delta/k)).
double entropy_at_continuous_n(double n, double coupling_ratio,
                               double well_constant = 1.0);

}  // namespace harmonium
