#include "harmonium/report.hpp"

#include <cstdio>
#include <sstream>

#include "harmonium/fermion_spinless.hpp"
#include "harmonium/fermion_spinned.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harmonium {

EntanglementReport evaluate_point(Variant variant, int n, double ratio,
                                  LogBase base, double well_constant) {
  ModelParams params{n, ratio, well_constant};
  EntanglementReport rep;
  rep.variant = variant;
  rep.coupling_ratio = ratio;
  rep.log_base = base;

  switch (variant) {
    case Variant::boson: {
      const Frequencies f = frequencies(params, n);
      const BosonOneBody ob = boson_one_body(f, n);
      rep.n_particles = n;
      rep.omega = f.omega;
      rep.mu = f.mu;
      rep.energy_over_omega = boson_ground_energy(f, n) / f.omega;
      rep.entropy = von_neumann_entropy(ob, base);
      rep.n0 = occupation_number(ob, 0);
      break;
    }
    case Variant::fermion_spinless: {
      const Frequencies f = frequencies(params, n);
      rep.n_particles = n;
      rep.omega = f.omega;
      rep.mu = f.mu;
      rep.energy_over_omega = fermion_spinless_ground_energy(f, n) / f.omega;
      const double pi_n = purity(f, n);
      rep.purity = pi_n;
      rep.entropy = 1.0 - pi_n;
      break;
    }
    case Variant::fermion_spinned: {
      const Frequencies f = frequencies(params, 2 * n);
      rep.n_particles = 2 * n;
      rep.n_pairs = n;
      rep.omega = f.omega;
      rep.mu = f.mu;
      rep.energy_over_omega = fermion_spinned_ground_energy(f, n) / f.omega;
      const double pi_n = spinned_purity(f, n);
      rep.purity = pi_n;
      rep.entropy = 1.0 - pi_n;
      break;
    }
  }
  return rep;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.particles.empty() || spec.ratios.empty())
    throw std::invalid_argument("sweep grids must be non-empty");

  const int n_rows =
      static_cast<int>(spec.particles.size() * spec.ratios.size());
  std::vector<SweepRow> rows(n_rows);
  const int n_ratios = static_cast<int>(spec.ratios.size());
  const int jobs = spec.jobs > 0 ? spec.jobs : hardware_threads();

  // Rows are indexed N-major / ratio-minor; parallel completion order does
  // not matter because each row writes only its own slot.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int i = 0; i < n_rows; ++i) {
    const int n = spec.particles[i / n_ratios];
    const double ratio = spec.ratios[i % n_ratios];
    rows[i].n = n;
    rows[i].ratio = ratio;
    try {
      rows[i].report = evaluate_point(spec.variant, n, ratio, spec.log_base);
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  }
  (void)jobs;
  return rows;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* log_base_name(LogBase b) {
  return b == LogBase::natural ? "e" : "2";
}

}  // namespace

std::string csv_header(Variant variant) {
  switch (variant) {
    case Variant::boson:
      return "variant,n_particles,coupling_ratio,omega,mu,energy_over_omega,"
             "entropy,n0,log_base,error";
    case Variant::fermion_spinless:
      return "variant,n_particles,coupling_ratio,omega,mu,energy_over_omega,"
             "entropy,purity,log_base,error";
    case Variant::fermion_spinned:
      return "variant,n_particles,n_pairs,coupling_ratio,omega,mu,"
             "energy_over_omega,entropy,purity,log_base,error";
  }
  return {};
}

std::string report_to_csv_line(const EntanglementReport& r) {
  std::ostringstream os;
  os << variant_name(r.variant) << ',' << r.n_particles << ',';
  if (r.variant == Variant::fermion_spinned) os << *r.n_pairs << ',';
  os << format_number(r.coupling_ratio) << ',' << format_number(r.omega) << ','
     << format_number(r.mu) << ',' << format_number(r.energy_over_omega) << ','
     << format_number(r.entropy) << ',';
  if (r.variant == Variant::boson)
    os << format_number(*r.n0) << ',';
  else
    os << format_number(*r.purity) << ',';
  os << log_base_name(r.log_base) << ',';
  return os.str();
}

void write_csv(std::ostream& os, Variant variant,
               const std::vector<SweepRow>& rows,
               const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) os << "# " << c << '\n';
  os << csv_header(variant) << '\n';
  for (const auto& row : rows) {
    if (row.report) {
      os << report_to_csv_line(*row.report) << row.error << '\n';
    } else {
      // Skipped point: keep the grid coordinates, flag the reason.
      os << variant_name(variant) << ',';
      if (variant == Variant::fermion_spinned)
        os << 2 * row.n << ',' << row.n << ',';
      else
        os << row.n << ',';
      os << format_number(row.ratio) << ",,,,,," << row.error << '\n';
    }
  }
}

std::string report_to_json(const EntanglementReport& r) {
  std::ostringstream os;
  os << "{\"variant\":\"" << variant_name(r.variant) << "\""
     << ",\"n_particles\":" << r.n_particles;
  if (r.n_pairs) os << ",\"n_pairs\":" << *r.n_pairs;
  os << ",\"coupling_ratio\":" << format_number(r.coupling_ratio)
     << ",\"omega\":" << format_number(r.omega)
     << ",\"mu\":" << format_number(r.mu)
     << ",\"energy_over_omega\":" << format_number(r.energy_over_omega)
     << ",\"entropy\":" << format_number(r.entropy);
  if (r.purity) os << ",\"purity\":" << format_number(*r.purity);
  if (r.n0) os << ",\"n0\":" << format_number(*r.n0);
  os << ",\"log_base\":\"" << log_base_name(r.log_base) << "\"}";
  return os.str();
}

void write_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "[\n";
  bool first = true;
  for (const auto& row : rows) {
    if (!first) os << ",\n";
    first = false;
    if (row.report) {
      os << "  " << report_to_json(*row.report);
    } else {
      os << "  {\"n\":" << row.n
         << ",\"coupling_ratio\":" << format_number(row.ratio)
         << ",\"error\":\"" << row.error << "\"}";
    }
  }
  os << "\n]\n";
}

}  // namespace harmonium
