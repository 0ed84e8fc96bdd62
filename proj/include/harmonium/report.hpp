#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "harmonium/boson.hpp"
#include "harmonium/model.hpp"

namespace harmonium {

/// One evaluated parameter point; the CSV row / JSON object type.
struct EntanglementReport {
  Variant variant;
  int n_particles;                // total particles (2N for spinned)
  std::optional<int> n_pairs;     // spinned only
  double coupling_ratio;
  double omega;
  double mu;
  double energy_over_omega;
  double entropy;                 // von Neumann (boson) or linear (fermion)
  std::optional<double> purity;   // fermion variants
  std::optional<double> n0;       // boson variant
  LogBase log_base;
};

/// Evaluate one point. `n` is the particle count, or the pair count for the
/// spinned variant.
EntanglementReport evaluate_point(Variant variant, int n, double ratio,
                                  LogBase base = LogBase::natural,
                                  double well_constant = 1.0);

enum class SweepFormat { csv, json };

struct SweepSpec {
  Variant variant;
  std::vector<int> particles;    // N values (pairs for spinned)
  std::vector<double> ratios;
  SweepFormat format = SweepFormat::csv;
  std::string out_path;          // empty = stdout
  LogBase log_base = LogBase::natural;
  int jobs = 0;                  // 0 = all hardware threads
};

struct SweepRow {
  std::optional<EntanglementReport> report;  // empty when skipped
  int n;                                     // grid point, for error rows
  double ratio;
  std::string error;                         // empty when ok
};

/// Cartesian product of the grids, N-major / ratio-minor; rows evaluated
/// concurrently up to the jobs bound, output order deterministic.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// 17-significant-digit formatting used for every CSV number.
std::string format_number(double v);

void write_csv(std::ostream& os, Variant variant,
               const std::vector<SweepRow>& rows,
               const std::vector<std::string>& header_comments = {});
void write_json(std::ostream& os, const std::vector<SweepRow>& rows);
std::string report_to_json(const EntanglementReport& r);
std::string report_to_csv_line(const EntanglementReport& r);
std::string csv_header(Variant variant);

}  // namespace harmonium
