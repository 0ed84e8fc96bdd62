#pragma once

#include <string>
#include <vector>

namespace harmonium {

enum class VerifyLevel { quick, full };

struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  /// Test hook: deliberately tightens one tolerance to an impossible value
  /// so the harness can prove it reports failures.
  bool tamper = false;
};

/// Cross-checks every closed form against its independent oracle: the
/// printed coefficient tables, the paper's purity values, Nystrom spectra vs
/// the analytic occupations, the appendix integrals vs quadrature, and the
/// resolution of the formula variants (entropy log argument, moment gamma
/// factor, kernel cross-coefficient convention).
std::vector<VerifyCheck> run_verify(VerifyLevel level,
                                    const VerifyOptions& opts = {});

}  // namespace harmonium
