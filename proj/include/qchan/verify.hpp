#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qchan {

struct Check {
    std::string name;
    bool passed = false;
    double residual = 0.0;  // measured worst-case deviation (or 0 for pure verdict checks)
    double tolerance = 0.0;
    std::string detail;
};

enum class VerifyLevel { Quick, Full };

/// Cross-pipeline invariant suite. Quick uses coarse grids and no Monte-Carlo;
/// Full adds fine grids, seeded Monte-Carlo, the sampling and CHSH oracles and
/// the MEMS correlation-matrix discrepancy record.
std::vector<Check> run_verify(VerifyLevel level);

/// One line per check: "[PASS] name  residual=... tol=...  detail".
void print_checks(const std::vector<Check>& checks, std::ostream& out);

} // namespace qchan
