#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/grid.hpp"
#include "bergman/space.hpp"

namespace bergman {

/// One verification check: a named residual against its tolerance.
struct VerifyCheck {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return residual <= tolerance; }
};

/**
 * Run the identity suites ("specfun", "transforms", "toeplitz", or "all")
 * at the given resolution. tol_override, when set, replaces every check's
 * tolerance. These are the same residuals the CLI `verify` command reports.
 */
std::vector<VerifyCheck> run_verify(const std::string& suite,
                                    const HalfPlaneGrid& grid,
                                    std::optional<double> tol_override = {});

} // namespace bergman
