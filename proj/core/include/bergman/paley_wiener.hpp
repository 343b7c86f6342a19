#pragma once

#include "bergman/grid_function.hpp"
#include "bergman/halfplane_ops.hpp"
#include "bergman/space.hpp"

namespace bergman {

/**
 * Synthesis from boundary data: samples on the grid of
 *
 *   F(x + i y) = (1/sqrt(2)) integral_0^inf theta(xi) phi(xi) e^{i xi (x + i y)} dxi,
 *
 * the integral realized as the trapezoid rule over phi's xi_nodes. The
 * result is tagged physical with analytic_hint set.
 */
GridFunction pw_synthesize(const BoundaryDensity& phi, const SpaceParams& params,
                           const HalfPlaneGrid& grid);

/**
 * Analysis (left inverse of pw_synthesize): for each positive dual frequency x,
 *
 *   (A f)(x) = (theta(x)^{p-1} / sqrt(2)) integral_0^inf (1/pi) nu_lambda(eta)
 *              e^{-(p-1) x eta} [ integral f(xi + i eta) e^{-i x xi} dxi ] d eta,
 *
 * inner integral per eta-slice by FFT, outer by the nu panel quadrature.
 * Output nodes are the positive dual frequencies of f's grid.
 */
BoundaryDensity pw_analyze(const GridFunction& f, const SpaceParams& params,
                           InterpDiagnostics* diag = nullptr);

/**
 * Projection onto the analytic subspace through the flat model:
 * U1^{-1} U2^{-1} B_p U2 U1. Idempotent to quadrature accuracy; fixes
 * synthesized data.
 */
GridFunction bergman_project(const GridFunction& f, const SpaceParams& params,
                             InterpDiagnostics* diag = nullptr);

} // namespace bergman
