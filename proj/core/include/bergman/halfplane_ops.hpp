#pragma once

#include "bergman/grid_function.hpp"
#include "bergman/space.hpp"

namespace bergman {

/// Counters for values requested outside the vertical grid range.
struct InterpDiagnostics {
    std::size_t clamped = 0;      // out-of-range lookups clamped to zero
    std::size_t extrapolated = 0; // out-of-range lookups served by the tail model
    std::size_t tail_warnings = 0; // columns whose integrand tail exceeded 1e-12 of its max
};

/**
 * Vertical change of variables. Forward:
 *
 *   (U2 g)(x, y) = theta(|x|)^{-1} e^{-y/p + |x| beta(|x|, y)} g(x, beta(|x|, y)),
 *
 * inverse:
 *
 *   (U2^{-1} h)(x, y) = theta(|x|) e^{psi(|x|, y)/p - |x| y} h(x, psi(|x|, y)),
 *
 * with linear interpolation along y. The x = 0 column maps to zero by
 * convention. Off-grid vertical lookups follow the tail model when
 * analytic_hint is set (rate |x| on the Fourier side, 1/p on the u2 side),
 * otherwise clamp to zero and count. Maps chi_+ theta f e^{-xy} to
 * chi_+ f e^{-y/p} and back.
 */
GridFunction u2_forward(const GridFunction& g, const SpaceParams& params,
                        InterpDiagnostics* diag = nullptr);
GridFunction u2_inverse(const GridFunction& h, const SpaceParams& params,
                        InterpDiagnostics* diag = nullptr);

/// Ground profile ell_{0,p}(y) = e^{-y/p} of the flat model space.
double ground_profile(const SpaceParams& params, double y);

/**
 * Embedding into the flat model space: (R0 f)(x, y) = chi_+(x) f(x) e^{-y/p}
 * on the grid; density nodes off the positive grid nodes are matched by
 * linear interpolation (zero outside their range).
 */
GridFunction r0_embed(const BoundaryDensity& f, const SpaceParams& params,
                      const HalfPlaneGrid& grid);

/**
 * Left inverse of R0: (R0^{-1} g)(x) = chi_+(x) * Q[g(x,.) e^{-eta (p-1)/p}] / Q[e^{-eta}],
 * where Q is the Lebesgue panel quadrature on the y grid. The denominator
 * (analytically 1) normalizes the rule so R0^{-1} R0 = I holds to roundoff.
 * Columns whose integrand at y_max exceeds 1e-12 of the column max are
 * counted as truncation warnings.
 */
BoundaryDensity r0_left_inverse(const GridFunction& g, const SpaceParams& params,
                                InterpDiagnostics* diag = nullptr);

/// B_p = R0 R0^{-1}: idempotent projection onto chi_+ f(x) e^{-y/p} profiles.
GridFunction bp_project(const GridFunction& g, const SpaceParams& params,
                        InterpDiagnostics* diag = nullptr);

} // namespace bergman
