#pragma once

#include "bergman/grid_function.hpp"
#include "bergman/space.hpp"

namespace bergman {

/**
 * Mixed norm: ( sum_x w_x ( Q_y |f(x,.)|^p )^{q/p} )^{1/q}, where Q_y is the
 * nu_lambda panel quadrature of nu_panel_weights (quadratic order). Throws
 * std::domain_error if any sample is NaN.
 */
double mixed_norm(const GridFunction& f, const SpaceParams& params);

/**
 * Vertical norm of one x-column (the inner factor of mixed_norm):
 * ( Q_y |f(ix,.)|^p )^{1/p}.
 */
double column_norm(const GridFunction& f, std::size_t ix, const SpaceParams& params);

/// Trapezoid approximation of ( integral_0^inf |phi|^q dxi )^{1/q} over xi_nodes.
double lq_norm(const BoundaryDensity& phi, double q);

} // namespace bergman
