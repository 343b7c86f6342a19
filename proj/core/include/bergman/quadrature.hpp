#pragma once

#include <cstddef>
#include <vector>

namespace bergman {

/**
 * Quadrature weights for integrating samples h(y_k) against the measure
 * nu_lambda(y) dy = (lambda+1) (2y)^lambda dy over (0, infinity), given an
 * increasing node vector with y_1 > 0.
 *
 * The rule interpolates h piecewise and integrates the interpolant against
 * the measure exactly (closed-form moments). Order selects the interpolant:
 * linear hats, or quadratic panel pairs with a per-pair fallback to linear
 * whenever a quadratic weight would turn negative, so all returned weights
 * are nonnegative either way. The panel (0, y_1] uses the constant
 * extension h(y_1); the tail beyond y_n is dropped (integrands here decay).
 *
 * lambda = 0 recovers composite Simpson / trapezoid with a left rectangle.
 */
enum class PanelOrder { linear, quadratic };

std::vector<double> nu_panel_weights(const std::vector<double>& y_nodes,
                                     double lambda, PanelOrder order);

/**
 * Nodes and weights of the n-point generalized Gauss-Laguerre rule for the
 * weight u^alpha e^{-u} on (0, infinity): sum w_i f(u_i) = integral of
 * u^alpha e^{-u} f(u). Requires alpha > -1, 1 <= n <= 128. The weights sum
 * to Gamma(alpha+1) to near machine precision.
 */
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLaguerreRule gauss_laguerre(std::size_t n, double alpha);

} // namespace bergman
