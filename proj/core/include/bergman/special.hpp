#pragma once

#include "bergman/space.hpp"

namespace bergman {

/**
 * theta(x) = (p^{lambda+1} x^{lambda+1} / (2^lambda Gamma(lambda+2)))^{1/p},
 * the normalizer making x -> theta(x) e^{-xy} a unit vector vertically.
 * Requires x > 0.
 */
double theta(const SpaceParams& params, double x);

/**
 * Vertical p-norm of the exponential profile y -> e^{-xi y} against
 * nu_lambda: (2^lambda Gamma(lambda+2) / (p xi)^{lambda+1})^{1/p} for
 * xi > 0, +infinity for xi <= 0. theta(xi) * phi_xi_norm(xi) == 1 exactly.
 */
double phi_xi_norm(const SpaceParams& params, double xi);

/**
 * The vertical reparameterization and its inverse for a fixed horizontal
 * frequency x > 0:
 *
 *   psi(t) = ln( Gamma(lambda+1) / Gamma(lambda+1, p x t) ) = -ln Q(lambda+1, p x t),
 *
 * strictly increasing from 0 to infinity; beta(y) solves psi(t) = y.
 * At lambda = 0 these collapse to psi(t) = p x t and beta(y) = y / (p x).
 *
 * beta brackets the root and polishes with Newton, warm-startable for
 * increasing y sequences; it stops once |psi(t) - y| <= 1e-12 max(1, y)
 * and the step is below ~1e-13 relative.
 */
class PsiBetaContext {
  public:
    PsiBetaContext(const SpaceParams& params, double x);

    double x() const { return x_; }

    double psi(double t) const;
    double beta(double y) const;
    /// d psi / dt, positive on (0, infinity).
    double psi_derivative(double t) const;

    /// beta with an initial guess (previous column value), for sweeps in y.
    double beta_from(double y, double t_guess) const;

  private:
    double a_;  // lambda + 1
    double px_; // p * x
    double x_;
    bool linear_; // lambda == 0 closed form
};

} // namespace bergman
