#include "bergman/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bergman/gamma_inc.hpp"

namespace bergman {

namespace {

// Shared log form: log of the vertical p-norm of y -> e^{-xi y}. theta is
// its exact reciprocal, so theta(xi) * phi_xi_norm(xi) == 1 to the last bit.
double log_profile_norm(const SpaceParams& params, double xi) {
    return (params.lambda * std::log(2.0) + std::lgamma(params.lambda + 2.0) -
            (params.lambda + 1.0) * std::log(params.p * xi)) /
           params.p;
}

} // namespace

double theta(const SpaceParams& params, double x) {
    if (!(x > 0.0))
        throw std::domain_error("theta: x must be > 0, got " + std::to_string(x));
    return std::exp(-log_profile_norm(params, x));
}

double phi_xi_norm(const SpaceParams& params, double xi) {
    if (!(xi > 0.0))
        return std::numeric_limits<double>::infinity();
    return std::exp(log_profile_norm(params, xi));
}

PsiBetaContext::PsiBetaContext(const SpaceParams& params, double x)
    : a_(params.lambda + 1.0), px_(params.p * x), x_(x),
      linear_(params.lambda == 0.0) {
    if (!(x > 0.0))
        throw std::domain_error("PsiBetaContext: x must be > 0");
}

double PsiBetaContext::psi(double t) const {
    if (!(t >= 0.0))
        throw std::domain_error("psi: t must be >= 0");
    const double z = px_ * t;
    if (linear_)
        return z;
    return -log_gamma_upper_reg(a_, z);
}

double PsiBetaContext::psi_derivative(double t) const {
    if (!(t >= 0.0))
        throw std::domain_error("psi_derivative: t must be >= 0");
    const double z = px_ * t;
    if (linear_)
        return px_;
    if (z == 0.0) {
        if (a_ > 1.0)
            return 0.0;
        if (a_ < 1.0)
            return std::numeric_limits<double>::infinity();
        return px_;
    }
    const double log_rate =
        (a_ - 1.0) * std::log(z) - z - std::lgamma(a_) - log_gamma_upper_reg(a_, z);
    return px_ * std::exp(log_rate);
}

double PsiBetaContext::beta(double y) const {
    if (y == 0.0)
        return 0.0;
    if (!(y > 0.0))
        throw std::domain_error("beta: y must be >= 0");
    if (linear_)
        return y / px_;

    // Initial guess from the small-y power law psi ~ z^a / Gamma(a+1) or the
    // large-y asymptote psi ~ z - (a-1) ln z + ln Gamma(a).
    double z0;
    if (y < 0.5)
        z0 = std::exp((std::log(y) + std::lgamma(a_ + 1.0)) / a_);
    else
        z0 = y + (a_ - 1.0) * std::log(y + a_) - std::lgamma(a_);
    if (!(z0 > 0.0) || !std::isfinite(z0))
        z0 = y;
    return beta_from(y, z0 / px_);
}

double PsiBetaContext::beta_from(double y, double t_guess) const {
    if (y == 0.0)
        return 0.0;
    if (!(y > 0.0))
        throw std::domain_error("beta: y must be >= 0");
    if (linear_)
        return y / px_;

    double t = t_guess;
    if (!(t > 0.0) || !std::isfinite(t))
        t = y / px_;

    // Bracket the root; psi is strictly increasing.
    double lo = t, hi = t;
    double f = psi(t) - y;
    if (f < 0.0) {
        for (int i = 0; i < 200 && f < 0.0; ++i) {
            lo = hi;
            hi *= 2.0;
            f = psi(hi) - y;
        }
        t = hi;
    } else if (f > 0.0) {
        for (int i = 0; i < 200 && f > 0.0; ++i) {
            hi = lo;
            lo *= 0.5;
            f = psi(lo) - y;
        }
        t = lo;
    }
    if (f == 0.0)
        return t;

    const double f_tol = 1e-12 * std::max(1.0, y);
    for (int i = 0; i < 200; ++i) {
        f = psi(t) - y;
        if (f > 0.0)
            hi = t;
        else if (f < 0.0)
            lo = t;
        const double df = psi_derivative(t);
        double t_next;
        if (df > 0.0 && std::isfinite(df)) {
            t_next = t - f / df;
            if (!(t_next > lo && t_next < hi))
                t_next = 0.5 * (lo + hi);
        } else {
            t_next = 0.5 * (lo + hi);
        }
        const double step = std::fabs(t_next - t);
        t = t_next;
        if (std::fabs(f) <= f_tol && step <= 1e-13 * std::fabs(t))
            return t;
    }
    if (std::fabs(psi(t) - y) <= f_tol)
        return t;
    throw std::runtime_error("beta: Newton iteration failed to converge");
}

} // namespace bergman
