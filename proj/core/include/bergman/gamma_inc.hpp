#pragma once

namespace bergman {

/**
 * Regularized incomplete gamma functions for a in (0, 200], x >= 0.
 *
 * gamma_upper_reg returns Q(a, x) = Gamma(a, x) / Gamma(a), the regularized
 * upper function, in [0, 1]; gamma_lower_reg returns P = 1 - Q with full
 * relative accuracy for small x (no cancellation through 1 - Q).
 * log_gamma_upper_reg returns ln Q with the continued fraction evaluated in
 * log form, finite far past the point where Q itself underflows.
 *
 * Series for x < a + 1, modified Lentz continued fraction otherwise;
 * relative error <= 1e-12 over the domain. Throws std::domain_error outside it.
 */
double gamma_upper_reg(double a, double x);
double gamma_lower_reg(double a, double x);
double log_gamma_upper_reg(double a, double x);

} // namespace bergman
