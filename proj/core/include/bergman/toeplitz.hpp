#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/grid_function.hpp"
#include "bergman/space.hpp"

namespace bergman {

/**
 * A vertical symbol a(y), y > 0, from the closed family the calculus
 * diagonalizes. Forms: Const(c); Exp(sigma, c) = c e^{-sigma y}, sigma > 0;
 * Indicator(a, b), 0 <= a < b <= inf; Power(s) = y^s, s > max(-1, -1-lambda)
 * for integrability against every lambda it is used with (checked at gamma
 * evaluation); PolyExp = (c_0 + c_1 y + ... + c_k y^k) e^{-sigma y};
 * Sampled = linear interpolation on y_nodes, zero left of the first node,
 * exponential tail value_N e^{-tail_decay (y - y_N)} past the last (compact
 * support if the last value is zero; otherwise tail_decay must be > 0).
 */
struct VerticalSymbol {
    enum class Kind { constant, exponential, indicator, power, poly_exp, sampled };
    Kind kind = Kind::constant;

    double c = 1.0;           // constant / exponential scale
    double sigma = 0.0;       // exponential / poly_exp decay rate
    double a = 0.0, b = 1.0;  // indicator bounds (b may be +inf)
    double s = 1.0;           // power exponent
    std::vector<double> coeffs;       // poly_exp coefficients, degree order
    std::vector<double> y_nodes;      // sampled
    std::vector<double> sample_values;
    double tail_decay = 0.0;

    static VerticalSymbol constant(double c);
    static VerticalSymbol exponential(double sigma, double c = 1.0);
    static VerticalSymbol indicator(double a, double b);
    static VerticalSymbol power(double s);
    static VerticalSymbol poly_exp(std::vector<double> coeffs, double sigma);
    static VerticalSymbol sampled(std::vector<double> y_nodes,
                                  std::vector<double> values, double tail_decay);
};

/// Pointwise evaluation of the symbol at y > 0.
double symbol_value(const VerticalSymbol& a, double y);

/**
 * Spectral function of the Toeplitz-type operator with vertical symbol a:
 *
 *   gamma_a(x) = x^{lambda+1} / Gamma(lambda+1) *
 *                integral_0^inf a(t/p) e^{-t x} t^lambda dt,   x > 0.
 *
 * gamma_of_symbol evaluates the closed / semi-analytic path per form;
 * gamma_quadrature is the independent numeric route (64-point generalized
 * Gauss-Laguerre after the substitution u = t (x + sigma/p), where sigma is
 * the form's exponential rate; composite panels for indicators). Throws
 * std::domain_error when the defining integral diverges.
 */
double gamma_of_symbol(const VerticalSymbol& a, const SpaceParams& params, double x);
double gamma_quadrature(const VerticalSymbol& a, const SpaceParams& params, double x);

/// gamma_of_symbol on a whole sweep of x values.
std::vector<double> gamma_sweep(const VerticalSymbol& a, const SpaceParams& params,
                                const std::vector<double>& xs);

/// Diagonal action on boundary data: phi(xi) -> gamma_a(xi) phi(xi).
BoundaryDensity apply_toeplitz(const VerticalSymbol& a, const SpaceParams& params,
                               BoundaryDensity phi);

/**
 * Boundedness and spectrum report from a logarithmic x sweep (>= 6 decades
 * required). Endpoint limits are classified by log-log slope and, when
 * finite, Richardson-extrapolated through three samples; gamma is
 * continuous, so the closure of its range is one interval, reported with
 * the finite limits merged in. Caveats list sampling-resolution provisos.
 */
struct SpectrumReport {
    bool bounded = false;
    double sup_abs = 0.0;                  // +inf encoded by unbounded = true
    bool monotone = true;
    double limit_zero = 0.0;               // limit x -> 0+, +-inf allowed
    double limit_infinity = 0.0;           // limit x -> inf, +-inf allowed
    std::vector<std::pair<double, double>> range_components;
    std::vector<std::string> caveats;
};

struct SweepSpec {
    double x_min = 1e-3;
    double x_max = 1e3;
    std::size_t count = 241;
};

SpectrumReport boundedness_and_spectrum(const VerticalSymbol& a,
                                        const SpaceParams& params,
                                        const SweepSpec& sweep);

/**
 * Cross-check route at p = q = 2: synthesize phi, multiply by a(y),
 * project back, analyze. Agrees with apply_toeplitz to quadrature accuracy.
 * Throws std::invalid_argument unless p == q == 2.
 */
BoundaryDensity toeplitz_direct_p2q2(const VerticalSymbol& a, const SpaceParams& params,
                                     const BoundaryDensity& phi, const HalfPlaneGrid& grid);

} // namespace bergman
