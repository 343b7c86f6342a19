#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/**
 * Parameters of the mixed-norm space on the upper half-plane: the weight
 * exponent lambda and the two integrability exponents. The inner (vertical)
 * exponent is p, the outer (horizontal) one is q.
 */
struct SpaceParams {
    double lambda = 0.0;
    double p = 2.0;
    double q = 2.0;

    static SpaceParams make(double lambda, double p, double q) {
        if (!(lambda > -1.0))
            throw std::invalid_argument("SpaceParams: lambda must be > -1, got " + std::to_string(lambda));
        if (!(p >= 1.0))
            throw std::invalid_argument("SpaceParams: p must be >= 1, got " + std::to_string(p));
        if (!(q >= 1.0))
            throw std::invalid_argument("SpaceParams: q must be >= 1, got " + std::to_string(q));
        return SpaceParams{lambda, p, q};
    }
};

/// Density of the vertical weight measure: nu_lambda(y) = (lambda+1) * (2y)^lambda, y > 0.
double nu_weight(double lambda, double y);

} // namespace bergman
