#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bergman/grid.hpp"

namespace bergman {

/// Which representation a grid function currently lives in.
enum class Repr {
    physical,     // f(x, y), x a spatial coordinate
    fourier_side, // g(xi, y), x-axis holds frequencies
    u2_side,      // after the vertical change of variables
};

/**
 * Complex samples on a HalfPlaneGrid, stored row-major over (x, y):
 * values[ix * ny + iy]. analytic_hint marks data whose columns decay like
 * the analytic model (exp(-|x| y) on the Fourier side, exp(-y/p) on the
 * u2 side); vertical interpolation may then extrapolate past y_max by that
 * rate instead of clamping to zero.
 */
struct GridFunction {
    HalfPlaneGrid grid;
    std::vector<std::complex<double>> values;
    Repr repr = Repr::physical;
    bool analytic_hint = false;

    std::complex<double>& at(std::size_t ix, std::size_t iy) {
        return values[ix * grid.ny() + iy];
    }
    const std::complex<double>& at(std::size_t ix, std::size_t iy) const {
        return values[ix * grid.ny() + iy];
    }
};

/// Allocate a zero-filled GridFunction over a grid.
GridFunction zero_function(const HalfPlaneGrid& grid, Repr repr);

/// Closed-form descriptor for a boundary density, for resampling and exact norms.
struct DensityForm {
    enum class Kind { indicator, bump, poly_indicator };
    Kind kind = Kind::indicator;
    double a = 0.0;
    double b = 1.0;
    std::vector<double> coeffs; // poly_indicator only
};

/// Evaluate a closed-form density at xi.
double density_value(const DensityForm& form, double xi);

/**
 * Samples of a boundary function phi(xi) on positive frequencies, the data
 * the synthesis and analysis operators exchange. xi_nodes is strictly
 * increasing with xi_nodes[0] > 0.
 */
struct BoundaryDensity {
    std::vector<double> xi_nodes;
    std::vector<std::complex<double>> values;
    std::optional<DensityForm> closed_form;
};

/// Sample a closed-form density on the given nodes.
BoundaryDensity sample_density(const DensityForm& form, std::vector<double> xi_nodes);

} // namespace bergman
