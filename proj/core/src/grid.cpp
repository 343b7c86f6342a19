#include "bergman/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bergman/grid_function.hpp"
#include "bergman/space.hpp"

namespace bergman {

double nu_weight(double lambda, double y) {
    if (!(lambda > -1.0))
        throw std::invalid_argument("nu_weight: lambda must be > -1");
    if (!(y > 0.0))
        throw std::invalid_argument("nu_weight: y must be > 0");
    return (lambda + 1.0) * std::pow(2.0 * y, lambda);
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

std::vector<double> trapezoid_weights(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    if (n < 2)
        throw std::invalid_argument("trapezoid_weights: need at least two nodes");
    std::vector<double> w(n, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double half = 0.5 * (nodes[k + 1] - nodes[k]);
        if (!(half > 0.0))
            throw std::invalid_argument("trapezoid_weights: nodes must be strictly increasing");
        w[k] += half;
        w[k + 1] += half;
    }
    return w;
}

HalfPlaneGrid make_grid(double x_halfwidth, std::size_t n_x,
                        double y_max, std::size_t n_y, double grading) {
    if (!(x_halfwidth > 0.0))
        throw std::invalid_argument("make_grid: x_halfwidth must be > 0");
    if (n_x < 8 || !is_power_of_two(n_x))
        throw std::invalid_argument("make_grid: n_x must be a power of two >= 8, got " +
                                    std::to_string(n_x));
    if (!(y_max > 0.0))
        throw std::invalid_argument("make_grid: y_max must be > 0");
    if (n_y < 8)
        throw std::invalid_argument("make_grid: n_y must be >= 8, got " + std::to_string(n_y));
    if (!(grading >= 1.0))
        throw std::invalid_argument("make_grid: grading must be >= 1");

    HalfPlaneGrid g;
    g.x_halfwidth = x_halfwidth;
    g.y_max = y_max;
    g.grading = grading;
    g.x_step = 2.0 * x_halfwidth / static_cast<double>(n_x);

    g.x_nodes.resize(n_x);
    g.x_weights.assign(n_x, g.x_step);
    for (std::size_t k = 0; k < n_x; ++k)
        g.x_nodes[k] = -x_halfwidth + static_cast<double>(k) * g.x_step;

    g.y_nodes.resize(n_y);
    for (std::size_t k = 1; k <= n_y; ++k)
        g.y_nodes[k - 1] =
            y_max * std::pow(static_cast<double>(k) / static_cast<double>(n_y), grading);

    // Trapezoid on the nodes plus the constant-extension panel on (0, y_1].
    g.y_weights = trapezoid_weights(g.y_nodes);
    g.y_weights[0] += g.y_nodes[0];
    return g;
}

GridFunction zero_function(const HalfPlaneGrid& grid, Repr repr) {
    GridFunction f;
    f.grid = grid;
    f.values.assign(grid.nx() * grid.ny(), {0.0, 0.0});
    f.repr = repr;
    return f;
}

double density_value(const DensityForm& form, double xi) {
    if (!(xi > form.a && xi < form.b))
        return 0.0;
    switch (form.kind) {
    case DensityForm::Kind::indicator:
        return 1.0;
    case DensityForm::Kind::bump: {
        const double w = form.b - form.a;
        const double prod = (xi - form.a) * (form.b - xi);
        return std::exp(1.0 - w * w / (4.0 * prod));
    }
    case DensityForm::Kind::poly_indicator: {
        double acc = 0.0;
        for (std::size_t j = form.coeffs.size(); j-- > 0;)
            acc = acc * xi + form.coeffs[j];
        return acc;
    }
    }
    return 0.0;
}

BoundaryDensity sample_density(const DensityForm& form, std::vector<double> xi_nodes) {
    BoundaryDensity phi;
    phi.values.reserve(xi_nodes.size());
    for (double xi : xi_nodes)
        phi.values.emplace_back(density_value(form, xi), 0.0);
    phi.xi_nodes = std::move(xi_nodes);
    phi.closed_form = form;
    return phi;
}

} // namespace bergman
