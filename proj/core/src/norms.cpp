#include "bergman/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

double abs_pow(const std::complex<double>& v, double p) {
    const double re = v.real(), im = v.imag();
    if (std::isnan(re) || std::isnan(im))
        throw std::domain_error("norm: NaN sample");
    const double a2 = re * re + im * im;
    if (p == 2.0)
        return a2;
    if (p == 1.0)
        return std::sqrt(a2);
    return std::pow(a2, 0.5 * p);
}

double inner_integral(const GridFunction& f, std::size_t ix,
                      const std::vector<double>& w, double p) {
    const std::size_t ny = f.grid.ny();
    double acc = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy)
        acc += w[iy] * abs_pow(f.at(ix, iy), p);
    return acc;
}

} // namespace

double mixed_norm(const GridFunction& f, const SpaceParams& params) {
    const auto w = nu_panel_weights(f.grid.y_nodes, params.lambda, PanelOrder::quadratic);
    const double qp = params.q / params.p;
    double acc = 0.0;
    for (std::size_t ix = 0; ix < f.grid.nx(); ++ix) {
        const double ip = inner_integral(f, ix, w, params.p);
        acc += f.grid.x_weights[ix] * (qp == 1.0 ? ip : std::pow(ip, qp));
    }
    return std::pow(acc, 1.0 / params.q);
}

double column_norm(const GridFunction& f, std::size_t ix, const SpaceParams& params) {
    const auto w = nu_panel_weights(f.grid.y_nodes, params.lambda, PanelOrder::quadratic);
    return std::pow(inner_integral(f, ix, w, params.p), 1.0 / params.p);
}

double lq_norm(const BoundaryDensity& phi, double q) {
    if (!(q >= 1.0))
        throw std::invalid_argument("lq_norm: q must be >= 1");
    if (phi.xi_nodes.size() != phi.values.size())
        throw std::invalid_argument("lq_norm: node/value size mismatch");
    const auto w = trapezoid_weights(phi.xi_nodes);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
        acc += w[k] * abs_pow(phi.values[k], q);
    return std::pow(acc, 1.0 / q);
}

} // namespace bergman
