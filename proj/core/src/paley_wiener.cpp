#include "bergman/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bergman/fourier.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

// When every density node is a positive dual frequency m * (pi / X) of the
// target grid (m = 1 .. n/2 - 1), the synthesis sum per y-slice is a single
// inverse FFT. Returns the multiplier list, or empty if incompatible.
std::vector<std::size_t> dual_multipliers(const std::vector<double>& xi_nodes,
                                          const HalfPlaneGrid& grid) {
    const double dxi = std::numbers::pi / grid.x_halfwidth;
    const std::size_t half = grid.nx() / 2;
    std::vector<std::size_t> ms;
    ms.reserve(xi_nodes.size());
    for (double xi : xi_nodes) {
        const double ratio = xi / dxi;
        const double rounded = std::round(ratio);
        if (std::abs(ratio - rounded) > 1e-9 || rounded < 1.0 ||
            rounded > static_cast<double>(half - 1))
            return {};
        ms.push_back(static_cast<std::size_t>(rounded));
    }
    return ms;
}

} // namespace

GridFunction pw_synthesize(const BoundaryDensity& phi, const SpaceParams& params,
                           const HalfPlaneGrid& grid) {
    const std::size_t nj = phi.xi_nodes.size();
    if (nj < 2)
        throw std::invalid_argument("pw_synthesize: need at least two density nodes");
    if (phi.values.size() != nj)
        throw std::invalid_argument("pw_synthesize: node/value size mismatch");

    const std::vector<double> w = trapezoid_weights(phi.xi_nodes);
    std::vector<std::complex<double>> coeff(nj);
    for (std::size_t j = 0; j < nj; ++j)
        coeff[j] = w[j] * theta(params, phi.xi_nodes[j]) * phi.values[j] /
                   std::numbers::sqrt2;

    const std::size_t nx = grid.nx(), ny = grid.ny();
    GridFunction f;
    f.grid = grid;
    f.values.assign(nx * ny, {0.0, 0.0});
    f.repr = Repr::physical;
    f.analytic_hint = true;

    const std::vector<std::size_t> ms = dual_multipliers(phi.xi_nodes, grid);
    if (!ms.empty()) {
        std::vector<std::complex<double>> buf(nx);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double y = grid.y_nodes[iy];
            std::fill(buf.begin(), buf.end(), std::complex<double>{0.0, 0.0});
            for (std::size_t j = 0; j < nj; ++j) {
                const double sign = (ms[j] % 2 != 0) ? -1.0 : 1.0;
                buf[ms[j]] = sign * coeff[j] * std::exp(-phi.xi_nodes[j] * y);
            }
            fft(buf, true);
            for (std::size_t k = 0; k < nx; ++k)
                f.at(k, iy) = buf[k];
        }
        return f;
    }

    // General nodes: rank-one accumulation per frequency.
    std::vector<std::complex<double>> phase(nx);
    std::vector<double> decay(ny);
    for (std::size_t j = 0; j < nj; ++j) {
        const double xi = phi.xi_nodes[j];
        for (std::size_t k = 0; k < nx; ++k)
            phase[k] = coeff[j] * std::polar(1.0, xi * grid.x_nodes[k]);
        for (std::size_t iy = 0; iy < ny; ++iy)
            decay[iy] = std::exp(-xi * grid.y_nodes[iy]);
        for (std::size_t k = 0; k < nx; ++k) {
            const std::complex<double> c = phase[k];
            std::complex<double>* row = &f.at(k, 0);
            for (std::size_t iy = 0; iy < ny; ++iy)
                row[iy] += c * decay[iy];
        }
    }
    return f;
}

BoundaryDensity pw_analyze(const GridFunction& f, const SpaceParams& params,
                           InterpDiagnostics* diag) {
    if (f.repr != Repr::physical)
        throw std::invalid_argument("pw_analyze: input must be physical");
    const std::size_t nx = f.grid.nx(), ny = f.grid.ny();
    const std::size_t half = nx / 2;
    const double dxi = std::numbers::pi / f.grid.x_halfwidth;
    const std::vector<double> w =
        nu_panel_weights(f.grid.y_nodes, params.lambda, PanelOrder::quadratic);

    // acc[m-1] accumulates the vertical quadrature for output node m * dxi.
    std::vector<std::complex<double>> acc(half - 1, {0.0, 0.0});
    std::vector<double> peak(half - 1, 0.0), last(half - 1, 0.0);
    std::vector<std::complex<double>> buf(nx);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double eta = f.grid.y_nodes[iy];
        for (std::size_t k = 0; k < nx; ++k)
            buf[k] = f.at(k, iy);
        fft(buf, false);
        for (std::size_t m = 1; m < half; ++m) {
            const double sign = (m % 2 != 0) ? -1.0 : 1.0;
            const std::complex<double> raw = f.grid.x_step * sign * buf[m];
            const double damp =
                std::exp(-(params.p - 1.0) * static_cast<double>(m) * dxi * eta);
            acc[m - 1] += w[iy] * damp * raw;
            last[m - 1] = std::abs(raw) * damp;
            peak[m - 1] = std::max(peak[m - 1], last[m - 1]);
        }
    }

    BoundaryDensity out;
    out.xi_nodes.resize(half - 1);
    out.values.resize(half - 1);
    for (std::size_t m = 1; m < half; ++m) {
        const double x = static_cast<double>(m) * dxi;
        const double scale =
            std::pow(theta(params, x), params.p - 1.0) / std::numbers::sqrt2 /
            std::numbers::pi;
        out.xi_nodes[m - 1] = x;
        out.values[m - 1] = scale * acc[m - 1];
        if (diag && peak[m - 1] > 0.0 && last[m - 1] > 1e-12 * peak[m - 1])
            ++diag->tail_warnings;
    }
    return out;
}

GridFunction bergman_project(const GridFunction& f, const SpaceParams& params,
                             InterpDiagnostics* diag) {
    GridFunction g = u2_forward(u1_forward(f), params, diag);
    g = bp_project(g, params, diag);
    return u1_inverse(u2_inverse(g, params, diag));
}

} // namespace bergman
