#include "bergman/halfplane_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

// Vertical lookup in one x-column: linear interpolation on the y grid,
// tail model past the ends when the data is tagged analytic.
struct ColumnInterp {
    const GridFunction* g = nullptr;
    std::size_t ix = 0;
    double rate = 0.0; // decay rate of the tail model
    InterpDiagnostics* diag = nullptr;

    std::complex<double> operator()(double t) const {
        const std::vector<double>& yn = g->grid.y_nodes;
        const std::size_t n = yn.size();
        if (t < yn.front() || t > yn.back()) {
            if (!g->analytic_hint) {
                if (diag)
                    ++diag->clamped;
                return {0.0, 0.0};
            }
            if (diag)
                ++diag->extrapolated;
            if (t < yn.front())
                return g->at(ix, 0) * std::exp(-rate * (t - yn.front()));
            return g->at(ix, n - 1) * std::exp(-rate * (t - yn.back()));
        }
        const auto it = std::upper_bound(yn.begin(), yn.end(), t);
        std::size_t hi = static_cast<std::size_t>(it - yn.begin());
        if (hi == 0)
            hi = 1;
        if (hi == n)
            hi = n - 1;
        const std::size_t lo = hi - 1;
        const double w = (t - yn[lo]) / (yn[hi] - yn[lo]);
        return (1.0 - w) * g->at(ix, lo) + w * g->at(ix, hi);
    }
};

std::complex<double> eval_density_complex(const BoundaryDensity& f, double x) {
    if (f.closed_form)
        return {density_value(*f.closed_form, x), 0.0};
    const std::vector<double>& xs = f.xi_nodes;
    if (x < xs.front() || x > xs.back())
        return {0.0, 0.0};
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    if (hi == 0)
        hi = 1;
    if (hi == xs.size())
        hi = xs.size() - 1;
    const std::size_t lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return (1.0 - w) * f.values[lo] + w * f.values[hi];
}

} // namespace

GridFunction u2_forward(const GridFunction& g, const SpaceParams& params,
                        InterpDiagnostics* diag) {
    if (g.repr != Repr::fourier_side)
        throw std::invalid_argument("u2_forward: input must be fourier_side");
    const std::size_t nx = g.grid.nx(), ny = g.grid.ny();

    GridFunction h;
    h.grid = g.grid;
    h.values.assign(nx * ny, {0.0, 0.0});
    h.repr = Repr::u2_side;
    h.analytic_hint = g.analytic_hint;

    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double ax = std::abs(g.grid.x_nodes[ix]);
        if (ax == 0.0)
            continue; // measure-zero column, zero by convention
        const PsiBetaContext ctx(params, ax);
        const ColumnInterp col{&g, ix, ax, diag};
        const double inv_theta = 1.0 / theta(params, ax);
        double t = 0.0;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double y = g.grid.y_nodes[iy];
            t = (iy == 0) ? ctx.beta(y) : ctx.beta_from(y, t);
            h.at(ix, iy) = inv_theta * std::exp(-y / params.p + ax * t) * col(t);
        }
    }
    return h;
}

GridFunction u2_inverse(const GridFunction& h, const SpaceParams& params,
                        InterpDiagnostics* diag) {
    if (h.repr != Repr::u2_side)
        throw std::invalid_argument("u2_inverse: input must be u2_side");
    const std::size_t nx = h.grid.nx(), ny = h.grid.ny();

    GridFunction g;
    g.grid = h.grid;
    g.values.assign(nx * ny, {0.0, 0.0});
    g.repr = Repr::fourier_side;
    g.analytic_hint = h.analytic_hint;

    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double ax = std::abs(h.grid.x_nodes[ix]);
        if (ax == 0.0)
            continue;
        const PsiBetaContext ctx(params, ax);
        const ColumnInterp col{&h, ix, 1.0 / params.p, diag};
        const double th = theta(params, ax);
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double y = h.grid.y_nodes[iy];
            const double s = ctx.psi(y);
            g.at(ix, iy) = th * std::exp(s / params.p - ax * y) * col(s);
        }
    }
    return g;
}

double ground_profile(const SpaceParams& params, double y) {
    return std::exp(-y / params.p);
}

GridFunction r0_embed(const BoundaryDensity& f, const SpaceParams& params,
                      const HalfPlaneGrid& grid) {
    const std::size_t nx = grid.nx(), ny = grid.ny();
    GridFunction g;
    g.grid = grid;
    g.values.assign(nx * ny, {0.0, 0.0});
    g.repr = Repr::u2_side;
    g.analytic_hint = true; // columns are exact e^{-y/p} profiles

    std::vector<double> profile(ny);
    for (std::size_t iy = 0; iy < ny; ++iy)
        profile[iy] = ground_profile(params, grid.y_nodes[iy]);

    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = grid.x_nodes[ix];
        if (x <= 0.0)
            continue;
        const std::complex<double> fx = eval_density_complex(f, x);
        if (fx == std::complex<double>(0.0, 0.0))
            continue;
        for (std::size_t iy = 0; iy < ny; ++iy)
            g.at(ix, iy) = fx * profile[iy];
    }
    return g;
}

BoundaryDensity r0_left_inverse(const GridFunction& g, const SpaceParams& params,
                                InterpDiagnostics* diag) {
    if (g.repr != Repr::u2_side)
        throw std::invalid_argument("r0_left_inverse: input must be u2_side");
    const std::size_t nx = g.grid.nx(), ny = g.grid.ny();
    const std::vector<double> w = nu_panel_weights(g.grid.y_nodes, 0.0, PanelOrder::quadratic);

    // e^{-eta (p-1)/p} against the rule, and the rule's value of
    // integral e^{-eta} d eta (analytically 1) as the normalizer: with it,
    // R0^{-1} applied to an exact e^{-y/p} profile is exact at any resolution.
    std::vector<double> kernel(ny);
    double norm = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double eta = g.grid.y_nodes[iy];
        kernel[iy] = w[iy] * std::exp(-eta * (params.p - 1.0) / params.p);
        norm += w[iy] * std::exp(-eta);
    }

    BoundaryDensity out;
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = g.grid.x_nodes[ix];
        if (x <= 0.0)
            continue;
        std::complex<double> acc{0.0, 0.0};
        double peak = 0.0, tail = 0.0;
        for (std::size_t iy = 0; iy < ny; ++iy) {
            acc += kernel[iy] * g.at(ix, iy);
            tail = std::abs(g.at(ix, iy)) *
                   std::exp(-g.grid.y_nodes[iy] * (params.p - 1.0) / params.p);
            peak = std::max(peak, tail);
        }
        if (diag && peak > 0.0 && tail > 1e-12 * peak)
            ++diag->tail_warnings;
        out.xi_nodes.push_back(x);
        out.values.push_back(acc / norm);
    }
    return out;
}

GridFunction bp_project(const GridFunction& g, const SpaceParams& params,
                        InterpDiagnostics* diag) {
    return r0_embed(r0_left_inverse(g, params, diag), params, g.grid);
}

} // namespace bergman
