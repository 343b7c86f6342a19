#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bergman {

namespace {

// v^s - u^s for 0 <= u < v, stable on narrow panels (u > 0 path avoids the
// direct difference of nearly equal powers).
double pow_diff(double u, double v, double s) {
    if (u == 0.0)
        return std::pow(v, s);
    return std::pow(u, s) * std::expm1(s * std::log(v / u));
}

struct PanelMoments {
    double m0, m1, m2; // integrals of 1, y, y^2 against nu_lambda over [u, v]
};

PanelMoments nu_moments(double u, double v, double lambda) {
    const double c = (lambda + 1.0) * std::pow(2.0, lambda);
    PanelMoments m;
    m.m0 = 0.5 * pow_diff(2.0 * u, 2.0 * v, lambda + 1.0);
    m.m1 = c * pow_diff(u, v, lambda + 2.0) / (lambda + 2.0);
    m.m2 = c * pow_diff(u, v, lambda + 3.0) / (lambda + 3.0);
    return m;
}

// Integrate the linear interpolant over [u, v]: contributions to the two nodes.
std::pair<double, double> linear_panel(double u, double v, double lambda) {
    const PanelMoments m = nu_moments(u, v, lambda);
    const double inv = 1.0 / (v - u);
    return {(v * m.m0 - m.m1) * inv, (m.m1 - u * m.m0) * inv};
}

} // namespace

std::vector<double> nu_panel_weights(const std::vector<double>& y_nodes,
                                     double lambda, PanelOrder order) {
    const std::size_t n = y_nodes.size();
    if (n < 2)
        throw std::invalid_argument("nu_panel_weights: need at least two nodes");
    if (!(lambda > -1.0))
        throw std::invalid_argument("nu_panel_weights: lambda must be > -1");
    if (!(y_nodes[0] > 0.0))
        throw std::invalid_argument("nu_panel_weights: nodes must be positive");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(y_nodes[k] < y_nodes[k + 1]))
            throw std::invalid_argument("nu_panel_weights: nodes must be strictly increasing");

    std::vector<double> w(n, 0.0);
    // Constant extension over (0, y_1].
    w[0] += nu_moments(0.0, y_nodes[0], lambda).m0;

    std::size_t i = 0;
    if (order == PanelOrder::quadratic) {
        for (; i + 2 < n; i += 2) {
            const double a = y_nodes[i], b = y_nodes[i + 1], c = y_nodes[i + 2];
            const PanelMoments m = nu_moments(a, c, lambda);
            const double wa = (m.m2 - (b + c) * m.m1 + b * c * m.m0) / ((a - b) * (a - c));
            const double wb = (m.m2 - (a + c) * m.m1 + a * c * m.m0) / ((b - a) * (b - c));
            const double wc = (m.m2 - (a + b) * m.m1 + a * b * m.m0) / ((c - a) * (c - b));
            if (wa >= 0.0 && wb >= 0.0 && wc >= 0.0) {
                w[i] += wa;
                w[i + 1] += wb;
                w[i + 2] += wc;
            } else {
                const auto [l0, l1] = linear_panel(a, b, lambda);
                const auto [r0, r1] = linear_panel(b, c, lambda);
                w[i] += l0;
                w[i + 1] += l1 + r0;
                w[i + 2] += r1;
            }
        }
    }
    for (; i + 1 < n; ++i) {
        const auto [l0, l1] = linear_panel(y_nodes[i], y_nodes[i + 1], lambda);
        w[i] += l0;
        w[i + 1] += l1;
    }
    return w;
}

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, rotating the first
// row of the eigenvector matrix along. d: diagonal, e: subdiagonal
// (e[k] couples k and k+1), z: first-row components, initially (1,0,...,0).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& z) {
    const std::size_t n = d.size();
    if (n <= 1)
        return;
    e.resize(n, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd)
                    break;
            }
            if (m == l)
                break;
            if (++iter > 60)
                throw std::runtime_error("gauss_laguerre: QL iteration failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                double f = s * e[ii];
                const double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                f = z[ii + 1];
                z[ii + 1] = s * z[ii] + c * f;
                z[ii] = c * z[ii] - s * f;
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

} // namespace

GaussLaguerreRule gauss_laguerre(std::size_t n, double alpha) {
    if (n < 1 || n > 128)
        throw std::invalid_argument("gauss_laguerre: n must be in [1, 128]");
    if (!(alpha > -1.0) || alpha > 150.0)
        throw std::invalid_argument("gauss_laguerre: alpha must be in (-1, 150]");

    // Jacobi matrix of the u^alpha e^{-u} orthogonal polynomials.
    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        d[k] = 2.0 * static_cast<double>(k) + alpha + 1.0;
    for (std::size_t k = 1; k < n; ++k)
        e[k - 1] = std::sqrt(static_cast<double>(k) * (static_cast<double>(k) + alpha));
    z[0] = 1.0;

    tridiagonal_ql(d, e, z);

    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k)
        idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    const double mu0 = std::exp(std::lgamma(alpha + 1.0));
    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        rule.nodes[k] = d[idx[k]];
        rule.weights[k] = mu0 * z[idx[k]] * z[idx[k]];
    }
    return rule;
}

} // namespace bergman
