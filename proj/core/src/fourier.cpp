#include "bergman/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bergman {

void fft(std::span<std::complex<double>> data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1)
        return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }

    // One full-resolution twiddle table; stage len strides it by n/len.
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<std::complex<double>> tw(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
        tw[j] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                    static_cast<double>(j) / static_cast<double>(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> w = tw[j * stride];
                const std::complex<double> u = data[i + j];
                const std::complex<double> v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
            }
        }
    }
}

namespace {

// Dual grid of a uniform symmetric x grid: frequencies m * (pi / X) for
// m = -n/2 .. n/2 - 1, ascending, each carrying weight Delta xi.
HalfPlaneGrid dual_grid(const HalfPlaneGrid& g) {
    const std::size_t n = g.nx();
    const double dxi = std::numbers::pi / g.x_halfwidth;
    HalfPlaneGrid d = g;
    d.x_step = dxi;
    d.x_halfwidth = 0.5 * static_cast<double>(n) * dxi;
    d.x_weights.assign(n, dxi);
    for (std::size_t m = 0; m < n; ++m)
        d.x_nodes[m] =
            (static_cast<double>(m) - 0.5 * static_cast<double>(n)) * dxi;
    return d;
}

} // namespace

GridFunction u1_forward(const GridFunction& f) {
    if (f.repr != Repr::physical)
        throw std::invalid_argument("u1_forward: input must be physical");
    const std::size_t n = f.grid.nx(), ny = f.grid.ny();

    GridFunction g;
    g.grid = dual_grid(f.grid);
    g.values.resize(n * ny);
    g.repr = Repr::fourier_side;
    g.analytic_hint = f.analytic_hint;

    // (1/sqrt(pi)) (1/sqrt(2 pi)) integral = Delta x / (pi sqrt(2)) * DFT,
    // with the half-interval phase e^{i xi_m X} = (-1)^m exact.
    const double scale = f.grid.x_step / (std::numbers::pi * std::numbers::sqrt2);
    std::vector<std::complex<double>> buf(n);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t k = 0; k < n; ++k)
            buf[k] = f.at(k, iy);
        fft(buf, false);
        for (std::size_t m = 0; m < n; ++m) {
            const long long mm =
                static_cast<long long>(m) - static_cast<long long>(n / 2);
            const std::size_t idx = static_cast<std::size_t>(mm + static_cast<long long>(n)) % n;
            const double s = (mm % 2 != 0) ? -scale : scale;
            g.at(m, iy) = s * buf[idx];
        }
    }
    return g;
}

GridFunction u1_inverse(const GridFunction& g) {
    if (g.repr != Repr::fourier_side)
        throw std::invalid_argument("u1_inverse: input must be fourier_side");
    const std::size_t n = g.grid.nx(), ny = g.grid.ny();
    const double dxi = g.grid.x_step;
    const double x_halfwidth = std::numbers::pi / dxi;

    GridFunction f;
    f.grid = g.grid;
    f.grid.x_halfwidth = x_halfwidth;
    f.grid.x_step = 2.0 * x_halfwidth / static_cast<double>(n);
    f.grid.x_weights.assign(n, f.grid.x_step);
    for (std::size_t k = 0; k < n; ++k)
        f.grid.x_nodes[k] = -x_halfwidth + static_cast<double>(k) * f.grid.x_step;
    f.values.resize(n * ny);
    f.repr = Repr::physical;
    f.analytic_hint = g.analytic_hint;

    const double scale = dxi / std::numbers::sqrt2;
    std::vector<std::complex<double>> buf(n);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t m = 0; m < n; ++m) {
            const long long mm =
                static_cast<long long>(m) - static_cast<long long>(n / 2);
            const std::size_t idx = static_cast<std::size_t>(mm + static_cast<long long>(n)) % n;
            const double s = (mm % 2 != 0) ? -scale : scale;
            buf[idx] = s * g.at(m, iy);
        }
        fft(buf, true);
        for (std::size_t k = 0; k < n; ++k)
            f.at(k, iy) = buf[k];
    }
    return f;
}

} // namespace bergman
