#pragma once

#include <complex>
#include <span>

#include "bergman/grid_function.hpp"

namespace bergman {

/**
 * In-place radix-2 FFT, unnormalized: forward computes
 * X_m = sum_k x_k e^{-2 pi i m k / n}; inverse the conjugate sum without
 * the 1/n factor. n must be a power of two.
 */
void fft(std::span<std::complex<double>> data, bool inverse);

/**
 * Normalized partial Fourier transform in x per y-slice:
 *
 *   (U1 f)(xi, y) = (1/sqrt(pi)) * (1/sqrt(2 pi)) integral f(x, y) e^{-i xi x} dx,
 *
 * realized as an FFT over the uniform x grid. The output x-axis holds the
 * dual frequencies xi_m = m * pi / x_halfwidth, m = -n/2 .. n/2 - 1, in
 * ascending order; since xi_m * x_halfwidth is a multiple of pi, the
 * half-interval phase is the exact sign (-1)^m. u1_inverse is the exact
 * discrete inverse (roundtrip is identity to roundoff).
 *
 * Input must be tagged physical (u1_forward) / fourier_side (u1_inverse).
 */
GridFunction u1_forward(const GridFunction& f);
GridFunction u1_inverse(const GridFunction& g);

} // namespace bergman
