#pragma once

#include <cstddef>
#include <vector>

namespace bergman {

/**
 * Tensor grid on the upper half-plane.
 *
 * x is uniform on the half-open interval [-x_halfwidth, x_halfwidth) with a
 * power-of-two node count (FFT-friendly); the quadrature weight of every x
 * node is x_step, i.e. the trapezoid rule for the periodic extension. y is
 * graded toward 0, y_k = y_max * (k/n_y)^grading for k = 1..n_y, so the node
 * set excludes 0; y_weights are trapezoid weights extended by a constant
 * panel on (0, y_1].
 */
struct HalfPlaneGrid {
    std::vector<double> x_nodes;
    std::vector<double> y_nodes;
    std::vector<double> x_weights;
    std::vector<double> y_weights;
    double x_halfwidth = 0.0;
    double x_step = 0.0;
    double y_max = 0.0;
    double grading = 1.0;

    std::size_t nx() const { return x_nodes.size(); }
    std::size_t ny() const { return y_nodes.size(); }
};

/**
 * Build a grid. Requires x_halfwidth > 0, n_x a power of two >= 8,
 * y_max > 0, n_y >= 8, grading >= 1. Throws std::invalid_argument otherwise.
 */
HalfPlaneGrid make_grid(double x_halfwidth, std::size_t n_x,
                        double y_max, std::size_t n_y, double grading);

/// Plain trapezoid weights for an increasing node vector (no extension panels).
std::vector<double> trapezoid_weights(const std::vector<double>& nodes);

} // namespace bergman
