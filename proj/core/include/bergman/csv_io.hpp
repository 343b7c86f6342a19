#pragma once

#include <iosfwd>
#include <string>

#include "bergman/grid_function.hpp"

namespace bergman {

/**
 * CSV serialization. GridFunction: header "x,y,re,im", rows iterate x outer,
 * y inner; BoundaryDensity: header "xi,re,im". Numbers use printf %.17g, so
 * write/read roundtrips reproduce doubles exactly and output is
 * byte-deterministic. Readers validate the header and rectangular shape and
 * throw std::runtime_error on malformed input.
 */
void write_grid_function_csv(std::ostream& out, const GridFunction& f);
void write_boundary_density_csv(std::ostream& out, const BoundaryDensity& phi);

void write_grid_function_csv(const std::string& path, const GridFunction& f);
void write_boundary_density_csv(const std::string& path, const BoundaryDensity& phi);

GridFunction read_grid_function_csv(std::istream& in);
BoundaryDensity read_boundary_density_csv(std::istream& in);

GridFunction read_grid_function_csv(const std::string& path);
BoundaryDensity read_boundary_density_csv(const std::string& path);

/// Peek at a CSV header: true if it is a grid-function file, false for density.
bool csv_is_grid_function(const std::string& path);

/// %.17g formatting used by all emitters (shared so outputs stay identical).
std::string format_double(double v);

} // namespace bergman
