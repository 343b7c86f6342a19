#pragma once

#include <stdexcept>
#include <string>

#include "bergman/grid_function.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman {

/// Parse failure with the 0-based column where it was detected.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
          column_(column) {}
    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

/**
 * Symbol mini-language (whitespace-insensitive):
 *
 *   const(c) | exp(sigma[,c]) | ind(a,b) | pow(s)
 *   | poly(c0,...,ck)*exp(sigma) | csv(path,tail=sigma)
 *
 * ind accepts inf for b. csv files hold lines "y,value" (header optional).
 */
VerticalSymbol parse_symbol(const std::string& text);

/**
 * Density mini-language: ind(a,b) | bump(a,b) | poly(c0,...,ck)*ind(a,b)
 * | csv(path). bump(a,b) is the smooth bump
 * exp(1 - (b-a)^2 / (4 (xi-a)(b-xi))) on (a,b), zero outside. csv files
 * hold "xi,re[,im]" lines. Closed forms return no samples; sample them on
 * a grid with sample_density.
 */
struct DensitySpec {
    std::optional<DensityForm> form;       // closed form, to be sampled
    std::optional<BoundaryDensity> data;   // csv data, already sampled
};

DensitySpec parse_density(const std::string& text);

} // namespace bergman
