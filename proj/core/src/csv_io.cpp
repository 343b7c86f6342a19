#include "bergman/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bergman {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string trimmed(std::string s) {
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    const std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
        return {};
    const std::size_t last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<double> parse_row(const std::string& line, std::size_t n_fields,
                              std::size_t min_fields, std::size_t line_no) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const std::string t = trimmed(field);
        const char* begin = t.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || !std::isfinite(v))
            throw std::runtime_error("csv line " + std::to_string(line_no) +
                                     ": field '" + t + "' is not a finite number");
        row.push_back(v);
    }
    if (row.size() > n_fields || row.size() < min_fields)
        throw std::runtime_error("csv line " + std::to_string(line_no) +
                                 ": expected " + std::to_string(min_fields) + ".." +
                                 std::to_string(n_fields) + " fields, got " +
                                 std::to_string(row.size()));
    return row;
}

} // namespace

void write_grid_function_csv(std::ostream& out, const GridFunction& f) {
    out << "x,y,re,im\n";
    for (std::size_t ix = 0; ix < f.grid.nx(); ++ix) {
        const std::string xs = format_double(f.grid.x_nodes[ix]);
        for (std::size_t iy = 0; iy < f.grid.ny(); ++iy) {
            const std::complex<double>& v = f.at(ix, iy);
            out << xs << ',' << format_double(f.grid.y_nodes[iy]) << ','
                << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        }
    }
}

void write_boundary_density_csv(std::ostream& out, const BoundaryDensity& phi) {
    out << "xi,re,im\n";
    for (std::size_t j = 0; j < phi.xi_nodes.size(); ++j) {
        out << format_double(phi.xi_nodes[j]) << ','
            << format_double(phi.values[j].real()) << ','
            << format_double(phi.values[j].imag()) << '\n';
    }
}

void write_grid_function_csv(const std::string& path, const GridFunction& f) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_grid_function_csv(out, f);
}

void write_boundary_density_csv(const std::string& path, const BoundaryDensity& phi) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_boundary_density_csv(out, phi);
}

GridFunction read_grid_function_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trimmed(line) != "x,y,re,im")
        throw std::runtime_error("grid csv must start with header x,y,re,im");

    std::vector<double> rx, ry;
    std::vector<std::complex<double>> vals;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty())
            continue;
        const std::vector<double> row = parse_row(trimmed(line), 4, 4, line_no);
        rx.push_back(row[0]);
        ry.push_back(row[1]);
        vals.emplace_back(row[2], row[3]);
    }
    if (vals.empty())
        throw std::runtime_error("grid csv holds no data rows");

    // x iterates outer, so the first block of equal x values defines the
    // y column; every later block must repeat it exactly.
    std::size_t ny_found = vals.size();
    for (std::size_t i = 1; i < rx.size(); ++i) {
        if (rx[i] != rx[0]) {
            ny_found = i;
            break;
        }
    }
    if (vals.size() % ny_found != 0)
        throw std::runtime_error("grid csv is not rectangular");
    const std::size_t nx_found = vals.size() / ny_found;
    std::vector<double> xs(nx_found), ys(ry.begin(), ry.begin() + static_cast<std::ptrdiff_t>(ny_found));
    for (std::size_t b = 0; b < nx_found; ++b) {
        xs[b] = rx[b * ny_found];
        for (std::size_t k = 0; k < ny_found; ++k) {
            if (rx[b * ny_found + k] != xs[b] || ry[b * ny_found + k] != ys[k])
                throw std::runtime_error("grid csv is not a tensor grid (row " +
                                         std::to_string(b * ny_found + k + 2) + ")");
        }
    }

    GridFunction f;
    f.values = std::move(vals);
    f.repr = Repr::physical;

    HalfPlaneGrid& g = f.grid;
    g.x_nodes = std::move(xs);
    g.y_nodes = std::move(ys);
    const std::size_t nx = g.x_nodes.size(), ny = g.y_nodes.size();

    if (nx < 2)
        throw std::runtime_error("grid csv needs at least two x nodes");
    const double dx = g.x_nodes[1] - g.x_nodes[0];
    if (!(dx > 0.0))
        throw std::runtime_error("grid csv x nodes must increase");
    for (std::size_t k = 1; k < nx; ++k) {
        if (std::abs(g.x_nodes[k] - g.x_nodes[k - 1] - dx) > 1e-9 * std::max(1.0, dx))
            throw std::runtime_error("grid csv x nodes must be uniform");
    }
    g.x_step = dx;
    g.x_halfwidth = 0.5 * (g.x_nodes.back() - g.x_nodes.front() + dx);
    g.x_weights.assign(nx, dx);

    if (ny < 2 || !(g.y_nodes.front() > 0.0))
        throw std::runtime_error("grid csv y nodes must be positive, at least two");
    g.y_weights = trapezoid_weights(g.y_nodes); // throws unless increasing
    g.y_weights[0] += g.y_nodes[0];
    g.y_max = g.y_nodes.back();
    g.grading = 0.0; // unknown for external data; informational only

    return f;
}

BoundaryDensity read_boundary_density_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trimmed(line) != "xi,re,im")
        throw std::runtime_error("density csv must start with header xi,re,im");
    BoundaryDensity phi;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty())
            continue;
        const std::vector<double> row = parse_row(trimmed(line), 3, 2, line_no);
        const double xi = row[0];
        if (!(xi > 0.0) || (!phi.xi_nodes.empty() && xi <= phi.xi_nodes.back()))
            throw std::runtime_error("density csv nodes must be positive and increasing");
        phi.xi_nodes.push_back(xi);
        phi.values.emplace_back(row[1], row.size() == 3 ? row[2] : 0.0);
    }
    if (phi.xi_nodes.empty())
        throw std::runtime_error("density csv holds no data rows");
    return phi;
}

GridFunction read_grid_function_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_grid_function_csv(in);
}

BoundaryDensity read_boundary_density_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_boundary_density_csv(in);
}

bool csv_is_grid_function(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("'" + path + "' is empty");
    const std::string header = trimmed(line);
    if (header == "x,y,re,im")
        return true;
    if (header == "xi,re,im")
        return false;
    throw std::runtime_error("'" + path + "' has an unrecognized csv header");
}

} // namespace bergman
