#include "bergman/symbol_parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace bergman {

namespace {

// Cursor over the expression text. Whitespace is skipped transparently, so
// reported columns always refer to the original string.
struct Cursor {
    const std::string& text;
    std::size_t i = 0;

    explicit Cursor(const std::string& t) : text(t) {}

    void ws() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    }
    bool eof() {
        ws();
        return i >= text.size();
    }
    std::size_t pos() {
        ws();
        return i;
    }
    bool accept(char c) {
        ws();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected ") + what, i);
        ++i;
    }
    std::string ident() {
        ws();
        const std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start)
            throw ParseError("expected a name", start);
        return text.substr(start, i - start);
    }
    double number(bool allow_inf = false) {
        ws();
        const std::size_t start = i;
        const char* begin = text.c_str() + start;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            throw ParseError("expected a number", start);
        i = start + static_cast<std::size_t>(end - begin);
        if (std::isnan(v))
            throw ParseError("expected a number", start);
        if (!allow_inf && !std::isfinite(v))
            throw ParseError("expected a finite number", start);
        return v;
    }
    // raw argument up to the next ',' or ')' (for file paths)
    std::string raw_arg() {
        ws();
        const std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ')')
            ++i;
        std::size_t stop = i;
        while (stop > start &&
               (text[stop - 1] == ' ' || text[stop - 1] == '\t'))
            --stop;
        if (stop == start)
            throw ParseError("expected a file path", start);
        return text.substr(start, stop - start);
    }
};

std::vector<double> number_list(Cursor& cur) {
    std::vector<double> vals;
    cur.expect('(', "'('");
    vals.push_back(cur.number());
    while (cur.accept(','))
        vals.push_back(cur.number());
    cur.expect(')', "')' or ','");
    return vals;
}

void finish(Cursor& cur) {
    if (!cur.eof())
        throw ParseError("unexpected trailing characters", cur.pos());
}

// Numeric rows from a csv file; a non-numeric first line is treated as a
// header. Every data line must have between min_cols and max_cols fields.
std::vector<std::vector<double>> read_csv_rows(const std::string& path,
                                               std::size_t min_cols, std::size_t max_cols,
                                               std::size_t path_column) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open csv file '" + path + "'", path_column);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        std::vector<double> row;
        bool numeric = true;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            const char* begin = field.c_str();
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            while (end && *end == ' ')
                ++end;
            if (end == begin || *end != '\0' || !std::isfinite(v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (rows.empty() && line_no == 1)
                continue; // header
            throw ParseError("csv line " + std::to_string(line_no) + " of '" + path +
                                 "' is not numeric",
                             path_column);
        }
        if (row.size() < min_cols || row.size() > max_cols)
            throw ParseError("csv line " + std::to_string(line_no) + " of '" + path +
                                 "' has the wrong number of fields",
                             path_column);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("csv file '" + path + "' holds no data", path_column);
    return rows;
}

} // namespace

VerticalSymbol parse_symbol(const std::string& text) {
    Cursor cur(text);
    const std::size_t name_pos = cur.pos();
    const std::string name = cur.ident();

    if (name == "const") {
        cur.expect('(', "'('");
        const double c = cur.number();
        cur.expect(')', "')'");
        finish(cur);
        return VerticalSymbol::constant(c);
    }
    if (name == "exp") {
        cur.expect('(', "'('");
        const double sigma = cur.number();
        double c = 1.0;
        if (cur.accept(','))
            c = cur.number();
        cur.expect(')', "')'");
        finish(cur);
        return VerticalSymbol::exponential(sigma, c);
    }
    if (name == "ind") {
        cur.expect('(', "'('");
        const double a = cur.number();
        cur.expect(',', "','");
        const double b = cur.number(/*allow_inf=*/true);
        cur.expect(')', "')'");
        finish(cur);
        return VerticalSymbol::indicator(a, b);
    }
    if (name == "pow") {
        cur.expect('(', "'('");
        const double s = cur.number();
        cur.expect(')', "')'");
        finish(cur);
        return VerticalSymbol::power(s);
    }
    if (name == "poly") {
        std::vector<double> coeffs = number_list(cur);
        if (!cur.accept('*'))
            throw ParseError("poly requires *exp(sigma)", cur.pos());
        const std::size_t tail_pos = cur.pos();
        if (cur.ident() != "exp")
            throw ParseError("poly requires *exp(sigma)", tail_pos);
        cur.expect('(', "'('");
        const double sigma = cur.number();
        cur.expect(')', "')'");
        finish(cur);
        return VerticalSymbol::poly_exp(std::move(coeffs), sigma);
    }
    if (name == "csv") {
        cur.expect('(', "'('");
        const std::size_t path_pos = cur.pos();
        const std::string path = cur.raw_arg();
        cur.expect(',', "',' (csv symbols need tail=sigma)");
        const std::size_t key_pos = cur.pos();
        if (cur.ident() != "tail")
            throw ParseError("expected tail=sigma", key_pos);
        cur.expect('=', "'='");
        const double sigma = cur.number();
        cur.expect(')', "')'");
        finish(cur);
        const auto rows = read_csv_rows(path, 2, 2, path_pos);
        std::vector<double> y, v;
        y.reserve(rows.size());
        v.reserve(rows.size());
        for (const auto& row : rows) {
            y.push_back(row[0]);
            v.push_back(row[1]);
        }
        return VerticalSymbol::sampled(std::move(y), std::move(v), sigma);
    }
    throw ParseError("unknown symbol form '" + name + "'", name_pos);
}

DensitySpec parse_density(const std::string& text) {
    Cursor cur(text);
    const std::size_t name_pos = cur.pos();
    const std::string name = cur.ident();
    DensitySpec spec;

    const auto interval = [&cur](DensityForm& form) {
        cur.expect('(', "'('");
        const std::size_t a_pos = cur.pos();
        form.a = cur.number();
        cur.expect(',', "','");
        form.b = cur.number();
        cur.expect(')', "')'");
        if (!(form.a >= 0.0 && form.b > form.a))
            throw ParseError("density interval needs 0 <= a < b", a_pos);
    };

    if (name == "ind") {
        DensityForm form;
        form.kind = DensityForm::Kind::indicator;
        interval(form);
        finish(cur);
        spec.form = form;
        return spec;
    }
    if (name == "bump") {
        DensityForm form;
        form.kind = DensityForm::Kind::bump;
        interval(form);
        finish(cur);
        spec.form = form;
        return spec;
    }
    if (name == "poly") {
        DensityForm form;
        form.kind = DensityForm::Kind::poly_indicator;
        form.coeffs = number_list(cur);
        if (!cur.accept('*'))
            throw ParseError("poly requires *ind(a,b)", cur.pos());
        const std::size_t tail_pos = cur.pos();
        if (cur.ident() != "ind")
            throw ParseError("poly requires *ind(a,b)", tail_pos);
        interval(form);
        finish(cur);
        spec.form = form;
        return spec;
    }
    if (name == "csv") {
        cur.expect('(', "'('");
        const std::size_t path_pos = cur.pos();
        const std::string path = cur.raw_arg();
        cur.expect(')', "')'");
        finish(cur);
        const auto rows = read_csv_rows(path, 2, 3, path_pos);
        BoundaryDensity phi;
        for (const auto& row : rows) {
            phi.xi_nodes.push_back(row[0]);
            phi.values.emplace_back(row[1], row.size() == 3 ? row[2] : 0.0);
        }
        for (std::size_t j = 0; j < phi.xi_nodes.size(); ++j) {
            if (phi.xi_nodes[j] <= (j == 0 ? 0.0 : phi.xi_nodes[j - 1]))
                throw ParseError("csv density nodes must be positive and increasing",
                                 path_pos);
        }
        spec.data = std::move(phi);
        return spec;
    }
    throw ParseError("unknown density form '" + name + "'", name_pos);
}

} // namespace bergman
