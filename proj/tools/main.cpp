#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/csv_io.hpp"
#include "bergman/fourier.hpp"
#include "bergman/grid.hpp"
#include "bergman/norms.hpp"
#include "bergman/paley_wiener.hpp"
#include "bergman/space.hpp"
#include "bergman/symbol_parser.hpp"
#include "bergman/toeplitz.hpp"
#include "bergman/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    double lambda = 0.0;
    double p = 2.0;
    double q = 2.0;
    std::string grid_spec = "40,1024,40,512,2";
    std::string out_path;
    std::optional<double> tol;

    bergman::SpaceParams params() const { return bergman::SpaceParams::make(lambda, p, q); }

    bergman::HalfPlaneGrid grid() const {
        std::vector<double> v;
        std::stringstream ss(grid_spec);
        std::string field;
        while (std::getline(ss, field, ','))
            v.push_back(std::stod(field));
        if (v.size() != 5)
            throw std::invalid_argument(
                "--grid expects x_halfwidth,n_x,y_max,n_y,grading");
        return bergman::make_grid(v[0], static_cast<std::size_t>(v[1]), v[2],
                                  static_cast<std::size_t>(v[3]), v[4]);
    }
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out)
        throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
    out << text;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0 && hi > lo) || n < 2)
        throw std::invalid_argument("x range must satisfy 0 < xmin < xmax, count >= 2");
    std::vector<double> xs(n);
    const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(n - 1));
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = (i + 1 == n) ? hi : lo * std::pow(ratio, static_cast<double>(i));
    return xs;
}

std::vector<double> positive_dual_nodes(const bergman::HalfPlaneGrid& grid) {
    const double dxi = std::numbers::pi / grid.x_halfwidth;
    std::vector<double> nodes;
    for (std::size_t m = 1; m + 1 <= grid.nx() / 2; ++m)
        nodes.push_back(static_cast<double>(m) * dxi);
    return nodes;
}

bergman::BoundaryDensity resolve_density(const std::string& spec,
                                         const bergman::HalfPlaneGrid& grid) {
    const bergman::DensitySpec parsed = bergman::parse_density(spec);
    if (parsed.data)
        return *parsed.data;
    return bergman::sample_density(*parsed.form, positive_dual_nodes(grid));
}

ordered_json encode_limit(double v) {
    if (std::isfinite(v))
        return v;
    return v > 0.0 ? "+inf" : "-inf";
}

int cmd_gamma(const RunConfig& cfg, const std::string& symbol_spec, double xmin,
              double xmax, std::size_t count) {
    const bergman::VerticalSymbol a = bergman::parse_symbol(symbol_spec);
    const bergman::SpaceParams prm = cfg.params();
    const std::vector<double> xs = log_spaced(xmin, xmax, count);
    const std::vector<double> gs = bergman::gamma_sweep(a, prm, xs);
    std::string text = "x,gamma\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        text += bergman::format_double(xs[i]) + "," + bergman::format_double(gs[i]) + "\n";
    emit(cfg, text);
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& symbol_spec, double xmin,
                 double xmax, std::size_t count) {
    const bergman::VerticalSymbol a = bergman::parse_symbol(symbol_spec);
    const bergman::SpectrumReport rep =
        bergman::boundedness_and_spectrum(a, cfg.params(), {xmin, xmax, count});
    ordered_json j;
    j["bounded"] = rep.bounded;
    j["sup_abs"] = encode_limit(rep.sup_abs);
    j["monotone"] = rep.monotone;
    j["limits"] = {{"zero", encode_limit(rep.limit_zero)},
                   {"infinity", encode_limit(rep.limit_infinity)}};
    j["range_components"] = ordered_json::array();
    for (const auto& [lo, hi] : rep.range_components)
        j["range_components"].push_back({lo, hi});
    j["caveats"] = rep.caveats;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_synth(const RunConfig& cfg, const std::string& density_spec) {
    const bergman::HalfPlaneGrid grid = cfg.grid();
    const bergman::BoundaryDensity phi = resolve_density(density_spec, grid);
    const bergman::GridFunction f = bergman::pw_synthesize(phi, cfg.params(), grid);
    std::ostringstream out;
    bergman::write_grid_function_csv(out, f);
    emit(cfg, out.str());
    return 0;
}

int cmd_analyze(const RunConfig& cfg, const std::string& in_path) {
    const bergman::GridFunction f = bergman::read_grid_function_csv(in_path);
    const bergman::BoundaryDensity phi = bergman::pw_analyze(f, cfg.params());
    std::ostringstream out;
    bergman::write_boundary_density_csv(out, phi);
    emit(cfg, out.str());
    return 0;
}

int cmd_norm(const RunConfig& cfg, const std::string& in_path, const std::string& repr) {
    const bergman::SpaceParams prm = cfg.params();
    double value = 0.0;
    if (bergman::csv_is_grid_function(in_path)) {
        bergman::GridFunction f = bergman::read_grid_function_csv(in_path);
        if (repr == "physical") {
            // space norm: mixed norm of the Fourier-side representative
            f.repr = bergman::Repr::physical;
            value = bergman::mixed_norm(bergman::u1_forward(f), prm);
        } else if (repr == "fourier") {
            f.repr = bergman::Repr::fourier_side;
            value = bergman::mixed_norm(f, prm);
        } else if (repr == "u2") {
            f.repr = bergman::Repr::u2_side;
            value = bergman::mixed_norm(f, prm);
        } else {
            throw std::invalid_argument("--repr must be physical, fourier, or u2");
        }
    } else {
        value = bergman::lq_norm(bergman::read_boundary_density_csv(in_path), prm.q);
    }
    emit(cfg, bergman::format_double(value) + "\n");
    return 0;
}

int cmd_toeplitz_apply(const RunConfig& cfg, const std::string& symbol_spec,
                       const std::string& density_spec) {
    const bergman::HalfPlaneGrid grid = cfg.grid();
    const bergman::VerticalSymbol a = bergman::parse_symbol(symbol_spec);
    const bergman::BoundaryDensity phi = resolve_density(density_spec, grid);
    const bergman::BoundaryDensity out_phi = bergman::apply_toeplitz(a, cfg.params(), phi);
    std::ostringstream out;
    bergman::write_boundary_density_csv(out, out_phi);
    emit(cfg, out.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    const std::vector<bergman::VerifyCheck> checks =
        bergman::run_verify(suite, cfg.grid(), cfg.tol);
    ordered_json j;
    j["suite"] = suite;
    j["checks"] = ordered_json::array();
    bool all_pass = true;
    for (const bergman::VerifyCheck& c : checks) {
        j["checks"].push_back({{"suite", c.suite},
                               {"name", c.name},
                               {"residual", c.residual},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass()}});
        all_pass = all_pass && c.pass();
    }
    j["all_pass"] = all_pass;
    emit(cfg, j.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator calculus on mixed-norm Bergman spaces of the half-plane"};
    app.require_subcommand(1);

    RunConfig cfg;
    double tol_value = 0.0;
    app.add_option("--lambda", cfg.lambda, "weight exponent lambda > -1")
        ->capture_default_str();
    app.add_option("--p", cfg.p, "inner (vertical) exponent p >= 1")->capture_default_str();
    app.add_option("--q", cfg.q, "outer (horizontal) exponent q >= 1")
        ->capture_default_str();
    app.add_option("--grid", cfg.grid_spec, "x_halfwidth,n_x,y_max,n_y,grading")
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "output file (default: stdout)");
    CLI::Option* tol_opt =
        app.add_option("--tol", tol_value, "tolerance override for verify");

    std::string symbol_spec, density_spec, in_path;
    std::string repr = "physical";
    std::string suite = "all";
    double xmin = 1e-3, xmax = 1e3;
    std::size_t count = 241;

    CLI::App* gamma = app.add_subcommand("gamma", "evaluate the spectral function");
    gamma->add_option("--symbol", symbol_spec, "vertical symbol spec")->required();
    gamma->add_option("--xmin", xmin, "")->capture_default_str();
    gamma->add_option("--xmax", xmax, "")->capture_default_str();
    gamma->add_option("--count", count, "")->capture_default_str();

    CLI::App* spectrum = app.add_subcommand("spectrum", "boundedness and spectrum report");
    spectrum->add_option("--symbol", symbol_spec, "vertical symbol spec")->required();
    spectrum->add_option("--xmin", xmin, "")->capture_default_str();
    spectrum->add_option("--xmax", xmax, "")->capture_default_str();
    spectrum->add_option("--count", count, "")->capture_default_str();

    CLI::App* synth = app.add_subcommand("synth", "synthesize from boundary density");
    synth->add_option("--density", density_spec, "density spec")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "boundary density of a grid file");
    analyze->add_option("--in", in_path, "grid csv")->required();

    CLI::App* norm = app.add_subcommand("norm", "norm of a csv file");
    norm->add_option("--in", in_path, "grid or density csv")->required();
    norm->add_option("--repr", repr, "physical | fourier | u2")->capture_default_str();

    CLI::App* tapply = app.add_subcommand("toeplitz-apply", "diagonal Toeplitz action");
    tapply->add_option("--symbol", symbol_spec, "vertical symbol spec")->required();
    tapply->add_option("--density", density_spec, "density spec")->required();

    CLI::App* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--suite", suite, "specfun | transforms | toeplitz | all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (tol_opt->count() > 0)
        cfg.tol = tol_value;

    try {
        if (gamma->parsed())
            return cmd_gamma(cfg, symbol_spec, xmin, xmax, count);
        if (spectrum->parsed())
            return cmd_spectrum(cfg, symbol_spec, xmin, xmax, count);
        if (synth->parsed())
            return cmd_synth(cfg, density_spec);
        if (analyze->parsed())
            return cmd_analyze(cfg, in_path);
        if (norm->parsed())
            return cmd_norm(cfg, in_path, repr);
        if (tapply->parsed())
            return cmd_toeplitz_apply(cfg, symbol_spec, density_spec);
        if (verify->parsed())
            return cmd_verify(cfg, suite);
    } catch (const bergman::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
