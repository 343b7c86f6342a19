#include "bergman/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bergman/gamma_inc.hpp"
#include "bergman/paley_wiener.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok)
        throw std::invalid_argument(msg);
}

// Gamma(lambda+1+j) / Gamma(lambda+1) = (lambda+1)(lambda+2)...(lambda+j).
double rising(double lambda_plus_1, unsigned j) {
    double r = 1.0;
    for (unsigned i = 0; i < j; ++i)
        r *= lambda_plus_1 + static_cast<double>(i);
    return r;
}

// P(a, z2) - P(a, z1) for z1 <= z2, choosing the P or Q side to avoid
// subtracting two values near 1.
double reg_gamma_diff(double a, double z1, double z2) {
    if (z2 == kInf)
        return (z1 == 0.0) ? 1.0 : gamma_upper_reg(a, z1);
    if (z1 > a + 1.0)
        return gamma_upper_reg(a, z1) - gamma_upper_reg(a, z2);
    return gamma_lower_reg(a, z2) - gamma_lower_reg(a, z1);
}

// 16-point Gauss-Legendre rule on [-1, 1], built once by Newton iteration
// on the Legendre recurrence.
struct LegendreRule {
    double node[16];
    double weight[16];
    LegendreRule() {
        const std::size_t n = 16;
        for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(n) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= n; ++k) {
                    const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                       (static_cast<double>(k) - 1.0) * p0) /
                                      static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15)
                    break;
            }
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const LegendreRule& legendre16() {
    static const LegendreRule rule;
    return rule;
}

// integral_A^B u^mu e^{-u} du for mu > -1, 0 <= A < B (B may be +inf),
// by a series stub at 0 plus composite Gauss-Legendre panels. Accurate to
// ~1e-12 relative of the full Gamma(mu+1) scale.
double power_exp_integral(double mu, double a_lo, double b_hi) {
    const LegendreRule& gl = legendre16();
    const double cap = std::max(a_lo, mu > 0.0 ? mu : 0.0) + 120.0;
    const double b_eff = std::min(b_hi, cap);
    if (b_eff <= a_lo)
        return 0.0;

    double total = 0.0;
    if (a_lo == 0.0) {
        // series stub on [0, eps]: sum (-eps)^k eps^{mu+1} / (k! (mu+1+k))
        const double eps = std::min(1e-3, 0.5 * b_eff);
        double term = std::pow(eps, mu + 1.0);
        double factorial = 1.0;
        for (int k = 0; k <= 8; ++k) {
            total += term / (factorial * (mu + 1.0 + static_cast<double>(k)));
            term *= -eps;
            factorial *= static_cast<double>(k + 1);
        }
        // geometric panels from eps
        const std::size_t panels = 48;
        const double ratio = std::pow(b_eff / eps, 1.0 / static_cast<double>(panels));
        double left = eps;
        for (std::size_t pnl = 0; pnl < panels; ++pnl) {
            const double right = (pnl + 1 == panels) ? b_eff : left * ratio;
            const double mid = 0.5 * (left + right), hw = 0.5 * (right - left);
            for (int i = 0; i < 16; ++i) {
                const double u = mid + hw * gl.node[i];
                total += hw * gl.weight[i] * std::pow(u, mu) * std::exp(-u);
            }
            left = right;
        }
        return total;
    }

    // A > 0: factor e^{-A} so the panels see a mild integrand
    if (a_lo > 700.0 && std::exp(-a_lo) == 0.0)
        return 0.0;
    const double span = b_eff - a_lo;
    const std::size_t panels = std::max<std::size_t>(4, static_cast<std::size_t>(span / 6.0) + 1);
    const double h = span / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t pnl = 0; pnl < panels; ++pnl) {
        const double left = a_lo + h * static_cast<double>(pnl);
        const double mid = left + 0.5 * h, hw = 0.5 * h;
        for (int i = 0; i < 16; ++i) {
            const double u = mid + hw * gl.node[i];
            sum += hw * gl.weight[i] * std::pow(u, mu) * std::exp(-(u - a_lo));
        }
    }
    return std::exp(-a_lo) * sum;
}

} // namespace

VerticalSymbol VerticalSymbol::constant(double c) {
    VerticalSymbol s;
    s.kind = Kind::constant;
    s.c = c;
    return s;
}

VerticalSymbol VerticalSymbol::exponential(double sigma, double c) {
    require(sigma > 0.0, "VerticalSymbol: exponential rate must be positive");
    VerticalSymbol s;
    s.kind = Kind::exponential;
    s.sigma = sigma;
    s.c = c;
    return s;
}

VerticalSymbol VerticalSymbol::indicator(double a, double b) {
    require(a >= 0.0 && b > a, "VerticalSymbol: indicator needs 0 <= a < b");
    VerticalSymbol s;
    s.kind = Kind::indicator;
    s.a = a;
    s.b = b;
    return s;
}

VerticalSymbol VerticalSymbol::power(double s_exp) {
    require(s_exp > -1.0, "VerticalSymbol: power exponent must be > -1");
    VerticalSymbol s;
    s.kind = Kind::power;
    s.s = s_exp;
    return s;
}

VerticalSymbol VerticalSymbol::poly_exp(std::vector<double> coeffs, double sigma) {
    require(!coeffs.empty(), "VerticalSymbol: poly_exp needs coefficients");
    require(sigma > 0.0, "VerticalSymbol: poly_exp rate must be positive");
    VerticalSymbol s;
    s.kind = Kind::poly_exp;
    s.coeffs = std::move(coeffs);
    s.sigma = sigma;
    return s;
}

VerticalSymbol VerticalSymbol::sampled(std::vector<double> y_nodes,
                                       std::vector<double> values, double tail_decay) {
    require(y_nodes.size() >= 2 && y_nodes.size() == values.size(),
            "VerticalSymbol: sampled needs matching nodes/values, at least two");
    require(y_nodes.front() > 0.0, "VerticalSymbol: sampled nodes must be positive");
    for (std::size_t i = 1; i < y_nodes.size(); ++i)
        require(y_nodes[i] > y_nodes[i - 1], "VerticalSymbol: sampled nodes must increase");
    require(tail_decay >= 0.0, "VerticalSymbol: tail decay must be >= 0");
    if (tail_decay == 0.0 && values.back() != 0.0)
        throw std::domain_error(
            "VerticalSymbol: sampled symbol fails the tail condition "
            "(needs tail_decay > 0 or a final value of zero)");
    VerticalSymbol s;
    s.kind = Kind::sampled;
    s.y_nodes = std::move(y_nodes);
    s.sample_values = std::move(values);
    s.tail_decay = tail_decay;
    return s;
}

double symbol_value(const VerticalSymbol& a, double y) {
    switch (a.kind) {
    case VerticalSymbol::Kind::constant:
        return a.c;
    case VerticalSymbol::Kind::exponential:
        return a.c * std::exp(-a.sigma * y);
    case VerticalSymbol::Kind::indicator:
        return (y > a.a && y < a.b) ? 1.0 : 0.0;
    case VerticalSymbol::Kind::power:
        return std::pow(y, a.s);
    case VerticalSymbol::Kind::poly_exp: {
        double acc = 0.0;
        for (std::size_t j = a.coeffs.size(); j-- > 0;)
            acc = acc * y + a.coeffs[j];
        return acc * std::exp(-a.sigma * y);
    }
    case VerticalSymbol::Kind::sampled: {
        const std::vector<double>& yn = a.y_nodes;
        if (y < yn.front())
            return 0.0;
        if (y > yn.back())
            return a.sample_values.back() * std::exp(-a.tail_decay * (y - yn.back()));
        const auto it = std::upper_bound(yn.begin(), yn.end(), y);
        std::size_t hi = static_cast<std::size_t>(it - yn.begin());
        if (hi == 0)
            hi = 1;
        if (hi == yn.size())
            hi = yn.size() - 1;
        const double w = (y - yn[hi - 1]) / (yn[hi] - yn[hi - 1]);
        return (1.0 - w) * a.sample_values[hi - 1] + w * a.sample_values[hi];
    }
    }
    return 0.0;
}

double gamma_of_symbol(const VerticalSymbol& a, const SpaceParams& params, double x) {
    require(x > 0.0, "gamma_of_symbol: x must be positive");
    const double lam = params.lambda, p = params.p, px = p * x;

    switch (a.kind) {
    case VerticalSymbol::Kind::constant:
        return a.c; // the kernel integrates to one

    case VerticalSymbol::Kind::exponential:
        return a.c * std::pow(px / (px + a.sigma), lam + 1.0);

    case VerticalSymbol::Kind::indicator:
        return reg_gamma_diff(lam + 1.0, px * a.a,
                              a.b == kInf ? kInf : px * a.b);

    case VerticalSymbol::Kind::power:
        if (!(a.s > -1.0 - lam))
            throw std::domain_error(
                "gamma_of_symbol: power symbol not integrable near 0 "
                "(needs s > -1-lambda)");
        return std::exp(std::lgamma(lam + a.s + 1.0) - std::lgamma(lam + 1.0) -
                        a.s * std::log(px));

    case VerticalSymbol::Kind::poly_exp: {
        const double r = px / (px + a.sigma);
        double sum = 0.0, denom = 1.0;
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
            sum += a.coeffs[j] * rising(lam + 1.0, static_cast<unsigned>(j)) / denom;
            denom *= px + a.sigma;
        }
        return std::pow(r, lam + 1.0) * sum;
    }

    case VerticalSymbol::Kind::sampled: {
        // panel-exact: the linear interpolant integrated against
        // y^lambda e^{-pxy} via regularized incomplete gamma differences
        double gamma = 0.0;
        const std::vector<double>& yn = a.y_nodes;
        for (std::size_t i = 0; i + 1 < yn.size(); ++i) {
            const double u = yn[i], v = yn[i + 1];
            const double beta = (a.sample_values[i + 1] - a.sample_values[i]) / (v - u);
            const double alpha = a.sample_values[i] - beta * u;
            const double d0 = reg_gamma_diff(lam + 1.0, px * u, px * v);
            const double d1 = reg_gamma_diff(lam + 2.0, px * u, px * v);
            gamma += alpha * d0 + beta * (lam + 1.0) / px * d1;
        }
        const double vn = a.sample_values.back();
        if (vn != 0.0) {
            const double yn_last = yn.back();
            const double lr = (lam + 1.0) * std::log(px / (px + a.tail_decay));
            const double lq = log_gamma_upper_reg(lam + 1.0, (px + a.tail_decay) * yn_last);
            gamma += vn * std::exp(a.tail_decay * yn_last + lr + lq);
        }
        return gamma;
    }
    }
    return 0.0;
}

double gamma_quadrature(const VerticalSymbol& a, const SpaceParams& params, double x) {
    require(x > 0.0, "gamma_quadrature: x must be positive");
    const double lam = params.lambda, p = params.p, px = p * x;
    const double log_gamma_l1 = std::lgamma(lam + 1.0);

    switch (a.kind) {
    case VerticalSymbol::Kind::constant:
    case VerticalSymbol::Kind::exponential:
    case VerticalSymbol::Kind::poly_exp: {
        // substitution u = t (x + sigma/p) makes the rule exact for these
        const double sigma = (a.kind == VerticalSymbol::Kind::constant) ? 0.0 : a.sigma;
        const GaussLaguerreRule rule = gauss_laguerre(64, lam);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double y = rule.nodes[i] / (px + sigma);
            double f = 0.0;
            switch (a.kind) {
            case VerticalSymbol::Kind::constant:
            case VerticalSymbol::Kind::exponential:
                f = a.c;
                break;
            default:
                for (std::size_t j = a.coeffs.size(); j-- > 0;)
                    f = f * y + a.coeffs[j];
            }
            sum += rule.weights[i] * f;
        }
        return std::pow(px / (px + sigma), lam + 1.0) * sum / std::exp(log_gamma_l1);
    }

    case VerticalSymbol::Kind::indicator: {
        const double hi = (a.b == kInf) ? kInf : px * a.b;
        return power_exp_integral(lam, px * a.a, hi) / std::exp(log_gamma_l1);
    }

    case VerticalSymbol::Kind::power:
        if (!(a.s > -1.0 - lam))
            throw std::domain_error(
                "gamma_quadrature: power symbol not integrable near 0 "
                "(needs s > -1-lambda)");
        return power_exp_integral(lam + a.s, 0.0, kInf) /
               std::exp(log_gamma_l1 + a.s * std::log(px));

    case VerticalSymbol::Kind::sampled: {
        // composite Gauss-Legendre per sample panel; tail as in the closed path
        const LegendreRule& gl = legendre16();
        const std::vector<double>& yn = a.y_nodes;
        const double scale = std::exp((lam + 1.0) * std::log(px) - log_gamma_l1);
        double gamma = 0.0;
        for (std::size_t i = 0; i + 1 < yn.size(); ++i) {
            const double beta = (a.sample_values[i + 1] - a.sample_values[i]) /
                                (yn[i + 1] - yn[i]);
            const double alpha = a.sample_values[i] - beta * yn[i];
            const double mid = 0.5 * (yn[i] + yn[i + 1]), hw = 0.5 * (yn[i + 1] - yn[i]);
            for (int g = 0; g < 16; ++g) {
                const double y = mid + hw * gl.node[g];
                gamma += hw * gl.weight[g] * (alpha + beta * y) *
                         std::pow(y, lam) * std::exp(-px * y) * scale;
            }
        }
        const double vn = a.sample_values.back();
        if (vn != 0.0) {
            const double lr = (lam + 1.0) * std::log(px / (px + a.tail_decay));
            const double lq = log_gamma_upper_reg(lam + 1.0, (px + a.tail_decay) * yn.back());
            gamma += vn * std::exp(a.tail_decay * yn.back() + lr + lq);
        }
        return gamma;
    }
    }
    return 0.0;
}

std::vector<double> gamma_sweep(const VerticalSymbol& a, const SpaceParams& params,
                                const std::vector<double>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs)
        out.push_back(gamma_of_symbol(a, params, x));
    return out;
}

BoundaryDensity apply_toeplitz(const VerticalSymbol& a, const SpaceParams& params,
                               BoundaryDensity phi) {
    for (std::size_t j = 0; j < phi.xi_nodes.size(); ++j)
        phi.values[j] *= gamma_of_symbol(a, params, phi.xi_nodes[j]);
    phi.closed_form.reset();
    return phi;
}

namespace {

// Neville extrapolation to h = 0 through three (h, value) pairs.
double neville3(const double h[3], const double v[3]) {
    double p01 = (h[0] * v[1] - h[1] * v[0]) / (h[0] - h[1]);
    double p12 = (h[1] * v[2] - h[2] * v[1]) / (h[1] - h[2]);
    return (h[0] * p12 - h[2] * p01) / (h[0] - h[2]);
}

// Classify one end of the sweep: finite limit (Richardson-extrapolated),
// zero, or a signed divergence. `vals`/`xs` are ordered so that the last
// entries are the outermost toward the limit; `h` carries the Richardson
// variable for those outermost three points.
double classify_end(const std::vector<double>& vals, const std::vector<double>& xs,
                    bool toward_infinity, std::vector<std::string>& caveats) {
    const std::size_t n = vals.size();
    const double v3 = vals[n - 1];
    if (std::abs(v3) < 1e-250)
        return 0.0;

    double slope[3];
    for (int k = 0; k < 3; ++k) {
        const std::size_t i = n - 3 + static_cast<std::size_t>(k);
        const double va = std::abs(vals[i - 1]), vb = std::abs(vals[i]);
        if (va < 1e-250 || vb < 1e-250)
            return 0.0;
        slope[k] = (std::log(vb) - std::log(va)) /
                   (std::log(xs[i]) - std::log(xs[i - 1]));
    }
    const bool flat = std::abs(slope[2]) < 1e-3;
    const bool settling = std::abs(slope[2]) <= 0.985 * std::abs(slope[1]) &&
                          std::abs(slope[1]) <= 0.985 * std::abs(slope[0]);
    if (flat || settling) {
        double h[3], v[3];
        for (int k = 0; k < 3; ++k) {
            const std::size_t i = n - 3 + static_cast<std::size_t>(k);
            h[k] = toward_infinity ? 1.0 / xs[i] : xs[i];
            v[k] = vals[i];
        }
        return neville3(h, v);
    }
    // persistent power behavior gamma ~ x^s at the end
    const double s = slope[2] * (toward_infinity ? 1.0 : -1.0);
    if (s < 0.0)
        return 0.0;
    caveats.push_back(toward_infinity
                          ? "log-log slope did not settle toward x = infinity; "
                            "classified as divergent"
                          : "log-log slope did not settle toward x = 0; "
                            "classified as divergent");
    return v3 > 0.0 ? kInf : -kInf;
}

} // namespace

SpectrumReport boundedness_and_spectrum(const VerticalSymbol& a,
                                        const SpaceParams& params,
                                        const SweepSpec& sweep) {
    require(sweep.x_min > 0.0 && sweep.x_max / sweep.x_min >= 1e6 - 1e-9,
            "boundedness_and_spectrum: sweep must cover at least 6 decades");
    require(sweep.count >= 16, "boundedness_and_spectrum: need at least 16 samples");

    std::vector<double> xs(sweep.count), vals(sweep.count);
    const double ratio = std::pow(sweep.x_max / sweep.x_min,
                                  1.0 / static_cast<double>(sweep.count - 1));
    for (std::size_t i = 0; i < sweep.count; ++i) {
        xs[i] = (i + 1 == sweep.count) ? sweep.x_max : sweep.x_min * std::pow(ratio, static_cast<double>(i));
        vals[i] = gamma_of_symbol(a, params, xs[i]);
    }

    SpectrumReport report;
    report.caveats.push_back("range estimated from " + std::to_string(sweep.count) +
                             " samples of a continuous spectral function on [" +
                             std::to_string(sweep.x_min) + ", " +
                             std::to_string(sweep.x_max) + "]");

    // monotonicity of the sampled values
    double scale = 0.0;
    for (double v : vals)
        scale = std::max(scale, std::abs(v));
    int dir = 0;
    for (std::size_t i = 1; i < sweep.count && report.monotone; ++i) {
        const double d = vals[i] - vals[i - 1];
        if (std::abs(d) <= 1e-14 * scale)
            continue;
        const int sgn = d > 0.0 ? 1 : -1;
        if (dir == 0)
            dir = sgn;
        else if (sgn != dir)
            report.monotone = false;
    }
    if (!report.monotone)
        report.caveats.push_back("gamma is non-monotone on the sweep; range "
                                 "components merged at sampling resolution");

    report.limit_infinity = classify_end(vals, xs, true, report.caveats);
    {
        std::vector<double> rv(vals.rbegin(), vals.rend());
        std::vector<double> rx(xs.rbegin(), xs.rend());
        report.limit_zero = classify_end(rv, rx, false, report.caveats);
    }

    report.bounded = std::isfinite(report.limit_zero) && std::isfinite(report.limit_infinity);
    report.sup_abs = 0.0;
    for (double v : vals)
        report.sup_abs = std::max(report.sup_abs, std::abs(v));
    if (report.bounded) {
        report.sup_abs = std::max({report.sup_abs, std::abs(report.limit_zero),
                                   std::abs(report.limit_infinity)});
    } else {
        report.sup_abs = kInf;
    }

    // connected components of the sampled range (gamma is continuous, so
    // gaps can only come from sampling; merge within the largest step seen)
    std::vector<double> pool = vals;
    if (std::isfinite(report.limit_zero))
        pool.push_back(report.limit_zero);
    if (std::isfinite(report.limit_infinity))
        pool.push_back(report.limit_infinity);
    std::sort(pool.begin(), pool.end());
    double max_step = 0.0;
    for (std::size_t i = 1; i < sweep.count; ++i)
        max_step = std::max(max_step, std::abs(vals[i] - vals[i - 1]));
    const double gap = 2.0 * max_step + 1e-12 * (1.0 + scale);
    double lo = pool.front(), hi = pool.front();
    for (double v : pool) {
        if (v - hi > gap) {
            report.range_components.emplace_back(lo, hi);
            lo = v;
        }
        hi = v;
    }
    report.range_components.emplace_back(lo, hi);
    return report;
}

BoundaryDensity toeplitz_direct_p2q2(const VerticalSymbol& a, const SpaceParams& params,
                                     const BoundaryDensity& phi, const HalfPlaneGrid& grid) {
    if (params.p != 2.0 || params.q != 2.0)
        throw std::invalid_argument("toeplitz_direct_p2q2: requires p = q = 2");

    GridFunction f = pw_synthesize(phi, params, grid);
    for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
        const double ay = symbol_value(a, grid.y_nodes[iy]);
        for (std::size_t ix = 0; ix < grid.nx(); ++ix)
            f.at(ix, iy) *= ay;
    }
    f.analytic_hint = false; // the multiplied function is no longer analytic

    return pw_analyze(bergman_project(f, params), params);
}

} // namespace bergman
