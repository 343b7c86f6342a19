#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "bergman/gamma_inc.hpp"
#include "bergman/grid.hpp"
#include "bergman/special.hpp"
#include "bergman/symbol_parser.hpp"
#include "bergman/toeplitz.hpp"

using namespace bergman;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> log_sweep(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
    return xs;
}

// rising factorial (lambda+1)(lambda+2)...(lambda+j)
double rising(double l1, unsigned j) {
    double r = 1.0;
    for (unsigned i = 0; i < j; ++i)
        r *= l1 + double(i);
    return r;
}

// exact antiderivative of (alpha + beta t) t^lam e^{-x t} for lam in {0, 1}
double linear_panel_integral(int lam, double alpha, double beta, double x,
                             double t0, double t1) {
    const auto prim = [&](double t) {
        if (lam == 0)
            return -std::exp(-x * t) * ((alpha + beta * t) / x + beta / (x * x));
        // integrand (alpha t + beta t^2) e^{-x t}
        return -std::exp(-x * t) *
               ((beta * t * t + alpha * t) / x + (2.0 * beta * t + alpha) / (x * x) +
                2.0 * beta / (x * x * x));
    };
    return prim(t1) - prim(t0);
}

} // namespace

TEST_CASE("symbol factories validate") {
    CHECK_THROWS_AS(VerticalSymbol::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::exponential(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::indicator(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::indicator(2.0, 2.0), std::invalid_argument);
    CHECK_NOTHROW(VerticalSymbol::indicator(1.0, kInf));
    CHECK_THROWS_AS(VerticalSymbol::power(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::poly_exp({}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::poly_exp({1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::sampled({1.0}, {1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::sampled({2.0, 1.0}, {1.0, 1.0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(VerticalSymbol::sampled({0.0, 1.0}, {1.0, 1.0}, 1.0),
                    std::invalid_argument);
    // nonzero final value without decay: the defining integral would diverge
    CHECK_THROWS_AS(VerticalSymbol::sampled({1.0, 2.0}, {1.0, 1.0}, 0.0),
                    std::domain_error);
    CHECK_NOTHROW(VerticalSymbol::sampled({1.0, 2.0}, {1.0, 0.0}, 0.0));
}

TEST_CASE("symbol_value evaluates each form") {
    CHECK(symbol_value(VerticalSymbol::constant(2.5), 7.0) == 2.5);
    CHECK(symbol_value(VerticalSymbol::exponential(2.0, 3.0), 1.0) ==
          doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-15));
    const VerticalSymbol ind = VerticalSymbol::indicator(1.0, 2.0);
    CHECK(symbol_value(ind, 1.5) == 1.0);
    CHECK(symbol_value(ind, 2.5) == 0.0);
    CHECK(symbol_value(VerticalSymbol::power(0.5), 4.0) == doctest::Approx(2.0));
    CHECK(symbol_value(VerticalSymbol::poly_exp({1.0, 2.0}, 1.0), 2.0) ==
          doctest::Approx(5.0 * std::exp(-2.0)).epsilon(1e-15));
    const VerticalSymbol smp = VerticalSymbol::sampled({1.0, 3.0}, {0.0, 2.0}, 0.5);
    CHECK(symbol_value(smp, 0.5) == 0.0);
    CHECK(symbol_value(smp, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(symbol_value(smp, 5.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("gamma closed forms") {
    const std::vector<double> xs = log_sweep(1e-3, 1e3, 25);

    SUBCASE("constant symbol is fixed by gamma") {
        for (double lam : {-0.5, 0.0, 1.0, 2.5})
            for (double p : {1.0, 2.0}) {
                const SpaceParams prm = SpaceParams::make(lam, p, 2.0);
                for (double x : xs)
                    CHECK(gamma_of_symbol(VerticalSymbol::constant(1.0), prm, x) ==
                          doctest::Approx(1.0).epsilon(1e-14));
            }
    }

    SUBCASE("exponential symbol") {
        for (double lam : {-0.5, 0.0, 1.0, 2.5})
            for (double p : {1.0, 2.0}) {
                const SpaceParams prm = SpaceParams::make(lam, p, 2.0);
                const VerticalSymbol a = VerticalSymbol::exponential(0.7, 1.3);
                for (double x : xs) {
                    const double want =
                        1.3 * std::pow(p * x / (p * x + 0.7), lam + 1.0);
                    CHECK(gamma_of_symbol(a, prm, x) ==
                          doctest::Approx(want).epsilon(1e-13));
                }
            }
    }

    SUBCASE("indicator pair sums to one") {
        // gamma(ind(0,h)) + gamma(ind(h,inf)) = P + Q = 1
        for (double lam : {-0.5, 0.0, 2.5})
            for (double h : {0.5, 2.0}) {
                const SpaceParams prm = SpaceParams::make(lam, 2.0, 2.0);
                const VerticalSymbol head = VerticalSymbol::indicator(0.0, h);
                const VerticalSymbol tail = VerticalSymbol::indicator(h, kInf);
                for (double x : xs) {
                    const double s = gamma_of_symbol(head, prm, x) +
                                     gamma_of_symbol(tail, prm, x);
                    CHECK(std::abs(s - 1.0) < 1e-12);
                }
            }
    }

    SUBCASE("head indicator complements the upper function") {
        for (double lam : {-0.5, 0.0, 1.0, 2.5})
            for (double p : {1.0, 2.0})
                for (double h : {0.5, 2.0}) {
                    const SpaceParams prm = SpaceParams::make(lam, p, 2.0);
                    const VerticalSymbol a = VerticalSymbol::indicator(0.0, h);
                    for (double x : xs) {
                        const double g = gamma_of_symbol(a, prm, x);
                        const double q = gamma_upper_reg(lam + 1.0, p * h * x);
                        CHECK(std::abs(g + q - 1.0) < 1e-10);
                    }
                }
    }

    SUBCASE("power symbol") {
        for (double lam : {-0.5, 0.0, 1.0, 2.5})
            for (double p : {1.0, 2.0})
                for (double s : {-0.3, 0.5, 1.0, 2.0}) {
                    const SpaceParams prm = SpaceParams::make(lam, p, 2.0);
                    const VerticalSymbol a = VerticalSymbol::power(s);
                    for (double x : xs) {
                        const double want = std::tgamma(lam + s + 1.0) /
                                            (std::tgamma(lam + 1.0) *
                                             std::pow(p * x, s));
                        CHECK(gamma_of_symbol(a, prm, x) ==
                              doctest::Approx(want).epsilon(1e-12));
                    }
                }
        // s = 1 reduces to (lambda+1)/(p x)
        const SpaceParams prm = SpaceParams::make(1.5, 2.0, 2.0);
        CHECK(gamma_of_symbol(VerticalSymbol::power(1.0), prm, 5.0) ==
              doctest::Approx(2.5 / 10.0).epsilon(1e-13));
    }

    SUBCASE("poly_exp matches the term formula") {
        const std::vector<double> coeffs = {0.5, -0.2, 0.1};
        const VerticalSymbol a = VerticalSymbol::poly_exp(coeffs, 0.9);
        for (double lam : {-0.5, 1.5})
            for (double p : {1.0, 2.0}) {
                const SpaceParams prm = SpaceParams::make(lam, p, 2.0);
                for (double x : xs) {
                    const double px = p * x;
                    double want = 0.0;
                    for (unsigned j = 0; j < coeffs.size(); ++j)
                        want += coeffs[j] * rising(lam + 1.0, j) /
                                std::pow(px + 0.9, double(j));
                    want *= std::pow(px / (px + 0.9), lam + 1.0);
                    CHECK(gamma_of_symbol(a, prm, x) ==
                          doctest::Approx(want).epsilon(1e-12));
                }
            }
    }

    SUBCASE("integrability guard") {
        const SpaceParams prm = SpaceParams::make(-0.5, 2.0, 2.0);
        CHECK_THROWS_AS(gamma_of_symbol(VerticalSymbol::power(-0.7), prm, 1.0),
                        std::domain_error);
        CHECK_THROWS_AS(gamma_quadrature(VerticalSymbol::power(-0.7), prm, 1.0),
                        std::domain_error);
        CHECK_THROWS_AS(gamma_of_symbol(VerticalSymbol::constant(1.0), prm, 0.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(gamma_of_symbol(VerticalSymbol::constant(1.0), prm, -2.0),
                        std::invalid_argument);
    }
}

TEST_CASE("sampled gamma against exact piecewise antiderivatives") {
    // hat symbols: the closed path integrates the interpolant exactly, so it
    // must match the elementary antiderivative of (alpha + beta t) t^lam e^{-xt}
    struct Setup {
        std::vector<double> nodes;
        std::vector<double> xs;
    };
    const Setup setups[2] = {
        {{1.0, 2.0, 3.0}, {0.3, 1.0, 4.0}},      // lower-function branch
        {{100.0, 110.0, 120.0}, {0.05, 0.5, 2.0}} // upper-function branch
    };
    for (const Setup& st : setups)
        for (int lam : {0, 1})
            for (double p : {1.0, 2.0}) {
                const SpaceParams prm = SpaceParams::make(double(lam), p, 2.0);
                const VerticalSymbol a =
                    VerticalSymbol::sampled(st.nodes, {0.0, 1.0, 0.0}, 0.0);
                for (double x : st.xs) {
                    // reference: integrate a(t/p) t^lam e^{-xt} over both panels
                    double ref = 0.0;
                    for (int seg = 0; seg < 2; ++seg) {
                        const double ya = st.nodes[seg], yb = st.nodes[seg + 1];
                        const double va = seg == 0 ? 0.0 : 1.0;
                        const double vb = seg == 0 ? 1.0 : 0.0;
                        const double beta = (vb - va) / (p * (yb - ya));
                        const double alpha = va - beta * p * ya;
                        ref += linear_panel_integral(lam, alpha, beta, x,
                                                     p * ya, p * yb);
                    }
                    ref *= std::pow(x, lam + 1.0) / std::tgamma(lam + 1.0);
                    const double got = gamma_of_symbol(a, prm, x);
                    if (ref > 1e-280)
                        CHECK(got == doctest::Approx(ref).epsilon(1e-9));
                    else
                        CHECK(std::abs(got) <= 1e-280);
                }
            }
}

TEST_CASE("closed and quadrature routes agree") {
    const std::vector<double> xs = log_sweep(1e-3, 1e3, 13);
    const std::vector<VerticalSymbol> symbols = {
        VerticalSymbol::constant(0.8),
        VerticalSymbol::exponential(1.0),
        VerticalSymbol::indicator(0.0, 1.0),
        VerticalSymbol::indicator(0.5, 2.5),
        VerticalSymbol::power(0.5),
        VerticalSymbol::poly_exp({0.5, -0.2, 0.1}, 0.9),
        VerticalSymbol::sampled({0.5, 1.0, 2.0, 4.0}, {1.0, 0.8, 0.5, 0.2}, 0.3),
    };
    for (const VerticalSymbol& a : symbols)
        for (double lam : {0.0, 1.5}) {
            const SpaceParams prm = SpaceParams::make(lam, 2.0, 2.0);
            for (double x : xs) {
                const double closed = gamma_of_symbol(a, prm, x);
                const double quad = gamma_quadrature(a, prm, x);
                CHECK(std::abs(closed - quad) <= 1e-8 * std::max(1.0, std::abs(closed)));
            }
        }
}

TEST_CASE("gamma respects symbol bounds") {
    // 0 <= a <= M pointwise forces 0 <= gamma <= M
    const std::vector<double> xs = log_sweep(1e-3, 1e3, 41);
    const std::vector<VerticalSymbol> symbols = {
        VerticalSymbol::indicator(0.5, 2.5),
        VerticalSymbol::sampled({0.5, 1.0, 2.0}, {0.0, 1.0, 0.0}, 0.0),
        VerticalSymbol::exponential(2.0, 1.0),
    };
    for (const VerticalSymbol& a : symbols) {
        const SpaceParams prm = SpaceParams::make(0.7, 2.0, 2.0);
        for (double x : xs) {
            const double g = gamma_of_symbol(a, prm, x);
            CHECK(g >= 0.0);
            CHECK(g <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("gamma_sweep matches pointwise evaluation") {
    const SpaceParams prm = SpaceParams::make(1.0, 2.0, 2.0);
    const VerticalSymbol a = VerticalSymbol::exponential(1.0);
    const std::vector<double> xs = log_sweep(1e-2, 1e2, 9);
    const std::vector<double> got = gamma_sweep(a, prm, xs);
    REQUIRE(got.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(got[i] == gamma_of_symbol(a, prm, xs[i]));
}

TEST_CASE("apply_toeplitz is the diagonal action") {
    const SpaceParams prm = SpaceParams::make(1.0, 2.0, 2.0);
    const VerticalSymbol a = VerticalSymbol::exponential(1.0);
    BoundaryDensity phi;
    phi.xi_nodes = {0.5, 1.0, 2.0};
    phi.values = {{1.0, -0.5}, {0.3, 0.2}, {0.0, 1.0}};
    phi.closed_form = DensityForm{DensityForm::Kind::indicator, 0.1, 3.0, {}};
    const BoundaryDensity out = apply_toeplitz(a, prm, phi);
    for (std::size_t j = 0; j < phi.xi_nodes.size(); ++j) {
        const double g = gamma_of_symbol(a, prm, phi.xi_nodes[j]);
        CHECK(std::abs(out.values[j] - g * phi.values[j]) < 1e-15);
    }
    // multiplied data no longer matches the stored closed form
    CHECK(!out.closed_form.has_value());
}

TEST_CASE("spectrum report for the exponential symbol") {
    const SpaceParams prm = SpaceParams::make(0.0, 2.0, 2.0);
    const VerticalSymbol a = VerticalSymbol::exponential(1.0, 0.8);
    const SpectrumReport rep = boundedness_and_spectrum(a, prm, SweepSpec{});
    CHECK(rep.bounded);
    CHECK(rep.monotone);
    CHECK(std::abs(rep.limit_zero) <= 1e-6);
    CHECK(std::abs(rep.limit_infinity - 0.8) <= 1e-6);
    CHECK(rep.sup_abs == doctest::Approx(0.8).epsilon(1e-6));
    REQUIRE(rep.range_components.size() == 1);
    CHECK(std::abs(rep.range_components[0].first - 0.0) <= 1e-6);
    CHECK(std::abs(rep.range_components[0].second - 0.8) <= 1e-6);
    // only the standing sampling-resolution note
    CHECK(rep.caveats.size() == 1);
}

TEST_CASE("spectrum report for the power symbol") {
    const SpaceParams prm = SpaceParams::make(1.0, 2.0, 2.0);
    const VerticalSymbol a = VerticalSymbol::power(1.0);
    const SpectrumReport rep = boundedness_and_spectrum(a, prm, SweepSpec{});
    CHECK(!rep.bounded);
    CHECK(std::isinf(rep.limit_zero));
    CHECK(rep.limit_zero > 0.0);
    CHECK(rep.limit_infinity == 0.0);
    CHECK(std::isinf(rep.sup_abs));
    CHECK(rep.monotone);
    bool divergence_noted = false;
    for (const std::string& c : rep.caveats)
        divergence_noted = divergence_noted || c.find("divergent") != std::string::npos;
    CHECK(divergence_noted);
}

TEST_CASE("spectrum report for a constant symbol") {
    const SpaceParams prm = SpaceParams::make(0.5, 1.5, 2.0);
    const SpectrumReport rep =
        boundedness_and_spectrum(VerticalSymbol::constant(2.5), prm, SweepSpec{});
    CHECK(rep.bounded);
    CHECK(rep.monotone);
    CHECK(rep.limit_zero == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(rep.limit_infinity == doctest::Approx(2.5).epsilon(1e-12));
    REQUIRE(rep.range_components.size() == 1);
    CHECK(rep.range_components[0].first == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(rep.range_components[0].second == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("spectrum sweep validation") {
    const SpaceParams prm = SpaceParams::make(0.0, 2.0, 2.0);
    const VerticalSymbol a = VerticalSymbol::constant(1.0);
    CHECK_THROWS_AS(boundedness_and_spectrum(a, prm, SweepSpec{1.0, 100.0, 241}),
                    std::invalid_argument);
    CHECK_THROWS_AS(boundedness_and_spectrum(a, prm, SweepSpec{1e-3, 1e3, 8}),
                    std::invalid_argument);
}

TEST_CASE("direct route agrees with the diagonal") {
    const HalfPlaneGrid grid = make_grid(20.0, 256, 20.0, 256, 2.0);
    const double dxi = std::numbers::pi / grid.x_halfwidth;
    const DensityForm bump{DensityForm::Kind::bump, 1.0, 4.0, {}};
    std::vector<double> nodes;
    for (std::size_t m = 1; m + 1 <= grid.nx() / 2; ++m)
        nodes.push_back(double(m) * dxi);
    const BoundaryDensity phi = sample_density(bump, nodes);
    const VerticalSymbol a = VerticalSymbol::exponential(1.0);
    for (double lam : {0.0, 1.0}) {
        const SpaceParams prm = SpaceParams::make(lam, 2.0, 2.0);
        const BoundaryDensity direct = toeplitz_direct_p2q2(a, prm, phi, grid);
        const BoundaryDensity diag = apply_toeplitz(a, prm, phi);
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < diag.values.size(); ++j) {
            num += std::norm(direct.values[j] - diag.values[j]);
            den += std::norm(diag.values[j]);
        }
        CHECK(std::sqrt(num / den) <= 5e-3);
    }
    const SpaceParams bad = SpaceParams::make(0.0, 1.0, 2.0);
    CHECK_THROWS_AS(toeplitz_direct_p2q2(a, bad, phi, grid), std::invalid_argument);
}

TEST_CASE("symbol parser") {
    SUBCASE("forms parse") {
        CHECK(parse_symbol("const(2.5)").kind == VerticalSymbol::Kind::constant);
        CHECK(parse_symbol("const(2.5)").c == 2.5);
        const VerticalSymbol e = parse_symbol("  exp( 1.5 , 0.5 )  ");
        CHECK(e.kind == VerticalSymbol::Kind::exponential);
        CHECK(e.sigma == 1.5);
        CHECK(e.c == 0.5);
        const VerticalSymbol i = parse_symbol("ind(1,inf)");
        CHECK(i.kind == VerticalSymbol::Kind::indicator);
        CHECK(std::isinf(i.b));
        CHECK(parse_symbol("pow(0.5)").s == 0.5);
        const VerticalSymbol pe = parse_symbol("poly(1,-0.5,0.1)*exp(0.9)");
        CHECK(pe.kind == VerticalSymbol::Kind::poly_exp);
        REQUIRE(pe.coeffs.size() == 3);
        CHECK(pe.coeffs[1] == -0.5);
        CHECK(pe.sigma == 0.9);
    }

    SUBCASE("error positions") {
        try {
            parse_symbol("exp(");
            FAIL("expected a throw");
        } catch (const ParseError& err) {
            CHECK(err.column() == 4);
            CHECK(std::string(err.what()).find("(column 4)") != std::string::npos);
        }
        try {
            parse_symbol("unknown(1)");
            FAIL("expected a throw");
        } catch (const ParseError& err) {
            CHECK(err.column() == 0);
        }
        try {
            parse_symbol("poly(1,2)");
            FAIL("expected a throw");
        } catch (const ParseError& err) {
            CHECK(std::string(err.what()).find("poly requires *exp(sigma)") !=
                  std::string::npos);
            CHECK(err.column() == 9);
        }
        CHECK_THROWS_AS(parse_symbol("const(1) junk"), ParseError);
        CHECK_THROWS_AS(parse_symbol("const(nan)"), ParseError);
        CHECK_THROWS_AS(parse_symbol("exp(inf)"), ParseError);
        // range violations surface from the factories instead
        CHECK_THROWS_AS(parse_symbol("exp(0)"), std::invalid_argument);
        CHECK_THROWS_AS(parse_symbol("ind(1,-2)"), std::invalid_argument);
    }

    SUBCASE("csv symbol") {
        const std::string path = "tmp_symbol_in.csv";
        {
            std::ofstream out(path);
            out << "y,value\n0.5,1.0\n1.0,0.8\n2.0,0.0\n";
        }
        const VerticalSymbol s = parse_symbol("csv(" + path + ",tail=0)");
        CHECK(s.kind == VerticalSymbol::Kind::sampled);
        REQUIRE(s.y_nodes.size() == 3);
        CHECK(s.y_nodes[1] == 1.0);
        CHECK(s.sample_values[1] == 0.8);
        CHECK_THROWS_AS(parse_symbol("csv(" + path + ")"), ParseError);
        CHECK_THROWS_AS(parse_symbol("csv(no_such_file.csv,tail=1)"), ParseError);
        {
            std::ofstream out(path);
            out << "0.5,1.0\n1.0,oops\n";
        }
        CHECK_THROWS_AS(parse_symbol("csv(" + path + ",tail=1)"), ParseError);
        std::remove(path.c_str());
    }
}

TEST_CASE("density parser") {
    SUBCASE("forms parse") {
        const DensitySpec ind = parse_density("ind(0.5,2)");
        REQUIRE(ind.form.has_value());
        CHECK(ind.form->kind == DensityForm::Kind::indicator);
        CHECK(ind.form->b == 2.0);
        CHECK(!ind.data.has_value());

        const DensitySpec bump = parse_density("bump(1,4)");
        REQUIRE(bump.form.has_value());
        CHECK(bump.form->kind == DensityForm::Kind::bump);

        const DensitySpec poly = parse_density("poly(1,0.5)*ind(1,3)");
        REQUIRE(poly.form.has_value());
        CHECK(poly.form->kind == DensityForm::Kind::poly_indicator);
        REQUIRE(poly.form->coeffs.size() == 2);
    }

    SUBCASE("errors") {
        try {
            parse_density("bump(4,1)");
            FAIL("expected a throw");
        } catch (const ParseError& err) {
            CHECK(std::string(err.what()).find("0 <= a < b") != std::string::npos);
            CHECK(err.column() == 5);
        }
        CHECK_THROWS_AS(parse_density("pow(1)"), ParseError);
        CHECK_THROWS_AS(parse_density("poly(1,2)"), ParseError);
        CHECK_THROWS_AS(parse_density("poly(1,2)*exp(1)"), ParseError);
    }

    SUBCASE("csv density") {
        const std::string path = "tmp_density_in.csv";
        {
            std::ofstream out(path);
            out << "xi,re,im\n1.0,1.0,0.5\n2.0,0.5,-0.25\n";
        }
        const DensitySpec spec = parse_density("csv(" + path + ")");
        REQUIRE(spec.data.has_value());
        CHECK(!spec.form.has_value());
        REQUIRE(spec.data->xi_nodes.size() == 2);
        CHECK(spec.data->values[1] == std::complex<double>(0.5, -0.25));
        {
            std::ofstream out(path);
            out << "2.0,1.0\n1.0,1.0\n"; // nodes not increasing
        }
        CHECK_THROWS_AS(parse_density("csv(" + path + ")"), ParseError);
        std::remove(path.c_str());
    }
}
