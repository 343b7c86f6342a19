#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bergman/csv_io.hpp"
#include "bergman/grid.hpp"
#include "bergman/grid_function.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"

using namespace bergman;

TEST_CASE("space params validation") {
    CHECK_THROWS_AS(SpaceParams::make(-1.0, 2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams::make(0.0, 0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams::make(0.0, 2.0, 0.0), std::invalid_argument);
    const SpaceParams prm = SpaceParams::make(-0.5, 1.0, 4.0);
    CHECK(prm.lambda == -0.5);
    CHECK(prm.p == 1.0);
    CHECK(prm.q == 4.0);
}

TEST_CASE("nu weight density") {
    CHECK(nu_weight(0.0, 3.7) == 1.0);
    CHECK(nu_weight(1.0, 2.0) == doctest::Approx(2.0 * 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(nu_weight(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(nu_weight(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("make_grid validation and structure") {
    CHECK_THROWS_AS(make_grid(0.0, 16, 1.0, 16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 12, 1.0, 16, 1.0), std::invalid_argument); // not 2^k
    CHECK_THROWS_AS(make_grid(1.0, 4, 1.0, 16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 16, -1.0, 16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 16, 1.0, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 16, 1.0, 16, 0.5), std::invalid_argument);

    const HalfPlaneGrid g = make_grid(8.0, 64, 20.0, 128, 2.0);
    CHECK(g.nx() == 64);
    CHECK(g.ny() == 128);
    CHECK(g.x_nodes.front() == -8.0);
    CHECK(g.x_nodes.back() == doctest::Approx(8.0 - g.x_step).epsilon(1e-15));
    CHECK(g.x_step == doctest::Approx(0.25).epsilon(1e-15));
    // x weights sum to the full period
    double wx = 0.0;
    for (double w : g.x_weights)
        wx += w;
    CHECK(wx == doctest::Approx(16.0).epsilon(1e-14));
    // graded y nodes increase, end at y_max, stay positive
    CHECK(g.y_nodes.front() > 0.0);
    CHECK(g.y_nodes.back() == doctest::Approx(20.0).epsilon(1e-15));
    for (std::size_t k = 1; k < g.ny(); ++k)
        CHECK(g.y_nodes[k] > g.y_nodes[k - 1]);
    // trapezoid plus left panel integrates 1 over (0, y_max] exactly
    double wy = 0.0;
    for (double w : g.y_weights)
        wy += w;
    CHECK(wy == doctest::Approx(20.0).epsilon(1e-13));
}

TEST_CASE("nu panel weights integrate the interpolant exactly") {
    const HalfPlaneGrid g = make_grid(1.0, 8, 2.0, 256, 3.0);

    SUBCASE("lambda 0, quadratic rule reproduces smooth moments") {
        // odd node count: every interval pair is covered by one quadratic panel
        const HalfPlaneGrid go = make_grid(1.0, 8, 2.0, 255, 3.0);
        const std::vector<double> w =
            nu_panel_weights(go.y_nodes, 0.0, PanelOrder::quadratic);
        double m2 = 0.0;
        for (std::size_t k = 0; k < go.ny(); ++k)
            m2 += w[k] * go.y_nodes[k] * go.y_nodes[k];
        CHECK(m2 == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
    }

    SUBCASE("weights stay nonnegative across lambda") {
        for (double lam : {-0.5, 0.0, 1.0, 2.5}) {
            for (PanelOrder ord : {PanelOrder::linear, PanelOrder::quadratic}) {
                const std::vector<double> w = nu_panel_weights(g.y_nodes, lam, ord);
                for (double v : w)
                    CHECK(v >= 0.0);
            }
        }
    }

    SUBCASE("exponential oracle across lambda") {
        // integral of e^{-y} d nu_lambda = 2^lambda Gamma(lambda + 2)
        const HalfPlaneGrid fine = make_grid(1.0, 8, 40.0, 512, 2.0);
        for (double lam : {-0.5, 0.0, 1.0, 2.5}) {
            const std::vector<double> w =
                nu_panel_weights(fine.y_nodes, lam, PanelOrder::quadratic);
            double integral = 0.0;
            for (std::size_t k = 0; k < fine.ny(); ++k)
                integral += w[k] * std::exp(-fine.y_nodes[k]);
            const double exact = std::pow(2.0, lam) * std::tgamma(lam + 2.0);
            CHECK(integral == doctest::Approx(exact).epsilon(1e-6));
        }
    }
}

TEST_CASE("gauss laguerre rule") {
    for (double alpha : {-0.5, 0.0, 2.5}) {
        for (std::size_t n : {16u, 64u}) {
            const GaussLaguerreRule rule = gauss_laguerre(n, alpha);
            REQUIRE(rule.nodes.size() == n);
            double s0 = 0.0, s1 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(rule.nodes[i] > 0.0);
                if (i)
                    CHECK(rule.nodes[i] > rule.nodes[i - 1]);
                s0 += rule.weights[i];
                s1 += rule.weights[i] * rule.nodes[i];
            }
            CHECK(s0 == doctest::Approx(std::tgamma(alpha + 1.0)).epsilon(1e-13));
            CHECK(s1 == doctest::Approx(std::tgamma(alpha + 2.0)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(gauss_laguerre(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_laguerre(16, -1.0), std::invalid_argument);
}

TEST_CASE("density forms") {
    const DensityForm bump{DensityForm::Kind::bump, 1.0, 4.0, {}};
    CHECK(density_value(bump, 1.0) == 0.0);
    CHECK(density_value(bump, 4.0) == 0.0);
    CHECK(density_value(bump, 0.5) == 0.0);
    CHECK(density_value(bump, 2.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(density_value(bump, 2.0) > 0.0);

    const DensityForm ind{DensityForm::Kind::indicator, 1.0, 2.0, {}};
    CHECK(density_value(ind, 1.5) == 1.0);
    CHECK(density_value(ind, 2.5) == 0.0);

    const DensityForm poly{DensityForm::Kind::poly_indicator, 1.0, 3.0, {2.0, 0.0, 1.0}};
    CHECK(density_value(poly, 2.0) == doctest::Approx(6.0).epsilon(1e-15)); // 2 + 4
    CHECK(density_value(poly, 0.5) == 0.0);

    const BoundaryDensity phi = sample_density(bump, {1.5, 2.5, 3.5});
    REQUIRE(phi.xi_nodes.size() == 3);
    CHECK(phi.values[1].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phi.closed_form.has_value());
}

TEST_CASE("grid function csv roundtrip is exact") {
    const HalfPlaneGrid g = make_grid(2.0, 8, 3.0, 8, 2.0);
    GridFunction f = zero_function(g, Repr::physical);
    for (std::size_t ix = 0; ix < g.nx(); ++ix)
        for (std::size_t iy = 0; iy < g.ny(); ++iy)
            f.at(ix, iy) = {0.1 * static_cast<double>(ix) + 1.0 / 3.0,
                            -1e-300 + 1e-5 * static_cast<double>(iy)};

    std::stringstream ss;
    write_grid_function_csv(ss, f);
    const GridFunction back = read_grid_function_csv(ss);
    REQUIRE(back.grid.nx() == g.nx());
    REQUIRE(back.grid.ny() == g.ny());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        CHECK(back.values[i] == f.values[i]); // %.17g roundtrips doubles exactly
    for (std::size_t k = 0; k < g.ny(); ++k)
        CHECK(back.grid.y_nodes[k] == g.y_nodes[k]);
    CHECK(back.grid.x_step == doctest::Approx(g.x_step).epsilon(1e-15));
    CHECK(back.grid.x_halfwidth == doctest::Approx(g.x_halfwidth).epsilon(1e-12));
    // reconstructed y weights match the original rule
    for (std::size_t k = 0; k < g.ny(); ++k)
        CHECK(back.grid.y_weights[k] == doctest::Approx(g.y_weights[k]).epsilon(1e-14));
}

TEST_CASE("boundary density csv roundtrip is exact") {
    BoundaryDensity phi;
    phi.xi_nodes = {0.5, 1.0 / 3.0 + 1.0, 7.25};
    phi.values = {{1.0, -2.0}, {1e-12, 0.0}, {-0.125, 3.0}};
    std::stringstream ss;
    write_boundary_density_csv(ss, phi);
    const BoundaryDensity back = read_boundary_density_csv(ss);
    REQUIRE(back.xi_nodes.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(back.xi_nodes[j] == phi.xi_nodes[j]);
        CHECK(back.values[j] == phi.values[j]);
    }
}

TEST_CASE("csv validation errors") {
    {
        std::stringstream ss("x,y,re\n1,1,1\n");
        CHECK_THROWS_AS(read_grid_function_csv(ss), std::runtime_error);
    }
    {
        // non-rectangular: second x block shorter
        std::stringstream ss("x,y,re,im\n0,1,1,0\n0,2,1,0\n1,1,1,0\n");
        CHECK_THROWS_AS(read_grid_function_csv(ss), std::runtime_error);
    }
    {
        // non-uniform x spacing
        std::stringstream ss("x,y,re,im\n0,1,1,0\n1,1,1,0\n3,1,1,0\n");
        CHECK_THROWS_AS(read_grid_function_csv(ss), std::runtime_error);
    }
    {
        // y not increasing
        std::stringstream ss("xi,re,im\n2,1,0\n1,1,0\n");
        CHECK_THROWS_AS(read_boundary_density_csv(ss), std::runtime_error);
    }
    {
        std::stringstream ss("xi,re,im\n1,abc,0\n");
        CHECK_THROWS_AS(read_boundary_density_csv(ss), std::runtime_error);
    }
}

TEST_CASE("format_double roundtrips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 3.141592653589793}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}
