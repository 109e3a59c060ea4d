#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlcl/diagnostics.hpp"
#include "nlcl/grid.hpp"

using nlcl::Bc;
using nlcl::Grid1D;
using nlcl::StateField;
using std::numbers::pi;

namespace {

// Closed-form cell average of (1 + sin(2 pi x))/2 over [a, b].
double sine_cell_average(double a, double b) {
    return 0.5 * (1.0 + (std::cos(2.0 * pi * a) - std::cos(2.0 * pi * b)) /
                            (2.0 * pi * (b - a)));
}

} // namespace

TEST_CASE("grid geometry") {
    Grid1D g(0.0, 1.0, 16, Bc::periodic);
    CHECK(g.dx() == doctest::Approx(1.0 / 16));
    CHECK(g.center(0) == doctest::Approx(1.0 / 32));
    CHECK(g.interface(15) == doctest::Approx(1.0));
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2, Bc::periodic), nlcl::ContractViolation);
    CHECK_THROWS_AS(Grid1D(1.0, 0.0, 16, Bc::periodic), nlcl::ContractViolation);
}

TEST_CASE("periodic padding wraps") {
    StateField u{Grid1D(0.0, 1.0, 4, Bc::periodic), {1.0, 2.0, 3.0, 4.0}, 0.0};
    auto z = nlcl::pad(u, 2);
    CHECK(z == std::vector<double>{3.0, 4.0, 1.0, 2.0, 3.0, 4.0, 1.0, 2.0});
    // ghost width beyond one period keeps wrapping
    auto z2 = nlcl::pad(u, 5);
    CHECK(z2[0] == 4.0);
    CHECK(z2[13] == 1.0);
}

TEST_CASE("outflow padding extends the boundary cells") {
    StateField u{Grid1D(0.0, 1.0, 4, Bc::outflow), {1.0, 2.0, 3.0, 4.0}, 0.0};
    auto z = nlcl::pad(u, 3);
    CHECK(z == std::vector<double>{1.0, 1.0, 1.0, 1.0, 2.0, 3.0, 4.0, 4.0, 4.0, 4.0});
}

TEST_CASE("initial averages match closed-form sine averages") {
    Grid1D g(0.0, 1.0, 16, Bc::periodic);
    auto u01 = [](double x) { return 0.5 * (1.0 + std::sin(2.0 * pi * x)); };
    StateField u = nlcl::initial_average(u01, g);
    for (int j = 0; j < g.n; ++j) {
        double a = g.a + j * g.dx();
        CHECK(u.values[j] == doctest::Approx(sine_cell_average(a, a + g.dx())).epsilon(1e-14));
    }
}

TEST_CASE("initial averages are exact for polynomials up to degree 9") {
    Grid1D g(-1.0, 1.0, 8, Bc::periodic);
    auto poly = [](double x) { return std::pow(x, 9) - 3.0 * std::pow(x, 4) + x; };
    StateField u = nlcl::initial_average(poly, g);
    for (int j = 0; j < g.n; ++j) {
        double a = g.a + j * g.dx();
        double b = a + g.dx();
        // exact antiderivative: x^10/10 - 3 x^5/5 + x^2/2
        auto F = [](double x) {
            return std::pow(x, 10) / 10.0 - 0.6 * std::pow(x, 5) + 0.5 * x * x;
        };
        CHECK(u.values[j] == doctest::Approx((F(b) - F(a)) / g.dx()).epsilon(1e-13));
    }
}

TEST_CASE("restriction of fine sine averages equals direct coarse averages") {
    auto u01 = [](double x) { return 0.5 * (1.0 + std::sin(2.0 * pi * x)); };
    Grid1D fine(0.0, 1.0, 1024, Bc::periodic);
    Grid1D coarse(0.0, 1.0, 16, Bc::periodic);
    StateField restricted = nlcl::restrict_field(nlcl::initial_average(u01, fine), coarse);
    StateField direct = nlcl::initial_average(u01, coarse);
    for (int j = 0; j < coarse.n; ++j)
        CHECK(restricted.values[j] == doctest::Approx(direct.values[j]).epsilon(1e-14));
}
