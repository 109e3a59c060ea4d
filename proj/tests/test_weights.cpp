#include <doctest.h>

#include <cmath>
#include <random>

#include "nlcl/weights.hpp"

using nlcl::KernelSpec;
using nlcl::WeightTable;

namespace {

// Straight-loop midpoint oracle for one hat-weight integral. A graded
// substitution h = t^m tames the endpoint singularity of kernels with p < 0.
double hat_weight_oracle(const KernelSpec& kernel, double dx, int k, int points = 400'000) {
    auto hat = [dx, k](double h) {
        double t = 1.0 - std::abs(h / dx - k);
        return t > 0.0 ? t : 0.0;
    };
    double lo = std::max(0.0, (k - 1) * dx);
    double hi = std::min(kernel.delta(), (k + 1) * dx);
    if (hi <= lo)
        return 0.0;
    int m = 1;
    if (lo == 0.0 && kernel.exponent() < 0.0)
        m = static_cast<int>(std::ceil(2.0 / (1.0 + kernel.exponent()))) + 1;
    double ta = std::pow(lo, 1.0 / m);
    double tb = std::pow(hi, 1.0 / m);
    double w = (tb - ta) / points;
    double sum = 0.0;
    for (int i = 0; i < points; ++i) {
        double t = ta + (i + 0.5) * w;
        double h = std::pow(t, m);
        sum += hat(h) * kernel(h) * m * std::pow(t, m - 1);
    }
    return sum * w;
}

} // namespace

TEST_CASE("horizon cell count") {
    CHECK(nlcl::horizon_cells(0.125, 1.0 / 16) == 2);
    CHECK(nlcl::horizon_cells(0.125, 1.0 / 64) == 8);
    CHECK(nlcl::horizon_cells(0.1, 1.0 / 16) == 1);
    CHECK(nlcl::horizon_cells(0.03, 1.0 / 16) == 0); // delta < dx
    // delta intended as an exact multiple must not round down
    CHECK(nlcl::horizon_cells(3.0 * (0.2 / 3.0), 0.2 / 3.0) == 3);
}

TEST_CASE("figure configuration: linear kernel, delta = 3 dx") {
    // omega(h) = 2h/delta^2, delta = 3, dx = 1: known closed-form weights
    KernelSpec kernel = KernelSpec::power_law(3.0, 1.0);
    WeightTable t = nlcl::build_second_order(kernel, 1.0);
    REQUIRE(t.r == 3);
    REQUIRE(t.w.size() == 5);
    CHECK(t.w[0] == doctest::Approx(1.0 / 27).epsilon(1e-12));
    CHECK(t.w[1] == doctest::Approx(6.0 / 27).epsilon(1e-12));
    CHECK(t.w[2] == doctest::Approx(12.0 / 27).epsilon(1e-12));
    CHECK(t.w[3] == doctest::Approx(8.0 / 27).epsilon(1e-12));
    CHECK(t.w[4] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("second-order weights match the hat oracle") {
    struct Case {
        double p, delta, dx;
    };
    const Case cases[] = {
        {1.0, 0.125, 1.0 / 16},
        {0.0, 0.125, 1.0 / 64},
        {-0.5, 0.125, 1.0 / 32},
        {2.0, 0.1, 1.0 / 16},   // delta not a grid multiple
        {0.5, 0.03, 1.0 / 16},  // delta < dx
    };
    for (const Case& c : cases) {
        KernelSpec kernel = KernelSpec::power_law(c.delta, c.p);
        WeightTable t = nlcl::build_second_order(kernel, c.dx);
        for (int k = 0; k < static_cast<int>(t.w.size()); ++k) {
            double oracle = hat_weight_oracle(kernel, c.dx, k);
            CHECK(t.w[k] == doctest::Approx(oracle).epsilon(5e-6).scale(1.0));
        }
    }
}

TEST_CASE("first-order weights integrate the kernel per cell") {
    KernelSpec kernel = KernelSpec::power_law(0.125, 1.0);
    double dx = 1.0 / 16;
    WeightTable t = nlcl::build_first_order(kernel, dx);
    REQUIRE(t.r == 2);
    REQUIRE(t.w.size() == 2);
    // closed form: int c h over the two cells, c = 2/delta^2
    double c = 2.0 / (0.125 * 0.125);
    CHECK(t.w[0] == doctest::Approx(0.5 * c * dx * dx).epsilon(1e-12));
    CHECK(t.w[1] == doctest::Approx(0.5 * c * (0.125 * 0.125 - dx * dx)).epsilon(1e-12));
    CHECK(t.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("first-order weights fold the tail when delta is not a multiple") {
    KernelSpec kernel = KernelSpec::power_law(0.1, 0.0);
    double dx = 1.0 / 16;
    WeightTable t = nlcl::build_first_order(kernel, dx);
    REQUIRE(t.r == 1);
    REQUIRE(t.w.size() == 1);
    CHECK(t.w[0] == doctest::Approx(1.0).epsilon(1e-12)); // whole mass in W_1
}

TEST_CASE("sub-cell horizon keeps a single first-order weight") {
    KernelSpec kernel = KernelSpec::power_law(0.03, 0.0);
    WeightTable t = nlcl::build_first_order(kernel, 1.0 / 16);
    REQUIRE(t.r == 0);
    REQUIRE(t.w.size() == 1);
    CHECK(t.w[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition of unity over randomized parameters") {
    std::mt19937 rng(91);
    std::uniform_real_distribution<double> p_dist(-0.95, 3.0);
    std::uniform_real_distribution<double> ratio_dist(0.1, 12.0);
    for (int trial = 0; trial < 200; ++trial) {
        double p = p_dist(rng);
        double dx = 1.0 / 32;
        double delta = ratio_dist(rng) * dx;
        KernelSpec kernel = KernelSpec::power_law(delta, p);
        WeightTable second = nlcl::build_second_order(kernel, dx);
        WeightTable first = nlcl::build_first_order(kernel, dx);
        CHECK(second.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(first.sum() == doctest::Approx(1.0).epsilon(1e-12));
        for (double w : second.w)
            CHECK(w >= -1e-14);
        for (double w : first.w)
            CHECK(w >= -1e-14);
    }
}

TEST_CASE("exact grid multiples zero the trailing weight") {
    KernelSpec kernel = KernelSpec::power_law(0.125, 1.0);
    WeightTable t = nlcl::build_second_order(kernel, 0.125 / 4);
    REQUIRE(t.r == 4);
    CHECK(t.w.back() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("vanishing-horizon weight limits") {
    double dx = 1.0 / 16;
    // p = 0, delta = dx/2: W_0 = 1 - delta/(2 dx) = 0.75, W_1 = 0.25
    KernelSpec half = KernelSpec::power_law(0.5 * dx, 0.0);
    WeightTable t = nlcl::build_second_order(half, dx);
    REQUIRE(t.r == 0);
    CHECK(t.w[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(t.w[1] == doctest::Approx(0.25).epsilon(1e-12));

    // generic bound: W_0 >= 1 - delta/dx and W_1 <= delta/dx as delta -> 0
    for (double scale : {0.5, 0.1, 0.01, 0.001}) {
        for (double p : {-0.5, 0.0, 1.0}) {
            KernelSpec k = KernelSpec::power_law(scale * dx, p);
            WeightTable w = nlcl::build_second_order(k, dx);
            CHECK(w.w[0] >= 1.0 - scale - 1e-12);
            CHECK(w.w[1] <= scale + 1e-12);
        }
    }
}
