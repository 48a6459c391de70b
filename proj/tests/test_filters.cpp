#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "core/filters.hpp"

using namespace gegmra;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Independent route for the transfer function: evaluate the polynomial by
// its recurrence at cos(w/2) instead of summing the gamma-formula taps.
std::complex<double> polynomial_route(int nu, double alpha, double w) {
    const double ratio = eval_gegenbauer(nu, alpha, std::cos(w / 2.0)) /
                         eval_gegenbauer(nu, alpha, 1.0);
    return ratio * std::polar(1.0, -w * nu / 2.0);
}

std::complex<double> tap_route(const std::vector<double>& h, double w) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < h.size(); ++k)
        acc += h[k] / kSqrt2 * std::polar(1.0, -w * static_cast<double>(k));
    return acc;
}

}  // namespace

TEST_CASE("gegenbauer polynomial recurrence values") {
    CHECK(eval_gegenbauer(0, 1.0, 0.3) == doctest::Approx(1.0));
    CHECK(eval_gegenbauer(1, 1.0, 0.5) == doctest::Approx(1.0));
    CHECK(eval_gegenbauer(3, 1.0, 1.0) == doctest::Approx(4.0));
    CHECK(eval_gegenbauer(3, 12.0, 1.0) == doctest::Approx(2600.0));
    // U_3(cos 60deg) = sin(240deg)/sin(60deg) = -1, so parity gives +1 at -0.5.
    CHECK(eval_gegenbauer(3, 1.0, 0.5) == doctest::Approx(-1.0));
    CHECK(eval_gegenbauer(3, 1.0, -0.5) == doctest::Approx(1.0));
}

TEST_CASE("gegenbauer polynomial parity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> zdist(-1.0, 1.0);
    std::uniform_real_distribution<double> adist(-0.4, 8.0);
    std::uniform_int_distribution<int> ndist(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = ndist(rng);
        const double alpha = adist(rng);
        const double z = zdist(rng);
        const double left = eval_gegenbauer(n, alpha, -z);
        const double right = (n % 2 == 0 ? 1.0 : -1.0) * eval_gegenbauer(n, alpha, z);
        CHECK(left == doctest::Approx(right).epsilon(1e-12));
    }
}

TEST_CASE("gegenbauer polynomial domain") {
    CHECK_THROWS_AS(eval_gegenbauer(2, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_gegenbauer(2, -0.6, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_gegenbauer(-1, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("scaling coefficients: known families") {
    SUBCASE("nu=1 collapses to Haar for any alpha") {
        for (double alpha : {0.5, 1.0, 2.7, 12.0}) {
            const auto h = gegenbauer_scaling_coeffs({1, alpha});
            REQUIRE(h.size() == 2);
            CHECK(h[0] == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-14));
            CHECK(h[1] == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-14));
        }
    }
    SUBCASE("alpha=1 has identical taps at any order") {
        for (int nu : {3, 5, 7}) {
            const auto h = gegenbauer_scaling_coeffs({nu, 1.0});
            REQUIRE(h.size() == static_cast<std::size_t>(nu) + 1);
            for (double v : h) CHECK(v == doctest::Approx(kSqrt2 / (nu + 1.0)).epsilon(1e-14));
        }
    }
    SUBCASE("nu=3 alpha=12") {
        const auto h = gegenbauer_scaling_coeffs({3, 12.0});
        CHECK(h[0] == doctest::Approx(kSqrt2 * 0.14).epsilon(1e-13));
        CHECK(h[1] == doctest::Approx(kSqrt2 * 0.36).epsilon(1e-13));
        CHECK(h[2] == doctest::Approx(kSqrt2 * 0.36).epsilon(1e-13));
        CHECK(h[3] == doctest::Approx(kSqrt2 * 0.14).epsilon(1e-13));
    }
    SUBCASE("nu=3 alpha=0.5 (Legendre)") {
        const auto h = gegenbauer_scaling_coeffs({3, 0.5});
        CHECK(h[0] == doctest::Approx(kSqrt2 * 5.0 / 16.0).epsilon(1e-13));
        CHECK(h[1] == doctest::Approx(kSqrt2 * 3.0 / 16.0).epsilon(1e-13));
    }
}

TEST_CASE("scaling coefficients: structural properties over random parameters") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> adist(1e-3, 50.0);
    std::uniform_int_distribution<int> nudist(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int nu = 2 * nudist(rng) + 1;
        const double alpha = adist(rng);
        CAPTURE(nu);
        CAPTURE(alpha);
        const auto h = gegenbauer_scaling_coeffs({nu, alpha});
        REQUIRE(h.size() == static_cast<std::size_t>(nu) + 1);

        double sum = 0.0, even = 0.0, odd = 0.0;
        for (std::size_t k = 0; k < h.size(); ++k) {
            CHECK(h[k] == doctest::Approx(h[h.size() - 1 - k]).epsilon(1e-14));
            sum += h[k];
            (k % 2 == 0 ? even : odd) += h[k];
        }
        CHECK(sum == doctest::Approx(kSqrt2).epsilon(1e-12));
        CHECK(even == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-11));
        CHECK(odd == doctest::Approx(kSqrt2 / 2.0).epsilon(1e-11));
    }
}

TEST_CASE("scaling coefficients: domain errors") {
    CHECK_THROWS_AS(gegenbauer_scaling_coeffs({2, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer_scaling_coeffs({-3, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer_scaling_coeffs({3, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer_scaling_coeffs({3, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer_scaling_coeffs({3, 171.0}), std::out_of_range);
    CHECK_NOTHROW(gegenbauer_scaling_coeffs({7, 170.0}));
}

TEST_CASE("closed forms agree: gamma taps reproduce the polynomial transfer") {
    // The tap formula and the polynomial-ratio definition are two routes to
    // the same transfer function; they must agree on a dense grid.
    for (const auto& [nu, alpha] : std::vector<std::pair<int, double>>{
             {1, 1.0}, {3, 0.5}, {3, 1.0}, {3, 12.0}, {5, 2.5}, {7, 1.0}, {7, 12.0}, {9, 33.0}}) {
        const auto h = gegenbauer_scaling_coeffs({nu, alpha});
        for (int i = 0; i < 512; ++i) {
            const double w = M_PI * i / 511.0;
            const auto a = tap_route(h, w);
            const auto b = polynomial_route(nu, alpha, w);
            CHECK(std::abs(a - b) < 1e-10);
        }
    }
}

TEST_CASE("wavelet rule") {
    SUBCASE("direct index evaluation") {
        const std::vector<double> h = {1.0, 2.0, 2.0, 1.0};
        const auto g = wavelet_from_scaling(h);
        CHECK(g == std::vector<double>{1.0, -2.0, 2.0, -1.0});
    }
    SUBCASE("Haar") {
        const auto g = wavelet_from_scaling({kSqrt2 / 2.0, kSqrt2 / 2.0});
        CHECK(g[0] == doctest::Approx(kSqrt2 / 2.0));
        CHECK(g[1] == doctest::Approx(-kSqrt2 / 2.0));
    }
    SUBCASE("nu=3 alpha=12") {
        const auto pair = make_gegenbauer_filter({3, 12.0});
        CHECK(pair.g[0] == doctest::Approx(kSqrt2 * 0.14).epsilon(1e-13));
        CHECK(pair.g[1] == doctest::Approx(-kSqrt2 * 0.36).epsilon(1e-13));
        CHECK(pair.g[2] == doctest::Approx(kSqrt2 * 0.36).epsilon(1e-13));
        CHECK(pair.g[3] == doctest::Approx(-kSqrt2 * 0.14).epsilon(1e-13));
    }
    SUBCASE("magnitude mirror |G(w)| = |H(pi-w)|") {
        const auto pair = make_gegenbauer_filter({5, 7.5});
        for (int i = 0; i <= 64; ++i) {
            const double w = M_PI * i / 64.0;
            CHECK(std::abs(tap_route(pair.g, w)) ==
                  doctest::Approx(std::abs(tap_route(pair.h, M_PI - w))).epsilon(1e-12));
        }
    }
    SUBCASE("odd symmetry and zero sum over random families") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> adist(0.1, 40.0);
        for (int trial = 0; trial < 50; ++trial) {
            const int nu = 2 * (trial % 5) + 1;
            const auto pair = make_gegenbauer_filter({nu, adist(rng)});
            double sum = 0.0;
            for (std::size_t k = 0; k < pair.g.size(); ++k) {
                CHECK(pair.g[k] == doctest::Approx(-pair.g[pair.g.size() - 1 - k]).epsilon(1e-13));
                sum += pair.g[k];
            }
            CHECK(std::abs(sum) < 1e-12);
        }
    }
    SUBCASE("odd length rejected") {
        CHECK_THROWS_AS(wavelet_from_scaling({1.0, 2.0, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("daub4 reference filter") {
    const auto pair = make_daub4_filter();
    REQUIRE(pair.taps() == 4);

    double hsum = 0.0, gsum = 0.0;
    for (double v : pair.h) hsum += v;
    for (double v : pair.g) gsum += v;
    CHECK(hsum == doctest::Approx(kSqrt2).epsilon(1e-14));
    CHECK(std::abs(gsum) < 1e-14);

    const double shift2 = pair.h[0] * pair.h[2] + pair.h[1] * pair.h[3];
    CHECK(std::abs(shift2) < 1e-14);
}

TEST_CASE("nonorthogonality: shift-2 autocorrelation of 4-tap families") {
    for (double alpha : {1.0, 12.0}) {
        const auto pair = make_gegenbauer_filter({3, alpha});
        const double shift2 = pair.h[0] * pair.h[2] + pair.h[1] * pair.h[3];
        CHECK(shift2 == doctest::Approx(2.0 * pair.h[0] * pair.h[1]).epsilon(1e-13));
        CHECK(shift2 > 0.01);
    }
}

TEST_CASE("filter spec parsing") {
    CHECK(parse_filter_spec("geg:3:12").tag() == "geg3a12");
    CHECK(parse_filter_spec("geg:3:0.5").tag() == "geg3a0.5");
    CHECK(parse_filter_spec("daub4").tag() == "daub4");
    CHECK(parse_filter_spec("haar").h.size() == 2);

    CHECK_THROWS_WITH_AS(parse_filter_spec("geg:2:1"),
                         doctest::Contains("nu must be odd"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filter_spec("geg:3:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filter_spec("geg:3:0.1234567"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filter_spec("geg:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filter_spec("sym8"), std::invalid_argument);
}
