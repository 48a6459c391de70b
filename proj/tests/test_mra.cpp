#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "core/filters.hpp"
#include "core/mra.hpp"

using namespace gegmra;

namespace {

// Brute-force reference: materialize the half-sample symmetric extension,
// run a plain full convolution, keep the even outputs.
std::pair<std::vector<double>, std::vector<double>> convolve_downsample_oracle(
    const std::vector<double>& x, const FilterPair& pair) {
    const std::size_t taps = pair.taps();
    const std::size_t pad = taps;  // generous left/right margins
    const std::size_t n = x.size();

    std::vector<double> ext(n + 2 * pad);
    for (std::size_t m = 0; m < ext.size(); ++m) {
        long idx = static_cast<long>(m) - static_cast<long>(pad);
        if (idx < 0) idx = -idx - 1;
        if (idx >= static_cast<long>(n)) idx = 2 * static_cast<long>(n) - 1 - idx;
        ext[m] = x[static_cast<std::size_t>(idx)];
    }

    const std::size_t out_len = (n + 1) / 2;
    std::vector<double> a(out_len, 0.0), d(out_len, 0.0);
    for (std::size_t out = 0; out < out_len; ++out) {
        for (std::size_t k = 0; k < taps; ++k) {
            const double v = ext[2 * out + pad - k];
            a[out] += pair.h[k] * v;
            d[out] += pair.g[k] * v;
        }
    }
    return {a, d};
}

// One-cycle DFT amplitude of the bin-1 tone in a steady stretch.
double tone_amplitude(const std::vector<double>& x, std::size_t start, std::size_t window) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < window; ++i)
        acc += x[start + i] *
               std::polar(1.0, -2.0 * M_PI * static_cast<double>(i) / static_cast<double>(window));
    return 2.0 * std::abs(acc) / static_cast<double>(window);
}

std::complex<double> raw_dtft(const std::vector<double>& taps, double w) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < taps.size(); ++k)
        acc += taps[k] * std::polar(1.0, -w * static_cast<double>(k));
    return acc;
}

}  // namespace

TEST_CASE("constant input: approximation picks up sqrt(2) gain, details vanish") {
    const double c = 3.25;
    const std::vector<double> x(64, c);

    SUBCASE("Haar") {
        const auto [a, d] = analyze_one_level(x, make_gegenbauer_filter({1, 1.0}));
        REQUIRE(a.size() == 32);
        for (double v : a) CHECK(v == doctest::Approx(c * std::sqrt(2.0)).epsilon(1e-13));
        for (double v : d) CHECK(std::abs(v) < 1e-13);
    }
    SUBCASE("nu=3 alpha=12") {
        const auto [a, d] = analyze_one_level(x, make_gegenbauer_filter({3, 12.0}));
        for (double v : a) CHECK(v == doctest::Approx(c * std::sqrt(2.0)).epsilon(1e-13));
        for (double v : d) CHECK(std::abs(v) < 1e-13);
    }
}

TEST_CASE("unit impulse matches the convolve-downsample oracle") {
    std::vector<double> x(32, 0.0);
    x[9] = 1.0;
    for (const char* spec : {"geg:3:1", "geg:3:12", "daub4"}) {
        const auto pair = parse_filter_spec(spec);
        const auto [a, d] = analyze_one_level(x, pair);
        const auto [oa, od] = convolve_downsample_oracle(x, pair);
        REQUIRE(a.size() == oa.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i] == doctest::Approx(oa[i]).epsilon(1e-14));
            CHECK(d[i] == doctest::Approx(od[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("too-short input rejected") {
    const auto pair = make_gegenbauer_filter({3, 1.0});
    CHECK_THROWS_AS(analyze_one_level({1.0, 2.0, 3.0}, pair), std::invalid_argument);
}

TEST_CASE("multi-level decomposition") {
    std::mt19937 rng(5);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> x(1024);
    for (double& v : x) v = dist(rng);
    const auto pair = make_gegenbauer_filter({3, 12.0});

    SUBCASE("level sizes and rates for an 8-cycle record") {
        const auto dec = decompose(x, pair, 7);
        std::size_t expect = 1024;
        for (int j = 1; j <= 7; ++j) {
            expect = (expect + 1) / 2;
            CHECK(dec.approximations[static_cast<std::size_t>(j) - 1].size() == expect);
            CHECK(dec.effective_rate(7680.0, j) == doctest::Approx(7680.0 / std::pow(2.0, j)));
        }
        // Samples per cycle at 128/cycle input: 64, 32, 16, ..., 1.
        CHECK(dec.approximations[2].size() == 128);  // 16 per cycle over 8 cycles
        CHECK(dec.approximations[6].size() == 8);    // 1 per cycle
    }
    SUBCASE("J=1 equals the single-stage analysis") {
        const auto dec = decompose(x, pair, 1);
        const auto [a, d] = analyze_one_level(x, pair);
        CHECK(dec.approximations[0] == a);
        CHECK(dec.details[0] == d);
    }
    SUBCASE("level bounds") {
        CHECK_THROWS_AS(decompose(x, pair, 0), std::invalid_argument);
        CHECK_THROWS_AS(decompose(std::vector<double>(8, 1.0), pair, 4), std::invalid_argument);
    }
    SUBCASE("cumulative delay bookkeeping") {
        const auto dec = decompose(x, pair, 3);
        CHECK(dec.stage_delay == doctest::Approx(1.5));
        CHECK(dec.cumulative_delay(1) == doctest::Approx(1.5));
        CHECK(dec.cumulative_delay(3) == doctest::Approx(1.5 * 7.0));
    }
}

TEST_CASE("decompose equals repeated oracle stages on random signals") {
    std::mt19937 rng(17);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (const char* spec : {"geg:3:12", "geg:7:1", "daub4"}) {
        const auto pair = parse_filter_spec(spec);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> x(1024);
            for (double& v : x) v = dist(rng);

            const auto dec = decompose(x, pair, 3);
            std::vector<double> current = x;
            for (int j = 1; j <= 3; ++j) {
                const auto [oa, od] = convolve_downsample_oracle(current, pair);
                const auto& a = dec.approximations[static_cast<std::size_t>(j) - 1];
                const auto& d = dec.details[static_cast<std::size_t>(j) - 1];
                REQUIRE(a.size() == oa.size());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    CHECK(std::abs(a[i] - oa[i]) < 1e-12);
                    CHECK(std::abs(d[i] - od[i]) < 1e-12);
                }
                current = oa;
            }
        }
    }
}

TEST_CASE("linearity") {
    std::mt19937 rng(29);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> x(256), y(256), mix(256);
    for (std::size_t i = 0; i < 256; ++i) {
        x[i] = dist(rng);
        y[i] = dist(rng);
        mix[i] = 2.5 * x[i] - 0.75 * y[i];
    }
    const auto pair = make_gegenbauer_filter({3, 12.0});
    const auto dx = decompose(x, pair, 3);
    const auto dy = decompose(y, pair, 3);
    const auto dm = decompose(mix, pair, 3);
    for (int j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < dm.details[static_cast<std::size_t>(j)].size(); ++i) {
            const double expect = 2.5 * dx.details[static_cast<std::size_t>(j)][i] -
                                  0.75 * dy.details[static_cast<std::size_t>(j)][i];
            CHECK(dm.details[static_cast<std::size_t>(j)][i] ==
                  doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("pure tone gains track the transfer function product") {
    // 16 cycles at 128 samples/cycle, 60 Hz at fs = 7680 Hz.
    const double w60 = 2.0 * M_PI * 60.0 / 7680.0;
    std::vector<double> x(2048);
    for (std::size_t n = 0; n < x.size(); ++n)
        x[n] = std::cos(w60 * static_cast<double>(n) + 0.3);

    for (const char* spec : {"geg:3:1", "geg:3:12"}) {
        const auto pair = parse_filter_spec(spec);
        const auto dec = decompose(x, pair, 3);

        // Interior of the level-3 approximation: the tone amplitude equals
        // the product of the stage gains at the doubled frequencies.
        double expect = 1.0;
        for (int j = 0; j < 3; ++j)
            expect *= std::abs(raw_dtft(pair.h, std::pow(2.0, j) * w60));
        const double got = tone_amplitude(dec.approximations[2], 128, 16);
        CHECK(got == doctest::Approx(expect).epsilon(1e-9));

        // Level-1 detail amplitude relative to the approximation matches
        // |G| / |H| at the fundamental.
        const double a1 = tone_amplitude(dec.approximations[0], 512, 64);
        const double d1 = tone_amplitude(dec.details[0], 512, 64);
        const double ratio_expect = std::abs(raw_dtft(pair.g, w60)) /
                                    std::abs(raw_dtft(pair.h, w60));
        CHECK(d1 / a1 == doctest::Approx(ratio_expect).epsilon(1e-9));
    }
}
