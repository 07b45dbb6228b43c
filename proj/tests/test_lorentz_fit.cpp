#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "wgmcool/errors.hpp"
#include "wgmcool/lorentz_fit.hpp"

using namespace wgmcool;

namespace {

// Narrow line: 4.2 pN over a 14.3 pN background, HWHM 3e-6 in x.
constexpr double center = 40.62425;
constexpr double width = 3e-6;
constexpr double peak = 4.2e-12;
constexpr double offset = 14.3e-12;

double line(double x) {
    const double d = x - center;
    return offset + peak * width * width / (d * d + width * width);
}

std::vector<double> grid(int samples, double half_span) {
    std::vector<double> x(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        x[static_cast<std::size_t>(i)] =
            center + half_span * (2.0 * i / (samples - 1) - 1.0);
    }
    return x;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("exact Lorentzian parameters are recovered") {
    const auto x = grid(101, 10 * width);
    std::vector<double> y;
    for (double v : x) {
        y.push_back(line(v));
    }
    const auto f = fit_lorentzian(x, y);
    CHECK(rel(f.center, center) < 1e-6);
    CHECK(rel(f.half_width, width) < 1e-6);
    CHECK(rel(f.peak, peak) < 1e-6);
    CHECK(rel(f.offset, offset) < 1e-6);
    CHECK(f.r_squared > 0.999999);
    CHECK(f(center) == doctest::Approx(offset + peak).epsilon(1e-6));
}

TEST_CASE("dips fit with a negative peak") {
    const auto x = grid(81, 8 * width);
    std::vector<double> y;
    for (double v : x) {
        y.push_back(2 * offset - line(v));
    }
    const auto f = fit_lorentzian(x, y);
    CHECK(rel(f.peak, -peak) < 1e-6);
    CHECK(rel(f.half_width, width) < 1e-6);
}

// With 1% multiplicative noise on a line whose background is 3.4 times its
// height, single fits scatter by a few percent in width. The statistical
// statement: over 400 seeded realisations the RMS relative error of every
// parameter stays below 5% and the mean is unbiased to 1%.
TEST_CASE("noisy Lorentzian, Monte-Carlo") {
    const auto x = grid(101, 5 * width);
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> gauss(0.0, 1.0);
    constexpr int trials = 400;
    double sq[4] = {0, 0, 0, 0};
    double sum[4] = {0, 0, 0, 0};
    for (int t = 0; t < trials; ++t) {
        std::vector<double> y;
        for (double v : x) {
            y.push_back(line(v) * (1.0 + 0.01 * gauss(rng)));
        }
        const auto f = fit_lorentzian(x, y);
        const double e[4] = {(f.center - center) / width, f.half_width / width - 1.0,
                             f.peak / peak - 1.0, f.offset / offset - 1.0};
        for (int k = 0; k < 4; ++k) {
            sq[k] += e[k] * e[k];
            sum[k] += e[k];
        }
    }
    for (int k = 0; k < 4; ++k) {
        CAPTURE(k);
        CHECK(std::sqrt(sq[k] / trials) < 0.05);
        CHECK(std::abs(sum[k] / trials) < 0.01);
    }
}

TEST_CASE("flat input has no peak") {
    const auto x = grid(50, 10 * width);
    const std::vector<double> y(x.size(), offset);
    CHECK_THROWS_AS(fit_lorentzian(x, y), NotFoundError);
}

TEST_CASE("input checks") {
    const auto x = grid(6, 10 * width);
    std::vector<double> y;
    for (double v : x) {
        y.push_back(line(v));
    }
    CHECK_THROWS_AS(fit_lorentzian(x, y), DomainError);
    auto xs = grid(20, 10 * width);
    std::vector<double> ys;
    for (double v : xs) {
        ys.push_back(line(v));
    }
    std::swap(xs[3], xs[4]);
    CHECK_THROWS_AS(fit_lorentzian(xs, ys), DomainError);
    // A window narrower than four half-widths cannot pin the width.
    const auto narrow = grid(41, 1.0 * width);
    std::vector<double> yn;
    for (double v : narrow) {
        yn.push_back(line(v));
    }
    CHECK_THROWS_AS(fit_lorentzian(narrow, yn), DomainError);
}
