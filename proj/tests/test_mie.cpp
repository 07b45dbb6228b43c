#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracle/mie_oracle.hpp"
#include "wgmcool/constants.hpp"
#include "wgmcool/errors.hpp"
#include "wgmcool/mie.hpp"

using namespace wgmcool;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("index-matched sphere scatters nothing") {
    const MieSeries s = mie_coefficients(10.0, 1.0, 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(s.a_n(n) == std::complex<double>(0.0, 0.0));
        CHECK(s.b_n(n) == std::complex<double>(0.0, 0.0));
    }
    CHECK(q_ext(s) == 0.0);
    CHECK(q_rad(s) == 0.0);
}

TEST_CASE("first coefficients match the extended-precision oracle") {
    const MieSeries s = mie_coefficients(1.0, 1.5, 10);
    const oracle::Series ref = oracle::coefficients(1.0, 1.5, 10);
    for (int n = 1; n <= 3; ++n) {
        const auto a = ref.a[n - 1].value();
        const auto b = ref.b[n - 1].value();
        CHECK(std::abs(s.a_n(n) - a) / std::abs(a) < 1e-10);
        CHECK(std::abs(s.b_n(n) - b) / std::abs(b) < 1e-10);
    }
}

TEST_CASE("coefficients lie on the unitarity circle") {
    for (double x : {1.0, 10.0, 40.0, 40.62425}) {
        const MieSeries s = mie_coefficients(x, 1.45, std::max(60, default_series_length(x)));
        for (int n = 1; n <= s.n_max(); ++n) {
            CHECK(std::abs(std::abs(s.a_n(n) - 0.5) - 0.5) < 1e-8);
            CHECK(std::abs(std::abs(s.b_n(n) - 0.5) - 0.5) < 1e-8);
        }
    }
}

TEST_CASE("series tail decays below 1e-14 past the cutoff") {
    for (double x : {0.5, 1.0, 10.0, 40.5}) {
        for (double m : {1.45, 1.5}) {
            const MieSeries s = mie_coefficients(x, m);
            for (int n = wiscombe_cutoff(x) + 11; n <= s.n_max(); ++n) {
                CHECK(std::abs(s.a_n(n)) < 1e-14);
                CHECK(std::abs(s.b_n(n)) < 1e-14);
            }
        }
    }
}

TEST_CASE("efficiencies agree with the oracle to 1e-10") {
    for (double x : {1.0, 10.0, 40.5}) {
        for (double m : {1.45, 1.5}) {
            CAPTURE(x);
            CAPTURE(m);
            const Efficiencies e = efficiencies(x, m);
            const oracle::Efficiencies ref = oracle::efficiencies(x, m, default_series_length(x));
            CHECK(rel(e.q_ext, ref.q_ext) < 1e-10);
            CHECK(rel(e.q_rad, ref.q_rad) < 1e-10);
            CHECK(e.q_ext >= 0.0);
            CHECK(e.q_rad >= 0.0);
            CHECK(e.q_rad <= e.q_ext * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("Rayleigh limit") {
    for (double m : {1.45, 1.5}) {
        for (double x : {0.05, 0.1}) {
            const double k = (m * m - 1.0) / (m * m + 2.0);
            const double rayleigh = 8.0 / 3.0 * std::pow(x, 4) * k * k;
            const Efficiencies e = efficiencies(x, m);
            CHECK(rel(e.q_ext, rayleigh) < 0.02);
            CHECK(rel(e.q_rad, rayleigh) < 0.02);
        }
    }
    CHECK(rel(efficiencies(0.1, 1.5).q_ext, 2.31e-5) < 0.02);
}

TEST_CASE("truncated series is flagged and refused by the sums") {
    const MieSeries s = mie_coefficients(40.0, 1.45, 20);
    CHECK(s.truncated);
    CHECK_THROWS_AS(q_ext(s), ConvergenceError);
    try {
        q_rad(s);
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() > 1e-14);
    }
    CHECK_FALSE(mie_coefficients(40.0, 1.45).truncated);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(mie_coefficients(std::nan(""), 1.5, 5), DomainError);
    CHECK_THROWS_AS(mie_coefficients(1.0, INFINITY, 5), DomainError);
    CHECK_THROWS_AS(mie_coefficients(-1.0, 1.5, 5), DomainError);
    CHECK_THROWS_AS(mie_coefficients(1.0, 0.0, 5), DomainError);
    CHECK_THROWS_AS(mie_coefficients(1.0, 1.5, 0), DomainError);
    CHECK_THROWS_AS(mie_coefficients(1.0, std::complex<double>(1.5, 0.01), 5), DomainError);
    CHECK_NOTHROW(mie_coefficients(1.0, std::complex<double>(1.5, 0.0), 5));
}

TEST_CASE("radiation force") {
    CHECK(radiation_force(0.0, 2.3) == 0.0);
    CHECK(radiation_force(10e-3, 1.0) == doctest::Approx(10e-3 / constants::speed_of_light));
    CHECK_THROWS_AS(radiation_force(-1.0, 1.0), DomainError);
}

TEST_CASE("sphere mass and size parameter") {
    Sphere s{10e-6, 1.45, constants::silica_density, {}};
    CHECK(rel(s.mass(), 4.0 / 3.0 * constants::pi * 1e-15 * 2200.0) < 1e-12);
    s.mass_override = 4e-12;
    CHECK(s.mass() == 4e-12);
    CHECK_NOTHROW(s.validate());
    s.radius = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK(size_parameter(5e-6, 773e-9) == doctest::Approx(constants::two_pi * 5e-6 / 773e-9));
    CHECK(wiscombe_cutoff(40.0) == 56);
    CHECK(wiscombe_cutoff(40.5) == 57);
}
