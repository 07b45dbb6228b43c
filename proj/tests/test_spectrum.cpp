#include "doctest.h"

#include <algorithm>
#include <cstring>

#ifdef WGMCOOL_HAVE_OPENMP
#include <omp.h>
#endif

#include "wgmcool/errors.hpp"
#include "wgmcool/mie.hpp"
#include "wgmcool/spectrum.hpp"

using namespace wgmcool;

namespace {

ScanRequest request(double lo, double hi, double step, double m = 1.45) {
    ScanRequest r;
    r.x_min = lo;
    r.x_max = hi;
    r.step = step;
    r.refractive_index = m;
    r.power = 10e-3;
    return r;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("parallel scan is bit-identical to the serial reference") {
#ifdef WGMCOOL_HAVE_OPENMP
    omp_set_num_threads(4);
#endif
    const auto r = request(39.0, 41.0, 1e-3);
    const auto par = scan_spectrum(r);
    const auto ser = scan_spectrum_serial(r);
    REQUIRE(par.size() == 2001);
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        REQUIRE(same_bits(par[i].x, ser[i].x));
        REQUIRE(same_bits(par[i].q_ext, ser[i].q_ext));
        REQUIRE(same_bits(par[i].q_rad, ser[i].q_rad));
        REQUIRE(same_bits(par[i].force, ser[i].force));
    }
}

TEST_CASE("scan samples agree with pointwise efficiencies") {
    const auto s = scan_spectrum(request(10.0, 10.5, 0.25));
    REQUIRE(s.size() == 3);
    for (const auto& p : s) {
        const auto e = efficiencies(p.x, 1.45);
        CHECK(p.q_ext == doctest::Approx(e.q_ext).epsilon(1e-14));
        CHECK(p.q_rad == doctest::Approx(e.q_rad).epsilon(1e-14));
        CHECK(p.force == doctest::Approx(radiation_force(10e-3, e.q_rad)).epsilon(1e-14));
    }
}

TEST_CASE("grid endpoints") {
    CHECK(scan_sample_count(request(39.0, 39.001, 1e-3)) == 2);
    CHECK(scan_sample_count(request(39.0, 39.0015, 1e-3)) == 2);
    CHECK_THROWS_AS(scan_sample_count(request(1.0, 1.0, 1e-3)), DomainError);
}

TEST_CASE("39 to 41 shows several resonances of different widths") {
    const auto s = scan_spectrum(request(39.0, 41.0, 1e-3));
    int maxima = 0;
    double sharpest = 0.0;  // largest second difference relative to the level
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i].q_rad > s[i - 1].q_rad && s[i].q_rad > s[i + 1].q_rad) {
            ++maxima;
            const double curv = (2 * s[i].q_rad - s[i - 1].q_rad - s[i + 1].q_rad) / s[i].q_rad;
            sharpest = std::max(sharpest, curv);
        }
    }
    CHECK(maxima >= 3);
    // Broad lines barely bend over one step; a narrow one drops by percents.
    CHECK(sharpest > 1e-2);
    for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i].x > s[i - 1].x);
    }
}

TEST_CASE("index-matched scan is all zero") {
    for (const auto& p : scan_spectrum(request(5.0, 6.0, 0.1, 1.0))) {
        CHECK(p.q_ext == 0.0);
        CHECK(p.q_rad == 0.0);
        CHECK(p.force == 0.0);
    }
}

TEST_CASE("bad requests") {
    CHECK_THROWS_AS(scan_sample_count(request(41.0, 39.0, 1e-3)), DomainError);
    CHECK_THROWS_AS(scan_sample_count(request(0.0, 1.0, 1e-3)), DomainError);
    CHECK_THROWS_AS(scan_sample_count(request(1.0, 2.0, 0.0)), DomainError);
    CHECK_THROWS_AS(scan_sample_count(request(1.0, 2.0, 0.1, -1.0)), DomainError);
    auto r = request(1.0, 2.0, 1e-3);
    r.sample_budget = 100;
    CHECK_THROWS_AS(scan_sample_count(r), UsageError);
}
