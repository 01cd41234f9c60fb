#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reference_values.hpp"

#include "tdes/errors.hpp"
#include "tdes/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

using namespace tdes;
using cplx = ComplexValue;

TEST_CASE("Ramanujan tau against the pentagonal-number oracle") {
    const QSeries d = delta_q_expansion(400);
    CHECK(d.weight == 12);
    CHECK(d.size() == 400);
    for (long n = 1; n <= 30; ++n)
        CHECK(d.a(n) == ref::tau[n]);
}

TEST_CASE("tau is multiplicative and satisfies the Hecke recursion") {
    const QSeries d = delta_q_expansion(400);
    for (long m = 1; m <= 20; ++m)
        for (long n = 1; m * n <= 400; ++n)
            if (std::gcd(m, n) == 1)
                CHECK(d.a(m * n) == d.a(m) * d.a(n));
    // tau(p^(r+1)) = tau(p) tau(p^r) - p^11 tau(p^(r-1))
    for (long p : {2L, 3L, 5L, 7L}) {
        const std::int64_t p11 = static_cast<std::int64_t>(std::llround(std::pow(double(p), 11)));
        for (long pr = p; pr * p * p <= 400; pr *= p) {
            const __int128 lhs = d.a(pr * p);
            const __int128 rhs = static_cast<__int128>(d.a(p)) * d.a(pr) - static_cast<__int128>(p11) * d.a(pr / p);
            CHECK(lhs == rhs);
        }
    }
    // Deligne bound
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 97L, 397L})
        CHECK(std::fabs(double(d.a(p))) <= 2.0 * std::pow(double(p), 5.5));
}

TEST_CASE("q-series evaluation is modular") {
    const QSeries d = delta_q_expansion(200);
    const cplx z(0.1, 1.3);
    const cplx lhs = d.eval(-1.0 / z);
    const cplx rhs = std::pow(z, 12) * d.eval(z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    CHECK(d.tail_bound(1.0) < 1e-300);
    CHECK(d.tail_bound(0.05) > d.tail_bound(0.5));
}

TEST_CASE("completed L-values") {
    const QSeries d = delta_q_expansion();
    const LValue l6 = completed_L(d, 6.0);
    CHECK(std::abs(l6.value - ref::completed_L_delta_6) < 1e-14);
    CHECK(l6.abs_err < 1e-12);
    for (double s : {2.5, 4.0, 5.0})
        CHECK(std::abs(completed_L(d, s).value - completed_L(d, 12.0 - s).value) < 1e-12);
    const LValue t5 = completed_twisted_L(d, 5.0);
    CHECK(std::abs(t5.value - ref::twisted_L_delta_5) < 1e-13);
    for (double s : {3.0, 4.5, 6.0}) {
        const cplx lhs = completed_twisted_L(d, 12.0 - s).value;
        const cplx rhs = std::pow(2.0, 2.0 * s - 12.0) * completed_twisted_L(d, s).value;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("Petersson-norm ratios are constant, real and positive") {
    const double expect = std::strtod(ref::petersson_delta, nullptr);
    const std::vector<cplx> r = petersson_ratio_probe({{12, 5, 2}, {12, 6, 3}, {12, 7, 2}});
    REQUIRE(r.size() == 3);
    for (const cplx& v : r) {
        CHECK(v.real() > 0.0);
        CHECK(std::fabs(v.imag()) <= 1e-6 * std::abs(v));
        CHECK(std::abs(v - expect) <= 1e-8 * expect);
    }
    CHECK_THROWS_AS(petersson_ratio_probe({{14, 7, 4}}), DomainError);
    CHECK_THROWS_AS(petersson_ratio_probe({{12, 10, 3}}), DomainError);
    CHECK_THROWS_AS(petersson_ratio_probe({{12, 3, 2}}), DomainError);
}
