#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reference_values.hpp"

#include "tdes/eisenstein.hpp"
#include "tdes/errors.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace tdes;
using cplx = ComplexValue;

namespace {

double rel(cplx a, cplx b, double scale = 0.0) {
    return std::abs(a - b) / std::max({std::abs(b), scale, 1e-300});
}

double exact_c1(const ParityPoint& p) {
    return to_double(c1_exact(p)) * 0.5 * std::pow(2.0 * M_PI, p.k + 1.0 - p.w);
}

} // namespace

TEST_CASE("domain predicates") {
    const DomainPoint a{12, {4.5, 0.0}, {2.0, 0.0}};
    CHECK(a.in_D());
    CHECK(a.in_F());
    CHECK_FALSE(a.in_D1());
    const DomainPoint b{12, {5.0, 1.0}, {-0.5, 0.0}};
    CHECK(b.in_D());
    CHECK(b.in_D1());
    CHECK_FALSE(b.in_F());
    const DomainPoint c{12, {2.0, 0.0}, {0.0, 0.0}};
    CHECK_FALSE(c.in_D());
    const DomainPoint d{12, {6.0, 0.0}, {5.0, 0.0}};
    CHECK_FALSE(d.in_D());
    CHECK(d.in_F());
}

TEST_CASE("prefactor and continuation against reference values") {
    CHECK(rel(prefactor({12, {4.5, 0.0}, {2.0, 0.0}}), ref::prefactor_12_4p5_2) < 1e-13);
    struct Case {
        DomainPoint pt;
        cplx expect;
    };
    for (const Case& c : {Case{{12, {4.5, 0.0}, {2.2, 0.0}}, ref::continuation_12_4p5_2p2},
                          Case{{12, {5.5, 0.5}, {3.3, -0.2}}, ref::continuation_12_5p5i_3p3i},
                          Case{{16, {7.25, 0.0}, {4.6, 0.0}}, ref::continuation_16_7p25_4p6}}) {
        const ContinuationTerms t = continuation_terms(c.pt);
        CHECK(rel(t.sum, c.expect, 1e-3 * t.scale) < 1e-10);
        CHECK(rel(continuation_main(c.pt), t.sum) == 0.0);
    }
}

TEST_CASE("continuation at integer points uses the exact closed form") {
    for (const auto& r : ref::c1_exact) {
        const ParityPoint p{r.k, r.s, r.w};
        const ContinuationTerms t = continuation_terms(to_domain_point(p));
        CHECK(t.exact_path);
        CHECK(std::abs(t.sum - exact_c1(p)) <= 1e-14 * t.scale);
    }
}

TEST_CASE("continuation is smooth across the integer-w removable singularity") {
    for (double w : {2.0, 3.0, 4.0}) {
        const DomainPoint in{12, {6.5, 0.0}, {w + 0.01, 0.0}};
        const DomainPoint out{12, {6.5, 0.0}, {w + 0.08, 0.0}};
        const ContinuationTerms a = continuation_terms(in), b = continuation_terms(out);
        CHECK(a.circle_path);
        CHECK_FALSE(b.circle_path);
        // compare both against a Taylor step from the midpoint of the circle path
        const DomainPoint lo{12, {6.5, 0.0}, {w + 0.07, 0.0}}, hi{12, {6.5, 0.0}, {w + 0.09, 0.0}};
        const cplx deriv = (continuation_main(hi) - continuation_main(lo)) / 0.02;
        const cplx predicted = b.sum - 0.07 * deriv;
        CHECK(rel(a.sum, predicted, b.scale) < 1e-3);
    }
}

TEST_CASE("c1 series matches the exact value") {
    for (ParityPoint p : {ParityPoint{12, 5, 2}, ParityPoint{12, 6, 3}}) {
        const DomainPoint pt = to_domain_point(p);
        const CoeffValue c = c1_series(pt);
        const double scale = continuation_terms(pt).scale;
        CHECK(rel(c.value, exact_c1(p), scale) < 1e-6);
        CHECK(c.trunc_error_estimate < 1e-6 * scale);
    }
}

TEST_CASE("series stable under doubling the truncation") {
    Truncation small, large;
    small.c_max = 60;
    large.c_max = 120;
    const DomainPoint pts[] = {{12, {4.5, 0.0}, {2.0, 0.0}},  {12, {5.5, 0.3}, {2.5, -0.2}},
                               {14, {6.0, 0.0}, {3.0, 0.0}},  {16, {8.5, 0.0}, {1.5, 0.0}},
                               {12, {7.0, -0.4}, {-1.5, 0.0}}};
    for (const DomainPoint& pt : pts) {
        CAPTURE(pt.s);
        CAPTURE(pt.w);
        REQUIRE(pt.in_D());
        const CoeffValue a = c1_series(pt, small), b = c1_series(pt, large);
        CHECK(std::abs(a.value - b.value) <= a.trunc_error_estimate + b.trunc_error_estimate);
        CHECK(b.trunc_error_estimate <= a.trunc_error_estimate);
    }
}

TEST_CASE("remainder vanishes at integer points and not elsewhere") {
    const CoeffValue r = residual(to_domain_point({12, 5, 2}));
    CHECK(std::abs(r.value) <= std::max(1e-6, 2.0 * r.trunc_error_estimate));
    const CoeffValue r2 = residual({12, {4.5, 0.0}, {2.0, 0.0}});
    CHECK(std::abs(r2.value) > 100.0 * r2.trunc_error_estimate);
    CHECK(residual_bound_shape({12, {4.5, 0.0}, {2.0, 0.0}}) > 0.0);
}

TEST_CASE("remainder obeys the bound shape with a fitted constant") {
    auto ratio = [](const DomainPoint& pt) {
        REQUIRE(pt.in_F());
        REQUIRE(pt.in_D());
        return std::abs(residual(pt).value) / residual_bound_shape(pt);
    };
    const DomainPoint calibration[] = {{12, {4.5, 0.0}, {2.2, 0.0}}, {12, {5.5, 0.0}, {3.1, 0.0}},
                                       {12, {6.2, 0.0}, {2.7, 0.0}}, {12, {7.3, 0.0}, {1.8, 0.0}},
                                       {12, {5.0, 0.0}, {3.6, 0.0}}};
    double fitted = 0.0;
    for (const DomainPoint& pt : calibration)
        fitted = std::max(fitted, ratio(pt));
    MESSAGE("fitted constant " << fitted);
    REQUIRE(std::isfinite(fitted));
    REQUIRE(fitted > 0.0);
    const DomainPoint holdout[] = {{12, {3.5, 0.0}, {1.7, 0.0}},  {12, {4.2, 0.0}, {2.5, 0.0}},
                                   {12, {4.8, 0.0}, {3.3, 0.0}},  {12, {5.7, 0.0}, {4.2, 0.0}},
                                   {12, {6.5, 0.0}, {3.9, 0.0}},  {12, {7.5, 0.0}, {2.4, 0.0}},
                                   {12, {8.1, 0.0}, {1.9, 0.0}},  {12, {5.3, 0.0}, {2.05, 0.0}},
                                   {12, {6.0, 0.0}, {4.5, 0.0}},  {12, {5.5, 0.5}, {3.3, -0.2}}};
    for (const DomainPoint& pt : holdout) {
        CAPTURE(pt.s);
        CAPTURE(pt.w);
        CHECK(ratio(pt) <= 10.0 * fitted);
    }
}

TEST_CASE("functional equation in w") {
    CHECK(functional_eq_check({12, 5, 2}) < 1e-8);
    CHECK(functional_eq_check({12, 3, 8}) < 1e-8);
    CHECK(functional_eq_check({18, 4, 9}) < 1e-8);
    CHECK_THROWS_AS(functional_eq_check({12, 5, 3}), DomainError);
    CHECK_THROWS_AS(functional_eq_check({12, 5, 1}), DomainError);
}

TEST_CASE("modular inverse and phase normalization") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> cd(1, 500), ad(-2000, 2000), md(1, 60), nd(1, 10000);
    int tested = 0;
    while (tested < 100) {
        const long c = cd(rng), a = ad(rng);
        if (std::gcd(a, c) != 1)
            continue;
        ++tested;
        const long ap = inverse_mod(a, c);
        CHECK(ap > 0);
        CHECK(ap <= c);
        CHECK((((a % c) * ap % c) + c) % c == 1 % c);
        long m = md(rng), r = 1;
        for (long d = 1; d <= m; ++d)
            if (m % d == 0 && nd(rng) % 2 == 0)
                r = d;
        const long n = nd(rng);
        const long j = phase_numerator(m, r, n, ap, c);
        CHECK(j >= 0);
        CHECK(j < c);
        CHECK(j == phase_numerator(m, r, n, ap + c, c));
        CHECK(j == phase_numerator(m, r, n, ap + 7 * c, c));
    }
    CHECK(inverse_mod(0, 1) == 1);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS_AS(phase_numerator(6, 4, 1, 1, 5), ArgumentError);
}

TEST_CASE("Hurwitz-integral pair sums agree with the literal n-sum") {
    const DomainPoint pt{12, {4.5, 0.0}, {2.0, 0.0}};
    for (auto [a, c, mu] : {std::tuple{0L, 1L, 1L}, {1L, 3L, 1L}, {-2L, 5L, 1L}, {3L, 4L, 2L}}) {
        CAPTURE(a);
        CAPTURE(c);
        const PairValue h = pair_sum_hurwitz(pt, a, c, mu);
        const PairValue d = pair_sum_direct(pt, a, c, mu, 4000);
        CHECK(std::abs(h.value - d.value) <= 10.0 * (h.abs_err + d.abs_err) + 1e-9 * std::abs(h.value));
    }
}

TEST_CASE("Fourier extraction") {
    auto F = [](cplx z) { return 2.0 * std::exp(cplx(0.0, 2.0 * M_PI * 3.0) * z) + std::exp(cplx(0.0, 2.0 * M_PI) * z); };
    CHECK(std::abs(fourier_extract(F, 3, 64, 0.8) - 2.0) < 1e-10);
    CHECK(std::abs(fourier_extract(F, 1, 64, 0.8) - 1.0) < 1e-10);
    CHECK(std::abs(fourier_extract(F, 2, 64, 0.8)) < 1e-8);
}

TEST_CASE("argument and domain errors") {
    const DomainPoint ok{12, {4.5, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(coefficient_c_m({12, {4.5, 0.0}, {4.0, 0.0}}, 1), DomainError);
    CHECK_THROWS_AS(coefficient_c_m(ok, 0), ArgumentError);
    CHECK_THROWS_AS(coefficient_c_m({11, {4.5, 0.0}, {2.0, 0.0}}, 1), ArgumentError);
    Truncation bad;
    bad.c_max = 0;
    CHECK_THROWS_AS(coefficient_c_m(ok, 1, bad), ArgumentError);
    CHECK_THROWS_AS(continuation_main({12, {4.5, 0.0}, {1.2, 0.0}}), DomainError);
    CHECK_THROWS_AS(residual({12, {4.5, 0.0}, {3.8, 0.0}}), DomainError);
    Truncation y;
    y.y = 3.0;
    CHECK_THROWS_AS(brute_force_fourier(ok, 1, y), ArgumentError);
    Truncation xs;
    xs.x_samples = 4;
    CHECK_THROWS_AS(brute_force_fourier(ok, 2, xs), ArgumentError);
    CHECK_THROWS_AS(brute_force_fourier({12, {4.5, 0.0}, {4.0, 0.0}}, 1), DomainError);
    CHECK_THROWS_AS(fourier_extract([](cplx) { return cplx(1.0); }, 1, 0, 0.8), ArgumentError);
}

TEST_CASE("matrix-sum oracle at a small box") {
    Truncation tr;
    tr.entry_max = 14;
    tr.det_max = 20;
    tr.x_samples = 64;
    const DomainPoint pt{12, {4.5, 0.0}, {2.0, 0.0}};
    const CoeffValue bf = brute_force_fourier(pt, 1, tr);
    const CoeffValue c = c1_series(pt);
    CHECK(rel(bf.value, c.value) < 0.05);
    CHECK(bf.trunc_error_estimate > 0.0);
}
