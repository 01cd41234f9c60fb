#include "suites.hpp"

#include "tdes/errors.hpp"
#include "tdes/exact.hpp"
#include "tdes/spectral.hpp"
#include "tdes/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tdes::cli {

namespace {

using cplx = ComplexValue;

Check make(std::string name, double value, double tol, std::string detail = {}) {
    Check c{std::move(name), value, tol, std::isfinite(value) && value <= tol, std::move(detail)};
    return c;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::string point_name(int k, int s, int w) {
    std::ostringstream os;
    os << "(" << k << "," << s << "," << w << ")";
    return os.str();
}

std::vector<cplx> zeta_grid() {
    std::vector<cplx> g;
    for (double sig : {-3.5, -1.5, 0.5, 2.5, 4.5})
        for (double t : {-7.0, -0.5, 2.0, 10.0})
            g.emplace_back(sig, t);
    return g;
}

} // namespace

double rel_dev(ComplexValue a, ComplexValue b, double scale) {
    return std::abs(a - b) / std::max(std::abs(b), scale);
}

std::vector<Check> suite_specfun() {
    std::vector<Check> out;
    double d1 = 0.0, d2 = 0.0;
    for (cplx s : zeta_grid()) {
        const cplx zh = hurwitz_zeta(s, 0.5);
        d1 = std::max(d1, rel(zh, (std::pow(2.0, s) - 1.0) * riemann_zeta(s)));
        d2 = std::max(d2, rel(hurwitz_zeta(s, 1.5) + std::pow(2.0, s), zh));
    }
    out.push_back(make("hurwitz_half_vs_riemann", d1, 1e-12, "20-point complex grid"));
    out.push_back(make("hurwitz_shift_identity", d2, 1e-12, "20-point complex grid"));

    double d3 = 0.0;
    for (int n = 0; n <= 8; ++n)
        for (auto [p, q] : {std::pair{1, 4}, {1, 3}, {1, 2}, {1, 1}}) {
            const BigRational a(p, q);
            const double expect = -to_double(bernoulli_poly(n + 1, a)) / (n + 1);
            d3 = std::max(d3, rel(hurwitz_zeta(static_cast<double>(-n), to_double(a)), expect));
        }
    out.push_back(make("hurwitz_negative_integers_vs_bernoulli", d3, 1e-12));

    double d4 = 0.0;
    for (cplx tau : {cplx(0.3, 1.0), cplx(-0.2, 0.7)}) {
        auto [lhs, rhs] = lipschitz_check(tau, 4.5, 2000);
        d4 = std::max(d4, rel(lhs, rhs));
    }
    out.push_back(make("lipschitz_two_sided", d4, 1e-8));

    double d5 = 0.0;
    const double pi = M_PI;
    for (auto [a, z] : {std::pair{cplx(3.0), cplx(0.0, -1.4 * pi)}, {cplx(4.5), cplx(0.0, -8.0)},
                        {cplx(2.5, 1.0), cplx(0.0, 5.0)}, {cplx(5.0), cplx(0.0, 30.0)}}) {
        const cplx series = kummer_1f1(a, 12.0, z).f;
        const cplx integral = kummer_1f1_integral(a, 12.0, z);
        d5 = std::max(d5, std::abs(series - integral) / std::abs(integral));
    }
    out.push_back(make("kummer_series_vs_integral", d5, 1e-10));

    double d6 = 0.0;
    for (double sig : {1.5, 2.5, 4.0, 6.0})
        for (double x : {0.25, 1.0 / 3.0, 2.0 / 3.0}) {
            const cplx s(sig, 0.7);
            d6 = std::max(d6, rel(periodic_zeta_direct(s, x).value, periodic_zeta_hurwitz(s, x)));
        }
    out.push_back(make("periodic_zeta_dual_paths", d6, 1e-10));

    out.push_back(make("gamma_reference", std::abs(cgamma({2.5, 1.0}) - cplx(0.7747621045510833, 0.7076312043795927)),
                       1e-13));
    double d7 = 0.0;
    for (cplx z : {cplx(0.3, 0.4), cplx(-2.7, 1.1), cplx(3.2, -5.0)})
        d7 = std::max(d7, rel(cgamma(z) * cgamma(1.0 - z), pi / sinpi(z)));
    out.push_back(make("gamma_reflection", d7, 1e-12));
    out.push_back(make("h_at_one", std::abs(h_function(1.0) + pi / 2.0), 1e-12));
    out.push_back(make("riemann_zeta_two", std::abs(riemann_zeta(2.0) - pi * pi / 6.0), 1e-14));
    out.push_back(make("riemann_zeta_minus_eleven", rel(riemann_zeta(-11.0), 691.0 / 32760.0), 1e-12));
    return out;
}

Check check_rationality_sweep() {
    long failures = 0, points = 0;
    std::string first;
    for (int k = 6; k <= 20; k += 2)
        for (int s = 2; s <= k - 2; ++s)
            for (int w = 2; w <= k - 2; ++w) {
                if ((s + w) % 2 == 0)
                    continue;
                ++points;
                try {
                    const BigRational q = inner_product_rational({k, s, w});
                    if (gcd(q.get_num(), q.get_den()) != 1 || sgn(q.get_den()) <= 0)
                        throw ArgumentError("non-canonical fraction");
                } catch (const std::exception& e) {
                    if (failures++ == 0)
                        first = point_name(k, s, w) + ": " + e.what();
                }
            }
    return make("rationality_sweep k=6..20", static_cast<double>(failures), 0.0,
                std::to_string(points) + " points" + (first.empty() ? "" : ", first failure " + first));
}

std::vector<Check> checks_closed_form() {
    std::vector<Check> out;

    // Closed form of 2F1 at 1/2 against the terminating series, exactly.
    long mismatches = 0, cases = 0;
    const BigRational half(1, 2);
    for (long a = -8; a <= 0; ++a)
        for (long b = 1; b <= 8; ++b)
            for (long n = 1 - a - b; n <= 17 - a - b; n += 2) {
                const long c = (a + b + n + 1) / 2;
                ++cases;
                try {
                    if (!(hyp2f1_half_closed_exact(a, b, n) ==
                          HalfPiExact(hyp2f1_terminating_exact(a, b, c, half))))
                        ++mismatches;
                } catch (const std::exception&) {
                    ++mismatches;
                }
            }
    out.push_back(make("hyp2f1_half_closed_form_exact", static_cast<double>(mismatches), 0.0,
                       std::to_string(cases) + " parameter triples"));

    double d = 0.0;
    for (auto [k, s, w] : {std::tuple{12, 5, 2}, {12, 3, 4}}) {
        const long c1 = k - s - w + 1, c2 = 1 + s - w;
        d = std::max(d, rel(gauss_2f1_regularized(1.0 - s, k - s, static_cast<double>(c1), 0.5),
                            to_double(hyp2f1_regularized_terminating(1 - s, k - s, c1, half))));
        d = std::max(d, rel(gauss_2f1_regularized(s + 1.0 - k, s, static_cast<double>(c2), 0.5),
                            to_double(hyp2f1_regularized_terminating(s + 1 - k, s, c2, half))));
    }
    out.push_back(make("hyp2f1_float_vs_exact", d, 1e-10));
    return out;
}

std::vector<Check> checks_series_vs_exact(const Truncation& tr) {
    std::vector<Check> out;

    for (auto [k, s, w] : {std::tuple{12, 5, 2}, {12, 6, 3}, {14, 7, 4}}) {
        const ParityPoint p{k, s, w};
        const DomainPoint pt = to_domain_point(p);
        const ContinuationTerms t = continuation_terms(pt);
        const double exact = to_double(c1_exact(p)) * 0.5 * std::pow(2.0 * M_PI, k + 1.0 - w);
        const CoeffValue c = c1_series(pt, tr);
        out.push_back(make("series_vs_exact " + point_name(k, s, w), rel_dev(c.value, exact, t.scale), 1e-6));
    }
    return out;
}

std::vector<Check> checks_residual(const Truncation& tr) {
    std::vector<Check> out;

    for (int k : {12, 14, 16}) {
        double worst = 0.0;
        int points = 0;
        for (int s = 3; s <= k - 3; ++s)
            for (int w = 2; w <= std::min(s - 2, k - s - 2); ++w) {
                if ((s + w) % 2 == 0)
                    continue;
                const DomainPoint pt = to_domain_point({k, s, w});
                const CoeffValue r = residual(pt, tr);
                worst = std::max(worst, std::abs(r.value) / std::max(1e-6, 2.0 * r.trunc_error_estimate));
                ++points;
            }
        out.push_back(make("residual_vanishes k=" + std::to_string(k), worst, 1.0,
                           std::to_string(points) + " points, |R| / max(1e-6, 2 err)"));
    }
    return out;
}

std::vector<Check> checks_functional_equation() {
    std::vector<Check> out;

    double fe = 0.0;
    for (int s = 2; s <= 10; ++s)
        for (int w = 2; w <= 10; ++w)
            if ((s + w) % 2 == 1)
                fe = std::max(fe, functional_eq_check({12, s, w}));
    out.push_back(make("functional_equation k=12", fe, 1e-8));

    double forced = 0.0;
    for (int s = 2; s <= 16; s += 2) {
        const DomainPoint pt = to_domain_point({18, s, 9});
        const ContinuationTerms t = continuation_terms(pt);
        forced = std::max(forced, std::abs(t.sum) / t.scale);
        forced = std::max(forced, functional_eq_check({18, s, 9}));
    }
    out.push_back(make("functional_equation_forced_zero k=18 w=9", forced, 1e-8));
    return out;
}

Check check_product_form_sign() {

    // The product form of the 2F1 blocks carries the opposite sign on both blocks.
    long flips = 0, total = 0;
    for (int k = 6; k <= 20; k += 2)
        for (int s = 2; s <= k - 3; ++s)
            for (int w = 2; w <= k - 3; ++w) {
                if ((s + w) % 2 == 0)
                    continue;
                const ParityPoint p{k, s, w};
                const C1Parts a = c1_exact_parts(p), b = c1_exact_parts_product_form(p);
                ++total;
                if (a.block_minus == -b.block_minus && a.block_plus == -b.block_plus)
                    ++flips;
            }
    const ParityPoint ref{12, 5, 2};
    return make("product_form_block_sign", static_cast<double>(total - flips), 0.0,
                "product-form q(12,5,2) = " + to_string(c1_exact_product_form(ref)) + ", q = " +
                    to_string(c1_exact(ref)));
}

std::vector<Check> suite_identity(const Truncation& tr) {
    std::vector<Check> out;
    auto add = [&](std::vector<Check> more) { out.insert(out.end(), more.begin(), more.end()); };
    out.push_back(check_rationality_sweep());
    add(checks_closed_form());
    add(checks_series_vs_exact(tr));
    add(checks_residual(tr));
    add(checks_functional_equation());
    out.push_back(check_product_form_sign());
    return out;
}

std::vector<Check> suite_oracle(const Truncation& tr) {
    std::vector<Check> out;
    struct Config {
        int k;
        double s, w;
        std::vector<long> ms;
    };
    for (const Config& cf : {Config{12, 4.5, 2.0, {1, 2}}, Config{14, 5.5, 2.5, {1}}}) {
        const DomainPoint pt{cf.k, {cf.s, 0.0}, {cf.w, 0.0}};
        const std::vector<CoeffValue> bf = brute_force_fourier(pt, cf.ms, tr);
        const double scale = continuation_terms(pt).scale;
        for (std::size_t i = 0; i < cf.ms.size(); ++i) {
            const long m = cf.ms[i];
            const CoeffValue c = coefficient_c_m(pt, m, tr);
            std::ostringstream name;
            name << "series_vs_matrix_sum k=" << cf.k << " s=" << cf.s << " w=" << cf.w << " m=" << m;
            out.push_back(make(name.str(), rel_dev(bf[i].value, c.value, m == 1 ? scale : 0.0), 1e-2));
        }
    }
    return out;
}

std::vector<Check> checks_tau() {
    std::vector<Check> out;
    const QSeries delta = delta_q_expansion();
    long bad = 0;
    for (long m = 1; m <= 50; ++m)
        for (long n = 1; m * n <= 50; ++n)
            if (std::gcd(m, n) == 1 && delta.a(m * n) != delta.a(m) * delta.a(n))
                ++bad;
    out.push_back(make("tau_multiplicative", static_cast<double>(bad), 0.0));
    out.push_back(make("tau_hecke_p2",
                       std::fabs(static_cast<double>(delta.a(4) - (delta.a(2) * delta.a(2) - 2048))), 0.0));
    return out;
}

std::vector<Check> checks_l_values() {
    std::vector<Check> out;
    const QSeries delta = delta_q_expansion();

    double fe = 0.0;
    for (double s : {3.0, 5.0, 7.0, 9.0})
        fe = std::max(fe, std::abs(completed_L(delta, s).value - completed_L(delta, 12.0 - s).value));
    out.push_back(make("completed_L_functional_equation", fe, 1e-10));

    double refl = 0.0;
    for (double s : {4.0, 5.0, 6.0, 8.0}) {
        const cplx lhs = completed_twisted_L(delta, 12.0 - s).value;
        const cplx rhs = std::pow(2.0, 2.0 * s - 12.0) * completed_twisted_L(delta, s).value;
        refl = std::max(refl, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
    }
    out.push_back(make("twisted_L_reflection", refl, 1e-8));
    return out;
}

std::vector<Check> checks_petersson(const Truncation& tr) {
    std::vector<Check> out;

    const std::vector<ComplexValue> r = petersson_ratio_probe({{12, 5, 2}, {12, 6, 3}, {12, 7, 2}}, tr);
    double spread = 0.0, imag = 0.0, neg = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j)
            spread = std::max(spread, std::abs(r[i] - r[j]) / std::abs(r[j]));
        imag = std::max(imag, std::fabs(r[i].imag()) / std::abs(r[i]));
        if (!(r[i].real() > 0.0))
            neg += 1.0;
    }
    std::ostringstream os;
    os.precision(16);
    os << "ratio(5,2) = " << r[0].real();
    out.push_back(make("petersson_ratio_constant", spread, 1e-4, os.str()));
    out.push_back(make("petersson_ratio_real", imag, 1e-6));
    out.push_back(make("petersson_ratio_positive", neg, 0.0));
    return out;
}

std::vector<Check> suite_spectral(const Truncation& tr) {
    std::vector<Check> out = checks_tau();
    for (auto& v : {checks_l_values(), checks_petersson(tr)})
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace tdes::cli
