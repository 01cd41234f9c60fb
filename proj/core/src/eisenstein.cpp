#include "tdes/eisenstein.hpp"

#include "pair_sums.hpp"
#include "tdes/errors.hpp"

#include <cmath>
#include <exception>
#include <vector>

namespace tdes {

using detail::cplx;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

cplx cpow(double x, cplx e) { return std::exp(e * std::log(x)); }

double sign_k(int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; }

bool near_integer(cplx z, double tol, long& n) {
    double r = std::nearbyint(z.real());
    n = static_cast<long>(r);
    return std::fabs(z.imag()) < tol && std::fabs(z.real() - r) < tol;
}

void check_k(int k) {
    if (k < 6 || k % 2 != 0)
        throw ArgumentError("weight k must be even and >= 6");
}

} // namespace

bool DomainPoint::in_D() const {
    const double rs = s.real(), rw = w.real();
    return rs > 2.0 && rs < k - 2.0 && rw < std::min(rs - 1.0, k - rs - 1.0);
}

bool DomainPoint::in_D1() const {
    const double rs = s.real();
    return rs > 2.0 && rs < k - 2.0 && w.real() < 0.0;
}

bool DomainPoint::in_F() const {
    const double rs = s.real(), rw = w.real();
    return rs > 1.5 && rs < k - 2.0 && rw > 1.5 && rw < k - 2.0;
}

DomainPoint to_domain_point(const ParityPoint& p) {
    return DomainPoint{p.k, cplx(p.s, 0.0), cplx(p.w, 0.0)};
}

ComplexValue prefactor(const DomainPoint& pt) {
    check_k(pt.k);
    const double kd = pt.k;
    cplx v = cgamma(pt.s) * cgamma(kd - pt.s) * cgamma(kd - pt.w) /
             (cpow(2.0, 2.0 - pt.s - pt.w) * cpow(M_PI, kd + 1.0 - pt.w) * cgamma(kd - 1.0));
    return checked(v, "prefactor");
}

CoeffValue coefficient_c_m(const DomainPoint& pt, long m, const Truncation& tr) {
    check_k(pt.k);
    if (!pt.in_D())
        throw DomainError("coefficient_c_m: point outside D");
    if (m < 1)
        throw ArgumentError("coefficient_c_m: m must be >= 1");
    if (tr.c_max < 1)
        throw ArgumentError("coefficient_c_m: c_max must be >= 1");
    const double kd = pt.k, sg = sign_k(pt.k);
    const cplx s = pt.s, w = pt.w;
    const double md = static_cast<double>(m);

    // Divisor-sum terms.
    cplx even_a = 0.0, even_b = 0.0, odd_a = 0.0, odd_b = 0.0;
    for (long a = 1; a <= m; ++a) {
        if (m % a != 0)
            continue;
        const double ad = static_cast<double>(a);
        if (m % (2 * a) == 0) {
            even_a += cpow(ad, w - s);
            even_b += cpow(ad, s + w - kd);
        } else {
            odd_a += cpow(ad, w - s);
            odd_b += cpow(ad, s + w - kd);
        }
    }
    cplx total = 0.0;
    if (even_a != 0.0 || even_b != 0.0) {
        total += cpow(M_PI, s) * rgamma(s) * cpow(md, s - 1.0) * riemann_zeta(kd - s - w + 1.0) * even_a;
        total += sg * cpow(M_PI, kd - s) * rgamma(kd - s) * cpow(md, kd - s - 1.0) *
                 riemann_zeta(s - w + 1.0) * even_b;
    }
    const cplx E = cpow(kTwoPi, kd - w);
    total += E * 2.0 * cpow(2.0, -s) * rgamma(s) * cpow(md, s - 1.0) * h_function(s + w - kd) * odd_a;
    total += sg * E * 2.0 * cpow(2.0, s - kd) * rgamma(kd - s) * cpow(md, kd - s - 1.0) *
             h_function(w - s) * odd_b;

    // Coprime-pair double sum, one layer per c, summed in fixed order.
    detail::PairKernel K(pt);
    std::vector<PairValue> layers(static_cast<std::size_t>(tr.c_max));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long c = 1; c <= tr.c_max; ++c) {
        try {
            PairValue v = detail::c_layer(K, c, m);
            const cplx cs = cpow(static_cast<double>(c), s - kd);
            layers[c - 1] = {cs * v.value, std::abs(cs) * v.abs_err};
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    cplx pairs = 0.0;
    double pair_err = 0.0;
    for (const auto& v : layers) {
        pairs += v.value;
        pair_err += v.abs_err;
    }
    const cplx pref = sg * std::pow(kTwoPi, kd) * cpow(2.0, -s) * rgamma(s) * rgamma(kd - s) *
                      std::pow(md, kd - 1.0) * K.gw;
    total += pref * pairs;

    CoeffValue out;
    out.value = checked(total, "coefficient_c_m");
    out.trunc_error_estimate = std::abs(pref) * pair_err + detail::c_tail_bound(K, tr.c_max, m) +
                               1e-13 * std::abs(total);
    return out;
}

CoeffValue c1_series(const DomainPoint& pt, const Truncation& tr) { return coefficient_c_m(pt, 1, tr); }

namespace {

ContinuationTerms direct_terms(const DomainPoint& pt) {
    const double kd = pt.k, sg = sign_k(pt.k);
    const cplx s = pt.s, w = pt.w;
    const cplx E = 2.0 * cpow(kTwoPi, kd - w);
    const cplx ps = cpow(2.0, -s), pks = cpow(2.0, s - kd);
    const cplx gw = cgamma(w);
    const cplx refl = M_PI / sinpi(w);  // Gamma(w) Gamma(1-w)
    ContinuationTerms t;
    t.terms[0] = E * ps * rgamma(s) * h_function(s + w - kd);
    t.terms[1] = sg * E * pks * rgamma(kd - s) * h_function(w - s);
    t.terms[2] = E * gw * pks * rgamma(kd - s) * rgamma(kd - w) * h_function(kd - s - w);
    t.terms[3] = sg * E * gw * ps * rgamma(s) * rgamma(kd - w) * h_function(s - w);
    t.terms[4] = sg * E * refl * cospi(0.5 * (s - w)) * pks * rgamma(s) *
                 gauss_2f1_regularized(1.0 - s, kd - s, kd - s - w + 1.0, 0.5);
    t.terms[5] = sg * E * refl * cospi(0.5 * (s + w)) * ps * rgamma(kd - s) *
                 gauss_2f1_regularized(s + 1.0 - kd, s, 1.0 + s - w, 0.5);
    for (auto& v : t.terms) {
        v = checked(v, "continuation_main");
        t.sum += v;
        t.scale += std::abs(v);
    }
    return t;
}

} // namespace

ContinuationTerms continuation_terms(const DomainPoint& pt) {
    check_k(pt.k);
    long si = 0, wi = 0;
    const bool s_int = near_integer(pt.s, 1e-12, si);
    const bool w_int = near_integer(pt.w, 1e-12, wi);
    if (s_int && w_int && ((si + wi) % 2 + 2) % 2 == 1) {
        ParityPoint p{pt.k, static_cast<int>(si), static_cast<int>(wi)};
        C1Parts parts = c1_exact_parts(p, true);
        const double scale = 0.5 * std::pow(kTwoPi, pt.k + 1.0 - static_cast<double>(wi));
        ContinuationTerms t;
        for (int i = 0; i < 4; ++i)
            t.terms[i] = scale * to_double(parts.rho_each[i]);
        t.terms[4] = scale * to_double(parts.block_minus);
        t.terms[5] = scale * to_double(parts.block_plus);
        for (auto& v : t.terms) {
            t.sum += v;
            t.scale += std::abs(v);
        }
        t.exact_path = true;
        return t;
    }
    if (!pt.in_F())
        throw DomainError("continuation_main: point outside F");
    long n = 0;
    if (near_integer(pt.w, 0.05, n)) {
        // Removable singularity in w: Cauchy mean over a circle of radius 1/4.
        constexpr int nodes = 32;
        ContinuationTerms t;
        for (int j = 0; j < nodes; ++j) {
            const double th = 2.0 * M_PI * (j + 0.5) / nodes;
            DomainPoint q = pt;
            q.w = pt.w + 0.25 * std::polar(1.0, th);
            ContinuationTerms d = direct_terms(q);
            for (int i = 0; i < 6; ++i)
                t.terms[i] += d.terms[i] / static_cast<double>(nodes);
            t.scale += d.scale / nodes;
        }
        for (const auto& v : t.terms)
            t.sum += v;
        t.circle_path = true;
        return t;
    }
    return direct_terms(pt);
}

ComplexValue continuation_main(const DomainPoint& pt) { return continuation_terms(pt).sum; }

CoeffValue residual(const DomainPoint& pt, const Truncation& tr) {
    if (!(pt.in_F() && pt.in_D()))
        throw DomainError("residual: point outside F and D");
    CoeffValue c = c1_series(pt, tr);
    c.value -= continuation_main(pt);
    return c;
}

double residual_bound_shape(const DomainPoint& pt) {
    check_k(pt.k);
    const double kd = pt.k;
    const double z = riemann_zeta(kd - 1.0 - std::max(pt.s.real(), pt.w.real())).real();
    return std::abs(cgamma(pt.w)) / std::abs(cgamma(pt.s) * cgamma(kd - pt.s)) *
           std::exp(M_PI * (std::fabs(pt.s.imag()) + std::fabs(pt.w.imag()))) * z;
}

double functional_eq_check(const ParityPoint& p) {
    if (!p.k_valid())
        throw ArgumentError("functional_eq_check: k must be even and >= 6");
    if (!p.opposite_parity())
        throw DomainError("functional_eq_check: s and w must have opposite parity");
    auto ok = [&](int v) { return v >= 2 && v <= p.k - 2; };
    if (!ok(p.s) || !ok(p.w) || !ok(p.k - p.w))
        throw DomainError("functional_eq_check: s, w, k-w must lie in [2, k-2]");
    DomainPoint a = to_domain_point(p);
    DomainPoint b = a;
    b.w = static_cast<double>(p.k - p.w);
    ContinuationTerms ta = continuation_terms(a), tb = continuation_terms(b);
    const cplx pa = prefactor(a), pb = prefactor(b);
    const cplx va = pa * ta.sum, vb = sign_k(p.k) * pb * tb.sum;
    const double mag = std::max(std::abs(va), std::abs(pa) * ta.scale);
    return std::abs(va - vb) / mag;
}

} // namespace tdes
