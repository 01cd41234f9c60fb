#include "pair_sums.hpp"

#include "tdes/errors.hpp"
#include "tdes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace tdes {

__extension__ using i128 = __int128;

using detail::cplx;

long inverse_mod(long a, long c) {
    if (c <= 0)
        throw ArgumentError("inverse_mod: modulus must be positive");
    long r0 = ((a % c) + c) % c, r1 = c;
    long x0 = 1, x1 = 0;
    // Extended Euclid on (a mod c, c).
    while (r1 != 0) {
        long q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(x0, x1);
        x1 -= q * x0;
    }
    if (r0 != 1)
        throw ArgumentError("inverse_mod: arguments not coprime");
    long ap = ((x0 % c) + c) % c;
    return ap == 0 ? c : ap;
}

long phase_numerator(long m, long r, long n, long ap, long c) {
    if (r <= 0 || m % r != 0)
        throw ArgumentError("phase_numerator: r must divide m");
    i128 v = static_cast<i128>(m / r) * n % c * ap % c;
    return static_cast<long>((v + c) % c);
}

namespace detail {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kRho = 0.25;  // class tails start once tau <= kRho * distance to the nearest integer
constexpr int kTaylorTerms = 80;
constexpr double kQuadTol = 1e-13;

cplx rpow(double x, cplx e) { return std::exp(e * std::log(x)); }

cplx zeta_w(const PairKernel& K, double a) { return hurwitz_zeta(K.w, a); }

// Finite part of int_{-eta}^{eta} g(u*+v) [C+ on v<0, C- on v>0] |v|^-w dv, without tau^-w.
cplx singular_window(const PairKernel& K, double ustar, double eta) {
    const double om = 1.0 - ustar;
    // A, B: binomial series of the two factors of g, scaled by eta^i.
    std::vector<cplx> A(kTaylorTerms), B(kTaylorTerms);
    cplx ba = 1.0, bb = 1.0;
    const cplx alpha = K.s - 1.0, beta = static_cast<double>(K.k) - K.s - 1.0;
    for (int i = 0; i < kTaylorTerms; ++i) {
        A[i] = ba * std::pow(eta / ustar, i);
        B[i] = bb * std::pow(-eta / om, i);
        ba *= (alpha - static_cast<double>(i)) / static_cast<double>(i + 1);
        bb *= (beta - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    const cplx g0 = K.g(ustar, om);
    const cplx eta_pow = rpow(eta, 1.0 - K.w);
    cplx sum = 0.0;
    for (int j = 0; j < kTaylorTerms; ++j) {
        cplx gj = 0.0;
        for (int i = 0; i <= j; ++i)
            gj += A[i] * B[j - i];
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        if (K.w_integer && j == K.w0 - 1) {
            // d(w)/(j+1-w) at its removable point: minus the w-derivative of d.
            const double s2 = 0.5 * M_PI;
            cplx dprime = -s2 * sgn * std::sin(s2 * (K.s + K.w)) + s2 * std::sin(s2 * (K.s - K.w));
            sum += g0 * gj * eta_pow * (-dprime);
            continue;
        }
        const cplx d = K.cplus * sgn + K.cminus;
        sum += g0 * gj * eta_pow / (static_cast<double>(j + 1) - K.w) * d;
    }
    return sum;
}

PairValue moment_tail(const PairKernel& K, long c, long p, long mu, double alpha) {
    const double cd = static_cast<double>(c);
    const double step = static_cast<double>(mu) / (cd * cd);
    const double xt = static_cast<double>(p) / cd;
    const double kd = K.k;
    cplx beta = cgamma(K.s) * cgamma(kd - K.s) * rgamma(kd);
    cplx f = 1.0;
    cplx sum = 0.0;
    double last = 0.0;
    int small = 0;
    for (int j = 0; j < 200; ++j) {
        const cplx wj = K.w + static_cast<double>(j);
        cplx bracket;
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        if (p == 0)
            bracket = (K.cplus + sgn * K.cminus) * riemann_zeta(wj);
        else
            bracket = K.cplus * hurwitz_zeta(wj, xt) + sgn * K.cminus * hurwitz_zeta(wj, 1.0 - xt);
        const cplx term = f * beta * hurwitz_zeta_any(K.s + static_cast<double>(j), alpha) * bracket;
        sum += term;
        last = std::abs(term);
        if (j >= 3 && last < 1e-17 * std::abs(sum)) {
            if (++small >= 2)
                break;
        } else {
            small = 0;
        }
        f *= step * (K.w + static_cast<double>(j)) / static_cast<double>(j + 1);
        beta *= (K.s + static_cast<double>(j)) / (kd + static_cast<double>(j));
    }
    if (p == 0) {
        // zeta(w, tau u) = (tau u)^-w + zeta(w, 1 + tau u)
        const cplx bsw = cgamma(K.s - K.w) * cgamma(kd - K.s) * rgamma(kd - K.w);
        sum += K.cminus * rpow(static_cast<double>(mu) / cd, -K.w) * bsw * rpow(cd, K.w) *
               hurwitz_zeta_any(K.s - K.w, alpha);
    }
    const cplx scale = rpow(cd, -K.s);
    return {scale * sum, std::abs(scale) * (2.0 * last + 1e-16 * std::abs(sum))};
}

// sup over q in [1, 2] of |zeta(w, q)|, from Euler-Maclaurin with an explicit remainder.
double zeta_sup_bound(cplx w) {
    const double om = w.real();
    auto qmax = [](double e) { return e >= 0 ? std::pow(2.0, e) : 1.0; };
    const int p = std::max(1, static_cast<int>(std::ceil((2.0 - om) / 2.0)));
    double b = qmax(1.0 - om) / std::abs(w - 1.0) + 0.5 * qmax(-om);
    cplx poch = w;  // (w)_{2j-1}
    for (int j = 1; j <= p; ++j) {
        const double c2j = std::fabs(to_double(bernoulli(2 * j) / factorial(2 * j)));
        b += c2j * std::abs(poch) * qmax(-om - 2 * j + 1);
        poch *= (w + static_cast<double>(2 * j - 1)) * (w + static_cast<double>(2 * j));
    }
    // poch is now (w)_{2p+1}; the remainder uses (w)_{2p}.
    const cplx p2 = poch / (w + static_cast<double>(2 * p));
    b += 4.0 * std::abs(p2) / std::pow(kTwoPi, 2 * p) * qmax(1.0 - om - 2 * p) / (om + 2 * p - 1);
    return b;
}

} // namespace

PairKernel::PairKernel(const DomainPoint& pt) : k(pt.k), s(pt.s), w(pt.w) {
    cplus = cospi(0.5 * (s + w));
    cminus = cospi(0.5 * (s - w));
    const double wr = std::nearbyint(w.real());
    if (w.imag() == 0.0 && std::fabs(w.real() - wr) < 1e-12) {
        w0 = static_cast<long>(wr);
        if (w0 <= 1)
            throw DomainError("series for c(m): integer w <= 1 is not supported");
        w_integer = true;
    }
    gw = 2.0 * cgamma(w) * rpow(kTwoPi, -w);
}

cplx PairKernel::g(double u, double one_minus_u) const {
    return std::exp((s - 1.0) * std::log(u) + (static_cast<double>(k) - s - 1.0) * std::log(one_minus_u));
}

PairValue hurwitz_integral(const PairKernel& K, long a, long c, long mu) {
    const long ap = inverse_mod(a, c);
    const long A2 = 2 * a + c;
    const long two_mu = 2 * mu;
    if (A2 <= 0)
        throw ArgumentError("hurwitz_integral: requires a + c/2 > 0");
    const double tau = 2.0 * static_cast<double>(mu) / (static_cast<double>(c) * A2);
    const double den = static_cast<double>(two_mu);
    const long p0 = static_cast<long>(static_cast<i128>(mu) * ap % c);

    // Breakpoints u = num / (2 mu): 0, interior integer crossings of y, 1.
    std::vector<long> nums{0};
    for (long P = (p0 == 0 ? c : p0); static_cast<i128>(P) * A2 < two_mu; P += c)
        nums.push_back(P * A2);
    nums.push_back(two_mu);
    const std::size_t L = nums.size() - 1;

    std::vector<double> eta(nums.size(), 0.0);
    for (std::size_t i = 1; i < L; ++i)
        eta[i] = 0.5 * std::min(nums[i] - nums[i - 1], nums[i + 1] - nums[i]) / den;

    PairValue out{{0.0, 0.0}, 0.0};
    for (std::size_t i = 0; i < L; ++i) {
        const long lo_num = nums[i], hi_num = nums[i + 1];
        // Smallest Q = mu a' (mod c) with Q A2 >= hi_num fixes {y} = tau (Q A2/(2mu) - u).
        long Q = (hi_num + A2 - 1) / A2;
        Q += ((p0 - Q) % c + c) % c;
        const long U = Q * A2, V = (Q - c) * A2;
        const double trimL = eta[i], trimR = (i + 1 < L) ? eta[i + 1] : 0.0;
        const double lo = lo_num / den + trimL, hi = hi_num / den - trimR;
        const double gapR = (U - hi_num) / den + trimR;
        const double gapL = (lo_num - V) / den + trimL;
        const double one_minus_hi = (two_mu - hi_num) / den + trimR;
        auto f = [&](double, double dlo, double dhi) -> cplx {
            const double fy = tau * (gapR + dhi), omfy = tau * (gapL + dlo);
            return K.g(lo + dlo, one_minus_hi + dhi) *
                   (K.cplus * zeta_w(K, std::min(fy, 1.0)) + K.cminus * zeta_w(K, std::min(omfy, 1.0)));
        };
        QuadResult q = tanh_sinh(f, lo, hi, kQuadTol);
        out.value += q.value;
        out.abs_err += q.abs_err;
    }

    // Windows around interior crossings.
    for (std::size_t i = 1; i < L; ++i) {
        const double us = nums[i] / den, e = eta[i];
        const double om = (two_mu - nums[i]) / den;
        auto left = [&](double, double dlo, double dhi) -> cplx {
            const double v = dhi;
            return K.g(us - e + dlo, om + v) *
                   (K.cplus * zeta_w(K, 1.0 + tau * v) + K.cminus * zeta_w(K, 1.0 - tau * v));
        };
        auto right = [&](double, double dlo, double dhi) -> cplx {
            const double v = dlo;
            return K.g(us + v, om - e + dhi) *
                   (K.cplus * zeta_w(K, 1.0 - tau * v) + K.cminus * zeta_w(K, 1.0 + tau * v));
        };
        QuadResult ql = tanh_sinh(left, us - e, us, kQuadTol);
        QuadResult qr = tanh_sinh(right, us, us + e, kQuadTol);
        out.value += ql.value + qr.value + rpow(tau, -K.w) * singular_window(K, us, e);
        out.abs_err += ql.abs_err + qr.abs_err;
    }
    return out;
}

PairValue c_layer(const PairKernel& K, long c, long m) {
    PairValue out{{0.0, 0.0}, 0.0};
    const double cd = static_cast<double>(c);
    for (long r = 1; r <= m; ++r) {
        if (m % r != 0)
            continue;
        const long mu = m / r;
        const cplx wr = rpow(static_cast<double>(r), K.w - static_cast<double>(K.k));
        for (long a0 = -((c - 1) / 2); a0 <= c / 2; ++a0) {
            if (std::gcd(a0, c) != 1)
                continue;
            if (2 * a0 + c <= 0)
                continue;
            const long ap = inverse_mod(a0, c);
            const long p = static_cast<long>(static_cast<i128>(mu) * ap % c);
            const double dmin = (p == 0) ? 1.0 : std::min(p, c - p) / cd;
            const double A_min = static_cast<double>(mu) / (cd * kRho * dmin);
            const double A0 = a0 + 0.5 * cd;
            long q0 = 0;
            if (A0 < A_min)
                q0 = static_cast<long>(std::ceil((A_min - A0) / cd));
            for (long q = 0; q < q0; ++q) {
                const long a = a0 + c * q;
                PairValue J = hurwitz_integral(K, a, c, mu);
                const cplx As = rpow(a + 0.5 * cd, -K.s);
                out.value += wr * As * J.value;
                out.abs_err += std::abs(wr * As) * J.abs_err;
            }
            PairValue T = moment_tail(K, c, p, mu, static_cast<double>(q0) + A0 / cd);
            out.value += wr * T.value;
            out.abs_err += std::abs(wr) * T.abs_err;
        }
    }
    return out;
}

double c_tail_bound(const PairKernel& K, long C, long m) {
    const double sig = K.s.real(), om = K.w.real(), kd = K.k;
    const double omp = std::max(om, 0.0);
    const double Cd = static_cast<double>(std::max<long>(C, 1));
    auto beta = [](double x, double y) { return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y)); };
    const double gw = std::abs(K.gw), cp = std::abs(K.cplus), cm = std::abs(K.cminus);
    const double Zb = zeta_sup_bound(K.w);
    const double Bsk = beta(sig, kd - sig);
    const double S0 = std::pow(Cd, sig - kd + 1) / (kd - sig - 1);
    const double S1 = std::pow(Cd, sig + omp - kd + 1) / (kd - sig - omp - 1);
    const double zs = riemann_zeta(sig).real();
    const double nonspecial = gw * (cp + cm) * Bsk * zs * (std::pow(3.0, omp) * S1 + Zb * S0);
    const double special =
        std::pow(2.0, sig) * gw *
        (cp * std::pow(2.0, -omp) * beta(sig, kd - sig - omp) * S1 + (cp * Zb + cm * (std::pow(3.0, omp) + Zb)) * Bsk * S0);
    const double prefA = std::pow(kTwoPi, kd) /
                         (std::pow(2.0, sig) * std::abs(cgamma(K.s) * cgamma(kd - K.s)));
    double rsum = 0.0;
    for (long r = 1; r <= m; ++r)
        if (m % r == 0)
            rsum += std::pow(static_cast<double>(r), om - kd) * std::pow(static_cast<double>(m / r), omp);
    return prefA * std::pow(static_cast<double>(m), kd - 1) * rsum * (nonspecial + special);
}

} // namespace detail

PairValue pair_sum_hurwitz(const DomainPoint& pt, long a, long c, long mu) {
    detail::PairKernel K(pt);
    PairValue J = detail::hurwitz_integral(K, a, c, mu);
    return {K.gw * J.value, std::abs(K.gw) * J.abs_err};
}

PairValue pair_sum_direct(const DomainPoint& pt, long a, long c, long mu, long n_max) {
    const long ap = inverse_mod(a, c);
    const double A = a + 0.5 * c;
    if (!(A > 0))
        throw ArgumentError("pair_sum_direct: requires a + c/2 > 0");
    const double t = 2.0 * M_PI * static_cast<double>(mu) / (c * A);
    const cplx I(0.0, 1.0);
    const cplx es = std::exp(0.5 * M_PI * I * pt.s);
    const double kd = pt.k;
    cplx sum = 0.0, term = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const double ph = 2.0 * M_PI * phase_numerator(mu, 1, n, ap, c) / c;
        const cplx e = std::exp(I * ph);
        const cplx fm = kummer_1f1(pt.s, kd, -I * t * static_cast<double>(n)).f;
        const cplx fp = kummer_1f1(pt.s, kd, I * t * static_cast<double>(n)).f;
        term = detail::rpow(static_cast<double>(n), pt.w - 1.0) * (es * e * fm + std::conj(e) * fp / es);
        sum += term;
    }
    const double decay = std::max(pt.s.real() - pt.w.real(), 1e-3);
    return {sum, std::abs(term) * static_cast<double>(n_max) / decay};
}

} // namespace tdes
