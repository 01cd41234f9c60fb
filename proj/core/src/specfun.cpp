#include "tdes/specfun.hpp"
#include "tdes/errors.hpp"
#include "tdes/exact.hpp"
#include "tdes/quadrature.hpp"

#include <quadmath.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace tdes {

namespace {

using cplx = ComplexValue;
constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kEmTerms = 12;

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// B_2j/(2j)! for j = 1..kEmTerms, in long double.
const std::array<long double, kEmTerms + 1>& em_coefficients() {
    static const std::array<long double, kEmTerms + 1> table = [] {
        std::array<long double, kEmTerms + 1> t{};
        for (int j = 1; j <= kEmTerms; ++j) {
            BigRational q = bernoulli(2 * j) / factorial(2 * j);
            long double num = std::strtold(q.get_num().get_str().c_str(), nullptr);
            long double den = std::strtold(q.get_den().get_str().c_str(), nullptr);
            t[j] = num / den;
        }
        return t;
    }();
    return table;
}

// x^-s for real x > 0.
template <typename R>
std::complex<R> rpow_neg(R x, const std::complex<R>& s) {
    R l = std::log(x);
    R mag = std::exp(-s.real() * l);
    R ph = -s.imag() * l;
    return {mag * std::cos(ph), mag * std::sin(ph)};
}

// Shift N for the Euler-Maclaurin remainder bound
// |R| <= 4 |(s)_2M| / (2pi)^2M * (N+a)^(1-sigma-2M) / (sigma+2M-1).
long em_shift(cplx s, double a, double target) {
    const double sigma = s.real();
    const double expo = sigma + 2 * kEmTerms - 1;
    if (expo <= 0)
        throw DomainError("hurwitz_zeta: Re s too negative for Euler-Maclaurin");
    double logc = std::log(4.0) - 2 * kEmTerms * std::log(kTwoPi) - std::log(expo);
    for (int i = 0; i < 2 * kEmTerms; ++i) {
        double m = std::abs(s + static_cast<double>(i));
        if (m == 0.0)
            return 0;  // (s)_2M = 0: the expansion is exact
        logc += std::log(m);
    }
    double need = std::exp((logc - std::log(target)) / expo);
    double n = std::ceil(need - a);
    return n < 0 ? 0 : static_cast<long>(n);
}

template <typename R>
std::complex<R> hurwitz_em(const std::complex<R>& s, R a, long N) {
    using C = std::complex<R>;
    C sum{0, 0};
    for (long n = 0; n < N; ++n)
        sum += rpow_neg<R>(static_cast<R>(n) + a, s);
    const R x = static_cast<R>(N) + a;
    const C xs = rpow_neg<R>(x, s);
    sum += xs * x / (s - R(1)) + xs / R(2);
    const auto& b = em_coefficients();
    C p = s * xs / x;  // (s)_1 x^(-s-1)
    const R x2 = x * x;
    for (int j = 1; j <= kEmTerms; ++j) {
        sum += static_cast<R>(b[j]) * p;
        p *= (s + R(2 * j - 1)) * (s + R(2 * j)) / x2;
    }
    return sum;
}

cplx expm1_c(cplx z) {
    if (std::abs(z) > 0.5)
        return std::exp(z) - 1.0;
    // e^z - 1 = 2 e^(z/2) sinh(z/2)
    return 2.0 * std::exp(0.5 * z) * std::sinh(0.5 * z);
}

// Lanczos coefficients, g = 7, n = 9.
constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

struct Q {
    __float128 re, im;
};
Q qmul(Q a, Q b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Q qdiv(Q a, Q b) {
    __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
__float128 qabs2(Q a) { return a.re * a.re + a.im * a.im; }

cplx kummer_taylor_double(cplx a, cplx b, cplx z, long max_terms) {
    cplx sum = 1.0, term = 1.0;
    int small = 0;
    for (long j = 0; j < max_terms; ++j) {
        term *= (a + static_cast<double>(j)) * z / ((b + static_cast<double>(j)) * static_cast<double>(j + 1));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && j > std::abs(z)) {
            if (++small >= 2)
                return sum;
        } else {
            small = 0;
        }
    }
    throw TruncationError("kummer_1f1: Taylor series did not converge");
}

// Same series in __float128 to absorb the cancellation for imaginary z.
cplx kummer_taylor_quad(cplx a, cplx b, cplx z, long max_terms) {
    const Q qa{a.real(), a.imag()}, qb{b.real(), b.imag()}, qz{z.real(), z.imag()};
    Q sum{1, 0}, term{1, 0};
    int small = 0;
    for (long j = 0; j < max_terms; ++j) {
        const __float128 dj = j;
        Q num = qmul(Q{qa.re + dj, qa.im}, qz);
        Q den{(qb.re + dj) * (dj + 1), qb.im * (dj + 1)};
        term = qmul(term, qdiv(num, den));
        sum.re += term.re;
        sum.im += term.im;
        if (qabs2(term) <= static_cast<__float128>(1e-60) * qabs2(sum) && static_cast<double>(j) > std::abs(z)) {
            if (++small >= 2)
                return {static_cast<double>(sum.re), static_cast<double>(sum.im)};
        } else {
            small = 0;
        }
    }
    throw TruncationError("kummer_1f1: Taylor series did not converge");
}

// One asymptotic series sum_s (p)_s (q)_s / s! * x^-s with optimal truncation.
cplx asymptotic_sum(cplx p, cplx q, cplx x, double& tail) {
    cplx sum = 1.0, term = 1.0;
    double prev = 1.0;
    for (int j = 0; j < 400; ++j) {
        cplx next = term * (p + static_cast<double>(j)) * (q + static_cast<double>(j)) /
                    (static_cast<double>(j + 1) * x);
        double m = std::abs(next);
        if (m == 0.0) {
            tail = 0.0;
            return sum;
        }
        if (m > prev && j > 2) {
            tail = prev;
            return sum;
        }
        sum += next;
        term = next;
        prev = m;
        if (m < 1e-18 * std::abs(sum)) {
            tail = m;
            return sum;
        }
    }
    tail = prev;
    return sum;
}

} // namespace

ComplexValue checked(ComplexValue v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw TruncationError(std::string(what) + ": non-finite result");
    return v;
}

double sinpi(double x) {
    double n = std::nearbyint(x);
    double r = x - n;
    double v = std::sin(M_PI * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

static double cospi_real(double x) {
    double n = std::nearbyint(x);
    double r = x - n;
    double v = std::cos(M_PI * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

ComplexValue sinpi(ComplexValue z) {
    double y = M_PI * z.imag();
    return {sinpi(z.real()) * std::cosh(y), cospi_real(z.real()) * std::sinh(y)};
}

ComplexValue cospi(ComplexValue z) {
    double y = M_PI * z.imag();
    return {cospi_real(z.real()) * std::cosh(y), -sinpi(z.real()) * std::sinh(y)};
}

ComplexValue lgamma_c(ComplexValue z) {
    if (z.real() < 0.5)
        throw DomainError("lgamma_c: requires Re z >= 1/2");
    z -= 1.0;
    cplx x = lanczos[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

ComplexValue cgamma(ComplexValue z) {
    if (is_nonpositive_integer(z))
        throw PoleError("cgamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return checked(M_PI / (sinpi(z) * cgamma(1.0 - z)), "cgamma");
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 20.0) {
        double f = 1.0;
        for (int i = 2; i < static_cast<int>(z.real()); ++i)
            f *= i;
        return f;
    }
    return checked(std::exp(lgamma_c(z)), "cgamma");
}

ComplexValue rgamma(ComplexValue z) {
    if (is_nonpositive_integer(z))
        return 0.0;
    if (z.real() < 0.5)
        return checked(sinpi(z) * cgamma(1.0 - z) / M_PI, "rgamma");
    return checked(1.0 / cgamma(z), "rgamma");
}

ComplexValue hurwitz_zeta(ComplexValue s, double a, const PrecisionPolicy& pol) {
    if (!(a > 0.0 && a <= 2.0))
        throw ArgumentError("hurwitz_zeta: a must lie in (0, 2]");
    return hurwitz_zeta_any(s, a, pol);
}

ComplexValue hurwitz_zeta_any(ComplexValue s, double a, const PrecisionPolicy& pol) {
    if (s == cplx(1.0, 0.0))
        throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(a > 0.0))
        throw ArgumentError("hurwitz_zeta: a must be positive");
    long N = em_shift(s, a, 0.5 * pol.target_abs_err);
    if (N > pol.max_terms)
        throw TruncationError("hurwitz_zeta: shift exceeds max_terms");
    if (s.real() < 0.5) {
        // Terms grow like n^-Re s: sum in extended precision.
        std::complex<long double> sl(s.real(), s.imag());
        auto v = hurwitz_em<long double>(sl, static_cast<long double>(a), N);
        return checked({static_cast<double>(v.real()), static_cast<double>(v.imag())}, "hurwitz_zeta");
    }
    return checked(hurwitz_em<double>(s, a, N), "hurwitz_zeta");
}

ComplexValue riemann_zeta(ComplexValue s, const PrecisionPolicy& pol) {
    if (s == cplx(1.0, 0.0))
        throw PoleError("riemann_zeta: pole at s = 1");
    if (s.real() < 0.0) {
        if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0)
            return 0.0;  // trivial zeros
        // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
        cplx v = std::pow(2.0, s) * std::pow(M_PI, s - 1.0) * sinpi(0.5 * s) * cgamma(1.0 - s) *
                 hurwitz_zeta(1.0 - s, 1.0, pol);
        return checked(v, "riemann_zeta");
    }
    return hurwitz_zeta(s, 1.0, pol);
}

SeriesValue periodic_zeta_direct(ComplexValue s, double x, const PrecisionPolicy& pol) {
    if (!(s.real() > 1.0))
        throw DomainError("periodic_zeta_direct: requires Re s > 1");
    if (!(x > 0.0 && x < 1.0))
        throw ArgumentError("periodic_zeta_direct: x must lie in (0, 1)");
    const cplx zq = std::polar(1.0, kTwoPi * x);
    const cplx ratio = zq / (1.0 - zq);
    const double q = std::abs(ratio);
    long N = std::max<long>(100, static_cast<long>(std::ceil(4.0 * q * (std::abs(s) + 10.0))));
    if (N > pol.max_terms)
        throw TruncationError("periodic_zeta_direct: x too close to an integer");

    cplx sum = 0.0;
    for (long n = 1; n <= N; ++n)
        sum += std::polar(1.0, kTwoPi * std::fmod(x * static_cast<double>(n), 1.0)) *
               rpow_neg<double>(static_cast<double>(n), s);

    // Tail sum_{n>N} z^n f(n) = z^m/(1-z) sum_j (z/(1-z))^j Delta^j f(m), m = N+1.
    const int J = 40;
    std::array<cplx, J + 1> diff{};
    for (int i = 0; i <= J; ++i)
        diff[i] = rpow_neg<double>(static_cast<double>(N + 1 + i), s);
    const cplx lead = std::polar(1.0, kTwoPi * std::fmod(x * static_cast<double>(N + 1), 1.0)) / (1.0 - zq);
    cplx tail = 0.0, rp = 1.0;
    double last = 0.0;
    for (int j = 0; j <= J; ++j) {
        cplx t = lead * rp * diff[0];
        tail += t;
        last = std::abs(t);
        if (last < 1e-18 * std::abs(sum))
            break;
        for (int i = 0; i < J - j; ++i)
            diff[i] = diff[i + 1] - diff[i];
        rp *= ratio;
    }
    sum += tail;
    return {checked(sum, "periodic_zeta_direct"), last + 1e-16 * std::abs(sum)};
}

ComplexValue periodic_zeta_hurwitz(ComplexValue s, double x, const PrecisionPolicy& pol) {
    if (!(x > 0.0 && x < 1.0))
        throw ArgumentError("periodic_zeta_hurwitz: x must lie in (0, 1)");
    const cplx t = 1.0 - s;
    const cplx i(0.0, 1.0);
    cplx pre = cgamma(t) * std::pow(kTwoPi, -t);
    cplx v = pre * (std::exp(0.5 * M_PI * i * t) * hurwitz_zeta(t, x, pol) +
                    std::exp(-0.5 * M_PI * i * t) * hurwitz_zeta(t, 1.0 - x, pol));
    return checked(v, "periodic_zeta_hurwitz");
}

ComplexValue periodic_zeta(ComplexValue s, double x, const PrecisionPolicy& pol) {
    if (s.real() > 1.5)
        return periodic_zeta_direct(s, x, pol).value;
    return periodic_zeta_hurwitz(s, x, pol);
}

ComplexValue h_function(ComplexValue x, const PrecisionPolicy& pol) {
    if (x == cplx(0.0, 0.0))
        return -0.5 * std::log(2.0);
    // (2^X - 1)(2 pi)^X zeta(1 - X) / 2
    cplx v = expm1_c(x * std::log(2.0)) * std::exp(x * std::log(kTwoPi)) * riemann_zeta(1.0 - x, pol) * 0.5;
    return checked(v, "h_function");
}

KummerValue kummer_1f1(ComplexValue a, ComplexValue b, ComplexValue z, const PrecisionPolicy& pol) {
    if (is_nonpositive_integer(b))
        throw PoleError("kummer_1f1: b is a nonpositive integer");
    const double r = std::abs(z);
    cplx F;
    if (r <= 8.0) {
        F = kummer_taylor_double(a, b, z, pol.max_terms);
    } else if (r <= 60.0) {
        F = kummer_taylor_quad(a, b, z, pol.max_terms);
    } else {
        // DLMF 13.7.2: upper sign for Im z >= 0, lower sign otherwise.
        const cplx i(0.0, 1.0);
        const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
        double t1 = 0.0, t2 = 0.0;
        cplx s1 = asymptotic_sum(a, a - b + 1.0, -z, t1);
        cplx s2 = asymptotic_sum(1.0 - a, b - a, z, t2);
        cplx p1 = std::exp(sign * M_PI * i * a - a * std::log(z)) * rgamma(b - a);
        cplx p2 = std::exp(z + (a - b) * std::log(z)) * rgamma(a);
        cplx m = p1 * s1 + p2 * s2;
        double err = std::abs(p1) * t1 + std::abs(p2) * t2;
        if (err > 1e-13 * std::max(1.0, std::abs(m)))
            throw TruncationError("kummer_1f1: asymptotic expansion not accurate at this |z|");
        F = cgamma(b) * m;
    }
    checked(F, "kummer_1f1");
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b - a))
        throw PoleError("kummer_1f1: Gamma pole in the 1f1 prefactor");
    cplx f = cgamma(a) * cgamma(b - a) * rgamma(b) * F;
    return {F, checked(f, "kummer_1f1")};
}

ComplexValue kummer_1f1_integral(ComplexValue a, ComplexValue b, ComplexValue z, const PrecisionPolicy& pol) {
    if (!(b.real() > a.real() && a.real() > 0.0))
        throw DomainError("kummer_1f1_integral: requires Re b > Re a > 0");
    const cplx am1 = a - 1.0, bam1 = b - a - 1.0;
    auto f = [&](double u, double dlo, double dhi) {
        return std::exp(z * u + am1 * std::log(dlo) + bam1 * std::log(dhi));
    };
    QuadResult q = tanh_sinh(f, 0.0, 1.0, 0.1 * pol.target_abs_err, 10);
    return checked(q.value, "kummer_1f1_integral");
}

ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z, const PrecisionPolicy& pol) {
    if (std::abs(z) > 0.6)
        throw DomainError("gauss_2f1: requires |z| <= 0.6");
    cplx sum = 1.0, term = 1.0;
    for (long j = 0; j < pol.max_terms; ++j) {
        cplx num = (a + static_cast<double>(j)) * (b + static_cast<double>(j));
        if (num == cplx(0.0, 0.0))
            return checked(sum, "gauss_2f1");
        cplx den = c + static_cast<double>(j);
        if (den == cplx(0.0, 0.0))
            throw PoleError("gauss_2f1: (c)_j vanishes before the series terminates");
        term *= num * z / (den * static_cast<double>(j + 1));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && j > 5)
            return checked(sum, "gauss_2f1");
    }
    throw TruncationError("gauss_2f1: series did not converge");
}

ComplexValue gauss_2f1_regularized(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                                   const PrecisionPolicy& pol) {
    if (std::abs(z) > 0.6)
        throw DomainError("gauss_2f1_regularized: requires |z| <= 0.6");
    cplx sum = 0.0, coef = 1.0;
    for (long j = 0; j < pol.max_terms; ++j) {
        cplx term = coef * rgamma(c + static_cast<double>(j));
        sum += term;
        coef *= (a + static_cast<double>(j)) * (b + static_cast<double>(j)) * z / static_cast<double>(j + 1);
        if (coef == cplx(0.0, 0.0))
            return checked(sum, "gauss_2f1_regularized");
        // Past the nonpositive-integer region of c + j the terms decay geometrically.
        if (j > 5 && (c + static_cast<double>(j)).real() > 1.0 && std::abs(term) <= 1e-17 * std::abs(sum))
            return checked(sum, "gauss_2f1_regularized");
    }
    throw TruncationError("gauss_2f1_regularized: series did not converge");
}

std::pair<ComplexValue, ComplexValue> lipschitz_check(ComplexValue tau, ComplexValue s, long N) {
    if (!(tau.imag() > 0.0))
        throw DomainError("lipschitz_check: requires Im tau > 0");
    if (!(s.real() > 1.0))
        throw DomainError("lipschitz_check: requires Re s > 1");
    cplx lhs = 0.0;
    for (long n = -N; n <= N; ++n)
        lhs += std::pow(tau + static_cast<double>(n), -s);
    const cplx i(0.0, 1.0);
    cplx acc = 0.0;
    for (long n = 1; n <= N; ++n) {
        double dn = static_cast<double>(n);
        acc += std::exp((s - 1.0) * std::log(dn) + kTwoPi * i * dn * tau);
    }
    cplx rhs = std::exp(-0.5 * M_PI * i * s + s * std::log(kTwoPi)) * rgamma(s) * acc;
    return {checked(lhs, "lipschitz_check"), checked(rhs, "lipschitz_check")};
}

} // namespace tdes
