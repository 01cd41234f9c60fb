#pragma once

// Complex special functions in double precision: Gamma, Riemann/Hurwitz/
// periodic zeta, Kummer 1F1, Gauss 2F1 and the Lipschitz summation check.

#include <complex>
#include <utility>

namespace tdes {

using ComplexValue = std::complex<double>;

struct PrecisionPolicy {
    double target_abs_err = 1e-12;
    long max_terms = 1000000;
};

// Throws TruncationError if v is not finite.
ComplexValue checked(ComplexValue v, const char* what);

double sinpi(double x);
ComplexValue sinpi(ComplexValue z);
ComplexValue cospi(ComplexValue z);

// Lanczos (g = 7, n = 9) on Re z >= 1/2, reflection below.
ComplexValue cgamma(ComplexValue z);
ComplexValue lgamma_c(ComplexValue z);  // principal log Gamma, Re z >= 1/2 only
// 1/Gamma, entire; exact zero at nonpositive integers.
ComplexValue rgamma(ComplexValue z);

// Euler-Maclaurin with 12 correction terms; shift chosen from the remainder
// bound so the result meets policy.target_abs_err. Valid for Re s > -20.
ComplexValue hurwitz_zeta(ComplexValue s, double a, const PrecisionPolicy& pol = {});
// Same expansion for any a > 0.
ComplexValue hurwitz_zeta_any(ComplexValue s, double a, const PrecisionPolicy& pol = {});
ComplexValue riemann_zeta(ComplexValue s, const PrecisionPolicy& pol = {});

// sum_{n>=1} e^(2 pi i n x) n^-s. The direct path needs Re s > 1 and sums the
// tail by the Euler transform of the geometric weight; the Hurwitz path uses
// F(s,x) = Gamma(1-s)(2pi)^(s-1)[e^(pi i(1-s)/2) zeta(1-s,x) + e^(-pi i(1-s)/2) zeta(1-s,1-x)].
struct SeriesValue {
    ComplexValue value;
    double abs_err;
};
SeriesValue periodic_zeta_direct(ComplexValue s, double x, const PrecisionPolicy& pol = {});
ComplexValue periodic_zeta_hurwitz(ComplexValue s, double x, const PrecisionPolicy& pol = {});
ComplexValue periodic_zeta(ComplexValue s, double x, const PrecisionPolicy& pol = {});

// Gamma(X) cos(pi X / 2) zeta(X, 1/2), entire in X.
ComplexValue h_function(ComplexValue x, const PrecisionPolicy& pol = {});

struct KummerValue {
    ComplexValue F;  // 1F1(a; b; z)
    ComplexValue f;  // Gamma(a)Gamma(b-a)/Gamma(b) * 1F1(a; b; z)
};
KummerValue kummer_1f1(ComplexValue a, ComplexValue b, ComplexValue z, const PrecisionPolicy& pol = {});
// int_0^1 e^(zu) u^(a-1) (1-u)^(b-a-1) du, for Re b > Re a > 0.
ComplexValue kummer_1f1_integral(ComplexValue a, ComplexValue b, ComplexValue z,
                                 const PrecisionPolicy& pol = {});

// Taylor series for |z| <= 0.6.
ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                       const PrecisionPolicy& pol = {});
// 2F1(a, b; c; z) / Gamma(c), entire in c.
ComplexValue gauss_2f1_regularized(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                                   const PrecisionPolicy& pol = {});

// (sum_{|n|<=N} (tau+n)^-s, e^(-pi i s/2)(2pi)^s/Gamma(s) sum_{n=1}^N n^(s-1) e^(2 pi i n tau))
std::pair<ComplexValue, ComplexValue> lipschitz_check(ComplexValue tau, ComplexValue s, long N);

} // namespace tdes
