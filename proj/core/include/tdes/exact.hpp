#pragma once

// Exact rational arithmetic: Bernoulli numbers, Gamma at half-integers,
// 2F1 special values at z = 1/2 and the closed form of the first Fourier
// coefficient of the twisted double Eisenstein series.

#include <array>
#include <gmpxx.h>

#include <string>

namespace tdes {

using BigRational = mpq_class;
using BigInteger = mpz_class;

// "numerator/denominator" in base 10 (denominator omitted when 1).
std::string to_string(const BigRational& q);
double to_double(const BigRational& q);

// coefficient * pi^(pi_half_exponent / 2)
struct HalfPiExact {
    BigRational coefficient{0};
    long pi_half_exponent = 0;

    HalfPiExact() = default;
    HalfPiExact(BigRational c, long e = 0);

    bool is_zero() const { return sgn(coefficient) == 0; }
    double to_double() const;

    friend HalfPiExact operator*(const HalfPiExact& a, const HalfPiExact& b);
    friend HalfPiExact operator/(const HalfPiExact& a, const HalfPiExact& b);
    friend bool operator==(const HalfPiExact& a, const HalfPiExact& b);
};

struct ParityPoint {
    int k = 12;
    int s = 5;
    int w = 2;

    bool k_valid() const { return k >= 6 && k % 2 == 0; }
    bool opposite_parity() const { return ((s + w) % 2 + 2) % 2 == 1; }
    // 3/2 < s, w < k - 2 for integers.
    bool in_F() const { return s >= 2 && w >= 2 && s <= k - 3 && w <= k - 3; }
};

BigRational bernoulli(int n);
BigRational bernoulli_poly(int n, const BigRational& x);
BigRational factorial(long n);
BigRational binomial(long n, long r);

// rho(n) = 0 for n < 0, rho(2m) = (-1)^(m+1) B_2m / (2m)!.
BigRational rho(long n);
int delta_sign(long n, long r);

HalfPiExact gamma_half_exact(const BigRational& x);

// Gamma(x)/Gamma(y) for x - y integer, as a rising-factorial product.
// A vanishing denominator factor (Gamma(x) infinite, Gamma(y) finite)
// raises PoleError.
BigRational gamma_ratio(const BigRational& x, const BigRational& y);

// 1 / Gamma(n) for integer n, zero at the poles.
BigRational rgamma_int(long n);

BigRational hyp2f1_terminating_exact(long a, long b, long c, const BigRational& z);
// Regularized terminating series sum_j (a)_j (b)_j z^j / (Gamma(c+j) j!).
BigRational hyp2f1_regularized_terminating(long a, long b, long c, const BigRational& z);

// 2F1[a, b; (a+b+n+1)/2 | 1/2] through the Gamma-ratio closed form. Ratios
// whose arguments sit on poles are resolved as the limit a -> a + eps.
HalfPiExact hyp2f1_half_closed_exact(long a, long b, long n);

// q with 2 (2 pi)^(w-k-1) c(1) = q, for integer opposite-parity points of F.
BigRational c1_exact(const ParityPoint& p);
// The two 2F1 blocks written as binomial-weighted half-integer products with
// the opposite overall sign; differs from c1_exact by the sign of both blocks
// and fails the numeric cross-check, so it is kept only as a sign regression.
BigRational c1_exact_product_form(const ParityPoint& p);

// The four rho-terms and the two 2F1 blocks of c1_exact, for reporting.
struct C1Parts {
    std::array<BigRational, 4> rho_each;
    BigRational rho_terms;
    BigRational block_minus;  // 2F1(1-s, k-s; k-s-w+1; 1/2) term
    BigRational block_plus;   // 2F1(s+1-k, s; 1+s-w; 1/2) term
};
// allow_boundary extends the range to 2 <= s, w <= k-2.
C1Parts c1_exact_parts(const ParityPoint& p, bool allow_boundary = false);
C1Parts c1_exact_parts_product_form(const ParityPoint& p);

// pi^-2 e^(pi i (s-w)/2) <C_k(., s; 1/2), C_k(., w)> for 2 <= s, w <= k-2.
BigRational inner_product_rational(const ParityPoint& p);

} // namespace tdes
