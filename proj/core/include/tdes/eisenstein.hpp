#pragma once

// Fourier coefficients of the twisted double Eisenstein series E*_{s,k-s}(z,w;1/2):
// the convergent series for c(m), its continuation in (s, w), the remainder
// between the two, and a brute-force matrix-sum oracle.

#include "tdes/exact.hpp"
#include "tdes/specfun.hpp"

#include <array>
#include <functional>
#include <vector>

namespace tdes {

struct DomainPoint {
    int k = 12;
    ComplexValue s{5.0, 0.0};
    ComplexValue w{2.0, 0.0};

    // 2 < Re s < k-2, Re w < min(Re s - 1, k - Re s - 1)
    bool in_D() const;
    // 2 < Re s < k-2, Re w < 0
    bool in_D1() const;
    // 3/2 < Re s < k-2 and 3/2 < Re w < k-2
    bool in_F() const;
};

DomainPoint to_domain_point(const ParityPoint& p);

struct Truncation {
    long c_max = 200;
    long n_max = 400;
    long det_max = 40;
    long entry_max = 30;
    long x_samples = 256;
    double y = 0.8;
};

struct CoeffValue {
    ComplexValue value;
    double trunc_error_estimate = 0.0;
};

// Gamma(s)Gamma(k-s)Gamma(k-w) / (2^(2-s-w) pi^(k+1-w) Gamma(k-1))
ComplexValue prefactor(const DomainPoint& pt);

// c(m) from the convergent series; requires pt.in_D().
CoeffValue coefficient_c_m(const DomainPoint& pt, long m, const Truncation& tr = {});
// The m = 1 case: two h-terms plus the coprime-pair double sum.
CoeffValue c1_series(const DomainPoint& pt, const Truncation& tr = {});

struct ContinuationTerms {
    std::array<ComplexValue, 6> terms;
    ComplexValue sum;
    double scale = 0.0;      // sum of |terms|, used as a magnitude for relative errors
    bool exact_path = false; // integer opposite-parity point evaluated through exact limits
    bool circle_path = false;
};
ContinuationTerms continuation_terms(const DomainPoint& pt);
ComplexValue continuation_main(const DomainPoint& pt);

// c1_series - continuation_main on F and D.
CoeffValue residual(const DomainPoint& pt, const Truncation& tr = {});
// |Gamma(w)| / |Gamma(s)Gamma(k-s)| e^(pi(|Im s|+|Im w|)) zeta(k-1-max(Re s, Re w))
double residual_bound_shape(const DomainPoint& pt);

// Matrix-sum oracle for c(m), one value per requested m.
std::vector<CoeffValue> brute_force_fourier(const DomainPoint& pt, const std::vector<long>& ms,
                                            const Truncation& tr = {});
CoeffValue brute_force_fourier(const DomainPoint& pt, long m, const Truncation& tr = {});
// e^(2 pi m y) / X * sum_j F(x_j + iy) e^(-2 pi i m x_j), x_j = j/X
ComplexValue fourier_extract(const std::function<ComplexValue(ComplexValue)>& F, long m, long samples,
                             double y);

// |v(s,w) - (-1)^(k/2) v(s,k-w)| / |v(s,w)| with v = prefactor * continuation_main.
double functional_eq_check(const ParityPoint& p);

// Building blocks, exposed for tests.

// a' with a a' = 1 (mod c), 0 < a' <= c.
long inverse_mod(long a, long c);
// Numerator j of the phase e^(2 pi i j / c) = e^(2 pi i (m/r)(n a'/c)).
long phase_numerator(long m, long r, long n, long ap, long c);

struct PairValue {
    ComplexValue value;
    double abs_err = 0.0;
};
// sum_{n>=1} n^(w-1) [e^(pi i s/2) e^(2 pi i n x) 1f1(s,k;-2 pi i n tau)
//                   + e^(-pi i s/2) e^(-2 pi i n x) 1f1(s,k;2 pi i n tau)]
// for x = mu a'/c, tau = mu/(c(a+c/2)), through the Hurwitz-integral form.
PairValue pair_sum_hurwitz(const DomainPoint& pt, long a, long c, long mu);
// The same sum truncated at n_max with the 1f1 values taken literally.
PairValue pair_sum_direct(const DomainPoint& pt, long a, long c, long mu, long n_max);

} // namespace tdes
