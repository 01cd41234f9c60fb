#pragma once

// Internal machinery for the coprime-pair double sum of c(m).

#include "tdes/eisenstein.hpp"

namespace tdes::detail {

using cplx = std::complex<double>;

struct PairKernel {
    int k;
    cplx s, w;
    cplx cplus, cminus;  // cos(pi(s+w)/2), cos(pi(s-w)/2)
    cplx gw;             // 2 Gamma(w) (2pi)^-w
    bool w_integer = false;
    long w0 = 0;

    explicit PairKernel(const DomainPoint& pt);
    cplx g(double u, double one_minus_u) const;
};

// int_0^1 g(u) [C+ zeta(w,{y}) + C- zeta(w,1-{y})] du, y = mu a'/c - tau u.
PairValue hurwitz_integral(const PairKernel& K, long a, long c, long mu);

// sum_{r|m} r^(w-k) sum_{a} (a+c/2)^-s * integral, over all a coprime to c.
PairValue c_layer(const PairKernel& K, long c, long m);

// Bound on the pair sum (with its prefactor) over c > C.
double c_tail_bound(const PairKernel& K, long C, long m);

} // namespace tdes::detail
