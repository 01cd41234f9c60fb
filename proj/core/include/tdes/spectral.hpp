#pragma once

// Spectral side at level one: the q-expansion of Delta, completed and
// additively twisted L-values by Mellin integrals, and the Petersson-norm
// ratio probe.

#include "tdes/eisenstein.hpp"
#include "tdes/exact.hpp"
#include "tdes/specfun.hpp"

#include <cstdint>
#include <vector>

namespace tdes {

struct QSeries {
    int weight = 12;
    std::vector<std::int64_t> coeffs;  // coeffs[n-1] = a(n)

    long size() const { return static_cast<long>(coeffs.size()); }
    std::int64_t a(long n) const { return coeffs.at(static_cast<std::size_t>(n - 1)); }
    // sum_n a(n) e^(2 pi i n z), Im z > 0
    ComplexValue eval(ComplexValue z) const;
    // Bound on sum_{n>N} |a(n)| e^(-2 pi n y) from |a(n)| <= 2 n^((k-1)/2 + 1/2).
    double tail_bound(double y) const;
};

// tau(1..N) from q prod (1 - q^n)^24, exact integer arithmetic.
QSeries delta_q_expansion(long N = 400);

struct LValue {
    ComplexValue value;
    double abs_err = 0.0;
};

// int_1^inf f(iy) (y^(s-1) + (-1)^(k/2) y^(k-s-1)) dy, 0 < Re s < k
LValue completed_L(const QSeries& f, ComplexValue s);
// int_0^inf f(1/2 + iy) y^(s-1) dy, folded onto [1/2, inf) by
// f(1/2 + iy) = (-1)^(k/2) (2y)^-k f(1/2 + i/(4y)).
LValue completed_twisted_L(const QSeries& f, ComplexValue s);

// L*(Delta, 12-s; 1/2) L*(Delta, 12-w) / (prefactor(s,w) c(1)(s,w)) for each point;
// every ratio estimates <Delta, Delta>.
std::vector<ComplexValue> petersson_ratio_probe(const std::vector<ParityPoint>& pairs,
                                                const Truncation& tr = {});

} // namespace tdes
