#include "tdes/spectral.hpp"

#include "tdes/errors.hpp"
#include "tdes/quadrature.hpp"

#include <cmath>
#include <limits>

namespace tdes {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kSeriesTol = 1e-14;
constexpr double kQuadTol = 1e-16;

double sign_k(int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; }

ComplexValue rpow(double x, ComplexValue e) { return std::exp(e * std::log(x)); }

// |a(n)| <= 2 n^((k-1)/2) sqrt(n) for a normalized level-one eigenform.
double coeff_bound(int k, double n) { return 2.0 * std::pow(n, 0.5 * k); }

// Integrate g(y) = f-part(y) * kernel(y) over [lo, inf): finite panel plus an
// explicit tail bound with |f-part(y)| <= 1.1 e^(-2 pi y) beyond the cut.
template <typename G>
LValue mellin(const G& g, double lo, double exp_hi) {
    double Y = lo + 1.0;
    auto tail = [&](double y) {
        return 1.1 * std::exp(-kTwoPi * y) * std::pow(y, std::max(exp_hi, 0.0)) /
               (kTwoPi - std::max(exp_hi, 0.0) / y);
    };
    while (tail(Y) > 1e-18 || kTwoPi * Y <= std::max(exp_hi, 0.0) + 1.0)
        Y += 1.0;
    QuadResult re = gauss_kronrod([&](double y) { return g(y).real(); }, lo, Y, kQuadTol);
    QuadResult im = gauss_kronrod([&](double y) { return g(y).imag(); }, lo, Y, kQuadTol);
    return {{re.value.real(), im.value.real()}, re.abs_err + im.abs_err + tail(Y)};
}

void check_strip(const QSeries& f, ComplexValue s) {
    if (f.weight % 2 != 0 || f.weight < 2)
        throw ArgumentError("L-value: weight must be even");
    if (!(s.real() > 0.0 && s.real() < f.weight))
        throw DomainError("L-value: requires 0 < Re s < k");
}

} // namespace

ComplexValue QSeries::eval(ComplexValue z) const {
    if (!(z.imag() > 0.0))
        throw DomainError("QSeries::eval: requires Im z > 0");
    const ComplexValue q = std::exp(ComplexValue(0.0, kTwoPi) * z);
    const double r = std::abs(q);
    ComplexValue sum = 0.0, qn = 1.0;
    double rn = 1.0;
    for (long n = 1; n <= size(); ++n) {
        qn *= q;
        rn *= r;
        sum += static_cast<double>(coeffs[n - 1]) * qn;
        if (coeff_bound(weight, static_cast<double>(n)) * rn < 1e-30 * std::abs(sum))
            break;
    }
    return sum;
}

double QSeries::tail_bound(double y) const {
    const double r = std::exp(-kTwoPi * y);
    const double N1 = static_cast<double>(size() + 1);
    const double ratio = r * std::pow((N1 + 1.0) / N1, 0.5 * weight);
    if (ratio >= 1.0)
        return std::numeric_limits<double>::infinity();
    return coeff_bound(weight, N1) * std::pow(r, N1) / (1.0 - ratio);
}

QSeries delta_q_expansion(long N) {
    if (N < 1)
        throw ArgumentError("delta_q_expansion: N must be >= 1");
    // prod_{n<=N-1} (1 - q^n)^24 up to q^(N-1); tau(n) is its q^(n-1) coefficient.
    std::vector<BigInteger> c(static_cast<std::size_t>(N), BigInteger(0));
    c[0] = 1;
    for (long n = 1; n < N; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (long i = N - 1; i >= n; --i)
                c[i] -= c[i - n];
    QSeries f;
    f.weight = 12;
    f.coeffs.reserve(static_cast<std::size_t>(N));
    for (const auto& v : c) {
        if (!v.fits_slong_p())
            throw TruncationError("delta_q_expansion: coefficient exceeds 64 bits");
        f.coeffs.push_back(v.get_si());
    }
    return f;
}

LValue completed_L(const QSeries& f, ComplexValue s) {
    check_strip(f, s);
    if (f.tail_bound(1.0) > kSeriesTol)
        throw TruncationError("completed_L: q-series too short");
    const double k = f.weight, sg = sign_k(f.weight);
    auto g = [&](double y) {
        return f.eval({0.0, y}).real() * (rpow(y, s - 1.0) + sg * rpow(y, k - s - 1.0));
    };
    LValue v = mellin(g, 1.0, std::max(s.real() - 1.0, k - s.real() - 1.0));
    const double kernel = 1.0 + std::pow(2.0, k);
    v.abs_err += f.tail_bound(1.0) * kernel;
    return v;
}

LValue completed_twisted_L(const QSeries& f, ComplexValue s) {
    check_strip(f, s);
    if (f.tail_bound(0.5) > kSeriesTol)
        throw TruncationError("completed_twisted_L: q-series too short");
    const double k = f.weight, sg = sign_k(f.weight);
    const ComplexValue fold = sg * rpow(2.0, k - 2.0 * s);
    auto g = [&](double y) {
        return f.eval({0.5, y}).real() * (rpow(y, s - 1.0) + fold * rpow(y, k - s - 1.0));
    };
    LValue v = mellin(g, 0.5, std::max(s.real() - 1.0, k - s.real() - 1.0));
    v.abs_err += f.tail_bound(0.5) * (1.0 + std::abs(fold)) * std::pow(2.0, k);
    return v;
}

std::vector<ComplexValue> petersson_ratio_probe(const std::vector<ParityPoint>& pairs, const Truncation& tr) {
    const QSeries delta = delta_q_expansion();
    std::vector<ComplexValue> out;
    for (const ParityPoint& p : pairs) {
        if (p.k != 12)
            throw DomainError("petersson_ratio_probe: weight 12 only");
        DomainPoint pt = to_domain_point(p);
        if (!(pt.in_F() && pt.in_D()))
            throw DomainError("petersson_ratio_probe: point outside F and D");
        const LValue lt = completed_twisted_L(delta, 12.0 - pt.s);
        const LValue l = completed_L(delta, 12.0 - pt.w);
        out.push_back(lt.value * l.value / (prefactor(pt) * c1_series(pt, tr).value));
    }
    return out;
}

} // namespace tdes
