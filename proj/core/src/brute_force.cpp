#include "tdes/eisenstein.hpp"
#include "tdes/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace tdes {

namespace {

using cplx = std::complex<double>;

struct Entry {
    int a, b, det;
    bool inner;
};

struct Row {
    int c, d;
    std::vector<Entry> entries;
};

// All integer matrices in the box |entries| <= E with 0 < det <= D, grouped by the bottom row.
std::vector<Row> enumerate(long E, long D) {
    std::vector<Row> rows;
    const long inner = (3 * E) / 4;
    for (long c = -E; c <= E; ++c) {
        for (long d = -E; d <= E; ++d) {
            if (c == 0 && d == 0)
                continue;
            Row row{static_cast<int>(c), static_cast<int>(d), {}};
            for (long a = -E; a <= E; ++a) {
                for (long b = -E; b <= E; ++b) {
                    const long det = a * d - b * c;
                    if (det <= 0 || det > D)
                        continue;
                    const bool in = std::labs(a) <= inner && std::labs(b) <= inner && std::labs(c) <= inner &&
                                    std::labs(d) <= inner;
                    row.entries.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(det), in});
                }
            }
            if (!row.entries.empty())
                rows.push_back(std::move(row));
        }
    }
    return rows;
}

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1)
            r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

} // namespace

ComplexValue fourier_extract(const std::function<ComplexValue(ComplexValue)>& F, long m, long samples,
                             double y) {
    if (samples < 1)
        throw ArgumentError("fourier_extract: samples must be positive");
    cplx sum = 0.0;
    for (long j = 0; j < samples; ++j) {
        const double x = static_cast<double>(j) / samples;
        sum += F(cplx(x, y)) * std::polar(1.0, -2.0 * M_PI * static_cast<double>(m) * x);
    }
    return std::exp(2.0 * M_PI * m * y) * sum / static_cast<double>(samples);
}

std::vector<CoeffValue> brute_force_fourier(const DomainPoint& pt, const std::vector<long>& ms,
                                            const Truncation& tr) {
    if (!pt.in_D())
        throw DomainError("brute_force_fourier: point outside D");
    if (!(tr.y >= 0.5 && tr.y <= 2.0))
        throw ArgumentError("brute_force_fourier: y must lie in [0.5, 2]");
    if (tr.entry_max < 1 || tr.det_max < 1 || tr.x_samples < 1)
        throw ArgumentError("brute_force_fourier: truncation parameters must be positive");
    for (long m : ms)
        if (m < 1 || 2 * m >= tr.x_samples)
            throw ArgumentError("brute_force_fourier: m must satisfy 1 <= m < x_samples/2");

    const std::vector<Row> rows = enumerate(tr.entry_max, tr.det_max);
    std::vector<cplx> detpow(static_cast<std::size_t>(tr.det_max) + 1);
    for (long n = 1; n <= tr.det_max; ++n)
        detpow[n] = std::exp((pt.w - 1.0) * std::log(static_cast<double>(n)));
    const cplx lead = std::exp(0.5 * M_PI * cplx(0.0, 1.0) * pt.s) * std::exp(-(1.0 + pt.s) * std::log(2.0));

    const long X = tr.x_samples;
    std::vector<cplx> full(X), inner(X);
#pragma omp parallel for schedule(static)
    for (long j = 0; j < X; ++j) {
        const cplx z(static_cast<double>(j) / X, tr.y);
        cplx acc = 0.0, acc_in = 0.0;
        for (const Row& row : rows) {
            const cplx inv = 1.0 / (static_cast<double>(row.c) * z + static_cast<double>(row.d));
            const cplx pk = ipow(inv, pt.k);
            cplx racc = 0.0, racc_in = 0.0;
            for (const Entry& e : row.entries) {
                const cplx t = (static_cast<double>(e.a) * z + static_cast<double>(e.b)) * inv + 0.5;
                const cplx v = detpow[e.det] * std::exp(-pt.s * std::log(t));
                racc += v;
                if (e.inner)
                    racc_in += v;
            }
            acc += racc * pk;
            acc_in += racc_in * pk;
        }
        full[j] = lead * acc;
        inner[j] = lead * acc_in;
    }

    std::vector<CoeffValue> out;
    for (long m : ms) {
        cplx cf = 0.0, ci = 0.0;
        for (long j = 0; j < X; ++j) {
            const cplx ph = std::polar(1.0, -2.0 * M_PI * static_cast<double>(m * j) / X);
            cf += full[j] * ph;
            ci += inner[j] * ph;
        }
        const double grow = std::exp(2.0 * M_PI * m * tr.y) / X;
        CoeffValue v;
        v.value = checked(cf * grow, "brute_force_fourier");
        // Box tail estimated by the change from the 3/4 box; aliasing from c(m + X) is of
        // size e^(-2 pi X y) relative and is absorbed in the rounding term.
        v.trunc_error_estimate = std::abs(cf - ci) * grow + 1e-12 * std::abs(v.value);
        out.push_back(v);
    }
    return out;
}

CoeffValue brute_force_fourier(const DomainPoint& pt, long m, const Truncation& tr) {
    return brute_force_fourier(pt, std::vector<long>{m}, tr).front();
}

} // namespace tdes
