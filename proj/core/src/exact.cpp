#include "tdes/exact.hpp"
#include "tdes/errors.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace tdes {

namespace {

BigRational pow2(long e) {
    BigRational r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

BigRational frac(long num, long den) {
    BigRational q{BigInteger(num), BigInteger(den)};
    q.canonicalize();
    return q;
}

int neg1_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

long to_long(const BigRational& x) { return x.get_num().get_si(); }

// Pochhammer (x)_n for n >= 0.
BigRational rising(const BigRational& x, long n) {
    BigRational p(1);
    for (long i = 0; i < n; ++i)
        p *= x + i;
    return p;
}

// Gamma at any non-pole point of (1/2)Z.
HalfPiExact gamma_half_any(const BigRational& x) {
    if (is_integer(x)) {
        long n = to_long(x);
        if (n <= 0)
            throw PoleError("Gamma pole at " + to_string(x));
        return HalfPiExact(factorial(n - 1));
    }
    BigRational m = x - BigRational(1, 2);
    long j = to_long(m);
    if (j >= 0) {
        BigRational c = factorial(2 * j) / (factorial(j) * pow2(2 * j));
        return HalfPiExact(c, 1);
    }
    // Gamma(1/2 - j) = (-4)^j j! / (2j)! * sqrt(pi)
    long jj = -j;
    BigRational c = BigRational(neg1_pow(jj)) * pow2(2 * jj) * factorial(jj) / factorial(2 * jj);
    return HalfPiExact(c, 1);
}

// a + b*gamma_E + c*log 2
struct Lin {
    BigRational one{0}, euler{0}, log2{0};

    Lin& operator+=(const Lin& o) {
        one += o.one;
        euler += o.euler;
        log2 += o.log2;
        return *this;
    }
    Lin scaled(const BigRational& t) const { return {one * t, euler * t, log2 * t}; }
};

// Digamma at non-pole points of (1/2)Z.
Lin digamma(const BigRational& x) {
    if (is_integer(x)) {
        long n = to_long(x);
        if (n <= 0)
            throw PoleError("digamma pole");
        Lin r{0, -1, 0};
        for (long i = 1; i < n; ++i)
            r.one += frac(1, i);
        return r;
    }
    if (x > 0) {
        long j = to_long(x - BigRational(1, 2));
        Lin r{0, -1, -2};
        for (long i = 1; i <= j; ++i)
            r.one += frac(2, 2 * i - 1);
        return r;
    }
    Lin r = digamma(x + 1);
    r.one -= 1 / x;
    return r;
}

// eps^order * sqrt(pi)^pi_half * c0 * (1 + r1 eps + O(eps^2))
struct Laurent {
    long order = 0;
    long pi_half = 0;
    BigRational c0{1};
    Lin r1;

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        r.order = a.order + b.order;
        r.pi_half = a.pi_half + b.pi_half;
        r.c0 = a.c0 * b.c0;
        r.r1 = a.r1;
        r.r1 += b.r1;
        return r;
    }
    Laurent inverse() const {
        Laurent r;
        r.order = -order;
        r.pi_half = -pi_half;
        r.c0 = 1 / c0;
        r.r1 = r1.scaled(-1);
        return r;
    }
};

// Expansion of Gamma(x + t eps) to first relative order.
Laurent gamma_expand(const BigRational& x, const BigRational& t) {
    Laurent r;
    if (is_integer(x) && x <= 0) {
        if (sgn(t) == 0)
            throw PoleError("Gamma pole at " + to_string(x));
        // Gamma(-m + d) = (-1)^m / m! (1/d + psi(m+1) + O(d))
        long m = -to_long(x);
        r.order = -1;
        r.c0 = BigRational(neg1_pow(m)) / (factorial(m) * t);
        r.r1 = digamma(BigRational(m + 1)).scaled(t);
        return r;
    }
    HalfPiExact g = gamma_half_any(x);
    r.c0 = g.coefficient;
    r.pi_half = g.pi_half_exponent;
    r.r1 = digamma(x).scaled(t);
    return r;
}

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_cache{BigRational(1)};

void check_point(const ParityPoint& p) {
    if (!p.k_valid())
        throw DomainError("k must be even and >= 6");
    if (!p.opposite_parity())
        throw DomainError("opposite parity required");
}

} // namespace

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const BigRational& q) { return mpq_get_d(q.get_mpq_t()); }

HalfPiExact::HalfPiExact(BigRational c, long e) : coefficient(std::move(c)), pi_half_exponent(e) {
    coefficient.canonicalize();
    if (is_zero())
        pi_half_exponent = 0;
}

double HalfPiExact::to_double() const {
    return tdes::to_double(coefficient) * std::pow(M_PI, 0.5 * static_cast<double>(pi_half_exponent));
}

HalfPiExact operator*(const HalfPiExact& a, const HalfPiExact& b) {
    return HalfPiExact(a.coefficient * b.coefficient, a.pi_half_exponent + b.pi_half_exponent);
}

HalfPiExact operator/(const HalfPiExact& a, const HalfPiExact& b) {
    if (b.is_zero())
        throw ArgumentError("division by zero");
    return HalfPiExact(a.coefficient / b.coefficient, a.pi_half_exponent - b.pi_half_exponent);
}

bool operator==(const HalfPiExact& a, const HalfPiExact& b) {
    return a.coefficient == b.coefficient && a.pi_half_exponent == b.pi_half_exponent;
}

BigRational bernoulli(int n) {
    if (n < 0)
        throw ArgumentError("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    for (int m = static_cast<int>(bernoulli_cache.size()); m <= n; ++m) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        BigRational acc(0);
        BigInteger c(1);
        for (int j = 0; j < m; ++j) {
            acc += BigRational(c) * bernoulli_cache[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        bernoulli_cache.push_back(-acc / (m + 1));
    }
    return bernoulli_cache[n];
}

BigRational bernoulli_poly(int n, const BigRational& x) {
    if (n < 0)
        throw ArgumentError("bernoulli_poly: negative index");
    BigRational acc(0), xp(1);
    for (int j = n; j >= 0; --j) {
        acc += binomial(n, j) * bernoulli(j) * xp;
        xp *= x;
    }
    return acc;
}

BigRational factorial(long n) {
    if (n < 0)
        throw ArgumentError("factorial of negative integer");
    BigInteger f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational(f);
}

BigRational binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n)
        return BigRational(0);
    BigInteger b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return BigRational(b);
}

BigRational rho(long n) {
    if (n < 0)
        return BigRational(0);
    if (n % 2 != 0)
        throw ArgumentError("rho: defined only for negative or even arguments");
    long m = n / 2;
    return BigRational(neg1_pow(m + 1)) * bernoulli(static_cast<int>(n)) / factorial(n);
}

int delta_sign(long n, long r) {
    if (r < 0)
        throw ArgumentError("delta_sign: r must be nonnegative");
    return n >= 0 ? neg1_pow(r) : 1;
}

HalfPiExact gamma_half_exact(const BigRational& x) {
    BigRational twice = 2 * x;
    twice.canonicalize();
    if (!is_integer(twice))
        throw ArgumentError("gamma_half_exact: argument not in (1/2)Z");
    if (x <= 0)
        throw PoleError("gamma_half_exact: nonpositive argument " + to_string(x));
    return gamma_half_any(x);
}

BigRational gamma_ratio(const BigRational& x, const BigRational& y) {
    BigRational d = x - y;
    if (!is_integer(d))
        throw ArgumentError("gamma_ratio: non-integer difference");
    long n = to_long(d);
    if (n >= 0)
        return rising(y, n);
    BigRational p = rising(x, -n);
    if (sgn(p) == 0)
        throw PoleError("gamma_ratio: Gamma(" + to_string(x) + ") is a pole");
    return 1 / p;
}

BigRational rgamma_int(long n) { return n <= 0 ? BigRational(0) : 1 / factorial(n - 1); }

BigRational hyp2f1_terminating_exact(long a, long b, long c, const BigRational& z) {
    if (a > 0)
        throw ArgumentError("hyp2f1_terminating_exact: a must be <= 0");
    for (long i = 0; i < -a; ++i)
        if (c + i == 0)
            throw PoleError("hyp2f1_terminating_exact: (c)_j vanishes before termination");
    BigRational sum(0), term(1);
    for (long j = 0; j <= -a; ++j) {
        sum += term;
        term *= frac((a + j) * (b + j), (c + j) * (j + 1)) * z;
    }
    return sum;
}

BigRational hyp2f1_regularized_terminating(long a, long b, long c, const BigRational& z) {
    if (a > 0)
        throw ArgumentError("hyp2f1_regularized_terminating: a must be <= 0");
    BigRational sum(0), num(1), zp(1);
    for (long j = 0; j <= -a; ++j) {
        sum += num * zp * rgamma_int(c + j) / factorial(j);
        num *= BigRational((a + j) * (b + j));
        zp *= z;
    }
    return sum;
}

HalfPiExact hyp2f1_half_closed_exact(long a, long b, long n) {
    if (((a + b + n) % 2 + 2) % 2 != 1)
        throw ArgumentError("hyp2f1_half_closed_exact: a + b + n must be odd");
    const BigRational half(1, 2);
    const BigRational zero(0);
    const long N = n < 0 ? -n : n;
    const BigRational c = frac(a + b + n + 1, 2);
    if (is_integer(c) && c <= 0)
        throw DomainError("hyp2f1_half_closed_exact: c is a nonpositive integer");

    // Shift a -> a + eps; every argument containing a moves by eps/2.
    Laurent pre = gamma_expand(half, zero) * gamma_expand(c, half);
    pre = pre * gamma_expand(frac(b, 2), zero).inverse();
    pre = pre * gamma_expand(frac(b + 1, 2), zero).inverse();
    pre = pre * gamma_expand(frac(a - b - N + 1, 2), half);
    pre = pre * gamma_expand(frac(a - b + n + 1, 2), half).inverse();

    std::vector<Laurent> terms;
    terms.reserve(static_cast<size_t>(N + 1));
    long min_order = 0;
    for (long r = 0; r <= N; ++r) {
        Laurent t;
        t.c0 = binomial(N, r) * delta_sign(n, r);
        t = t * gamma_expand(frac(b + r, 2), zero);
        t = t * gamma_expand(frac(a - N + r + 1, 2), half).inverse();
        if (r == 0 || t.order < min_order)
            min_order = t.order;
        terms.push_back(std::move(t));
    }
    for (const auto& t : terms)
        if (t.pi_half != terms.front().pi_half)
            throw PoleError("hyp2f1_half_closed_exact: mixed transcendental terms");

    BigRational s0(0);
    for (const auto& t : terms)
        if (t.order == min_order)
            s0 += t.c0;

    long total = 0;
    BigRational value;
    if (sgn(s0) != 0) {
        total = pre.order + min_order;
        value = pre.c0 * s0;
    } else {
        Lin s1;
        for (const auto& t : terms) {
            if (t.order == min_order)
                s1 += t.r1.scaled(t.c0);
            else if (t.order == min_order + 1)
                s1.one += t.c0;
        }
        if (sgn(s1.euler) != 0 || sgn(s1.log2) != 0)
            throw PoleError("hyp2f1_half_closed_exact: pole does not cancel rationally");
        if (sgn(s1.one) == 0)
            throw PoleError("hyp2f1_half_closed_exact: cancellation beyond first order");
        total = pre.order + min_order + 1;
        value = pre.c0 * s1.one;
    }
    if (total < 0)
        throw PoleError("hyp2f1_half_closed_exact: genuine pole");
    if (total > 0)
        return HalfPiExact(BigRational(0));
    return HalfPiExact(value, pre.pi_half + terms.front().pi_half);
}

namespace {

std::array<BigRational, 4> rho_each(const ParityPoint& p) {
    const long k = p.k, s = p.s, w = p.w;
    const BigRational sg(neg1_pow(k / 2));
    std::array<BigRational, 4> t;
    t[0] = (pow2(s + w - k) - 1) / (pow2(s) * factorial(s - 1)) * rho(k - w - s + 1);
    t[1] = sg * (pow2(w - s) - 1) / (pow2(k - s) * factorial(k - s - 1)) * rho(s - w + 1);
    t[2] = (pow2(k - s - w) - 1) * factorial(w - 1) /
           (pow2(k - s) * factorial(k - s - 1) * factorial(k - w - 1)) * rho(s + w - k + 1);
    t[3] = sg * (pow2(s - w) - 1) * factorial(w - 1) /
           (pow2(s) * factorial(s - 1) * factorial(k - w - 1)) * rho(w - s + 1);
    return t;
}

BigRational rho_terms(const ParityPoint& p) {
    auto t = rho_each(p);
    return t[0] + t[1] + t[2] + t[3];
}

// floor division for the sign exponents, which may be negative
long half_floor(long e) { return (e >= 0) ? e / 2 : -((-e + 1) / 2); }

} // namespace

C1Parts c1_exact_parts(const ParityPoint& p, bool allow_boundary) {
    check_point(p);
    const bool inside = allow_boundary ? (p.s >= 2 && p.w >= 2 && p.s <= p.k - 2 && p.w <= p.k - 2)
                                       : p.in_F();
    if (!inside)
        throw DomainError("point outside F (2 <= s, w <= k-3)");
    const long k = p.k, s = p.s, w = p.w;
    const int sg = neg1_pow(k / 2) * neg1_pow(w);
    const BigRational half(1, 2);
    C1Parts parts;
    parts.rho_each = rho_each(p);
    parts.rho_terms = rho_terms(p);
    // Limits of Gamma(w)Gamma(1-w)cos(pi(s -+ w)/2) as w approaches an integer.
    parts.block_minus = BigRational(sg * neg1_pow(half_floor(s - w - 1))) *
                        hyp2f1_regularized_terminating(1 - s, k - s, k - s - w + 1, half) /
                        (pow2(k - s) * factorial(s - 1));
    parts.block_plus = BigRational(-sg * neg1_pow(half_floor(s + w - 1))) *
                       hyp2f1_regularized_terminating(s + 1 - k, s, 1 + s - w, half) /
                       (pow2(s) * factorial(k - s - 1));
    return parts;
}

C1Parts c1_exact_parts_product_form(const ParityPoint& p) {
    check_point(p);
    if (!p.in_F())
        throw DomainError("point outside F (2 <= s, w <= k-3)");
    const long k = p.k, s = p.s, w = p.w;
    const long N = k - 2 * w >= 0 ? k - 2 * w : 2 * w - k;
    const long J = (k + N - 2) / 2;
    const BigRational common =
        factorial(w - 1) / (2 * factorial(s - 1) * factorial(k - s - 1) * factorial((N + k) / 2 - 1));

    auto block = [&](long beta) {
        BigRational tot(0);
        for (long r = 0; r <= N; ++r) {
            BigRational prod(1);
            for (long j = 1; j <= J; ++j)
                prod *= frac(2 * j + beta - N + r, 2);
            tot += delta_sign(k - 2 * w, r) * binomial(N, r) * prod;
        }
        return tot;
    };

    C1Parts parts;
    parts.rho_each = rho_each(p);
    parts.rho_terms = rho_terms(p);
    parts.block_minus = BigRational(neg1_pow(half_floor(N + w - s - 1))) * common * block(-s);
    parts.block_plus = BigRational(neg1_pow(half_floor(N + w + s - 1))) * common * block(s - k);
    return parts;
}

BigRational c1_exact(const ParityPoint& p) {
    C1Parts c = c1_exact_parts(p);
    return c.rho_terms + c.block_minus + c.block_plus;
}

BigRational c1_exact_product_form(const ParityPoint& p) {
    C1Parts c = c1_exact_parts_product_form(p);
    return c.rho_terms + c.block_minus + c.block_plus;
}

BigRational inner_product_rational(const ParityPoint& p) {
    check_point(p);
    const long k = p.k, s = p.s, w = p.w;
    if (s < 2 || w < 2 || s > k - 2 || w > k - 2)
        throw DomainError("require 2 <= s, w <= k-2");
    const BigRational sg(neg1_pow(k / 2));
    if (w == k - 2)
        return sg * inner_product_rational({p.k, p.s, 2});
    if (s == k - 2) {
        // I(k-s, w) = (-1)^(k/2) 2^(k-2s) I(s, w) with s = 2
        return sg * pow2(k - 4) * inner_product_rational({p.k, 2, p.w});
    }
    return c1_exact(p) * pow2(s) * factorial(k - 2) / (pow2(k - 2) * factorial(w - 1));
}

} // namespace tdes
