"""Independent reference values for the C++ tests.

Special functions come from mpmath at 40 digits. Exact c(1) values come from
a Fraction implementation of the closed form and are cross-checked against the
spectral side L*(Delta,12-s;1/2) L*(Delta,12-w) / (prefactor <Delta,Delta>)
computed with mpmath quadrature. Writes reference_values.hpp next to this file.
"""

from fractions import Fraction as Fr
from math import comb, factorial
from pathlib import Path

from mpmath import mp, mpc, mpf

mp.dps = 40
HALF = Fr(1, 2)


def bernoulli(n):
    b = [Fr(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b[n]


def rho(n):
    if n < 0:
        return Fr(0)
    m = n // 2
    return (-1) ** (m + 1) * bernoulli(n) / factorial(n)


def p2(e):
    return Fr(2) ** e


def poch(x, j):
    p = Fr(1)
    for i in range(j):
        p *= x + i
    return p


def rgamma_int(n):
    return Fr(0) if n <= 0 else Fr(1, factorial(n - 1))


def f2reg(a, b, c, z):
    return sum(poch(a, j) * poch(b, j) * z**j * rgamma_int(c + j) / factorial(j) for j in range(-a + 1))


def sign_half(e):
    return 1 if (e // 2) % 2 == 0 else -1


def c1_rational(k, s, w):
    sg = (-1) ** (k // 2)
    g = lambda n: factorial(n - 1)
    t = (p2(s + w - k) - 1) / (p2(s) * g(s)) * rho(k - w - s + 1)
    t += sg * (p2(w - s) - 1) / (p2(k - s) * g(k - s)) * rho(s - w + 1)
    t += (p2(k - s - w) - 1) * g(w) / (p2(k - s) * g(k - s) * g(k - w)) * rho(s + w - k + 1)
    t += sg * (p2(s - w) - 1) * g(w) / (p2(s) * g(s) * g(k - w)) * rho(w - s + 1)
    t += sg * (-1) ** w * sign_half(s - w - 1) * f2reg(1 - s, k - s, k - s - w + 1, HALF) / (p2(k - s) * g(s))
    t -= sg * (-1) ** w * sign_half(s + w - 1) * f2reg(s + 1 - k, s, 1 + s - w, HALF) / (p2(s) * g(k - s))
    return t


def tau_pentagonal(N):
    # prod (1-q^n) by Euler's pentagonal theorem, raised to the 24th power.
    e = [0] * N
    j = 0
    while True:
        done = True
        for m in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2) if j else (0,):
            if m < N:
                e[m] += (-1) ** j
                done = False
        if done and j:
            break
        j += 1
    p = [1] + [0] * (N - 1)
    for _ in range(24):
        p = [sum(p[i] * e[n - i] for i in range(n + 1)) for n in range(N)]
    return [0] + p[: N - 1]  # tau(n) = coefficient of q^(n-1)


TAU = tau_pentagonal(80)
PETERSSON = mpf("1.035362056804320922347817e-6")


def delta(z):
    q = mp.exp(2j * mp.pi * z)
    return mp.fsum(TAU[n] * q**n for n in range(1, len(TAU)))


def lstar(s):
    return mp.quad(lambda y: delta(1j * y).real * (y ** (s - 1) + y ** (12 - s - 1)), [1, 2, 4, mp.inf])


def lstar_tw(s):
    return mp.quad(lambda y: delta(0.5 + 1j * y).real * (y ** (s - 1) + mpf(2) ** (12 - 2 * s) * y ** (11 - s)),
                   [0.5, 1, 2, 4, mp.inf])


def prefactor(k, s, w):
    return mp.gamma(s) * mp.gamma(k - s) * mp.gamma(k - w) / (mpf(2) ** (2 - s - w) * mp.pi ** (k + 1 - w) * mp.gamma(k - 1))


def h(x):
    return mp.gamma(x) * mp.cospi(x / 2) * mp.zeta(x, 0.5)


def continuation(k, s, w):
    sg = (-1) ** (k // 2)
    E = 2 * (2 * mp.pi) ** (k - w)
    refl = mp.pi / mp.sinpi(w)
    t = [
        E * mpf(2) ** (-s) / mp.gamma(s) * h(s + w - k),
        sg * E * mpf(2) ** (s - k) / mp.gamma(k - s) * h(w - s),
        E * mp.gamma(w) * mpf(2) ** (s - k) / (mp.gamma(k - s) * mp.gamma(k - w)) * h(k - s - w),
        sg * E * mp.gamma(w) * mpf(2) ** (-s) / (mp.gamma(s) * mp.gamma(k - w)) * h(s - w),
        sg * E * refl * mp.cospi((s - w) / 2) * mpf(2) ** (s - k) / mp.gamma(s)
        * mp.hyp2f1(1 - s, k - s, k - s - w + 1, 0.5) / mp.gamma(k - s - w + 1),
        sg * E * refl * mp.cospi((s + w) / 2) * mpf(2) ** (-s) / mp.gamma(k - s)
        * mp.hyp2f1(s + 1 - k, s, 1 + s - w, 0.5) / mp.gamma(1 + s - w),
    ]
    return mp.fsum(t)


def cnum(z):
    z = mpc(z)
    return f"{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}}"


def main():
    lines = ["#pragma once", "", "// Generated by tests/oracles/gen_reference.py; do not edit.", "",
             "#include <complex>", "#include <cstdint>", "", "namespace ref {", "",
             "using C = std::complex<double>;", ""]

    def add(name, value):
        lines.append(f"inline const C {name}{cnum(value)};")

    add("gamma_2p5_1", mp.gamma(mpc(2.5, 1)))
    add("gamma_m2p7_1p1", mp.gamma(mpc(-2.7, 1.1)))
    add("zeta_2p5_3", mp.zeta(mpc(2.5, 3)))
    add("zeta_m3p5_2", mp.zeta(mpc(-3.5, 2)))
    add("zeta_0p5_14", mp.zeta(mpc(0.5, 14)))
    add("hurwitz_3_1_0p3", mp.zeta(mpc(3, 1), 0.3))
    add("hurwitz_m1p5_0p5_0p7", mp.zeta(mpc(-1.5, 0.5), 0.7))
    add("hurwitz_0p5_1p9", mp.zeta(0.5, 1.9))
    add("periodic_2p5_0p7_third", mp.polylog(mpc(2.5, 0.7), mp.expjpi(mpf(2) / 3)))
    add("periodic_1p2_quarter", mp.polylog(1.2, mp.expjpi(0.5)))
    add("periodic_0p5_third", mp.polylog(0.5, mp.expjpi(mpf(2) / 3)))
    add("h_2p3_0p4", h(mpc(2.3, 0.4)))
    add("h_m3p5", h(mpf(-3.5)))
    for name, a, z in [("k1f1_3_m1p4pi", 3, mpc(0, -1.4) * mp.pi), ("k1f1_4p5_m8", 4.5, mpc(0, -8)),
                       ("k1f1_2p5_1_5", mpc(2.5, 1), mpc(0, 5)), ("k1f1_5_30", 5, mpc(0, 30)),
                       ("k1f1_4p5_m200", 4.5, mpc(0, -200)), ("k1f1_3p3_0p2_m45", mpc(3.3, 0.2), mpc(0, -45))]:
        add(name, mp.gamma(a) * mp.gamma(12 - a) / mp.gamma(12) * mp.hyp1f1(a, 12, z))
    add("f2reg_a", mp.hyp2f1(mpc(-3.5, 0.2), mpc(6.5, -0.2), mpc(4.7, 0.3), 0.5) / mp.gamma(mpc(4.7, 0.3)))
    add("f2reg_b", mp.hyp2f1(-4.5, 4.5, -1.3, 0.5) / mp.gamma(-1.3))
    add("prefactor_12_4p5_2", prefactor(12, mpf(4.5), mpf(2)))
    add("continuation_12_4p5_2p2", continuation(12, mpf(4.5), mpf(2.2)))
    add("continuation_12_5p5i_3p3i", continuation(12, mpc(5.5, 0.5), mpc(3.3, -0.2)))
    add("continuation_16_7p25_4p6", continuation(16, mpf(7.25), mpf(4.6)))
    lines.append("")

    # Exact c(1) values, confirmed against the spectral side.
    lines.append("struct ExactC1 { int k, s, w; const char* q; };")
    lines.append("inline const ExactC1 c1_exact[] = {")
    for k, s, w in [(12, 5, 2), (12, 6, 3), (12, 7, 2), (12, 2, 5), (12, 3, 4), (12, 9, 8), (14, 7, 4),
                    (16, 7, 4), (18, 6, 9), (20, 11, 6)]:
        q = c1_rational(k, s, w)
        if k == 12:
            c1 = mpf(q.numerator) / q.denominator * (2 * mp.pi) ** (k + 1 - w) / 2
            ratio = lstar_tw(12 - s) * lstar(12 - w) / (prefactor(k, s, w) * c1)
            assert abs(ratio / PETERSSON - 1) < mpf(10) ** -15, (k, s, w, ratio)
        lines.append(f'    {{{k}, {s}, {w}, "{q}"}},')
    lines.append("};")
    lines.append(f'inline const char* petersson_delta = "{mp.nstr(PETERSSON, 22)}";')
    lines.append(f"inline const C completed_L_delta_6{cnum(lstar(6))};")
    lines.append(f"inline const C twisted_L_delta_5{cnum(lstar_tw(5))};")
    lines.append("inline const std::int64_t tau[] = {" + ", ".join(str(t) for t in TAU[:31]) + "};")
    lines += ["", "} // namespace ref", ""]
    Path(__file__).with_name("reference_values.hpp").write_text("\n".join(lines))


if __name__ == "__main__":
    main()
