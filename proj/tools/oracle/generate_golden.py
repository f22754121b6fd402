#!/usr/bin/env python3
"""Arbitrary-precision reference values for the zexplore engine.

Runs independently of the C++ code (mpmath only) and writes the files under
data/ that the test suites and `zexplore oracle-check` compare against.

    python3 tools/oracle/generate_golden.py [--out data]
"""
import argparse
import csv
import os

import mpmath as mp

mp.mp.dps = 40

# (sigma, rho) verification points: strip, critical line, reflected side and
# a few points beyond the strip up to sigma = 1.5 and rho = 100.
POINTS = [
    (0.5, 0.0), (0.25, 0.0), (1.5, 0.0), (2.0, 0.0), (0.5, 1.0),
    (0.1, 2.0), (0.9, 2.0), (0.3, 7.0), (0.7, 8.0), (0.5, 10.0),
    (0.5, 14.0), (0.5, 14.134725141734693), (1.0, 12.5), (0.05, 18.0), (0.75, 21.0),
    (0.5, 25.0), (1.25, 30.0), (0.2, 33.0), (0.6, 41.5), (0.5, 47.0),
    (0.95, 55.0), (0.4, 63.3), (0.5, 77.0), (0.8, 90.0), (0.5, 100.0),
]


def quantities(sigma, rho):
    s = mp.mpc(sigma, rho)
    yield "zeta", mp.zeta(s)
    yield "zeta_d1", mp.zeta(s, derivative=1)
    yield "zeta_d2", mp.zeta(s, derivative=2)
    yield "gamma", mp.gamma(s)
    yield "loggamma", mp.loggamma(s)
    yield "digamma", mp.digamma(s)


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-1, max_fixed=-1) if x != 0 else "0"


def write_golden(path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["sigma", "rho", "re", "im", "quantity"])
        for sigma, rho in POINTS:
            for name, value in quantities(sigma, rho):
                w.writerow([repr(sigma), repr(rho), fmt(mp.re(value)), fmt(mp.im(value)), name])


def zeta_on_line(rho):
    return mp.zeta(mp.mpc(0.5, rho))


def imag_half_zeros(lo, hi, step=mp.mpf("0.01")):
    """Roots of Im zeta(1/2+i rho) in [lo, hi] by scanning and bisection."""
    out = []
    t = mp.mpf(lo)
    prev = mp.im(zeta_on_line(t))
    while t < hi:
        t2 = t + step
        cur = mp.im(zeta_on_line(t2))
        if prev * cur < 0:
            root = mp.findroot(lambda r: mp.im(zeta_on_line(r)), (t, t2), solver="anderson")
            if abs(mp.re(zeta_on_line(root))) > mp.mpf("1e-6"):
                out.append(root)
        prev, t = cur, t2
    return out


def write_zeros(path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["kind", "rho0"])
        n = 1
        while True:
            z = mp.im(mp.zetazero(n))
            if z > 100:
                break
            w.writerow(["FULL", fmt(z)])
            n += 1
        for r in imag_half_zeros(0.5, 20):
            w.writerow(["IMAG_HALF", fmt(r)])


def zeta_c(s, sigma0=mp.mpf("0.75"), rho0=mp.mpf(12)):
    s0 = mp.mpc(sigma0, rho0)
    w = 1
    for sk in (s0, -s0, mp.conj(s0), -mp.conj(s0)):
        w *= mp.sin(mp.pi * (s - sk))
    return mp.zeta(s) * w / (mp.cosh(mp.pi * rho0) ** 2 - mp.cos(mp.pi * sigma0) ** 2) ** 2


def f_rho_denominator(rho):
    c = mp.cosh(mp.pi * rho)
    return 2 * mp.log(2 * mp.pi) * c - 2 * mp.re(mp.digamma(mp.mpc(0.5, rho))) * c + mp.pi


def derived_values():
    s = mp.mpc(0.5, 6)
    lg = mp.loggamma(s)
    yield "loggamma_re(0.5+6i)", mp.re(lg)
    yield "loggamma_im(0.5+6i)", mp.im(lg)
    yield "digamma_re(0.3+50i)", mp.re(mp.digamma(mp.mpc(0.3, 50)))
    yield "digamma_re(0.5+50i)", mp.re(mp.digamma(mp.mpc(0.5, 50)))
    yield "digamma_im(1+50i)", mp.im(mp.digamma(mp.mpc(1, 50)))
    # p1 = 8 c0 Im psi - 2 pi sinh(pi rho)
    sig, rho = mp.mpf("0.3"), mp.mpf(50)
    c0 = (mp.cos(mp.pi * sig) + mp.cosh(mp.pi * rho)) / 2
    yield "p1(0.3+50i)", 8 * c0 * mp.im(mp.digamma(mp.mpc(sig, rho))) - 2 * mp.pi * mp.sinh(mp.pi * rho)
    yield "f_s(2)", mp.log(2 * mp.pi) - (1 - mp.euler)
    yield "rho_s", mp.findroot(f_rho_denominator, 6.28)
    yield "fig4_ratio(0.1)", abs(zeta_c(mp.mpc(0.1, 12))) / abs(zeta_c(mp.mpc(0.9, 12)))
    d = mp.diff(zeta_c, mp.mpc(0.25, 12))
    dt = mp.diff(zeta_c, mp.mpc(0.75, 12))
    yield "limit_ratio(0.25+12i)", abs(d) ** 2 / abs(dt) ** 2
    yield "zcrat_abs(0.25+9i)", abs(zeta_c(mp.mpc(0.25, 9)) / zeta_c(mp.mpc(0.75, -9)))


def write_derived(path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "value"])
        for name, value in derived_values():
            w.writerow([name, fmt(value)])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    write_golden(os.path.join(args.out, "golden_oracle.csv"))
    write_zeros(os.path.join(args.out, "oracle_zeros.csv"))
    write_derived(os.path.join(args.out, "oracle_derived.csv"))


if __name__ == "__main__":
    main()
