#!/usr/bin/env python3
"""High-precision Euler-angle quadrature for direction-cosine averages.

Independent of the C++ library: integrates the z-y-z rotation matrix
monomial with periodic rules in alpha/gamma and Gauss-Legendre in cos(beta),
at 60 digits, then recovers the rational with a bounded denominator.

Usage: euler_quadrature.py "[[Q,R,S],[T,U,V],[W,X,Y]]" ...
"""
import json
import sys
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60


def euler(a, b, g):
    ca, sa, cb, sb, cg, sg = mp.cos(a), mp.sin(a), mp.cos(b), mp.sin(b), mp.cos(g), mp.sin(g)
    return [
        [-sa * sg + ca * cb * cg, -cg * sa - ca * cb * sg, ca * sb],
        [ca * sg + cb * cg * sa, ca * cg - cb * sa * sg, sa * sb],
        [-cg * sb, sb * sg, cb],
    ]


def average(chi):
    n = sum(map(sum, chi))
    m = n + 2
    xs, ws = legendre(m)
    total = mp.mpf(0)
    for i in range(m):
        a = 2 * mp.pi * i / m
        for x, w in zip(xs, ws):
            b = mp.acos(x)
            for k in range(m):
                g = 2 * mp.pi * k / m
                mat = euler(a, b, g)
                p = mp.mpf(1)
                for r in range(3):
                    for c in range(3):
                        if chi[r][c]:
                            p *= mat[r][c] ** chi[r][c]
                total += w * p
    return total / (2 * m * m)


def legendre(m):
    xs, ws = [], []
    for i in range(1, m + 1):
        x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (m + mp.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = mp.mpf(1), x
            for k in range(2, m + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = m * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-55):
                break
        xs.append(x)
        ws.append(2 / ((1 - x * x) * dp * dp))
    return xs, ws


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        chi = json.loads(arg)
        v = average(chi)
        f = Fraction(str(mp.nstr(v, 50))).limit_denominator(10**12)
        print(arg, mp.nstr(v, 25), f)
