#!/usr/bin/env python3
"""Writes matrices_d{2..5}.txt from the explicit block forms of the gamma and
spin matrices, without deriving S_ij from the gammas."""

from fractions import Fraction
from pathlib import Path

I = complex(0, 1)


def m(rows):
    return [[complex(x) for x in r] for r in rows]


ID2 = m([[1, 0], [0, 1]])
ZERO2 = m([[0, 0], [0, 0]])
SIGMA = [m([[0, 1], [1, 0]]), m([[0, -I], [I, 0]]), m([[1, 0], [0, -1]])]


def scale(k, a):
    return [[k * x for x in r] for r in a]


def block(a, b, c, d):
    return [ra + rb for ra, rb in zip(a, b)] + [rc + rd for rc, rd in zip(c, d)]


def eps(i, j, k):
    return {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (3, 2, 1): -1, (1, 3, 2): -1, (2, 1, 3): -1}.get((i, j, k), 0)


def gammas(d):
    if d in (2, 3):
        return SIGMA[:d]
    g = [block(ZERO2, scale(I, s), scale(-I, s), ZERO2) for s in SIGMA]
    g.append(block(ZERO2, ID2, ID2, ZERO2))
    if d == 5:
        g.append(block(ID2, ZERO2, ZERO2, scale(-1, ID2)))
    return g


def spins(d):
    half = Fraction(1, 2)
    s = {}
    if d == 2:
        s[1, 2] = scale(half, SIGMA[2])
        return s
    for i in (1, 2, 3):
        for j in range(i + 1, 4):
            k = 6 - i - j
            e = eps(i, j, k)
            sk = SIGMA[k - 1]
            s[i, j] = scale(half * e, sk if d == 3 else block(sk, ZERO2, ZERO2, sk))
    if d >= 4:
        for i in (1, 2, 3):
            si = SIGMA[i - 1]
            s[i, 4] = scale(half, block(si, ZERO2, ZERO2, scale(-1, si)))
    if d == 5:
        for i in (1, 2, 3):
            si = SIGMA[i - 1]
            s[i, 5] = scale(-half, block(ZERO2, si, si, ZERO2))
        s[4, 5] = scale(half * I, block(ZERO2, ID2, scale(-1, ID2), ZERO2))
    return s


def frac(x):
    f = Fraction(x).limit_denominator(64)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def entry(z):
    re, im = frac(z.real), frac(z.imag)
    sign = "-" if im.startswith("-") else "+"
    return f"{re}{sign}{im.lstrip('-')}i"


def rows(a):
    return "".join(" ".join(entry(x) for x in r) + "\n" for r in a)


def render(d):
    out = []
    for i, g in enumerate(gammas(d), 1):
        out.append(f"gamma {d} {i}\n{rows(g)}\n")
    for (i, j), s in sorted(spins(d).items()):
        out.append(f"spin {d} {i} {j}\n{rows(s)}\n")
    return "".join(out)


if __name__ == "__main__":
    here = Path(__file__).resolve().parent
    for d in range(2, 6):
        (here / f"matrices_d{d}.txt").write_text(render(d))
