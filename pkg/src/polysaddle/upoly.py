"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a tuple of Fraction coefficients, lowest degree first,
with no trailing zeros.  The zero polynomial is the empty tuple.  This
layer backs rational root finding, square-free decomposition and the
content/primitive-part splitting used by the bivariate ring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

UPoly = tuple[Fraction, ...]

ZERO: UPoly = ()
ONE: UPoly = (Fraction(1),)


def make(coeffs: Iterable[Fraction | int]) -> UPoly:
    """Normalize a coefficient sequence (lowest degree first) to a UPoly."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def const(c: Fraction | int) -> UPoly:
    return make([c])


def degree(f: UPoly) -> int:
    """Degree; the zero polynomial has degree -1."""
    return len(f) - 1


def is_zero(f: UPoly) -> bool:
    return not f


def is_const(f: UPoly) -> bool:
    return len(f) <= 1


def lc(f: UPoly) -> Fraction:
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def add(f: UPoly, g: UPoly) -> UPoly:
    n = max(len(f), len(g))
    return make([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f: UPoly) -> UPoly:
    return tuple(-c for c in f)


def sub(f: UPoly, g: UPoly) -> UPoly:
    return add(f, neg(g))


def mul(f: UPoly, g: UPoly) -> UPoly:
    if not f or not g:
        return ZERO
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return make(out)

def scale(f: UPoly, c: Fraction) -> UPoly:
    if c == 0:
        return ZERO
    return tuple(a * c for a in f)


def divmod_exact_field(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    """Quotient and remainder in Q[t]; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    glc = g[-1]
    dg = len(g) - 1
    while len(r) >= len(g):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(g):
            break
        c = r[-1] / glc
        k = len(r) - 1 - dg
        q[k] = c
        for j, b in enumerate(g):
            r[k + j] -= c * b
        r.pop()
    return make(q), make(r)


def rem(f: UPoly, g: UPoly) -> UPoly:
    return divmod_exact_field(f, g)[1]


def divides(g: UPoly, f: UPoly) -> bool:
    """True iff g divides f (g nonzero)."""
    if not g:
        return not f
    return is_zero(rem(f, g))


def deriv(f: UPoly) -> UPoly:
    return make([f[i] * i for i in range(1, len(f))])


def evaluate(f: UPoly, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * t + c
    return acc


def monic(f: UPoly) -> UPoly:
    if not f:
        return ZERO
    return scale(f, 1 / f[-1])


def gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd in Q[t]; gcd(0, 0) = 0."""
    a, b = f, g
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Extended gcd: (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_exact_field(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0:
        c = 1 / r0[-1]
        r0, s0, t0 = scale(r0, c), scale(s0, c), scale(t0, c)
    return r0, s0, t0


def invert_mod(a: UPoly, f: UPoly) -> UPoly:
    """Inverse of a modulo f; requires gcd(a, f) = 1."""
    g, s, _ = xgcd(a, f)
    if degree(g) != 0:
        raise ArithmeticError("not invertible: arguments share a factor")
    return rem(s, f)


def gcd_many(polys: Sequence[UPoly]) -> UPoly:
    acc: UPoly = ZERO
    for p in polys:
        acc = gcd(acc, p)
        if is_const(acc) and acc:
            return ONE
    return acc


def content_int(f: UPoly) -> Fraction:
    """Positive rational c with f/c integer-coprime; 0 for the zero polynomial."""
    if not f:
        return Fraction(0)
    num = 0
    den = 1
    for c in f:
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def primitive(f: UPoly) -> UPoly:
    """Integer-coprime coefficients, positive leading coefficient."""
    if not f:
        return ZERO
    c = content_int(f)
    if f[-1] < 0:
        c = -c
    return scale(f, 1 / c)


def squarefree_part(f: UPoly) -> UPoly:
    """Product of the distinct irreducible factors of f, monic."""
    if is_const(f):
        return monic(f)
    g = gcd(f, deriv(f))
    return monic(divmod_exact_field(f, g)[0])


def squarefree_decomposition(f: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: [(g_i, i)] with f = lc * prod g_i^i, g_i squarefree, monic."""
    if is_const(f):
        return []
    f = monic(f)
    out: list[tuple[UPoly, int]] = []
    df = deriv(f)
    a = gcd(f, df)
    b = divmod_exact_field(f, a)[0]
    c = divmod_exact_field(df, a)[0]
    d = sub(c, deriv(b))
    i = 1
    while not is_const(b):
        g = gcd(b, d)
        if degree(g) > 0:
            out.append((monic(g), i))
        b2 = divmod_exact_field(b, g)[0]
        c2 = divmod_exact_field(d, g)[0]
        d = sub(c2, deriv(b2))
        b = b2
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: UPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, each verified by exact evaluation.

    Candidates come from the rational-root theorem after clearing denominators;
    multiplicity is established by repeated exact deflation.
    """
    if not f:
        raise ValueError("rational_roots of the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    # strip the root at 0
    v = 0
    while v < len(f) and f[v] == 0:
        v += 1
    if v:
        roots.append((Fraction(0), v))
        f = f[v:]
    if is_const(f):
        return roots
    den_lcm = 1
    for c in f:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    zf = [c * den_lcm for c in f]  # integer coefficients now
    a0 = int(zf[0])
    an = int(zf[-1])
    seen = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            if math.gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if evaluate(f, cand) != 0:
                    continue
                m = 0
                g = f
                lin = make([-cand, 1])
                while True:
                    q2, r2 = divmod_exact_field(g, lin)
                    if not is_zero(r2):
                        break
                    m += 1
                    g = q2
                roots.append((cand, m))
    roots.sort(key=lambda t: t[0])
    return roots


def shift_out_rational_roots(f: UPoly) -> UPoly:
    """Divide out every rational linear factor, returning the rootless cofactor."""
    g = f
    for r, m in rational_roots(f):
        lin = make([-r, 1])
        for _ in range(m):
            g = divmod_exact_field(g, lin)[0]
    return g


def to_string(f: UPoly, var: str = "t") -> str:
    if not f:
        return "0"
    parts: list[str] = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
