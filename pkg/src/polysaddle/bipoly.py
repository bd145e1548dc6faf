"""Sparse exact bivariate polynomial ring Q[x,y].

A polynomial is a dict mapping exponent pairs (i, j) to nonzero Fraction
coefficients and represents sum c_ij x^i y^j; the zero polynomial is the
empty dict.  Callers must treat values as immutable.  The monomial order
used for leading terms and canonical printing is graded lex with x > y:
compare total degree first, then the x exponent.

GCDs run a subresultant polynomial remainder sequence over Q[x][y] after
content/primitive splitting; resultants are Sylvester determinants
evaluated by fraction-free Bareiss elimination.  Both choices keep every
intermediate value exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .upoly import UPoly

BiPoly = dict[tuple[int, int], Fraction]

ZERO: BiPoly = {}
ONE: BiPoly = {(0, 0): Fraction(1)}
X: BiPoly = {(1, 0): Fraction(1)}
Y: BiPoly = {(0, 1): Fraction(1)}


def make(terms: dict[tuple[int, int], Fraction | int]) -> BiPoly:
    return {e: Fraction(c) for e, c in terms.items() if c != 0}


def const(c: Fraction | int) -> BiPoly:
    c = Fraction(c)
    return {(0, 0): c} if c else {}


def is_zero(f: BiPoly) -> bool:
    return not f


def is_const(f: BiPoly) -> bool:
    return all(e == (0, 0) for e in f)


def const_value(f: BiPoly) -> Fraction:
    if not is_const(f):
        raise ValueError("not a constant polynomial")
    return f.get((0, 0), Fraction(0))


def total_degree(f: BiPoly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((i + j for i, j in f), default=-1)


def deg_x(f: BiPoly) -> int:
    return max((i for i, _ in f), default=-1)


def deg_y(f: BiPoly) -> int:
    return max((j for _, j in f), default=-1)


def add(f: BiPoly, g: BiPoly) -> BiPoly:
    out = dict(f)
    for e, c in g.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def neg(f: BiPoly) -> BiPoly:
    return {e: -c for e, c in f.items()}


def sub(f: BiPoly, g: BiPoly) -> BiPoly:
    return add(f, neg(g))


def mul(f: BiPoly, g: BiPoly) -> BiPoly:
    out: BiPoly = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            e = (i1 + i2, j1 + j2)
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def scalar_mul(c: Fraction | int, f: BiPoly) -> BiPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {e: c * a for e, a in f.items()}


def power(f: BiPoly, n: int) -> BiPoly:
    if n < 0:
        raise ValueError("exponent must be a natural number")
    out = ONE
    base = f
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base) if n > 1 else base
        n >>= 1
    return out


def partial(f: BiPoly, var: str) -> BiPoly:
    """Formal partial derivative with respect to "x" or "y"."""
    if var == "x":
        return {(i - 1, j): c * i for (i, j), c in f.items() if i}
    if var == "y":
        return {(i, j - 1): c * j for (i, j), c in f.items() if j}
    raise ValueError(f"unknown variable {var!r}")


def evaluate(f: BiPoly, x0: Fraction, y0: Fraction) -> Fraction:
    if not f:
        return Fraction(0)
    xp = [Fraction(1)] * (deg_x(f) + 1)
    for i in range(1, len(xp)):
        xp[i] = xp[i - 1] * x0
    yp = [Fraction(1)] * (deg_y(f) + 1)
    for j in range(1, len(yp)):
        yp[j] = yp[j - 1] * y0
    return sum((c * xp[i] * yp[j] for (i, j), c in f.items()), Fraction(0))


def swap_vars(f: BiPoly) -> BiPoly:
    return {(j, i): c for (i, j), c in f.items()}


# graded lex with x > y: higher total degree wins, then higher x exponent
def _ordkey(e: tuple[int, int]) -> tuple[int, int]:
    return (e[0] + e[1], e[0])


def leading_term(f: BiPoly) -> tuple[tuple[int, int], Fraction]:
    if not f:
        raise ValueError("zero polynomial has no leading term")
    e = max(f, key=_ordkey)
    return e, f[e]


def leading_form(f: BiPoly) -> BiPoly:
    """Homogeneous part of top total degree."""
    if not f:
        raise ValueError("leading_form of the zero polynomial")
    d = total_degree(f)
    return {e: c for e, c in f.items() if e[0] + e[1] == d}


class ExactDivisionError(ArithmeticError):
    """Raised when exact_div is applied to a non-multiple; carries the
    nonzero remainder as the witness."""

    def __init__(self, remainder: BiPoly):
        self.remainder = remainder
        super().__init__(f"not divisible; remainder {to_string(remainder)}")


def divmod_lt(f: BiPoly, g: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Single-divisor division by leading terms under graded lex.

    Returns (q, r) with f = q*g + r and no term of r divisible by the
    leading term of g; r = 0 exactly when g divides f.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    (gi, gj), gc = leading_term(g)
    q: BiPoly = {}
    r: BiPoly = {}
    work = dict(f)
    while work:
        e = max(work, key=_ordkey)
        c = work[e]
        i, j = e
        if i >= gi and j >= gj:
            me = (i - gi, j - gj)
            mc = c / gc
            q[me] = q.get(me, Fraction(0)) + mc
            for (bi, bj), bc in g.items():
                te = (bi + me[0], bj + me[1])
                s = work.get(te, Fraction(0)) - mc * bc
                if s:
                    work[te] = s
                else:
                    work.pop(te, None)
        else:
            r[e] = c
            del work[e]
    return {e: c for e, c in q.items() if c}, r


def exact_div(f: BiPoly, g: BiPoly) -> BiPoly:
    """Quotient f/g when g divides f; otherwise ExactDivisionError with the
    remainder witness."""
    q, r = divmod_lt(f, g)
    if r:
        raise ExactDivisionError(r)
    return q


def divides(g: BiPoly, f: BiPoly) -> bool:
    if not g:
        return not f
    return not divmod_lt(f, g)[1]


# ---------------------------------------------------------------------------
# Content/primitive machinery over Q[x][y] and the subresultant gcd.

def coeffs_wrt_y(f: BiPoly) -> list[UPoly]:
    """Coefficients of y^0, y^1, ... as univariate polynomials in x."""
    if not f:
        return []
    out: list[list[Fraction]] = [[] for _ in range(deg_y(f) + 1)]
    for (i, j), c in f.items():
        row = out[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c
    return [upoly.make(row) for row in out]


def from_coeffs_y(coeffs: list[UPoly]) -> BiPoly:
    out: BiPoly = {}
    for j, p in enumerate(coeffs):
        for i, c in enumerate(p):
            if c:
                out[(i, j)] = c
    return out


def from_upoly_x(p: UPoly) -> BiPoly:
    return {(i, 0): c for i, c in enumerate(p) if c}


def from_upoly_y(p: UPoly) -> BiPoly:
    return {(0, j): c for j, c in enumerate(p) if c}


def content_y(f: BiPoly) -> UPoly:
    """Monic gcd in Q[x] of the y-coefficients; zero polynomial for f = 0."""
    return upoly.gcd_many(coeffs_wrt_y(f))


def _div_by_xpoly(f: BiPoly, d: UPoly) -> BiPoly:
    return from_coeffs_y([upoly.divmod_exact_field(p, d)[0] for p in coeffs_wrt_y(f)])


def normalize(f: BiPoly) -> BiPoly:
    """Primitive representative: coprime integer coefficients and positive
    leading coefficient under graded lex."""
    if not f:
        return {}
    num = 0
    den = 1
    for c in f.values():
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    scale = Fraction(den, num)
    if leading_term(f)[1] < 0:
        scale = -scale
    return scalar_mul(scale, f)


def _lc_y(f: BiPoly) -> BiPoly:
    d = deg_y(f)
    return {(i, 0): c for (i, j), c in f.items() if j == d}


def _ypow(n: int) -> BiPoly:
    return {(0, n): Fraction(1)}


def _prem_y(a: BiPoly, b: BiPoly) -> BiPoly:
    """Pseudo-remainder of a by b with respect to y: lc_y(b)^(da-db+1) * a
    reduced by b, computed fraction-free."""
    da, db = deg_y(a), deg_y(b)
    lb = _lc_y(b)
    e = da - db + 1
    r = a
    while r and deg_y(r) >= db:
        lr = _lc_y(r)
        r = sub(mul(lb, r), mul(mul(lr, _ypow(deg_y(r) - db)), b))
        e -= 1
    if e > 0:
        r = mul(power(lb, e), r)
    return r


def _pp_gcd_y(a: BiPoly, b: BiPoly) -> BiPoly:
    # subresultant PRS; a, b primitive wrt y with deg_y >= 1
    if deg_y(a) < deg_y(b):
        a, b = b, a
    g = ONE
    h = ONE
    while True:
        d = deg_y(a) - deg_y(b)
        r = _prem_y(a, b)
        if not r:
            break
        if deg_y(r) == 0:
            return ONE
        divisor = mul(g, power(h, d))
        a, b = b, exact_div(r, divisor)
        g = _lc_y(a)
        if d == 1:
            h = g
        elif d > 1:
            h = exact_div(power(g, d), power(h, d - 1))
    cb = content_y(b)
    return _div_by_xpoly(b, cb)


def gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """A gcd in Q[x,y], primitive with positive graded-lex leading
    coefficient.  gcd(f, 0) = normalize(f); gcd(0, 0) is an error."""
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    if not f:
        return normalize(g)
    if not g:
        return normalize(f)
    cf, cg = content_y(f), content_y(g)
    cont = upoly.gcd(cf, cg)
    fp, gp = _div_by_xpoly(f, cf), _div_by_xpoly(g, cg)
    if deg_y(fp) == 0 or deg_y(gp) == 0:
        pp = ONE
    else:
        pp = _pp_gcd_y(fp, gp)
    return normalize(mul(from_upoly_x(cont), pp))


def gcd_many(polys: list[BiPoly]) -> BiPoly:
    nz = [p for p in polys if p]
    if not nz:
        raise ValueError("gcd of all-zero list is undefined")
    acc = nz[0]
    for p in nz[1:]:
        acc = gcd(acc, p)
        if is_const(acc):
            break
    return normalize(acc)


# ---------------------------------------------------------------------------
# Resultants via Sylvester matrices with Bareiss elimination.

def det_bareiss(mat: list[list[BiPoly]]) -> BiPoly:
    """Determinant of a square matrix of polynomials, fraction-free.

    Every division in the Bareiss recurrence is exact (entries stay minors
    of the input, up to the sign tracked across row swaps).
    """
    n = len(mat)
    if n == 0:
        return ONE
    m = [row[:] for row in mat]
    sign = 1
    prev: BiPoly = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return {}
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]))
                m[i][j] = exact_div(num, prev)
            m[i][k] = {}
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return neg(d) if sign < 0 else d


def sylvester_y(f: BiPoly, g: BiPoly) -> list[list[BiPoly]]:
    """Sylvester matrix of f, g with respect to y; f's coefficients occupy
    the top rows."""
    m, n = deg_y(f), deg_y(g)
    fc = coeffs_wrt_y(f)
    gc = coeffs_wrt_y(g)
    frow = [from_upoly_x(fc[m - k]) if m - k < len(fc) else {} for k in range(m + 1)]
    grow = [from_upoly_x(gc[n - k]) if n - k < len(gc) else {} for k in range(n + 1)]
    size = m + n
    mat: list[list[BiPoly]] = []
    for i in range(n):
        mat.append([{}] * i + frow + [{}] * (size - m - 1 - i))
    for i in range(m):
        mat.append([{}] * i + grow + [{}] * (size - n - 1 - i))
    return mat


def resultant(f: BiPoly, g: BiPoly, var: str) -> BiPoly:
    """Resultant with respect to var; a polynomial in the other variable.

    Vanishes identically exactly when f and g share a factor of positive
    degree in var.  Both inputs must have positive degree in var; callers
    handle degenerate degree-0 operands directly.
    """
    if var == "x":
        return swap_vars(resultant(swap_vars(f), swap_vars(g), "y"))
    if var != "y":
        raise ValueError(f"unknown variable {var!r}")
    if not f or not g:
        raise ValueError("resultant of the zero polynomial")
    if deg_y(f) < 1 or deg_y(g) < 1:
        raise ValueError("resultant requires positive degree in the eliminated variable")
    return det_bareiss(sylvester_y(f, g))


def is_squarefree(f: BiPoly) -> bool:
    """True iff f has no repeated factor over C.

    Criterion: gcd(f, f_x, f_y) is constant.  In characteristic zero a
    repeated factor divides both partials, and conversely a nonconstant
    common divisor of f and its gradient forces a repeated factor; working
    over Q decides the question over C since gcds are field-stable.
    """
    if not f:
        raise ValueError("is_squarefree of the zero polynomial")
    if is_const(f):
        return True
    fx = partial(f, "x")
    fy = partial(f, "y")
    g = f
    if fx:
        g = gcd(g, fx)
    if fy:
        g = gcd(g, fy)
    if not fx and not fy:
        return True  # unreachable for nonconstant f
    return is_const(g)


# ---------------------------------------------------------------------------
# Parsing and printing.

class ParseError(ValueError):
    """Syntax error with a 1-based column position."""

    def __init__(self, msg: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} (column {pos})")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    def _ws(self) -> None:
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._ws()
        return self.src[self.i] if self.i < len(self.src) else ""

    def fail(self, msg: str) -> None:
        raise ParseError(msg, self.i + 1)

    def _nat(self) -> int:
        self._ws()
        start = self.i
        while self.i < len(self.src) and self.src[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.fail("expected a natural number")
        return int(self.src[start:self.i])

    def _rational(self) -> Fraction:
        num = self._nat()
        if self.peek() == "/":
            self.i += 1
            pos = self.i
            den = self._nat()
            if den == 0:
                raise ParseError("zero denominator", pos + 1)
            return Fraction(num, den)
        return Fraction(num)

    def expr(self) -> BiPoly:
        acc = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.i += 1
                acc = add(acc, self.term())
            elif ch == "-":
                self.i += 1
                acc = sub(acc, self.term())
            else:
                return acc

    def term(self) -> BiPoly:
        acc = self.factor()
        while self.peek() == "*":
            self.i += 1
            acc = mul(acc, self.factor())
        return acc

    def factor(self) -> BiPoly:
        # unary minus binds looser than ^, so -x^2 means -(x^2)
        if self.peek() == "-":
            self.i += 1
            return neg(self.factor())
        b = self.base()
        if self.peek() == "^":
            self.i += 1
            if not self.peek().isdigit():
                self.fail("exponent must be a natural number")
            return power(b, self._nat())
        return b

    def base(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.i += 1
            inner = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.i += 1
            return inner
        if ch == "x":
            self.i += 1
            return dict(X)
        if ch == "y":
            self.i += 1
            return dict(Y)
        if ch.isdigit():
            return const(self._rational())
        if ch.isalpha():
            self.fail(f"unknown variable {ch!r}")
        if ch == "":
            self.fail("unexpected end of input")
        self.fail(f"unexpected character {ch!r}")
        raise AssertionError  # fail always raises


def parse(src: str) -> BiPoly:
    """Parse the expression grammar: +, -, explicit *, ^ with natural
    exponents, rationals p/q, variables x and y, parentheses."""
    p = _Parser(src)
    out = p.expr()
    p._ws()
    if p.i != len(p.src):
        raise ParseError(f"unexpected character {p.src[p.i]!r}", p.i + 1)
    return out


def _mono_str(i: int, j: int, xname: str, yname: str) -> str:
    parts = []
    if i:
        parts.append(xname if i == 1 else f"{xname}^{i}")
    if j:
        parts.append(yname if j == 1 else f"{yname}^{j}")
    return "*".join(parts)


def to_string(f: BiPoly, xname: str = "x", yname: str = "y") -> str:
    """Canonical form: terms in descending graded lex order."""
    if not f:
        return "0"
    parts: list[str] = []
    for e in sorted(f, key=_ordkey, reverse=True):
        c = f[e]
        mono = _mono_str(e[0], e[1], xname, yname)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Check results.

@dataclass(frozen=True)
class CheckResult:
    """Outcome of a decidable check.

    status is "Holds", "Fails" or "Inconclusive".  A Fails always carries a
    witness (a point, common factor, or certificate text); an Inconclusive
    always carries a reason.
    """

    status: str
    witness: object | None = None
    reason: str = ""

    def __post_init__(self):
        if self.status not in ("Holds", "Fails", "Inconclusive"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "Fails" and self.witness is None:
            raise ValueError("Fails requires a witness or certificate")
        if self.status == "Inconclusive" and not self.reason:
            raise ValueError("Inconclusive requires a reason")

    @property
    def ok(self) -> bool:
        return self.status == "Holds"


def holds(reason: str = "") -> CheckResult:
    return CheckResult("Holds", None, reason)


def fails(witness: object, reason: str = "") -> CheckResult:
    return CheckResult("Fails", witness, reason)


def inconclusive(reason: str) -> CheckResult:
    return CheckResult("Inconclusive", None, reason)
