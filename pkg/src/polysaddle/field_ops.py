"""Planar polynomial vector fields and factored first integrals.

The central construction: given H = u_1^{k_1} * ... * u_p^{k_p}, the field

    P = sum_l k_l (prod_{i != l} u_i) * d(u_l)/dy
    Q = - sum_l k_l (prod_{i != l} u_i) * d(u_l)/dx

annihilates H exactly (its Lie derivative of H is zero), which is the
identity everything else in the package leans on.  This module also covers
the supporting cast: coprimality and common-factor reduction, the exact
quotient of proportional fields, Hamiltonian detection by divergence, and
cofactors of invariant curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bipoly as bp
from .bipoly import BiPoly, CheckResult


@dataclass(frozen=True)
class VectorField:
    """Polynomial field (P, Q), not both zero."""

    P: BiPoly
    Q: BiPoly

    def __post_init__(self):
        if bp.is_zero(self.P) and bp.is_zero(self.Q):
            raise ValueError("vector field must not be identically zero")

    @property
    def degree(self) -> int:
        return max(bp.total_degree(self.P), bp.total_degree(self.Q))

    def __str__(self) -> str:
        return f"({bp.to_string(self.P)}, {bp.to_string(self.Q)})"


def _is_primitive(u: BiPoly) -> bool:
    n = bp.normalize(u)
    return u == n or u == bp.neg(n)


@dataclass(frozen=True)
class FactoredIntegral:
    """First integral in factored form: ordered (u_i, k_i) pairs.

    Enforced at construction: every u_i nonconstant and primitive (integer
    coefficients with no common divisor, up to overall sign; the sign the
    caller chose is kept), every k_i a positive integer, and no two factors
    share a nonconstant divisor.  Irreducibility of the u_i is asserted by
    the caller, not verified; see README.
    """

    factors: tuple[tuple[BiPoly, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((u, int(k)) for u, k in self.factors))
        if not self.factors:
            raise ValueError("at least one factor is required")
        for idx, (u, k) in enumerate(self.factors):
            if bp.is_zero(u) or bp.is_const(u):
                raise ValueError(f"factor {idx + 1} is constant")
            if k < 1:
                raise ValueError(f"exponent of factor {idx + 1} must be positive")
            if not _is_primitive(u):
                raise ValueError(
                    f"factor {idx + 1} ({bp.to_string(u)}) is not primitive; "
                    "clear the rational content first")
        for i in range(len(self.factors)):
            for j in range(i + 1, len(self.factors)):
                g = bp.gcd(self.factors[i][0], self.factors[j][0])
                if not bp.is_const(g):
                    raise ValueError(
                        f"factors {i + 1} and {j + 1} share the divisor {bp.to_string(g)}")

    @property
    def p(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " * ".join(f"({bp.to_string(u)})^{k}" if k > 1 else f"({bp.to_string(u)})"
                          for u, k in self.factors)


def expand(F: FactoredIntegral) -> BiPoly:
    """The integral itself: prod u_i^{k_i}."""
    out = bp.ONE
    for u, k in F.factors:
        out = bp.mul(out, bp.power(u, k))
    return out


def construct_field(F: FactoredIntegral) -> VectorField:
    """Field annihilating expand(F); see the module docstring for the formula.

    With a single factor the empty products are 1 and the result is
    k_1-times the Hamiltonian field of u_1; the degree-minimality facts
    proved for p > 1 are not asserted here in that case.
    """
    P: BiPoly = {}
    Q: BiPoly = {}
    for l, (u, k) in enumerate(F.factors):
        others = bp.ONE
        for i, (v, _) in enumerate(F.factors):
            if i != l:
                others = bp.mul(others, v)
        coeff = bp.scalar_mul(k, others)
        P = bp.add(P, bp.mul(coeff, bp.partial(u, "y")))
        Q = bp.sub(Q, bp.mul(coeff, bp.partial(u, "x")))
    return VectorField(P, Q)


def lie_derivative(X: VectorField, H: BiPoly) -> BiPoly:
    """H_x P + H_y Q."""
    return bp.add(bp.mul(bp.partial(H, "x"), X.P), bp.mul(bp.partial(H, "y"), X.Q))


def is_first_integral(X: VectorField, H: BiPoly) -> bool:
    return bp.is_zero(lie_derivative(X, H))


def is_coprime(X: VectorField) -> bool:
    return bp.is_const(bp.gcd(X.P, X.Q))


def reduce_field(X: VectorField) -> tuple[VectorField, BiPoly]:
    """Split off the common factor: returns (X', g) with X = g * X' and X'
    coprime; g is the normalized gcd of the components."""
    g = bp.gcd(X.P, X.Q)
    if bp.is_const(g):
        return X, bp.ONE
    return VectorField(bp.exact_div(X.P, g), bp.exact_div(X.Q, g)), g


def quotient_multiplier(X2: VectorField, X1: VectorField) -> BiPoly:
    """The polynomial G with X2 = G * X1, when it exists.

    X1 must have coprime components.  Both components are cross-checked;
    a failure raises ExactDivisionError carrying the nonzero remainder.
    """
    if not is_coprime(X1):
        raise ValueError("reference field must have coprime components")
    if bp.is_zero(X1.P):
        G = bp.exact_div(X2.Q, X1.Q)
    else:
        G = bp.exact_div(X2.P, X1.P)
    resid_p = bp.sub(X2.P, bp.mul(G, X1.P))
    resid_q = bp.sub(X2.Q, bp.mul(G, X1.Q))
    if resid_p or resid_q:
        raise bp.ExactDivisionError(resid_p if resid_p else resid_q)
    return G


def _antider_y(f: BiPoly) -> BiPoly:
    return {(i, j + 1): c / (j + 1) for (i, j), c in f.items()}


def _antider_x(f: BiPoly) -> BiPoly:
    return {(i + 1, j): c / (i + 1) for (i, j), c in f.items()}


def _potential(P: BiPoly, Q: BiPoly) -> BiPoly | None:
    """H with H_y = P and H_x = -Q, when the pair is divergence-free.

    H = int P dy + f(x), with f fixed by matching H_x to -Q; the constant
    term is 0.  Returns None when no such polynomial exists.
    """
    base = _antider_y(P)
    rest = bp.sub(bp.neg(Q), bp.partial(base, "x"))
    if bp.deg_y(rest) > 0:
        return None
    H = bp.add(base, _antider_x(rest))
    if bp.partial(H, "y") != P or bp.partial(H, "x") != bp.neg(Q):
        return None
    return H


def is_hamiltonian(X: VectorField) -> BiPoly | None:
    """If div X = 0, the Hamiltonian H with P = H_y, Q = -H_x (constant
    term 0); otherwise None."""
    div = bp.add(bp.partial(X.P, "x"), bp.partial(X.Q, "y"))
    if not bp.is_zero(div):
        return None
    H = _potential(X.P, X.Q)
    if H is None:
        raise ArithmeticError("divergence-free field without polynomial potential")
    return H


def cofactor(f: BiPoly, X: VectorField) -> BiPoly | None:
    """K with f_x P + f_y Q = K f, or None when f = 0 is not invariant."""
    if bp.is_const(f):
        raise ValueError("cofactor requires a nonconstant curve")
    L = lie_derivative(X, f)
    q, r = bp.divmod_lt(L, f)
    return q if not r else None


def minimal_degree_check(F: FactoredIntegral) -> CheckResult:
    """Degree bookkeeping for the constructed field of a multi-factor
    integral: Holds iff deg X = sum deg u_i - 1 and X is coprime."""
    if F.p <= 1:
        raise ValueError("degree check needs at least two factors")
    X = construct_field(F)
    expected = sum(bp.total_degree(u) for u, _ in F.factors) - 1
    g = bp.gcd(X.P, X.Q)
    if not bp.is_const(g):
        return bp.fails(bp.to_string(g), "constructed field has a common factor")
    if X.degree != expected:
        return bp.fails(f"deg={X.degree}", f"expected degree {expected}")
    return bp.holds(f"degree {X.degree} = {expected}, components coprime")
