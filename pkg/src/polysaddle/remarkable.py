"""Integrating factors and critical level values of a polynomial integral.

For H = prod u_i^{k_i}, the products R = prod u_i^{k_i-1} (an integrating
factor of the constructed field) and V = prod u_i (an inverse integrating
factor) control the degree bookkeeping implemented here.

A level value c is *critical* when H + c acquires a repeated factor; we
detect this through the equivalent gcd criterion: gcd(H+c, H_x, H_y) is
nonconstant.  Candidates for c come from resultant elimination with c kept
symbolic, every rational candidate is then confirmed or rejected by an
exact bivariate gcd, and whatever nonrational candidates remain are
reported as a univariate residual polynomial in c rather than dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bipoly as bp
from . import upoly
from .bipoly import BiPoly, CheckResult
from .field_ops import (FactoredIntegral, VectorField, construct_field, expand,
                        is_coprime, is_first_integral, is_hamiltonian, _potential)
from .upoly import UPoly


def integrating_factor(F: FactoredIntegral) -> BiPoly:
    """prod u_i^{k_i - 1}; factors with exponent 1 contribute nothing."""
    out = bp.ONE
    for u, k in F.factors:
        if k > 1:
            out = bp.mul(out, bp.power(u, k - 1))
    return out


def inverse_integrating_factor(F: FactoredIntegral) -> BiPoly:
    """prod u_i, each factor once."""
    out = bp.ONE
    for u, _ in F.factors:
        out = bp.mul(out, u)
    return out


def verify_integrating_factor(X: VectorField, R: BiPoly) -> bool:
    """True iff d(RP)/dx + d(RQ)/dy = 0 exactly."""
    return bp.is_zero(bp.add(bp.partial(bp.mul(R, X.P), "x"),
                             bp.partial(bp.mul(R, X.Q), "y")))


def integral_from_factor(X: VectorField, R: BiPoly) -> BiPoly:
    """Reconstruct an integral from an integrating factor:
    H = int R*P dy + f(x), with f matched so that H_x = -R*Q; constant
    term 0.  Errors when R is not an integrating factor of X."""
    H = _potential(bp.mul(R, X.P), bp.mul(R, X.Q))
    if H is None:
        raise ArithmeticError("matching failed: not an integrating factor of the field")
    return H


def _coeffs_with_c(f: BiPoly, main: str, add_c: bool) -> list[BiPoly]:
    """Coefficients of f with respect to `main`, each lifted into the
    two-slot ring Q[other, c]; add_c injects +c into the constant one."""
    g = f if main == "y" else bp.swap_vars(f)
    rows = bp.coeffs_wrt_y(g)
    out = [bp.from_upoly_x(p) for p in rows]
    if add_c:
        if not out:
            out = [{}]
        out[0] = bp.add(out[0], {(0, 1): Fraction(1)})
    return out


def _sylvester_from_coeffs(fc: list[BiPoly], gc: list[BiPoly]) -> list[list[BiPoly]]:
    m, n = len(fc) - 1, len(gc) - 1
    frow = [fc[m - k] for k in range(m + 1)]
    grow = [gc[n - k] for k in range(n + 1)]
    size = m + n
    mat: list[list[BiPoly]] = []
    for i in range(n):
        mat.append([{}] * i + frow + [{}] * (size - m - 1 - i))
    for i in range(m):
        mat.append([{}] * i + grow + [{}] * (size - n - 1 - i))
    return mat


def _route_candidates(H: BiPoly, deriv: BiPoly, main: str) -> UPoly | None:
    """Eliminate `main` from (H + c, deriv); returns the univariate
    polynomial in c whose roots are the candidate level values seen by
    this route, or None when the route is degenerate (deriv free of main).

    Degenerate routes lose nothing: a common factor with positive degree
    in `main` cannot divide a nonzero deriv free of `main`, so any such
    factor is caught by the other route.
    """
    dmain = bp.deg_y(deriv) if main == "y" else bp.deg_x(deriv)
    if dmain < 1:
        return None
    fc = _coeffs_with_c(H, main, add_c=True)
    gc = _coeffs_with_c(deriv, main, add_c=False)
    res = bp.det_bareiss(_sylvester_from_coeffs(fc, gc))
    if bp.is_zero(res):
        raise ArithmeticError("level family shares a factor for generic c")
    # res lives in Q[other, c]; collect coefficients of each power of the
    # other variable as univariate polynomials in c and take their gcd
    per_power = bp.coeffs_wrt_y(bp.swap_vars(res))
    return upoly.gcd_many([p for p in per_power if not upoly.is_zero(p)])


def critical_remarkable_values(H: BiPoly) -> tuple[list[Fraction], UPoly | None]:
    """All rational critical values of H, plus a residual for the rest.

    Returns (values, residual): `values` are the rational c with
    gcd(H+c, H_x, H_y) nonconstant, each confirmed by that very gcd;
    `residual` is a squarefree univariate polynomial in c whose roots
    contain every remaining (nonrational) critical value, or None.
    """
    if bp.is_zero(H) or bp.is_const(H):
        raise ValueError("degenerate integral: H is constant")
    Hx = bp.partial(H, "x")
    Hy = bp.partial(H, "y")
    if bp.is_zero(Hx) or bp.is_zero(Hy):
        raise ValueError("degenerate integral: a partial derivative vanishes identically")
    N = upoly.ONE
    for route in (_route_candidates(H, Hx, "y"), _route_candidates(H, Hy, "x")):
        if route is not None:
            N = upoly.mul(N, route)
    if upoly.is_const(N):
        return [], None
    confirmed: list[Fraction] = []
    for c0, _ in upoly.rational_roots(N):
        g = bp.gcd_many([bp.add(H, bp.const(c0)), Hx, Hy])
        if not bp.is_const(g):
            confirmed.append(c0)
    residual = upoly.shift_out_rational_roots(upoly.squarefree_part(N))
    return confirmed, (None if upoly.is_const(residual) else residual)


@dataclass(frozen=True)
class RemarkableAnalysis:
    """Bundle of the level-structure data for one factored integral."""

    critical_values: tuple[Fraction, ...]
    residual: UPoly | None  # univariate in c, or None
    R: BiPoly  # integrating factor
    V: BiPoly  # inverse integrating factor
    s: int  # number of confirmed critical values
    d: int  # degree of R


def analyze(F: FactoredIntegral) -> RemarkableAnalysis:
    """Full level-structure analysis of expand(F)."""
    R = integrating_factor(F)
    V = inverse_integrating_factor(F)
    H = expand(F)
    if bp.mul(R, V) != H:
        raise ArithmeticError("factor bookkeeping broke: R*V != H")
    values, residual = critical_remarkable_values(H)
    return RemarkableAnalysis(tuple(values), residual, R, V,
                              len(values), bp.total_degree(R))


def single_critical_value_criterion(F: FactoredIntegral, X: VectorField) -> CheckResult:
    """Equivalence check for integrals with a repeated factor: the factor
    degrees sum to deg(X) + 1 exactly when the integral has exactly one
    critical value.  Both directions are evaluated."""
    if not any(k > 1 for _, k in F.factors):
        raise ValueError("criterion requires some exponent k_i > 1")
    if not is_coprime(X):
        raise ValueError("criterion requires a coprime field")
    if not is_first_integral(X, expand(F)):
        raise ValueError("X does not annihilate the factored integral")
    sum_deg = sum(bp.total_degree(u) for u, _ in F.factors)
    degree_side = sum_deg == X.degree + 1
    values, residual = critical_remarkable_values(expand(F))
    if residual is not None and len(values) < 2:
        return bp.inconclusive(
            "nonrational candidate critical values remain "
            f"(residual {upoly.to_string(residual, 'c')}); cannot count exactly")
    value_side = len(values) == 1
    if degree_side == value_side:
        return bp.holds(
            f"sum deg u_i = {sum_deg}, m+1 = {X.degree + 1}, "
            f"critical values {[str(v) for v in values]}")
    return bp.fails(
        f"sum deg u_i = {sum_deg} vs m+1 = {X.degree + 1}; "
        f"critical values {[str(v) for v in values]}",
        "degree side and critical-value side disagree")


def inverse_factor_degree_check(analysis: RemarkableAnalysis, m: int) -> CheckResult:
    """deg V = (s-1)d + (m+1)s, with s the critical-value count and
    d = deg R."""
    if analysis.s < 1:
        raise ValueError("no critical values: the degree formula does not apply")
    expected = (analysis.s - 1) * analysis.d + (m + 1) * analysis.s
    actual = bp.total_degree(analysis.V)
    if actual == expected:
        return bp.holds(f"deg V = {actual} = ({analysis.s}-1)*{analysis.d}"
                        f" + ({m}+1)*{analysis.s}")
    return bp.fails(f"deg V = {actual}", f"expected {expected}")


def integral_degree_check(F: FactoredIntegral, X: VectorField) -> CheckResult:
    """deg H = m + 1 + deg R for a coprime non-Hamiltonian field with a
    repeated-factor integral."""
    if not any(k > 1 for _, k in F.factors):
        raise ValueError("degree relation requires some exponent k_i > 1")
    if not is_coprime(X):
        raise ValueError("degree relation requires a coprime field")
    if is_hamiltonian(X) is not None:
        raise ValueError("degree relation is stated for non-Hamiltonian fields")
    degH = bp.total_degree(expand(F))
    degR = bp.total_degree(integrating_factor(F))
    expected = X.degree + 1 + degR
    if degH == expected:
        return bp.holds(f"deg H = {degH} = {X.degree}+1+{degR}")
    return bp.fails(f"deg H = {degH}", f"expected {expected}")
