"""Command-line front end.

Problems are single JSON documents: a name, a list of factors (polynomial
string plus exponent), and optionally an explicit field.  When the field
is absent it is synthesized from the factors and reduced.  Commands run
the analysis pipelines and emit either a human-readable text report or a
deterministic JSON report (schema_version "1", no timestamps).

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input
or parse error, 3 some verdict was Inconclusive and --strict was set.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bipoly as bp
from . import numcheck, upoly
from .bipoly import CheckResult, ParseError
from .cz_check import cz_report
from .field_ops import (FactoredIntegral, VectorField, construct_field,
                        expand, is_first_integral, is_hamiltonian, cofactor,
                        lie_derivative, minimal_degree_check, reduce_field)
from .linearize import factor_split, linearize
from .remarkable import (analyze, integral_degree_check,
                         inverse_factor_degree_check,
                         single_critical_value_criterion)


class ProblemError(Exception):
    """Anything wrong with the input file or flags; mapped to exit 2."""


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    integral: FactoredIntegral
    field: VectorField
    field_given: bool


def load_problem(path: str) -> ProblemSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ProblemError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ProblemError(f"{path}: invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise ProblemError(f"{path}: top level must be a JSON object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ProblemError(f"{path}: missing or empty \"name\"")
    raw = doc.get("factors")
    if not isinstance(raw, list) or not raw:
        raise ProblemError(f"{path}: \"factors\" must be a nonempty list")
    factors = []
    for idx, item in enumerate(raw, start=1):
        if not isinstance(item, dict) or "poly" not in item or "exponent" not in item:
            raise ProblemError(f"{path}: factor {idx} needs \"poly\" and \"exponent\"")
        k = item["exponent"]
        if not isinstance(k, int) or k < 1:
            raise ProblemError(f"{path}: factor {idx}: exponent must be a positive integer")
        try:
            u = bp.parse(item["poly"])
        except ParseError as e:
            raise ProblemError(f"{path}: factor {idx}: {e}") from e
        factors.append((u, k))
    try:
        F = FactoredIntegral(tuple(factors))
    except ValueError as e:
        raise ProblemError(f"{path}: {e}") from e
    fdoc = doc.get("field")
    if fdoc is None:
        X, _ = reduce_field(construct_field(F))
        given = False
    else:
        if not isinstance(fdoc, dict) or "p" not in fdoc or "q" not in fdoc:
            raise ProblemError(f"{path}: \"field\" needs \"p\" and \"q\"")
        try:
            P = bp.parse(fdoc["p"])
            Q = bp.parse(fdoc["q"])
        except ParseError as e:
            raise ProblemError(f"{path}: field: {e}") from e
        try:
            X = VectorField(P, Q)
        except ValueError as e:
            raise ProblemError(f"{path}: {e}") from e
        given = True
    return ProblemSpec(name, F, X, given)


# report plumbing


def _wit(w) -> object:
    """Witness in a JSON-friendly shape."""
    if w is None:
        return None
    if isinstance(w, tuple) and len(w) == 2 and all(isinstance(c, Fraction) for c in w):
        return {"x": str(w[0]), "y": str(w[1])}
    if isinstance(w, dict):
        return bp.to_string(w)
    return str(w)


def _cd(r: CheckResult) -> dict:
    out: dict = {"status": r.status}
    if r.witness is not None:
        out["witness"] = _wit(r.witness)
    if r.reason:
        out["reason"] = r.reason
    return out


def _statuses(obj) -> list[str]:
    found = []
    if isinstance(obj, dict):
        s = obj.get("status")
        if isinstance(s, str):
            found.append(s)
        for v in obj.values():
            found.extend(_statuses(v))
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            found.extend(_statuses(v))
    return found


def _exit_code(results: dict, strict: bool) -> int:
    statuses = _statuses(results)
    if "Fails" in statuses:
        return 1
    if strict and "Inconclusive" in statuses:
        return 3
    return 0


# commands


def cmd_construct(spec: ProblemSpec) -> dict:
    F = spec.integral
    X0 = construct_field(F)
    Xr, g = reduce_field(X0)
    common = bp.gcd(X0.P, X0.Q)
    coprime = (bp.holds("gcd(P, Q) is constant") if bp.total_degree(common) == 0
               else bp.fails(bp.to_string(common), "P and Q share a factor"))
    out = {
        "field": {"P": bp.to_string(X0.P), "Q": bp.to_string(X0.Q)},
        "reduced_field": {"P": bp.to_string(Xr.P), "Q": bp.to_string(Xr.Q)},
        "common_factor": bp.to_string(g),
        "degree_m": X0.degree,
        "factor_degree_sum_minus_1": sum(bp.total_degree(u) for u, _ in F.factors) - 1,
        "coprime": _cd(coprime),
        "degree_check": _cd(minimal_degree_check(F)) if F.p >= 2
        else _cd(bp.inconclusive("not applicable: single factor")),
    }
    if spec.field_given:
        H = expand(F)
        ok = is_first_integral(spec.field, H)
        out["given_field"] = {
            "P": bp.to_string(spec.field.P),
            "Q": bp.to_string(spec.field.Q),
            "annihilates_integral": _cd(
                bp.holds("lie derivative is zero") if ok
                else bp.fails(bp.to_string(lie_derivative(spec.field, H)),
                              "nonzero lie derivative")),
        }
    return out


def cmd_analyze(spec: ProblemSpec) -> dict:
    F, X = spec.integral, spec.field
    H = expand(F)
    out: dict = {"integral": bp.to_string(H), "degree_m": X.degree}
    if all(k == 1 for _, k in F.factors):
        Hp = is_hamiltonian(X)
        if Hp is None:
            div = bp.add(bp.partial(X.P, "x"), bp.partial(X.Q, "y"))
            out["hamiltonian"] = _cd(bp.fails(bp.to_string(div), "nonzero divergence"))
            return out
        branch = {
            "potential": bp.to_string(Hp),
            "annihilates": _cd(
                bp.holds("lie derivative of the potential is zero")
                if is_first_integral(X, Hp)
                else bp.fails(bp.to_string(lie_derivative(X, Hp)), "nonzero lie derivative")),
        }
        cofs = []
        for i, (u, _) in enumerate(F.factors, start=1):
            K = cofactor(u, X)
            cofs.append({"factor": bp.to_string(u),
                         "cofactor": None if K is None else bp.to_string(K)})
            if K is None:
                branch["annihilates"] = _cd(bp.fails(
                    bp.to_string(u), f"factor {i} is not an invariant curve"))
        branch["cofactors"] = cofs
        out["hamiltonian"] = branch
        return out
    a = analyze(F)
    out["integrating_factor"] = bp.to_string(a.R)
    out["inverse_integrating_factor"] = bp.to_string(a.V)
    out["critical_values"] = [str(c) for c in a.critical_values]
    out["residual"] = None if a.residual is None else upoly.to_string(a.residual, "c")
    out["s"] = a.s
    out["deg_R"] = a.d
    checks: dict = {}
    for key, run in (
        ("single_critical_value", lambda: single_critical_value_criterion(F, X)),
        ("inverse_factor_degree", lambda: inverse_factor_degree_check(a, X.degree)),
        ("integral_degree", lambda: integral_degree_check(F, X)),
    ):
        try:
            checks[key] = _cd(run())
        except ValueError as e:
            checks[key] = _cd(bp.inconclusive(f"not applicable: {e}"))
    out["checks"] = checks
    return out


def cmd_cz(spec: ProblemSpec) -> dict:
    rep = cz_report(spec.integral)
    return {
        "condition_i_nonsingular": _cd(rep.condition_i),
        "condition_ii_leading_squarefree": _cd(rep.condition_ii),
        "condition_iii_transversal_no_triples": _cd(rep.condition_iii),
        "condition_iv_leading_coprime": _cd(rep.condition_iv),
        "overall": _cd(rep.overall),
    }


def cmd_linearize(spec: ProblemSpec, pivot: int | None) -> dict:
    F = spec.integral
    if pivot is not None:
        try:
            F = factor_split(F, pivot)
        except ValueError as e:
            raise ProblemError(str(e)) from e
    try:
        cert = linearize(F, spec.field)
    except bp.ExactDivisionError as e:
        return {"certificate": _cd(bp.fails(
            bp.to_string(e.remainder),
            "an exact-division identity left a nonzero remainder"))}
    except ArithmeticError as e:
        return {"certificate": _cd(bp.fails(str(e), "degenerate split"))}
    except ValueError as e:
        raise ProblemError(str(e)) from e
    return {
        "u": bp.to_string(cert.u_expr),
        "v": bp.to_string(cert.v_expr),
        "K": [bp.to_string(k) for k in (cert.K1, cert.K2, cert.K3, cert.K4)],
        "D": bp.to_string(cert.D),
        "G": bp.to_string(cert.G),
        "hamiltonian_input": cert.hamiltonian_input,
        "time_change": cert.time_change,
        "certificate": _cd(bp.holds("all four polynomial identities verified exactly")),
    }


def cmd_simulate(spec: ProblemSpec, args) -> dict:
    if args.steps < 1:
        raise ProblemError("--steps must be a positive integer")
    if args.step <= 0:
        raise ProblemError("--step must be positive")
    H = expand(spec.integral)
    orbit = numcheck.integrate_orbit(spec.field, args.x0, args.y0, args.step, args.steps)
    drift = numcheck.conservation_drift(H, orbit)
    out = {
        "x0": args.x0,
        "y0": args.y0,
        "step": args.step,
        "steps_requested": args.steps,
        "points": len(orbit.points),
        "truncated": len(orbit.points) < args.steps + 1,
        "drift": drift,
    }
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(numcheck.to_csv(orbit, H))
        except OSError as e:
            raise ProblemError(f"cannot write {args.csv}: {e}") from e
        out["csv"] = args.csv
    return out


def cmd_all(spec: ProblemSpec, args) -> dict:
    out = {"construct": cmd_construct(spec), "analyze": cmd_analyze(spec),
           "cz": cmd_cz(spec)}
    if spec.integral.p >= 2:
        out["linearize"] = cmd_linearize(spec, args.pivot)
    else:
        out["linearize"] = {"skipped": "needs at least two factors"}
    out["simulate"] = cmd_simulate(spec, args)
    return out


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v if v or v == 0 or v is False else '(none)'}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def main(argv=None) -> int:
    p = argparse.ArgumentParser(
        prog="polysaddle",
        description="Construct, analyze and linearize planar polynomial "
                    "fields with factored polynomial first integrals.")
    p.add_argument("command",
                   choices=["construct", "analyze", "cz", "linearize", "simulate", "all"])
    p.add_argument("problem", help="path to a problem JSON file")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when any verdict is Inconclusive")
    p.add_argument("--pivot", type=int, default=None,
                   help="1-based factor index to move into the pivot slot before linearizing")
    p.add_argument("--x0", type=float, default=1.0)
    p.add_argument("--y0", type=float, default=1.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--csv", default=None, help="write the simulated orbit to this file")
    args = p.parse_args(argv)

    try:
        spec = load_problem(args.problem)
        if args.command == "construct":
            results = cmd_construct(spec)
        elif args.command == "analyze":
            results = cmd_analyze(spec)
        elif args.command == "cz":
            results = cmd_cz(spec)
        elif args.command == "linearize":
            results = cmd_linearize(spec, args.pivot)
        elif args.command == "simulate":
            results = cmd_simulate(spec, args)
        else:
            results = cmd_all(spec, args)
    except ProblemError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    report = {"schema_version": "1", "name": spec.name,
              "command": args.command, "results": results}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(f"problem: {spec.name}")
        print(f"command: {args.command}")
        for line in _render_text(results):
            print(line)
    return _exit_code(results, args.strict)


if __name__ == "__main__":
    sys.exit(main())
