"""Shared deterministic generators for the randomized test families.

Everything here uses seeded random.Random so failures replay exactly.
The acceptance tests import these; hypothesis strategies for the
algebraic property tests live in the individual test modules.
"""

from __future__ import annotations

import random
from fractions import Fraction

from polysaddle import bipoly as bp
from polysaddle.field_ops import FactoredIntegral, VectorField, construct_field, reduce_field

# one line per acceptance criterion, filled by the decorator in
# test_acceptance.py and echoed after the run (capture-proof)
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_rat(rng: random.Random, max_abs: int = 9) -> Fraction:
    num = rng.randint(-max_abs, max_abs)
    den = rng.randint(1, max_abs)
    return Fraction(num, den)


def random_factor(rng: random.Random, max_deg: int = 3) -> bp.BiPoly:
    """Random primitive nonconstant factor, small support."""
    while True:
        deg = rng.randint(1, max_deg)
        f: bp.BiPoly = {}
        for _ in range(rng.randint(2, 4)):
            i = rng.randint(0, deg)
            j = rng.randint(0, deg - i)
            c = random_rat(rng)
            if c:
                f[(i, j)] = f.get((i, j), Fraction(0)) + c
        f = {e: c for e, c in f.items() if c}
        if f and bp.total_degree(f) >= 1:
            return bp.normalize(f)


def random_integral(rng: random.Random, max_p: int = 3, max_deg: int = 3,
                    max_k: int = 3, all_k_one: bool = False) -> FactoredIntegral:
    """Random factored integral: pairwise coprime primitive factors."""
    while True:
        p = rng.randint(1, max_p)
        factors: list[tuple[bp.BiPoly, int]] = []
        for _ in range(p):
            for _attempt in range(40):
                u = random_factor(rng, max_deg)
                if all(bp.total_degree(bp.gcd(u, v)) == 0 and u != v
                       for v, _ in factors):
                    k = 1 if all_k_one else rng.randint(1, max_k)
                    factors.append((u, k))
                    break
            else:
                break
        if len(factors) != p:
            continue
        try:
            return FactoredIntegral(tuple(factors))
        except ValueError:
            continue


def random_line(rng: random.Random) -> bp.BiPoly:
    while True:
        a, b, c = random_rat(rng), random_rat(rng), random_rat(rng)
        if a or b:
            f = {}
            if a:
                f[(1, 0)] = a
            if b:
                f[(0, 1)] = b
            if c:
                f[(0, 0)] = c
            return bp.normalize(f)


def _parallel(l1: bp.BiPoly, l2: bp.BiPoly) -> bool:
    a1, b1 = l1.get((1, 0), Fraction(0)), l1.get((0, 1), Fraction(0))
    a2, b2 = l2.get((1, 0), Fraction(0)), l2.get((0, 1), Fraction(0))
    return a1 * b2 - a2 * b1 == 0


def _concurrent(lines: list[bp.BiPoly]) -> bool:
    """True when all lines pass through one common point (needs the first
    two to be nonparallel)."""
    a1, b1, c1 = (lines[0].get(e, Fraction(0)) for e in ((1, 0), (0, 1), (0, 0)))
    a2, b2, c2 = (lines[1].get(e, Fraction(0)) for e in ((1, 0), (0, 1), (0, 0)))
    det = a1 * b2 - a2 * b1
    x = (-c1 * b2 + c2 * b1) / det
    y = (-a1 * c2 + a2 * c1) / det
    return all(bp.evaluate(l, x, y) == 0 for l in lines[2:])


def random_line_family(rng: random.Random, max_p: int = 3) -> FactoredIntegral:
    """Distinct pairwise-nonparallel lines, no common point, exactly one
    exponent >= 2: the model family where all genericity conditions hold."""
    while True:
        p = rng.randint(2, max_p)
        lines: list[bp.BiPoly] = []
        for _ in range(p):
            for _attempt in range(40):
                l = random_line(rng)
                if all(not _parallel(l, m) and l != m for m in lines):
                    lines.append(l)
                    break
            else:
                break
        if len(lines) != p:
            continue
        if p >= 3 and _concurrent(lines):
            continue
        ks = [1] * p
        ks[rng.randrange(p)] = rng.randint(2, 3)
        try:
            return FactoredIntegral(tuple(zip(lines, ks)))
        except ValueError:
            continue


def random_coprime_field(rng: random.Random, max_deg: int = 3) -> VectorField:
    """Random field with coprime components (for the multiplier round-trip)."""
    while True:
        P = random_factor(rng, max_deg)
        Q = random_factor(rng, max_deg)
        if bp.total_degree(bp.gcd(P, Q)) == 0:
            return VectorField(P, Q)


def reduced_constructed_field(F: FactoredIntegral) -> VectorField:
    X, _ = reduce_field(construct_field(F))
    return X
