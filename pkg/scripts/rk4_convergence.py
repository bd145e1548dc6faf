"""Step-halving study of RK4 conservation drift along synthesized fields.

Prints a drift table over a ladder of step sizes for three fields:
the weighted cusp field (generic 4th-order convergence, halving factor
close to 16), the pure saddle with its own Hamiltonian (the conserved
product xy is accurate to 5th order, so the factor sits at 32), and the
twin-parabola field.

    python3 scripts/rk4_convergence.py
"""

from polysaddle import bipoly as bp
from polysaddle.field_ops import VectorField
from polysaddle.numcheck import conservation_drift, integrate_orbit

CASES = [
    ("cusp field (x, -2y), H = x^2*y", VectorField(bp.parse("x"), bp.parse("-2*y")),
     bp.parse("x^2*y"), (0.7, 0.4)),
    ("saddle (x, -y), H = x*y", VectorField(bp.parse("x"), bp.parse("-y")),
     bp.parse("x*y"), (0.7, 0.4)),
    ("twin parabolas (3y - x^2, 6x^3 - 2xy), H = (y - x^2)(y + x^2)^2",
     VectorField(bp.parse("3*y - x^2"), bp.parse("6*x^3 - 2*x*y")),
     bp.parse("(y - x^2)*(y + x^2)^2"), (0.3, 0.1)),
]

LADDER = (6.4e-2, 3.2e-2, 1.6e-2, 8e-3, 4e-3, 2e-3)


def main():
    for name, X, H, (x0, y0) in CASES:
        print()
        print(name)
        print(f"  start ({x0}, {y0}), horizon 1.0")
        print(f"  {'step':>8}  {'drift':>12}  {'halving factor':>15}")
        prev = None
        for h in LADDER:
            n = round(1.0 / h)
            orb = integrate_orbit(X, x0, y0, h, n)
            if len(orb.points) != n + 1:
                print(f"  {h:>8.1e}  orbit left the integration window")
                prev = None
                continue
            d = conservation_drift(H, orb)
            factor = "" if prev is None or d == 0 else f"{prev / d:15.2f}"
            print(f"  {h:>8.1e}  {d:>12.3e}  {factor}")
            prev = d


if __name__ == "__main__":
    main()
