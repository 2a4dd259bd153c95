"""Regenerate the reducibility certificate fixtures.

Development-time helper, not part of the installed package: it factors the
unique curve of each linear system with sympy and freezes the two factors.
The pipeline itself never trusts these files blindly; it re-verifies the
factorization by exact multiplication and kernel membership on every run.

Usage: python tools/make_reducibility_fixtures.py
"""

import json
import pathlib
from fractions import Fraction

import sympy as sp

from quadtoric.lattice import LatticePolygon
from quadtoric.linsys import LaurentPoly, irreducibility_check, kernel_membership, linear_system_dim

FIXTURE_DIR = pathlib.Path(__file__).resolve().parents[1] / (
    "src/quadtoric/pipeline/fixtures/reducibility"
)

POLYGONS = {
    "poly_9_0_10_1_40_56": [(0, 0), (9, 0), (10, 1), (40, 56)],
    "poly_5_0_6_5_24_104": [(0, 0), (5, 0), (6, 5), (24, 104)],
}


def poly_terms(p: sp.Poly) -> list:
    out = []
    for (i, j), c in sorted(p.terms()):
        fr = Fraction(sp.Rational(c).p, sp.Rational(c).q)
        out.append([[int(i), int(j)], f"{fr.numerator}/{fr.denominator}"])
    return out


def main() -> None:
    x, y = sp.symbols("x y")
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    for name, verts in POLYGONS.items():
        polygon = LatticePolygon(verts)
        result = linear_system_dim(polygon, polygon.m)
        assert result.dimension == 1
        gamma = result.basis[0]
        expr = sum(int(c) * x ** u[0] * y ** u[1] for u, c in gamma.coeffs)
        _, factors = sp.factor_list(sp.Poly(expr, x, y))
        nonmono = [f for f, _ in factors if len(sp.Poly(f, x, y).terms()) > 1]
        assert nonmono, f"{name}: generator appears irreducible"
        g = sp.Poly(nonmono[0], x, y)
        h = sp.Poly(sp.cancel(expr / nonmono[0]), x, y)
        assert sp.expand(g.as_expr() * h.as_expr() - expr) == 0
        g_l = LaurentPoly({(int(i), int(j)): Fraction(str(c)) for (i, j), c in g.terms()})
        h_l = LaurentPoly({(int(i), int(j)): Fraction(str(c)) for (i, j), c in h.terms()})
        assert kernel_membership(polygon, polygon.m, g_l * h_l)
        assert irreducibility_check(g_l * h_l, certificate=(g_l, h_l)).status == "reducible"
        fixture = {
            "polygon": [list(v) for v in verts],
            "m": polygon.m,
            "factor1": poly_terms(g),
            "factor2": poly_terms(h),
            "source": "factorization of the unique multiplicity-m curve; "
            "verified at load time by exact multiplication and kernel membership",
        }
        path = FIXTURE_DIR / f"{name}.json"
        path.write_text(json.dumps(fixture, indent=1, sort_keys=True))
        print("wrote", path)


if __name__ == "__main__":
    main()
