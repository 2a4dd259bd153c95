"""Fixture loading and claim verification.

Fixture files are records of equations, solution lists and region
certificates.  Nothing in them is trusted: every claim is re-verified
exactly when its case runs, and a corrupted fixture surfaces as a failed
verification with the fixture path in the diagnosis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..diophantine import (
    IntPoly,
    definite_quadratic_certificate,
    parse_poly,
    quadratic_in_epsilon_certificate,
    sign_certificate,
)
from ..linsys import LaurentPoly


class FixtureError(ValueError):
    pass


def fixture_dir() -> Path:
    return Path(resources.files("quadtoric.pipeline") / "fixtures")


def load_fixture(name: str, directory: str | Path | None = None) -> dict:
    base = Path(directory) if directory else fixture_dir()
    path = base / name
    if not path.exists():
        raise FixtureError(f"fixture {path} is missing")
    with open(path) as fh:
        return json.load(fh)


def parse_substitutions(raw: list[list[str]]) -> list[tuple[str, IntPoly]]:
    return [(var, parse_poly(expr)) for var, expr in raw]


def verify_claim(claim: dict) -> bool:
    """Run one region certificate; True iff it certifies.

    Techniques:
      signs                -- every coefficient after substitution has the
                              claimed sign;
      eps_quadratic        -- convexity in the epsilon variable on
                              [0, epsilon_max] plus endpoint sign checks;
      coefficients_definite-- expand in ``expand_var``; each coefficient is
                              either sign-definite by inspection or a
                              negative/positive-definite quadratic;
      definite_in_var      -- sign-definite as a quadratic in definite_var
                              for every real value, discriminant certified
                              after the given substitutions.
    """
    poly = parse_poly(claim["poly"])
    subs = parse_substitutions(claim.get("substitutions", []))
    technique = claim["technique"]
    want = claim["claim"]
    if technique == "signs":
        return sign_certificate(poly, subs, want).ok
    if technique == "eps_quadratic":
        return quadratic_in_epsilon_certificate(
            poly, subs, claim.get("epsilon", "e"), Fraction(claim["epsilon_max"]), want
        )
    if technique == "coefficients_definite":
        from ..diophantine import apply_substitutions

        expanded = apply_substitutions(poly, subs)
        var = claim["expand_var"]
        for power in range(expanded.degree(var) + 1):
            coeff = expanded.coefficient(var, power).compress()
            if sign_certificate(coeff, [], want).ok:
                continue
            vars_left = [v for v in coeff.vars if coeff.degree(v) == 2]
            if not any(
                definite_quadratic_certificate(coeff, v, want) for v in vars_left
            ):
                return False
        return True
    if technique == "definite_in_var":
        from ..diophantine import apply_substitutions

        var = claim["definite_var"]
        a = poly.coefficient(var, 2)
        c = poly.coefficient(var, 0)
        b = poly.coefficient(var, 1)
        lead_ok = sign_certificate(a, [], want).ok
        disc = b * b - 4 * a * c
        disc_ok = sign_certificate(disc, parse_substitutions(claim.get("substitutions", [])), "negative").ok
        return lead_ok and disc_ok
    raise FixtureError(f"unknown claim technique {technique!r}")


def load_reducibility(name: str, directory: str | Path | None = None) -> dict:
    """Load a factorization certificate; returns polygon data and factors."""
    base = Path(directory) if directory else fixture_dir()
    path = base / "reducibility" / f"{name}.json"
    if not path.exists():
        raise FixtureError(f"reducibility certificate {path} is missing")
    with open(path) as fh:
        data = json.load(fh)

    def poly_of(terms) -> LaurentPoly:
        return LaurentPoly({(int(i), int(j)): Fraction(c) for (i, j), c in terms})

    return {
        "polygon": [tuple(v) for v in data["polygon"]],
        "m": data["m"],
        "factor1": poly_of(data["factor1"]),
        "factor2": poly_of(data["factor2"]),
        "name": name,
    }
