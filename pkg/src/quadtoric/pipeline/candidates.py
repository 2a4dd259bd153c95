"""Construction and rejection of candidate quadrilaterals.

Each surviving case of the classification fixes the fan of the would-be
surface up to two free side lengths (gamma, delta).  The volume condition
Vol = m^2 then becomes an integer quadratic ``f2 d^2 + f1 d + f0`` in
d = delta/gamma; its rational roots (when the discriminant is a perfect
square) determine candidate quadrilaterals that are then rejected by a
negative side, by lattice width < m, or by a reducible generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..diophantine import IntPoly, is_perfect_square, parse_poly
from ..lattice import LatticePolygon, lattice_width, width_along

Vec = tuple[int, int]


class CandidateError(ValueError):
    pass


def vol_quadratic(n: int, s: int, a: int, z, w):
    """Coefficients (f2, f1, f0) of the Vol = m^2 quadratic in delta/gamma.

    With c = a+1, d = b+1 (b = 8-a-n) and l = s+3, the side lengths satisfy
    ``c*beta = delta*w - gamma*(c+d+l*c*d)`` and
    ``alpha = delta*z - gamma*(1+l*d) - beta``; substituting into
    ``Vol = alpha*delta*w + beta*gamma*d`` and subtracting m^2 gives the
    quadratic (scaled by c to clear the denominator).  ``z`` and ``w`` may be
    integers or polynomials, so the same code yields numeric coefficients and
    the symbolic discriminant.
    """
    b = 8 - a - n
    if b < 0:
        raise CandidateError("need a + n <= 8")
    c, d, l = a + 1, b + 1, s + 3
    dv = IntPoly.var("d'")
    bp = (dv * w - (c + d + l * c * d)) * Fraction(1, c)
    ap = dv * z - (1 + l * d) - bp
    m = ap + bp + 1 + dv
    vol = ap * dv * w + bp * d
    eq = (vol - m * m) * c
    f2 = eq.coefficient("d'", 2)
    f1 = eq.coefficient("d'", 1)
    f0 = eq.coefficient("d'", 0)
    return f2, f1, f0


def vol_quadratic_int(n: int, s: int, a: int, z: int, w: int) -> tuple[int, int, int]:
    f2, f1, f0 = vol_quadratic(n, s, a, z, w)
    out = []
    for f in (f2, f1, f0):
        v = f.evaluate({})
        if v.denominator != 1:
            raise CandidateError("volume quadratic is not integral")
        out.append(int(v))
    return tuple(out)


def discriminant_poly(n: int, s: int, a: int) -> IntPoly:
    """f1^2 - 4 f0 f2 as an exact polynomial in z, w."""
    f2, f1, f0 = vol_quadratic(n, s, a, IntPoly.var("z"), IntPoly.var("w"))
    return f1 * f1 - 4 * f0 * f2


def verify_t_formula(n: int, s: int, a: int, t_formula: IntPoly, pell: IntPoly) -> Fraction:
    """Certify disc - t_formula^2 = lambda * pell by exact division.

    Returns lambda; raises if the identity fails, i.e. the closed form for t
    is wrong.  On the Pell conic this proves disc = t_formula^2 exactly.
    """
    disc = discriminant_poly(n, s, a)
    diff = disc - t_formula * t_formula
    lam = None
    for e, coef in pell.compress().monomials():
        target = diff.compress()
        cand = dict(target.monomials()).get(e)
        if cand is None:
            if coef:
                raise CandidateError("t-formula identity fails: missing monomial")
            continue
        ratio = cand / coef
        if lam is None:
            lam = ratio
        elif ratio != lam:
            raise CandidateError("t-formula identity fails: not proportional")
    if lam is None or not (diff - pell * lam).is_zero():
        raise CandidateError("t-formula identity fails")
    return lam


@dataclass(frozen=True)
class SideLengths:
    """Exact rational side lengths (alpha, beta, gamma, delta), gamma = 1 scale."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def primitive(self) -> tuple[int, int, int, int]:
        """Smallest integer multiple (gamma kept positive)."""
        vals = self.as_tuple()
        den = math.lcm(*[v.denominator for v in vals])
        ints = [int(v * den) for v in vals]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        if g:
            ints = [v // g for v in ints]
        return tuple(ints)


def side_lengths_from(
    n: int, s: int, a: int, z: int, w: int, branch: int
) -> SideLengths | None:
    """Solve Vol = m^2 for the side ratios on the chosen root branch.

    branch +1 picks the root (f1 - t) / (-2 f2), branch -1 the root
    (f1 + t) / (-2 f2), t = sqrt(disc) >= 0.  Returns None when the
    discriminant is not a perfect square (no rational candidate).
    """
    if branch not in (1, -1):
        raise CandidateError("branch must be +1 or -1")
    f2, f1, f0 = vol_quadratic_int(n, s, a, z, w)
    if f2 == 0:
        raise CandidateError("degenerate volume quadratic")
    t = is_perfect_square(f1 * f1 - 4 * f0 * f2)
    if t is None:
        return None
    b = 8 - a - n
    c, d, l = a + 1, b + 1, s + 3
    delta = Fraction(f1 - branch * t, -2 * f2)
    beta = (delta * w - (c + d + l * c * d)) / c
    alpha = delta * z - (1 + l * d) - beta
    return SideLengths(alpha, beta, Fraction(1), delta)


@dataclass(frozen=True)
class CandidateQuadrilateral:
    """One candidate with its construction data and rejection status.

    ``coordinates`` follow [[0,0], [alpha,0], [alpha+beta, c*beta],
    [delta*z, delta*w]] at the integer scale recorded in ``sides``.
    ``rejection`` is one of negative-side, width-below-m,
    reducible-generator, or none (the last would be an escalation).
    """

    case: tuple[int, int, int]  # (n, s, a)
    z: int
    w: int
    branch: int
    sides: tuple[int, int, int, int]
    coordinates: tuple[Vec, Vec, Vec, Vec]
    rejection: str
    detail: str


def build_quadrilateral(
    sides: tuple[int, int, int, int],
    c: int,
    z: int,
    w: int,
    case: tuple[int, int, int] = (0, 0, 0),
    branch: int = 0,
) -> CandidateQuadrilateral:
    """Vertex list from integer-scaled sides, with width/negativity verdict."""
    alpha, beta, gamma, delta = sides
    coords = (
        (0, 0),
        (alpha, 0),
        (alpha + beta, c * beta),
        (delta * z, delta * w),
    )
    if min(sides) <= 0:
        neg = [nm for nm, v in zip("alpha beta gamma delta".split(), sides) if v <= 0]
        return CandidateQuadrilateral(
            case, z, w, branch, sides, coords, "negative-side", ",".join(neg)
        )
    polygon = LatticePolygon(coords)
    m = polygon.m
    if polygon.vol != m * m:
        raise CandidateError(f"constructed candidate has Vol {polygon.vol} != m^2 {m * m}")
    width = lattice_width(polygon)
    if width.value < m:
        return CandidateQuadrilateral(
            case, z, w, branch, sides, coords, "width-below-m",
            f"width {width.value} along {width.witness} < m {m}",
        )
    return CandidateQuadrilateral(case, z, w, branch, sides, coords, "none", "")


def candidate_for(
    n: int, s: int, a: int, z: int, w: int, branch: int
) -> CandidateQuadrilateral | None:
    """side_lengths_from + build_quadrilateral at the primitive integer scale."""
    sl = side_lengths_from(n, s, a, z, w, branch)
    if sl is None:
        return None
    return build_quadrilateral(sl.primitive(), a + 1, z, w, (n, s, a), branch)


def m2_scaled_sides(n: int, s: int, a: int, z: int, w: int, branch: int) -> tuple[int, int, int, int] | None:
    """Side lengths at the gamma = -2*f2 scale (the scale of the recorded
    coordinate tables); None when the scale is not integral or disc not square."""
    sl = side_lengths_from(n, s, a, z, w, branch)
    if sl is None:
        return None
    f2, _, _ = vol_quadratic_int(n, s, a, z, w)
    scale = -2 * f2
    vals = [v * scale for v in sl.as_tuple()]
    if any(v.denominator != 1 for v in vals):
        return None
    return tuple(int(v) for v in vals)


# -- rational side functions for claim provenance ------------------------------


def side_ratio_numerators(
    n: int, s: int, a: int, t_formula: IntPoly, branch: int
) -> dict[str, tuple[IntPoly, IntPoly]]:
    """alpha/gamma, beta/gamma, delta/gamma as (numerator, denominator)
    rational functions of (z, w) on the given branch, t replaced by its
    closed form.  Used to cross-check the polynomials quoted in the region
    claims against this construction."""
    zv, wv = IntPoly.var("z"), IntPoly.var("w")
    f2, f1, f0 = vol_quadratic(n, s, a, zv, wv)
    b = 8 - a - n
    c, d, l = a + 1, b + 1, s + 3
    den = f2 * (-2)
    dnum = f1 - t_formula * branch
    bnum = (dnum * wv - (c + d + l * c * d) * den) * Fraction(1, c)
    anum = dnum * zv - (1 + l * d) * den - bnum
    return {"alpha": (anum, den), "beta": (bnum, den), "delta": (dnum, den)}


def width_margin_numerator(
    n: int, s: int, a: int, t_formula: IntPoly, branch: int, direction: str
) -> IntPoly:
    """Numerator of Width_v - m over the common denominator -2*f2.

    direction "skew" is (1, -1) (valid when c = 1 and w > z); "steep" is
    (c, -1) (valid when w < c*z), where the width equals (c)*alpha and the
    margin is (c-1)*alpha - beta - gamma - delta.
    """
    ratios = side_ratio_numerators(n, s, a, t_formula, branch)
    anum, den = ratios["alpha"]
    bnum, _ = ratios["beta"]
    dnum, _ = ratios["delta"]
    c = a + 1
    zv, wv = IntPoly.var("z"), IntPoly.var("w")
    if direction == "skew":
        if c != 1:
            raise CandidateError("skew width margin needs c = 1")
        return (wv - zv - 1) * dnum - bnum - den
    if direction == "steep":
        return (c - 1) * anum - bnum - dnum - den
    raise CandidateError(f"unknown width direction {direction!r}")
