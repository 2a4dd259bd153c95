"""Exact solvers and sign certificates for the number-theoretic case work.

Everything here is exact: polynomials carry `Fraction` coefficients, square
roots are integer square roots with a re-squaring check, and "no solutions in
this region" claims are produced either by finite enumeration or by a
substitution certificate whose coefficients all have one sign.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PolyError(ValueError):
    pass


class IntPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Terms map exponent tuples (aligned with ``vars``) to nonzero Fractions.
    Instances are immutable; arithmetic merges variable sets as needed.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], Fraction]):
        self.vars: tuple[str, ...] = tuple(vars)
        self.terms: dict[tuple[int, ...], Fraction] = {
            exps: Fraction(c) for exps, c in terms.items() if c != 0
        }

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: int | Fraction) -> "IntPoly":
        c = Fraction(c)
        return IntPoly((), {(): c} if c else {})

    @staticmethod
    def var(name: str) -> "IntPoly":
        return IntPoly((name,), {(1,): Fraction(1)})

    # -- variable bookkeeping ----------------------------------------------

    def _aligned(self, other: "IntPoly") -> tuple[tuple[str, ...], "IntPoly", "IntPoly"]:
        if self.vars == other.vars:
            return self.vars, self, other
        allvars = tuple(sorted(set(self.vars) | set(other.vars)))
        return allvars, self.embed(allvars), other.embed(allvars)

    def embed(self, allvars: Sequence[str]) -> "IntPoly":
        allvars = tuple(allvars)
        if allvars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(allvars)}
        idx = [pos[v] for v in self.vars]
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            e = [0] * len(allvars)
            for i, p in zip(idx, exps):
                e[i] = p
            terms[tuple(e)] = c
        return IntPoly(allvars, terms)

    def compress(self) -> "IntPoly":
        """Drop variables that never occur."""
        used = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        vars = tuple(self.vars[i] for i in used)
        return IntPoly(vars, {tuple(e[i] for i in used): c for e, c in self.terms.items()})

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "IntPoly | int | Fraction") -> "IntPoly":
        other = _coerce(other)
        vars, a, b = self._aligned(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return IntPoly(vars, terms)

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPoly | int | Fraction") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPoly | int | Fraction") -> "IntPoly":
        return _coerce(other) - self

    __radd__ = __add__

    def __mul__(self, other: "IntPoly | int | Fraction") -> "IntPoly":
        other = _coerce(other)
        vars, a, b = self._aligned(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return IntPoly(vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise PolyError("negative powers are not polynomials")
        result = IntPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (IntPoly, int, Fraction)):
            return NotImplemented
        diff = self - _coerce(other)
        return not diff.terms

    def __hash__(self):
        c = self.compress()
        return hash((c.vars, tuple(sorted(c.terms.items()))))

    def __repr__(self) -> str:
        return f"IntPoly({self.as_text()!r})"

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return 0
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coefficient(self, var: str, power: int) -> "IntPoly":
        """Coefficient of var**power, as a polynomial in the other variables."""
        if var not in self.vars:
            return self if power == 0 else IntPoly.const(0)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == power:
                terms[e[:i] + e[i + 1 :]] = terms.get(e[:i] + e[i + 1 :], Fraction(0)) + c
        return IntPoly(rest, terms)

    def substitute(self, assignments: Mapping[str, "IntPoly | int | Fraction"]) -> "IntPoly":
        """Substitute polynomials (or constants) for variables, exactly."""
        result = IntPoly.const(0)
        polys = {v: _coerce(p) for v, p in assignments.items()}
        for e, c in self.terms.items():
            term = IntPoly.const(c)
            for var, power in zip(self.vars, e):
                if not power:
                    continue
                base = polys.get(var, IntPoly.var(var))
                term = term * base**power
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, int | Fraction]) -> Fraction:
        missing = [v for v in self.vars if v not in point and self.degree(v) > 0]
        if missing:
            raise PolyError(f"no value given for {missing}")
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for var, power in zip(self.vars, e):
                if power:
                    val *= Fraction(point[var]) ** power
            total += val
        return total

    def coefficients(self) -> list[Fraction]:
        return [c for _, c in sorted(self.terms.items())]

    def monomials(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    def as_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for var, power in zip(self.vars, e):
                if power == 1:
                    factors.append(var)
                elif power > 1:
                    factors.append(f"{var}^{power}")
            coef = str(c)
            body = "*".join(factors)
            if body and abs(c) == 1:
                text = body if c > 0 else f"-{body}"
            elif body:
                text = f"{coef}*{body}"
            else:
                text = coef
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _coerce(x: "IntPoly | int | Fraction") -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly.const(x)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*^()/])")


class _Parser:
    """Recursive-descent parser for `+ - * ^ ( )` polynomial expressions.

    Implicit multiplication is not accepted.  Integer literals and `a/b`
    rational literals are allowed; `/` binds like `*` and requires a numeric
    divisor.
    """

    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise PolyError(f"cannot tokenize {text[pos:pos+10]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise PolyError("unexpected end of expression")
        self.i += 1
        return tok

    def parse(self) -> IntPoly:
        poly = self.expr()
        if self.peek() is not None:
            raise PolyError(f"trailing input at {self.tokens[self.i:]}")
        return poly

    def expr(self) -> IntPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        result = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            result = result + self.term() * (1 if op == "+" else -1)
        return result

    def term(self) -> IntPoly:
        result = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.power()
            if op == "*":
                result = result * rhs
            else:
                if rhs.degree() != 0:
                    raise PolyError("division only by numeric literals")
                value = rhs.evaluate({})
                if value == 0:
                    raise PolyError("division by zero")
                result = IntPoly(result.vars, {e: c / value for e, c in result.terms.items()})
        return result

    def power(self) -> IntPoly:
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise PolyError(f"exponent must be a literal integer, got {exp_tok!r}")
            return base ** int(exp_tok)
        return base

    def atom(self) -> IntPoly:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise PolyError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -self.atom()
        if tok.isdigit():
            return IntPoly.const(int(tok))
        if tok.isidentifier():
            return IntPoly.var(tok)
        raise PolyError(f"unexpected token {tok!r}")


def parse_poly(text: str) -> IntPoly:
    """Parse a polynomial in the plain-text grammar (no implicit products)."""
    return _Parser(text).parse()


# -- integer helpers ----------------------------------------------------------

def is_perfect_square(n: int) -> int | None:
    """Nonnegative square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def quadratic_roots_rational(f2: int, f1: int, f0: int) -> tuple[Fraction, Fraction] | None:
    """Rational roots of f2 x^2 + f1 x + f0 when the discriminant is square.

    Raises PolyError when f2 = 0 (the degenerate linear case is flagged, not
    silently solved).
    """
    if f2 == 0:
        raise PolyError("leading coefficient is zero: not a quadratic")
    t = is_perfect_square(f1 * f1 - 4 * f0 * f2)
    if t is None:
        return None
    return (Fraction(-f1 - t, 2 * f2), Fraction(-f1 + t, 2 * f2))


# -- bounded conic enumeration ------------------------------------------------

@dataclass(frozen=True)
class ConicSolutionSet:
    """Complete integer solutions of a conic over a finite search region."""

    equation: str
    region: str
    solutions: tuple[tuple[int, int], ...]
    certificate: str


def _poly_in(q: IntPoly, names: tuple[str, str]) -> None:
    extra = [v for v in q.compress().vars if v not in names]
    if extra:
        raise PolyError(f"conic must use only variables {names}, found {extra}")


def solve_conic_bounded(
    q: IntPoly,
    z_lines: Iterable[int] = (),
    w_lines: Iterable[int] = (),
    positive: bool = True,
    z_range: tuple[int, int] | None = None,
    w_range: tuple[int, int] | None = None,
    vars: tuple[str, str] = ("z", "w"),
) -> ConicSolutionSet:
    """All integer points of ``q = 0`` on the given coordinate lines.

    The region is a union of lines ``z = const`` and ``w = const`` (rectangles
    and half-strips are unions of such lines; on each line the restriction of
    the quadric has at most two roots, so no bound on the free variable is
    needed).  ``positive`` keeps only points with both coordinates >= 1.
    """
    _poly_in(q, vars)
    if q.degree() > 2:
        raise PolyError("not a quadric")
    zn, wn = vars
    found: set[tuple[int, int]] = set()

    def line_roots(fixed: str, value: int, free: str) -> list[int]:
        restricted = q.substitute({fixed: IntPoly.const(value)})
        c2 = restricted.coefficient(free, 2).evaluate({})
        c1 = restricted.coefficient(free, 1).evaluate({})
        c0 = restricted.coefficient(free, 0).evaluate({})
        roots: list[int] = []
        if c2 == 0:
            if c1 != 0:
                r = Fraction(-c0, c1)
                if r.denominator == 1:
                    roots.append(int(r))
            elif c0 == 0:
                raise PolyError(f"conic vanishes on the whole line {fixed}={value}")
            return roots
        # Common denominator first, then integer quadratic.
        den = math.lcm(c2.denominator, c1.denominator, c0.denominator)
        a, b, c = int(c2 * den), int(c1 * den), int(c0 * den)
        rr = quadratic_roots_rational(a, b, c)
        if rr:
            roots.extend(int(r) for r in rr if r.denominator == 1)
        return sorted(set(roots))

    z_values = set(z_lines)
    w_values = set(w_lines)
    if z_range:
        z_values.update(range(z_range[0], z_range[1] + 1))
    if w_range:
        w_values.update(range(w_range[0], w_range[1] + 1))
    for zv in sorted(z_values):
        for wv in line_roots(zn, zv, wn):
            found.add((zv, wv))
    for wv in sorted(w_values):
        for zv in line_roots(wn, wv, zn):
            found.add((zv, wv))
    if positive:
        found = {(z, w) for z, w in found if z >= 1 and w >= 1}
    for z, w in found:
        assert q.evaluate({zn: z, wn: w}) == 0
    region = f"{zn} in {sorted(z_values) if len(z_values) < 30 else 'range'}; " \
             f"{wn} in {sorted(w_values) if len(w_values) < 30 else 'range'}"
    cert = (
        f"enumerated {len(z_values)} {zn}-lines and {len(w_values)} {wn}-lines; "
        "on each line the restriction is a polynomial of degree <= 2 with "
        "exactly tested integer roots"
    )
    return ConicSolutionSet(q.as_text(), region, tuple(sorted(found)), cert)


# -- quartic families ----------------------------------------------------------

def solve_quartic_family(
    f: IntPoly,
    g: IntPoly,
    s_range: tuple[int, int],
    w_range: tuple[int, int],
    s_var: str = "s",
) -> list[tuple[int, int]]:
    """Integer solutions of ``f(s) w^2 + g(s) = 0`` with s, w in the ranges.

    For each s the equation forces ``w^2 = -g(s)/f(s)``, which must be a
    nonnegative perfect square.  Degenerate s with f(s) = 0 contribute only
    when g(s) = 0 too, in which case every w works and the family is
    rejected as ill-posed.
    """
    if f.is_zero():
        raise PolyError("f must not be identically zero")
    if f.degree() > 2 or g.degree() > 4:
        raise PolyError("family must have deg f <= 2 and deg g <= 4")
    solutions: list[tuple[int, int]] = []
    for s in range(s_range[0], s_range[1] + 1):
        fs = f.evaluate({s_var: s})
        gs = g.evaluate({s_var: s})
        if fs == 0:
            if gs == 0:
                raise PolyError(f"family degenerates at {s_var}={s}: every w solves it")
            continue
        w2 = Fraction(-gs, fs)
        if w2 < 0 or w2.denominator != 1:
            continue
        w = is_perfect_square(int(w2))
        if w is None:
            continue
        if w_range[0] <= w <= w_range[1]:
            solutions.append((s, w))
    return solutions


# -- modular insolubility -------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def mod_p_insoluble(system: Sequence[IntPoly], p: int, witness: list | None = None) -> bool:
    """True iff the system has no common root over Z/p (exhaustive search).

    When soluble and ``witness`` is given, a solving assignment is appended.
    """
    if not _is_prime(p):
        raise PolyError(f"{p} is not prime")
    vars = sorted({v for poly in system for v in poly.compress().vars})
    k = len(vars)

    def rec(i: int, point: dict[str, int]) -> bool:
        if i == k:
            if all(poly.evaluate(point) % p == 0 for poly in system):
                if witness is not None:
                    witness.append(dict(point))
                return False
            return True
        for val in range(p):
            point[vars[i]] = val
            if not rec(i + 1, point):
                return False
        del point[vars[i]]
        return True

    return rec(0, {})


# -- sign certificates ----------------------------------------------------------

@dataclass(frozen=True)
class SignCertificate:
    """Outcome of a substitution sign check.

    ``ok`` means every coefficient of the expanded polynomial has the claimed
    sign (zero coefficients are allowed); otherwise ``offending`` holds one
    monomial with the wrong sign.
    """

    ok: bool
    claim: str
    expanded: IntPoly
    offending: tuple[tuple[int, ...], Fraction] | None = None


Substitution = Sequence[tuple[str, IntPoly]]


def apply_substitutions(poly: IntPoly, substitution: Substitution) -> IntPoly:
    """Apply (variable, expression) replacements one after the other."""
    for var, expr in substitution:
        poly = poly.substitute({var: expr})
    return poly


def sign_certificate(
    poly: IntPoly,
    substitution: Substitution,
    claim: str,
) -> SignCertificate:
    """Certify the sign of ``poly`` after exact sequential substitutions.

    The substituted variables are expressions in fresh variables understood to
    range over the nonnegative reals, so "all coefficients <= 0" proves the
    polynomial is <= 0 on the whole region (and similarly for nonnegative).
    ``claim`` is "negative" (all coefficients <= 0) or "positive" (>= 0).
    """
    if claim not in ("negative", "positive"):
        raise PolyError(f"unknown claim {claim!r}")
    expanded = apply_substitutions(poly, substitution)
    for e, c in sorted(expanded.terms.items()):
        if claim == "negative" and c > 0:
            return SignCertificate(False, claim, expanded, (e, c))
        if claim == "positive" and c < 0:
            return SignCertificate(False, claim, expanded, (e, c))
    return SignCertificate(True, claim, expanded)


def quadratic_in_epsilon_certificate(
    poly: IntPoly,
    substitution: Substitution,
    epsilon: str,
    epsilon_max: Fraction,
    claim: str,
) -> bool:
    """Certify a sign on an epsilon-interval by convexity.

    After substitution the polynomial is viewed as a quadratic in ``epsilon``
    on [0, epsilon_max].  If the leading coefficient is certified >= 0, the
    maximum over the interval is attained at an endpoint, so two endpoint
    certificates prove "negative"; symmetrically a <= 0 leading coefficient
    lets endpoint certificates prove "positive".
    """
    expanded = apply_substitutions(poly, substitution)
    if expanded.degree(epsilon) > 2:
        raise PolyError("not a quadratic in the epsilon variable")
    lead = expanded.coefficient(epsilon, 2)
    want_lead = "positive" if claim == "negative" else "negative"
    lead_cert = sign_certificate(lead, {}, want_lead)
    if not lead_cert.ok:
        return False
    at0 = expanded.substitute({epsilon: IntPoly.const(0)})
    at1 = expanded.substitute({epsilon: IntPoly.const(epsilon_max)})
    return (
        sign_certificate(at0, {}, claim).ok
        and sign_certificate(at1, {}, claim).ok
    )


def definite_quadratic_certificate(poly: IntPoly, var: str, claim: str) -> bool:
    """Certify that a quadratic in ``var`` has one sign for ALL real values.

    Requires the leading coefficient (a polynomial in the other variables) to
    be sign-certified and the discriminant to be certified <= 0 on the region
    where the remaining variables are nonnegative.
    """
    if poly.degree(var) != 2:
        raise PolyError(f"{var}-degree must be exactly 2")
    a = poly.coefficient(var, 2)
    b = poly.coefficient(var, 1)
    c = poly.coefficient(var, 0)
    lead_sign = "negative" if claim == "negative" else "positive"
    if not sign_certificate(a, {}, lead_sign).ok:
        return False
    disc = b * b - 4 * a * c
    return sign_certificate(disc, {}, "negative").ok
