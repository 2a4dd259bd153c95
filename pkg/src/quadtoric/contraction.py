"""Dual-graph contraction towers and the semi-elliptic axioms.

A configuration is a weighted graph of curves: the exceptional chains over
the torus-fixed points a hypothetical (-1) curve meets, plus that curve
itself.  Contracting the unique (-1) node repeatedly must keep the graph
simple normal crossing with at most one (-1) curve; violations are reported
as results, because the impossibility arguments rely on them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .chains import Mat2
from .fan import (
    ResolvedFan,
    all_rays_negative,
    is_du_val_cone,
    minimal_resolution,
    normal_fan,
)
from .lattice import LatticePolygon


class ConfigError(ValueError):
    pass


@dataclass
class DualGraphConfig:
    """Curves with integer self-intersections and transversal intersections.

    ``nodes`` maps node id -> self-intersection; ``edges`` is a set of
    frozensets {i, j}.  Markers single out the floating (-1) curve and which
    nodes belong to the toric boundary / exceptional locus.
    """

    nodes: dict[int, int]
    edges: set[frozenset[int]]
    r_node: int | None = None
    labels: dict[int, str] = field(default_factory=dict)

    def copy(self) -> "DualGraphConfig":
        return DualGraphConfig(
            dict(self.nodes), set(self.edges), self.r_node, dict(self.labels)
        )

    def neighbours(self, i: int) -> list[int]:
        return sorted(
            next(iter(e - {i})) for e in self.edges if i in e
        )

    def degree(self, i: int) -> int:
        return len([e for e in self.edges if i in e])

    def validate(self) -> None:
        for e in self.edges:
            if len(e) != 2 or not e <= set(self.nodes):
                raise ConfigError(f"bad edge {set(e)}")
        minus_ones = [i for i, s in self.nodes.items() if s == -1]
        if len(minus_ones) > 1:
            raise ConfigError(f"more than one (-1) curve: {minus_ones}")
        deg3 = [i for i in self.nodes if self.degree(i) > 2]
        if any(self.degree(i) > 3 for i in self.nodes):
            raise ConfigError("node of degree > 3")
        if len(deg3) > 1:
            raise ConfigError(f"more than one degree-3 node: {deg3}")

    @staticmethod
    def chain(selfints: Iterable[int], start: int = 0) -> "DualGraphConfig":
        sis = list(selfints)
        nodes = {start + i: s for i, s in enumerate(sis)}
        edges = {frozenset((start + i, start + i + 1)) for i in range(len(sis) - 1)}
        return DualGraphConfig(nodes, edges)


@dataclass(frozen=True)
class ContractionStep:
    contracted: int
    neighbours: tuple[int, ...]
    blowup_type: str  # "I" when read in reverse it blows up an intersection


@dataclass(frozen=True)
class ContractionTrace:
    """Snapshots of the configuration along the contraction tower."""

    snapshots: tuple[DualGraphConfig, ...]
    steps: tuple[ContractionStep, ...]
    outcome: str  # "empty" | "stuck" | "violation"
    violation: str | None = None

    @property
    def final(self) -> DualGraphConfig:
        return self.snapshots[-1]

    def contracted_count(self) -> int:
        return len(self.steps)


def simulate_contractions(cfg: DualGraphConfig) -> ContractionTrace:
    """Repeatedly contract the unique (-1) node.

    Stops with outcome "empty" (config fully contracted), "stuck" (no (-1)
    node remains; the image is the resolution of the residual singularity),
    or "violation" when simple normal crossing or the one-(-1) invariant
    would break.
    """
    current = cfg.copy()
    current.validate()
    snapshots = [current.copy()]
    steps: list[ContractionStep] = []
    while current.nodes:
        minus_ones = [i for i, s in current.nodes.items() if s == -1]
        if not minus_ones:
            return ContractionTrace(tuple(snapshots), tuple(steps), "stuck")
        if len(minus_ones) > 1:
            return ContractionTrace(
                tuple(snapshots), tuple(steps), "violation",
                f"two (-1) curves {minus_ones}",
            )
        i = minus_ones[0]
        nbrs = current.neighbours(i)
        if len(nbrs) > 2:
            return ContractionTrace(
                tuple(snapshots), tuple(steps), "violation",
                f"(-1) curve {i} meets {len(nbrs)} curves",
            )
        if len(nbrs) == 2 and frozenset(nbrs) in current.edges:
            return ContractionTrace(
                tuple(snapshots), tuple(steps), "violation",
                f"contracting {i} would create a tangency between {nbrs}",
            )
        # Reading the tower backwards, contracting at an intersection of two
        # curves is the inverse of a blowup at an intersection point.
        btype = "I" if len(nbrs) == 2 else "II"
        for j in nbrs:
            current.nodes[j] += 1
        current.edges = {e for e in current.edges if i not in e}
        del current.nodes[i]
        if current.r_node == i:
            current.r_node = None
        if len(nbrs) == 2:
            current.edges.add(frozenset(nbrs))
        steps.append(ContractionStep(i, tuple(nbrs), btype))
        snapshots.append(current.copy())
    return ContractionTrace(tuple(snapshots), tuple(steps), "empty")


# -- classified relevant-locus shapes ------------------------------------------


def classify_a0_chain(s: int) -> tuple[Mat2, int]:
    """Chain matrix and heavy-curve number for the smooth-point tower.

    The relevant chain is s curves of (-2) followed by a (-1); its matrix is
    [[-s, -1], [s+1, 1]] and the heavy curve has self-intersection -(s+5).
    s = 0 (a bare (-1) meeting two smooth points) is excluded upstream.
    """
    if s <= 0:
        raise ConfigError("s must be positive in the smooth-point tower")
    return Mat2(-s, -1, s + 1, 1), -(s + 5)


def classify_an_chain(n: int, s: int) -> tuple[Mat2, int]:
    """Chain matrix and heavy-curve number for the A_n tower.

    For s = -2 this is the plain A_n chain of (-2) curves; for s > -2 it is
    n-1 curves of (-2), one (-3), s+1 curves of (-2) and a final (-1).
    """
    if n < 1 or s < -2:
        raise ConfigError("need n >= 1 and s >= -2")
    return Mat2(-(n * s + 3 * n - 1), -n, (n + 1) * s + 3 * n + 2, n + 1), -(s + 5)


def classify_de_chain(p: int, q: int, r: int, l: int) -> DualGraphConfig:
    """Relevant locus whose contraction resolves a D/E-type point.

    One chain has l + r curves, all (-2) except the (l+1)-th which is (-3);
    the other is p curves of (-2), the degree-3 curve of -(l+3), then q
    curves of (-2).  The floating (-1) joins the first chain's l-end to the
    degree-3 curve.
    """
    if min(p, q, r) < 1 or l < 0:
        raise ConfigError("need p, q, r >= 1 and l >= 0")
    s_chain = [-2] * l + [-3] + [-2] * (r - 1)
    sp_chain = [-2] * p + [-(l + 3)] + [-2] * q
    cfg = DualGraphConfig.chain(s_chain)
    base = len(s_chain)
    other = DualGraphConfig.chain(sp_chain, start=base)
    cfg.nodes.update(other.nodes)
    cfg.edges.update(other.edges)
    r_id = base + len(sp_chain)
    cfg.nodes[r_id] = -1
    cfg.r_node = r_id
    cfg.labels[r_id] = "R"
    c_prime = base + p  # the degree-3 node
    cfg.labels[c_prime] = "C'"
    cfg.edges.add(frozenset((r_id, 0)))
    cfg.edges.add(frozenset((r_id, c_prime)))
    cfg.validate()
    return cfg


def dynkin_shape(cfg: DualGraphConfig) -> str | None:
    """Classify an all-(-2) forest as A_n / D_n / E_n, else None."""
    if not cfg.nodes or any(s != -2 for s in cfg.nodes.values()):
        return None
    degrees = {i: cfg.degree(i) for i in cfg.nodes}
    if len(cfg.edges) != len(cfg.nodes) - 1:
        return None  # not a tree
    branch = [i for i, d in degrees.items() if d == 3]
    n = len(cfg.nodes)
    if not branch:
        return f"A{n}"
    if len(branch) > 1:
        return None
    # Arm lengths from the branch node.
    arms = []
    for start in cfg.neighbours(branch[0]):
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = [j for j in cfg.neighbours(cur) if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[:2] == [1, 2]:
        return f"E{n}"
    return None


# -- semi-elliptic checker ------------------------------------------------------


@dataclass(frozen=True)
class Placement:
    """Choice of exceptional curves (by resolved-fan index) that R meets."""

    touched: tuple[int, ...]


@dataclass(frozen=True)
class SemiEllipticVerdict:
    ok: bool
    failed_axiom: str | None
    witness: Placement | None
    surviving_exceptional: int | None
    resolved: ResolvedFan

    def __bool__(self) -> bool:
        return self.ok


def _corner_of(resolved: ResolvedFan, idx: int) -> int:
    # Exceptional ray `idx` lies over the corner between the previous and the
    # next strict-transform rays; identify it by the previous original ray.
    n = len(resolved.origin)
    j = idx
    while resolved.origin[j % n] is None:
        j -= 1
    return resolved.origin[j % n]


def _relevant_locus(
    resolved: ResolvedFan, touched: tuple[int, ...]
) -> tuple[DualGraphConfig, int]:
    """Config of R plus the exceptional chains over the touched corners."""
    corners = sorted({_corner_of(resolved, t) for t in touched})
    chains: dict[int, list[int]] = {c: [] for c in corners}
    for i, o in enumerate(resolved.origin):
        if o is None and _corner_of(resolved, i) in chains:
            chains[_corner_of(resolved, i)].append(i)
    cfg = DualGraphConfig({}, set())
    for c, members in chains.items():
        for a, b in zip(members, members[1:]):
            cfg.edges.add(frozenset((a, b)))
        for i in members:
            cfg.nodes[i] = resolved.self_intersections[i]
    r_id = len(resolved.origin)
    cfg.nodes[r_id] = -1
    cfg.r_node = r_id
    for t in touched:
        cfg.edges.add(frozenset((r_id, t)))
    locus_exceptional = sum(len(m) for m in chains.values())
    cfg.validate()
    return cfg, locus_exceptional


def check_semi_elliptic(p: LatticePolygon) -> SemiEllipticVerdict:
    """Decide the combinatorial semi-elliptic axioms for a quadrilateral.

    Enumerates placements of a hypothetical (-1) curve meeting at most two
    exceptional curves over distinct torus-fixed points; the first placement
    satisfying all axioms is returned as witness.  Geometric existence of the
    curve is not decided.
    """
    if len(p.vertices) != 4:
        raise ConfigError("semi-elliptic check is implemented for quadrilaterals")
    fan = normal_fan(p)
    resolved = minimal_resolution(fan)
    if not all_rays_negative(resolved):
        return SemiEllipticVerdict(False, "negative-boundary", None, None, resolved)
    exceptional = resolved.exceptional_indices()
    total_exceptional = len(exceptional)
    by_corner: dict[int, list[int]] = {}
    for i in exceptional:
        by_corner.setdefault(_corner_of(resolved, i), []).append(i)

    placements: list[tuple[int, ...]] = [()]
    placements += [(i,) for i in exceptional]
    placements += [
        (i, j)
        for i, j in itertools.combinations(exceptional, 2)
        if _corner_of(resolved, i) != _corner_of(resolved, j)
    ]
    last_failure = "eight-curve-count"
    for touched in placements:
        touched_corners = {_corner_of(resolved, t) for t in touched}
        untouched = [c for c in range(4) if c not in touched_corners]
        if any(is_du_val_cone(*fan.cone(c)) is None for c in untouched):
            last_failure = "untouched-du-val"
            continue
        try:
            cfg, _ = _relevant_locus(resolved, touched)
        except ConfigError:
            last_failure = "contraction-violation"
            continue
        trace = simulate_contractions(cfg)
        if trace.outcome == "violation":
            last_failure = "contraction-violation"
            continue
        # The floating (-1) curve is contracted first (it is the unique (-1)),
        # so the number of exceptional curves contracted is steps - 1.
        if trace.outcome == "stuck":
            final = trace.final
            if any(s != -2 for s in final.nodes.values()) or dynkin_shape(final) is None:
                last_failure = "residual-not-du-val"
                continue
        surviving = total_exceptional - (trace.contracted_count() - 1)
        if surviving == 8:
            return SemiEllipticVerdict(True, None, Placement(touched), 8, resolved)
        last_failure = "eight-curve-count"
    return SemiEllipticVerdict(False, last_failure, None, None, resolved)


# -- endchain case classification ------------------------------------------------


def endchain_analysis(cfg: DualGraphConfig, d_neighbours: tuple[int, int]) -> str:
    """Classify a two-chain configuration by how R sits next to the divisor D.

    ``d_neighbours`` are the two endcurve node ids adjacent to the connecting
    (-1) boundary divisor (the inner curves).  Returns "case I" (R meets
    neither inner curve), "case II" (one), "case III" (both, impossible
    downstream), or "DE-shape" when a degree-3 node is present.
    """
    if cfg.r_node is None:
        raise ConfigError("configuration has no marked (-1) curve")
    if any(cfg.degree(i) > 2 for i in cfg.nodes if i != cfg.r_node):
        return "DE-shape"
    touched = set(cfg.neighbours(cfg.r_node))
    inner = set(d_neighbours)
    overlap = len(touched & inner)
    return {0: "case I", 1: "case II", 2: "case III"}[overlap]
