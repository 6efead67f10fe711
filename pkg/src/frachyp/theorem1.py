"""Randomized recoloring for (a:b)-colorings of sparse n-uniform hypergraphs.

Every vertex gets a uniform random b-subset of colors and a uniform weight in
[0, 1).  Light vertices (weight below ``threshold_p(n)``) that lie in an
initially monochromatic edge swap one triggering color for the next color,
cyclically, that they do not already hold.  Only initially monochromatic
edges trigger recoloring and each vertex is recolored at most once.

Failures are explained by five bad events:

* B1: an initially monochromatic edge whose vertices are all heavy;
* B2: an edge initially monochromatic in two colors;
* B3: a light vertex in two initially monochromatic edges of distinct colors;
* B4: an edge made monochromatic by a vertex recolored because of another edge;
* B5: as B4, but the recolored vertex was triggered by the edge itself.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from . import _rng
from .coloring import ColorSet, FractionalColoring, members, random_masks
from .errors import FullPalette, InvalidParams, RegimeWarning
from .hypergraph import Hypergraph

BAD_EVENTS = ("B1", "B2", "B3", "B4", "B5")


def threshold_p(n: int) -> float:
    """Lightness threshold ``ln(n / ln n) / (2n)``."""
    if n <= 2:
        raise InvalidParams(f"threshold needs n >= 3, got {n}")
    return 0.5 * math.log(n / math.log(n)) / n


def thm1_regime(n: int, a: int, b: int) -> dict[str, bool]:
    """Which hypotheses hold: the theorem's, the union-bound proof's, and the B2/B5 side conditions."""
    c = default_constant(a, b)
    ln_n = math.log(n) if n > 1 else 0.0
    return {
        "theorem": n > 1 and 2 <= b <= a - 2 <= n / (2 * ln_n),
        "proof": a - b >= 2 and b >= 2 and a >= 4 and n > 5,
        "b2_b5": n > 1 and a < n / ln_n and a ** 1.5 * c < 1,
    }


def default_constant(a: int, b: int) -> float:
    return (a ** 3 * b) ** -0.5


def log_edge_budget_thm1(n: int, a: int, b: int) -> float:
    return -0.5 * math.log(a * b ** 3) + 0.5 * math.log(n / math.log(n)) + (n - 1) * math.log(a / b)


def edge_budget_thm1(n: int, a: int, b: int) -> float:
    """Edge count below which every n-uniform hypergraph is (a:b)-colorable.

    Evaluates ``(a b^3)^(-1/2) (n / ln n)^(1/2) (a/b)^(n-1)``; warns with
    ``RegimeWarning`` outside ``2 <= b <= a-2 <= n/(2 ln n)``.
    """
    if n < 2 or not 1 <= b <= a:
        raise InvalidParams(f"need n >= 2 and 1 <= b <= a, got n={n}, a={a}, b={b}")
    if not thm1_regime(n, a, b)["theorem"]:
        warnings.warn(f"(n, a, b) = ({n}, {a}, {b}) is outside 2 <= b <= a-2 <= n/(2 ln n)",
                      RegimeWarning, stacklevel=2)
    log_value = log_edge_budget_thm1(n, a, b)
    # same quantity written with c = (a^3 b)^(-1/2) and (a/b)^n
    log_c_form = math.log(default_constant(a, b)) + 0.5 * math.log(n / math.log(n)) + n * math.log(a / b)
    assert math.isclose(log_value, log_c_form, rel_tol=1e-12, abs_tol=1e-12)
    return math.exp(log_value) if log_value < 709 else math.inf


def bad_event_bounds(n: int, a: int, b: int, c: float | None = None) -> dict[str, float]:
    """Analytic upper bounds on P(B1..B5) and their sum under ``union``."""
    if not 1 <= b < a or n < 2:
        raise InvalidParams(f"need 1 <= b < a and n >= 2, got n={n}, a={a}, b={b}")
    if c is None:
        c = default_constant(a, b)
    out = {
        "B1": a * c,
        "B2": 1 / n,
        "B3": a ** 3 * c ** 2 * b / (2 * math.e * (a - b)),
        "B4": a ** 3 * c ** 2 / (math.e * (a - b)),
        "B5": 1 / n,
    }
    out["union"] = sum(out.values())
    regime = thm1_regime(n, a, b)
    if not regime["proof"]:
        warnings.warn(f"(n, a, b) = ({n}, {a}, {b}) violates a-b >= 2, b >= 2, a >= 4, n > 5",
                      RegimeWarning, stacklevel=2)
    elif c == default_constant(a, b):
        assert out["union"] < 1, out
    return out


def next_available_color(cs: ColorSet, gamma: int) -> int:
    """First color gamma+1, gamma+2, ... (mod a) missing from ``cs``."""
    a = cs.palette_size
    if gamma not in cs:
        raise InvalidParams(f"color {gamma} is not in {cs.members}")
    for t in range(1, a):
        c = (gamma + t) % a
        if c not in cs:
            return c
    raise FullPalette(f"{cs.members} already holds every color of range({a})")


@dataclass(frozen=True)
class SolverParams:
    a: int
    b: int
    seed: int
    p_override: float | None = None

    def __post_init__(self):
        if not 1 <= self.b <= self.a:
            raise InvalidParams(f"need 1 <= b <= a, got a={self.a}, b={self.b}")
        if self.p_override is not None and not 0 < self.p_override < 1:
            raise InvalidParams(f"p must lie in (0, 1), got {self.p_override}")
        if not 2 <= self.b <= self.a - 2:
            warnings.warn(f"(a, b) = ({self.a}, {self.b}) is outside 2 <= b <= a-2",
                          RegimeWarning, stacklevel=3)


@dataclass(frozen=True)
class WeightAssignment:
    weights: tuple[float, ...]

    def order(self) -> list[int]:
        """Vertices by increasing weight, ties broken by id."""
        return sorted(range(len(self.weights)), key=lambda u: (self.weights[u], u))


class RecolorEvent(NamedTuple):
    vertex: int
    removed_color: int
    added_color: int
    triggering_edge: int
    weight: float


class B3Witness(NamedTuple):
    vertex: int
    edge_a: int
    color_a: int
    edge_b: int
    color_b: int
    overlap: int


class RecolorWitness(NamedTuple):
    """B4/B5: edge ``edge`` became monochromatic in ``color`` after ``vertex`` was recolored."""
    edge: int
    color: int
    vertex: int
    trigger_edge: int
    trigger_color: int
    overlap: int
    offset: int


@dataclass
class BadEventReport:
    b1: list[tuple[int, int]] = field(default_factory=list)
    b2: list[tuple[int, int, int]] = field(default_factory=list)
    b3: list[B3Witness] = field(default_factory=list)
    b4: list[RecolorWitness] = field(default_factory=list)
    b5: list[RecolorWitness] = field(default_factory=list)
    # final monochromatic (edge, color) -> event class that explains it
    explanations: dict[tuple[int, int], str] = field(default_factory=dict)
    unexplained: list[tuple[int, int]] = field(default_factory=list)

    def flags(self) -> dict[str, bool]:
        return {"B1": bool(self.b1), "B2": bool(self.b2), "B3": bool(self.b3),
                "B4": bool(self.b4), "B5": bool(self.b5)}

    def is_empty(self) -> bool:
        return not any(self.flags().values())


@dataclass(frozen=True)
class SolveOutcome:
    initial_coloring: FractionalColoring
    weights: WeightAssignment
    p: float
    events: tuple[RecolorEvent, ...]
    final_coloring: FractionalColoring
    proper: bool
    report: BadEventReport = field(compare=False, repr=False)

    @property
    def status(self) -> str:
        return "proper" if self.proper else "failed"


def _common(H: Hypergraph, masks: np.ndarray) -> np.ndarray:
    if not H.edges:
        return np.zeros(0, dtype=np.uint64)
    return np.bitwise_and.reduce(masks[H.edge_array], axis=1)


def solve_theorem1(H: Hypergraph, params: SolverParams) -> SolveOutcome:
    n, a, b = H.uniformity, params.a, params.b
    if n < 3:
        raise InvalidParams(f"need uniformity n >= 3, got {n}")
    p = threshold_p(n) if params.p_override is None else params.p_override
    rng = _rng.rng_for(params.seed, _rng.THEOREM1)

    init = random_masks(rng, H.vertex_count, a, b)
    weights = rng.random(H.vertex_count)
    common0 = _common(H, init)
    mono_edges = np.flatnonzero(common0).tolist()

    triggers: dict[int, int] = {}
    for ei in mono_edges:
        cm = int(common0[ei])
        for u in H.edges[ei]:
            if weights[u] < p:
                triggers[u] = triggers.get(u, 0) | cm

    final = init.tolist()
    events = []
    for u in sorted(triggers, key=lambda x: (weights[x], x)):
        options = members(triggers[u])
        gamma = options[int(rng.integers(len(options)))]
        added = next_available_color(ColorSet(a, final[u]), gamma)
        trigger = next(ei for ei in H.incidence[u] if int(common0[ei]) >> gamma & 1)
        final[u] = final[u] ^ (1 << gamma) | (1 << added)
        events.append(RecolorEvent(u, gamma, added, trigger, float(weights[u])))

    initial = FractionalColoring(a, b, tuple(init.tolist()))
    final_coloring = FractionalColoring(a, b, tuple(final))
    wa = WeightAssignment(tuple(weights.tolist()))
    common_final = _common(H, np.asarray(final, dtype=np.uint64))
    outcome = SolveOutcome(initial, wa, p, tuple(events), final_coloring,
                           not common_final.any(), BadEventReport())
    return replace(outcome, report=classify_failure(H, outcome))


def classify_failure(H: Hypergraph, outcome: SolveOutcome) -> BadEventReport:
    """Scan for B1-B3 on the initial data and explain every final monochromatic pair."""
    a = outcome.initial_coloring.a
    p = outcome.p
    w = outcome.weights.weights
    common0 = [int(x) for x in _common(H, outcome.initial_coloring.mask_array)]
    common_final = [int(x) for x in _common(H, outcome.final_coloring.mask_array)]
    by_vertex = {ev.vertex: ev for ev in outcome.events}
    rep = BadEventReport()

    light_pairs: dict[int, list[tuple[int, int]]] = {}
    for ei, cm in enumerate(common0):
        if not cm:
            continue
        edge = H.edges[ei]
        cols = members(cm)
        if all(w[u] >= p for u in edge):
            rep.b1.extend((ei, g) for g in cols)
        if len(cols) >= 2:
            rep.b2.append((ei, cols[0], cols[1]))
        for u in edge:
            if w[u] < p:
                light_pairs.setdefault(u, []).append((ei, cm))

    for u in sorted(light_pairs):
        wit = _b3_witness(H, u, light_pairs[u])
        if wit is not None:
            rep.b3.append(wit)

    for ei, cm in enumerate(common_final):
        edge = H.edges[ei]
        for g in members(cm):
            key = (ei, g)
            if common0[ei] >> g & 1:
                # monochromatic from the start and never repaired
                light = [u for u in edge if w[u] < p]
                if not light:
                    rep.explanations[key] = "B1"
                    continue
                ev = by_vertex.get(light[0])
                if ev is None or ev.removed_color == g:
                    rep.unexplained.append(key)
                elif common0[ei] >> ev.removed_color & 1:
                    rep.explanations[key] = "B2"
                else:
                    rep.explanations[key] = "B3"
                continue
            movers = [by_vertex[u] for u in edge if u in by_vertex and by_vertex[u].added_color == g]
            if not movers:
                rep.unexplained.append(key)
                continue
            ev = max(movers, key=lambda e: (e.weight, e.vertex))
            g_b = ev.removed_color
            offset = (g - g_b) % a
            if common0[ei] >> g_b & 1:
                rep.b5.append(RecolorWitness(ei, g, ev.vertex, ei, g_b, len(edge), offset))
                rep.explanations[key] = "B5"
            else:
                other = H.edges[ev.triggering_edge]
                overlap = len(set(edge) & set(other))
                rep.b4.append(RecolorWitness(ei, g, ev.vertex, ev.triggering_edge, g_b, overlap, offset))
                rep.explanations[key] = "B4"
    return rep


def _b3_witness(H: Hypergraph, u: int, pairs: list[tuple[int, int]]) -> B3Witness | None:
    for i, (e1, m1) in enumerate(pairs):
        for e2, m2 in pairs[i + 1:]:
            if e1 == e2:
                continue
            for g1 in members(m1):
                rest = m2 & ~(1 << g1)
                if rest:
                    g2 = members(rest)[0]
                    overlap = len(set(H.edges[e1]) & set(H.edges[e2]))
                    return B3Witness(u, e1, g1, e2, g2, overlap)
    return None
