"""Ground truth at desk scale: exhaustive colorability, independent sets, exact chi_f.

``chi_f_primal`` solves the covering LP over maximal independent sets,
``chi_f_dual`` its LP dual (vertex weights, at most 1 on every independent
set).  ``edge_packing_lp`` is the edge-weight packing program
``max sum w(e)  s.t.  sum_{e ∋ v} w(e) <= 1``; it agrees with chi_f on some
graphs (odd cycles) but not in general, and is reported alongside.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .coloring import FractionalColoring, proper_single_coloring
from .errors import BudgetExceeded, Infeasible, InvalidParams, NotFound
from .hypergraph import Hypergraph
from .lp import GE, LE, solve_lp

DEFAULT_BUDGET = 10 ** 8
MAX_ENUM_VERTICES = 24
MAX_INDEPENDENT_SETS = 10 ** 6


def configured_budget(budget: float | None = None) -> float:
    if budget is not None:
        return budget
    env = os.environ.get("FRACHYP_BUDGET")
    return float(env) if env else DEFAULT_BUDGET


def _closing_edges(H: Hypergraph) -> list[list[tuple[int, ...]]]:
    """Edges grouped by their largest vertex, i.e. the vertex that completes them."""
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(H.vertex_count)]
    for e in H.edges:
        by_last[max(e)].append(e)
    return by_last


def brute_force_colorable(H: Hypergraph, a: int, b: int, budget: float | None = None) -> FractionalColoring | None:
    """Lexicographically first proper (a:b)-coloring, or None if there is none."""
    if not 1 <= b <= a:
        raise InvalidParams(f"need 1 <= b <= a, got a={a}, b={b}")
    space = comb(a, b) ** H.vertex_count
    if space > configured_budget(budget):
        raise BudgetExceeded(f"C({a},{b})^{H.vertex_count} = {space} assignments exceeds the budget")
    choices = [sum(1 << c for c in s) for s in combinations(range(a), b)]
    closing = _closing_edges(H)
    V = H.vertex_count
    masks = [0] * V
    idx = [0] * V
    u = 0
    if V == 0:
        return FractionalColoring(a, b, ())
    # iterative DFS over per-vertex choice indices
    while True:
        if idx[u] == len(choices):
            idx[u] = 0
            u -= 1
            if u < 0:
                return None
            idx[u] += 1
            continue
        masks[u] = choices[idx[u]]
        ok = True
        for e in closing[u]:
            common = masks[e[0]]
            for w in e[1:]:
                common &= masks[w]
            if common:
                ok = False
                break
        if not ok:
            idx[u] += 1
            continue
        if u == V - 1:
            return FractionalColoring(a, b, tuple(masks))
        u += 1


def proper_colorings_count(H: Hypergraph, a: int, limit: int = 1) -> int:
    """Count proper single-color a-colorings by plain enumeration, stopping at ``limit``."""
    found = 0
    for colors in product(range(a), repeat=H.vertex_count):
        if proper_single_coloring(H, colors):
            found += 1
            if found >= limit:
                break
    return found


def chromatic_number(H: Hypergraph, a_max: int | None = None) -> int:
    """Smallest a with a proper classical a-coloring, by exhaustive product search."""
    top = a_max if a_max is not None else max(H.vertex_count, 1)
    for a in range(1, top + 1):
        if a ** H.vertex_count > configured_budget():
            raise BudgetExceeded(f"{a}^{H.vertex_count} colorings exceeds the budget")
        if proper_colorings_count(H, a):
            return a
    raise NotFound(f"no proper coloring with at most {top} colors")


@dataclass(frozen=True)
class IndependentSetFamily:
    sets: tuple[frozenset[int], ...]
    maximal_only: bool


def enumerate_independent_sets(H: Hypergraph, maximal_only: bool = False,
                               max_sets: int = MAX_INDEPENDENT_SETS) -> IndependentSetFamily:
    V = H.vertex_count
    if V > MAX_ENUM_VERTICES:
        raise BudgetExceeded(f"{V} vertices exceeds the enumeration limit {MAX_ENUM_VERTICES}")
    closing = [[sum(1 << w for w in e) for e in group] for group in _closing_edges(H)]
    edge_masks = H.edge_masks
    found: list[int] = []

    def grow(u: int, S: int) -> None:
        if u == V:
            found.append(S)
            if len(found) > max_sets:
                raise BudgetExceeded(f"more than {max_sets} independent sets")
            return
        T = S | 1 << u
        if not any(em & T == em for em in closing[u]):
            grow(u + 1, T)
        grow(u + 1, S)

    grow(0, 0)
    if maximal_only:
        found = [S for S in found if all(_blocked(S, w, edge_masks) for w in range(V) if not S >> w & 1)]
    sets = tuple(frozenset(i for i in range(V) if S >> i & 1) for S in found)
    return IndependentSetFamily(tuple(sorted(sets, key=lambda s: sorted(s))), maximal_only)


def _blocked(S: int, w: int, edge_masks) -> bool:
    """Adding w to S would complete some edge."""
    T = S | 1 << w
    return any(em >> w & 1 and em & T == em for em in edge_masks)


@dataclass(frozen=True)
class RationalLPResult:
    value: Fraction
    primal_weights: dict[frozenset[int], Fraction]
    dual_weights: dict
    status: str = "optimal"


def _check_fractional_input(H: Hypergraph) -> list[frozenset[int]]:
    fam = enumerate_independent_sets(H, maximal_only=True).sets
    covered = set().union(*fam) if fam else set()
    if len(covered) != H.vertex_count:
        raise Infeasible("some vertex lies in no independent set")
    return list(fam)


def _covering(H: Hypergraph, fam: list[frozenset[int]]):
    A = [[1 if v in I else 0 for I in fam] for v in range(H.vertex_count)]
    return solve_lp([1] * len(fam), A, [GE] * H.vertex_count, [1] * H.vertex_count)


def _clique_packing(H: Hypergraph, fam: list[frozenset[int]]):
    A = [[1 if v in I else 0 for v in range(H.vertex_count)] for I in fam]
    return solve_lp([1] * H.vertex_count, A, [LE] * len(fam), [1] * len(fam), maximize=True)


def chi_f_primal(H: Hypergraph) -> RationalLPResult:
    """min sum f(I) over maximal independent sets I, with every vertex covered to weight >= 1.

    Weight on a non-maximal independent set can move to a maximal superset, so
    the restriction loses nothing.  Dual weights are the simplex multipliers
    (one per vertex).
    """
    if H.vertex_count == 0:
        return RationalLPResult(Fraction(0), {}, {})
    fam = _check_fractional_input(H)
    sol = _covering(H, fam)
    primal = {I: f for I, f in zip(fam, sol.x) if f}
    dual = {v: y for v, y in enumerate(sol.duals)}
    return RationalLPResult(sol.value, primal, dual)


def chi_f_dual(H: Hypergraph) -> RationalLPResult:
    """max sum y(v) with sum_{v in I} y(v) <= 1 for every maximal independent set I."""
    if H.vertex_count == 0:
        return RationalLPResult(Fraction(0), {}, {})
    fam = _check_fractional_input(H)
    sol = _clique_packing(H, fam)
    dual = {v: y for v, y in enumerate(sol.x)}
    primal = {I: f for I, f in zip(fam, sol.duals) if f}
    return RationalLPResult(sol.value, primal, dual)


def edge_packing_lp(H: Hypergraph) -> RationalLPResult:
    """max sum w(e) subject to sum_{e ∋ v} w(e) <= 1 at every vertex; dual weights keyed by edge index."""
    if not H.edges:
        return RationalLPResult(Fraction(0), {}, {})
    A = [[1 if v in e else 0 for e in H.edges] for v in range(H.vertex_count)]
    sol = solve_lp([1] * H.edge_count, A, [LE] * H.vertex_count, [1] * H.vertex_count, maximize=True)
    return RationalLPResult(sol.value, {}, {i: w for i, w in enumerate(sol.x)})


def verify_certificates(H: Hypergraph, res: RationalLPResult) -> bool:
    """Both weight vectors feasible and their objectives equal to ``res.value``."""
    fam = enumerate_independent_sets(H, maximal_only=True).sets
    f, y = res.primal_weights, res.dual_weights
    if any(w < 0 for w in f.values()) or any(w < 0 for w in y.values()):
        return False
    if any(I not in fam for I in f):
        return False
    if any(sum((w for I, w in f.items() if v in I), Fraction(0)) < 1 for v in range(H.vertex_count)):
        return False
    if any(sum((y.get(v, 0) for v in I), Fraction(0)) > 1 for I in fam):
        return False
    return sum(f.values(), Fraction(0)) == res.value == sum(y.values(), Fraction(0))


def chi_f_via_ab_search(H: Hypergraph, a_max: int, budget: float | None = None) -> Fraction:
    """Least a/b, a <= a_max, for which a proper (a:b)-coloring exists."""
    if a_max < 1:
        raise InvalidParams(f"need a_max >= 1, got {a_max}")
    pairs = sorted(((a, b) for a in range(1, a_max + 1) for b in range(1, a + 1)),
                   key=lambda p: (Fraction(*p), p[0]))
    for a, b in pairs:
        if a == b and H.edges:
            continue  # every edge is monochromatic in all a colors
        if brute_force_colorable(H, a, b, budget) is not None:
            return Fraction(a, b)
    raise NotFound(f"no proper (a:b)-coloring with a <= {a_max}")


def panchromatic_colorable(H: Hypergraph, a: int) -> bool:
    """Some single-color a-coloring puts every color on every edge (plain enumeration)."""
    for colors in product(range(a), repeat=H.vertex_count):
        if all(len({colors[u] for u in e}) == a for e in H.edges):
            return True
    return False
