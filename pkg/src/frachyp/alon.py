"""Reserve-color repair for (a:b)-colorings when a/b is large.

Color with only the first ``a' = floor(a(n-1)/n)`` colors, then repair each
monochromatic edge at one vertex using the ``a - a' = ceil(a/n)`` reserve
colors.  No reserve color is handed to more than n-1 vertices, so no edge can
become monochromatic in one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath
import numpy as np

from . import _rng
from .coloring import FractionalColoring, members, random_masks
from .errors import AttemptsExhausted, InvalidParams, RegimeWarning
from .hypergraph import Hypergraph


def a_prime(a: int, n: int) -> int:
    if a < 1 or n < 2:
        raise InvalidParams(f"need a >= 1 and n >= 2, got a={a}, n={n}")
    ap = a * (n - 1) // n
    assert a - ap == -(-a // n)
    return ap


def alon_edge_budget(n: int, a: int, b: int) -> float:
    """``e^-1 (a'/b)^n``, the edge count the reserve-color procedure tolerates."""
    return math.exp(n * math.log(a_prime(a, n) / b) - 1)


def precondition_alon(H: Hypergraph, a: int, b: int) -> dict[str, bool]:
    n = H.uniformity
    ap = a_prime(a, n)
    ratio = Fraction(a, b)
    with mpmath.workdps(60):
        budget = mpmath.floor((mpmath.mpf(ap) / b) ** n / mpmath.e) if ap else 0
    budget_ok = H.edge_count <= int(budget)
    return {
        "ratio_window": n <= ratio < n ** (n - 1),
        "edge_budget": budget_ok,
        "proof_condition": ap >= b and ap * Fraction(b, ap - b + 1) ** n <= 1,
        "reserve": a - ap >= b,
    }


def expected_recolorings_bound(a_prime: int, b: int, n: int, m: int) -> Fraction:
    """Exact ``m * sum_k k C(a',k) (C(a'-k, b-k) / C(a',b))^n`` over k = 1..b."""
    if not 1 <= b <= a_prime or n < 1 or m < 0:
        raise InvalidParams(f"need 1 <= b <= a' and n >= 1, m >= 0; got a'={a_prime}, b={b}, n={n}, m={m}")
    total = comb(a_prime, b)
    s = sum(k * comb(a_prime, k) * Fraction(comb(a_prime - k, b - k), total) ** n for k in range(1, b + 1))
    return m * s


@dataclass(frozen=True)
class AlonParams:
    a: int
    b: int
    seed: int
    max_attempts: int = 50


@dataclass
class RepairLedger:
    usage: dict[int, int] = field(default_factory=dict)
    # (vertex, removed colors, added reserve colors, edge)
    repairs: list[tuple[int, tuple[int, ...], tuple[int, ...], int]] = field(default_factory=list)
    attempt: int = 1

    @property
    def total_replaced(self) -> int:
        return sum(len(r[1]) for r in self.repairs)


def solve_alon(H: Hypergraph, params: AlonParams) -> tuple[FractionalColoring, RepairLedger]:
    n, a, b = H.uniformity, params.a, params.b
    if n < 2 or not 1 <= b <= a or params.max_attempts < 1:
        raise InvalidParams(f"invalid parameters n={n}, a={a}, b={b}, max_attempts={params.max_attempts}")
    ap = a_prime(a, n)
    if ap < b:
        raise InvalidParams(f"a' = {ap} working colors cannot hold b = {b}")
    pre = precondition_alon(H, a, b)
    if not all(pre.values()):
        failed = ", ".join(k for k, ok in pre.items() if not ok)
        warnings.warn(f"reserve-color preconditions fail: {failed}", RegimeWarning, stacklevel=2)

    rng = _rng.rng_for(params.seed, _rng.ALON)
    for attempt in range(1, params.max_attempts + 1):
        masks = random_masks(rng, H.vertex_count, ap, b).tolist()
        ledger = _repair(H, masks, ap, a)
        if ledger is not None:
            ledger.attempt = attempt
            return FractionalColoring(a, b, tuple(masks)), ledger
    raise AttemptsExhausted(f"reserve capacity exceeded in all {params.max_attempts} attempts")


def _repair(H: Hypergraph, masks: list[int], ap: int, a: int) -> RepairLedger | None:
    """Repair in place; None when the reserve capacity would be exceeded."""
    cap = H.uniformity - 1
    reserve = range(ap, a)
    ledger = RepairLedger(usage={r: 0 for r in reserve})
    if not H.edges:
        return ledger
    common = np.bitwise_and.reduce(np.asarray(masks, dtype=np.uint64)[H.edge_array], axis=1)
    for ei in np.flatnonzero(common).tolist():
        edge = H.edges[ei]
        shared = masks[edge[0]]
        for u in edge[1:]:
            shared &= masks[u]
        if not shared:
            continue  # already fixed by an earlier repair
        u = edge[0]
        removed = members(shared)
        added = []
        for r in reserve:
            if len(added) == len(removed):
                break
            if ledger.usage[r] < cap and not masks[u] >> r & 1:
                added.append(r)
        if len(added) < len(removed):
            return None
        for r in added:
            ledger.usage[r] += 1
        masks[u] = masks[u] & ~shared | sum(1 << r for r in added)
        ledger.repairs.append((u, removed, tuple(added), ei))
    return ledger
