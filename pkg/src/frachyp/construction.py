"""Random n-uniform hypergraphs that admit no proper (a:b)-coloring.

For a fixed coloring of v vertices, a uniform random n-set S is *bad* when some
color is held by all of its vertices.  Inclusion-exclusion gives P(S bad)
exactly; convexity bounds it below by ``p = a C(bv/a, n) / (b C(v, n))`` and
``m = ceil(b v ln(ae/b) / p)`` independent n-sets defeat every one of the
``C(a,b)^v`` colorings with positive probability.  Everything here is exact
integer/rational arithmetic except the logarithm in ``m``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import mpmath

from .coloring import FractionalColoring
from .errors import AttemptsExhausted, DivisibilityError, InvalidParams, RegimeWarning
from .exact import brute_force_colorable, configured_budget
from .hypergraph import Hypergraph, gen_random_uniform


@dataclass(frozen=True)
class SSumTable:
    color: int
    n: int
    values: tuple[int, ...]  # values[t-1] = s_t for t = 1..b

    def s(self, t: int) -> int:
        return self.values[t - 1]

    @property
    def b(self) -> int:
        return len(self.values)


def _support_sizes(chi: FractionalColoring) -> dict[int, int]:
    """Number of vertices holding each exact color set."""
    counts: dict[int, int] = {}
    for m in chi.masks:
        counts[m] = counts.get(m, 0) + 1
    return counts


def _holders(counts: dict[int, int], y: int) -> int:
    """|S_y|: vertices whose color set contains every color of y."""
    return sum(c for m, c in counts.items() if m & y == y)


def s_sums(chi: FractionalColoring, x: int, v: int, n: int) -> SSumTable:
    if not 0 <= x < chi.a:
        raise InvalidParams(f"color {x} outside range({chi.a})")
    if chi.vertex_count != v or n < 1:
        raise InvalidParams(f"coloring covers {chi.vertex_count} vertices, expected v={v}; n={n}")
    counts = _support_sizes(chi)
    others = [c for c in range(chi.a) if c != x]
    vals = []
    for t in range(1, chi.b + 1):
        total = 0
        for rest in combinations(others, t - 1):
            y = 1 << x
            for c in rest:
                y |= 1 << c
            total += comb(_holders(counts, y), n)
        vals.append(total)
    return SSumTable(x, n, tuple(vals))


def telescoping_check(table: SSumTable, b: int | None = None) -> bool:
    """sum_i (-1)^(i+1) s_i / i  >=  s_1 / b, compared exactly."""
    b = table.b if b is None else b
    lhs = sum(Fraction((-1) ** (i + 1) * table.s(i), i) for i in range(1, b + 1))
    return lhs >= Fraction(table.s(1), b)


def counting_inequality(table: SSumTable, j: int) -> bool:
    """s_1 >= s_j - s_{j+1} + ... + (-1)^(j+b) s_b."""
    b = table.b
    rhs = sum((-1) ** (i - j) * table.s(i) for i in range(j, b + 1))
    return table.s(1) >= rhs


def bad_set_count_inclusion_exclusion(chi: FractionalColoring, n: int) -> int:
    """Number of n-sets of vertices sharing at least one common color."""
    counts = _support_sizes(chi)
    total = 0
    for i in range(1, chi.b + 1):
        sign = 1 if i % 2 else -1
        for ys in combinations(range(chi.a), i):
            y = sum(1 << c for c in ys)
            total += sign * comb(_holders(counts, y), n)
    return total


def bad_prob_inclusion_exclusion(chi: FractionalColoring, v: int, n: int) -> Fraction:
    if chi.vertex_count != v or not 1 <= n <= v:
        raise InvalidParams(f"need a coloring of v={v} vertices and 1 <= n <= v, got n={n}")
    return Fraction(bad_set_count_inclusion_exclusion(chi, n), comb(v, n))


def bad_prob_by_color_sums(chi: FractionalColoring, v: int, n: int) -> Fraction:
    """The same probability regrouped per color: sum_x sum_i (-1)^(i+1) s_i^x / i."""
    total = Fraction(0)
    for x in range(chi.a):
        table = s_sums(chi, x, v, n)
        total += sum(Fraction((-1) ** (i + 1) * table.s(i), i) for i in range(1, chi.b + 1))
    return total / comb(v, n)


def bad_prob_lower_p(v: int, n: int, a: int, b: int) -> Fraction:
    if not 1 <= b <= a or n < 1 or v < n:
        raise InvalidParams(f"need 1 <= b <= a and v >= n >= 1, got v={v}, n={n}, a={a}, b={b}")
    if b * v % a:
        raise DivisibilityError(f"a = {a} does not divide b*v = {b * v}")
    return Fraction(a * comb(b * v // a, n), b * comb(v, n))


def approx_p(v: int, n: int, a: int, b: int) -> float:
    """Large-v approximation ``(a/b)(b/a)^n exp(-a n^2 / (2 b v))`` of the exact p."""
    return (a / b) * (b / a) ** n * math.exp(-a * n * n / (2 * b * v))


def edge_count_m(v: int, n: int, a: int, b: int) -> int:
    """ceil(b v ln(ae/b) / p); also checks the union-bound certificate."""
    p = bad_prob_lower_p(v, n, a, b)
    if p == 0:
        raise InvalidParams(f"p = 0 at (v, n, a, b) = ({v}, {n}, {a}, {b}): bv/a < n")
    with mpmath.workdps(80):
        m = int(mpmath.ceil(b * v * mpmath.log(mpmath.mpf(a) * mpmath.e / b)
                            / (mpmath.mpf(p.numerator) / p.denominator)))
    assert union_bound_holds(v, n, a, b, m), (v, n, a, b, m)
    return m


def union_bound_value(v: int, n: int, a: int, b: int, m: int) -> mpmath.mpf:
    """C(a,b)^v (1-p)^m, evaluated in the log domain at high precision."""
    p = bad_prob_lower_p(v, n, a, b)
    with mpmath.workdps(80):
        if p == 1:
            return mpmath.mpf(0) if m > 0 else mpmath.mpf(comb(a, b)) ** v
        q = mpmath.mpf(p.numerator) / p.denominator
        return mpmath.exp(v * mpmath.log(comb(a, b)) + m * mpmath.log1p(-q))


EXACT_BITS_LIMIT = 2_000_000


def union_bound_holds(v: int, n: int, a: int, b: int, m: int) -> bool:
    """C(a,b)^v (1-p)^m < 1, decided with integers when the numbers stay small enough."""
    p = bad_prob_lower_p(v, n, a, b)
    num, den = p.numerator, p.denominator
    if m * den.bit_length() <= EXACT_BITS_LIMIT:
        return comb(a, b) ** v * (den - num) ** m < den ** m
    with mpmath.workdps(120):
        q = mpmath.mpf(num) / den
        return v * mpmath.log(comb(a, b)) + m * mpmath.log1p(-q) < 0


def optimal_v(n: int, a: int, b: int) -> int:
    """Nearest integer to a n^2 / (2b), raised until a divides b v."""
    target = Fraction(a * n * n, 2 * b)
    v = math.floor(target + Fraction(1, 2))
    v = max(v, n)
    while b * v % a:
        v += 1
    return v


def thm2_edge_total(n: int, a: int, b: int) -> float:
    """(e/2) n^2 (a/b)^n b (ln(a/b) + 1): size of the non-colorable hypergraph for large n."""
    if not a > b >= 1 or n < 1:
        raise InvalidParams(f"need a > b >= 1 and n >= 1, got n={n}, a={a}, b={b}")
    log_val = math.log(math.e / 2) + 2 * math.log(n) + n * math.log(a / b) + math.log(b) \
        + math.log(math.log(a / b) + 1)
    return math.exp(log_val) if log_val < 709 else math.inf


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    a: int
    b: int
    v: int | None = None
    m: int | None = None
    seed: int = 0

    def resolved(self) -> ConstructionParams:
        if not self.a > self.b >= 1:
            raise InvalidParams(f"need a > b >= 1, got a={self.a}, b={self.b}")
        v = optimal_v(self.n, self.a, self.b) if self.v is None else self.v
        if v < self.n:
            raise InvalidParams(f"need v >= n, got v={v}, n={self.n}")
        if self.b * v % self.a:
            raise DivisibilityError(f"a = {self.a} does not divide b*v = {self.b * v}")
        m = edge_count_m(v, self.n, self.a, self.b) if self.m is None else self.m
        return ConstructionParams(self.n, self.a, self.b, v, m, self.seed)


@dataclass(frozen=True)
class Certificate:
    v: int
    m: int
    p: Fraction
    union_bound_value: float
    union_bound_holds: bool
    certified: bool
    attempts: int
    certification_feasible: bool

    def to_dict(self) -> dict:
        return {"v": self.v, "m": self.m, "p": f"{self.p.numerator}/{self.p.denominator}",
                "union_bound_value": self.union_bound_value, "union_bound_holds": self.union_bound_holds,
                "certified": self.certified, "attempts": self.attempts,
                "certification_feasible": self.certification_feasible}


def sample_and_certify(params: ConstructionParams, shrink: bool = False, max_attempts: int = 100,
                       budget: float | None = None) -> tuple[Hypergraph, Certificate]:
    """Sample m uniform n-sets on v vertices and try to certify non-colorability exhaustively.

    With ``shrink`` set, fresh samples are drawn (seeds ``seed, seed+1, ...``)
    until one is certified; ``AttemptsExhausted`` if none is within
    ``max_attempts``.  When exhaustive search is over budget the sample comes
    back uncertified with ``certification_feasible = False``.
    """
    P = params.resolved()
    p = bad_prob_lower_p(P.v, P.n, P.a, P.b)
    ub_holds = union_bound_holds(P.v, P.n, P.a, P.b, P.m)
    ub_value = float(union_bound_value(P.v, P.n, P.a, P.b, P.m))
    feasible = comb(P.a, P.b) ** P.v <= configured_budget(budget)
    tries = max_attempts if shrink else 1
    H = None
    for attempt in range(1, tries + 1):
        H = gen_random_uniform(P.v, P.n, P.m, P.seed + attempt - 1)
        if not feasible:
            warnings.warn(f"C({P.a},{P.b})^{P.v} exceeds the enumeration budget; sample left uncertified",
                          RegimeWarning, stacklevel=2)
            return H, Certificate(P.v, P.m, p, ub_value, ub_holds, False, attempt, False)
        certified = brute_force_colorable(H, P.a, P.b, budget) is None
        if certified or not shrink:
            return H, Certificate(P.v, P.m, p, ub_value, ub_holds, certified, attempt, True)
    raise AttemptsExhausted(f"no certified sample in {max_attempts} attempts")

