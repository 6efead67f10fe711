"""n-uniform hypergraphs: construction, validation, generators and the text format.

Text format::

    # comments start with '#'
    v n m
    <n vertex ids>      (m lines)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from . import _rng
from .errors import EdgeSizeMismatch, InvalidParams, ParseError, VertexOutOfRange

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    uniformity: int
    edges: tuple[Edge, ...] = field(default=())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, n) int array, for vectorized membership work."""
        if not self.edges:
            return np.zeros((0, self.uniformity), dtype=np.intp)
        return np.asarray(self.edges, dtype=np.intp)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, e in enumerate(self.edges):
            for u in e:
                inc[u].append(i)
        return tuple(tuple(x) for x in inc)

    def canonical(self) -> Hypergraph:
        return Hypergraph(self.vertex_count, self.uniformity, tuple(sorted(self.edges)))

    def duplicate_edges(self) -> list[int]:
        """Indices of edges that repeat an earlier edge."""
        seen: set[Edge] = set()
        dups = []
        for i, e in enumerate(self.edges):
            if e in seen:
                dups.append(i)
            seen.add(e)
        return dups

    def has_distinct_edges(self) -> bool:
        return not self.duplicate_edges()


def new_hypergraph(vertex_count: int, uniformity: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    if uniformity < 1:
        raise InvalidParams(f"uniformity must be >= 1, got {uniformity}")
    if vertex_count < 0:
        raise InvalidParams(f"vertex_count must be >= 0, got {vertex_count}")
    out = []
    for i, raw in enumerate(edges):
        e = tuple(sorted({int(u) for u in raw}))
        if len(e) != uniformity:
            raise EdgeSizeMismatch(f"edge {i} has {len(e)} distinct vertices, expected {uniformity}")
        if e[0] < 0 or e[-1] >= vertex_count:
            raise VertexOutOfRange(f"edge {i} = {e} has a vertex outside [0, {vertex_count})")
        out.append(e)
    return Hypergraph(vertex_count, uniformity, tuple(out))


def parse_hypergraph(text: str) -> Hypergraph:
    header = None
    edges: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}") from None
        if header is None:
            if len(nums) != 3:
                raise ParseError(lineno, "header must be 'v n m'")
            header = (lineno, nums)
            continue
        edges.append((lineno, nums))
    if header is None:
        raise ParseError(1, "missing header")
    v, n, m = header[1]
    if n < 1 or v < 0 or m < 0:
        raise ParseError(header[0], f"invalid header values v={v} n={n} m={m}")
    if len(edges) != m:
        last = edges[-1][0] if edges else header[0]
        raise ParseError(last, f"expected {m} edges, found {len(edges)}")
    for lineno, nums in edges:
        if len(nums) != n:
            raise ParseError(lineno, f"edge has {len(nums)} vertices, expected {n}")
        if len(set(nums)) != n:
            raise ParseError(lineno, "edge repeats a vertex")
        bad = [u for u in nums if not 0 <= u < v]
        if bad:
            raise ParseError(lineno, f"vertex {bad[0]} out of range [0, {v})")
    return new_hypergraph(v, n, [nums for _, nums in edges])


def serialize_hypergraph(H: Hypergraph) -> str:
    C = H.canonical()
    lines = [f"{C.vertex_count} {C.uniformity} {C.edge_count}"]
    lines += [" ".join(map(str, e)) for e in C.edges]
    return "\n".join(lines) + "\n"


def gen_complete_uniform(v: int, n: int) -> Hypergraph:
    if not v >= n >= 1:
        raise InvalidParams(f"need v >= n >= 1, got v={v}, n={n}")
    return Hypergraph(v, n, tuple(combinations(range(v), n)))


def gen_cycle(v: int) -> Hypergraph:
    if v < 3:
        raise InvalidParams(f"a cycle needs at least 3 vertices, got {v}")
    return new_hypergraph(v, 2, [(i, (i + 1) % v) for i in range(v)])


def gen_random_uniform(v: int, n: int, m: int, seed: int, distinct: bool = False) -> Hypergraph:
    """m uniform n-subsets of range(v), drawn independently (or without repeats)."""
    if not v >= n >= 1 or m < 0:
        raise InvalidParams(f"need v >= n >= 1 and m >= 0, got v={v}, n={n}, m={m}")
    total = comb(v, n)
    if distinct and m > total:
        raise InvalidParams(f"cannot draw {m} distinct edges from C({v},{n}) = {total}")
    rng = _rng.rng_for(seed, _rng.HYPERGRAPH)
    if not distinct:
        return Hypergraph(v, n, _draw_subsets(rng, v, n, m))
    chosen: dict[Edge, None] = {}
    while len(chosen) < m:
        for e in _draw_subsets(rng, v, n, m - len(chosen)):
            chosen.setdefault(e)
    return Hypergraph(v, n, tuple(chosen))


def _draw_subsets(rng: np.random.Generator, v: int, n: int, m: int) -> tuple[Edge, ...]:
    if m == 0:
        return ()
    # the n smallest of v iid uniform keys form a uniform n-subset
    keys = rng.random((m, v))
    picks = np.sort(np.argpartition(keys, n - 1, axis=1)[:, :n], axis=1)
    return tuple(map(tuple, picks.tolist()))

