"""(a:b)-fractional colorings, properness, and the (a:a-1) / panchromatic bijection.

A color set is stored as an int bit mask over the palette ``range(a)``; ``a <= 64``
is enforced so masks also fit numpy uint64 arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from operator import and_
from typing import Iterable, Sequence

import numpy as np

from . import _rng
from .errors import InvalidParams, NotAMinusOne, ParseError, SizeMismatch
from .hypergraph import Hypergraph

MAX_PALETTE = 64


def mask_of(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _check_palette(a: int, b: int) -> None:
    if not 1 <= b <= a:
        raise InvalidParams(f"need 1 <= b <= a, got a={a}, b={b}")
    if a > MAX_PALETTE:
        raise InvalidParams(f"palette size {a} exceeds {MAX_PALETTE}")


@dataclass(frozen=True)
class ColorSet:
    palette_size: int
    mask: int

    @classmethod
    def of(cls, palette_size: int, colors: Iterable[int]) -> ColorSet:
        colors = list(colors)
        if any(not 0 <= c < palette_size for c in colors) or len(set(colors)) != len(colors):
            raise InvalidParams(f"{colors} is not a set of distinct colors below {palette_size}")
        return cls(palette_size, mask_of(colors))

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, color: int) -> bool:
        return bool(self.mask >> color & 1)


@dataclass(frozen=True)
class FractionalColoring:
    a: int
    b: int
    masks: tuple[int, ...]

    def __post_init__(self):
        _check_palette(self.a, self.b)
        full = (1 << self.a) - 1
        for i, m in enumerate(self.masks):
            if m & ~full or m.bit_count() != self.b:
                raise InvalidParams(f"vertex {i}: {members(m)} is not a {self.b}-subset of range({self.a})")

    @classmethod
    def from_sets(cls, a: int, b: int, sets: Iterable[Iterable[int]]) -> FractionalColoring:
        return cls(a, b, tuple(mask_of(s) for s in sets))

    @property
    def vertex_count(self) -> int:
        return len(self.masks)

    def color_set(self, v: int) -> ColorSet:
        return ColorSet(self.a, self.masks[v])

    def sets(self) -> list[tuple[int, ...]]:
        return [members(m) for m in self.masks]

    @cached_property
    def mask_array(self) -> np.ndarray:
        return np.asarray(self.masks, dtype=np.uint64)

    def blow_up(self, k: int) -> FractionalColoring:
        """Replace each color g by the block {k*g, ..., k*g + k - 1}."""
        return FractionalColoring.from_sets(
            k * self.a, k * self.b,
            [[k * g + j for g in s for j in range(k)] for s in self.sets()],
        )


@dataclass(frozen=True)
class PanchromaticColoring:
    a: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.a < 1:
            raise InvalidParams(f"need a >= 1, got {self.a}")
        bad = [c for c in self.colors if not 0 <= c < self.a]
        if bad:
            raise InvalidParams(f"color {bad[0]} outside range({self.a})")


def random_fractional_coloring(H: Hypergraph | int, a: int, b: int, seed: int) -> FractionalColoring:
    """Each vertex independently gets a uniform b-subset of range(a)."""
    _check_palette(a, b)
    count = H if isinstance(H, int) else H.vertex_count
    rng = _rng.rng_for(seed, _rng.COLORING)
    return FractionalColoring(a, b, tuple(random_masks(rng, count, a, b).tolist()))


def random_masks(rng: np.random.Generator, count: int, a: int, b: int) -> np.ndarray:
    """Vectorized partial Fisher-Yates: ``count`` uniform b-subsets as uint64 masks."""
    perm = np.tile(np.arange(a, dtype=np.int64), (count, 1))
    rows = np.arange(count)
    for i in range(b):
        j = rng.integers(i, a, size=count)
        perm[rows, i], perm[rows, j] = perm[rows, j], perm[rows, i].copy()
    bits = np.left_shift(np.uint64(1), perm[:, :b].astype(np.uint64))
    return np.bitwise_or.reduce(bits, axis=1) if b else np.zeros(count, dtype=np.uint64)


def _check_cover(H: Hypergraph, count: int) -> None:
    if count != H.vertex_count:
        raise SizeMismatch(f"coloring covers {count} vertices, hypergraph has {H.vertex_count}")


def edge_common_masks(H: Hypergraph, chi: FractionalColoring) -> list[int]:
    """For each edge, the mask of colors present at every one of its vertices."""
    _check_cover(H, chi.vertex_count)
    if not H.edges:
        return []
    common = np.bitwise_and.reduce(chi.mask_array[H.edge_array], axis=1)
    return common.tolist()


def monochromatic_pairs(H: Hypergraph, chi: FractionalColoring) -> list[tuple[int, int]]:
    out = []
    for i, m in enumerate(edge_common_masks(H, chi)):
        out.extend((i, g) for g in members(m))
    return out


def is_proper(H: Hypergraph, chi: FractionalColoring) -> bool:
    _check_cover(H, chi.vertex_count)
    masks = chi.masks
    return all(reduce(and_, (masks[u] for u in e)) == 0 for e in H.edges)


def to_panchromatic(chi: FractionalColoring) -> PanchromaticColoring:
    if chi.b != chi.a - 1:
        raise NotAMinusOne(f"need b = a - 1, got a={chi.a}, b={chi.b}")
    full = (1 << chi.a) - 1
    return PanchromaticColoring(chi.a, tuple((full ^ m).bit_length() - 1 for m in chi.masks))


def from_panchromatic(c: PanchromaticColoring) -> FractionalColoring:
    if c.a < 2:
        raise InvalidParams(f"need a >= 2, got {c.a}")
    full = (1 << c.a) - 1
    return FractionalColoring(c.a, c.a - 1, tuple(full ^ (1 << x) for x in c.colors))


def is_panchromatic(H: Hypergraph, c: PanchromaticColoring) -> bool:
    _check_cover(H, len(c.colors))
    return all(len({c.colors[u] for u in e}) == c.a for e in H.edges)


def proper_single_coloring(H: Hypergraph, colors: Sequence[int]) -> bool:
    """Classical properness: no edge has all its vertices the same color."""
    _check_cover(H, len(colors))
    return all(len({colors[u] for u in e}) > 1 for e in H.edges)


# -- coloring file format: "a b v" then v lines of b ascending colors;
#    panchromatic: "a v" then v single colors.

def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            try:
                yield lineno, [int(t) for t in line.split()]
            except ValueError:
                raise ParseError(lineno, f"non-integer token in {line!r}") from None


def parse_coloring(text: str) -> FractionalColoring:
    lines = list(_data_lines(text))
    if not lines or len(lines[0][1]) != 3:
        raise ParseError(lines[0][0] if lines else 1, "header must be 'a b v'")
    a, b, v = lines[0][1]
    if len(lines) - 1 != v:
        raise ParseError(lines[-1][0], f"expected {v} vertex lines, found {len(lines) - 1}")
    sets = []
    for lineno, nums in lines[1:]:
        if len(nums) != b or len(set(nums)) != b or any(not 0 <= x < a for x in nums):
            raise ParseError(lineno, f"expected {b} distinct colors in range({a})")
        sets.append(nums)
    try:
        return FractionalColoring.from_sets(a, b, sets)
    except InvalidParams as exc:
        raise ParseError(lines[0][0], str(exc)) from None


def serialize_coloring(chi: FractionalColoring) -> str:
    rows = [f"{chi.a} {chi.b} {chi.vertex_count}"]
    rows += [" ".join(map(str, s)) for s in chi.sets()]
    return "\n".join(rows) + "\n"


def parse_panchromatic(text: str) -> PanchromaticColoring:
    lines = list(_data_lines(text))
    if not lines or len(lines[0][1]) != 2:
        raise ParseError(lines[0][0] if lines else 1, "header must be 'a v'")
    a, v = lines[0][1]
    if len(lines) - 1 != v:
        raise ParseError(lines[-1][0], f"expected {v} vertex lines, found {len(lines) - 1}")
    colors = []
    for lineno, nums in lines[1:]:
        if len(nums) != 1 or not 0 <= nums[0] < a:
            raise ParseError(lineno, f"expected one color in range({a})")
        colors.append(nums[0])
    return PanchromaticColoring(a, tuple(colors))


def serialize_panchromatic(c: PanchromaticColoring) -> str:
    return "\n".join([f"{c.a} {len(c.colors)}", *map(str, c.colors)]) + "\n"
