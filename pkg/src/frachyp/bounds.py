"""Calculators for the quantitative edge-count bounds, reported as ``BoundReport``.

Absolute constants that the literature leaves unspecified are set to 1 and the
report says so.  Values are carried as natural logs; ``value`` is ``None``
once it would exceed 1e300.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .construction import thm2_edge_total
from .errors import InvalidParams
from .theorem1 import edge_budget_thm1, log_edge_budget_thm1, thm1_regime

UNSPECIFIED = "absolute constant unspecified in the literature; reported with constant 1"
LOG_CAP = math.log(1e300)


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict
    log_value: float
    regime_ok: bool
    formula_text: str
    notes: list[str] = field(default_factory=list)

    @property
    def value(self) -> float | None:
        return math.exp(self.log_value) if self.log_value <= LOG_CAP else None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["value"] = self.value
        return d


def _exp(log_value: float) -> float:
    return math.exp(log_value) if log_value < 709 else math.inf


def _need_log_n(n: int) -> float:
    if n < 2:
        raise InvalidParams(f"need n >= 2, got {n}")
    return math.log(n)


def m_bounds_proper(n: int, r: int) -> tuple[float, float]:
    """Unit-constant bounds on m(n, r): (n/ln n)^((r-1)/r) r^(n-1) and n^2 r^n ln r."""
    lo, hi = log_m_bounds_proper(n, r)
    return _exp(lo), _exp(hi)


def log_m_bounds_proper(n: int, r: int) -> tuple[float, float]:
    ln_n = _need_log_n(n)
    if r < 2:
        raise InvalidParams(f"need r >= 2, got {r}")
    lower = (r - 1) / r * math.log(n / ln_n) + (n - 1) * math.log(r)
    upper = 2 * math.log(n) + n * math.log(r) + math.log(math.log(r))
    return lower, upper


def log_cherk_kozik_ab_bound(n: int, a: int, b: int) -> float:
    ln_n = _need_log_n(n)
    if b < 1 or a // b < 2:
        raise InvalidParams(f"need floor(a/b) >= 2, got a={a}, b={b}")
    k = a // b
    return k / (k - 1) * math.log(n / ln_n) + (n - 1) * math.log(k)


def cherk_kozik_ab_bound(n: int, a: int, b: int) -> float:
    """(n/ln n)^(k/(k-1)) k^(n-1) with k = floor(a/b), from coloring with k disjoint color blocks."""
    return _exp(log_cherk_kozik_ab_bound(n, a, b))


def prop2_regime(n: int, a: int) -> bool:
    ln_n = _need_log_n(n)
    return 3 < a <= math.sqrt(n / (100 * ln_n))


def log_prop2_bound(n: int, a: int) -> float:
    ln_n = _need_log_n(n)
    if a < 2:
        raise InvalidParams(f"need a >= 2, got {a}")
    return -math.log(20 * a * a) + (a - 1) / a * math.log(n / ln_n) + n * math.log(a / (a - 1))


def prop2_bound(n: int, a: int) -> float:
    """(a:a-1)-colorability edge budget (n/ln n)^((a-1)/a) (a/(a-1))^n / (20 a^2)."""
    return _exp(log_prop2_bound(n, a))


def log_thm2_edge_total(n: int, a: int, b: int) -> float:
    if not a > b >= 1:
        raise InvalidParams(f"need a > b >= 1, got a={a}, b={b}")
    return (math.log(math.e / 2) + 2 * math.log(n) + n * math.log(a / b) + math.log(b)
            + math.log(math.log(a / b) + 1))


WHICH = ("thm1", "eq1", "eq5", "prop2", "thm2")


def bound_report(which: str, n: int, a: int | None = None, b: int | None = None,
                 r: int | None = None) -> list[BoundReport]:
    if which == "thm1":
        _require(which, a=a, b=b)
        regime = thm1_regime(n, a, b)
        return [BoundReport("thm1", {"n": n, "a": a, "b": b}, log_edge_budget_thm1(n, a, b), regime["theorem"],
                            "(a b^3)^(-1/2) (n/ln n)^(1/2) (a/b)^(n-1)",
                            [f"proof conditions a-b>=2, b>=2, a>=4, n>5: {regime['proof']}",
                             f"side conditions a < n/ln n, a^(3/2) c < 1: {regime['b2_b5']}"])]
    if which == "eq1":
        _require(which, r=r)
        lo, hi = log_m_bounds_proper(n, r)
        params = {"n": n, "r": r}
        return [BoundReport("eq1_lower", params, lo, True, "c1 (n/ln n)^((r-1)/r) r^(n-1)", [UNSPECIFIED]),
                BoundReport("eq1_upper", params, hi, True, "c2 n^2 r^n ln r", [UNSPECIFIED])]
    if which == "eq5":
        _require(which, a=a, b=b)
        return [BoundReport("eq5", {"n": n, "a": a, "b": b}, log_cherk_kozik_ab_bound(n, a, b), a // b >= 2,
                            "c1 (n/ln n)^(k/(k-1)) k^(n-1), k = floor(a/b)", [UNSPECIFIED])]
    if which == "prop2":
        _require(which, a=a)
        return [BoundReport("prop2", {"n": n, "a": a}, log_prop2_bound(n, a), prop2_regime(n, a),
                            "(n/ln n)^((a-1)/a) (a/(a-1))^n / (20 a^2)",
                            ["hypothesis 3 < a <= sqrt(n / (100 ln n))"])]
    if which == "thm2":
        _require(which, a=a, b=b)
        return [BoundReport("thm2", {"n": n, "a": a, "b": b}, log_thm2_edge_total(n, a, b), a > b >= 1,
                            "(e/2) n^2 (a/b)^n b (ln(a/b) + 1)",
                            ["asymptotic: holds for n beyond an unspecified n0"])]
    raise InvalidParams(f"unknown bound {which!r}; choose from {', '.join(WHICH)}")


def _require(which: str, **kw) -> None:
    missing = [k for k, v in kw.items() if v is None]
    if missing:
        raise InvalidParams(f"bound {which!r} needs --{' --'.join(missing)}")


__all__ = [
    "BoundReport", "m_bounds_proper", "cherk_kozik_ab_bound", "prop2_bound", "prop2_regime",
    "bound_report", "edge_budget_thm1", "thm2_edge_total", "WHICH",
]
