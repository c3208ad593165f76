"""Closed-form bounds on the uncrossed number and on the maximum
uncrossed subgraph number.

Core functions are purely numeric in (n, m) and optional face-length
counts; graph-aware gating lives in evaluate_bounds.  Irrational values
are evaluated in binary64; ceilings snap to the nearest integer when the
argument is within 1e-9 of one, so exact-integer cases cannot drift by
one from float noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import NotApplicableError
from .graphs import Graph, analyze, complete_bipartite_parts, is_complete

CEIL_GUARD = 1e-9


def guarded_ceil(x: float) -> int:
    """Ceiling with a 1e-9 snap window around integers."""
    r = round(x)
    if abs(x - r) <= CEIL_GUARD:
        return int(r)
    return math.ceil(x)


def _require_n3(n: int):
    if n < 3:
        raise NotApplicableError(f"needs n >= 3, got n={n}")


def unc_lower_quadratic(n: int, m: int) -> int:
    """Lower bound on unc via the quadratic-root denominator.

    ceil(m / ((3n-5 + sqrt((3n-5)^2 - 4m)) / 2)); requires a nonnegative
    discriminant.
    """
    _require_n3(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    disc = (3 * n - 5) ** 2 - 4 * m
    if disc < 0:
        raise NotApplicableError(f"(3n-5)^2 = {(3*n-5)**2} < 4m = {4*m}")
    denom = (3 * n - 5 + math.sqrt(disc)) / 2
    return guarded_ceil(m / denom)


def h_upper(n: int, m: int) -> float:
    """Upper bound 3n - 6 - sqrt(2m) + sqrt(6(n-2)) on the maximum
    number of uncrossed edges of a connected graph."""
    _require_n3(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    return 3 * n - 6 - math.sqrt(2 * m) + math.sqrt(6 * (n - 2))


def unc_lower(n: int, m: int) -> int:
    """Lower bound ceil(m / h_upper(n, m)) on the uncrossed number."""
    denom = h_upper(n, m)
    # denominator stays positive for any simple graph
    assert denom > 0, f"denominator {denom} <= 0 for n={n}, m={m}"
    return guarded_ceil(m / denom)


def h_upper_triangle_free(n: int, m: int) -> float:
    """Triangle-free refinement: 2n - 4 - sqrt(m/2) + sqrt(5(n-2)/2)."""
    _require_n3(n)
    if m < 0:
        raise ValueError("m must be >= 0")
    return 2 * n - 4 - math.sqrt(m / 2) + math.sqrt(2.5 * (n - 2))


def unc_lower_triangle_free(n: int, m: int) -> int:
    denom = h_upper_triangle_free(n, m)
    assert denom > 0
    return guarded_ceil(m / denom)


def unc_from_h(m: int, h: float) -> int:
    """ceil(m / h): uncrossed collections need at least this many drawings."""
    if h <= 0:
        raise ValueError("h must be positive")
    return guarded_ceil(m / h)


@dataclass(frozen=True)
class FaceCounts:
    """Truncated face-length counts s_3..s_{k-1} used by the face bounds."""

    k: int
    s: tuple[int, ...] = ()  # s[i] is the count of faces of length 3+i

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("k must be >= 3")
        if len(self.s) != self.k - 3:
            raise ValueError(f"need s_3..s_{self.k - 1}, got {len(self.s)} values")
        if any(c < 0 for c in self.s):
            raise ValueError("face counts must be nonnegative")

    @staticmethod
    def from_profile(k: int, s_by_length: dict[int, int]) -> "FaceCounts":
        return FaceCounts(k, tuple(s_by_length.get(l, 0) for l in range(3, k)))

    def weighted(self, weight) -> float:
        return sum(weight(l) * c for l, c in zip(range(3, self.k), self.s))


def simple_bound(n: int, fc: FaceCounts) -> float:
    """Euler-type bound k/(k-2) n - 2k/(k-2) + sum (k-l)/(k-2) s_l."""
    _require_n3(n)
    k = fc.k
    return k / (k - 2) * n - 2 * k / (k - 2) + fc.weighted(lambda l: (k - l) / (k - 2))


@dataclass(frozen=True)
class ComplexBound:
    delta: float
    b_minus: Optional[float]
    b_plus: Optional[float]
    feasible: bool


def complex_bound(n: int, m: int, fc: FaceCounts) -> ComplexBound:
    """Both roots of the quadratic face-count bound.

    feasible=False signals a negative discriminant: the supplied
    truncated face counts cannot occur for this (n, m).
    """
    if not (n >= 3 and m >= n - 1 >= 2):
        raise ValueError(f"needs n >= 3 and m >= n-1 >= 2, got n={n}, m={m}")
    sum_l2 = fc.weighted(lambda l: l - 2)
    sum_l23 = fc.weighted(lambda l: (l - 2) * (l - 3) / 2)
    delta = (3 * n - 7 - 1.5 * sum_l2) ** 2 - 4 * (m - 3 * n + 6 - sum_l23)
    if delta < 0:
        return ComplexBound(delta, None, None, False)
    mid = 3 * n - 5 + fc.weighted(lambda l: 3 - l / 2)
    root = math.sqrt(delta)
    return ComplexBound(delta, (mid - root) / 2, (mid + root) / 2, True)


def combined_bound(n: int, m: int, k: int) -> float:
    """Upper bound from combining the simple and quadratic face bounds.

    k = 3 gives the trivial 3n - 6; k >= 4 requires m > (k-1)(n-2).
    """
    _require_n3(n)
    if k < 3:
        raise ValueError("k must be >= 3")
    if k == 3:
        return float(3 * n - 6)
    if m <= (k - 1) * (n - 2):
        raise NotApplicableError(f"m = {m} <= (k-1)(n-2) = {(k - 1) * (n - 2)}")
    rad = 2 * (m - (n - 2) * (k - 1)) / (k * (k - 3)) + 1 / k**2
    return 3 * n - 7 + 3 / k - (k - 3) * math.sqrt(rad)


def best_combined_bound(n: int, m: int) -> tuple[float, int]:
    """Minimum of combined_bound over every admissible k; returns (value, k)."""
    _require_n3(n)
    if m < n - 1:
        raise ValueError("expects a connected graph, so m >= n-1")
    best = (float(3 * n - 6), 3)
    k = 4
    while m > (k - 1) * (n - 2):
        value = combined_bound(n, m, k)
        if value < best[0]:
            best = (value, k)
        k += 1
    return best


def alpha_bound(n: int, m: int, alpha: float) -> float:
    """Scaled bound 3n - 6 - (1 - alpha) sqrt(2m), valid for
    m >= (3n-6)/alpha^2.

    Values above 3n - 6 (alpha >= 1) are trivially superseded by the
    planar cap; callers wanting a usable bound should clamp, which
    alpha_bound_report does.
    """
    _require_n3(n)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    # tolerate a few ulps when the gate holds with equality
    if m * alpha * alpha + 1e-9 * max(1.0, float(m)) < 3 * n - 6:
        raise NotApplicableError(f"m = {m} < (3n-6)/alpha^2 = {(3 * n - 6) / alpha**2:.6g}")
    return 3 * n - 6 - (1 - alpha) * math.sqrt(2 * m)


def alpha_k(alpha: float) -> int:
    """The face-length threshold ceil(3/alpha) the scaled bound rests on."""
    return guarded_ceil(3 / alpha)


def exact_h_complete(n: int) -> int:
    """h(K_n) = 2n - 2 for n >= 4."""
    if n < 4:
        raise NotApplicableError(f"formula stated for n >= 4, got n={n}")
    return 2 * n - 2


def exact_h_complete_bipartite(a: int, b: int) -> int:
    """Piecewise h(K_{a,b}) for 3 <= a <= b.

    Parts below 3 are refused: the printed formula disagrees with planar
    K_{2,b} instances, and the original applicability conditions are not
    available here.
    """
    if not 3 <= a <= b:
        raise NotApplicableError(f"gated to 3 <= a <= b, got a={a}, b={b}")
    if a == b:
        return 2 * a + b - 2
    if b < 2 * a:
        return 2 * a + b - 1
    return 2 * a + b


def exact_unc_complete(n: int) -> int:
    """unc(K_n) = ceil((n-1)/4) for n > 7."""
    if n <= 7:
        raise NotApplicableError(f"formula stated for n > 7, got n={n}")
    return (n - 1 + 3) // 4


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float | int | None
    applicable: bool
    reason: str | None = None
    params: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "reason": self.reason,
            "params": self.params,
        }


def _report(name: str, fn, params: dict) -> BoundReport:
    try:
        value = fn()
    except NotApplicableError as exc:
        return BoundReport(name, None, False, str(exc), params)
    return BoundReport(name, value, True, None, params)


def alpha_bound_report(n: int, m: int, alpha: float) -> BoundReport:
    """alpha_bound clamped to the trivial planar cap 3n - 6."""
    params = {"n": n, "m": m, "alpha": alpha, "k": alpha_k(alpha)}
    return _report(
        "alpha_bound", lambda: min(alpha_bound(n, m, alpha), float(3 * n - 6)), params
    )


def evaluate_bounds(g: Graph, triangle_free_check: bool = False) -> list[BoundReport]:
    """Every applicable bound for a concrete graph, gates included."""
    stats = analyze(g)
    if not stats.connected:
        raise ValueError("bounds assume a connected graph")
    n, m = stats.n, stats.m
    base = {"n": n, "m": m}
    reports = [
        _report("unc_lower_quadratic", lambda: unc_lower_quadratic(n, m), dict(base)),
        _report("unc_lower", lambda: unc_lower(n, m), dict(base)),
        _report("h_upper", lambda: h_upper(n, m), dict(base)),
    ]

    try:
        value, best_k = best_combined_bound(n, m)
        reports.append(
            BoundReport("best_combined_bound", value, True, None, dict(base, k=best_k))
        )
    except NotApplicableError as exc:
        reports.append(BoundReport("best_combined_bound", None, False, str(exc), dict(base)))

    if stats.triangle_free or triangle_free_check:
        if stats.triangle_free:
            reports.append(
                _report("h_upper_triangle_free", lambda: h_upper_triangle_free(n, m), dict(base))
            )
            reports.append(
                _report(
                    "unc_lower_triangle_free", lambda: unc_lower_triangle_free(n, m), dict(base)
                )
            )
        else:
            for name in ("h_upper_triangle_free", "unc_lower_triangle_free"):
                reports.append(BoundReport(name, None, False, "graph has a triangle", dict(base)))

    if is_complete(g):
        reports.append(_report("exact_h_complete", lambda: exact_h_complete(n), dict(base)))
        reports.append(_report("exact_unc_complete", lambda: exact_unc_complete(n), dict(base)))
    parts = complete_bipartite_parts(g)
    if parts is not None:
        a, b = parts
        reports.append(
            _report(
                "exact_h_complete_bipartite",
                lambda: exact_h_complete_bipartite(a, b),
                dict(base, a=a, b=b),
            )
        )
    return reports
