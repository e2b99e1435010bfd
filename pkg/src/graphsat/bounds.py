"""Closed-form lower and upper bounds on sat(n, H), evaluated exactly.

Every bound has the shape ``slope * n / 2 - constant`` (lower, exact) or
``slope * n / 2 + constant`` (upper). All arithmetic uses
:class:`fractions.Fraction`; nothing here touches floating point except the
``decimal`` convenience field of :meth:`BoundReport.to_dict`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb
from typing import Optional

from .graph import Graph, is_triangle_free
from .weights import WeightSummary, weight_summary

F = Fraction


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    name: str
    kind: str  # "lower" | "upper" | "exact"
    n: int
    slope: Optional[Fraction]
    constant: Optional[Fraction]  # None means the constant is unknown
    value: Optional[Fraction]
    applicable: bool
    reason: str = ""
    asymptotic_only: bool = False

    @property
    def ceil_value(self) -> Optional[int]:
        return None if self.value is None else ceil(self.value)

    @property
    def floor_value(self) -> Optional[int]:
        return None if self.value is None else self.value.numerator // self.value.denominator

    def to_dict(self) -> dict:
        def rat(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        def dec(x):
            return None if x is None else float(x)

        return {
            "name": self.name,
            "kind": self.kind,
            "n": self.n,
            "applicable": self.applicable,
            "reason": self.reason,
            "asymptotic_only": self.asymptotic_only,
            "slope": rat(self.slope),
            "slope_decimal": dec(self.slope),
            "constant": rat(self.constant) if self.constant is not None else "UNKNOWN",
            "constant_decimal": dec(self.constant),
            "value": rat(self.value),
            "value_decimal": dec(self.value),
            "ceil_value": self.ceil_value,
        }


def _report(name: str, kind: str, n: int, slope: Fraction, constant: Optional[Fraction],
            reason: str = "", asymptotic_only: bool = False) -> BoundReport:
    if constant is None:
        value = slope * n / 2
    elif kind == "upper":
        value = slope * n / 2 + constant
    else:
        value = slope * n / 2 - constant
    return BoundReport(name, kind, n, F(slope), None if constant is None else F(constant),
                       value, True, reason, asymptotic_only)


def _skip(name: str, kind: str, n: int, reason: str) -> BoundReport:
    return BoundReport(name, kind, n, None, None, None, False, reason)


def _check_n(summary: WeightSummary, n: int) -> None:
    if n < summary.order:
        raise BoundError(f"n = {n} is below the pattern order {summary.order}")


def cp_lower_bound(summary: WeightSummary, n: int) -> BoundReport:
    """Weight-based lower bound with slope ``min wt_cp``; its constant is not explicit."""
    _check_n(summary, n)
    return _report("cp", "lower", n, F(summary.min_wt_cp), None,
                   "constant exists but is not explicit; value omits it", asymptotic_only=True)


def general_lower_bound(summary: WeightSummary, n: int) -> list[BoundReport]:
    """All cases of the general lower bound that apply to ``summary``."""
    _check_n(summary, n)
    k0, k1, k0p, k1p = summary.k0, summary.k1, summary.k0p, summary.k1p
    base = F((k0 + 1) ** 2, 8)
    out = []
    if k1p <= k0:
        out.append(_report("general-a", "lower", n, F(k0), base, "k1' <= k0"))
        return out
    out.append(_report(
        "general-b", "lower", n,
        k0 + F(k1p - k0, k1p + 1),
        F((k0 + 1) * (k1p - k0), 2 * k1p + 2) + base,
        "k1' > k0",
    ))
    if k1 > k0:
        out.append(_report(
            "general-c", "lower", n,
            k0 + F(k1p - k0, k1p),
            F((k0 + 2) * (k1p - k0), 2 * k1p) + base,
            "k1' > k0 and k1 > k0",
        ))
    if k0 == k1 < k1p < k0p:
        if k0p - k1p <= F(k0p - k0, k0 + 1):
            out.append(_report(
                "general-d", "lower", n,
                k0 + F(k0p - k0, k0p + 1),
                F((k0 + 1) * (k0p - k0), 2 * k0p + 2) + base,
                "k0 = k1 < k1' < k0' and k0' - k1' <= (k0' - k0)/(k0 + 1)",
            ))
        else:
            out.append(_report(
                "general-d", "lower", n,
                k0 + F(k1p - k0, k1p),
                F((k0 + 2) * (k1p - k0), 2 * k1p) + base,
                "k0 = k1 < k1' < k0' and k0' - k1' > (k0' - k0)/(k0 + 1)",
            ))
    return out


def triangle_free_lower_bound(summary: WeightSummary, triangle_free: bool, n: int) -> list[BoundReport]:
    """The three triangle-free bounds; inapplicable ones come back with a reason."""
    _check_n(summary, n)
    k0, k1, k1p = summary.k0, summary.k1, summary.k1p
    base = F((k0 + 1) ** 2, 8)
    if not triangle_free:
        return [_skip(name, "lower", n, "pattern contains a triangle")
                for name in ("triangle-free-1", "triangle-free-2", "triangle-free-cor")]
    out = []
    if k1p >= k0 + 2:
        out.append(_report(
            "triangle-free-1", "lower", n,
            k0 + F(k1p + 1 - k0, k1p + 2),
            F((k0 + 1) * (k1p + 1 - k0), 2 * k1p + 4) + base,
            "triangle-free, k1' >= k0 + 2",
        ))
        if k1 > k0:
            out.append(_report(
                "triangle-free-2", "lower", n,
                k0 + F(k1p + 1 - k0, k1p + 1),
                F((k0 + 2) * (k1p + 1 - k0), 2 * k1p + 2) + base,
                "triangle-free, k1' >= k0 + 2, k1 > k0",
            ))
        else:
            out.append(_skip("triangle-free-2", "lower", n, "k1 <= k0"))
    else:
        reason = "k1' <= k0" if k1p <= k0 else "k1' = k0 + 1"
        out.append(_skip("triangle-free-1", "lower", n, reason))
        out.append(_skip("triangle-free-2", "lower", n, reason))
    if k1p == k1 == k0 + 1:
        out.append(_report(
            "triangle-free-cor", "lower", n,
            k0 + F(2, k0 + 3),
            F(2 * k0 + 3, 2 * k0 + 6) + base,
            "triangle-free, k1' = k1 = k0 + 1",
        ))
    else:
        out.append(_skip("triangle-free-cor", "lower", n, "needs k1' = k1 = k0 + 1"))
    return out


def double_star_threshold(s: int, t: int) -> int:
    q = max(1, s // 2 - 1)
    return q * (2 * t + 4) + s


def double_star_bounds(s: int, t: int, n: int) -> list[BoundReport]:
    """Lower, upper and (when ``n = s mod 2t+4``) exact reports for ``sat(n, S_{s,t})``."""
    if s < 1:
        raise BoundError("s must be at least 1")
    if s >= t:
        raise BoundError(f"s >= t ({s} >= {t}); only unbalanced double stars are covered")
    threshold = double_star_threshold(s, t)
    if n < threshold:
        raise BoundError(f"n = {n} below threshold {threshold}")
    slope = F(s * (t + 1), t + 2)
    lower = _report("double-star-lower", "lower", n, slope,
                    F(s * (t - s + 2), 2 * t + 4) + F(s * s, 8))
    upper = _report("double-star-upper", "upper", n, slope,
                    F(s * (s - 1), 2 * t + 4) + ceil(F(s, 2)))
    if (n - s) % (2 * t + 4) == 0:
        exact = _report("double-star-exact", "exact", n, slope, F(s * (t - s + 2), 2 * t + 4),
                        "asymptotic claim: equality only for sufficiently large n",
                        asymptotic_only=True)
    else:
        exact = _skip("double-star-exact", "exact", n, f"n not congruent to s mod {2 * t + 4}")
    return [lower, upper, exact]


def shorty_threshold(s: int) -> int:
    q = max(2, (s - 1) // 2)
    return q * (2 * s + 4) + s + 1


def shorty_bounds(s: int, n: int) -> list[BoundReport]:
    """Bounds on ``sat(n, P_5^{s-1})``."""
    if s < 1:
        raise BoundError("s must be at least 1")
    threshold = shorty_threshold(s)
    if n < threshold:
        raise BoundError(f"n = {n} below threshold {threshold}")
    lower = _report("shorty-lower", "lower", n, s + F(2, s + 3),
                    F(2 * s + 3, 2 * s + 6) + F((s + 1) ** 2, 8))
    upper = _report("shorty-upper", "upper", n, s + F(2, s + 2), F(s * (s + 1), s + 2))
    return [lower, upper]


def warmup_min_avg_degree(delta: int, k: int, strengthened: bool = False) -> Fraction:
    """Least average degree of a graph with minimum degree ``delta`` whose
    degree-``delta`` vertices all have a neighbor of degree at least ``k``
    (and, if ``strengthened``, whose high-degree vertices have a neighbor of
    degree above ``delta``)."""
    if not 0 < delta < k:
        raise BoundError(f"need 0 < delta < k, got delta={delta}, k={k}")
    if strengthened:
        return delta + F(k - delta, k)
    return delta + F(k - delta, k + 1)


def ehm_saturation_number(t: int, n: int) -> int:
    """``sat(n, K_{t+1})``: size of the complete ``t``-partite graph with ``t-1`` singleton parts."""
    if t < 2:
        raise BoundError("t must be at least 2")
    if n < t + 1:
        raise BoundError(f"n = {n} too small for K_{t + 1}")
    return comb(t - 1, 2) + (t - 1) * (n - t + 1)


def all_lower_bounds(h: Graph, n: int) -> list[BoundReport]:
    summary = weight_summary(h)
    tf = is_triangle_free(h)
    return ([cp_lower_bound(summary, n)] + general_lower_bound(summary, n)
            + triangle_free_lower_bound(summary, tf, n))


def best_lower_bound(h: Graph, n: int) -> BoundReport:
    """Largest applicable lower bound with an explicit constant.

    The ``cp`` bound is left out because its constant is unknown; ties go to
    the earlier report (general cases before triangle-free ones).
    """
    candidates = [r for r in all_lower_bounds(h, n)
                  if r.applicable and r.constant is not None and r.kind == "lower"]
    best = candidates[0]
    for r in candidates[1:]:
        if r.value > best.value:
            best = r
    return best
