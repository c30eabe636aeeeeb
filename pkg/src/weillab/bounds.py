"""Point-count intervals for curves lying on the classified surfaces.

For an absolutely irreducible curve of arithmetic genus p_a on an
abelian surface of trace -a over the field with q elements,

    | #C(F_q) - (q + 1 + a) |  <=  |p_a - 2| * floor(2*sqrt(q)).

Specialised to the classified families with p_a = 3: a Weil restriction
has trace 0, giving q + 1 +- floor(2*sqrt(q)); a class with no principal
polarisation has a^2 = q - b, giving the exact interval
q + 1 +- (sqrt(q-b) + floor(2*sqrt(q))), loosened to radius
2*floor(2*sqrt(q)) after estimating sqrt(q-b) <= 2*sqrt(q).  Both sit
well inside the genus-3 interval q + 1 +- 3*floor(2*sqrt(q)).

Point counts are non-negative, so lower endpoints are clamped at 0 with
the raw value kept for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .core import NotPrimePower, ceil_sqrt, floor_2sqrt, prime_power_decomposition


@unique
class BoundFamily(Enum):
    GENERAL = "General"
    WEIL_RESTRICTION = "WeilRestriction"
    NON_PP = "NonPP"
    SERRE_WEIL = "SerreWeil"


@dataclass(frozen=True)
class PointBounds:
    """Closed integer interval [lo, hi] = [max(0, center - radius), center + radius]."""

    lo: int
    hi: int
    center: int
    radius: int
    family: BoundFamily
    raw_lo: int
    note: str | None = None

    def __contains__(self, count: int) -> bool:
        return self.lo <= count <= self.hi

    def contains_interval(self, other: "PointBounds") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def _require_prime_power(q: int) -> None:
    if prime_power_decomposition(q) is None:
        raise NotPrimePower(f"q={q} is not a prime power")


def _interval(center: int, radius: int, family: BoundFamily, note: str | None = None) -> PointBounds:
    raw_lo = center - radius
    return PointBounds(
        lo=max(0, raw_lo),
        hi=center + radius,
        center=center,
        radius=radius,
        family=family,
        raw_lo=raw_lo,
        note=note,
    )


def genus_bounds_on_surface(q: int, a: int, p_a: int) -> PointBounds:
    """Interval for a curve of arithmetic genus p_a on a surface of trace -a."""
    _require_prime_power(q)
    if p_a < 1:
        raise ValueError(f"arithmetic genus must be >= 1, got {p_a}")
    radius = abs(p_a - 2) * floor_2sqrt(q)
    return _interval(q + 1 + a, radius, BoundFamily.GENERAL, note=f"p_a={p_a}")


def weil_restriction_bounds(q: int) -> PointBounds:
    """Genus-3 interval on a Weil restriction; the trace is always 0."""
    _require_prime_power(q)
    return _interval(q + 1, floor_2sqrt(q), BoundFamily.WEIL_RESTRICTION)


def non_pp_bounds(q: int, b: int | None = None) -> PointBounds:
    """Genus-3 interval on a class with no principal polarisation.

    Without b the radius is the estimated 2*floor(2*sqrt(q)).  With the
    middle coefficient b the exact pre-estimation form
    q + 1 +- (ceil(sqrt(q-b)) + floor(2*sqrt(q))) is returned instead,
    using a^2 = q - b and rounding the square root up to stay
    conservative.
    """
    _require_prime_power(q)
    if b is None:
        return _interval(q + 1, 2 * floor_2sqrt(q), BoundFamily.NON_PP)
    if q - b < 0:
        raise ValueError(f"q - b = {q - b} is negative; not a trace square")
    radius = ceil_sqrt(q - b) + floor_2sqrt(q)
    return _interval(
        q + 1,
        radius,
        BoundFamily.NON_PP,
        note="q + 1 +- (ceil(sqrt(q-b)) + floor(2*sqrt(q)))",
    )


def serre_weil_interval(q: int, g: int) -> PointBounds:
    """The genus-g interval q + 1 +- g*floor(2*sqrt(q)) for comparison."""
    _require_prime_power(q)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return _interval(q + 1, g * floor_2sqrt(q), BoundFamily.SERRE_WEIL, note=f"g={g}")
