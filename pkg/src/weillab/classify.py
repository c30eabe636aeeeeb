"""Classification of isogeny classes with no curves of geometric genus <= 2.

An abelian surface over the field with q elements contains no absolutely
irreducible curve of geometric genus 0, 1 or 2 exactly when its Weil
quartic falls in one of two coefficient families (plus two exceptional
reducible squares):

family A, the classes with no principally polarised member:
    a^2 - b = q,  b < 0,  and every prime divisor of b is 1 mod 3;

family B, the Weil-restriction classes (a = 0 and one of):
    b = 1 - 2q;
    b = 2 - 2q  with p > 2;
    b = -q      with p = 11 mod 12 and q a square,
                or p = 3 and q a square,
                or p = 2 and q a non-square;
    (q, b) = (2, -4);
    (q, b) = (3, -6).

Members of either family are irreducible over the rationals except for
(t^2-2)^2 and (t^2-3)^2, which are split off as the two special kinds.
Everything else is reported as Outside with a short machine-readable
reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .core import (
    InternalInvariantError,
    NotPrimePower,
    WeilQuartic,
    isqrt_floor,
    is_irreducible_over_Q,
    make_weil_quartic,
    prime_power_decomposition,
)


class WrongKind(ValueError):
    """Operation called on a class kind outside its domain."""


@unique
class Family(Enum):
    PIRR_A = "PirrA"
    PIRR_B = "PirrB"
    SPECIAL_Q2 = "SpecialQ2"
    SPECIAL_Q3 = "SpecialQ3"
    OUTSIDE = "Outside"


# coefficient patterns of family B, used as b_case tags and certificates
B_CASE_1_MINUS_2Q = "b=1-2q"
B_CASE_2_MINUS_2Q = "b=2-2q"
B_CASE_MINUS_Q = "b=-q"
B_CASE_SPECIAL_Q2 = "(q,b)=(2,-4)"
B_CASE_SPECIAL_Q3 = "(q,b)=(3,-6)"


@dataclass(frozen=True)
class ClassKind:
    """Verdict of the family classification.

    ``b_case`` is set for family B members only; ``reason`` for Outside.
    """

    family: Family
    b_case: str | None = None
    reason: str | None = None

    @property
    def is_irreducible_family(self) -> bool:
        return self.family in (Family.PIRR_A, Family.PIRR_B)

    @property
    def is_special(self) -> bool:
        return self.family in (Family.SPECIAL_Q2, Family.SPECIAL_Q3)


@unique
class PRankClass(Enum):
    ORDINARY = "Ordinary"
    SUPERSINGULAR = "Supersingular"


def prime_divisors_all_1_mod_3(m: int) -> bool:
    """True iff every prime divisor of m >= 1 is congruent to 1 mod 3.

    Vacuously true for m = 1.  Early exit on the first bad prime.
    """
    if m % 2 == 0 or m % 3 == 0:
        return False if m > 1 else True
    d = 5
    step = 2
    while d * d <= m:
        if m % d == 0:
            if d % 3 != 1:
                return False
            while m % d == 0:
                m //= d
        d += step
        step = 6 - step  # skip multiples of 3
    return m == 1 or m % 3 == 1


def matches_family_a(f: WeilQuartic) -> bool:
    """Coefficient condition of family A (irreducibility not included)."""
    return (
        f.a * f.a - f.b == f.q
        and f.b < 0
        and prime_divisors_all_1_mod_3(-f.b)
    )


def family_b_case(f: WeilQuartic) -> str | None:
    """Matched coefficient pattern of family B, or None."""
    q, p, r, b = f.q, f.p, f.r, f.b
    if f.a != 0:
        return None
    if b == 1 - 2 * q:
        return B_CASE_1_MINUS_2Q
    if b == 2 - 2 * q and p > 2:
        return B_CASE_2_MINUS_2Q
    if b == -q:
        q_is_square = r % 2 == 0
        if (p % 12 == 11 and q_is_square) or (p == 3 and q_is_square) or (p == 2 and not q_is_square):
            return B_CASE_MINUS_Q
    if (q, b) == (2, -4):
        return B_CASE_SPECIAL_Q2
    if (q, b) == (3, -6):
        return B_CASE_SPECIAL_Q3
    return None


def _outside_reason(f: WeilQuartic) -> str:
    if f.a * f.a - f.b == f.q:
        if f.b >= 0:
            return "b-not-negative"
        return "prime-divisor-of-b-not-1-mod-3"
    if f.a == 0:
        return "b-not-in-weil-restriction-list"
    return "no-family-condition-matched"


def classify(f: WeilQuartic) -> ClassKind:
    """Place f in family A, family B, one of the two specials, or Outside.

    The two coefficient conditions are mutually exclusive; a reducible
    match can only be (t^2-2)^2 or (t^2-3)^2.  Either guarantee failing
    raises InternalInvariantError.
    """
    in_a = matches_family_a(f)
    b_case = family_b_case(f)
    if in_a and b_case is not None:
        raise InternalInvariantError(f"conditions (a) and (b) both match {f}")
    if not in_a and b_case is None:
        return ClassKind(Family.OUTSIDE, reason=_outside_reason(f))
    if is_irreducible_over_Q(f):
        if in_a:
            return ClassKind(Family.PIRR_A)
        return ClassKind(Family.PIRR_B, b_case=b_case)
    if (f.q, f.a, f.b) == (2, 0, -4):
        return ClassKind(Family.SPECIAL_Q2)
    if (f.q, f.a, f.b) == (3, 0, -6):
        return ClassKind(Family.SPECIAL_Q3)
    raise InternalInvariantError(f"reducible family member {f} is not one of the two specials")


def enumerate_classes(q: int) -> list[tuple[WeilQuartic, ClassKind]]:
    """All family members at a given q, sorted by (a, b), duplicate-free.

    Family A candidates run over a with a^2 < q (both signs) and
    b = a^2 - q; family B candidates come from its finite b list; the
    two specials occur only at q = 2 and q = 3.
    """
    if prime_power_decomposition(q) is None:
        raise NotPrimePower(f"q={q} is not a prime power")
    candidates: set[tuple[int, int]] = set()
    a_max = isqrt_floor(q - 1)
    for a in range(-a_max, a_max + 1):
        b = a * a - q
        if prime_divisors_all_1_mod_3(-b):
            candidates.add((a, b))
    for b in (1 - 2 * q, 2 - 2 * q, -q):
        candidates.add((0, b))
    if q == 2:
        candidates.add((0, -4))
    if q == 3:
        candidates.add((0, -6))
    members = []
    for a, b in candidates:
        f = make_weil_quartic(q, a, b)
        kind = classify(f)
        if kind.family is not Family.OUTSIDE:
            members.append((f, kind))
    members.sort(key=lambda pair: (pair[0].a, pair[0].b))
    return members


def _require_irreducible_family(kind: ClassKind, operation: str) -> None:
    if not kind.is_irreducible_family:
        raise WrongKind(f"{operation} is defined for family A and B members only, got {kind.family.value}")


def p_rank_class(f: WeilQuartic, kind: ClassKind) -> PRankClass:
    """Ordinary or supersingular; no family member has intermediate p-rank.

    Family A members are ordinary exactly when a != 0; family B members
    exactly when b = 1-2q, or b = 2-2q with p > 2.  Agrees with the
    general criterion gcd(b, p) = 1.
    """
    _require_irreducible_family(kind, "p_rank_class")
    if kind.family is Family.PIRR_A:
        ordinary = f.a != 0
    else:
        ordinary = f.b == 1 - 2 * f.q or (f.b == 2 - 2 * f.q and f.p > 2)
    return PRankClass.ORDINARY if ordinary else PRankClass.SUPERSINGULAR


def galois_metadata(f: WeilQuartic, kind: ClassKind) -> bool:
    """The quartic field of any family A or B member is Galois over Q.

    Recorded as known metadata; not recomputed here.
    """
    _require_irreducible_family(kind, "galois_metadata")
    return True
