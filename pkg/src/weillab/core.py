"""Exact integer primitives for quartic Weil polynomials.

A quartic Weil polynomial over the field with q elements is

    f(t) = t^4 + a*t^3 + b*t^2 + a*q*t + q^2

with q a prime power and every complex root of absolute value sqrt(q).
Equivalently, both roots of the real quadratic factor

    f+(t) = t^2 + a*t + (b - 2q)

are real and lie in [-2*sqrt(q), 2*sqrt(q)].  That root condition is
decided here by three exact integer inequalities:

    a^2 <= 16q
    2q + b >= 0  and  (2q + b)^2 >= 4*a^2*q
    a^2 - 4b + 8q >= 0

All arithmetic is plain Python integer arithmetic, hence exact at any
size; there is no overflow to guard against at the library level.  The
command line front end applies a configurable size guard instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt


class NotPrimePower(ValueError):
    """q is not of the form p^r with p prime and r >= 1."""


class NotWeil(ValueError):
    """The coefficient pair (a, b) fails the root-location inequalities."""


class MalformedLabel(ValueError):
    """A label string does not follow the <dim>.<q>.<enc(a)>_<enc(b)> scheme."""


class InternalInvariantError(RuntimeError):
    """A condition the classification guarantees was violated.  Bug."""


# ---------------------------------------------------------------------------
# integer square roots


def isqrt_floor(n: int) -> int:
    """floor(sqrt(n)) for n >= 0."""
    if n < 0:
        raise ValueError(f"isqrt_floor of negative number {n}")
    return isqrt(n)


def floor_2sqrt(q: int) -> int:
    """floor(2*sqrt(q)) for q >= 0, e.g. floor_2sqrt(8) == 5."""
    return isqrt_floor(4 * q)


def ceil_sqrt(n: int) -> int:
    """ceil(sqrt(n)) for n >= 0."""
    s = isqrt_floor(n)
    return s if s * s == n else s + 1


def is_square(n: int) -> bool:
    if n < 0:
        return False
    s = isqrt(n)
    return s * s == n


# ---------------------------------------------------------------------------
# factorisation helpers (desk scale, trial division)


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return ()
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return tuple(i for i, flag in enumerate(sieve) if flag)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    factors: dict[int, int] = {}
    m = n
    # sieve limit rounded up to a power of two so the cache is reused
    limit = 1 << (isqrt(n) + 1).bit_length()
    for p in _small_primes(limit):
        if p * p > m:
            break
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


@lru_cache(maxsize=None)
def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """(p, r) with q = p^r, p prime, r >= 1; None if q is not a prime power."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    ((p, r),) = factors.items()
    return p, r


def squarefree_part(n: int) -> tuple[int, int]:
    """Decompose n != 0 as n = c^2 * d with c > 0 and d squarefree.

    The sign of d equals the sign of n, e.g. squarefree_part(48) == (4, 3)
    and squarefree_part(-48) == (4, -3).
    """
    if n == 0:
        raise ValueError("squarefree_part of 0 is undefined")
    c = 1
    d = 1
    for p, e in factorize(abs(n)).items():
        c *= p ** (e // 2)
        if e % 2:
            d *= p
    return c, d if n > 0 else -d


# ---------------------------------------------------------------------------
# the Weil quartic record


@dataclass(frozen=True)
class WeilQuartic:
    """t^4 + a*t^3 + b*t^2 + a*q*t + q^2 over the field with q = p^r elements.

    Construct through :func:`make_weil_quartic`, which validates the input.
    """

    q: int
    p: int
    r: int
    a: int
    b: int

    def coefficients(self) -> tuple[int, int, int, int, int]:
        """Coefficients (1, a, b, a*q, q^2), highest degree first."""
        return (1, self.a, self.b, self.a * self.q, self.q * self.q)

    def fplus_coefficients(self) -> tuple[int, int]:
        """(a, b - 2q), the non-leading coefficients of the real quadratic factor."""
        return (self.a, self.b - 2 * self.q)

    def __str__(self) -> str:
        terms = []
        for coeff, power in zip(self.coefficients(), (4, 3, 2, 1, 0)):
            if coeff == 0:
                continue
            mag = "" if (abs(coeff) == 1 and power > 0) else str(abs(coeff))
            var = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            sign = "-" if coeff < 0 else "+"
            terms.append((sign, f"{mag}{var}"))
        head_sign, head = terms[0]
        rest = " ".join(f"{s} {t}" for s, t in terms[1:])
        lead = f"-{head}" if head_sign == "-" else head
        return f"{lead} {rest}".strip()


def weil_validity_failure(q: int, a: int, b: int) -> str | None:
    """Name of the first failed root-location inequality, or None if valid."""
    if a * a > 16 * q:
        return "a^2 <= 16q fails"
    s = 2 * q + b
    if s < 0 or s * s < 4 * a * a * q:
        return "(2q+b) >= 0 with (2q+b)^2 >= 4a^2q fails"
    if a * a - 4 * b + 8 * q < 0:
        return "a^2 - 4b + 8q >= 0 fails"
    return None


def make_weil_quartic(q: int, a: int, b: int) -> WeilQuartic:
    """Validate (q, a, b) and build the record, computing p and r.

    Raises NotPrimePower if q is not a prime power, NotWeil if some
    complex root would not have absolute value sqrt(q).
    """
    decomposition = prime_power_decomposition(q)
    if decomposition is None:
        raise NotPrimePower(f"q={q} is not a prime power")
    failure = weil_validity_failure(q, a, b)
    if failure is not None:
        raise NotWeil(f"(q={q}, a={a}, b={b}): {failure}")
    p, r = decomposition
    return WeilQuartic(q=q, p=p, r=r, a=a, b=b)


def _make_validated(q: int, p: int, r: int, a: int, b: int) -> WeilQuartic:
    # internal fast path when (p, r) is already known
    failure = weil_validity_failure(q, a, b)
    if failure is not None:
        raise InternalInvariantError(f"derived quartic invalid: (q={q}, a={a}, b={b}): {failure}")
    return WeilQuartic(q=q, p=p, r=r, a=a, b=b)


# ---------------------------------------------------------------------------
# irreducibility over the rationals


def _divisors_of_q_squared(f: WeilQuartic) -> list[int]:
    # q = p^r, so q^2 has exactly the divisors p^0 .. p^(2r)
    return [f.p**i for i in range(2 * f.r + 1)]


def evaluate(f: WeilQuartic, t: int) -> int:
    c4, c3, c2, c1, c0 = f.coefficients()
    return (((c4 * t + c3) * t + c2) * t + c1) * t + c0


def is_irreducible_over_Q(f: WeilQuartic) -> bool:
    """True iff f has no monic integer factor of degree 1 or 2.

    Any monic quadratic factor t^2 + u*t + v has v dividing the constant
    term q^2, and the cofactor constant v' = q^2 / v; the remaining
    coefficient comparisons then pin u, so the search is an exhaustive
    walk over the (few) divisor pairs of q^2.  Linear factors are found
    by the rational root test over the same divisors.
    """
    q, a, b = f.q, f.a, f.b
    qq = q * q
    divisors = _divisors_of_q_squared(f)
    for m in divisors:
        if evaluate(f, m) == 0 or evaluate(f, -m) == 0:
            return False
    for v0 in divisors:
        for v in (v0, -v0):
            vp = qq // v
            if v == vp:
                # cofactor constant equals v; v = -q additionally forces a = 0
                if v == -q and a != 0:
                    continue
                # u + u' = a and u*u' = b - 2v need integer solutions
                disc = a * a - 4 * (b - 2 * v)
                if disc >= 0 and is_square(disc):
                    return False
            else:
                numerator = a * (q - v)
                denominator = vp - v
                if numerator % denominator:
                    continue
                u = numerator // denominator
                if v + vp + u * (a - u) == b:
                    return False
    return True


# ---------------------------------------------------------------------------
# base change to the quadratic extension


def base_change_quadratic(f: WeilQuartic) -> WeilQuartic:
    """Weil quartic of the same class after extension of scalars to q^2.

    The roots get squared, which in coefficients reads

        a2 = 2b - a^2
        b2 = b^2 - 2*a^2*q + 2*q^2
    """
    q, a, b = f.q, f.a, f.b
    a2 = 2 * b - a * a
    b2 = b * b - 2 * a * a * q + 2 * q * q
    return _make_validated(q * q, f.p, 2 * f.r, a2, b2)


# ---------------------------------------------------------------------------
# factorisation modulo 2
#
# Polynomials over the 2-element field are bit masks: bit i is the
# coefficient of t^i, so t^2 + t + 1 is 0b111.

GF2_T = 0b10
GF2_T_PLUS_1 = 0b11
GF2_QUADRATIC = 0b111  # t^2 + t + 1, the only irreducible quadratic

_GF2_IRREDUCIBLE = {
    1: (GF2_T, GF2_T_PLUS_1),
    2: (GF2_QUADRATIC,),
    3: (0b1011, 0b1101),
    4: (0b10011, 0b11001, 0b11111),
}


def gf2_degree(poly: int) -> int:
    if poly == 0:
        raise ValueError("degree of the zero polynomial is undefined")
    return poly.bit_length() - 1


def gf2_mul(x: int, y: int) -> int:
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        x <<= 1
        y >>= 1
    return acc


def gf2_divmod(numerator: int, divisor: int) -> tuple[int, int]:
    if divisor == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    d = gf2_degree(divisor)
    quotient = 0
    remainder = numerator
    while remainder and gf2_degree(remainder) >= d:
        shift = gf2_degree(remainder) - d
        quotient |= 1 << shift
        remainder ^= divisor << shift
    return quotient, remainder


def gf2_poly_str(poly: int) -> str:
    if poly == 0:
        return "0"
    terms = []
    for i in range(gf2_degree(poly), -1, -1):
        if poly >> i & 1:
            terms.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
    return "+".join(terms)


@dataclass(frozen=True)
class Factorisation2:
    """Complete factorisation of f mod 2 into irreducibles over GF(2).

    ``factors`` lists (polynomial bit mask, multiplicity), sorted by
    (degree, mask); the degrees weighted by multiplicity sum to 4.
    """

    factors: tuple[tuple[int, int], ...]

    def product(self) -> int:
        acc = 1
        for poly, mult in self.factors:
            for _ in range(mult):
                acc = gf2_mul(acc, poly)
        return acc

    def degree_multiset(self) -> tuple[int, ...]:
        """Degrees of the irreducible factors, repeated by multiplicity."""
        degs: list[int] = []
        for poly, mult in self.factors:
            degs.extend([gf2_degree(poly)] * mult)
        return tuple(sorted(degs))

    def max_factor_degree(self) -> int:
        return max(gf2_degree(poly) for poly, _ in self.factors)

    def __str__(self) -> str:
        parts = []
        for poly, mult in self.factors:
            base = gf2_poly_str(poly)
            if "+" in base:
                base = f"({base})"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        return " * ".join(parts)


def reduce_mod_2(f: WeilQuartic) -> int:
    c4, c3, c2, c1, c0 = f.coefficients()
    return (
        (c4 & 1) << 4 | (c3 & 1) << 3 | (c2 & 1) << 2 | (c1 & 1) << 1 | (c0 & 1)
    )


def factor_mod_2(f: WeilQuartic) -> Factorisation2:
    """Factor f mod 2 into irreducibles over the 2-element field.

    Trial division by t, t+1 and t^2+t+1 strips every factor of degree
    at most 2; whatever remains has no such factor, hence is irreducible,
    and is checked against the finite table of irreducibles of degree <= 4.
    """
    poly = reduce_mod_2(f)
    counts: dict[int, int] = {}
    for divisor in (GF2_T, GF2_T_PLUS_1, GF2_QUADRATIC):
        while True:
            quotient, remainder = gf2_divmod(poly, divisor)
            if remainder:
                break
            counts[divisor] = counts.get(divisor, 0) + 1
            poly = quotient
    if poly != 1:
        degree = gf2_degree(poly)
        if poly not in _GF2_IRREDUCIBLE.get(degree, ()):
            raise InternalInvariantError(
                f"leftover factor {gf2_poly_str(poly)} of degree {degree} is not irreducible"
            )
        counts[poly] = counts.get(poly, 0) + 1
    factors = tuple(sorted(counts.items(), key=lambda item: (gf2_degree(item[0]), item[0])))
    result = Factorisation2(factors=factors)
    if result.product() != reduce_mod_2(f):
        raise InternalInvariantError(f"mod-2 factorisation of {f} does not multiply back")
    return result


# ---------------------------------------------------------------------------
# label codec
#
# Isogeny-class labels follow the scheme "2.<q>.<enc(a)>_<enc(b)>" where
# each coefficient is written in base 26 with digits a=0 .. z=25, most
# significant digit first and no leading zero digit, and negative values
# carry a leading 'a' marker: enc(0) = "a", enc(11) = "l", enc(-11) = "al".

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Label:
    """Validated label text of shape 2.<q>.<enc(a)>_<enc(b)>."""

    text: str

    def __str__(self) -> str:
        return self.text


def _encode_coefficient(n: int) -> str:
    if n == 0:
        return "a"
    digits = []
    m = abs(n)
    while m:
        m, d = divmod(m, 26)
        digits.append(_ALPHABET[d])
    body = "".join(reversed(digits))
    return body if n > 0 else "a" + body


def _decode_coefficient(text: str) -> int:
    if not text or any(ch not in _ALPHABET for ch in text):
        raise MalformedLabel(f"coefficient code {text!r} is not lower-case base 26")
    if text == "a":
        return 0
    if text[0] == "a":
        body = text[1:]
        if not body or body[0] == "a":
            raise MalformedLabel(f"coefficient code {text!r} has a leading zero digit")
        return -_decode_coefficient(body)
    value = 0
    for ch in text:
        value = value * 26 + _ALPHABET.index(ch)
    return value


def render_label(f: WeilQuartic) -> Label:
    return Label(f"2.{f.q}.{_encode_coefficient(f.a)}_{_encode_coefficient(f.b)}")


def parse_label(text: str) -> WeilQuartic:
    """Inverse of render_label; raises MalformedLabel on structural errors.

    Validity errors of the decoded coefficients propagate as
    NotPrimePower and NotWeil.
    """
    parts = text.split(".")
    if len(parts) != 3:
        raise MalformedLabel(f"label {text!r} does not have three dot-separated parts")
    dim, q_text, coeffs = parts
    if dim != "2":
        raise MalformedLabel(f"label {text!r} is not two-dimensional")
    if not q_text.isdigit():
        raise MalformedLabel(f"label {text!r} has a non-numeric field size")
    codes = coeffs.split("_")
    if len(codes) != 2:
        raise MalformedLabel(f"label {text!r} does not carry exactly two coefficients")
    a = _decode_coefficient(codes[0])
    b = _decode_coefficient(codes[1])
    return make_weil_quartic(int(q_text), a, b)
