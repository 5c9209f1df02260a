"""Exact Laurent polynomials in one variable q over arbitrary-precision integers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(init=False, unsafe_hash=True)
class LaurentPoly:
    """
    A Laurent polynomial with integer coefficients, stored as a valuation
    ``min_deg`` and a dense coefficient tuple: ``coeffs[i]`` is the coefficient
    of ``q**(min_deg + i)``.  Canonical form: the first and last coefficients
    are nonzero; the zero polynomial is ``min_deg == 0`` with an empty tuple.

    >>> LaurentPoly(-1, (1, 2, 1, 1))
    LaurentPoly('q^-1 + 2 + q + q^2')
    >>> LaurentPoly(0, (0, 1)) == LaurentPoly(1, (1,))
    True
    >>> LaurentPoly.monomial(-1) * LaurentPoly(0, (1, 2, 1, 1))
    LaurentPoly('q^-1 + 2 + q + q^2')
    """

    min_deg: int
    coeffs: tuple[int, ...]

    def __init__(self, min_deg: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            min_deg += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_deg = 0
            self.coeffs = ()
        else:
            self.min_deg = min_deg
            self.coeffs = tuple(coeffs[lo:hi])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, ())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """The monomial ``coeff * q**exp``."""
        return cls(exp, (coeff,))

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return cls(int(obj["min_deg"]), tuple(int(c) for c in obj["coeffs"]))

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top_deg(self) -> int:
        """Degree of the highest term (garbage -1 for the zero polynomial)."""
        return self.min_deg + len(self.coeffs) - 1

    def coefficient(self, exp: int) -> int:
        i = exp - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_deg + i, c

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.top_deg, other.top_deg)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_deg + i - lo] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_deg, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly(self.min_deg, tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shifted()")
        result, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by q**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_deg + k, self.coeffs)

    def mirror(self, d: int) -> LaurentPoly:
        """The mirror q**d * p(1/q): coefficients reversed around degree d."""
        if self.is_zero():
            return self
        return LaurentPoly(d - self.top_deg, tuple(reversed(self.coeffs)))

    def subs_q_inv(self) -> LaurentPoly:
        """Substitute q -> 1/q."""
        return self.mirror(0)

    def eval_at_one(self) -> int:
        """Specialize q = 1 (the sum of all coefficients)."""
        return sum(self.coeffs)

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def div_exact(self, other: LaurentPoly) -> LaurentPoly:
        """
        Exact quotient self / other in Z[q, 1/q].

        Raises ValueError when other is zero or does not divide exactly; an
        inexact division inside Bareiss elimination indicates a logic error.
        """
        if other.is_zero():
            raise ValueError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_deg - other.min_deg
        rem = list(self.coeffs)
        den = other.coeffs
        if len(rem) < len(den):
            raise ValueError("not exactly divisible")
        out = [0] * (len(rem) - len(den) + 1)
        for k in range(len(out) - 1, -1, -1):
            lead = rem[k + len(den) - 1]
            c, r = divmod(lead, den[-1])
            if r:
                raise ValueError("not exactly divisible")
            out[k] = c
            if c:
                for j, b in enumerate(den):
                    rem[k + j] -= c * b
        if any(rem[: len(den) - 1]):
            raise ValueError("not exactly divisible")
        return LaurentPoly(shift, out)

    # -- presentation ------------------------------------------------------

    def text(self) -> str:
        """Canonical text form, terms ascending: e.g. 'q^-1 + 2 + q + q^2'."""
        if self.is_zero():
            return "0"
        chunks = []
        for exp, c in self.terms():
            mono = "" if exp == 0 else ("q" if exp == 1 else f"q^{exp}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}{mono}"
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        s = body if sign == "+" else "-" + body
        for sign, body in chunks[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> dict:
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.text()}')"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.monomial(1)


# -- polynomial gcd ---------------------------------------------------------

def _trimmed(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def _primitive(p: Sequence[int]) -> list[int]:
    c = _content(p)
    if c == 0:
        return []
    return [x // c for x in p]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """prem(a, b) = lc(b)**(deg a - deg b + 1) * a  mod  b, for deg a >= deg b."""
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    scalings = len(a) - len(b) + 1
    while rem and len(rem) - 1 >= db:
        lead = rem[-1]
        rem = [lb * c for c in rem]
        k = len(rem) - 1 - db
        for j, bc in enumerate(b):
            rem[k + j] -= lead * bc
        rem = _trimmed(rem)
        scalings -= 1
    if scalings > 0:
        rem = [lb**scalings * c for c in rem]
    return rem


def _poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Gcd in Z[q] of two dense coefficient lists, primitive PRS."""
    A = _trimmed(list(a))
    B = _trimmed(list(b))
    if not A:
        return _positive_lead(B)
    if not B:
        return _positive_lead(A)
    c = math.gcd(_content(A), _content(B))
    A, B = _primitive(A), _primitive(B)
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _pseudo_rem(A, B)
        A, B = B, _primitive(R)
    return [c * x for x in _positive_lead(A)]


def _positive_lead(p: list[int]) -> list[int]:
    if p and p[-1] < 0:
        return [-x for x in p]
    return p


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Canonical gcd of two Laurent polynomials: the gcd of the polynomial parts
    (monomial factors stripped), normalized to min_deg 0 and positive leading
    coefficient.  Monomials are units in Z[q, 1/q] so they never enter.
    """
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero():
        return LaurentPoly(0, _positive_lead(list(b.coeffs)))
    if b.is_zero():
        return LaurentPoly(0, _positive_lead(list(a.coeffs)))
    return LaurentPoly(0, _poly_gcd(a.coeffs, b.coeffs))


@dataclass(frozen=True)
class LaurentFraction:
    """
    A quotient of Laurent polynomials, normalized so the denominator has
    min_deg 0 and a positive lowest coefficient.  The projective infinity is
    the single admissible zero-denominator value 1/0.  Full cancellation of
    common polynomial factors is done by :meth:`reduced`.
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero():
            if num == ONE:
                return
            raise ZeroDivisionError("only the canonical infinity 1/0 may have a zero denominator")
        if den.min_deg:
            num = num.shifted(-den.min_deg)
            den = den.shifted(-den.min_deg)
        if den.coeffs[0] < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def infinity(cls) -> LaurentFraction:
        return cls(ONE, ZERO)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> LaurentFraction:
        return cls(p, ONE)

    def is_infinity(self) -> bool:
        return self.den.is_zero()

    def __add__(self, other: LaurentFraction) -> LaurentFraction:
        return LaurentFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __neg__(self) -> LaurentFraction:
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other: LaurentFraction) -> LaurentFraction:
        return self + (-other)

    def __mul__(self, other: LaurentFraction) -> LaurentFraction:
        return LaurentFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: LaurentFraction) -> LaurentFraction:
        return self * other.reciprocal()

    def reciprocal(self) -> LaurentFraction:
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return LaurentFraction(self.den, self.num)

    def scaled(self, mono: LaurentPoly) -> LaurentFraction:
        return LaurentFraction(self.num * mono, self.den)

    def reduced(self) -> LaurentFraction:
        """Cancel the polynomial gcd and the integer content gcd."""
        if self.is_infinity():
            return self
        if self.num.is_zero():
            return LaurentFraction(ZERO, ONE)
        g = laurent_gcd(self.num, self.den)
        num, den = self.num, self.den
        if not g.is_monomial() or g.coefficient(0) != 1:
            num = num.div_exact(g)
            den = den.div_exact(g)
        c = math.gcd(num.content(), den.content())
        if c > 1:
            num = LaurentPoly(num.min_deg, tuple(x // c for x in num.coeffs))
            den = LaurentPoly(den.min_deg, tuple(x // c for x in den.coeffs))
        return LaurentFraction(num, den)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"
