"""Finitely supported rational coefficient sequences over the integers.

A mask is the coefficient sequence of a two-scale relation.  Storage is
canonical: ``coeffs`` never starts or ends with a zero, and the zero mask
is the empty sequence at offset 0.

Text format: ``offset:c0,c1,...`` with each coefficient an integer or
``num/den``, for example ``0:1/64,3/64,3/64,1/64``.  The zero mask prints
as ``0:0``.  No whitespace anywhere.  Printed text re-parses to an equal
value.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .algebra import as_rational, parse_rational
from .exceptions import NotRefinableError, ParseError

_MASK_RE = re.compile(r"^(-?\d+):(.+)$")


class Mask:
    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int, coeffs: Iterable) -> None:
        if not isinstance(offset, int) or isinstance(offset, bool):
            raise TypeError(f"offset must be an int, got {type(offset).__name__}")
        raw = [as_rational(c) for c in coeffs]
        first = next((i for i, c in enumerate(raw) if c != 0), None)
        if first is None:
            self.offset = 0
            self.coeffs = ()
        else:
            last = max(i for i, c in enumerate(raw) if c != 0)
            self.offset = offset + first
            self.coeffs = tuple(raw[first:last + 1])

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def zero(cls) -> "Mask":
        return cls(0, ())

    @classmethod
    def delta(cls, index: int, value=1) -> "Mask":
        """The mask value*delta_index, a single coefficient."""
        return cls(index, (as_rational(value),))

    @classmethod
    def parse(cls, text: str) -> "Mask":
        match = _MASK_RE.match(text)
        if match is None:
            raise ParseError(f"not a mask: {text!r}")
        offset, body = match.groups()
        return cls(int(offset), [parse_rational(tok) for tok in body.split(",")])

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support_min(self) -> int | None:
        return None if self.is_zero else self.offset

    @property
    def support_max(self) -> int | None:
        return None if self.is_zero else self.offset + len(self.coeffs) - 1

    def coefficient(self, index: int) -> Fraction:
        """Coefficient at an absolute index, zero outside the stored range."""
        k = index - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """(index, coefficient) pairs over the stored range, in index order."""
        return iter(enumerate(self.coeffs, start=self.offset))

    def sum(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    # ------------------------------------------------------------------
    # arithmetic

    def translate(self, k: int) -> "Mask":
        """Shift every index by k."""
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("translation amount must be an int")
        if self.is_zero:
            return self
        return Mask(self.offset + k, self.coeffs)

    def scale(self, factor) -> "Mask":
        factor = as_rational(factor)
        return Mask(self.offset, [factor * c for c in self.coeffs])

    def convolve(self, other: "Mask") -> "Mask":
        """Discrete convolution: result_k = sum_j self_j * other_(k-j)."""
        if self.is_zero or other.is_zero:
            return Mask.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Mask(self.offset + other.offset, out)

    def __add__(self, other: "Mask") -> "Mask":
        if not isinstance(other, Mask):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.support_max, other.support_max)
        out = [self.coefficient(i) + other.coefficient(i) for i in range(lo, hi + 1)]
        return Mask(lo, out)

    def __sub__(self, other: "Mask") -> "Mask":
        if not isinstance(other, Mask):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self) -> "Mask":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Mask):
            return self.convolve(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # ------------------------------------------------------------------
    # value protocol

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mask):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0:0"
        return f"{self.offset}:{','.join(str(c) for c in self.coeffs)}"

    def __repr__(self) -> str:
        return f"Mask.parse({str(self)!r})"


def refined_degree(m: Mask) -> int:
    """Degree of the polynomial a mask can refine, read off its sum.

    The coefficient sum must be 2**-(n+1) for some n >= 0; that n is
    returned.  Any other sum raises NotRefinableError.
    """
    s = m.sum()
    den = s.denominator
    if s.numerator != 1 or den < 2 or den & (den - 1):
        raise NotRefinableError(f"mask does not refine a polynomial (sum {s})")
    return den.bit_length() - 2


def difference_power(n: int) -> Mask:
    """The n-th convolution power of (1, -1) at offset 0.

    Coefficients are binomial with alternating signs; n = 0 gives the
    unit delta.
    """
    if n < 0:
        raise ValueError(f"negative power {n}")
    return Mask(0, [Fraction((-1) ** k * math.comb(n, k)) for k in range(n + 1)])


class ReducedMask(NamedTuple):
    remainder: Mask
    quotient: Mask


def reduce_mod_difference(m: Mask, n: int) -> ReducedMask:
    """Divide a mask by (1,-1)**(n+1), keeping the remainder in {0..n}.

    Returns (remainder, quotient) with remainder supported inside
    {0, ..., n} and m == remainder + quotient * difference_power(n+1).
    The remainder with that support is unique, so it canonically
    represents the class of m modulo multiples of (1,-1)**(n+1).

    Elimination order: indices below 0 are cleared first, lowest first,
    using the divisor copy aligned at its leading 1; then indices above n,
    highest first, using the copy aligned at its trailing (-1)**(n+1).
    Each step shrinks the out-of-range support, and the low passes never
    spill above n (nor the high passes below 0), so the loop terminates.
    """
    if n < 0:
        raise ValueError(f"target degree must be nonnegative, got {n}")
    divisor = difference_power(n + 1)
    trailing = divisor.coefficient(n + 1)  # (-1)**(n+1)
    remainder = m
    quotient = Mask.zero()
    while not remainder.is_zero and remainder.support_min < 0:
        step = Mask.delta(remainder.support_min, remainder.coeffs[0])
        quotient = quotient + step
        remainder = remainder - step.convolve(divisor)
    while not remainder.is_zero and remainder.support_max > n:
        c = remainder.coeffs[-1] / trailing
        step = Mask.delta(remainder.support_max - (n + 1), c)
        quotient = quotient + step
        remainder = remainder - step.convolve(divisor)
    return ReducedMask(remainder, quotient)
