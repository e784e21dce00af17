"""Polynomials over GF(2), bit-packed into Python integers.

Bit ``i`` of the backing integer is the coefficient of ``x^i`` (LSB-first).
Python integers are arbitrary precision, so trailing zero padding never
exists and equality/degree are independent of how a value was built.

>>> v = Gf2Poly.from_exponents([0, 2, 6, 8, 9])
>>> g = Gf2Poly.from_text("0 3")
>>> str(rem(v + Gf2Poly.from_exponents([0, 2]), g))
'x^2'
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "Gf2Poly",
    "add",
    "sub",
    "mul",
    "shift",
    "rem",
    "quotient",
    "divmod_poly",
    "degree",
]

_SMALL_BITS = 1024


def set_bits(x: int) -> list[int]:
    """Ascending indices of the set bits of a nonnegative integer."""
    if x.bit_length() <= _SMALL_BITS:
        out = []
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return out
    raw = np.frombuffer(x.to_bytes((x.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).tolist()


class Gf2Poly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if not isinstance(bits, int) or isinstance(bits, bool):
            raise TypeError(f"expected int, got {type(bits).__name__}")
        if bits < 0:
            raise ValueError("bit pattern must be nonnegative")
        self._bits = bits

    @classmethod
    def monomial(cls, e: int) -> Gf2Poly:
        if e < 0:
            raise ValueError("negative exponent")
        return cls(1 << e)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Gf2Poly:
        """Sum of ``x^e``; repeated exponents cancel in pairs."""
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError("negative exponent")
            bits ^= 1 << int(e)
        return cls(bits)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int] | np.ndarray) -> Gf2Poly:
        """Build from an LSB-first 0/1 coefficient sequence."""
        arr = np.asarray(coeffs, dtype=np.uint8)
        if arr.size and arr.max() > 1:
            raise ValueError("coefficients must be 0 or 1")
        if arr.size == 0:
            return cls(0)
        packed = np.packbits(arr, bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def from_text(cls, text: str) -> Gf2Poly:
        """Parse a whitespace-separated strictly ascending exponent list.

        >>> Gf2Poly.from_text("0 3") == Gf2Poly.from_exponents([0, 3])
        True
        """
        exps = []
        for tok in text.split():
            try:
                e = int(tok)
            except ValueError:
                raise ValueError(f"not an integer exponent: {tok!r}") from None
            if e < 0:
                raise ValueError(f"negative exponent: {e}")
            if exps and e == exps[-1]:
                raise ValueError(f"duplicate exponent: {e}")
            if exps and e < exps[-1]:
                raise ValueError(f"descending exponent: {e} after {exps[-1]}")
            exps.append(e)
        return cls.from_exponents(exps)

    def to_text(self) -> str:
        return " ".join(str(e) for e in self.exponents())

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self) -> Optional[int]:
        """Largest exponent with a nonzero coefficient, ``None`` for zero."""
        if not self._bits:
            return None
        return self._bits.bit_length() - 1

    @property
    def weight(self) -> int:
        return bin(self._bits).count("1")

    def exponents(self) -> list[int]:
        return set_bits(self._bits)

    def coeffs(self, length: Optional[int] = None) -> np.ndarray:
        """LSB-first coefficient vector, zero padded to ``length``."""
        nbits = self._bits.bit_length()
        if length is None:
            length = nbits
        elif nbits > length:
            raise ValueError(f"degree {nbits - 1} does not fit in {length} coefficients")
        nbytes = (length + 7) // 8
        raw = np.frombuffer(self._bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little", count=length)

    def __getitem__(self, i: int) -> int:
        return (self._bits >> i) & 1

    def __bool__(self) -> bool:
        return bool(self._bits)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Gf2Poly):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Gf2Poly", self._bits))

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self._bits ^ other._bits)

    __sub__ = __add__
    __xor__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_mul(self._bits, other._bits))

    def __lshift__(self, s: int) -> Gf2Poly:
        return shift(self, s)

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return rem(self, other)

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return quotient(self, other)

    def __divmod__(self, other: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return divmod_poly(self, other)

    def __str__(self) -> str:
        if not self._bits:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly.from_exponents({self.exponents()})"


def _mul(a: int, b: int) -> int:
    # iterate over the sparser operand
    if bin(a).count("1") < bin(b).count("1"):
        a, b = b, a
    out = 0
    for e in set_bits(b):
        out ^= a << e
    return out


def _rem(a: int, g: int) -> int:
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    d = g.bit_length() - 1
    if a.bit_length() <= d:
        return a
    tail = g ^ (1 << d)
    if tail == 0:
        return a & ((1 << d) - 1)
    tail_exps = set_bits(tail)
    gap = d - tail_exps[-1]
    if 2 * len(tail_exps) <= gap:
        # Block long division for sparse g: x^d = tail (mod g) clears `gap`
        # quotient bits per pass instead of one.
        mask = (1 << d) - 1
        while a.bit_length() > d:
            hi = a >> d
            a &= mask
            for e in tail_exps:
                a ^= hi << e
        return a
    while True:
        top = a.bit_length()
        if top <= d:
            return a
        a ^= g << (top - 1 - d)


def _divmod(a: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    d = g.bit_length() - 1
    q = 0
    while True:
        top = a.bit_length()
        if top <= d:
            return q, a
        s = top - 1 - d
        q |= 1 << s
        a ^= g << s


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Coefficient-wise XOR; identical to subtraction in characteristic 2."""
    return Gf2Poly(a.bits ^ b.bits)


sub = add


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Carry-less product."""
    return Gf2Poly(_mul(a.bits, b.bits))


def shift(a: Gf2Poly, s: int) -> Gf2Poly:
    """Multiply by ``x^s``."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return Gf2Poly(a.bits << s)


def rem(a: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    """Remainder of ``a`` modulo ``g``; raises ZeroDivisionError for ``g = 0``.

    >>> str(rem(Gf2Poly.from_exponents([0, 2, 6, 9]), Gf2Poly.from_text("0 3")))
    '1 + x^2'
    """
    return Gf2Poly(_rem(a.bits, g.bits))


def quotient(a: Gf2Poly, g: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_divmod(a.bits, g.bits)[0])


def divmod_poly(a: Gf2Poly, g: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Return ``(q, r)`` with ``a = q*g + r`` and ``deg r < deg g``."""
    q, r = _divmod(a.bits, g.bits)
    return Gf2Poly(q), Gf2Poly(r)


def degree(a: Gf2Poly) -> Optional[int]:
    return a.degree
