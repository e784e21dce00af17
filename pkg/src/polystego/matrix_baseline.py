"""Dense parity-check matrix counterpart of the polynomial syndrome.

Column ``c`` of ``H`` holds the coefficients of ``rem(x^c, g)``, which makes
``H @ v`` over GF(2) equal to ``rem(v(x), g)``.  Only feasible for small
``n``; the memory accounting below shows why.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codec import BitVector, StegoCode, as_bits
from .errors import GuardError, LengthMismatchError

MAX_N = 1 << 16

_PARITY = np.array([bin(i).count("1") & 1 for i in range(256)], dtype=np.uint8)


@dataclass(frozen=True)
class ParityMatrix:
    """``rows`` is ``(n - k, ceil(n / 8))`` uint8, each row bit-packed LSB-first."""

    rows: np.ndarray
    n: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape[0], self.n

    def dense(self) -> np.ndarray:
        return np.unpackbits(self.rows, axis=1, bitorder="little", count=self.n)

    def column(self, c: int) -> BitVector:
        return self.dense()[:, c]


def build_parity(code: StegoCode) -> ParityMatrix:
    if code.n > MAX_N:
        raise GuardError(f"n={code.n} exceeds the dense matrix guard of {MAX_N}")
    d = code.msg_len
    g = code.g.bits
    top = 1 << d
    nbytes = (d + 7) // 8
    buf = bytearray()
    col = 1
    for _ in range(code.n):
        # col = rem(x^c, g), advanced by one multiply-by-x and reduce
        buf += col.to_bytes(nbytes, "little")
        col <<= 1
        if col & top:
            col ^= g
    cols = np.frombuffer(bytes(buf), dtype=np.uint8).reshape(code.n, nbytes)
    dense = np.unpackbits(cols, axis=1, bitorder="little", count=d).T
    return ParityMatrix(np.packbits(dense, axis=1, bitorder="little"), code.n)


def matrix_syndrome(h: ParityMatrix, v: BitVector) -> BitVector:
    """GF(2) product ``H @ v`` using packed AND + parity."""
    v = as_bits(v)
    if v.size != h.n:
        raise LengthMismatchError(f"vector length {v.size} != matrix width {h.n}")
    packed = np.packbits(v, bitorder="little")
    folded = np.bitwise_xor.reduce(h.rows & packed, axis=1)
    return _PARITY[folded]


def memory_footprint(n: int, msg_len: int) -> tuple[Fraction, Fraction]:
    """Bytes to store the ``(n - k) x n`` binary matrix versus the generator.

    >>> memory_footprint(700000, 70000)
    (Fraction(6125000000, 1), Fraction(70001, 8))
    """
    return Fraction(n * msg_len, 8), Fraction(msg_len + 1, 8)


def format_bytes(value: Fraction | float, binary: bool = False) -> str:
    """Human-readable size; decimal (1 KB = 1000 B) unless ``binary``."""
    base = 1024 if binary else 1000
    units = ["B", "KiB", "MiB", "GiB", "TiB"] if binary else ["B", "KB", "MB", "GB", "TB"]
    x = float(value)
    i = 0
    while x >= base and i < len(units) - 1:
        x /= base
        i += 1
    return f"{x:.4g} {units[i]}"
