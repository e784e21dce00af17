"""LCDM code ``g = 1 + x^(n-k)`` and the distortion family finding algorithm.

Modulo ``1 + x^d`` we have ``x^(h + L*d) = x^h``, so each nonzero term
(head) of the base modifier can be moved to any exponent in its residue
class mod ``d``.  DFFA picks the cheapest member of every head's class.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codec import StegoCode
from .errors import LengthMismatchError, StrategyError
from .gf2poly import Gf2Poly, add, mul, shift


class DistortionMap:
    """Nonnegative, finite per-position flip costs."""

    __slots__ = ("costs",)

    def __init__(self, costs: Sequence[float] | np.ndarray):
        arr = np.array(costs, dtype=np.float64).reshape(-1)
        if not np.all(np.isfinite(arr)):
            raise ValueError("costs must be finite")
        if arr.size and arr.min() < 0:
            raise ValueError("costs must be nonnegative")
        arr.setflags(write=False)
        self.costs = arr

    def __len__(self) -> int:
        return self.costs.size

    def __getitem__(self, i: int) -> float:
        return float(self.costs[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistortionMap):
            return NotImplemented
        return np.array_equal(self.costs, other.costs)

    def __repr__(self) -> str:
        return f"DistortionMap(n={self.costs.size})"


@dataclass(frozen=True)
class HeadFamily:
    head_exponent: int
    positions: tuple[int, ...]
    costs: tuple[float, ...]
    chosen_position: int

    @property
    def chosen_cost(self) -> float:
        return self.costs[self.positions.index(self.chosen_position)]


@dataclass(frozen=True)
class DffaResult:
    e_ideal: Gf2Poly
    total_cost: float
    comparisons: int
    positions: tuple[int, ...]


def make_lcdm(n: int, msg_len: int) -> StegoCode:
    """The ``(n, n - msg_len)`` LCDM code.

    >>> str(make_lcdm(11, 3).g)
    '1 + x^3'
    """
    if not 0 < msg_len < n:
        raise ValueError(f"message length must satisfy 0 < msg_len < n, got {msg_len}, n={n}")
    return StegoCode(n, Gf2Poly((1 << msg_len) | 1))


def is_lcdm(code: StegoCode) -> bool:
    return code.g.bits == (1 << code.msg_len) | 1


def family_positions(head: int, n: int, msg_len: int) -> range:
    """Exponents ``head, head + d, ..., head + L*d`` below ``n``."""
    return range(head, n, msg_len)


def family_size(head: int, n: int, msg_len: int) -> int:
    return (n - 1 - head) // msg_len + 1


def _check(code: StegoCode, e_base: Gf2Poly, d: DistortionMap) -> None:
    if not is_lcdm(code):
        raise StrategyError(f"generator {code.g} is not of the form 1 + x^{code.msg_len}")
    if e_base.degree is not None and e_base.degree >= code.msg_len:
        raise ValueError(f"base modifier degree {e_base.degree} must be below {code.msg_len}")
    if len(d) != code.n:
        raise LengthMismatchError(f"cost map length {len(d)} != code length {code.n}")


def head_families(code: StegoCode, e_base: Gf2Poly, d: DistortionMap) -> list[HeadFamily]:
    """One family per head of ``e_base``; ties go to the smallest position."""
    _check(code, e_base, d)
    out = []
    for h in e_base.exponents():
        pos = tuple(family_positions(h, code.n, code.msg_len))
        costs = tuple(float(c) for c in d.costs[h :: code.msg_len])
        best = min(range(len(pos)), key=lambda i: (costs[i], pos[i]))
        out.append(HeadFamily(h, pos, costs, pos[best]))
    return out


def dffa(code: StegoCode, e_base: Gf2Poly, d: DistortionMap) -> DffaResult:
    """Select the minimum-cost member of every head family.

    ``comparisons`` counts cost lookups, i.e. the summed family sizes.
    """
    _check(code, e_base, d)
    heads = np.asarray(e_base.exponents(), dtype=np.int64)
    if heads.size == 0:
        return DffaResult(Gf2Poly(0), 0.0, 0, ())
    n, step = code.n, code.msg_len
    rows = -(-n // step)
    grid = np.full(rows * step, np.inf)
    grid[:n] = d.costs
    # column h of the grid is the residue class of h; argmin returns the
    # first (smallest) row on ties
    table = grid.reshape(rows, step)[:, heads]
    chosen = heads + table.argmin(axis=0) * step
    comparisons = int(((n - 1 - heads) // step + 1).sum())
    total = math.fsum(d.costs[chosen].tolist())
    bits = np.zeros(n, dtype=np.uint8)
    bits[chosen] = 1
    e_ideal = Gf2Poly.from_coeffs(bits)
    return DffaResult(e_ideal, total, comparisons, tuple(chosen.tolist()))


def shift_identity_check(h: int, L: int, code: StegoCode) -> bool:
    """Check ``x^h + sum_{l=1..L} x^h g x^((l-1)d) == x^(h + L d)`` for ``g = 1 + x^d``."""
    d = code.msg_len
    if h < 0 or L < 0:
        raise ValueError("h and L must be nonnegative")
    if h + L * d >= code.n:
        raise ValueError(f"x^{h + L * d} exceeds cover length {code.n}")
    head = Gf2Poly.monomial(h)
    lhs = head
    step = mul(head, code.g)
    for l in range(1, L + 1):
        lhs = add(lhs, shift(step, (l - 1) * d))
    return lhs == Gf2Poly.monomial(h + L * d)
