"""Syndrome embedding in the polynomial domain.

The message is the remainder of the cover's LSB polynomial modulo a
generator ``g``.  Index conventions are 0-based throughout: pixel ``i``,
bit ``i`` and the coefficient of ``x^i`` all refer to the same position.
Subtraction in GF(2)[x] is XOR, so ``V - M`` is computed as ``V + M``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Optional, Sequence

import numpy as np

from .errors import CapacityError, GuardError, LengthMismatchError, StrategyError
from .gf2poly import Gf2Poly, mul, rem

if TYPE_CHECKING:
    from .lcdm import DistortionMap

# BitVector values are 1-D uint8 numpy arrays holding 0/1.
BitVector = np.ndarray

EXHAUSTIVE_MAX_K = 24
STRATEGIES = ("dffa", "exhaustive")


@dataclass(frozen=True)
class StegoCode:
    """An ``(n, k)`` polynomial code; capacity is ``n - k = deg g`` bits."""

    n: int
    g: Gf2Poly

    def __post_init__(self):
        d = self.g.degree
        if d is None or d < 1:
            raise ValueError("generator must have degree >= 1")
        if d >= self.n:
            raise ValueError(f"generator degree {d} must be below n={self.n}")

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def msg_len(self) -> int:
        return self.g.degree


class CoverImage:
    """Grayscale 8-bit pixels in row-major order."""

    __slots__ = ("pixels", "width", "height")

    def __init__(self, pixels, width: Optional[int] = None, height: Optional[int] = None):
        arr = np.asarray(pixels)
        if arr.ndim == 2 and width is None and height is None:
            height, width = arr.shape
        arr = arr.reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("pixel values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
        if width is None and height is None:
            width, height = arr.size, 1
        elif width is None:
            width = arr.size // height
        elif height is None:
            height = arr.size // width
        if width <= 0 or height <= 0 or width * height != arr.size:
            raise LengthMismatchError(
                f"{arr.size} pixels do not form a {width}x{height} image"
            )
        arr.setflags(write=False)
        self.pixels = arr
        self.width = width
        self.height = height

    def __len__(self) -> int:
        return self.pixels.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoverImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )

    def __repr__(self) -> str:
        return f"CoverImage({self.width}x{self.height})"


@dataclass(frozen=True)
class EmbedReport:
    stego: CoverImage
    e_base: Gf2Poly
    e_ideal: Gf2Poly
    total_cost: float
    comparisons: int
    strategy: str


def as_bits(values: Sequence[int] | np.ndarray) -> BitVector:
    arr = np.asarray(values, dtype=np.int64).reshape(-1)
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise ValueError("bit vector entries must be 0 or 1")
    return arr.astype(np.uint8)


def phi(cover: CoverImage) -> BitVector:
    """LSB plane of the cover (pixel mod 2)."""
    return cover.pixels & 1


def sigma(v: BitVector) -> Gf2Poly:
    """Bit vector to polynomial, ``v[i]`` becomes the coefficient of ``x^i``."""
    return Gf2Poly.from_coeffs(as_bits(v))


def sigma_inv(p: Gf2Poly, n: int) -> BitVector:
    """Polynomial to a length-``n`` bit vector; fails when ``deg p >= n``."""
    if p.degree is not None and p.degree >= n:
        raise LengthMismatchError(f"degree {p.degree} does not fit in {n} bits")
    return p.coeffs(n)


def syndrome(code: StegoCode, v: Gf2Poly) -> Gf2Poly:
    return rem(v, code.g)


def base_modifier(code: StegoCode, v: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    """``rem(V - M, g)``: the unique modifier of degree below ``n - k``."""
    if v.degree is not None and v.degree >= code.n:
        raise LengthMismatchError(
            f"cover polynomial degree {v.degree} exceeds cover length {code.n}"
        )
    if m.degree is not None and m.degree >= code.msg_len:
        raise CapacityError(
            f"message polynomial degree {m.degree} exceeds capacity {code.msg_len}"
        )
    return rem(v + m, code.g)


def enumerate_modifiers(
    code: StegoCode, e_base: Gf2Poly, budget: Optional[int] = None
) -> Iterator[Gf2Poly]:
    """Yield ``e_base + F*g`` for ``F = 0, 1, 2, ...`` (F read as a bit pattern).

    ``budget`` caps the number of yields; ``None`` means all ``2**k``.
    """
    total = 1 << code.k
    if budget is None or budget >= total:
        if code.k > 63:
            raise GuardError(f"full enumeration of 2^{code.k} modifiers refused")
        count = total
    else:
        count = max(budget, 0)
    g = code.g
    for f in range(count):
        yield e_base + mul(Gf2Poly(f), g)


def apply_modifier(cover: CoverImage, e: BitVector) -> CoverImage:
    """Flip the LSB of every pixel where ``e`` is 1."""
    e = as_bits(e)
    if e.size != len(cover):
        raise LengthMismatchError(f"modifier length {e.size} != cover length {len(cover)}")
    return CoverImage(cover.pixels ^ e, cover.width, cover.height)


def extract(code: StegoCode, stego: CoverImage) -> BitVector:
    """Recover the ``n - k`` message bits from a stego image."""
    if len(stego) != code.n:
        raise LengthMismatchError(f"stego length {len(stego)} != code length {code.n}")
    return sigma_inv(rem(sigma(phi(stego)), code.g), code.msg_len)


def modifier_cost(e: Gf2Poly, costs: np.ndarray) -> float:
    return math.fsum(costs[i] for i in e.exponents())


def exhaustive_minimize(
    code: StegoCode,
    e_base: Gf2Poly,
    costs: Optional[np.ndarray] = None,
    budget: Optional[int] = None,
) -> tuple[Gf2Poly, float, int]:
    """Score modifiers in canonical order and keep the cheapest (first wins ties).

    Without ``costs`` every flip costs 1.  Without ``budget`` the full
    ``2**k`` coset is searched, which is refused above ``k = 24``.
    """
    if budget is None and code.k > EXHAUSTIVE_MAX_K:
        raise GuardError(
            f"exhaustive search over 2^{code.k} modifiers exceeds 2^{EXHAUSTIVE_MAX_K}"
        )
    best, best_cost, scored = None, math.inf, 0
    for e in enumerate_modifiers(code, e_base, budget):
        scored += 1
        c = float(e.weight) if costs is None else modifier_cost(e, costs)
        if c < best_cost:
            best, best_cost = e, c
    if best is None:
        raise ValueError("budget must allow at least one modifier")
    return best, best_cost, scored


def embed_with_report(
    code: StegoCode,
    cover: CoverImage,
    message: BitVector,
    strategy: str = "dffa",
    costs: Optional[DistortionMap] = None,
    budget: Optional[int] = None,
) -> EmbedReport:
    """Embed and return the stego image together with minimizer statistics."""
    from .lcdm import DistortionMap, dffa, is_lcdm

    if strategy not in STRATEGIES:
        raise StrategyError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if len(cover) != code.n:
        raise LengthMismatchError(f"cover length {len(cover)} != code length {code.n}")
    message = as_bits(message)
    if message.size != code.msg_len:
        raise CapacityError(
            f"message has {message.size} bits, code capacity is {code.msg_len}"
        )
    if costs is not None and not isinstance(costs, DistortionMap):
        costs = DistortionMap(costs)
    if costs is not None and len(costs) != code.n:
        raise LengthMismatchError(f"cost map length {len(costs)} != cover length {code.n}")

    v = sigma(phi(cover))
    e_base = base_modifier(code, v, sigma(message))
    if strategy == "dffa":
        if not is_lcdm(code):
            raise StrategyError("DFFA requires an LCDM generator 1 + x^(n-k)")
        if costs is None:
            raise StrategyError("DFFA requires a distortion map")
        res = dffa(code, e_base, costs)
        e_ideal, total, comparisons = res.e_ideal, res.total_cost, res.comparisons
    else:
        arr = None if costs is None else costs.costs
        e_ideal, total, comparisons = exhaustive_minimize(code, e_base, arr, budget)
    stego = apply_modifier(cover, sigma_inv(e_ideal, code.n))
    return EmbedReport(stego, e_base, e_ideal, total, comparisons, strategy)


def embed(
    code: StegoCode,
    cover: CoverImage,
    message: BitVector,
    strategy: str = "dffa",
    costs: Optional[DistortionMap] = None,
    budget: Optional[int] = None,
) -> CoverImage:
    """Return a stego image whose extracted message is ``message``.

    ``strategy`` is ``"dffa"`` (LCDM generator and a cost map required) or
    ``"exhaustive"`` (cost map optional; small ``k`` unless ``budget`` is set).
    """
    return embed_with_report(code, cover, message, strategy, costs, budget).stego
