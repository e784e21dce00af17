"""Brute-force ground truth for small codes.

For ``n <= 20`` every one of the ``2**n`` candidate flip patterns is
divided by ``g`` directly (vectorised long division), so the valid-modifier
set is found without assuming the coset structure the codec relies on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codec import CoverImage, StegoCode, base_modifier, enumerate_modifiers, phi, sigma
from .errors import GuardError
from .gf2poly import Gf2Poly, rem
from .lcdm import DistortionMap, dffa, make_lcdm

FULL_SEARCH_MAX_N = 20
MAX_K = 24


@dataclass(frozen=True)
class OracleReport:
    n: int
    msg_len: int
    seed: Optional[int]
    trial: Optional[int]
    modifier_count: int
    best_cost: float
    best_modifier: Gf2Poly
    dffa_cost: float
    dffa_modifier: Gf2Poly

    @property
    def gap(self) -> float:
        return self.best_cost - self.dffa_cost

    @property
    def expected_count(self) -> int:
        return 1 << (self.n - self.msg_len)

    def render(self) -> str:
        return (
            f"n={self.n} msg_len={self.msg_len} seed={self.seed} trial={self.trial} "
            f"modifiers={self.modifier_count} best_cost={self.best_cost:g} "
            f"dffa_cost={self.dffa_cost:g} gap={self.gap:g} "
            f"best_modifier={self.best_modifier.to_text() or '-'}"
        )


@dataclass(frozen=True)
class Instance:
    code: StegoCode
    cover: CoverImage
    message: np.ndarray
    costs: DistortionMap


def remainders(values: np.ndarray, g: int, n: int) -> np.ndarray:
    """Remainder of each ``n``-bit pattern in ``values`` modulo ``g``."""
    d = g.bit_length() - 1
    out = values.astype(np.uint32)
    for bit in range(n - 1, d - 1, -1):
        hit = (out >> np.uint32(bit)) & np.uint32(1)
        out ^= hit * np.uint32(g << (bit - d))
    return out


def _valid_patterns(code: StegoCode, v: Gf2Poly, m: Gf2Poly) -> np.ndarray:
    if code.k > MAX_K:
        raise GuardError(f"k={code.k} exceeds the oracle cap of {MAX_K}")
    if code.n <= FULL_SEARCH_MAX_N:
        cand = np.arange(1 << code.n, dtype=np.uint32)
        ok = remainders(cand ^ np.uint32(v.bits), code.g.bits, code.n) == m.bits
        return cand[ok]
    # too many bits for a full sweep: check every coset member individually
    e_base = base_modifier(code, v, m)
    found = [e.bits for e in enumerate_modifiers(code, e_base) if rem(v + e, code.g) == m]
    return np.array(found, dtype=object)


def exhaust_modifiers(code: StegoCode, v: Gf2Poly, m: Gf2Poly) -> set[Gf2Poly]:
    """All ``e`` with ``deg e < n`` and ``rem(v - e, g) == m``."""
    return {Gf2Poly(int(x)) for x in _valid_patterns(code, v, m)}


def verify_dffa(
    code: StegoCode,
    v: Gf2Poly,
    m: Gf2Poly,
    d: DistortionMap,
    seed: Optional[int] = None,
    trial: Optional[int] = None,
) -> OracleReport:
    """Compare DFFA's cost with the exhaustive minimum over all valid modifiers."""
    if code.n > FULL_SEARCH_MAX_N:
        raise GuardError(f"n={code.n} exceeds the oracle cap of {FULL_SEARCH_MAX_N}")
    patterns = _valid_patterns(code, v, m)
    raw = np.frombuffer(patterns.astype("<u4").tobytes(), dtype=np.uint8)
    bits = np.unpackbits(raw.reshape(-1, 4), axis=1, bitorder="little")[:, : code.n]
    approx = bits @ d.costs
    # float dot products can disagree in the last ulp; re-sum near-ties exactly
    lo = approx.min()
    near = np.flatnonzero(approx <= lo + 1e-9 * max(1.0, abs(lo)))
    exact = [(math.fsum(d.costs[bits[i].astype(bool)].tolist()), int(patterns[i])) for i in near]
    best_cost, best_bits = min(exact)
    res = dffa(code, base_modifier(code, v, m), d)
    return OracleReport(
        n=code.n,
        msg_len=code.msg_len,
        seed=seed,
        trial=trial,
        modifier_count=int(patterns.size),
        best_cost=best_cost,
        best_modifier=Gf2Poly(best_bits),
        dffa_cost=res.total_cost,
        dffa_modifier=res.e_ideal,
    )


def random_instance(
    rng: np.random.Generator, n: int, msg_len: int, integer_costs: bool = False
) -> Instance:
    """Random cover, message and cost map for the LCDM code of the given shape."""
    code = make_lcdm(n, msg_len)
    cover = CoverImage(rng.integers(0, 256, size=n))
    message = rng.integers(0, 2, size=msg_len).astype(np.uint8)
    if integer_costs:
        costs = rng.integers(0, 8, size=n).astype(np.float64)
    else:
        costs = rng.random(n) * 100.0
    return Instance(code, cover, message, DistortionMap(costs))


def run_trials(n: int, msg_len: int, trials: int, seed: int) -> list[OracleReport]:
    """Verify DFFA on ``trials`` random instances; trial ``i`` replays from ``(seed, i)``."""
    if n > FULL_SEARCH_MAX_N:
        raise GuardError(f"n={n} exceeds the oracle cap of {FULL_SEARCH_MAX_N}")
    reports = []
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        inst = random_instance(rng, n, msg_len, integer_costs=bool(i % 2))
        v = sigma(phi(inst.cover))
        reports.append(
            verify_dffa(inst.code, v, sigma(inst.message), inst.costs, seed=seed, trial=i)
        )
    return reports
