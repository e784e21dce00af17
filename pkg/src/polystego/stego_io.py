"""File formats: binary PGM images, cost maps, message bits, generators.

* image: ``P5`` PGM, maxval 255, pixels stored row-major
* costs: whitespace-separated nonnegative decimals
* message: ASCII ``0``/``1``; character ``i`` is the coefficient of ``x^i``
* generator: strictly ascending exponent list, ``"0 3"`` is ``1 + x^3``
"""
from __future__ import annotations

import math
import os
import re
import tempfile
from pathlib import Path
from typing import Optional

import numpy as np

from .codec import BitVector, CoverImage
from .errors import FormatError, LengthMismatchError, UnsupportedFormatError
from .gf2poly import Gf2Poly
from .lcdm import DistortionMap

_HEADER_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def atomic_write(path: str | os.PathLike, data: bytes) -> None:
    """Write via a temporary sibling and rename, so no partial file is left behind."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError:
        raise FormatError(f"{path}: not ASCII text") from None


# -- PGM ---------------------------------------------------------------------

def parse_pgm(data: bytes) -> CoverImage:
    magic = data[:2]
    if magic in (b"P1", b"P2", b"P3", b"P4", b"P6"):
        raise UnsupportedFormatError(f"netpbm type {magic.decode()} not supported, need P5")
    if magic != b"P5":
        raise FormatError("missing P5 magic number")
    pos = 2
    fields = []
    for _ in range(3):
        m = _HEADER_TOKEN.match(data, pos)
        if m is None:
            raise FormatError("truncated PGM header")
        try:
            fields.append(int(m.group(1)))
        except ValueError:
            raise FormatError(f"bad PGM header field {m.group(1)!r}") from None
        pos = m.end()
    width, height, maxval = fields
    if width <= 0 or height <= 0:
        raise FormatError(f"bad PGM dimensions {width}x{height}")
    if maxval != 255:
        raise FormatError(f"maxval must be 255, got {maxval}")
    if pos >= len(data) or data[pos : pos + 1] not in (b" ", b"\t", b"\n", b"\r"):
        raise FormatError("missing whitespace after PGM header")
    pos += 1
    size = width * height
    payload = data[pos:]
    if len(payload) < size:
        raise FormatError(f"truncated PGM payload: {len(payload)} of {size} bytes")
    if len(payload) > size:
        raise FormatError(f"trailing data after {size} pixel bytes")
    return CoverImage(np.frombuffer(payload, dtype=np.uint8), width, height)


def render_pgm(image: CoverImage) -> bytes:
    return b"P5\n%d %d\n255\n" % (image.width, image.height) + image.pixels.tobytes()


def read_pgm(path) -> CoverImage:
    return parse_pgm(Path(path).read_bytes())


def write_pgm(path, image: CoverImage) -> None:
    atomic_write(path, render_pgm(image))


# -- cost map ----------------------------------------------------------------

def parse_costs(text: str, n: Optional[int] = None) -> DistortionMap:
    values = []
    for tok in text.split():
        try:
            c = float(tok)
        except ValueError:
            raise FormatError(f"not a number: {tok!r}") from None
        if not math.isfinite(c):
            raise FormatError(f"non-finite cost {tok!r}")
        if c < 0:
            raise FormatError(f"negative cost {tok!r}")
        values.append(c)
    if n is not None and len(values) != n:
        raise LengthMismatchError(f"cost map has {len(values)} values, expected {n}")
    return DistortionMap(values)


def render_costs(costs: DistortionMap) -> str:
    out = []
    for c in costs.costs.tolist():
        out.append(str(int(c)) if c.is_integer() else repr(c))
    return " ".join(out) + "\n"


def read_costs(path, n: Optional[int] = None) -> DistortionMap:
    return parse_costs(_read_text(path), n)


def write_costs(path, costs: DistortionMap) -> None:
    atomic_write(path, render_costs(costs).encode("ascii"))


# -- message -----------------------------------------------------------------

def parse_message(text: str) -> BitVector:
    body = text.strip()
    if not body:
        raise FormatError("empty message")
    bad = set(body) - {"0", "1"}
    if bad:
        raise FormatError(f"non-binary message characters: {''.join(sorted(bad))!r}")
    return np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0")


def render_message(bits: BitVector) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bits).tolist()) + "\n"


def read_message(path) -> BitVector:
    return parse_message(_read_text(path))


def write_message(path, bits: BitVector) -> None:
    atomic_write(path, render_message(bits).encode("ascii"))


# -- generator polynomial ----------------------------------------------------

def parse_gen(text: str) -> Gf2Poly:
    try:
        g = Gf2Poly.from_text(text)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if not g:
        raise FormatError("generator polynomial is empty")
    return g


def render_gen(g: Gf2Poly) -> str:
    return g.to_text() + "\n"


def read_gen(path) -> Gf2Poly:
    return parse_gen(_read_text(path))


def write_gen(path, g: Gf2Poly) -> None:
    atomic_write(path, render_gen(g).encode("ascii"))
