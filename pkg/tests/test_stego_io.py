import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polystego import demo
from polystego.codec import CoverImage
from polystego.errors import FormatError, LengthMismatchError, UnsupportedFormatError
from polystego.gf2poly import Gf2Poly
from polystego.lcdm import DistortionMap
from polystego.stego_io import (
    parse_costs,
    parse_gen,
    parse_message,
    parse_pgm,
    read_costs,
    read_gen,
    read_message,
    read_pgm,
    render_costs,
    render_gen,
    render_message,
    render_pgm,
    write_pgm,
)

DEMO_PGM = b"P5\n11 1\n255\n" + bytes(demo.PIXELS)


def test_read_demo_pgm(tmp_path):
    p = tmp_path / "cover.pgm"
    p.write_bytes(DEMO_PGM)
    img = read_pgm(p)
    assert img == CoverImage(demo.PIXELS)
    assert (img.width, img.height) == (11, 1)


def test_write_read_is_byte_identical(tmp_path):
    src, dst = tmp_path / "a.pgm", tmp_path / "b.pgm"
    src.write_bytes(DEMO_PGM)
    write_pgm(dst, read_pgm(src))
    assert dst.read_bytes() == DEMO_PGM


def test_pgm_row_major_and_comments():
    data = b"P5 # comment\n# another\n3 2\n255\n" + bytes([1, 2, 3, 4, 5, 6])
    img = parse_pgm(data)
    assert (img.width, img.height) == (3, 2)
    assert img.pixels.tolist() == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize(
    "data, exc, match",
    [
        (b"P2\n2 1\n255\n1 2\n", UnsupportedFormatError, "P2"),
        (b"P6\n1 1\n255\n123", UnsupportedFormatError, "P6"),
        (b"GIF89a", FormatError, "magic"),
        (b"P5\n2 1\n65535\n\x00\x00\x00\x00", FormatError, "maxval"),
        (b"P5\n4 1\n255\n\x01\x02", FormatError, "truncated PGM payload"),
        (b"P5\n4", FormatError, "truncated PGM header"),
        (b"P5\nx 1\n255\n\x00", FormatError, "header field"),
        (b"P5\n0 1\n255\n", FormatError, "dimensions"),
        (b"P5\n1 1\n255\n\x00\x00", FormatError, "trailing"),
    ],
)
def test_pgm_rejections(data, exc, match):
    with pytest.raises(exc, match=match):
        parse_pgm(data)


def test_costs(tmp_path):
    p = tmp_path / "costs.txt"
    p.write_text("223 3 12 4 163 43 2 12 1 23 2\n")
    assert read_costs(p, 11) == DistortionMap(demo.COSTS)
    with pytest.raises(LengthMismatchError):
        read_costs(p, 12)
    with pytest.raises(FormatError, match="negative"):
        parse_costs("1 -2 3")
    with pytest.raises(FormatError, match="not a number"):
        parse_costs("1 two 3")
    with pytest.raises(FormatError, match="non-finite"):
        parse_costs("1 inf")


def test_message(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("101\n")
    assert read_message(p).tolist() == [1, 0, 1]
    with pytest.raises(FormatError, match="non-binary"):
        parse_message("1021")
    with pytest.raises(FormatError, match="empty"):
        parse_message("\n")


def test_gen(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("0 3\n")
    assert read_gen(p) == Gf2Poly.from_exponents([0, 3])
    with pytest.raises(FormatError, match="duplicate"):
        parse_gen("0 3 3")
    with pytest.raises(FormatError, match="descending"):
        parse_gen("3 0")
    with pytest.raises(FormatError, match="empty"):
        parse_gen("  ")


@given(st.integers(1, 40), st.integers(1, 40), st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_pgm_round_trip(w, h, rnd):
    img = CoverImage([rnd.randrange(256) for _ in range(w * h)], w, h)
    assert parse_pgm(render_pgm(img)) == img


@given(st.lists(st.floats(0, 1e12, allow_nan=False) | st.integers(0, 10**6).map(float), min_size=1, max_size=60))
def test_costs_round_trip(values):
    costs = DistortionMap(values)
    assert parse_costs(render_costs(costs), len(values)) == costs


@given(st.lists(st.integers(0, 1), min_size=1, max_size=200))
def test_message_round_trip(bits):
    arr = np.array(bits, dtype=np.uint8)
    assert parse_message(render_message(arr)).tolist() == bits


@given(st.sets(st.integers(0, 500), min_size=1, max_size=40))
def test_gen_round_trip(exps):
    g = Gf2Poly.from_exponents(exps)
    assert parse_gen(render_gen(g)) == g
