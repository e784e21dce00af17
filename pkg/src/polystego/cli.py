"""Command-line interface: ``polystego {embed,extract,oracle,bench}``.

Exit codes: 0 success, 1 usage, 2 format, 3 capacity/consistency,
4 guard (size caps, failed oracle verification).
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import demo, stego_io
from .bench import mean_by_size, run_suite, to_csv_rows
from .codec import CoverImage, StegoCode, embed_with_report, extract, phi, sigma
from .errors import (
    CapacityError,
    FormatError,
    GuardError,
    LengthMismatchError,
    StrategyError,
)
from .lcdm import DistortionMap, is_lcdm, make_lcdm
from .oracle import run_trials, verify_dffa

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_CAPACITY, EXIT_GUARD = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polystego", description="Polynomial syndrome LSB steganography")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("embed", help="hide a message in a PGM cover")
    e.add_argument("--cover", required=True)
    e.add_argument("--message", required=True)
    e.add_argument("--costs", required=True)
    gen = e.add_mutually_exclusive_group(required=True)
    gen.add_argument("--gen", help="generator polynomial file (ascending exponents)")
    gen.add_argument("--lcdm", action="store_true", help="use g = 1 + x^(message length)")
    e.add_argument("--strategy", choices=("auto", "dffa", "exhaustive"), default="auto")
    e.add_argument("--budget", type=int, help="cap on modifiers scored by the exhaustive strategy")
    e.add_argument("--out", required=True)

    x = sub.add_parser("extract", help="recover a message from a stego PGM")
    x.add_argument("--stego", required=True)
    gen = x.add_mutually_exclusive_group(required=True)
    gen.add_argument("--gen")
    gen.add_argument("--lcdm", action="store_true")
    x.add_argument("--msg-len", type=int)
    x.add_argument("--out", required=True)

    o = sub.add_parser("oracle", help="check DFFA against exhaustive search")
    o.add_argument("--n", type=int)
    o.add_argument("--msg-len", type=int)
    o.add_argument("--trials", type=int, default=10)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--demo", action="store_true", help="check the built-in 11-pixel example")

    b = sub.add_parser("bench", help="CSV scaling measurements for LCDM embedding")
    b.add_argument("--sizes", required=True, help="comma separated cover lengths")
    b.add_argument("--msg-rate", type=float, default=0.1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--no-time", action="store_true", help="leave wall_time blank for reproducible output")
    return p


def _code_for(n: int, gen_path: Optional[str], msg_len: int) -> StegoCode:
    if gen_path is None:
        return make_lcdm(n, msg_len)
    g = stego_io.read_gen(gen_path)
    code = StegoCode(n, g)
    if code.msg_len != msg_len:
        raise CapacityError(
            f"generator degree {code.msg_len} does not match message length {msg_len}"
        )
    return code


def cmd_embed(args) -> int:
    cover = stego_io.read_pgm(args.cover)
    message = stego_io.read_message(args.message)
    costs = stego_io.read_costs(args.costs, len(cover))
    code = _code_for(len(cover), args.gen, message.size)
    strategy = args.strategy
    if strategy == "auto":
        strategy = "dffa" if is_lcdm(code) else "exhaustive"
    rep = embed_with_report(code, cover, message, strategy, costs, args.budget)
    stego_io.write_pgm(args.out, rep.stego)
    print(f"cost {rep.total_cost:.17g}")
    print(f"comparisons {rep.comparisons}")
    return EXIT_OK


def cmd_extract(args) -> int:
    if args.lcdm and args.msg_len is None:
        raise UsageError("extract: --lcdm requires --msg-len")
    stego = stego_io.read_pgm(args.stego)
    if args.lcdm:
        code = make_lcdm(len(stego), args.msg_len)
    else:
        code = StegoCode(len(stego), stego_io.read_gen(args.gen))
        if args.msg_len is not None and args.msg_len != code.msg_len:
            raise CapacityError(
                f"--msg-len {args.msg_len} disagrees with generator degree {code.msg_len}"
            )
    stego_io.write_message(args.out, extract(code, stego))
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.demo:
        code = make_lcdm(len(demo.PIXELS), demo.MSG_LEN)
        v = sigma(phi(CoverImage(demo.PIXELS)))
        reports = [verify_dffa(code, v, sigma(demo.MESSAGE), DistortionMap(demo.COSTS))]
    else:
        if args.n is None or args.msg_len is None:
            raise UsageError("oracle: --n and --msg-len are required without --demo")
        if args.trials < 1:
            raise UsageError("oracle: --trials must be positive")
        reports = run_trials(args.n, args.msg_len, args.trials, args.seed)
    bad = 0
    for r in reports:
        print(r.render())
        if r.gap != 0 or r.modifier_count != r.expected_count:
            bad += 1
    max_gap = max(abs(r.gap) for r in reports)
    print(f"trials={len(reports)} failures={bad} max_abs_gap={max_gap:g}")
    return EXIT_GUARD if bad else EXIT_OK


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bench: bad --sizes {args.sizes!r}") from None
    if not sizes:
        raise UsageError("bench: --sizes is empty")
    if any(n < 2 for n in sizes):
        raise UsageError("bench: every size must be at least 2")
    if not 0 < args.msg_rate < 1:
        raise UsageError("bench: --msg-rate must lie in (0, 1)")
    if args.repeats < 1:
        raise UsageError("bench: --repeats must be positive")
    records = run_suite(sizes, args.msg_rate, args.seed, args.repeats)
    for row in to_csv_rows(records, with_time=not args.no_time):
        print(row)
    for n, mean in mean_by_size(records).items():
        print(f"# n={n} mean_comparisons={mean:.1f} ratio_to_half_n={mean / (n / 2):.4f}", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {"embed": cmd_embed, "extract": cmd_extract, "oracle": cmd_oracle, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        code, msg = EXIT_USAGE, str(exc)
    except (FormatError, OSError) as exc:
        code, msg = EXIT_FORMAT, str(exc)
    except GuardError as exc:
        code, msg = EXIT_GUARD, str(exc)
    except (CapacityError, LengthMismatchError, StrategyError, ValueError) as exc:
        code, msg = EXIT_CAPACITY, str(exc)
    print(f"polystego: error: {msg}", file=sys.stderr)
    return code
