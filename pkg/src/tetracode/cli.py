"""Command line front end.

Exit status 0 on success, 1 for codec failures (the trajectory cannot be
built), 2 for usage and parse errors.  Failures print one line
``error: <kind> at tile <n>`` or ``error: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import codec, geometry
from .cone import parse_cone_file
from .errors import ParseError, TileCodeError, _IndexedError
from .lattice import FlatTile, Slot, gradient_name, parse_tile

MAX_STEPS = 10**6


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _code_text(code: str, plain: bool) -> str:
    return code + "\n" if plain else codec.format_code(code)


def _start(args, dim: int | None = None):
    if not args.start:
        raise UsageError("--start is required")
    return parse_tile(args.start, dim)


def cmd_encode(args) -> str:
    cf = parse_cone_file(_read(args.input))
    if not cf.drawings:
        raise UsageError("the cone file has no drawings")
    start = _start(args, cf.dim)
    code = codec.encode_with_drawings(cf.drawings, start.flat(), args.exit, args.init_letter)
    return _code_text(code, args.plain)


def _read_sequence(path: str, dim: int | None) -> list[FlatTile]:
    flats = []
    for line in _read(path).splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            s = parse_tile(line, dim)
            dim = s.dim
            flats.append(s.flat())
    if not flats:
        raise UsageError("empty tile sequence")
    return flats


def cmd_encode_seq(args) -> str:
    flats = _read_sequence(args.input, args.dim)
    code = codec.encode_sequence(flats, args.init_letter, args.exit, args.final_policy)
    return _code_text(code, args.plain)


def _decoded(args) -> codec.Trajectory:
    code = codec.parse_code(_read(args.input))
    return codec.decode(code, _start(args, args.dim), args.exit)


def cmd_decode(args) -> str:
    return "".join(f"{t}\n" for t in _decoded(args).flats)


def cmd_trace(args) -> str:
    cf = parse_cone_file(_read(args.input))
    if not cf.drawings:
        raise UsageError("the cone file has no drawings")
    if not 1 <= args.drawing <= len(cf.drawings):
        raise UsageError(f"--drawing must be in 1..{len(cf.drawings)}")
    d = cf.drawings[args.drawing - 1]
    steps = args.steps if args.steps is not None else len(d)
    if not 1 <= steps <= MAX_STEPS:
        raise UsageError(f"--steps must be in 1..{MAX_STEPS}")
    tr = codec.trace(d.cone, _start(args, cf.dim).flat(), args.exit, steps)
    letters = tr.letters(args.init_letter)
    rows = [
        f"{i}\t{st.flat}\t{st.lift}\t{gradient_name(st.lift.gradient, cf.dim)}\t{ch}"
        for i, (st, ch) in enumerate(zip(tr.states, letters), 1)
    ]
    return "\n".join(rows) + "\n"


def cmd_tables(args) -> str:
    return codec.format_tables(codec.make_tables(args.dim or 4))


def cmd_mesh(args) -> str:
    return geometry.to_mesh(geometry.embed(_decoded(args).lifts))


def cmd_svg(args) -> str:
    return geometry.to_svg(geometry.embed(_decoded(args).lifts))


def cmd_digits(args) -> str:
    return " ".join(map(str, codec.digits(_read(args.input)))) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tetracode", description="U/D shape codes over lattice tile sequences")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, start=False, cone=False, policy=False, inp=True):
        if inp:
            sp.add_argument("input", help="input file, '-' for stdin")
        sp.add_argument("-o", "--output", help="output file (default stdout)")
        sp.add_argument("--dim", type=int, help="ambient dimension N (inferred from tiles when omitted)")
        sp.add_argument("--exit", type=Slot, choices=list(Slot), default=Slot.U,
                        help="initial exit slot (default U)")
        sp.add_argument("--init-letter", type=Slot, choices=list(Slot), default=Slot.U,
                        help="first code letter (default U)")
        sp.add_argument("--plain", action="store_true", help="print codes without separators")
        if start:
            sp.add_argument("--start", required=True, help="initial tile literal, e.g. 'zw[xyz]'")
        if policy:
            sp.add_argument("--final-policy", choices=[r.value for r in codec.Relation], default="same",
                            help="relation of the last letter (default same)")
        return sp

    common(sub.add_parser("encode", help="encode with a cone file of drawings"), start=True).set_defaults(func=cmd_encode)
    common(sub.add_parser("encode-seq", help="encode a flat-tile sequence file"), policy=True).set_defaults(func=cmd_encode_seq)
    common(sub.add_parser("decode", help="decode a code file into flat tiles"), start=True).set_defaults(func=cmd_decode)
    tr = common(sub.add_parser("trace", help="trace one drawing of a cone file"), start=True)
    tr.add_argument("--drawing", type=int, default=1, help="1-based drawing number (default 1)")
    tr.add_argument("--steps", type=int, help=f"number of tiles (default: the drawing's range length, max {MAX_STEPS})")
    tr.set_defaults(func=cmd_trace)
    common(sub.add_parser("tables", help="print encoding/decoding tables"), inp=False).set_defaults(func=cmd_tables)
    common(sub.add_parser("mesh", help="decode and write an OBJ mesh (N = 4)"), start=True).set_defaults(func=cmd_mesh)
    common(sub.add_parser("svg", help="decode and write an SVG drawing (N = 3)"), start=True).set_defaults(func=cmd_svg)
    common(sub.add_parser("digits", help="octal digits of a code")).set_defaults(func=cmd_digits)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.dim is not None and args.dim < 3 and args.command == "tables":
        print("error: tables need dimension >= 3", file=sys.stderr)
        return 2
    try:
        text = args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _IndexedError as exc:
        print(f"error: {exc.kind} at tile {exc.index}", file=sys.stderr)
        return 1
    except (TileCodeError, ValueError) as exc:
        kind = type(exc).__name__
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ValueError) else 1
    _write(args.output, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
