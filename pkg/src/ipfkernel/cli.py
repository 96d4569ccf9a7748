"""Command-line entry point: ``ipfkernel check|normalize|translate|stats FILE``.

Exit status is 0 on success, 1 when the proof is invalid or cannot be
processed, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bridge import TO_I, TO_IOTA, translate
from .checker import check, elaborate_macros
from .deduction import map_formulas, open_assumptions, size
from .errors import KernelError, ParseError
from .normalizer import maximal_formulas, maximal_segments, normalize, rank, trace_lines
from .script import parse_script, print_script
from .syntax import print_formula
from .systems import System

OK, INVALID, USAGE = 0, 1, 2

_TARGET = {
    (TO_IOTA, True): System.IPF_iotaR, (TO_IOTA, False): System.IPF_iota,
    (TO_I, True): System.IPF_IR, (TO_I, False): System.IPF_I,
}


class _Usage(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise _Usage(f"cannot read {path}: {e}") from None
    return parse_script(text)


def _system(arg: str | None, default: System) -> System:
    if arg is None:
        return default
    try:
        return System.parse(arg)
    except ValueError as e:
        raise _Usage(str(e)) from None


def cmd_check(args) -> int:
    script = _load(args.file)
    rep = check(script.body, _system(args.system, script.system))
    print(rep)
    return OK if rep.valid else INVALID


def cmd_normalize(args) -> int:
    script = _load(args.file)
    rep = check(script.body, script.system)
    if not rep.valid:
        print(rep)
        return INVALID
    if args.elaborate:
        print(print_script(script.name, script.system, elaborate_macros(script.body)), end="")
        return OK
    out, steps = normalize(script.body, script.system)
    if args.trace:
        lines = trace_lines(steps)
        Path(args.trace).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    print(print_script(script.name, script.system, out), end="")
    return OK


def cmd_translate(args) -> int:
    script = _load(args.file)
    target = _TARGET[args.to, script.system.restricted]
    out = map_formulas(script.body, lambda f: translate(f, args.to), lambda t: t)
    print(print_script(script.name, target, out), end="")
    rep = check(out, target)
    if not rep.valid:
        # rules for I and for iota have no one-to-one counterpart
        print(f"note: translated deduction is not valid in {target}: "
              + ", ".join(sorted(set(rep.codes))), file=sys.stderr)
    return OK


def cmd_stats(args) -> int:
    script = _load(args.file)
    d = elaborate_macros(script.body)
    deg, length = rank(d)
    print(f"rank {deg},{length}")
    print(f"nodes {size(d)}")
    opened = sorted(open_assumptions(d), key=lambda lf: lf[0])
    print(f"open assumptions {len(opened)}")
    for label, f in opened:
        print(f"  {label}: {print_formula(f)}")
    print(f"maximal formulas {len(maximal_formulas(d))}")
    print(f"maximal segments {len(maximal_segments(d))}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ipfkernel", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check a proof script")
    c.add_argument("file")
    c.add_argument("--system", help="override the system named in the script header")
    c.set_defaults(fn=cmd_check)

    n = sub.add_parser("normalize", help="print the normal form of a proof script")
    n.add_argument("file")
    n.add_argument("--trace", metavar="PATH", help="write one line per reduction step")
    n.add_argument("--elaborate", action="store_true",
                   help="only expand primed rules into primitive ones")
    n.set_defaults(fn=cmd_normalize)

    t = sub.add_parser("translate", help="rewrite a restricted script into the other notation")
    t.add_argument("file")
    t.add_argument("--to", required=True, choices=(TO_IOTA, TO_I))
    t.set_defaults(fn=cmd_translate)

    s = sub.add_parser("stats", help="rank, size and detours of a proof script")
    s.add_argument("file")
    s.set_defaults(fn=cmd_stats)
    return p


def run(argv: list) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.fn(args)
    except (_Usage, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except KernelError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return INVALID


def main(argv: list | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
