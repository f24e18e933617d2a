"""Command-line front end.

Exit codes: 0 success, 1 usage or validation error, 2 internal-consistency
failure (oracle mismatch, non-rational Galois sum, non-integer count).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .corpus import default_corpus
from .errors import ConsistencyError, SylvesterError
from .molien import invariant_count, load_spec, parse_group, spec_to_dict
from .oracle import count_partitions
from .waves import (
    PartSet,
    eval_exact,
    eval_polynomial_part_real,
    eval_real,
    make_partset,
    natural_set,
    quasipoly_to_json,
    wave,
)

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2


class UsageError(SylvesterError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_parts(text: str) -> PartSet:
    """``"2,3,5"`` or ``"natural:m"``."""
    text = text.strip()
    if text.startswith("natural:"):
        try:
            return natural_set(int(text.split(":", 1)[1]))
        except ValueError:
            raise UsageError(f"bad natural set {text!r}") from None
    try:
        items = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"parts must be comma-separated integers, got {text!r}") from None
    return make_partset(items)


def _fmt_real(v: float) -> str:
    return f"{v:.12g}"


def _frange(start: float, stop: float, step: float):
    n = int((stop - start) / step + 1e-9)
    for i in range(n + 1):
        yield start + i * step


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cmd_eval(args) -> str:
    ps = parse_parts(args.parts)
    _require(args.s, "--s")
    value = eval_exact(ps, args.s)
    if args.format == "json":
        return json.dumps({"parts": list(ps.parts), "s": args.s, "W": value}) + "\n"
    if args.format == "csv":
        return _csv([(args.s, value)], ("s", "W"))
    return f"{value}\n"


def _cmd_waves(args) -> str:
    ps = parse_parts(args.parts)
    if args.format == "text":
        lines = [f"parts {list(ps.parts)}  period {ps.period}"]
        for j in ps.divisor_set:
            w = wave(ps, j)
            lines.append(f"W_{j} (omega={w.omega})")
            for r, p in enumerate(w.residue_polys):
                lines.append(f"  s = {r} mod {j}: {str(p).replace('x', 's')}")
        return "\n".join(lines) + "\n"
    if args.format == "csv":
        rows = []
        for j in ps.divisor_set:
            w = wave(ps, j)
            for r, p in enumerate(w.residue_polys):
                rows.append((j, w.omega, r, " ".join(p.to_strings()) or "0"))
        return _csv(rows, ("j", "omega", "r", "coeffs"))
    return json.dumps(quasipoly_to_json(ps), indent=2) + "\n"


def _cmd_table(args) -> str:
    ps = parse_parts(args.parts)
    start = 0 if args.start is None else int(args.start)
    stop = args.stop if args.stop is not None else (args.smax if args.smax is not None else 3 * ps.period)
    rows = [(s, eval_exact(ps, s)) for s in range(start, int(stop) + 1)]
    if args.format == "json":
        return json.dumps({"parts": list(ps.parts), "rows": [{"s": s, "W": v} for s, v in rows]}) + "\n"
    return _csv(rows, ("s", "W"))


def _cmd_plotdata(args) -> str:
    ps = parse_parts(args.parts)
    step = 0.25 if args.step is None else args.step
    if step <= 0:
        raise UsageError("--step must be positive")
    start = -ps.s_m - 10 if args.start is None else args.start
    stop = 3 * ps.period if args.stop is None else args.stop
    rows = [
        (_fmt_real(x), _fmt_real(eval_real(ps, x)), _fmt_real(eval_polynomial_part_real(ps, x)))
        for x in _frange(start, stop, step)
    ]
    if args.format == "json":
        return json.dumps({"parts": list(ps.parts), "rows": [list(map(float, r)) for r in rows]}) + "\n"
    return _csv(rows, ("x", "W", "W1"))


def _check_one(ps: PartSet, s_max: int) -> list[int]:
    counts = count_partitions(ps, s_max).counts
    return [s for s in range(s_max + 1) if eval_exact(ps, s) != counts[s]]


def _cmd_check(args) -> str:
    sets = [parse_parts(args.parts)] if args.parts else list(default_corpus())
    lines, failed = [], 0
    for ps in sets:
        s_max = args.smax if args.smax is not None else 3 * ps.period + 50
        try:
            bad = _check_one(ps, s_max)
        except ConsistencyError as exc:
            bad, note = [-1], str(exc)
        else:
            note = ""
        status = "ok" if not bad else "MISMATCH"
        failed += bool(bad)
        lines.append(f"{status} {list(ps.parts)} s<={s_max}" + (f" first bad s={bad[0]} {note}" if bad else ""))
    lines.append(f"{len(sets) - failed}/{len(sets)} part sets agree with the oracle")
    out = "\n".join(lines) + "\n"
    if failed:
        raise _CheckFailed(out)
    return out


class _CheckFailed(Exception):
    pass


def _cmd_molien(args) -> str:
    if bool(args.group) == bool(args.spec):
        raise UsageError("molien needs exactly one of --group or --spec")
    spec = parse_group(args.group) if args.group else load_spec(args.spec)
    if args.s is not None:
        degrees = [args.s]
    elif args.smax is not None:
        degrees = list(range(args.smax + 1))
    else:
        raise UsageError("molien needs --s or --smax")
    values = [(s, invariant_count(spec, s)) for s in degrees]
    if args.format == "json":
        return json.dumps({"spec": spec_to_dict(spec), "P": [{"s": s, "P": v} for s, v in values]}) + "\n"
    if args.format == "csv":
        return _csv(values, ("s", "P"))
    if args.s is not None:
        return f"{values[0][1]}\n"
    return "".join(f"{s} {v}\n" for s, v in values)


def _require(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sylvester", description="Restricted partition functions via Sylvester waves.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, fmt_default="text"):
        sp.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("eval", help="exact W(s, parts)")
    sp.add_argument("--parts", required=True)
    sp.add_argument("--s", type=int)
    common(sp)

    sp = sub.add_parser("waves", help="wave decomposition")
    sp.add_argument("--parts", required=True)
    common(sp, "json")

    sp = sub.add_parser("table", help="CSV of s, W(s)")
    sp.add_argument("--parts", required=True)
    sp.add_argument("--from", dest="start", type=int)
    sp.add_argument("--to", dest="stop", type=int)
    sp.add_argument("--smax", type=int)
    common(sp, "csv")

    sp = sub.add_parser("plotdata", help="real-argument curve of W and W_1")
    sp.add_argument("--parts", required=True)
    sp.add_argument("--from", dest="start", type=float)
    sp.add_argument("--to", dest="stop", type=float)
    sp.add_argument("--step", type=float)
    common(sp, "csv")

    sp = sub.add_parser("check", help="closed form vs dynamic-programming oracle")
    sp.add_argument("--parts")
    sp.add_argument("--smax", type=int)
    common(sp)

    sp = sub.add_parser("molien", help="invariant counts P(s, G)")
    sp.add_argument("--group", help="family:n, e.g. dihedral:4")
    sp.add_argument("--spec", help="JSON Molien spec file")
    sp.add_argument("--s", type=int)
    sp.add_argument("--smax", type=int)
    common(sp)
    return p


_COMMANDS = {
    "eval": _cmd_eval,
    "waves": _cmd_waves,
    "table": _cmd_table,
    "plotdata": _cmd_plotdata,
    "check": _cmd_check,
    "molien": _cmd_molien,
}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: " + ", ".join(_COMMANDS))
        text = _COMMANDS[args.command](args)
    except _CheckFailed as exc:
        _emit(str(exc), getattr(args, "out", None))
        return EXIT_INTERNAL
    except ConsistencyError as exc:
        print(f"sylvester: internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (SylvesterError, OSError) as exc:
        print(f"sylvester: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
