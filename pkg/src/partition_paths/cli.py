"""Command-line front end: list / count / map / check / render / series / verify.

Output is line-oriented and byte-deterministic for a fixed invocation, so
commands compose in shell pipelines.  Exit codes: 0 success, 1 invalid input
object, 2 precondition violation, 3 verification failure, 64 usage error.
"""

import argparse
import json
import os
import sys

from . import bijections, enumeration, partitions, paths, rendering, verify
from .errors import (
    DEFAULT_LIMIT,
    InvalidObjectError,
    LimitExceededError,
    PreconditionError,
)

USAGE_ERROR = 64
LIMIT_ENV_VAR = "PARTITION_PATHS_MAX_N"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="partition-paths",
        description="Pattern-avoiding set partitions, restricted Schroder "
        "paths, the bijections between them, and exact counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", metavar="PATH", help="write output to a file")

    for cmd in ("list", "count"):
        sp = sub.add_parser(cmd, help=f"{cmd} partitions or paths of a given size")
        sp.add_argument("kind", choices=("partitions", "paths"))
        sp.add_argument("n", type=int)
        sp.add_argument("--pattern", help="keep only partitions avoiding this word")
        sp.add_argument(
            "--class",
            dest="path_class",
            choices=paths.PATH_CLASSES,
            default=None,
            help="path class (default: schroder)",
        )
        sp.add_argument("--max-n", type=int, default=None, help="exhaustive limit")
        common(sp)

    sp = sub.add_parser("map", help="apply a bijection to each input object")
    sp.add_argument("name", choices=("sigma", "phi", "psi", "full12312", "full12321"))
    sp.add_argument(
        "objects",
        nargs="*",
        help="optional leading 'forward' or 'inverse', then objects; "
        "objects are read from stdin when none are given",
    )
    sp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    common(sp)

    sp = sub.add_parser("check", help="report the predicate record of each object")
    sp.add_argument("kind", choices=("partition", "path"))
    sp.add_argument("objects", nargs="*")
    common(sp)

    sp = sub.add_parser("render", help="draw each input path")
    sp.add_argument("objects", nargs="*")
    sp.add_argument(
        "--class", dest="path_class", choices=paths.PATH_CLASSES, default=None
    )
    common(sp, formats=("ascii", "svg"))

    sp = sub.add_parser("series", help="print counting-series coefficients")
    sp.add_argument("identifier", choices=("f", "f_prime", "schroder", "bell"))
    sp.add_argument("--order", type=int, default=32)
    common(sp)

    sp = sub.add_parser("verify", help="run the cross-module identity suite")
    sp.add_argument("--max-n", type=int, default=6)
    common(sp)

    return parser


def _limit(args) -> int:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    env = os.environ.get(LIMIT_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise LimitExceededError(
                f"{LIMIT_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_LIMIT


def _input_objects(args) -> list:
    if args.objects:
        return list(args.objects)
    return sys.stdin.read().splitlines()


def _infer_path_class(text: str) -> str:
    if "L" in text:
        if "H" in text:
            raise InvalidObjectError(
                "path mixes horizontal and left steps; no class allows both"
            )
        return "skew_dyck"
    return "schroder"


_MAP_INPUT = {
    ("sigma", "forward"): "partition",
    ("phi", "forward"): "partition",
    ("full12312", "forward"): "partition",
    ("full12321", "forward"): "partition",
    ("sigma", "inverse"): "schroder",
    ("phi", "inverse"): "schroder",
    ("psi", "forward"): "schroder",
    ("psi", "inverse"): "schroder",
    ("full12312", "inverse"): "schroder",
    ("full12321", "inverse"): "schroder",
}

_MAP_FN = {
    ("sigma", "forward"): lambda o: bijections.encode(o, "12312"),
    ("sigma", "inverse"): lambda o: bijections.decode(o, "12312"),
    ("phi", "forward"): lambda o: bijections.encode(o, "12321"),
    ("phi", "inverse"): lambda o: bijections.decode(o, "12321"),
    ("psi", "forward"): bijections.to_odd_peaks,
    ("psi", "inverse"): bijections.to_uh_free,
    ("full12312", "forward"): lambda o: bijections.encode_to_odd_peaks(o, "12312"),
    ("full12312", "inverse"): lambda o: bijections.decode_from_odd_peaks(o, "12312"),
    ("full12321", "forward"): lambda o: bijections.encode_to_odd_peaks(o, "12321"),
    ("full12321", "inverse"): lambda o: bijections.decode_from_odd_peaks(o, "12321"),
}


def _iter_partitions(args):
    gen = partitions.generate_partitions(args.n, limit=_limit(args))
    if args.pattern is None:
        yield from gen
        return
    if args.pattern == "12312":
        keep = partitions.avoids_12312_fast
    elif args.pattern == "12321":
        keep = partitions.avoids_12321_fast
    else:
        pattern = partitions.parse_partition(args.pattern)
        def keep(p):
            return partitions.avoids(p, pattern)
    yield from (p for p in gen if keep(p))


def _run_list(args, out) -> int:
    if args.kind == "partitions":
        objects = _iter_partitions(args)
    else:
        objects = paths.generate_paths(
            args.n, args.path_class or "schroder", limit=_limit(args)
        )
    for obj in objects:
        text = str(obj)
        out.write(json.dumps(text) if args.format == "json" else text)
        out.write("\n")
    return 0


def _run_count(args, out) -> int:
    if args.kind == "partitions":
        total = sum(1 for _ in _iter_partitions(args))
    else:
        total = sum(
            1
            for _ in paths.generate_paths(
                args.n, args.path_class or "schroder", limit=_limit(args)
            )
        )
    out.write(f"{total}\n")
    return 0


def _run_map(args, out) -> int:
    objects = list(args.objects)
    direction = args.direction
    if objects and objects[0] in ("forward", "inverse"):
        direction = objects.pop(0)
    if not objects:
        objects = sys.stdin.read().splitlines()
    key = (args.name, direction)
    fn = _MAP_FN[key]
    for text in objects:
        if _MAP_INPUT[key] == "partition":
            obj = partitions.parse_partition(text)
        else:
            obj = paths.parse_path(text, "schroder")
        result = str(fn(obj))
        out.write(json.dumps(result) if args.format == "json" else result)
        out.write("\n")
    return 0


def _run_check(args, out) -> int:
    for text in _input_objects(args):
        if args.kind == "partition":
            p = partitions.parse_partition(text)
            record = {
                "object": str(p),
                "n": p.n,
                "blocks": p.block_count,
                "avoids_12312": partitions.avoids_12312_fast(p),
                "avoids_12321": partitions.avoids_12321_fast(p),
                "irreducible": bool(p.word) and partitions.is_irreducible(p),
            }
        else:
            cls = _infer_path_class(text)
            p = paths.parse_path(text, cls)
            flags = paths.classify(p)
            record = {
                "object": str(p),
                "family": "dyck" if set(p.steps) <= set("UD") else cls,
                "semilength": p.semilength,
                "peaks": len(paths.peaks(p)),
                "uh_free": flags.uh_free,
                "no_even_peak": flags.no_even_peak,
                "no_level_one_peak": flags.no_level_one_peak,
                "ends_with_down": flags.ends_with_down,
            }
        if args.format == "json":
            out.write(json.dumps(record))
        else:
            out.write(
                " ".join(
                    f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                    for k, v in record.items()
                )
            )
        out.write("\n")
    return 0


def _run_render(args, out) -> int:
    first = True
    for text in _input_objects(args):
        cls = args.path_class or _infer_path_class(text)
        p = paths.parse_path(text, cls)
        if not first:
            out.write("\n")
        out.write(rendering.render(p, args.format))
        out.write("\n")
        first = False
    return 0


def _run_series(args, out) -> int:
    table = enumeration.series(args.identifier, args.order)
    if args.format == "json":
        out.write(json.dumps(list(table.coefficients)))
        out.write("\n")
    else:
        for i, value in enumerate(table.coefficients):
            out.write(f"{i} {value}\n")
    return 0


def _run_verify(args, out) -> int:
    results = verify.run_checks(args.max_n)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        out.write(
            json.dumps(
                [
                    {"name": r.name, "max_n": r.max_n, "ok": r.ok, "failure": r.failure}
                    for r in results
                ]
            )
        )
        out.write("\n")
    else:
        for r in results:
            if r.ok:
                out.write(f"PASS {r.name} (n <= {r.max_n})\n")
            else:
                out.write(f"FAIL {r.name}: {r.failure}\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return 3 if failed else 0


_RUNNERS = {
    "list": _run_list,
    "count": _run_count,
    "map": _run_map,
    "check": _run_check,
    "render": _run_render,
    "series": _run_series,
    "verify": _run_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # argparse will not resume a positional list after an interleaved
        # option ("map psi --direction inverse UHD"); fold the stragglers in
        if hasattr(args, "objects") and all(not t.startswith("-") for t in extra):
            args.objects = list(args.objects) + extra
        else:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.command in ("list", "count"):
        if args.n < 0:
            parser.error("n must be non-negative")
        if args.kind == "paths" and args.pattern is not None:
            parser.error("--pattern applies only to partitions")
        if args.kind == "partitions" and args.path_class is not None:
            parser.error("--class applies only to paths")
    if args.command == "series" and args.order < 0:
        parser.error("--order must be non-negative")
    runner = _RUNNERS[args.command]
    try:
        if args.out:
            with open(args.out, "w") as out:
                return runner(args, out)
        return runner(args, sys.stdout)
    except LimitExceededError as exc:
        print(f"partition-paths: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PreconditionError as exc:
        print(f"partition-paths: {exc}", file=sys.stderr)
        return 2
    except InvalidObjectError as exc:
        print(f"partition-paths: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
