"""Command-line front-end.

Every subcommand reads and writes the JSON formats from :mod:`cellmatch.io`
and reports through stable exit codes for scripting:

* 0 - success
* 1 - usage or file-format error
* 2 - negative verdict with an artifact (deficiency certificate written,
      or a bounded search found nothing)
* 3 - precondition violation (nonzero homology, degenerate field, wrong
      dimension, invalid matching, size bound exceeded)
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, io
from .complexes import SubcomplexPair, euler_characteristic
from .errors import (
    BruteForceBoundError,
    CellmatchError,
    FileFormatError,
    InvalidComplexError,
    InvalidLoopError,
    InvalidMatchingError,
    InvalidSubcomplexError,
    InvalidSubdivisionError,
    PreconditionError,
    SearchBudgetExceededError,
)
from .flow import GeometricComplex, direction, flow_matching, flow_structure
from .generators import FamilySpec, family_names, generate
from .homology import betti_numbers, match_acyclic_pair
from .matching import (
    HallCertificate,
    complete_matching,
    enumerate_matchings,
    orbit_analysis,
    validate_matching,
)
from .pipelines import find_dual_loop, match_loop_pipeline, match_sphere_pipeline
from .subdivision import barycentric, propagate_matching

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_PRECONDITION = 3

_USAGE_ERRORS = (
    FileFormatError,
    InvalidComplexError,
    InvalidSubcomplexError,
    InvalidLoopError,
    InvalidSubdivisionError,
    ValueError,
    OSError,
)
_PRECONDITION_ERRORS = (
    PreconditionError,
    InvalidMatchingError,
    BruteForceBoundError,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(obj, path: str | None) -> None:
    if path is None:
        json.dump(obj, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        io.write_json(path, obj)


def _load_pair(args) -> SubcomplexPair:
    complex = io.load_complex(args.complex)
    if getattr(args, "rel", None):
        cells, closure = io.load_subcomplex(args.rel)
        return SubcomplexPair(complex, cells, close=closure)
    return SubcomplexPair(complex)


def _parse_params(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"bad --params value {text!r}; expected integers") from None


def _parse_base_rule(text: str) -> tuple[str, int | None]:
    if text == "lowest":
        return "lowest", None
    if text.startswith("random:"):
        try:
            return "random", int(text.split(":", 1)[1])
        except ValueError:
            raise _UsageError(f"bad --base value {text!r}") from None
    raise _UsageError(f"bad --base value {text!r}; expected lowest or random:SEED")


def _cmd_generate(args) -> int:
    spec = FamilySpec(args.family, _parse_params(args.params), seed=args.seed)
    complex = generate(spec)
    _emit(io.encode_complex(complex), args.output)
    return EXIT_OK


def _cmd_chi(args) -> int:
    pair = _load_pair(args)
    print(euler_characteristic(pair))
    return EXIT_OK


def _cmd_match(args) -> int:
    pair = _load_pair(args)
    if args.method == "acyclic":
        matching = match_acyclic_pair(pair)
        _emit(io.encode_matching(matching), args.output)
        return EXIT_OK
    outcome = complete_matching(pair, use_parity_shortcut=args.method == "auto")
    if isinstance(outcome, HallCertificate):
        _emit(io.encode_certificate(outcome), args.output)
        print(
            f"unmatchable: side={outcome.side} |A|={len(outcome.cells)} "
            f"|I(A)|={len(outcome.neighborhood)} deficiency={outcome.deficiency}",
            file=sys.stderr,
        )
        return EXIT_NEGATIVE
    _emit(io.encode_matching(outcome), args.output)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    pair = _load_pair(args)
    count, matchings = enumerate_matchings(pair, limit=args.limit, bound=args.bound)
    print(count)
    if args.output:
        io.write_json(
            args.output,
            {
                "format": "cellmatch-enumeration-v1",
                "count": count,
                "matchings": [io.encode_matching(m) for m in matchings],
            },
        )
    return EXIT_OK


def _cmd_homology(args) -> int:
    pair = _load_pair(args)
    bv = betti_numbers(pair, field=args.field)
    _emit(io.encode_betti(bv), args.output)
    return EXIT_OK


def _cmd_subdivide(args) -> int:
    complex = io.load_complex(args.complex)
    smap = barycentric(complex)
    _emit(io.encode_complex(smap.subdivided), args.output)
    if args.map_out:
        io.write_json(args.map_out, io.encode_subdivision(smap))
    if args.propagate:
        matching = io.load_matching(args.propagate)
        if args.rel:
            cells, closure = io.load_subcomplex(args.rel)
            pair = SubcomplexPair(complex, cells, close=closure)
        else:
            pair = SubcomplexPair(complex)
        propagated = propagate_matching(smap, pair, matching)
        if not args.matching_out:
            raise _UsageError("--propagate requires --matching-out")
        io.write_json(args.matching_out, io.encode_matching(propagated))
    return EXIT_OK


def _cmd_flow(args) -> int:
    complex = io.load_complex(args.complex)
    geom = GeometricComplex(complex)
    field_vec = direction(*args.field.split(","))
    rule, seed = _parse_base_rule(args.base)
    structure = flow_structure(geom, field_vec, base_rule=rule, seed=seed)
    matching = flow_matching(structure)
    _emit(io.encode_matching(matching), args.output)
    return EXIT_OK


def _cmd_orbits(args) -> int:
    pair = _load_pair(args)
    matching = io.load_matching(args.matching)
    report = orbit_analysis(pair, matching)
    obj = {"format": "cellmatch-orbit-v1", "classification": report.classification}
    if report.orbit is not None:
        obj["orbit"] = list(report.orbit)
    if report.collapse_order is not None:
        obj["collapse_order"] = [list(p) for p in report.collapse_order]
    _emit(obj, args.output)
    return EXIT_OK


def _cmd_validate(args) -> int:
    pair = _load_pair(args)
    matching = io.load_matching(args.matching)
    report = validate_matching(pair, matching)
    if report.ok:
        print("ok")
        return EXIT_OK
    for violation in report.violations:
        print(violation, file=sys.stderr)
    return EXIT_PRECONDITION


def _cmd_pipeline(args) -> int:
    complex = io.load_complex(args.complex)
    if args.kind == "sphere":
        matching = match_sphere_pipeline(complex)
    else:
        if not args.loop:
            raise _UsageError("pipeline loop requires --loop")
        loop = io.load_loop(args.loop)
        base: tuple = ()
        if args.base:
            cells, closure = io.load_subcomplex(args.base)
            base = tuple(complex.closure(cells)) if closure else tuple(cells)
        circle_cells = None
        if args.circle:
            cells, closure = io.load_subcomplex(args.circle)
            circle_cells = complex.closure(cells) if closure else frozenset(cells)
        matching = match_loop_pipeline(complex, loop, base=base, circle_cells=circle_cells)
    _emit(io.encode_matching(matching), args.output)
    return EXIT_OK


def _cmd_dualloop(args) -> int:
    complex = io.load_complex(args.complex)
    if args.complement_empty:
        def predicate(pair):
            return not pair.sub
    elif args.complement_betti:
        wanted = tuple(int(b) for b in args.complement_betti.split(","))

        def predicate(pair):
            if not pair.sub:
                return False
            sub_complex = pair.complex.restrict(pair.sub)
            return betti_numbers(SubcomplexPair(sub_complex)).betti == wanted
    else:
        raise _UsageError("dualloop find needs --complement-betti or --complement-empty")
    loop = find_dual_loop(complex, predicate, budget=args.budget)
    if loop is None:
        print("not found: no simple dual cycle satisfies the predicate", file=sys.stderr)
        return EXIT_NEGATIVE
    _emit(io.encode_loop(loop), args.output)
    return EXIT_OK


_FORMAT_NAMES = [
    io.COMPLEX_FORMAT,
    io.SUB_FORMAT,
    io.LOOP_FORMAT,
    io.MATCHING_FORMAT,
    io.CERTIFICATE_FORMAT,
    io.BETTI_FORMAT,
    io.FILTRATION_FORMAT,
    io.SUBDIV_FORMAT,
]


def _print_formats() -> int:
    obj = {
        "version": __version__,
        "formats": _FORMAT_NAMES,
        "subcommands": [
            "generate", "chi", "match", "enumerate", "homology", "subdivide",
            "flow", "orbits", "validate", "pipeline", "dualloop",
        ],
        "families": list(family_names()),
        "exit_codes": {"0": "success", "1": "usage/format", "2": "negative verdict",
                       "3": "precondition violation"},
    }
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="cellmatch", description=__doc__)
    parser.add_argument("--version", action="version", version=f"cellmatch {__version__}")
    parser.add_argument(
        "--formats", action="store_true", help="print machine-readable capabilities"
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("generate", help="emit a bundled example complex")
    p.add_argument("family", choices=family_names())
    p.add_argument("--params", help="comma-separated integer parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("chi", help="relative Euler characteristic")
    p.add_argument("complex")
    p.add_argument("--rel", help="subcomplex file")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("match", help="complete matching or deficiency certificate")
    p.add_argument("complex")
    p.add_argument("--rel")
    p.add_argument("--method", choices=("auto", "hall", "acyclic"), default="auto")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("enumerate", help="count complete matchings by brute force")
    p.add_argument("complex")
    p.add_argument("--rel")
    p.add_argument("--limit", type=int, default=0, help="matchings to include in -o")
    p.add_argument("--bound", type=int, default=40, help="cell-count safety bound")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("homology", help="Betti numbers over q or f2")
    p.add_argument("complex")
    p.add_argument("--rel")
    p.add_argument("--field", choices=("q", "f2"), default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("subdivide", help="barycentric subdivision, optional propagation")
    p.add_argument("complex")
    p.add_argument("-o", "--output")
    p.add_argument("--map-out", help="write the carrier map here")
    p.add_argument("--propagate", help="matching file to carry to the subdivision")
    p.add_argument("--rel", help="subcomplex file for the propagated pair")
    p.add_argument("--matching-out", help="write the propagated matching here")
    p.set_defaults(func=_cmd_subdivide)

    p = sub.add_parser("flow", help="matching from a transverse constant field")
    p.add_argument("complex")
    p.add_argument("--field", required=True, help="components p/q,p/q,...")
    p.add_argument("--base", default="lowest", help="lowest | random:SEED")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_flow)

    p = sub.add_parser("orbits", help="classify a matching: collapse order or orbit")
    p.add_argument("complex")
    p.add_argument("--matching", required=True)
    p.add_argument("--rel")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("validate", help="check a matching against its pair")
    p.add_argument("complex")
    p.add_argument("--matching", required=True)
    p.add_argument("--rel")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("pipeline", help="composite constructions")
    p.add_argument("kind", choices=("sphere", "loop"))
    p.add_argument("complex")
    p.add_argument("--loop", help="dual loop file (pipeline loop)")
    p.add_argument("--circle", help="circle subcomplex file (pipeline loop)")
    p.add_argument("--base", help="relative base subcomplex file (pipeline loop)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("dualloop", help="search the dual graph for a loop")
    p.add_argument("operation", choices=("find",))
    p.add_argument("complex")
    p.add_argument("--complement-betti", help="required Betti numbers of the complement")
    p.add_argument("--complement-empty", action="store_true")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_dualloop)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.formats:
            return _print_formats()
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except _UsageError as exc:
        print(f"cellmatch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _PRECONDITION_ERRORS as exc:
        print(f"cellmatch: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SearchBudgetExceededError as exc:
        print(f"cellmatch: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except _USAGE_ERRORS as exc:
        print(f"cellmatch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CellmatchError as exc:
        print(f"cellmatch: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
