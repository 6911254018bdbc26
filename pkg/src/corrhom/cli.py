"""Command-line interface.

JSON results go to stdout, human-readable notes to stderr.  Exit codes:
0 ok / yes, 1 no, 2 invalid input, 3 resource limit hit, 4 engine or
shape mismatch, 5 self-check disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import targets
from .classifier import VARIANTS, classify
from .engines import ENGINES, solve_auto
from .errors import CorrHomError, InternalError, NotApplicable, ShapeMismatch, TargetMismatch
from .model import check_assignment, emit_instance, load_instance, load_target
from .oracle import NO, RESOURCE_EXCEEDED, YES, SearchLimits, Verdict, solve_exact
from .selfcheck import run_all
from .transforms import load_formula, normalize, reduce_one_in_three_sat, reduce_three_colouring

EXIT_OK = 0
EXIT_NO = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4
EXIT_DISAGREE = 5

DEFAULT_SEED = 0


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _limits(args: argparse.Namespace) -> Optional[SearchLimits]:
    if args.max_nodes is None and args.timeout_ms is None:
        return None
    return SearchLimits(args.max_nodes, args.timeout_ms)


def cmd_classify(args: argparse.Namespace) -> int:
    H = load_target(args.target)
    variant = args.variant or ("by-side" if H.side is not None else "standard")
    _print_json(classify(H, variant).to_dict())
    return EXIT_OK


def _run_engine(instance, engine: str, limits: Optional[SearchLimits]) -> Verdict:
    if engine == "auto":
        return solve_auto(instance, limits)
    if engine == "oracle":
        return solve_exact(instance, limits)
    return ENGINES[engine](instance)


def cmd_solve(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    verdict = _run_engine(instance, args.engine, _limits(args))
    if verdict.witness is not None:
        bad = check_assignment(instance, verdict.witness)
        if bad is not None:
            raise InternalError(f"witness from {verdict.engine} rejected: {bad}")
    for note in verdict.notes:
        _note(note)
    _print_json(verdict.to_dict())
    return {YES: EXIT_OK, NO: EXIT_NO, RESOURCE_EXCEEDED: EXIT_RESOURCE}[verdict.answer]


def cmd_normalize(args: argparse.Namespace) -> int:
    instance = load_instance(args.instance)
    out, stats = normalize(instance, loops=not args.keep_loops, parallel=not args.keep_parallel, seed=args.seed)
    _note(json.dumps(stats.to_dict(), sort_keys=True))
    print(emit_instance(out))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    if args.kind == "one-in-three-sat":
        instance = reduce_one_in_three_sat(load_formula(args.input))
    else:
        instance = reduce_three_colouring(load_target(args.input))
    print(emit_instance(instance))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    H = targets.named_target(args.shape)
    rng = random.Random(args.seed)
    instance = targets.random_instance(
        H, rng, args.vertices, args.edges, loops=not args.no_loops, parallel=not args.no_parallel, lists=args.lists
    )
    print(emit_instance(instance))
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    results = run_all(args.trials, args.max_g, args.seed, _limits(args))
    failed = False
    for r in results:
        _note(f"{r.name}: {r.trials} trials, {r.skipped} skipped, {len(r.disagreements)} disagreements")
        if r.disagreements:
            failed = True
            _note("replay: " + json.dumps(r.disagreements[0]["instance"], sort_keys=True))
    _print_json({"ok": not failed, "suites": [r.summary() for r in results]})
    return EXIT_DISAGREE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--max-nodes", type=int, default=None, help="search node budget for the oracle")
    common.add_argument("--timeout-ms", type=int, default=None, help="wall-clock budget for the oracle")

    parser = argparse.ArgumentParser(prog="corrhom", description="Correspondence homomorphism toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a target graph")
    p.add_argument("target", type=Path)
    p.add_argument("--variant", choices=VARIANTS, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", parents=[common], help="decide an instance")
    p.add_argument("instance", type=Path)
    p.add_argument("--engine", choices=("auto", "oracle", *ENGINES), default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("normalize", parents=[common], help="remove G-loops and parallel edges")
    p.add_argument("instance", type=Path)
    p.add_argument("--keep-loops", action="store_true")
    p.add_argument("--keep-parallel", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("reduce", parents=[common], help="build a hardness-reduction instance")
    p.add_argument("kind", choices=("one-in-three-sat", "three-col"))
    p.add_argument("input", type=Path)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("generate", parents=[common], help="random instance over a named target")
    p.add_argument("shape", choices=sorted(targets.NAMED_TARGETS))
    p.add_argument("--vertices", type=int, default=5)
    p.add_argument("--edges", type=int, default=6)
    p.add_argument("--lists", action="store_true")
    p.add_argument("--no-loops", action="store_true")
    p.add_argument("--no-parallel", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selfcheck", parents=[common], help="cross-check engines and transforms")
    p.add_argument("--max-g", type=int, default=6)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _limits(args)
        return args.func(args)
    except (ShapeMismatch, NotApplicable, TargetMismatch) as exc:
        _note(f"error: {exc}")
        return EXIT_MISMATCH
    except (CorrHomError, ValueError, OSError) as exc:
        if isinstance(exc, InternalError):
            raise
        _note(f"error: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
