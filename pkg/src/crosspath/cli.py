"""``crosspath`` command line: stitch, validate, classify, predict, gen, render.

Exit status: 0 success, 1 negative answer (invalid plan, NOT_BRODABLE),
2 usage or input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys

from .errors import BudgetExceeded, CrosspathError, InvalidPlan
from .escaliers import predict_escalier
from .grid import Cell, EscalierParams, gen_escalier, gen_line, gen_random_4_connected
from .oracle import Classification, SearchBudget, classify
from .formats import emit_grid, parse_grid, plan_to_record, plans_from_record, plans_to_record
from .plan import extract_schema, thread_length, validate
from .render import render_back, render_front, render_schema
from .stitcher import stitch_all_components, stitch_iterative, stitch_recursive

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cell(text: str) -> Cell:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return Cell(x, y)


def _escalier(text: str) -> EscalierParams:
    try:
        return EscalierParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cmd_stitch(args) -> int:
    cells = parse_grid(_read(args.input))
    if args.per_component:
        plans = stitch_all_components(cells, engine=args.engine)
        for i, plan in enumerate(plans, start=1):
            report = validate(plan, plan.cells())
            print(f"plan {i}: {report.n_cells} cells, thread {thread_length(report)}", file=sys.stderr)
        _write(args.out, plans_to_record(plans))
        return EXIT_OK
    stitch = stitch_recursive if args.engine == "recursive" else stitch_iterative
    plan = stitch(cells, args.start)
    missed = len(cells) - len(plan.cells())
    if missed:
        print(f"warning: {missed} cells not reached from the start cell", file=sys.stderr)
    _write(args.out, plan_to_record(plan))
    return EXIT_OK


def _cmd_validate(args) -> int:
    plans = plans_from_record(_read(args.plan))
    if args.input is not None:
        cells = parse_grid(_read(args.input))
        if len(plans) == 1:
            targets = [cells]
        else:
            targets = [p.cells() for p in plans]
            if frozenset().union(*targets) != cells:
                print("invalid: plans do not cover the pattern exactly", file=sys.stderr)
                return EXIT_NEGATIVE
    else:
        targets = [p.cells() for p in plans]
    status = EXIT_OK
    for i, (plan, cells) in enumerate(zip(plans, targets), start=1):
        prefix = f"plan {i}: " if len(plans) > 1 else ""
        try:
            report = validate(plan, cells)
        except InvalidPlan as exc:
            print(f"{prefix}invalid: {exc}")
            status = EXIT_NEGATIVE
            continue
        print(f"{prefix}cells: {report.n_cells}")
        print(f"{prefix}front: {report.front_len}")
        print(f"{prefix}back: {report.back_len}")
        print(f"{prefix}total: {thread_length(report)}")
        print(f"{prefix}witness: {report.witness.value}")
    return status


def _budget(args) -> SearchBudget:
    overrides = {}
    if args.max_cells is not None:
        overrides["max_cells"] = args.max_cells
    if args.max_states is not None:
        overrides["max_states"] = args.max_states
    if args.time_limit is not None:
        overrides["time_limit"] = args.time_limit
    return SearchBudget.from_env(**overrides)


def _cmd_classify(args) -> int:
    cells = parse_grid(_read(args.input))
    try:
        result = classify(cells, _budget(args), jobs=args.jobs)
    except BudgetExceeded as exc:
        print(f"UNKNOWN (budget exceeded: {exc})")
        return EXIT_BUDGET
    print(f"{result.value} (definitive)")
    return EXIT_NEGATIVE if result is Classification.NOT_BRODABLE else EXIT_OK


def _cmd_predict(args) -> int:
    result = predict_escalier(args.escalier)
    print(result.value)
    return EXIT_NEGATIVE if result is Classification.NOT_BRODABLE else EXIT_OK


def _cmd_gen(args) -> int:
    if args.escalier is not None:
        cells = gen_escalier(args.escalier)
    elif args.line is not None:
        cells = gen_line(args.line)
    else:
        cells = gen_random_4_connected(args.random, random.Random(args.seed))
    _write(args.out, emit_grid(cells))
    return EXIT_OK


def _cmd_render(args) -> int:
    plans = plans_from_record(_read(args.plan))
    if len(plans) != 1:
        raise UsageError("render takes a single plan")
    plan = plans[0]
    if args.view == "front":
        cells = parse_grid(_read(args.input)) if args.input else plan.cells()
        svg = render_front(cells, plan)
    elif args.view == "back":
        svg = render_back(plan)
    else:
        svg = render_schema(extract_schema(plan))
    _write(args.out, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crosspath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stitch", help="closed minimal plan of a grid pattern")
    p.add_argument("--in", dest="input", help="grid file (default stdin)")
    p.add_argument("--out", help="plan record file (default stdout)")
    p.add_argument("--start", type=_cell, help="start cell X,Y")
    p.add_argument("--engine", choices=("recursive", "iterative"), default="iterative")
    p.add_argument("--per-component", action="store_true",
                   help="one plan per 4-connected component")
    p.set_defaults(run=_cmd_stitch)

    p = sub.add_parser("validate", help="check a plan and report its thread length")
    p.add_argument("--in", dest="input", help="grid file (default: the plan's own cells)")
    p.add_argument("--plan", help="plan record file (default stdin)")
    p.add_argument("--report", action="store_true", help="accepted for clarity; the report is always printed")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("classify", help="decide (strong) stitchability by exhaustive search")
    p.add_argument("--in", dest="input", help="grid file (default stdin)")
    p.add_argument("--max-cells", type=int)
    p.add_argument("--max-states", type=int)
    p.add_argument("--time-limit", type=float, help="seconds")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("predict", help="closed-form answer for a staircase")
    p.add_argument("--escalier", type=_escalier, required=True, help="simple:N or palier:G,P,D")
    p.set_defaults(run=_cmd_predict)

    p = sub.add_parser("gen", help="write a generated pattern as a grid")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--escalier", type=_escalier, help="simple:N or palier:G,P,D")
    which.add_argument("--line", type=int, help="horizontal line of N cells")
    which.add_argument("--random", type=int, metavar="N", help="random 4-connected pattern")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")
    p.add_argument("--out")
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("render", help="SVG view of a plan")
    p.add_argument("--in", dest="input", help="grid file (front view)")
    p.add_argument("--plan", help="plan record file (default stdin)")
    p.add_argument("--view", choices=("front", "back", "schema"), required=True)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_render)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.run(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidPlan as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (CrosspathError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
