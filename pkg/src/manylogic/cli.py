"""Command-line access to tables, model evaluation, consequence checks,
frame/axiom checks, and the acceptance suite.

Exit codes: 0 success, 1 an INVALID verdict or counterexample, 2 bad
input (flags, files, formulas).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bivaluations, frames, models, syntax, verify
from .logics import CONNECTIVES, LOGIC_IDS, LOGICS, matrix_consequence, truth_table
from .models import DIAMOND_VARIANTS
from .syntax import ParseError, to_text


class InputError(Exception):
    pass


def _logic(token: str):
    if token not in LOGICS:
        raise InputError(f"unknown logic {token!r}; expected one of {', '.join(LOGIC_IDS)}")
    return LOGICS[token]


def _parse_formula(text: str):
    try:
        return syntax.parse(text)
    except ParseError as exc:
        raise InputError(f"bad formula {text!r}: {exc}") from None


def _parse_premises(text: str | None):
    if not text or not text.strip():
        return []
    return [_parse_formula(part) for part in text.split(",")]


def _load_model(path: str) -> models.Model:
    try:
        model = models.load_model(path)
    except (OSError, json.JSONDecodeError, models.ModelFormatError) as exc:
        raise InputError(f"cannot load model {path}: {exc}") from None
    report = models.validate(model)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not report.ok:
        raise InputError("invalid model: " + "; ".join(report.errors))
    return model


def _load_frame(path: str) -> models.Frame:
    try:
        frame = models.load_frame(path)
    except (OSError, json.JSONDecodeError, models.ModelFormatError) as exc:
        raise InputError(f"cannot load frame {path}: {exc}") from None
    report = models.validate_frame(frame)
    if not report.ok:
        raise InputError("invalid frame: " + "; ".join(report.errors))
    return frame


def _cmd_tables(args) -> int:
    logic = _logic(args.logic)
    conns = [args.conn] if args.conn else list(CONNECTIVES)
    blocks = [truth_table(logic, c).render() for c in conns]
    print("\n\n".join(blocks))
    return 0


def _cmd_eval(args) -> int:
    model = _load_model(args.model)
    if args.diamond:
        model = models.Model(
            model.worlds, model.relation, model.logics, model.valuation, args.diamond
        )
    if args.world not in model.worlds:
        raise InputError(f"unknown world {args.world!r}")
    f = _parse_formula(args.formula)
    value = models.eval_formula(model, args.world, f)
    mark = "DESIGNATED" if model.logic(args.world).is_designated(value) else "NOT DESIGNATED"
    print(f"{value} {mark}")
    return 0


def _cmd_consequence(args) -> int:
    logic = _logic(args.logic)
    premises = _parse_premises(args.premises)
    conclusion = _parse_formula(args.conclusion)
    verdict = matrix_consequence(logic, premises, conclusion)
    if verdict.valid:
        print("VALID")
        return 0
    witness = " ".join(f"{k}={v}" for k, v in sorted(verdict.witness.items()))
    print(f"INVALID {witness}")
    return 1


def _cmd_biv_consequence(args) -> int:
    logic = _logic(args.logic)
    premises = _parse_premises(args.premises)
    conclusion = _parse_formula(args.conclusion)
    verdict = bivaluations.biv_consequence(
        logic, premises, conclusion, v14_reading=args.v14
    )
    if verdict.valid:
        print("VALID")
        return 0
    print("INVALID")
    for f, v in sorted(verdict.witness.items(), key=lambda kv: (syntax.size(kv[0]), to_text(kv[0]))):
        print(f"  rho({to_text(f)}) = {v}")
    return 1


def _cmd_check_frame(args) -> int:
    frame = _load_frame(args.model)
    schema = frames.SCHEMAS[args.axiom]
    mode = "exhaustive" if args.exhaustive else "sampled"
    atoms = max(args.vars, len(schema.atoms))
    budget = frames.CheckBudget(mode, args.samples, atoms, args.seed)
    try:
        result = frames.axiom_valid_on_frame(frame, schema, args.diamond, budget)
    except frames.BudgetError as exc:
        raise InputError(str(exc)) from None
    if result.valid:
        print(f"VALID ({result.models_checked} valuations, mode={mode}, seed={args.seed})")
        return 0
    ce = result.counterexample
    print(f"COUNTEREXAMPLE world={ce.world} value={ce.value}")
    print(json.dumps(models.model_to_dict(ce.model), indent=2))
    return 1


def _cmd_verify(args) -> int:
    if args.logics:
        tokens = tuple(t.strip() for t in args.logics.split(","))
        for t in tokens:
            _logic(t)
        report = frames.theorem_suite(
            logic_ids=tokens, five_c_logic_ids=tokens,
            samples=args.samples, seed=args.seed,
        )
        for item in report.items:
            status = "PASS" if item.passed else "FAIL"
            print(f"{item.name:<14} {item.description:<55} {status}")
            if item.note:
                print(f"      - {item.note}")
            for ce in item.counterexamples[:3]:
                text = (
                    frames.describe_counterexample(ce)
                    if isinstance(ce, frames.Counterexample)
                    else str(ce)
                )
                print(f"      ! {text}")
        print(f"seed={report.seed}")
        return 0 if report.all_pass else 1
    only = set(x.strip().upper() for x in args.only.split(",")) if args.only else None
    outcomes = verify.run_all(only)
    if not outcomes:
        raise InputError(f"no criteria match {args.only!r}")
    print(verify.render(outcomes))
    return 0 if all(o.passed for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manylogic",
        description="many-valued modal models over a shared six-value lattice",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="print connective truth tables")
    p.add_argument("logic", choices=LOGIC_IDS)
    p.add_argument("--conn", choices=tuple(CONNECTIVES), help="one connective (default: all)")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("eval", help="evaluate a formula at a world of a model")
    p.add_argument("model", help="model JSON file")
    p.add_argument("--world", required=True)
    p.add_argument("--formula", required=True)
    p.add_argument("--diamond", choices=DIAMOND_VARIANTS, help="override the model's variant")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("consequence", help="matrix consequence by valuation enumeration")
    p.add_argument("logic", choices=LOGIC_IDS)
    p.add_argument("--premises", default="", help="comma-separated formulas")
    p.add_argument("--conclusion", required=True)
    p.set_defaults(fn=_cmd_consequence)

    p = sub.add_parser("biv-consequence", help="two-valued (clause) consequence")
    p.add_argument("logic", choices=LOGIC_IDS)
    p.add_argument("--premises", default="")
    p.add_argument("--conclusion", required=True)
    p.add_argument("--v14", choices=bivaluations.V14_READINGS, default="printed")
    p.set_defaults(fn=_cmd_biv_consequence)

    p = sub.add_parser("check-frame", help="check an axiom schema on a frame")
    p.add_argument("model", help="frame JSON file")
    p.add_argument("--axiom", required=True, choices=tuple(frames.SCHEMAS))
    p.add_argument("--diamond", choices=DIAMOND_VARIANTS, default="up")
    p.add_argument("--vars", type=int, default=1, help="atoms for valuation enumeration")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=frames.DEFAULT_SEED)
    p.set_defaults(fn=_cmd_check_frame)

    p = sub.add_parser("verify", help="run the acceptance checklist")
    p.add_argument("--only", help="comma-separated criterion ids, e.g. AC1,AC7")
    p.add_argument(
        "--logics",
        help="comma list of logic tokens: run the frame-theorem suite over "
        "this subset instead of the pinned checklist",
    )
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=frames.DEFAULT_SEED)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
