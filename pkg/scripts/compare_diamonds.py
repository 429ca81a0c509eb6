#!/usr/bin/env python3
"""Evaluate a formula under all four diamond variants, world by world.

Defaults to the bundled two-world model where the sup-based diamond and
the negated-box diamond part ways (F0 versus T0 at w1).
"""

import argparse
from pathlib import Path

from manylogic.models import DIAMOND_VARIANTS, Model, eval_formula, load_model
from manylogic.syntax import parse

FIXTURES = Path(__file__).parent.parent / "src" / "manylogic" / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("model", nargs="?", default=str(FIXTURES / "diamond-compare.json"))
    parser.add_argument("--formula", default="<>p")
    args = parser.parse_args()
    base = load_model(args.model)
    f = parse(args.formula)
    header = "world " + " ".join(f"{v:>8}" for v in DIAMOND_VARIANTS)
    print(header)
    for w in base.worlds:
        row = []
        for variant in DIAMOND_VARIANTS:
            model = Model(base.worlds, base.relation, base.logics, base.valuation, variant)
            row.append(f"{str(eval_formula(model, w, f)):>8}")
        print(f"{w:<6}" + " ".join(row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
