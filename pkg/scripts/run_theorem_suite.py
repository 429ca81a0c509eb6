#!/usr/bin/env python3
"""Run the frame-correspondence suite and print one line per result.

The default logic set for the Euclidean characterisation is the mixed
subset on which it holds; pass --five-c-logics all to watch it fail and
surface the witnesses.
"""

import argparse

from manylogic.frames import LOGIC_IDS, describe_counterexample, theorem_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--five-c-logics",
        default="FDE,K3,LP,LJ4,CLW",
        help="comma list or 'all'",
    )
    args = parser.parse_args()
    five_c = LOGIC_IDS if args.five_c_logics == "all" else tuple(args.five_c_logics.split(","))
    report = theorem_suite(five_c_logic_ids=five_c, samples=args.samples, seed=args.seed)
    for item in report.items:
        status = "ok" if item.passed else "FAIL"
        print(f"[{status}] {item.name}: {item.description} "
              f"({item.frames_checked} frames, {item.models_checked} models)")
        if item.note:
            print(f"       note: {item.note}")
        for ce in item.counterexamples[:3]:
            text = describe_counterexample(ce) if hasattr(ce, "model") else str(ce)
            print(f"       counterexample: {text}")
    print(f"seed={report.seed}")
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
