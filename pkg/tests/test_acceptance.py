"""The acceptance checklist, one test per criterion.

Each test prints its criterion line (visible with -s or on failure); the
same checks back the CLI `verify` subcommand.  AC8 is expected to fail:
box iteration over transitive frames is refutable once worlds mix logics
whose interpretation maps forget designated values, and the criterion is
kept as stated rather than weakened (the failure output carries the
two-world witness).
"""

import pytest

from manylogic import verify

IDS = [fn.__name__.split("_")[0].upper() for fn in verify.ALL_CHECKS]


@pytest.mark.parametrize("check", verify.ALL_CHECKS, ids=IDS)
def test_criterion(check):
    outcome = check()
    status = "PASS" if outcome.passed else "FAIL"
    print(f"{outcome.cid} {outcome.title}: {status}")
    for line in outcome.details:
        print(f"  - {line}")
    for line in outcome.findings:
        print(f"  ! {line}")
    assert outcome.passed, f"{outcome.cid} {outcome.title}: " + "; ".join(
        outcome.findings or outcome.details
    )
