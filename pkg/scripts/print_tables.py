#!/usr/bin/env python3
"""Dump the connective tables of every logic, golden-file friendly."""

from manylogic.logics import CONNECTIVES, LOGIC_IDS, LOGICS, truth_table

for lid in LOGIC_IDS:
    for conn in CONNECTIVES:
        print(truth_table(LOGICS[lid], conn).render())
        print()
