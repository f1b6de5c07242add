"""Shared verdict vocabulary for verification reports.

Conditional theorems get the third state so campaign grids stay total:
a prime that does not satisfy a theorem's hypothesis is neither a pass
nor a failure.
"""

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
