"""PASS/FAIL lines collected by the acceptance tests, printed at session end."""

LINES: list[str] = []
