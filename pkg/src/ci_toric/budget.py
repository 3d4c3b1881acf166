"""Search caps, overridable through the CI_TORIC_BUDGET environment variable.

The variable holds comma-separated ``key=value`` pairs, e.g.
``CI_TORIC_BUDGET="walk=22,dominating=30"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "CI_TORIC_BUDGET"


@dataclass(frozen=True)
class Budget:
    walk: int = 20  # max |W| for the even-walk state search
    dominating: int = 24  # max rows for the mixed-submatrix search
    cycles: int = 100_000  # max chordless cycles enumerated
    partitions: int = 10_000  # max search nodes for [C;R] partitions
    retry_walks: int = 64  # max alternative shortest walks tried per step
    diagnostics: int = 10  # max induced-subgraph size in degree-2 diagnostics


def budget_from_env(base: Budget | None = None) -> Budget:
    """Return `base` (or the defaults) with overrides from the environment."""
    base = base or Budget()
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return base
    known = {f.name for f in fields(Budget)}
    updates: dict[str, int] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise ValueError(f"{ENV_VAR}: unknown entry {item!r}; keys are {sorted(known)}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise ValueError(f"{ENV_VAR}: {key} needs an integer, got {value!r}") from None
    return replace(base, **updates)
