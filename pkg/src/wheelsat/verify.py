"""Compare the searched W4-extremal set with the family description, per n."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .detect import W4
from .families import theorem_rhs
from .formats import graph6_encode
from .search import PruneOptions, search_min_saturated

MATCH = "MATCH"
SAT_MISMATCH = "SAT_MISMATCH"
SET_MISMATCH = "SET_MISMATCH"
INCOMPLETE = "INCOMPLETE"


def expected_w4_sat(n: int) -> int:
    return (5 * n - 10) // 2


@dataclass
class VerificationOutcome:
    n: int
    expected_sat: int
    computed_sat: int | None
    families_set: list[tuple[bytes, object]]
    search_set: list[tuple[bytes, object]]
    verdict: str
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "expected_sat": self.expected_sat,
            "computed_sat": self.computed_sat,
            "families": [graph6_encode(g) for _, g in self.families_set],
            "search": [graph6_encode(g) for _, g in self.search_set],
            "verdict": self.verdict,
            "wall_ms": round(self.wall_time * 1000),
        }


def verify_n(
    n: int,
    edge_cap: int | None = None,
    prune: PruneOptions = PruneOptions(),
    workers: int = 1,
) -> VerificationOutcome:
    start = time.perf_counter()
    rhs = theorem_rhs(n)
    report = search_min_saturated(n, W4, edge_cap=edge_cap, prune=prune, workers=workers)
    expected = expected_w4_sat(n)
    if report.status != "ok":
        verdict = INCOMPLETE
    elif report.sat_value != expected:
        verdict = SAT_MISMATCH
    elif report.keys != [k for k, _ in rhs]:
        verdict = SET_MISMATCH
    else:
        verdict = MATCH
    return VerificationOutcome(
        n, expected, report.sat_value, rhs, report.extremal, verdict, time.perf_counter() - start
    )
