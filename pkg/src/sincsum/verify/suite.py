"""Assembly of the full verification suite into a serializable report.

One CheckResult per check, sorted by check id so reports are canonical
regardless of execution order.  Wall times are measured but only included
in serialized output on request, keeping default output bytes identical
across runs for fixed flags and seed.
"""

import math
import time
from dataclasses import dataclass

from .certify import certify
from .corpus import corpus, quartic_coefficient_margin
from .engine import majorization_property, proof_chain, verify_global_min

#: Exponent parameters exercised by the global-minimum suite.
GLOBAL_MIN_R = (1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 8.0, 1.02**256)

#: Exponents and points exercised by the proof-chain suite.
PROOF_CHAIN_R = (1.0, 1.5, 2.0, 4.0)
PROOF_CHAIN_X = tuple(round(0.05 * i, 2) for i in range(1, 20))

#: Frozen reference for the scalar coefficient-margin check.
QUARTIC_MARGIN_REF = -1.9537471


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # certified | passed | failed | violated | inconclusive
    worst_margin: float | None
    witness: float | None
    boxes_visited: int | None
    wall_time_ms: float | None

    def to_json_dict(self, include_timings: bool = False) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "worst_margin": self.worst_margin,
            "witness": self.witness,
            "boxes_visited": self.boxes_visited,
            "wall_time_ms": self.wall_time_ms if include_timings else None,
        }

    @property
    def ok(self) -> bool:
        return self.status in ("certified", "passed")


@dataclass(frozen=True)
class SuiteConfig:
    grid: int = 1024
    tol: float = 1e-10
    seed: int = 0
    trials: int = 100_000
    max_depth: int = 40


def _finite_or_none(v) -> float | None:
    if v is None:
        return None
    return v if math.isfinite(v) else None


def run_suite(cfg: SuiteConfig = SuiteConfig()) -> list[CheckResult]:
    """Run every check and return results sorted by check id."""
    # deferred import: manifest loading needs the corpus registry, which
    # lives beside this module
    from ..manifest import load_default_manifest, manifest_check

    results: list[CheckResult] = []

    for entry in corpus():
        t0 = time.perf_counter()
        out = certify(entry, max_depth=cfg.max_depth)
        results.append(
            CheckResult(
                check_id=f"corpus_{out.id}",
                status=out.status,
                worst_margin=_finite_or_none(out.worst_margin),
                witness=out.witness,
                boxes_visited=out.boxes_visited,
                wall_time_ms=1e3 * (time.perf_counter() - t0),
            )
        )

    t0 = time.perf_counter()
    margin_const = quartic_coefficient_margin()
    scalar_ok = margin_const > -2.0 and abs(margin_const - QUARTIC_MARGIN_REF) <= 1e-6
    results.append(
        CheckResult(
            check_id="const_quartic_coefficient_margin",
            status="passed" if scalar_ok else "failed",
            worst_margin=margin_const - (-2.0),
            witness=None if scalar_ok else margin_const,
            boxes_visited=None,
            wall_time_ms=1e3 * (time.perf_counter() - t0),
        )
    )

    for r in GLOBAL_MIN_R:
        t0 = time.perf_counter()
        rep = verify_global_min(r, grid_n=cfg.grid, tol=cfg.tol)
        results.append(
            CheckResult(
                check_id=f"globalmin_r{rep.r:.6g}",
                status=rep.status,
                worst_margin=_finite_or_none(rep.worst_margin),
                witness=rep.worst_x if rep.status == "failed" else None,
                boxes_visited=None,
                wall_time_ms=1e3 * (time.perf_counter() - t0),
            )
        )

    t0 = time.perf_counter()
    maj = majorization_property(cfg.trials, cfg.seed)
    results.append(
        CheckResult(
            check_id="majorization_random_instances",
            status="passed" if maj.violations == 0 else "failed",
            worst_margin=_finite_or_none(maj.min_margin),
            witness=None,
            boxes_visited=None,
            wall_time_ms=1e3 * (time.perf_counter() - t0),
        )
    )

    for r in PROOF_CHAIN_R:
        t0 = time.perf_counter()
        worst = math.inf
        worst_x = None
        ok = True
        for x in PROOF_CHAIN_X:
            w = proof_chain(r, x)
            low = min(w.margins.values())
            if low < worst:
                worst = low
                worst_x = x
            ok = ok and w.passed
        results.append(
            CheckResult(
                check_id=f"proofchain_r{r:.6g}",
                status="passed" if ok else "failed",
                worst_margin=_finite_or_none(worst),
                witness=None if ok else worst_x,
                boxes_visited=None,
                wall_time_ms=1e3 * (time.perf_counter() - t0),
            )
        )

    t0 = time.perf_counter()
    man = manifest_check(load_default_manifest())
    results.append(
        CheckResult(
            check_id="manifest_corpus_match",
            status="passed" if man.passed else "failed",
            worst_margin=_finite_or_none(man.equality_worst),
            witness=None,
            boxes_visited=None,
            wall_time_ms=1e3 * (time.perf_counter() - t0),
        )
    )

    results.sort(key=lambda c: c.check_id)
    return results


def suite_exit_code(results: list[CheckResult]) -> int:
    """0 all ok, 1 any violated/failed, 2 any inconclusive."""
    if any(c.status in ("violated", "failed") for c in results):
        return 1
    if any(c.status == "inconclusive" for c in results):
        return 2
    return 0
