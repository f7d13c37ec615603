"""Exhaustive sweeps and the extremal sum for K_{2,5} containment.

For a target H, sigma(H, n) is the smallest even integer such that every
n-term positive graphic sequence with sum at least sigma(H, n) has a
realization containing H.  This module enumerates all graphic positive
sequences of a given length in decreasing-sum order, classifies each with
the characterization decider and/or the realization oracle, and reports
the extremal value together with any decider/oracle disagreements (there
must be none).

Desk-scale guards: decider sweeps are limited to n <= 12 and oracle
sweeps to n <= 9 by default; the closed form 5n-3 (odd n) / 5n-2 (even n)
for sigma(K_{2,5}, n) is only claimed for n >= 37 and is never asserted
below that, but :func:`witness_check` and
:func:`sigma_formula_consistency` replay its supporting arguments for
any n.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from typing import Iterator

from .decider import K25_EXCEPTIONS, is_potentially_k24, is_potentially_k25
from .oracle import DEFAULT_BUDGET, is_potentially_subgraph
from .seqcore import DegreeSequence, InvalidInput, format_sequence, is_graphic

MAX_DECIDER_SWEEP_N = 12
MAX_ORACLE_SWEEP_N = 9

_TARGETS = {"k25": (is_potentially_k25, 5), "k24": (is_potentially_k24, 4)}


def _partitions(total: int, slots: int, max_val: int) -> Iterator[list[int]]:
    """Nonincreasing positive partitions of total into exactly slots parts,
    each at most max_val, in decreasing lexicographic order."""
    if slots == 0:
        if total == 0:
            yield []
        return
    lo = -(-total // slots)
    hi = min(max_val, total - (slots - 1))
    for v in range(hi, lo - 1, -1):
        for rest in _partitions(total - v, slots - 1, v):
            yield [v] + rest


def enumerate_graphic_sequences(n: int, min_sigma: int | None = None
                                ) -> Iterator[DegreeSequence]:
    """All graphic sequences of exactly n positive terms, sum descending.

    Terms are bounded by n - 1; only even sums at least ``min_sigma``
    (default: the smallest possible, n rounded up to even) are produced.
    """
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    lo = max(min_sigma if min_sigma is not None else n, n)
    lo += lo % 2
    hi = n * (n - 1)
    hi -= hi % 2
    for sigma in range(hi, lo - 1, -2):
        for parts in _partitions(sigma, n, n - 1):
            pi = DegreeSequence(tuple(parts))
            if is_graphic(pi):
                yield pi


@dataclass
class SweepReport:
    """Classification of every graphic positive sequence of length n."""

    n: int
    target: str
    mode: str
    total_sequences: int = 0
    potentially_count: int = 0
    not_potentially: list[dict] = field(default_factory=list)
    sigma_extremal: int | None = None
    mismatches: list[dict] = field(default_factory=list)
    budget_exceeded: list[str] = field(default_factory=list)

    def summary_record(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "mode": self.mode,
            "total": self.total_sequences,
            "potential": self.potentially_count,
            "not_potential": len(self.not_potentially),
            "sigma_extremal": self.sigma_extremal,
            "mismatches": self.mismatches,
            "budget_exceeded": self.budget_exceeded,
        }

    def write_jsonl(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for row in self.not_potentially:
                fh.write(json.dumps(row) + "\n")
            fh.write(json.dumps(self.summary_record()) + "\n")


def _classify(args) -> dict:
    terms, target, mode, budget = args
    decider_fn, s = _TARGETS[target]
    row: dict = {"sequence": format_sequence(terms), "terms": terms,
                 "sigma": sum(terms)}
    if mode in ("decider", "both"):
        verdict = decider_fn(DegreeSequence(terms))
        row["decider"] = verdict.decision
        row["reason"] = verdict.reason
    if mode in ("oracle", "both"):
        result = is_potentially_subgraph(DegreeSequence(terms), "k2s", s,
                                         budget=budget)
        row["oracle_status"] = result.status
        row["oracle"] = result.found
    return row


def run_sweep(n: int, target: str = "k25", mode: str = "both",
              budget: int = DEFAULT_BUDGET, jobs: int = 1) -> SweepReport:
    """Classify every graphic positive length-n sequence; see SweepReport.

    ``mode`` selects the decider, the oracle, or both (disagreements are
    recorded as mismatches and must not occur).  ``jobs`` > 1 distributes
    sequences over worker processes; the report order is deterministic
    either way.
    """
    if target not in _TARGETS:
        raise InvalidInput(f"unknown target {target!r}")
    if mode not in ("decider", "oracle", "both"):
        raise InvalidInput(f"unknown mode {mode!r}")
    min_n = 7 if target == "k25" else 6
    if n < min_n:
        raise InvalidInput(f"{target} sweep needs n >= {min_n}")
    if mode in ("decider", "both") and n > MAX_DECIDER_SWEEP_N:
        raise InvalidInput(f"decider sweeps are capped at n = {MAX_DECIDER_SWEEP_N}")
    if mode in ("oracle", "both") and n > MAX_ORACLE_SWEEP_N:
        raise InvalidInput(f"oracle sweeps are capped at n = {MAX_ORACLE_SWEEP_N}")

    tasks = ((pi.terms, target, mode, budget)
             for pi in enumerate_graphic_sequences(n))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = list(pool.imap(_classify, tasks, chunksize=64))
    else:
        rows = [_classify(t) for t in tasks]

    report = SweepReport(n=n, target=target, mode=mode)
    report.total_sequences = len(rows)
    for row in rows:
        if row.get("oracle_status") == "budget_exceeded":
            report.budget_exceeded.append(row["sequence"])
            continue
        if mode == "both" and row["decider"] != row["oracle"]:
            report.mismatches.append(
                {k: row[k] for k in
                 ("sequence", "sigma", "decider", "reason", "oracle")})
        final = row["oracle"] if mode == "oracle" else row["decider"]
        if final:
            report.potentially_count += 1
        else:
            report.not_potentially.append(
                {k: v for k, v in row.items() if k != "terms"})
    report.not_potentially.sort(
        key=lambda r: (-r["sigma"], r["sequence"]))
    if report.not_potentially:
        report.sigma_extremal = report.not_potentially[0]["sigma"] + 2
    return report


def sigma_extremal_k25(n: int, mode: str = "decider",
                       budget: int = DEFAULT_BUDGET, jobs: int = 1
                       ) -> SweepReport:
    """Full K_{2,5} sweep at length n; see :func:`run_sweep`."""
    return run_sweep(n, target="k25", mode=mode, budget=budget, jobs=jobs)


def sigma_extremal_value(n: int, target: str = "k25") -> int:
    """sigma(H, n) by early-stopped decider scan.

    Sequences are enumerated in decreasing-sum order, so the first one
    that is not potentially H-graphic fixes the extremal value.
    """
    decider_fn, _ = _TARGETS[target]
    min_n = 7 if target == "k25" else 6
    if n < min_n or n > MAX_DECIDER_SWEEP_N:
        raise InvalidInput(
            f"sigma scan needs {min_n} <= n <= {MAX_DECIDER_SWEEP_N}")
    for pi in enumerate_graphic_sequences(n):
        if not decider_fn(pi).decision:
            return pi.sigma + 2
    raise InvalidInput(f"every length-{n} sequence is potentially {target}")


@dataclass(frozen=True)
class WitnessReport:
    """Arithmetic and decider checks for one extremal witness sequence."""

    n: int
    parity: str
    sequence: str
    sigma: int
    sigma_expected: int
    graphic: bool
    decision: bool
    reason: str
    implied_bound: int
    bound_expected: int

    @property
    def ok(self) -> bool:
        return (self.sigma == self.sigma_expected and self.graphic
                and not self.decision and self.reason == "condition(2)"
                and self.implied_bound == self.bound_expected)


def witness_check(n: int) -> WitnessReport:
    """Build and verify the extremal witness sequence of length n.

    Odd n: (n-1, 5, 4^(n-3), 3) with sum 5n - 5.  Even n:
    (n-1, 5, 4^(n-2)) with sum 5n - 4.  Both are graphic, fail the
    decider on condition 2, and give the lower bound sum + 2, which is
    5n - 3 (odd) / 5n - 2 (even).
    """
    if n < 7:
        raise InvalidInput(f"witness sequences need n >= 7, got {n}")
    if n % 2:
        terms = (n - 1, 5) + (4,) * (n - 3) + (3,)
        sigma_expected, bound_expected = 5 * n - 5, 5 * n - 3
        parity = "odd"
    else:
        terms = (n - 1, 5) + (4,) * (n - 2)
        sigma_expected, bound_expected = 5 * n - 4, 5 * n - 2
        parity = "even"
    pi = DegreeSequence(terms)
    graphic = is_graphic(pi)
    verdict = is_potentially_k25(pi)
    return WitnessReport(
        n=n, parity=parity, sequence=format_sequence(terms), sigma=pi.sigma,
        sigma_expected=sigma_expected, graphic=graphic,
        decision=verdict.decision, reason=verdict.reason,
        implied_bound=pi.sigma + 2, bound_expected=bound_expected)


def _condition3_family(n: int) -> Iterator[tuple[int, ...]]:
    """Every shape (n-l, 5^i, 4^j, 3^k, 2^t, 1^(n-7)) allowed at length n."""
    for l in (2, 3, 4):
        if n - l < 5:
            continue
        for i in range(1, 7):
            for j in range(0, 7 - i):
                for k in range(0, 7 - i - j):
                    t = 6 - i - j - k
                    yield ((n - l,) + (5,) * i + (4,) * j + (3,) * k
                           + (2,) * t + (1,) * (n - 7))


@dataclass(frozen=True)
class FormulaReport:
    """Per-length support checks for the closed form of sigma(K_{2,5}, n)."""

    n: int
    formula: int
    max_exception_sigma: int | None
    max_condition3_sigma: int
    eliminations: tuple[tuple[str, int], ...]

    @property
    def ok(self) -> bool:
        below = all(v < self.formula for _, v in self.eliminations)
        exc_ok = (self.max_exception_sigma is None
                  or self.max_exception_sigma < self.formula)
        return below and exc_ok and self.max_condition3_sigma < self.formula


def sigma_formula_consistency(n_from: int, n_to: int) -> list[FormulaReport]:
    """Check, for each n in range, that no low-sum obstruction reaches the
    formula value 5n-3 / 5n-2.

    Instantiates every catalog exception and every condition-3 shape at n
    and compares sums; also replays the arithmetic eliminations (bounds
    on sequences with d2 <= 4, with d7 = 1, and with condition-2
    violations).  Meaningful for n >= 37, where the closed form holds.
    """
    if n_from < 37:
        raise InvalidInput(f"the closed form starts at n = 37, got {n_from}")
    reports = []
    for n in range(n_from, n_to + 1):
        formula = 5 * n - 3 if n % 2 else 5 * n - 2
        exception_sigmas = [sum(inst) for pattern in K25_EXCEPTIONS
                            if (inst := pattern.instantiate(n)) is not None]
        cond3_sigmas = [sum(shape) for shape in _condition3_family(n)]
        eliminations = (
            ("d2<=4: sigma <= 5n-5", 5 * n - 5),
            ("d7=1: sigma <= 2n+18", 2 * n + 18),
            ("d1=n-1, d2=5, d3<=4: sigma <= 5n-4", 5 * n - 4),
            ("d1=n-1, d2=5, d7<=2: sigma <= 3n+12", 3 * n + 12),
        )
        reports.append(FormulaReport(
            n=n, formula=formula,
            max_exception_sigma=max(exception_sigmas, default=None),
            max_condition3_sigma=max(cond3_sigmas),
            eliminations=eliminations))
    return reports
