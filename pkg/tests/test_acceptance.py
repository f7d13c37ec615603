"""Acceptance suite: one test per criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
from itertools import combinations_with_replacement

from potk2s import (
    K25_EXCEPTIONS,
    OutOfScope,
    enumerate_graphic_sequences,
    is_graphic,
    is_graphic_eg,
    is_potentially_k25,
    is_potentially_subgraph,
    k2s_sufficient,
    layoff,
    normalize,
    realization_exists,
    sigma_formula_consistency,
    witness_check,
)


def report(number, ok, detail):
    print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_exhaustive_k25_verification(k25_sweeps):
    problems = []
    counts = {}
    for n in (7, 8, 9):
        rep = k25_sweeps[n]
        counts[n] = rep.total_sequences
        if rep.mismatches:
            problems.append(f"n={n}: {len(rep.mismatches)} mismatches")
        if rep.budget_exceeded:
            problems.append(f"n={n}: budget exceeded")
    report(1, not problems,
           f"decider == oracle on all graphic positive sequences, "
           f"n=7..9 ({counts[7]}+{counts[8]}+{counts[9]} sequences); "
           + (("; ".join(problems)) or "zero mismatches, zero budget hits"))


def test_criterion_2_exhaustive_k24_verification(k24_sweeps):
    problems = []
    total = 0
    for n in (6, 7, 8, 9):
        rep = k24_sweeps[n]
        total += rep.total_sequences
        if rep.mismatches:
            problems.append(f"n={n}: {len(rep.mismatches)} mismatches")
        if rep.budget_exceeded:
            problems.append(f"n={n}: budget exceeded")
    report(2, not problems,
           f"K_(2,4) decider == oracle on all {total} sequences, n=6..9; "
           + (("; ".join(problems)) or "zero mismatches"))


def test_criterion_3_exception_catalog_ground_truth():
    fixed = [p for p in K25_EXCEPTIONS if p.pattern_id.startswith("k25.f")]
    assert len(fixed) == 26
    problems = []
    for pattern in fixed:
        n = int(pattern.pattern_id.split(".")[1][1:])
        pi = normalize(pattern.instantiate(n))
        if not is_graphic(pi):
            problems.append(f"{pattern.pattern_id}: not graphic")
            continue
        if is_potentially_k25(pi).decision:
            problems.append(f"{pattern.pattern_id}: decider says potentially")
        oracle = is_potentially_subgraph(pi, "k2s", 5, max_n=12)
        if oracle.status != "exhausted_no_witness":
            problems.append(f"{pattern.pattern_id}: oracle {oracle.status}")
    report(3, not problems,
           "all 26 fixed catalog sequences are graphic, decider-false, and "
           "oracle-false (oracle run for n=8..12); "
           + (("; ".join(problems)) or "no violations"))


def test_criterion_4_graphicality_triple_agreement():
    checked = 0
    problems = []
    for n in range(1, 9):
        for combo in combinations_with_replacement(range(n - 1, -1, -1), n):
            terms = tuple(sorted(combo, reverse=True))
            pi = normalize(terms)
            a, b = is_graphic(pi), is_graphic_eg(pi)
            c = realization_exists(pi)
            checked += 1
            if not (a == b == c):
                problems.append(f"{terms}: layoff={a} eg={b} search={c}")
    rng = random.Random(20260810)
    randoms = 0
    while randoms < 1000:
        n = rng.randint(1, 12)
        pi = normalize([rng.randint(0, n - 1) for _ in range(n)])
        a, b = is_graphic(pi), is_graphic_eg(pi)
        if a != b:
            problems.append(f"random {pi.terms}: layoff={a} eg={b}")
        if pi.n <= 8 and realization_exists(pi) != a:
            problems.append(f"random {pi.terms}: search disagrees")
        randoms += 1
    report(4, not problems,
           f"laying-off == Erdos-Gallai == realization search on all "
           f"{checked} sequences with n<=8, plus 1000 random n<=12; "
           + (("; ".join(problems[:5])) or "full agreement"))


def test_criterion_5_extremal_witnesses():
    problems = []
    for n in range(7, 102):
        r = witness_check(n)
        if not r.ok:
            problems.append(f"n={n}: {r}")
    report(5, not problems,
           "witness sequences for n=7..101: sums 5n-5/5n-4, graphic, "
           "rejected via condition (2), bounds 5n-3/5n-2; "
           + (("; ".join(problems[:3])) or "all pass"))


def test_criterion_6_formula_consistency():
    reports = sigma_formula_consistency(37, 60)
    problems = [f"n={r.n}" for r in reports if not r.ok]
    worst = max(max(r.max_exception_sigma, r.max_condition3_sigma)
                / r.formula for r in reports)
    report(6, not problems,
           f"n=37..60: every exception and condition-3 shape stays below "
           f"the formula value (worst ratio {worst:.2f}) and the arithmetic "
           f"eliminations hold; " + (("; ".join(problems)) or "all pass"))


def test_criterion_7_sufficiency_soundness():
    confirmed = 0
    problems = []
    for n in (7, 8, 9):
        for pi in enumerate_graphic_sequences(n):
            if k2s_sufficient(pi, 5) is True:
                confirmed += 1
                if not is_potentially_subgraph(pi, "k2s", 5).found:
                    problems.append(str(pi))
    report(7, not problems,
           f"every reduction-certified sequence (n=7..9, {confirmed} of "
           f"them) has a realization containing K_(2,5); "
           + (("; ".join(problems[:5])) or "zero counterexamples"))


def test_criterion_8_layoff_monotonicity():
    checked = 0
    problems = []
    for n in (8, 9):
        for pi in enumerate_graphic_sequences(n):
            reduced = normalize(layoff(pi, n).terms)
            try:
                smaller = is_potentially_k25(reduced)
            except OutOfScope:
                continue
            checked += 1
            if smaller.decision and not is_potentially_k25(pi).decision:
                problems.append(f"{pi} from {reduced}")
    report(8, not problems,
           f"laying off the last term never creates the property "
           f"({checked} in-scope pairs over n=8..9); "
           + (("; ".join(problems[:5])) or "zero counterexamples"))
