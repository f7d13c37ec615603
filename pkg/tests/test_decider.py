import pytest

from potk2s import (
    CATALOG,
    K24_EXCEPTIONS,
    K25_EXCEPTIONS,
    NotApplicable,
    OutOfScope,
    condition3_decompositions,
    is_graphic,
    is_potentially_k24,
    is_potentially_k25,
    match_parametric,
    necessary_residual_check,
    normalize,
    parse_sequence,
)

PAT = {p.pattern_id: p for p in K25_EXCEPTIONS}


def test_k24_examples():
    assert is_potentially_k24(parse_sequence("4,4,2,2,2,2")).decision
    v = is_potentially_k24(parse_sequence("4^2,2^5"))
    assert not v.decision and v.matched_exception == "k24.e02"
    # d1 = n-1 and d2 = 4 force d3 = 4
    v = is_potentially_k24(parse_sequence("6,4,3,3,2,2,2"))
    assert not v.decision and v.reason == "condition(2)"


def test_k25_examples():
    assert is_potentially_k25(parse_sequence("5,5,2,2,2,2,2")).decision
    v = is_potentially_k25(parse_sequence("5^2,2^6"))
    assert not v.decision and v.matched_exception == "k25.f8.8"
    v = is_potentially_k25(parse_sequence("6,5^4,3^2"))
    assert not v.decision and v.matched_exception == "k25.p01"
    v = is_potentially_k25(parse_sequence("8,5,5,5,5,3,2,1,1,1"))
    assert not v.decision and v.reason == "condition(3)"
    assert is_potentially_k25(parse_sequence("6^3,5^2,4,2^2")).decision


def test_out_of_scope():
    with pytest.raises(OutOfScope):
        is_potentially_k25(parse_sequence("3,2,1"))
    with pytest.raises(OutOfScope):
        is_potentially_k25(parse_sequence("3,3,3,1,1,1,1"))  # odd sum
    with pytest.raises(OutOfScope):
        is_potentially_k24(parse_sequence("4,4,2,2,2"))


def test_verdict_invariant_and_trace():
    v = is_potentially_k25(parse_sequence("5,5,2,2,2,2,2"))
    assert v.decision == (v.reason == "pass")
    assert [e["condition"] for e in v.trace] == [1, 2, 3, 4]
    v = is_potentially_k25(parse_sequence("4,4,4,4,4,4,4,4"))
    assert v.reason == "condition(1)" and len(v.trace) == 1


def test_match_parametric_examples():
    pi = parse_sequence("6,5,5,5,3,3,3")
    assert match_parametric(pi, PAT["k25.p02"])
    assert not match_parametric(pi, PAT["k25.p01"])
    # 1^(n-9) needs n >= 9, so the pattern does not apply at n = 8
    assert PAT["k25.p05"].instantiate(8) is None
    assert PAT["k25.p05"].instantiate(9) == (8, 5, 5, 3, 3, 3, 3, 3, 3)


def test_catalog_shape():
    assert len(K24_EXCEPTIONS) == 12
    parametric = [p for p in K25_EXCEPTIONS if p.pattern_id.startswith("k25.p")]
    fixed = [p for p in K25_EXCEPTIONS if p.pattern_id.startswith("k25.f")]
    extra = [p for p in K25_EXCEPTIONS if p.pattern_id.startswith("k25.x")]
    assert len(parametric) == 10 and len(fixed) == 26 and len(extra) == 1
    assert len(CATALOG) == len(K24_EXCEPTIONS) + len(K25_EXCEPTIONS)
    by_n = {8: 8, 9: 9, 10: 6, 11: 2, 12: 1}
    for n, expected in by_n.items():
        got = sum(1 for p in fixed if p.pattern_id.startswith(f"k25.f{n}."))
        assert got == expected


def test_fixed_catalog_entries_instantiate_at_their_length_only():
    for pattern in K25_EXCEPTIONS:
        if not pattern.pattern_id.startswith("k25.f"):
            continue
        own_n = int(pattern.pattern_id.split(".")[1][1:])
        inst = pattern.instantiate(own_n)
        assert inst is not None and len(inst) == own_n
        for other in range(6, 14):
            if other != own_n:
                assert pattern.instantiate(other) is None


def test_exception_verdict_traces_are_sound():
    for pattern in K25_EXCEPTIONS:
        inst = pattern.instantiate(9) or pattern.instantiate(8)
        if inst is None:
            continue
        v = is_potentially_k25(normalize(inst))
        assert not v.decision
        if v.matched_exception is not None:
            assert match_parametric(normalize(inst), CATALOG[v.matched_exception])


def test_condition3_decompositions_examples():
    ms = condition3_decompositions(parse_sequence("5,5,2,2,2,2,2"))
    assert len(ms) == 1
    m = ms[0]
    assert (m.l, m.i, m.j, m.k, m.t) == (2, 1, 0, 0, 5) and m.residual == ()
    ms = condition3_decompositions(parse_sequence("7,5,5,3,3,3,2,1,1"))
    assert len(ms) == 1
    m = ms[0]
    assert (m.l, m.i, m.j, m.k, m.t) == (2, 2, 0, 3, 1)
    assert m.residual == (3, 1, 1, 1)
    assert condition3_decompositions(
        normalize([9, 9, 8, 2, 2, 2, 2, 2, 2, 2])) == []


def test_condition3_requires_exact_ones_count():
    # one 1 instead of n-7 = 2: shape does not match
    assert condition3_decompositions(normalize([7, 5, 5, 3, 3, 3, 3, 2, 1])) == []


def test_necessary_residual_check_examples():
    # (n-2, 5^4, 2^3, 1^(n-8)) at n = 10 reduces to (3^3, 1), not graphic
    assert necessary_residual_check(
        normalize([8, 5, 5, 5, 5, 2, 2, 2, 1, 1]), 2) is False
    assert necessary_residual_check(parse_sequence("5,5,2,2,2,2,2"), 2) is True
    assert necessary_residual_check(
        parse_sequence("7,5,5,3,3,3,2,1,1"), 2) is True


def test_necessary_residual_check_not_applicable():
    with pytest.raises(NotApplicable):
        necessary_residual_check(parse_sequence("5,5,2,2,2,2,2"), 3)
    with pytest.raises(NotApplicable):
        necessary_residual_check(parse_sequence("4,4,2,2,2,2"), 2)


def test_necessary_residual_matches_condition3_formula():
    # on exact condition-3 shapes the reduction reproduces the residual rule
    for text in ("5,5,2,2,2,2,2", "7,5,5,3,3,3,2,1,1", "6,5,5,4,3,2,2",
                 "5,5,5,5,3,3,2", "7,5,5,5,5,5,2,1,1"):
        pi = parse_sequence(text)
        for m in condition3_decompositions(pi):
            assert necessary_residual_check(pi, m.l) == \
                is_graphic(normalize(m.residual)), text


def test_decider_accepts_raw_lists():
    assert is_potentially_k25([5, 5, 2, 2, 2, 2, 2, 0, 0]).decision


def test_condition2_failures_also_fail_oracle(k25_sweeps):
    # subsumed by the exhaustive sweep, asserted separately for the trace
    seen = 0
    for n in (7, 8, 9):
        for row in k25_sweeps[n].not_potentially:
            if row["reason"] == "condition(2)":
                seen += 1
                assert row["oracle"] is False, row
    assert seen > 0


def test_reduction_certificate_implies_decider_true():
    from potk2s import enumerate_graphic_sequences, k2s_sufficient

    for n in (7, 8, 9):
        for pi in enumerate_graphic_sequences(n):
            if k2s_sufficient(pi, 5) is True:
                assert is_potentially_k25(pi).decision, pi
