"""Complete deciders for the potentially K_{2,4} / K_{2,5} properties.

A graphic sequence is *potentially H-graphic* when at least one of its
realizations contains H as a subgraph.  For H = K_{2,4} (n >= 6 positive
terms) and H = K_{2,5} (n >= 7 positive terms) this module decides the
property exactly, via degree-threshold conditions, a residual-graphicality
rule for one parametric shape family, and finite exception catalogs.

The K_{2,5} decider checks four conditions in order:

1. d_2 >= 5 and d_7 >= 2;
2. if d_1 = n - 1 and d_2 = 5, then d_3 = 5 and d_7 >= 3;
3. whenever the sequence decomposes as (n-l, 5^i, 4^j, 3^k, 2^t, 1^(n-7))
   with l in {2, 3, 4}, n - l >= 5, i >= 1 and i + j + k + t = 6, the
   residual (3^(i-1), 2^j, 1^(k+l-2)) must be graphic;
4. the sequence matches no entry of the exception catalog
   (``data/k25_exceptions.txt``).

The K_{2,4} decider is the analogous two-condition-plus-catalog test.
Both deciders re-verify graphicality of their input and raise
:class:`~potk2s.seqcore.OutOfScope` for inputs outside the characterized
range instead of guessing.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .seqcore import (
    DegreeSequence,
    InvalidInput,
    NotApplicable,
    OutOfScope,
    as_sequence,
    format_sequence,
    is_graphic,
    normalize,
)


@dataclass(frozen=True)
class Affine:
    """Integer-valued expression, either a constant or ``n - offset``."""

    uses_n: bool
    offset: int

    def at(self, n: int) -> int:
        return n - self.offset if self.uses_n else self.offset

    def __str__(self) -> str:
        if not self.uses_n:
            return str(self.offset)
        return f"n-{self.offset}" if self.offset else "n"


@dataclass(frozen=True)
class PatternSequence:
    """Run-length pattern whose values and counts may be affine in n."""

    pattern_id: str
    entries: tuple[tuple[Affine, Affine], ...]

    def instantiate(self, n: int) -> tuple[int, ...] | None:
        """Concrete sorted terms at length n, or None when inapplicable.

        A pattern applies at n only if every count is nonnegative, every
        value with a positive count is positive, and the total length is
        exactly n.
        """
        out: list[int] = []
        for value, count in self.entries:
            v, c = value.at(n), count.at(n)
            if c < 0:
                return None
            if c > 0:
                if v < 1:
                    return None
                out.extend([v] * c)
        if len(out) != n:
            return None
        out.sort(reverse=True)
        return tuple(out)

    def __str__(self) -> str:
        parts = []
        for value, count in self.entries:
            parts.append(f"{value}^{count}" if str(count) != "1" else f"{value}")
        return ",".join(parts)


_AFFINE = re.compile(r"^(n-(\d+)|\d+)$")


def _parse_affine(text: str) -> Affine:
    m = _AFFINE.match(text)
    if not m:
        raise InvalidInput(f"bad affine expression {text!r}")
    if m.group(2) is not None:
        return Affine(True, int(m.group(2)))
    return Affine(False, int(m.group(1)))


def _parse_pattern(pattern_id: str, body: str) -> PatternSequence:
    entries = []
    for tok in body.split(","):
        tok = tok.strip()
        value, _, count = tok.partition("^")
        entries.append((_parse_affine(value),
                        _parse_affine(count) if count else Affine(False, 1)))
    return PatternSequence(pattern_id, tuple(entries))


def _load_catalog(filename: str) -> tuple[PatternSequence, ...]:
    text = (resources.files("potk2s") / "data" / filename).read_text()
    patterns = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        pattern_id, sep, body = line.partition(":")
        if not sep:
            raise InvalidInput(f"catalog line without id: {line!r}")
        patterns.append(_parse_pattern(pattern_id.strip(), body.strip()))
    return tuple(patterns)


K24_EXCEPTIONS = _load_catalog("k24_exceptions.txt")
K25_EXCEPTIONS = _load_catalog("k25_exceptions.txt")
CATALOG = {p.pattern_id: p for p in K24_EXCEPTIONS + K25_EXCEPTIONS}

_CATALOGS = {"k24": K24_EXCEPTIONS, "k25": K25_EXCEPTIONS}


@lru_cache(maxsize=1024)
def _instantiated(catalog_key: str, n: int) -> tuple[tuple[str, tuple[int, ...]], ...]:
    out = []
    for pattern in _CATALOGS[catalog_key]:
        inst = pattern.instantiate(n)
        if inst is not None:
            out.append((pattern.pattern_id, inst))
    return tuple(out)


def match_parametric(pi, pattern: PatternSequence) -> bool:
    """True iff pi equals the pattern instantiated at n = len(pi)."""
    p = as_sequence(pi)
    return pattern.instantiate(p.n) == p.terms


def _match_catalog(p: DegreeSequence, catalog_key: str) -> str | None:
    for pattern_id, inst in _instantiated(catalog_key, p.n):
        if inst == p.terms:
            return pattern_id
    return None


@dataclass(frozen=True)
class ConditionThreeMatch:
    """One decomposition (n-l, 5^i, 4^j, 3^k, 2^t, 1^(n-7)) of a sequence."""

    l: int
    i: int
    j: int
    k: int
    t: int
    residual: tuple[int, ...]

    def as_record(self, residual_graphic: bool) -> dict:
        return {
            "l": self.l, "i": self.i, "j": self.j, "k": self.k, "t": self.t,
            "residual": format_sequence(self.residual),
            "graphic": residual_graphic,
        }


@dataclass(frozen=True)
class Verdict:
    """Boolean decision plus a structured reason trace.

    ``reason`` is "pass", "condition(1)" .. "condition(4)", or
    "exception(<catalog id>)"; ``decision`` is True exactly for "pass".
    """

    decision: bool
    reason: str
    condition: int | None = None
    matched_exception: str | None = None
    trace: tuple[dict, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        assert self.decision == (self.reason == "pass")


def condition3_decompositions(pi) -> list[ConditionThreeMatch]:
    """All decompositions of pi subject to the condition-3 side rules.

    Requires exactly n - 7 terms equal to 1, a leading term n - l >= 5
    with l in {2, 3, 4}, remaining terms in {5, 4, 3, 2} with at least one
    5 and exactly six of them.  The empty list means the shape does not
    match and the residual rule holds vacuously.
    """
    p = as_sequence(pi)
    n = p.n
    if n < 7:
        return []
    counts = Counter(p.terms)
    if counts[1] != n - 7:
        return []
    middles = {v: c for v, c in counts.items() if v != 1 and c > 0}
    out = []
    for l in (2, 3, 4):
        lead = n - l
        if lead < 5 or middles.get(lead, 0) == 0:
            continue
        rest = dict(middles)
        rest[lead] -= 1
        if any(c > 0 and v not in (5, 4, 3, 2) for v, c in rest.items()):
            continue
        i, j, k, t = (rest.get(v, 0) for v in (5, 4, 3, 2))
        if i >= 1 and i + j + k + t == 6:
            residual = (3,) * (i - 1) + (2,) * j + (1,) * (k + l - 2)
            out.append(ConditionThreeMatch(l, i, j, k, t, residual))
    return out


def necessary_residual_check(pi, l: int) -> bool:
    """Residual graphicality after removing a top-degree K_{2,5} placement.

    Writes pi as (n-l, 5^i, 4^j, 3^k, 2^t, 1^m), places K_{2,5} with the
    (n-l)-term and one 5 as centers and the five largest remaining terms
    of value >= 2 as leaves, subtracts the placed edges, then spends the
    first center's n-l-5 leftover edges on the smallest positive residual
    entries.  Returns whether the final residual is graphic; if pi is
    potentially K_{2,5}-graphic it must be.  For decompositions accepted
    by :func:`condition3_decompositions` this reproduces the residual
    (3^(i-1), 2^j, 1^(k+l-2)); shapes with fewer than n - 7 trailing ones
    are reduced by the same rule.  Raises NotApplicable when pi does not
    have the required shape at this l.
    """
    p = as_sequence(pi)
    n = p.n
    if l not in (2, 3, 4):
        raise NotApplicable(f"l must be 2, 3, or 4, got {l}")
    lead = n - l
    if lead < 5:
        raise NotApplicable(f"n-l = {lead} is below 5")
    counts = Counter(p.terms)
    if counts[lead] == 0:
        raise NotApplicable(f"no term equal to n-l = {lead}")
    counts[lead] -= 1
    ones = counts.pop(1, 0)
    middles = sorted(
        (v for v, c in counts.items() if c > 0 for _ in range(c)), reverse=True)
    if any(v not in (5, 4, 3, 2) for v in middles):
        raise NotApplicable("terms besides n-l must lie in {5, 4, 3, 2}")
    if not middles or middles[0] != 5:
        raise NotApplicable("a second center of degree 5 is required")
    middles = middles[1:]
    if len(middles) < 5:
        raise NotApplicable("fewer than five leaf candidates")
    residual = [v - 2 for v in middles[:5]] + middles[5:] + [1] * ones
    residual = sorted((v for v in residual if v > 0), reverse=True)
    spend = lead - 5
    if spend > len(residual):
        return False
    for idx in range(len(residual) - spend, len(residual)):
        residual[idx] -= 1
    return is_graphic(normalize(residual))


def _checked_input(pi, min_n: int, what: str) -> DegreeSequence:
    p = normalize(as_sequence(pi).terms)
    if p.n < min_n:
        raise OutOfScope(
            f"{what} needs at least {min_n} positive terms, got {p.n}")
    if not is_graphic(p):
        raise OutOfScope("sequence is not graphic")
    return p


def is_potentially_k25(pi) -> Verdict:
    """Decide whether some realization of pi contains K_{2,5}.

    Requires a graphic input with at least 7 positive terms; raises
    OutOfScope otherwise (small inputs can be settled by the oracle).
    """
    p = _checked_input(pi, 7, "K_{2,5} decider")
    n, d = p.n, p.terms
    trace: list[dict] = []

    ok1 = d[1] >= 5 and d[6] >= 2
    trace.append({"condition": 1, "holds": ok1, "d2": d[1], "d7": d[6]})
    if not ok1:
        return Verdict(False, "condition(1)", condition=1, trace=tuple(trace))

    applies = d[0] == n - 1 and d[1] == 5
    ok2 = not applies or (d[2] == 5 and d[6] >= 3)
    trace.append({"condition": 2, "applies": applies, "holds": ok2})
    if not ok2:
        return Verdict(False, "condition(2)", condition=2, trace=tuple(trace))

    records = []
    ok3 = True
    for m in condition3_decompositions(p):
        graphic = is_graphic(normalize(m.residual))
        records.append(m.as_record(graphic))
        ok3 = ok3 and graphic
    trace.append({"condition": 3, "holds": ok3, "decompositions": records})
    if not ok3:
        return Verdict(False, "condition(3)", condition=3, trace=tuple(trace))

    hit = _match_catalog(p, "k25")
    trace.append({"condition": 4, "holds": hit is None, "matched": hit})
    if hit is not None:
        return Verdict(False, f"exception({hit})", condition=4,
                       matched_exception=hit, trace=tuple(trace))
    return Verdict(True, "pass", trace=tuple(trace))


def is_potentially_k24(pi) -> Verdict:
    """Decide whether some realization of pi contains K_{2,4}.

    Requires a graphic input with at least 6 positive terms.
    """
    p = _checked_input(pi, 6, "K_{2,4} decider")
    n, d = p.n, p.terms
    trace: list[dict] = []

    ok1 = d[1] >= 4 and d[5] >= 2
    trace.append({"condition": 1, "holds": ok1, "d2": d[1], "d6": d[5]})
    if not ok1:
        return Verdict(False, "condition(1)", condition=1, trace=tuple(trace))

    applies = d[0] == n - 1 and d[1] == 4
    ok2 = not applies or (d[2] == 4 and d[5] >= 3)
    trace.append({"condition": 2, "applies": applies, "holds": ok2})
    if not ok2:
        return Verdict(False, "condition(2)", condition=2, trace=tuple(trace))

    hit = _match_catalog(p, "k24")
    trace.append({"condition": 3, "holds": hit is None, "matched": hit})
    if hit is not None:
        return Verdict(False, f"exception({hit})", condition=3,
                       matched_exception=hit, trace=tuple(trace))
    return Verdict(True, "pass", trace=tuple(trace))
