"""Degree sequences and graphicality tests.

A *degree sequence* here is a nonincreasing tuple of nonnegative integers.
Graphicality (realizability as the degree sequence of a simple graph) is
decided by two independent, mutually cross-checked methods:

* :func:`is_graphic` repeatedly lays off the smallest term.  Laying off a
  term preserves realizability exactly, so the recursion terminates at the
  empty sequence iff the input is graphic.
* :func:`is_graphic_eg` evaluates the Erdos-Gallai inequalities.

Three shortcut tests (:func:`is_graphic_terms_le2`,
:func:`is_graphic_terms_le3`, :func:`is_graphic_terms_le4`) decide
graphicality in closed form for restricted term shapes and return ``None``
outside their hypotheses.

The module also owns the shared text grammar for sequences: plain
whitespace/comma separated integers, run-length tokens ``value^count``, or
a mix of both ("5^2,2^5" and "5 5 2 2 2 2 2" parse to the same sequence).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby
from typing import Iterable


class InvalidInput(ValueError):
    """An argument cannot be a degree sequence, index, or token."""


class NotApplicable(ValueError):
    """A construction's hypotheses do not hold for the given input."""


class OutOfScope(ValueError):
    """A decider was asked about an input outside its characterized range."""


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing sequence of nonnegative integer degrees.

    Zeros are permitted (some constructions produce them); use
    :func:`normalize` to build a zero-free instance from raw input.
    ``raw_length`` records the length before zero-stripping when the
    instance came from :func:`normalize`.
    """

    terms: tuple[int, ...]
    raw_length: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        t = self.terms
        if any(x < 0 for x in t):
            raise InvalidInput(f"negative degree in {t}")
        if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
            raise InvalidInput(f"terms not nonincreasing: {t}")

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def sigma(self) -> int:
        return sum(self.terms)

    def d(self, i: int) -> int:
        """1-based accessor: ``d(1)`` is the largest term."""
        if not 1 <= i <= len(self.terms):
            raise InvalidInput(f"index {i} out of range 1..{len(self.terms)}")
        return self.terms[i - 1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return format_sequence(self.terms)


def normalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort nonincreasing and strip zero terms.

    Zero terms are isolated vertices and never affect realizability.
    Raises :class:`InvalidInput` on negative entries.
    """
    values = list(raw)
    if any(v < 0 for v in values):
        raise InvalidInput(f"negative degree in {values}")
    stripped = sorted((v for v in values if v > 0), reverse=True)
    return DegreeSequence(tuple(stripped), raw_length=len(values))


def as_sequence(pi) -> DegreeSequence:
    """Coerce a :class:`DegreeSequence` or raw iterable of ints."""
    return pi if isinstance(pi, DegreeSequence) else normalize(pi)


def layoff(pi: DegreeSequence, k: int) -> DegreeSequence:
    """Residual sequence after laying off the k-th term (1-based).

    The term ``d_k`` is removed and ``d_k`` other terms are decremented:
    the largest terms skipping position k itself when ``d_k >= k``, the
    first ``d_k`` terms when ``d_k < k``.  The result is re-sorted and has
    length ``n - 1``.  Realizability is preserved exactly, for every k.
    """
    pi = as_sequence(pi)
    d = list(pi.terms)
    n = len(d)
    if not 1 <= k <= n:
        raise InvalidInput(f"k={k} out of range 1..{n}")
    dk = d[k - 1]
    if dk > n - 1:
        raise InvalidInput(f"d_{k}={dk} exceeds n-1={n - 1}")
    if dk >= k:
        out = [d[i] - 1 for i in range(k - 1)]
        out += [d[i] - 1 for i in range(k, dk + 1)]
        out += d[dk + 1:]
    else:
        out = [d[i] - 1 for i in range(dk)]
        out += d[dk:k - 1]
        out += d[k:]
    if out and min(out) < 0:
        raise InvalidInput(
            f"cannot lay off d_{k}={dk}: fewer than {dk} positive partners")
    out.sort(reverse=True)
    return DegreeSequence(tuple(out))


def is_graphic(pi) -> bool:
    """Graphicality via the laying-off recursion (smallest term first)."""
    terms = [t for t in as_sequence(pi).terms if t > 0]
    if sum(terms) % 2:
        return False
    while terms:
        if terms[0] > len(terms) - 1:
            return False
        q = terms.pop()
        for i in range(q):
            terms[i] -= 1
        terms.sort(reverse=True)
        while terms and terms[-1] == 0:
            terms.pop()
    return True


@lru_cache(maxsize=262144)
def _eg_feasible(desc: tuple[int, ...]) -> bool:
    """Erdos-Gallai test on a nonincreasing tuple (zeros allowed)."""
    t = [x for x in desc if x > 0]
    n = len(t)
    if not t:
        return True
    if sum(t) % 2 or t[0] > n - 1:
        return False
    pref = 0
    for k in range(1, n + 1):
        pref += t[k - 1]
        bound = k * (k - 1) + sum(min(x, k) for x in t[k:])
        if pref > bound:
            return False
    return True


def is_graphic_eg(pi) -> bool:
    """Graphicality via the Erdos-Gallai inequalities.

    Agrees with :func:`is_graphic` on every input; kept as an independent
    second method for cross-validation.
    """
    return _eg_feasible(as_sequence(pi).terms)


def is_graphic_terms_le2(pi) -> bool | None:
    """Shortcut for sequences whose positive terms are 1s and 2s.

    Applicable when the largest positive term is at most 2, the smallest
    positive term is 1, and the sum is even; such sequences are always
    graphic (disjoint paths).  Returns ``None`` when not applicable.
    """
    pos = as_sequence(pi).terms
    if not pos:
        return None
    if pos[0] <= 2 and pos[-1] == 1 and sum(pos) % 2 == 0:
        return True
    return None


def is_graphic_terms_le3(pi) -> bool | None:
    """Shortcut for positive sequences with all terms at most 3.

    Applicable when there are at least 4 positive terms, the sum is even,
    and the largest term is at most 3.  Exactly two such sequences fail to
    be graphic: (3,3,3,1) and (3,3,1,1).
    """
    t = as_sequence(pi).terms
    if len(t) < 4 or t[0] > 3 or sum(t) % 2:
        return None
    return t not in ((3, 3, 3, 1), (3, 3, 1, 1))


# The thirteen non-graphic sequences of shape (4^x, 3^y, 2^z, 1^m).
_SHAPE4_NON_GRAPHIC = {
    (4, 3, 3, 1, 1), (4, 3, 1, 1, 1), (4, 4, 2, 1, 1), (4, 4, 3, 2, 1),
    (4, 4, 4, 1, 1), (4, 4, 4, 2, 2), (4, 4, 4, 3, 1), (4, 4, 4, 4, 2),
    (4, 4, 3, 1, 1, 1), (4, 4, 1, 1, 1, 1), (4, 4, 4, 2, 1, 1),
    (4, 4, 4, 4, 1, 1), (4, 4, 4, 1, 1, 1, 1),
}


def is_graphic_terms_le4(pi) -> bool | None:
    """Shortcut for sequences of shape (4^x, 3^y, 2^z, 1^m) with x >= 1.

    Applicable when the largest term is exactly 4, there are at least 5
    positive terms, and the sum is even.  Graphic unless the sequence is
    one of thirteen exceptional cases.
    """
    t = as_sequence(pi).terms
    if len(t) < 5 or not t or t[0] != 4 or sum(t) % 2:
        return None
    return t not in _SHAPE4_NON_GRAPHIC


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse the shared sequence grammar into a normalized sequence.

    Accepts whitespace- or comma-separated integers, run-length tokens
    ``value^count``, or a mix: ``"5^2,2^5"`` and ``"5 5 2 2 2 2 2"`` both
    give (5,5,2,2,2,2,2).
    """
    values: list[int] = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise InvalidInput(f"malformed token {tok!r}")
        base = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count > 10**6:
            raise InvalidInput(f"count overflow in token {tok!r}")
        values.extend([base] * count)
    return normalize(values)


def format_sequence(terms: Iterable[int]) -> str:
    """Render terms in run-length form, e.g. (5,5,2,2,2,2,2) -> "5^2,2^5"."""
    parts = []
    for value, group in groupby(terms):
        count = sum(1 for _ in group)
        parts.append(f"{value}^{count}" if count > 1 else f"{value}")
    return ",".join(parts)
