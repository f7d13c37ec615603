"""Two-step degree reductions certifying K_{2,s} containment.

Given a nonincreasing sequence pi = (d_1, ..., d_n) with n >= s + 2,
d_1 <= n - 2 and d_2 >= s, the reductions model committing the two
highest-degree vertices as the centers of a K_{2,s} and the next s
vertices as its leaves:

* ``rho_prime(pi, s)`` removes d_1 and discounts the edges it would send
  to the s + 1 next-largest vertices (length n - 1);
* ``rho(pi, s)`` additionally removes d_2 and the leaf edges, giving the
  degree demand left over for the rest of the graph (length n - 2).

If ``rho(pi, s)`` is graphic, some realization of pi contains K_{2,s}
(:func:`k2s_sufficient`).  The converse does not hold, so the test is
three-valued: True or inconclusive (None), never False.

Both reductions return plain sorted tuples rather than
:class:`~potk2s.seqcore.DegreeSequence`: zeros must be kept (the length
contract is part of the definition) and over-decrementing can produce
negative entries on valid inputs, in which case the result is simply not
graphic.
"""

from __future__ import annotations

from .seqcore import DegreeSequence, NotApplicable, as_sequence, is_graphic, normalize


def _validated(pi, s: int) -> list[int]:
    """Return 1-based term list after checking the reduction hypotheses."""
    if s < 2:
        raise NotApplicable(f"s must be at least 2, got {s}")
    p = as_sequence(pi)
    n = p.n
    if n < s + 2:
        raise NotApplicable(f"need n >= s+2 = {s + 2}, got n = {n}")
    if p.terms[0] > n - 2:
        raise NotApplicable(f"need d1 <= n-2 = {n - 2}, got d1 = {p.terms[0]}")
    if p.terms[1] < s:
        raise NotApplicable(f"need d2 >= s = {s}, got d2 = {p.terms[1]}")
    return [0] + list(p.terms)  # D[i] == d_i


def rho_prime(pi, s: int) -> tuple[int, ...]:
    """One-step reduction; length n - 1, sorted nonincreasing.

    Case d_2 >= s + 1: drop d_1, decrement d_2 .. d_{s+2} and the further
    terms up to index d_1 + 1.  Case d_2 == s: drop d_1, keep d_2 intact,
    decrement d_3 up to index d_1 + 2.  Empty index ranges are no-ops.
    """
    D = _validated(pi, s)
    n = len(D) - 1
    d1 = D[1]
    if D[2] >= s + 1:
        out = [D[i] - 1 for i in range(2, s + 3)]
        out += [D[i] - 1 for i in range(s + 3, d1 + 2)]
        out += [D[i] for i in range(max(s + 3, d1 + 2), n + 1)]
    else:
        out = [D[2]]
        out += [D[i] - 1 for i in range(3, d1 + 3)]
        out += [D[i] for i in range(d1 + 3, n + 1)]
    out.sort(reverse=True)
    return tuple(out)


def rho(pi, s: int) -> tuple[int, ...]:
    """Two-step reduction; length n - 2, sorted nonincreasing."""
    D = _validated(pi, s)
    n = len(D) - 1
    d1, d2 = D[1], D[2]
    if d2 >= s + 1:
        head = [D[i] - 2 for i in range(3, s + 3)]
        tail = [D[i] - 1 for i in range(s + 3, d1 + 2)]
        tail += [D[i] for i in range(max(s + 3, d1 + 2), n + 1)]
        tail.sort(reverse=True)
        # second vertex discounts the largest d2 - s - 1 remaining terms
        cut = d2 - s - 1
        out = head + [v - 1 for v in tail[:cut]] + tail[cut:]
    else:
        out = [D[i] - 2 for i in range(3, s + 3)]
        out += [D[i] - 1 for i in range(s + 3, d1 + 3)]
        out += [D[i] for i in range(d1 + 3, n + 1)]
    out.sort(reverse=True)
    return tuple(out)


def k2s_sufficient(pi, s: int) -> bool | None:
    """True when the reduced sequence is graphic, else None.

    A True answer certifies that pi is potentially K_{2,s}-graphic.  None
    means the test gives no information (hypotheses fail, the reduction
    has a negative entry, or the reduction is simply not graphic).
    """
    try:
        reduced = rho(pi, s)
    except NotApplicable:
        return None
    if reduced and min(reduced) < 0:
        return None
    return True if is_graphic(normalize(reduced)) else None
