"""Brute-force realization search: the ground-truth referee.

Everything here is elementary and complete, so it can certify the
characterization deciders on small instances:

* :func:`enumerate_realizations` backtracks over the upper-triangular
  adjacency matrix row by row, visiting every labeled simple graph whose
  degree vector equals the query (vertices pre-sorted by target degree),
  pruning branches whose residual degree multiset is infeasible.
* :func:`is_potentially_subgraph` decides whether some realization
  contains K_{2,s} or K_{1,s}.  The default "placement" strategy fixes
  the subgraph's vertices first (one canonical choice per degree-class
  assignment, which is exhaustive up to relabeling vertices of equal
  degree) and then searches for a realization of the leftover degrees
  that avoids the placed edges; it is complete and fast enough for
  exhaustive sweeps.  The "enumerate" strategy instead walks every
  realization and tests containment, and is kept as the naive reference
  the placement strategy is validated against.

Budgets are counted in backtracking nodes.  Exceeding a budget is a
first-class outcome (never silently reported as a negative).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .seqcore import InvalidInput, as_sequence, is_graphic

DEFAULT_BUDGET = 10**8
MAX_ORACLE_N = 12


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled simple graph; ``adj[v]`` is a neighbor bitmask."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if (self.adj[u] >> v) & 1]


@dataclass(frozen=True)
class OracleResult:
    """Outcome of a containment query.

    ``status`` is "found_witness", "exhausted_no_witness", or
    "budget_exceeded"; ``witness`` is a realization containing the target
    exactly when a witness was found.
    """

    status: str
    witness: SimpleGraph | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status == "found_witness"


def contains_k2s(G: SimpleGraph, s: int) -> bool:
    """True iff two vertices of G share at least s common neighbors.

    The two centers need not be adjacent; common neighbors never include
    the centers themselves.
    """
    for u in range(G.n):
        au = G.adj[u]
        for v in range(u + 1, G.n):
            if (au & G.adj[v]).bit_count() >= s:
                return True
    return False


def contains_k1s(G: SimpleGraph, s: int) -> bool:
    """True iff G has a vertex of degree at least s."""
    return any(a.bit_count() >= s for a in G.adj)


@lru_cache(maxsize=262144)
def _residual_feasible(desc: tuple[int, ...]) -> bool:
    """Erdos-Gallai feasibility of a residual degree multiset.

    Sound for the forbidden-edge search too: a constrained realization is
    in particular an unconstrained one.
    """
    t = [x for x in desc if x > 0]
    n = len(t)
    if not t:
        return True
    if sum(t) % 2 or t[0] > n - 1:
        return False
    pref = 0
    for k in range(1, n + 1):
        pref += t[k - 1]
        if pref > k * (k - 1) + sum(min(x, k) for x in t[k:]):
            return False
    return True


def _residual_basic(desc: tuple[int, ...]) -> bool:
    """Parity and max-degree bound only; used where the search itself
    must stay independent of the Erdos-Gallai test."""
    if not desc:
        return True
    return sum(desc) % 2 == 0 and desc[0] <= len(desc) - 1


_PRUNES = {"eg": _residual_feasible, "basic": _residual_basic}


def _backtrack(res: list[int], forbidden: list[int], budget: int,
               prune: str, visit) -> tuple[str, int, int]:
    """Complete row-major search over graphs with residual degrees res.

    ``forbidden[i]`` is a bitmask of vertices that may never be adjacent
    to i.  ``visit`` receives the adjacency list at every completed graph
    and may return True to stop early.  Returns (status, graphs, nodes)
    where status is "complete", "stopped", or "budget_exceeded".
    """
    n = len(res)
    adj = [0] * n
    feasible = _PRUNES[prune]
    nodes = 0
    graphs = 0
    status = "complete"

    def rec(i: int) -> bool:
        nonlocal nodes, graphs, status
        while i < n and res[i] == 0:
            i += 1
        if i >= n:
            graphs += 1
            return bool(visit(adj))
        need = res[i]
        forb = forbidden[i]
        cands = [j for j in range(i + 1, n)
                 if res[j] > 0 and not (forb >> j) & 1]
        if len(cands) < need:
            return False
        for chosen in combinations(cands, need):
            nodes += 1
            if nodes > budget:
                status = "budget_exceeded"
                return True
            for j in chosen:
                res[j] -= 1
            if feasible(tuple(sorted(res[i + 1:], reverse=True))):
                mask = 0
                for j in chosen:
                    mask |= 1 << j
                    adj[j] |= 1 << i
                adj[i] |= mask
                if rec(i + 1):
                    return True
                adj[i] &= ~mask
                for j in chosen:
                    adj[j] &= ~(1 << i)
            for j in chosen:
                res[j] += 1
        return False

    stopped = rec(0)
    if status == "complete" and stopped:
        status = "stopped"
    return status, graphs, nodes


@dataclass(frozen=True)
class EnumerationResult:
    status: str  # "complete" | "stopped" | "budget_exceeded"
    realizations: int
    nodes: int


def enumerate_realizations(pi, visitor, *, budget: int = DEFAULT_BUDGET,
                           max_n: int = MAX_ORACLE_N, prune: str = "eg",
                           check_input: bool = True) -> EnumerationResult:
    """Visit every labeled realization of pi (vertices sorted by degree).

    ``visitor(G)`` may return True to stop the enumeration early.  The
    enumeration is exhaustive whenever the returned status is not
    "budget_exceeded"; with ``check_input`` a non-graphic pi raises
    InvalidInput instead of enumerating nothing.
    """
    p = as_sequence(pi)
    if p.n > max_n:
        raise InvalidInput(f"n = {p.n} exceeds the oracle ceiling {max_n}")
    if check_input and not is_graphic(p):
        raise InvalidInput(f"{p} is not graphic")
    status, graphs, nodes = _backtrack(
        list(p.terms), [0] * p.n, budget, prune,
        lambda adj: visitor(SimpleGraph(p.n, tuple(adj))))
    return EnumerationResult(status, graphs, nodes)


def realization_exists(pi, *, budget: int = DEFAULT_BUDGET,
                       prune: str = "basic") -> bool:
    """Whether any simple graph realizes pi, by direct search.

    Uses only parity/max-degree pruning by default so the result does not
    lean on the Erdos-Gallai test it is cross-checked against.
    """
    result = enumerate_realizations(
        pi, lambda G: True, budget=budget, prune=prune, check_input=False)
    if result.status == "budget_exceeded":
        raise InvalidInput("existence search exceeded its budget")
    return result.status == "stopped"


def _bounded_multisets(values: list[int], k: int, avail: Counter):
    """Nonincreasing k-tuples drawn from values with multiplicities."""
    values = sorted(values, reverse=True)

    def rec(idx: int, left: int, cur: list[int]):
        if left == 0:
            yield tuple(cur)
            return
        if idx == len(values):
            return
        v = values[idx]
        top = min(left, avail[v])
        for take in range(top, -1, -1):
            cur.extend([v] * take)
            yield from rec(idx + 1, left - take, cur)
            if take:
                del cur[-take:]

    yield from rec(0, k, [])


def _placements(terms: tuple[int, ...], n_centers: int, center_min: int,
                n_leaves: int, leaf_min: int):
    """Canonical subgraph placements, one per degree-class assignment.

    Vertices of equal target degree are interchangeable in any
    realization, so trying one canonical position choice per multiset of
    center degrees and leaf degrees is exhaustive.
    """
    counts = Counter(terms)
    positions: dict[int, list[int]] = {}
    for idx, v in enumerate(terms):
        positions.setdefault(v, []).append(idx)
    center_values = [v for v in counts if v >= center_min]
    for cm in _bounded_multisets(center_values, n_centers, counts):
        rem = counts - Counter(cm)
        leaf_values = [v for v in rem if v >= leaf_min and rem[v] > 0]
        for lm in _bounded_multisets(leaf_values, n_leaves, rem):
            taken: Counter = Counter()
            centers = []
            for v in cm:
                centers.append(positions[v][taken[v]])
                taken[v] += 1
            leaves = []
            for v in lm:
                leaves.append(positions[v][taken[v]])
                taken[v] += 1
            yield centers, leaves


def _search_with_placement(p, centers, leaves, budget: int):
    """Find a realization containing the placed star/biclique edges."""
    res = list(p.terms)
    forbidden = [0] * p.n
    placed = []
    for c in centers:
        for w in leaves:
            placed.append((c, w))
            res[c] -= 1
            res[w] -= 1
            forbidden[c] |= 1 << w
            forbidden[w] |= 1 << c
    if min(res) < 0 or not _residual_feasible(tuple(sorted(res, reverse=True))):
        return None, 0
    holder: list[SimpleGraph] = []

    def grab(adj):
        holder.append(SimpleGraph(p.n, tuple(adj)))
        return True

    status, _, nodes = _backtrack(res, forbidden, budget, "eg", grab)
    if status == "budget_exceeded":
        raise _Budget(nodes)
    if status == "stopped":
        witness = SimpleGraph.from_edges(p.n, holder[0].edges() + placed)
        return witness, nodes
    return None, nodes


class _Budget(Exception):
    def __init__(self, nodes: int):
        self.nodes = nodes


def is_potentially_subgraph(pi, target: str, s: int, *,
                            budget: int = DEFAULT_BUDGET,
                            max_n: int = MAX_ORACLE_N,
                            strategy: str = "placement",
                            top_degrees_only: bool = False) -> OracleResult:
    """Search realizations of pi for K_{2,s} (target "k2s") or K_{1,s}
    ("k1s").

    Returns found_witness with a full realization containing the target,
    exhausted_no_witness after a complete search, or budget_exceeded.
    With ``top_degrees_only`` the placement strategy restricts the target
    vertices to the largest degree values of pi.
    """
    if s < 1:
        raise InvalidInput(f"s must be positive, got {s}")
    if target not in ("k2s", "k1s"):
        raise InvalidInput(f"unknown target {target!r}")
    p = as_sequence(pi)
    if p.n > max_n:
        raise InvalidInput(f"n = {p.n} exceeds the oracle ceiling {max_n}")
    if not is_graphic(p):
        raise InvalidInput(f"{p} is not graphic")
    n_centers = 2 if target == "k2s" else 1
    size = n_centers + s
    if p.n < size:
        return OracleResult("exhausted_no_witness", None, 0)
    contains = contains_k2s if target == "k2s" else contains_k1s

    if strategy == "enumerate":
        holder: list[SimpleGraph] = []

        def check(G):
            if contains(G, s):
                holder.append(G)
                return True
            return False

        result = enumerate_realizations(p, check, budget=budget, max_n=max_n,
                                        check_input=False)
        status = {"stopped": "found_witness",
                  "complete": "exhausted_no_witness",
                  "budget_exceeded": "budget_exceeded"}[result.status]
        witness = holder[0] if holder else None
        if witness is not None:
            assert witness.degree_sequence() == p.terms
        return OracleResult(status, witness, result.nodes)

    if strategy != "placement":
        raise InvalidInput(f"unknown strategy {strategy!r}")
    leaf_min = 2 if target == "k2s" else 1
    top = tuple(sorted(p.terms[:size], reverse=True))
    total_nodes = 0
    for centers, leaves in _placements(p.terms, n_centers, s, s, leaf_min):
        if top_degrees_only:
            chosen = tuple(sorted((p.terms[v] for v in centers + leaves),
                                  reverse=True))
            if chosen != top:
                continue
        try:
            witness, nodes = _search_with_placement(p, centers, leaves,
                                                    budget - total_nodes)
        except _Budget as exc:
            return OracleResult("budget_exceeded", None,
                                total_nodes + exc.nodes)
        total_nodes += nodes
        if witness is not None:
            assert witness.degree_sequence() == p.terms
            assert contains(witness, s)
            return OracleResult("found_witness", witness, total_nodes)
    return OracleResult("exhausted_no_witness", None, total_nodes)
