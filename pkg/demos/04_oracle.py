"""The brute-force realization oracle.

Everything the deciders claim can be checked at small n by direct search
over realizations.  The oracle enumerates labeled graphs with a given
degree vector, tests subgraph containment, and returns a witness graph
when one exists.
"""

from potk2s import (
    contains_k2s,
    enumerate_realizations,
    is_potentially_subgraph,
    parse_sequence,
)

# (2,2,2,2) has exactly three labeled realizations: the three 4-cycles.
graphs = []
enumerate_realizations(parse_sequence("2^4"), lambda G: graphs.append(G.edges()) and False)
print("realizations of 2^4:")
for edges in graphs:
    print("  ", edges)

# A positive query returns a concrete witness realization.
r = is_potentially_subgraph(parse_sequence("5^2,2^5"), "k2s", 5)
print(f"\n5^2,2^5 -> {r.status}")
print("  witness edges:", r.witness.edges())
print("  witness contains K_(2,5):", contains_k2s(r.witness, 5))

# A negative query performs a complete search over all ways to place the
# subgraph; compare with the naive enumerate-everything strategy.
for text in ("5^2,2^6", "7,5^3,2^5"):
    fast = is_potentially_subgraph(parse_sequence(text), "k2s", 5)
    slow = is_potentially_subgraph(parse_sequence(text), "k2s", 5,
                                   strategy="enumerate")
    count = enumerate_realizations(parse_sequence(text), lambda G: False)
    print(f"\n{text}: placement -> {fast.status}, enumerate -> {slow.status}")
    print(f"  (the sequence has {count.realizations} realizations, "
          f"none containing K_(2,5))")
