"""Graphicality of degree sequences, three ways.

A nonincreasing sequence of nonnegative integers is graphic when some
simple graph has exactly those vertex degrees.  This walk-through parses
sequences from text, tests them with the laying-off recursion and the
Erdos-Gallai inequalities, and shows the closed-form shortcuts for
low-degree shapes.
"""

from potk2s import (
    is_graphic,
    is_graphic_eg,
    is_graphic_terms_le2,
    is_graphic_terms_le3,
    is_graphic_terms_le4,
    layoff,
    parse_sequence,
)

# The run-length grammar: 5^2,2^5 is two fives followed by five twos.
pi = parse_sequence("5^2,2^5")
print(f"{pi}: n={pi.n}, sum={pi.sigma}")
print("  laying-off verdict: ", is_graphic(pi))
print("  Erdos-Gallai verdict:", is_graphic_eg(pi))

# Laying off the k-th term removes it and spends its degree on the other
# terms; the result is graphic iff the original was.  Watch a full chain.
seq = parse_sequence("6,5,4^4,3")
print(f"\nlayoff chain from {seq}:")
while seq.n:
    seq = layoff(seq, seq.n)
    print("  ->", seq or "(empty)")
print("reaching the empty sequence means the original was graphic")

# A failing example: (3,3,3,1) wants three degree-3 vertices but only
# four vertices in total, one of which has a single edge.
bad = parse_sequence("3^3,1")
print(f"\n{bad}: graphic={is_graphic(bad)}")

# Shortcuts for restricted shapes return None outside their hypotheses.
for text in ("2,2,1,1", "3,3,1,1", "4,4,4,2,2,2", "4^4,2", "7,2,1"):
    s = parse_sequence(text)
    print(f"{str(s):14s} le2={is_graphic_terms_le2(s)!s:5s} "
          f"le3={is_graphic_terms_le3(s)!s:5s} le4={is_graphic_terms_le4(s)!s:5s} "
          f"full={is_graphic(s)}")
