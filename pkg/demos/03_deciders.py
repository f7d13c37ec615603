"""Deciding the potentially K_{2,4} / K_{2,5} properties exactly.

The deciders check degree thresholds, a residual rule for one parametric
shape family, and a finite exception catalog, and return a verdict with a
structured reason trace.
"""

import json

from potk2s import is_potentially_k24, is_potentially_k25, parse_sequence

cases = [
    "5^2,2^5",            # the degree sequence of K_{2,5} itself
    "5^2,2^6",            # one extra leaf: a catalog exception
    "6,5^4,3^2",          # a parametric exception at n = 7
    "8,5,5,5,5,3,2,1,1,1",  # fails the residual rule (condition 3)
    "8,5,4^6,3",          # the odd-n extremal witness: fails condition 2
    "6^3,5^2,4,2^2",      # passes everything
    "7,5^3,2^5",          # exception found by exhaustive search
]
for text in cases:
    v = is_potentially_k25(parse_sequence(text))
    print(f"{text:22s} -> {str(v.decision):5s} {v.reason}")

print()
v = is_potentially_k25(parse_sequence("8,5,5,5,5,3,2,1,1,1"))
print("trace of the condition-3 failure:")
print(json.dumps(v.trace[-1], indent=2))

print()
for text in ("4,4,2,2,2,2", "4^2,2^5", "6,4,3,3,2,2,2"):
    v = is_potentially_k24(parse_sequence(text))
    print(f"{text:22s} -> K_(2,4): {str(v.decision):5s} {v.reason}")
