"""Extremal sums: how large must the degree sum be to force K_{2,5}?

sigma(K_{2,5}, n) is the smallest even integer such that every n-term
positive graphic sequence with at least that sum has a realization
containing K_{2,5}.  Exhaustive sweeps fix the value at small n; for
large n the closed form 5n-3 (odd) / 5n-2 (even) is supported by witness
sequences and by checking that no exception shape reaches it.
"""

from potk2s import (
    run_sweep,
    sigma_formula_consistency,
    witness_check,
)

# Full classification at n = 7: decider and oracle on every sequence.
rep = run_sweep(7, target="k25", mode="both")
print(f"n=7: {rep.total_sequences} graphic positive sequences, "
      f"{rep.potentially_count} potentially K_(2,5)-graphic, "
      f"{len(rep.not_potentially)} not, {len(rep.mismatches)} mismatches")
print(f"     sigma(K_(2,5), 7) = {rep.sigma_extremal}  "
      f"(the closed form would give {5 * 7 - 3}; it only starts at n = 37)")
print("     largest sequences without the property:")
for row in rep.not_potentially[:3]:
    print(f"       {row['sequence']}  (sum {row['sigma']}, {row['reason']})")

# The witness sequences that make the closed form tight.
print()
for n in (37, 38):
    r = witness_check(n)
    print(f"n={n} ({r.parity}): {r.sequence} has sum {r.sigma}, is graphic, "
          f"fails via {r.reason}; bound sigma >= {r.implied_bound}")

# No low-sum obstruction reaches the formula value.
print()
for rep in sigma_formula_consistency(37, 40):
    print(f"n={rep.n}: formula {rep.formula}, largest exception sum "
          f"{rep.max_exception_sigma}, largest condition-3 shape sum "
          f"{rep.max_condition3_sigma} -> ok={rep.ok}")
