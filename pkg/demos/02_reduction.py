"""The two-step reduction behind the K_{2,s} sufficiency test.

Committing the two largest-degree vertices as centers of a K_{2,s} and
the next s vertices as its leaves leaves behind a smaller degree demand.
If that leftover sequence is graphic, the original sequence certainly has
a realization containing K_{2,s}.  The converse fails, so an inconclusive
answer (None) carries no information.
"""

from potk2s import format_sequence, k2s_sufficient, parse_sequence, rho, rho_prime

for text in ("5^2,4^6", "5^4,4^4", "5,5,2,2,2,2,2", "6,5,4,4,4,4,4,3"):
    pi = parse_sequence(text)
    print(f"pi = {pi}")
    print(f"  after removing the top vertex:   {format_sequence(rho_prime(pi, 5))}")
    print(f"  after removing both centers:     {format_sequence(rho(pi, 5))}")
    print(f"  certifies K_(2,5) containment:   {k2s_sufficient(pi, 5)}")

# Over-decrementing is possible; the leftover then has a negative entry
# and certifies nothing.
pi = parse_sequence("5,5,2,2,2,2,1")
print(f"\npi = {pi}: leftover {rho(pi, 5)} -> {k2s_sufficient(pi, 5)}")

# (6^8) shows the one-directional nature: the reduction is inconclusive,
# yet the sequence is potentially K_(2,5)-graphic (see demo 03/04).
pi = parse_sequence("6^8")
print(f"pi = {pi}: leftover {format_sequence(rho(pi, 5))} -> {k2s_sufficient(pi, 5)}")
