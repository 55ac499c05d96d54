"""Walk through the group-ring objects for a single prime.

Run: python demos/stickelberger_identities.py [p]
"""

import sys

from stickelberger.arith import multiplicative_order, primitive_root
from stickelberger.groupring import (
    GroupRingElt,
    delta_coeffs,
    polynomial_P,
    polynomial_Q,
    polynomial_Q1_factorization,
    polynomial_S2,
    stickelberger_S,
)

p = int(sys.argv[1]) if len(sys.argv) > 1 else 13
v = primitive_root(p)
print(f"p = {p}, smallest primitive root v = {v}")
print()

s = stickelberger_S(p, v)
big_p = polynomial_P(p, v)
print("S  built from sum of t * w_t^(-1):", s.coeffs)
print("P  built from sum of sigma^i v^(-i):", big_p.coeffs)
print("S == P:", s == big_p)
print("coefficient sum:", s.coefficient_sum(), "= p(p-1)/2 =", p * (p - 1) // 2)
print()

deltas = delta_coeffs(p, v)
print("delta:", deltas)
q_elt = polynomial_Q(p, v)
sigma_minus_v = GroupRingElt.sigma_power(p, 1) - GroupRingElt.from_int(p, v)
print("P * (sigma - v) == p * Q:", big_p * sigma_minus_v == q_elt * p)

q1, ok = polynomial_Q1_factorization(p, v)
print("Q1:", q1.coeffs)
print("Q == Q1 * (1 + sigma + ... + sigma^((p-3)/2)):", ok)
print()

for q in (2, 3, 5):
    if q == p:
        continue
    try:
        s2 = polynomial_S2(p, q, v)
    except ValueError as exc:
        print(f"q = {q}: {exc}")
        continue
    m = (p - 1) // multiplicative_order(q, p)
    print(f"q = {q}: S2 coefficients {s2.coeffs[:m]} (p * sum = {p * s2.coefficient_sum()})")
