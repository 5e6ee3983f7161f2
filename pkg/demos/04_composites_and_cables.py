"""Composites and cables, and how their invariants decompose.

Composition concatenates two words after renaming; cabling replaces the curve
by n parallel strands joined into one.  Both have exact formulas relating
their invariants to the inputs, checked here on the spot.
"""

import math

from vstring import (
    based_matrix,
    bm_isomorphic,
    cable,
    cable_reduced_based_matrix,
    compose,
    composite_based_matrix,
    covering,
    isomorphic,
    parse,
    primitive_based_matrix,
    reduce_to_primitive,
    rho,
    u_polynomial,
)

a = parse("ABACDBDC|abbb")
b = parse("ABACBC|abb")
c = compose(a, b)
print("compose:", c)
print("u additive:", u_polynomial(c) == u_polynomial(a) + u_polynomial(b))

# The composite's based matrix is block-diagonal up to a mixed block that
# depends only on letter types and weights.
predicted = composite_based_matrix(based_matrix(a), a.types(), based_matrix(b), b.types())
print("block formula matches:", (predicted.pairing == based_matrix(c).pairing).all())

# Cabling: rank k n^2 + n - 1, u-polynomial n^2 u(t^n).
w = parse("ABCACB|aaa")
for n in (2, 3):
    cab = cable(w, n)
    print(f"\n{n}-cable rank: {cab.rank} = {w.rank}*{n}^2 + {n} - 1")
    print("  u:", u_polynomial(cab), "=", u_polynomial(w).cable_transform(n))

# Covers of cables are cables of covers (with the index divided out).
n, r = 2, 4
k = 0 if r == 0 else r // math.gcd(n, r)
print("\ncover/cable commutation (n=2, r=4, k=2):",
      isomorphic(covering(cable(w, n), r), cable(covering(w, k), n)))

# The cable's primitive based matrix is computable from the original's
# primitive based matrix alone: cabling never adds separating power.
q = cable_reduced_based_matrix(primitive_based_matrix(w), 2)
lhs, _ = reduce_to_primitive(q)
rhs = primitive_based_matrix(cable(w, 2))
print("cable based matrix from the primitive core alone:", bm_isomorphic(lhs, rhs))
print("rho bound: rho(cable) =", rhs.size - 1, "<= 4*rho + 1 =", 4 * rho(w) + 1)
