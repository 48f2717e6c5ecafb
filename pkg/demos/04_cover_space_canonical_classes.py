#!/usr/bin/env python3
"""Boundary classes on the compactified cover space and its canonical class.

The space of degree-k covers of a line with b = 2g + 2k - 2 ordered simple
branch points is stratified by boundary divisors indexed by (i, mu): i
branch points on one side of the degenerate target and fibre type mu over
the node.  The branch map to the genus-0 space is ramified with order
lcm(mu) along each divisor, which determines the pullback of boundary
classes, the ramification divisor, and with them the canonical class.  The
coarse moduli space loses one more unit along the indices carrying a 2:1
component.
"""

from hurwitzdiv import (
    boundary_index_set,
    branch_pullback,
    canonical_class_coarse,
    canonical_class_m0b,
    canonical_class_stack,
    hodge_class,
    kappa1_m0b,
    ramification_class,
)

g, k = 2, 3
b = 2 * g + 2 * k - 2
print(f"Cover space with g = {g}, k = {k} (so b = {b}):")
print("feasible boundary indices (i, mu):")
for index in boundary_index_set(g, k):
    print(f"  i = {index.i}, mu = {index.mu}")

print()
print("Hodge class in boundary coordinates:")
for (i, parts), value in hodge_class(g, k).coeffs:
    print(f"  i={i} mu={list(parts)}: {value}")

print()
print("Canonical class of the stack, two ways:")
stack = canonical_class_stack(g, k)
pipeline = branch_pullback(g, k, canonical_class_m0b(b)) + ramification_class(g, k)
assert stack == pipeline
for (i, parts), value in stack.coeffs:
    print(f"  i={i} mu={list(parts)}: {value}")
print("  (closed form == branch pullback of the base canonical + ramification)")

print()
print("Coarse moduli space: one unit less along 2:1 branch indices")
coarse = canonical_class_coarse(g, k)
for (i, parts), value in coarse.coeffs:
    mark = "  <- corrected" if (i, parts) in coarse.branch_marks else ""
    print(f"  i={i} mu={list(parts)}: {value}{mark}")

print()
print("The pulled-back kappa1 is strictly positive on every index:")
pulled = branch_pullback(g, k, kappa1_m0b(b))
for (i, parts), value in pulled.coeffs:
    assert value > 0
    print(f"  i={i} mu={list(parts)}: {value}")
print("  (this is what lets certificates absorb zero margins)")
