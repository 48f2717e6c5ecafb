#!/usr/bin/env python3
"""Divisor classes on the moduli targets: bases, standard classes, slope.

Four spaces carry named bases here.  On the genus-0 pointed space the
canonical class and the ample kappa1 class have explicit boundary
expansions, and positivity of all boundary coefficients certifies bigness.
On the genus-g space the slope of a class a*lambda - sum b_i delta_i is
a / min b_i.  The pseudo-stable model (cusps instead of elliptic tails) has
its own basis, related to the stable one by an explicit pullback.
"""

from fractions import Fraction

from hurwitzdiv import (
    DivisorClass,
    canonical_class_m0b,
    is_big_boundary_positive,
    kappa1_m0b,
    pseudostable_pullback,
    slope,
    space_mg,
    space_mg_pseudostable,
    weierstrass_class,
)

b = 8
print(f"Genus-0 space with {b} marked points:")
print(f"  canonical class: {dict(canonical_class_m0b(b).coeffs)}")
print(f"  kappa1:          {dict(kappa1_m0b(b).coeffs)}")
big, alpha = is_big_boundary_positive(kappa1_m0b(b))
print(f"  kappa1 big? {big} (largest ample coefficient alpha = {alpha})")
big, alpha = is_big_boundary_positive(canonical_class_m0b(b))
print(f"  canonical big by this test? {big} (some coefficients are negative)")

print()
print("Slope on the genus-7 space:")
syzygy_like = DivisorClass.make(
    space_mg(7),
    {"lambda": Fraction(54, 7), "delta_0": -1, "delta_1": -1, "delta_2": -1, "delta_3": -1},
)
print(f"  class {dict(syzygy_like.coeffs)}")
print(f"  slope = {slope(syzygy_like)}  (54/7 = 7 + 5/7 < 8)")

print()
g = 5
print(f"Weierstrass-point divisor on the one-pointed genus-{g} space:")
print(f"  {dict(weierstrass_class(g).coeffs)}")

print()
g = 6
s = 7 + Fraction(6, g)
print(f"Pseudo-stable pullback, genus {g}: start from ({s})*lambda_ps - delta_ps")
ps = DivisorClass.make(
    space_mg_pseudostable(g),
    {"lambda_ps": s, "delta_0_ps": -1, "delta_2_ps": -1, "delta_3_ps": -1},
)
pulled = pseudostable_pullback(ps)
print(f"  pulls back to {dict(pulled.coeffs)}")
print(f"  note the delta_1 coefficient {pulled.coefficient('delta_1')} = (7 + 6/g) - 12")
