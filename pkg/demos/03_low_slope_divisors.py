#!/usr/bin/env python3
"""The low-slope effective divisors and where their slopes cross 8.

Even genus uses the second-Hilbert-point divisor of slope 7 + 6/g.  Odd
genus pushes the even-genus divisor down from genus g+1 through the
elliptic-tail pullback, a product with the Weierstrass divisor, and the
forgetful pushforward; its slope has a degree-4 rational closed form.  The
slopes drop below 8 exactly at even g >= 8 and odd g >= 15, and genus 7 has
its own slope-54/7 divisor through syzygies.
"""

from hurwitzdiv import (
    best_recipe,
    odd_genus_divisor,
    odd_genus_slope,
    second_hilbert_divisor,
    slope,
    syzygy_divisor_g7,
)

print("Even genus: slope 7 + 6/g")
for g in range(6, 17, 2):
    s = second_hilbert_divisor(g).slope
    marker = "< 8" if s < 8 else ">= 8"
    print(f"  g = {g:2d}: slope = {str(s):8s} {marker}")

print()
print("Odd genus: the pushforward pipeline, exact all the way")
for g in range(5, 22, 2):
    s = odd_genus_slope(g)
    marker = "< 8" if s < 8 else ">= 8"
    print(f"  g = {g:2d}: slope = {str(s):14s} (~{float(s):.6f}) {marker}")

print()
g = 5
recipe = odd_genus_divisor(g)
print(f"The genus-{g} pushforward divisor, coefficient by coefficient:")
for label, value in recipe.divisor_class.coeffs:
    print(f"  {label:10s} {value}")
print(f"  slope {recipe.slope} recomputed from the class: {slope(recipe.divisor_class)}")

print()
print("Genus 7, via the first syzygy point:")
rec = syzygy_divisor_g7()
print(f"  slope {rec.slope}, hypotheses:")
for h in rec.hypotheses:
    print(f"    - {h}")

print()
print("Recipe selection for (g, k) cells:")
for g, k in ((8, 3), (13, 3), (15, 3), (7, 4), (7, 5), (6, 4)):
    rec = best_recipe(g, k)
    name = rec.name if rec else "none available"
    extra = f", slope {rec.slope}" if rec else ""
    print(f"  (g={g:2d}, k={k}): {name}{extra}")
