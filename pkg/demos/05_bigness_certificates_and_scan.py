#!/usr/bin/env python3
"""Bigness certificates: per-index margins, the ample coefficient, scans.

Given a slope-s divisor (s < 8) missing the k-gonal locus, the canonical
class of the cover space decomposes into an ample part, the pullback of
s*lambda - delta, and an effective remainder, provided one exact inequality
holds per boundary index.  A certificate records every margin, the largest
admissible ample coefficient alpha, and the geometric hypotheses assumed.
The coarse space is checked in the slope-8 limit, where a known list of
indices sits exactly at margin zero and is absorbed by the ample part.
"""

from hurwitzdiv import best_recipe, scan, verify_coarse, verify_stack

g, k = 8, 3
recipe = best_recipe(g, k)
print(f"Stack certificate for (g, k) = ({g}, {k}), divisor {recipe.name}, slope {recipe.slope}:")
cert = verify_stack(g, k, recipe)
print(f"  verdict: {cert.verdict}, alpha = {cert.alpha}")
print("  smallest margins:")
for entry in sorted(cert.per_index, key=lambda e: e.margin)[:4]:
    print(f"    i={entry.index.i} mu={entry.index.mu}: margin {entry.margin}")

print()
print(f"Coarse certificate for the same cell (margins at the slope-8 limit):")
coarse = verify_coarse(g, k, recipe)
print(f"  verdict: {coarse.verdict}")
for entry in coarse.per_index:
    note = f"  [{entry.note}]" if entry.note else ""
    print(f"    i={entry.index.i} mu={entry.index.mu}: margin {entry.margin}{note}")

print()
print("Assumed hypotheses carried into the verdict:")
for h in coarse.hypotheses:
    print(f"  - {h}")

print()
print("Scan over k = 3..4, g = 6..18:")
table = scan(3, 4, 6, 18)
print("  g   k  recipe            stack       coarse")
for row in table.rows:
    print(
        f"  {row.g:<3d} {row.k:<2d} {row.recipe:<17s} "
        f"{row.stack_verdict:<11s} {row.coarse_verdict}"
    )
print(
    f"  certified: {table.certified_stack()} stack cells, "
    f"{table.certified_coarse()} coarse cells out of {len(table.rows)}"
)
