#!/usr/bin/env python3
"""Partitions, their invariants, and the transposition-counting oracle.

A partition mu of k is the cycle type of a permutation in S_k.  Two numbers
derived from it drive all the divisor formulas: the lcm of its parts and the
harmonic sum of reciprocals.  Whether a permutation of type mu factors into
i transpositions is decided by a length-and-parity criterion, and an exact
class-algebra convolution counts *how many* ordered factorizations exist.
"""

from hurwitzdiv import (
    Partition,
    conjugacy_class_size,
    count_factorizations_naive,
    count_transposition_factorizations,
    harmonic_inverse,
    lcm_of,
    partitions_of,
    transposition_feasible,
)

print("All partitions of 6, in reverse-lexicographic order:")
for mu in partitions_of(6):
    print(f"  {str(mu):14s} lcm = {lcm_of(mu)}   harmonic sum = {harmonic_inverse(mu)}")

print()
print("Which cycle types in S_4 arise as a product of exactly 2 transpositions?")
for mu in partitions_of(4):
    count = count_transposition_factorizations(mu, 2)
    print(
        f"  {str(mu):12s} feasible: {str(transposition_feasible(mu, 2)):5s} "
        f"ordered factorizations: {count}"
    )

print()
print("The counting oracle agrees with brute-force tuple enumeration (k = 4, i <= 4):")
for i in range(5):
    dp = [count_transposition_factorizations(mu, i) for mu in partitions_of(4)]
    naive = [count_factorizations_naive(mu, i) for mu in partitions_of(4)]
    assert dp == naive
    print(f"  i = {i}: counts {dp}")

print()
k, i = 5, 6
total = sum(
    conjugacy_class_size(mu) * count_transposition_factorizations(mu, i)
    for mu in partitions_of(k)
)
print(f"Summed over classes with multiplicity, i-tuples are exhausted: k={k}, i={i}:")
print(f"  weighted total = {total} = (k(k-1)/2)^i = {(k * (k - 1) // 2) ** i}")
