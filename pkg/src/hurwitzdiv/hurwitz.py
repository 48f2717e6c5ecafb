"""Divisor classes on the compactified space of degree-k covers of a line.

The parameter space of genus-g, degree-k covers of the projective line with
b = 2g + 2k - 2 ordered simple branch points carries one boundary divisor
E_{i:mu} for each feasible pair (i, mu): the target degenerates into two
rational components with i branch points on one side, and the fibre over the
node has partition type mu.  Feasibility demands that a permutation of cycle
type mu factor into i transpositions on one side and b - i on the other.

Classes here are sparse exact-rational vectors over that index set.  The
main constructors:

* ``hodge_class`` -- the Hodge class in boundary coordinates, with
  coefficient  m(mu) * ( i(b-i) / (8(b-1)) - (k - 1/mu)/12 )  at (i, mu),
  where m(mu) is the lcm of the parts and 1/mu the harmonic sum.
* ``branch_pullback`` -- pullback along the branch-point map, which is
  ramified with order m(mu) along E_{i:mu}; the boundary divisor B_i of the
  genus-0 target pulls back to sum_mu m(mu) E_{i:mu}.
* ``ramification_class`` -- sum of (m(mu) - 1) E_{i:mu}.
* ``canonical_class_stack`` -- the canonical class of the stack, with
  coefficient  m(mu) * ( i(b-i)/(b-1) - 1 ) - 1;  it is asserted equal to
  the branch pullback of the genus-0 canonical class plus the ramification
  class on every call.
* ``coarse_correction`` / ``canonical_class_coarse`` -- the coarse moduli
  space loses one unit along each boundary divisor whose generic cover has a
  component mapping 2:1 onto the degenerate target (mu containing a part 2);
  the correction is bookkept as a -1 per affected index, carried on the
  branch-component marker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .partitions import (
    Partition,
    harmonic_inverse,
    lcm_of,
    partitions_of,
    rev_lex_key,
    transposition_feasible,
)
from .spaces import KIND_M0B, DivisorClass, canonical_class_m0b

IndexKey = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class BoundaryIndex:
    """A feasible boundary label (i, mu), optionally marked as the 2:1 branch part."""

    i: int
    mu: Partition
    prime: bool = False

    @property
    def key(self) -> IndexKey:
        return (self.i, self.mu.parts)


def index_sort_key(key: IndexKey) -> tuple[int, tuple[int, ...]]:
    i, parts = key
    return (i, rev_lex_key(parts))


def _check_gk(g: int, k: int) -> int:
    if not isinstance(g, int) or g < 2:
        raise InputError(f"g must be an integer >= 2, got {g!r}")
    if not isinstance(k, int) or k < 3:
        raise InputError(f"k must be an integer >= 3, got {k!r}")
    return 2 * g + 2 * k - 2


def boundary_index_set(g: int, k: int) -> list[BoundaryIndex]:
    """All feasible boundary labels (i, mu), sorted by (i, reverse-lex mu).

    A pair is feasible when mu factors into i transpositions and also into
    b - i transpositions (both sides of the degenerate target must be
    realised).  i runs from 2 to b/2 = g + k - 1; the set is symmetric under
    i <-> b - i by construction.  Feasibility is class-level: connectedness
    of the cover is not imposed, so this is a conservative superset of the
    nonempty boundary divisors.
    """
    _check_gk(g, k)
    return list(_boundary_indices(g, k))


@lru_cache(maxsize=None)
def _boundary_indices(g: int, k: int) -> tuple[BoundaryIndex, ...]:
    b = 2 * g + 2 * k - 2
    out: list[BoundaryIndex] = []
    for i in range(2, b // 2 + 1):
        for mu in partitions_of(k):
            if transposition_feasible(mu, i) and transposition_feasible(mu, b - i):
                out.append(BoundaryIndex(i, mu))
    return tuple(out)


@lru_cache(maxsize=None)
def _valid_index_keys(g: int, k: int) -> frozenset[IndexKey]:
    return frozenset(index.key for index in _boundary_indices(g, k))


@dataclass(frozen=True)
class HurwitzClass:
    """Sparse exact-rational class over the boundary basis of a cover space.

    `coeffs` maps index keys (i, mu-parts) to nonzero rationals, sorted by
    (i, reverse-lex mu).  `branch_marks` flags the indices whose coefficient
    includes a contribution carried on the 2:1 branch components (the coarse
    correction); it is bookkeeping metadata and does not affect arithmetic.
    """

    g: int
    k: int
    coeffs: tuple[tuple[IndexKey, Fraction], ...]
    branch_marks: frozenset[IndexKey] = frozenset()

    @classmethod
    def make(
        cls,
        g: int,
        k: int,
        coefficients: dict[IndexKey, Fraction | int],
        branch_marks: frozenset[IndexKey] | set[IndexKey] = frozenset(),
    ) -> "HurwitzClass":
        _check_gk(g, k)
        valid = _valid_index_keys(g, k)
        cleaned: dict[IndexKey, Fraction] = {}
        for key, value in coefficients.items():
            if key not in valid:
                raise InputError(f"(i, mu) = {key!r} is not a feasible boundary index")
            value = Fraction(value)
            if value:
                cleaned[key] = value
        marks = frozenset(key for key in branch_marks if key in cleaned)
        ordered = tuple(sorted(cleaned.items(), key=lambda item: index_sort_key(item[0])))
        return cls(g, k, ordered, marks)

    def coefficient(self, i: int, mu: Partition) -> Fraction:
        key = (i, mu.parts)
        for item_key, value in self.coeffs:
            if item_key == key:
                return value
        return Fraction(0)

    def as_dict(self) -> dict[IndexKey, Fraction]:
        return dict(self.coeffs)

    def support(self) -> tuple[IndexKey, ...]:
        return tuple(key for key, _ in self.coeffs)

    def __add__(self, other: "HurwitzClass") -> "HurwitzClass":
        if not isinstance(other, HurwitzClass):
            return NotImplemented
        if (self.g, self.k) != (other.g, other.k):
            raise InputError("cannot add classes on different cover spaces")
        merged = self.as_dict()
        for key, value in other.coeffs:
            merged[key] = merged.get(key, Fraction(0)) + value
        return HurwitzClass.make(
            self.g, self.k, merged, self.branch_marks | other.branch_marks
        )

    def __mul__(self, scalar: Fraction | int) -> "HurwitzClass":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return HurwitzClass.make(
            self.g,
            self.k,
            {key: Fraction(scalar) * value for key, value in self.coeffs},
            self.branch_marks,
        )

    __rmul__ = __mul__


def hodge_class(g: int, k: int) -> HurwitzClass:
    """The Hodge class in boundary coordinates."""
    b = _check_gk(g, k)
    coeffs: dict[IndexKey, Fraction] = {}
    for index in boundary_index_set(g, k):
        mu = index.mu
        value = lcm_of(mu) * (
            Fraction(index.i * (b - index.i), 8 * (b - 1))
            - Fraction(k - harmonic_inverse(mu), 12)
        )
        coeffs[index.key] = value
    return HurwitzClass.make(g, k, coeffs)


def branch_pullback_boundary(g: int, k: int, i: int) -> HurwitzClass:
    """Pullback of the single genus-0 boundary divisor B_i: sum_mu m(mu) E_{i:mu}."""
    b = _check_gk(g, k)
    if not isinstance(i, int) or i < 2 or i > b // 2:
        raise InputError(f"i must be an integer in [2, {b // 2}], got {i!r}")
    coeffs: dict[IndexKey, Fraction] = {}
    for index in boundary_index_set(g, k):
        if index.i == i:
            coeffs[index.key] = Fraction(lcm_of(index.mu))
    return HurwitzClass.make(g, k, coeffs)


def branch_pullback(g: int, k: int, divisor: DivisorClass) -> HurwitzClass:
    """Pullback of a genus-0 boundary class along the branch-point map."""
    b = _check_gk(g, k)
    if divisor.space.kind != KIND_M0B or divisor.space.b != b:
        raise InputError(
            f"the class must live on {KIND_M0B}(b={b}) for (g, k) = ({g}, {k}), "
            f"got {divisor.space}"
        )
    coeffs: dict[IndexKey, Fraction] = {}
    for index in boundary_index_set(g, k):
        c = divisor.coefficient(f"B_{index.i}")
        if c:
            coeffs[index.key] = c * lcm_of(index.mu)
    return HurwitzClass.make(g, k, coeffs)


def ramification_class(g: int, k: int) -> HurwitzClass:
    """Ramification divisor of the branch-point map: sum (m(mu) - 1) E_{i:mu}."""
    _check_gk(g, k)
    coeffs: dict[IndexKey, Fraction] = {}
    for index in boundary_index_set(g, k):
        coeffs[index.key] = Fraction(lcm_of(index.mu) - 1)
    return HurwitzClass.make(g, k, coeffs)


def canonical_class_stack(g: int, k: int) -> HurwitzClass:
    """Canonical class of the cover stack in boundary coordinates.

    Computed from the closed form m(mu)(i(b-i)/(b-1) - 1) - 1 and asserted
    equal to branch pullback of the genus-0 canonical class plus the
    ramification class.
    """
    b = _check_gk(g, k)
    coeffs: dict[IndexKey, Fraction] = {}
    for index in boundary_index_set(g, k):
        m = lcm_of(index.mu)
        coeffs[index.key] = m * (Fraction(index.i * (b - index.i), b - 1) - 1) - 1
    closed_form = HurwitzClass.make(g, k, coeffs)
    pipeline = branch_pullback(g, k, canonical_class_m0b(b)) + ramification_class(g, k)
    assert closed_form == pipeline, "canonical class disagrees with pullback + ramification"
    return closed_form


def sharp_indicator(i: int, mu: Partition) -> int:
    """1 iff (i, mu) supports a 2:1 branch component: some (2^a) <= mu with i >= a."""
    twos = mu.multiplicity(2)
    return 1 if any(i >= a for a in range(1, twos + 1)) else 0


def coarse_correction(g: int, k: int) -> HurwitzClass:
    """Stack-to-coarse canonical correction: -1 on each branch-marked index."""
    _check_gk(g, k)
    coeffs: dict[IndexKey, Fraction] = {}
    marks: set[IndexKey] = set()
    for index in boundary_index_set(g, k):
        if sharp_indicator(index.i, index.mu):
            coeffs[index.key] = Fraction(-1)
            marks.add(index.key)
    return HurwitzClass.make(g, k, coeffs, marks)


def canonical_class_coarse(g: int, k: int) -> HurwitzClass:
    """Canonical class of the coarse moduli space: stack class plus correction."""
    _check_gk(g, k)
    return canonical_class_stack(g, k) + coarse_correction(g, k)
