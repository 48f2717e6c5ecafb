"""Constructors for the low-slope effective divisors on the genus-g space.

Three families are built, each packaged as a :class:`DivisorRecipe` carrying
the exact class, its slope, and the geometric hypotheses it rests on (which
are assumed, never verified here):

* even genus g >= 6: the hyperplane pullback through the second-Hilbert-point
  model, of slope 7 + 6/g; below 8 exactly for g >= 8.  The class is built
  through the pseudo-stable pipeline ((7+6/g) lambda_ps - delta_ps, pulled
  back and scaled by g(g+1)/2) and checked against its direct expansion.
* odd genus g >= 5: the pushforward of the even-genus divisor in genus g+1,
  pulled back along the elliptic-tail map and multiplied against the
  Weierstrass divisor before pushing down.  Its slope has the closed form

      2 (7g^4 + 43g^3 + 7g^2 - 7g - 2) / (g (g+1) (g+3) (2g-1)),

  below 8 exactly for g >= 15.
* genus 7: the hyperplane pullback through the first-syzygy-point model, of
  slope 54/7, avoiding the 4-gonal locus.

`best_recipe` picks the divisor serving a given (g, k) cell, recording the
k-gonal avoidance hypothesis via the containment of gonality loci (a divisor
missing the m-gonal locus misses every k-gonal locus with k >= m).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .pushpull import elliptic_tail_pullback, forgetful_pushforward, multiply
from .spaces import (
    DivisorClass,
    pseudostable_pullback,
    slope,
    space_mg,
    space_mg_pseudostable,
    weierstrass_class,
)

RECIPE_HILBERT2 = "Hilbert2Even"
RECIPE_ODD_PUSHFORWARD = "OddPushforward"
RECIPE_SYZYGY_G7 = "SyzygyG7"
RECIPE_HILBERT3_CONDITIONAL = "Hilbert3Conditional"
RECIPE_USER = "UserSupplied"

RECIPE_NAMES = (
    RECIPE_HILBERT2,
    RECIPE_ODD_PUSHFORWARD,
    RECIPE_SYZYGY_G7,
    RECIPE_HILBERT3_CONDITIONAL,
    RECIPE_USER,
)

_GONALITY_PATTERN = re.compile(r"does not contain the (\d+)-gonal locus")


@dataclass(frozen=True)
class DivisorRecipe:
    """An effective divisor class on the genus-g space plus its provenance.

    `hypotheses` is never empty: every recipe depends on at least one
    geometric input (effectivity, gonality-locus avoidance) that this package
    takes as given.
    """

    name: str
    g: int
    divisor_class: DivisorClass
    slope: Fraction
    hypotheses: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.name not in RECIPE_NAMES:
            raise InputError(f"unknown recipe name {self.name!r}")
        if not self.hypotheses:
            raise InputError("a recipe must record its geometric hypotheses")
        recomputed = slope(self.divisor_class)
        if recomputed != self.slope:
            raise InputError(f"stored slope {self.slope} != recomputed {recomputed}")


def avoided_gonality(recipe: DivisorRecipe) -> int | None:
    """Smallest m for which the recipe assumes m-gonal-locus avoidance."""
    found = [int(m) for h in recipe.hypotheses for m in _GONALITY_PATTERN.findall(h)]
    return min(found) if found else None


def _avoidance_hypotheses(base_gonality: int, k: int | None = None) -> tuple[str, ...]:
    lines = [f"does not contain the {base_gonality}-gonal locus (assumed)"]
    if k is not None and k != base_gonality:
        lines.append(
            f"does not contain the {k}-gonal locus "
            f"(the {base_gonality}-gonal locus lies inside it)"
        )
    return tuple(lines)


def second_hilbert_divisor(g: int) -> DivisorRecipe:
    """Even-genus divisor of slope 7 + 6/g through the second Hilbert point.

    The class equals g(g+1)/2 times
    (7+6/g) lambda - delta_0 - (5-6/g) delta_1 - delta_2 - ... and is
    produced by pulling (7+6/g) lambda_ps - delta_ps back from the
    pseudo-stable space; both routes are compared coefficient for
    coefficient before returning.
    """
    if not isinstance(g, int) or g < 6 or g % 2 != 0:
        raise InputError(f"the second-Hilbert divisor needs even g >= 6, got {g!r}")
    scale = Fraction(g * (g + 1), 2)
    s = 7 + Fraction(6, g)
    ps_space = space_mg_pseudostable(g)
    ps_coeffs: dict[str, Fraction] = {"lambda_ps": s, "delta_0_ps": Fraction(-1)}
    for j in range(2, g // 2 + 1):
        ps_coeffs[f"delta_{j}_ps"] = Fraction(-1)
    pipeline = scale * pseudostable_pullback(DivisorClass.make(ps_space, ps_coeffs))

    direct_coeffs: dict[str, Fraction] = {
        "lambda": scale * s,
        "delta_0": -scale,
        "delta_1": -scale * (5 - Fraction(6, g)),
    }
    for j in range(2, g // 2 + 1):
        direct_coeffs[f"delta_{j}"] = -scale
    direct = DivisorClass.make(space_mg(g), direct_coeffs)
    assert pipeline == direct, "pseudo-stable pipeline disagrees with the direct expansion"

    return DivisorRecipe(
        name=RECIPE_HILBERT2,
        g=g,
        divisor_class=direct,
        slope=s,
        hypotheses=(
            "effective: hyperplane pullback through the second-Hilbert-point model "
            "(semistability assumed)",
        )
        + _avoidance_hypotheses(3),
    )


def odd_genus_slope(g: int) -> Fraction:
    """Closed-form slope of the odd-genus pushforward divisor.

    Two equivalent closed forms exist; both are evaluated and compared before
    one is returned.
    """
    if not isinstance(g, int) or g < 5 or g % 2 != 1:
        raise InputError(f"the odd-genus slope needs odd g >= 5, got {g!r}")
    first = Fraction(
        2 * (7 * g**4 + 43 * g**3 + 7 * g**2 - 7 * g - 2),
        g * (g + 1) * (g + 3) * (2 * g - 1),
    )
    second = (
        7
        + Fraction(6, g + 1)
        + Fraction((5 * g - 1) * (5 * g**2 - 5 * g + 4), g * (g + 3) * (2 * g - 1) * (g + 1))
    )
    assert first == second, "the two closed forms for the odd-genus slope disagree"
    return first


def odd_genus_divisor(g: int) -> DivisorRecipe:
    """Odd-genus divisor: push the even-genus divisor down from genus g+1.

    Start from the normalised even-genus class in genus g+1, pull back along
    the elliptic-tail map, multiply by the Weierstrass divisor, and push
    forward along the forgetful map.
    """
    if not isinstance(g, int) or g < 5 or g % 2 != 1:
        raise InputError(f"the odd-genus divisor needs odd g >= 5, got {g!r}")
    h = g + 1
    even_coeffs: dict[str, Fraction] = {
        "lambda": 7 + Fraction(6, h),
        "delta_0": Fraction(-1),
        "delta_1": -(5 - Fraction(6, h)),
    }
    for j in range(2, h // 2 + 1):
        even_coeffs[f"delta_{j}"] = Fraction(-1)
    even_class = DivisorClass.make(space_mg(h), even_coeffs)

    pushed = forgetful_pushforward(
        multiply(elliptic_tail_pullback(even_class), weierstrass_class(g))
    )
    s = slope(pushed)
    if s is None:
        raise AssertionError("the pushforward divisor has an undefined slope")
    return DivisorRecipe(
        name=RECIPE_ODD_PUSHFORWARD,
        g=g,
        divisor_class=pushed,
        slope=s,
        hypotheses=(
            "effective: pushforward of an even-genus hyperplane pullback against "
            "the Weierstrass divisor (semistability in genus g+1 assumed)",
        )
        + _avoidance_hypotheses(3),
    )


def syzygy_divisor_g7() -> DivisorRecipe:
    """Genus-7 divisor of slope 54/7 through the first-syzygy-point model."""
    g = 7
    s = Fraction(54, 7)
    coeffs: dict[str, Fraction] = {"lambda": s}
    for i in range(g // 2 + 1):
        coeffs[f"delta_{i}"] = Fraction(-1)
    return DivisorRecipe(
        name=RECIPE_SYZYGY_G7,
        g=g,
        divisor_class=DivisorClass.make(space_mg(g), coeffs),
        slope=s,
        hypotheses=(
            "effective: hyperplane pullback through the first-syzygy-point model "
            "(semistability assumed)",
        )
        + _avoidance_hypotheses(4),
    )


def third_hilbert_divisor(g: int) -> DivisorRecipe:
    """Conditional divisor of slope 22/3 + 5/g through the third Hilbert point.

    Rests on an unproven semistability statement; excluded from default
    recipe selection and scans, available only on explicit opt-in.
    """
    if not isinstance(g, int) or g < 4:
        raise InputError(f"the third-Hilbert divisor needs g >= 4, got {g!r}")
    s = Fraction(22, 3) + Fraction(5, g)
    coeffs: dict[str, Fraction] = {"lambda": s}
    for i in range(g // 2 + 1):
        coeffs[f"delta_{i}"] = Fraction(-1)
    return DivisorRecipe(
        name=RECIPE_HILBERT3_CONDITIONAL,
        g=g,
        divisor_class=DivisorClass.make(space_mg(g), coeffs),
        slope=s,
        hypotheses=(
            "effective: hyperplane pullback through the third-Hilbert-point model "
            "(UNPROVEN semistability assumed)",
        )
        + _avoidance_hypotheses(3),
    )


def user_divisor(g: int, s: Fraction, k: int) -> DivisorRecipe:
    """Recipe for a user-supplied effective divisor of slope s on genus g.

    The class s*lambda - delta stands in for the asserted divisor; only the
    slope and the avoidance hypothesis enter any verification.
    """
    if not isinstance(g, int) or g < 2:
        raise InputError(f"g must be an integer >= 2, got {g!r}")
    s = Fraction(s)
    if s <= 0:
        raise InputError(f"a user-supplied slope must be positive, got {s}")
    coeffs: dict[str, Fraction] = {"lambda": s}
    for i in range(g // 2 + 1):
        coeffs[f"delta_{i}"] = Fraction(-1)
    return DivisorRecipe(
        name=RECIPE_USER,
        g=g,
        divisor_class=DivisorClass.make(space_mg(g), coeffs),
        slope=s,
        hypotheses=(
            "user-supplied effective divisor of the given slope (existence assumed)",
            f"does not contain the {k}-gonal locus (assumed)",
        ),
    )


def best_recipe(g: int, k: int, allow_conditional: bool = False) -> DivisorRecipe | None:
    """Pick the built-in divisor serving the (g, k) cell, if any.

    Even g >= 8 use the second-Hilbert divisor, odd g >= 15 the pushforward
    divisor, and (g, k) = (7, 4) the syzygy divisor; every other cell has no
    unconditional divisor of slope below 8 here and returns None.  With
    `allow_conditional`, the third-Hilbert divisor fills remaining cells with
    g >= 8 under its unproven hypothesis.
    """
    if not isinstance(g, int) or g < 4:
        raise InputError(f"g must be an integer >= 4, got {g!r}")
    if not isinstance(k, int) or k < 3:
        raise InputError(f"k must be an integer >= 3, got {k!r}")
    recipe: DivisorRecipe | None = None
    if g % 2 == 0 and g >= 8:
        recipe = second_hilbert_divisor(g)
    elif g % 2 == 1 and g >= 15:
        recipe = odd_genus_divisor(g)
    elif (g, k) == (7, 4):
        recipe = syzygy_divisor_g7()
    elif allow_conditional and g >= 8:
        recipe = third_hilbert_divisor(g)
    if recipe is None:
        return None
    base = avoided_gonality(recipe)
    if base is None or base > k:
        return None
    if base != k:
        extra = _avoidance_hypotheses(base, k)[1]
        recipe = DivisorRecipe(
            name=recipe.name,
            g=recipe.g,
            divisor_class=recipe.divisor_class,
            slope=recipe.slope,
            hypotheses=recipe.hypotheses + (extra,),
        )
    return recipe
