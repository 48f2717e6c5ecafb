"""Lossless JSON / CSV / text encodings of every value the package emits.

Rationals travel as canonical strings "p/q" with gcd(p, q) = 1 and q > 0
(plain "p" for integers); no floating point ever enters json or csv output.
JSON objects are emitted with sorted keys and a fixed layout, so identical
inputs yield byte-identical documents; every `*_to_obj` has a `*_from_obj`
inverse and the round trip is exact.  CSV uses LF line endings and a header
row.  Text rendering is for human eyes only and may add a 6-significant-
digit decimal hint next to the exact value.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from fractions import Fraction

from .bigness import BignessCertificate, IndexMargin, ScanRow, ScanTable
from .errors import InputError
from .hurwitz import BoundaryIndex, HurwitzClass
from .lowslope import DivisorRecipe
from .partitions import Partition
from .pushpull import QuadraticClass
from .spaces import KIND_M0B, DivisorClass, Space


def rational_str(value: Fraction) -> str:
    return str(Fraction(value))


_RATIONAL_PATTERN = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; decimal and float forms are rejected everywhere."""
    text = text.strip()
    if not _RATIONAL_PATTERN.fullmatch(text):
        raise InputError(f"not a rational number (expected p or p/q): {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def rational_text(value: Fraction) -> str:
    """Exact value plus a decimal hint, for text output only."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value)
    return f"{value} (~{float(value):.6g})"


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list such as "2,1,1"."""
    try:
        parts = [int(piece) for piece in text.split(",") if piece.strip() != ""]
    except ValueError as exc:
        raise InputError(f"not a partition: {text!r}") from exc
    if not parts:
        raise InputError(f"not a partition: {text!r}")
    return Partition.of(parts)


# -- spaces and divisor classes ---------------------------------------------


def space_to_obj(space: Space) -> dict:
    if space.kind == KIND_M0B:
        return {"kind": space.kind, "b": space.b}
    return {"kind": space.kind, "g": space.g}


def space_from_obj(obj: dict) -> Space:
    kind = obj.get("kind")
    if kind == KIND_M0B:
        return Space(kind, b=obj.get("b"))
    return Space(kind, g=obj.get("g"))


def divisor_class_to_obj(divisor: DivisorClass) -> dict:
    return {
        "space": space_to_obj(divisor.space),
        "coefficients": [
            {"basis": label, "value": rational_str(value)} for label, value in divisor.coeffs
        ],
    }


def divisor_class_from_obj(obj: dict) -> DivisorClass:
    space = space_from_obj(obj["space"])
    coeffs = {
        entry["basis"]: parse_rational(entry["value"]) for entry in obj["coefficients"]
    }
    return DivisorClass.make(space, coeffs)


def quadratic_class_to_obj(quadratic: QuadraticClass) -> dict:
    return {
        "space": space_to_obj(quadratic.space),
        "coefficients": [
            {"basis": [x, y], "value": rational_str(value)}
            for (x, y), value in quadratic.coeffs
        ],
    }


def quadratic_class_from_obj(obj: dict) -> QuadraticClass:
    space = space_from_obj(obj["space"])
    coeffs: dict[tuple[str, str], Fraction] = {}
    for entry in obj["coefficients"]:
        x, y = entry["basis"]
        coeffs[(x, y)] = parse_rational(entry["value"])
    return QuadraticClass.make(space, coeffs)


def divisor_class_csv(divisor: DivisorClass) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["basis", "value"])
    for label, value in divisor.coeffs:
        writer.writerow([label, rational_str(value)])
    return buffer.getvalue()


def divisor_class_text(divisor: DivisorClass) -> str:
    lines = [f"space: {divisor.space}"]
    for label, value in divisor.coeffs:
        lines.append(f"  {label:12s} {rational_text(value)}")
    return "\n".join(lines) + "\n"


# -- Hurwitz classes ---------------------------------------------------------


def hurwitz_class_to_obj(cls: HurwitzClass) -> dict:
    return {
        "g": cls.g,
        "k": cls.k,
        "coefficients": [
            {
                "i": i,
                "mu": list(parts),
                "prime": (i, parts) in cls.branch_marks,
                "value": rational_str(value),
            }
            for (i, parts), value in cls.coeffs
        ],
    }


def hurwitz_class_from_obj(obj: dict) -> HurwitzClass:
    coeffs: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    marks: set[tuple[int, tuple[int, ...]]] = set()
    for entry in obj["coefficients"]:
        key = (entry["i"], tuple(entry["mu"]))
        coeffs[key] = parse_rational(entry["value"])
        if entry.get("prime"):
            marks.add(key)
    return HurwitzClass.make(obj["g"], obj["k"], coeffs, marks)


def hurwitz_class_csv(cls: HurwitzClass) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["i", "mu", "m_mu", "value"])
    for (i, parts), value in cls.coeffs:
        writer.writerow([i, str(Partition(parts)), math.lcm(*parts), rational_str(value)])
    return buffer.getvalue()


def hurwitz_class_text(cls: HurwitzClass) -> str:
    lines = [f"cover space: g={cls.g}, k={cls.k}"]
    for (i, parts), value in cls.coeffs:
        mark = "'" if (i, parts) in cls.branch_marks else ""
        lines.append(f"  i={i:<3d} mu={str(Partition(parts)):12s}{mark} {rational_text(value)}")
    return "\n".join(lines) + "\n"


# -- recipes -----------------------------------------------------------------


def recipe_to_obj(recipe: DivisorRecipe) -> dict:
    return {
        "name": recipe.name,
        "g": recipe.g,
        "slope": rational_str(recipe.slope),
        "class": divisor_class_to_obj(recipe.divisor_class),
        "hypotheses": list(recipe.hypotheses),
    }


def recipe_from_obj(obj: dict) -> DivisorRecipe:
    return DivisorRecipe(
        name=obj["name"],
        g=obj["g"],
        divisor_class=divisor_class_from_obj(obj["class"]),
        slope=parse_rational(obj["slope"]),
        hypotheses=tuple(obj["hypotheses"]),
    )


def recipe_text(recipe: DivisorRecipe) -> str:
    lines = [
        f"divisor: {recipe.name} (g={recipe.g})",
        f"slope:   {rational_text(recipe.slope)}",
        "class:",
    ]
    for label, value in recipe.divisor_class.coeffs:
        lines.append(f"  {label:12s} {rational_text(value)}")
    lines.append("hypotheses:")
    for h in recipe.hypotheses:
        lines.append(f"  - {h}")
    return "\n".join(lines) + "\n"


# -- certificates ------------------------------------------------------------


def certificate_to_obj(cert: BignessCertificate) -> dict:
    return {
        "g": cert.g,
        "k": cert.k,
        "mode": cert.mode,
        "slope": rational_str(cert.slope_used),
        "alpha": rational_str(cert.alpha),
        "indices": [
            {
                "i": entry.index.i,
                "mu": list(entry.index.mu.parts),
                "margin": rational_str(entry.margin),
                "sigma_bound": rational_str(entry.sigma_bound),
                "sharp": entry.sharp,
                "note": entry.note,
            }
            for entry in cert.per_index
        ],
        "hypotheses": list(cert.hypotheses),
        "verdict": cert.verdict,
    }


def certificate_from_obj(obj: dict) -> BignessCertificate:
    entries = tuple(
        IndexMargin(
            index=BoundaryIndex(entry["i"], Partition(tuple(entry["mu"]))),
            margin=parse_rational(entry["margin"]),
            sigma_bound=parse_rational(entry["sigma_bound"]),
            sharp=entry["sharp"],
            note=entry["note"],
        )
        for entry in obj["indices"]
    )
    return BignessCertificate(
        g=obj["g"],
        k=obj["k"],
        mode=obj["mode"],
        slope_used=parse_rational(obj["slope"]),
        per_index=entries,
        alpha=parse_rational(obj["alpha"]),
        hypotheses=tuple(obj["hypotheses"]),
        verdict=obj["verdict"],
    )


def certificate_csv(cert: BignessCertificate) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["i", "mu", "margin", "sigma_bound", "sharp", "note"])
    for entry in cert.per_index:
        writer.writerow(
            [
                entry.index.i,
                str(entry.index.mu),
                rational_str(entry.margin),
                rational_str(entry.sigma_bound),
                entry.sharp,
                entry.note,
            ]
        )
    return buffer.getvalue()


def certificate_text(cert: BignessCertificate) -> str:
    lines = [
        f"bigness certificate: mode={cert.mode}, g={cert.g}, k={cert.k}",
        f"slope: {rational_text(cert.slope_used)}",
        f"alpha: {rational_text(cert.alpha)}",
        f"verdict: {cert.verdict}",
        "margins:",
    ]
    for entry in cert.per_index:
        note = f"  [{entry.note}]" if entry.note else ""
        lines.append(
            f"  i={entry.index.i:<3d} mu={str(entry.index.mu):12s} "
            f"margin {rational_text(entry.margin)}{note}"
        )
    lines.append("hypotheses:")
    for h in cert.hypotheses:
        lines.append(f"  - {h}")
    return "\n".join(lines) + "\n"


# -- scan tables -------------------------------------------------------------


def _optional_rational_str(value: Fraction | None) -> str:
    return rational_str(value) if value is not None else ""


def scan_table_to_obj(table: ScanTable) -> dict:
    return {
        "rows": [
            {
                "g": row.g,
                "k": row.k,
                "recipe": row.recipe,
                "slope": _optional_rational_str(row.slope),
                "stack_verdict": row.stack_verdict,
                "coarse_verdict": row.coarse_verdict,
                "min_margin": _optional_rational_str(row.min_margin),
            }
            for row in table.rows
        ]
    }


def scan_table_from_obj(obj: dict) -> ScanTable:
    rows = tuple(
        ScanRow(
            g=entry["g"],
            k=entry["k"],
            recipe=entry["recipe"],
            slope=parse_rational(entry["slope"]) if entry["slope"] else None,
            stack_verdict=entry["stack_verdict"],
            coarse_verdict=entry["coarse_verdict"],
            min_margin=parse_rational(entry["min_margin"]) if entry["min_margin"] else None,
        )
        for entry in obj["rows"]
    )
    return ScanTable(rows)


def scan_table_csv(table: ScanTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["g", "k", "recipe", "slope", "stack_verdict", "coarse_verdict", "min_margin"]
    )
    for row in table.rows:
        writer.writerow(
            [
                row.g,
                row.k,
                row.recipe,
                _optional_rational_str(row.slope),
                row.stack_verdict,
                row.coarse_verdict,
                _optional_rational_str(row.min_margin),
            ]
        )
    return buffer.getvalue()


def scan_table_text(table: ScanTable) -> str:
    lines = ["g    k    recipe            slope         stack      coarse"]
    for row in table.rows:
        slope = rational_str(row.slope) if row.slope is not None else "-"
        lines.append(
            f"{row.g:<4d} {row.k:<4d} {row.recipe:<17s} {slope:<13s} "
            f"{row.stack_verdict:<10s} {row.coarse_verdict}"
        )
    return "\n".join(lines) + "\n"


def dumps_canonical(obj: dict) -> str:
    """Serialise a JSON object deterministically (sorted keys, LF, newline)."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
