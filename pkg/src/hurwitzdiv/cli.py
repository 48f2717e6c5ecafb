"""Command-line interface: every computation as a reproducible command.

Commands
--------
classes   emit a divisor-class table (hodge, canonical-stack, canonical-coarse,
          branch-pullback, kappa1, canonical-m0b, weierstrass)
divisor   emit a low-slope divisor recipe (even, odd, syzygy-g7)
verify    run the bigness verification for the stack or the coarse space
scan      run verifications over a (g, k) rectangle and emit a CSV table
oracle    count transposition factorizations and compare with the
          feasibility criterion

Exit codes: 0 success / Certified, 1 verification failure or no divisor
available, 2 usage or hypothesis error, 3 I/O error.  Output formats: json
(default; deterministic, key-sorted envelope), csv, text.  Rationals are
read and written as "p/q" strings; floats are never accepted.  The
environment variable HURWITZ_MAX_K (default 10) caps k as a resource guard
on the partition lattice.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import __version__
from .bigness import (
    VERDICT_CERTIFIED,
    scan,
    verify_coarse,
    verify_stack,
)
from .errors import HypothesisError, InputError, ResourceError
from .hurwitz import (
    branch_pullback_boundary,
    canonical_class_coarse,
    canonical_class_stack,
    hodge_class,
)
from .lowslope import (
    DivisorRecipe,
    best_recipe,
    odd_genus_divisor,
    second_hilbert_divisor,
    syzygy_divisor_g7,
    user_divisor,
)
from .partitions import (
    count_transposition_factorizations,
    transposition_feasible,
)
from .serialize import (
    certificate_csv,
    certificate_text,
    certificate_to_obj,
    divisor_class_csv,
    divisor_class_text,
    divisor_class_to_obj,
    dumps_canonical,
    hurwitz_class_csv,
    hurwitz_class_text,
    hurwitz_class_to_obj,
    parse_partition,
    parse_rational,
    recipe_text,
    recipe_to_obj,
    scan_table_csv,
    scan_table_text,
    scan_table_to_obj,
)
from .spaces import canonical_class_m0b, kappa1_m0b, weierstrass_class

DEFAULT_MAX_K = 10


def _max_k() -> int:
    raw = os.environ.get("HURWITZ_MAX_K", str(DEFAULT_MAX_K))
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"HURWITZ_MAX_K must be an integer, got {raw!r}") from None


def _check_k_cap(k: int) -> None:
    cap = _max_k()
    if k > cap:
        raise InputError(f"k = {k} exceeds the HURWITZ_MAX_K cap ({cap})")


def _require(args: argparse.Namespace, names: list[str], command: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise InputError(f"`{command}` requires --{name}")


def _emit(args: argparse.Namespace, argv: list[str], payload_type: str, obj: dict,
          csv_text: str, plain_text: str) -> None:
    if args.format == "json":
        envelope = {
            "command": "hurwitzdiv " + " ".join(argv),
            "format": args.format,
            "payload": obj,
            "payload_type": payload_type,
            "tool_version": __version__,
        }
        sys.stdout.write(dumps_canonical(envelope))
    elif args.format == "csv":
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(plain_text)


def _run_classes(args: argparse.Namespace, argv: list[str]) -> int:
    subject = args.subject
    if subject in ("hodge", "canonical-stack", "canonical-coarse", "branch-pullback"):
        _require(args, ["g", "k"], "classes")
        _check_k_cap(args.k)
        if subject == "hodge":
            cls = hodge_class(args.g, args.k)
        elif subject == "canonical-stack":
            cls = canonical_class_stack(args.g, args.k)
        elif subject == "canonical-coarse":
            cls = canonical_class_coarse(args.g, args.k)
        else:
            _require(args, ["i"], "classes branch-pullback")
            cls = branch_pullback_boundary(args.g, args.k, args.i)
        _emit(args, argv, "HurwitzClass", hurwitz_class_to_obj(cls),
              hurwitz_class_csv(cls), hurwitz_class_text(cls))
        return 0
    if subject in ("kappa1", "canonical-m0b"):
        _require(args, ["b"], "classes")
        divisor = kappa1_m0b(args.b) if subject == "kappa1" else canonical_class_m0b(args.b)
    elif subject == "weierstrass":
        _require(args, ["g"], "classes")
        divisor = weierstrass_class(args.g)
    else:
        raise InputError(f"unknown classes subject {subject!r}")
    _emit(args, argv, "DivisorClass", divisor_class_to_obj(divisor),
          divisor_class_csv(divisor), divisor_class_text(divisor))
    return 0


def _run_divisor(args: argparse.Namespace, argv: list[str]) -> int:
    if args.kind == "even":
        _require(args, ["g"], "divisor even")
        recipe = second_hilbert_divisor(args.g)
    elif args.kind == "odd":
        _require(args, ["g"], "divisor odd")
        recipe = odd_genus_divisor(args.g)
    else:
        if args.g is not None and args.g != 7:
            raise InputError("the syzygy divisor lives in genus 7")
        recipe = syzygy_divisor_g7()
    _emit(args, argv, "DivisorRecipe", recipe_to_obj(recipe),
          divisor_class_csv(recipe.divisor_class), recipe_text(recipe))
    return 0


def _no_divisor_certificate_obj(g: int, k: int, mode: str) -> dict:
    return {
        "g": g,
        "k": k,
        "mode": mode,
        "slope": "",
        "alpha": "",
        "indices": [],
        "hypotheses": [],
        "verdict": "NoDivisor",
    }


def _resolve_recipe(args: argparse.Namespace) -> DivisorRecipe | None:
    if args.slope is not None:
        if not args.assume_avoidance:
            raise HypothesisError(
                "a user-supplied slope needs --assume-avoidance to assert the "
                "gonality-locus hypothesis"
            )
        return user_divisor(args.g, parse_rational(args.slope), args.k)
    return best_recipe(args.g, args.k, allow_conditional=args.assume_remark)


def _run_verify(args: argparse.Namespace, argv: list[str]) -> int:
    _require(args, ["g", "k"], "verify")
    _check_k_cap(args.k)
    mode = "Stack" if args.mode == "stack" else "Coarse"
    recipe = _resolve_recipe(args)
    if recipe is None:
        obj = _no_divisor_certificate_obj(args.g, args.k, mode)
        text = (
            f"bigness certificate: mode={mode}, g={args.g}, k={args.k}\n"
            "verdict: NoDivisor (no built-in divisor of slope below 8 serves this cell)\n"
        )
        empty_csv = "i,mu,margin,sigma_bound,sharp,note\n"
        _emit(args, argv, "BignessCertificate", obj, empty_csv, text)
        return 1
    if args.mode == "stack":
        cert = verify_stack(args.g, args.k, recipe)
    else:
        cert = verify_coarse(args.g, args.k, recipe)
    _emit(args, argv, "BignessCertificate", certificate_to_obj(cert),
          certificate_csv(cert), certificate_text(cert))
    return 0 if cert.verdict == VERDICT_CERTIFIED else 1


def _run_scan(args: argparse.Namespace, argv: list[str]) -> int:
    k_min, k_max = args.k
    g_min, g_max = args.g
    if k_min <= k_max:
        _check_k_cap(k_max)
    table = scan(k_min, k_max, g_min, g_max, jobs=args.jobs)
    summary = (
        f"cells: {len(table.rows)}; certified stack: {table.certified_stack()}; "
        f"certified coarse: {table.certified_coarse()}\n"
    )
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(scan_table_csv(table))
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {args.out}: {exc}\n")
            return 3
        sys.stdout.write(summary)
        return 0
    _emit(args, argv, "ScanTable", scan_table_to_obj(table),
          scan_table_csv(table), scan_table_text(table))
    sys.stderr.write(summary)
    return 0


def _run_oracle(args: argparse.Namespace, argv: list[str]) -> int:
    _require(args, ["k", "mu", "i"], "oracle")
    _check_k_cap(args.k)
    mu = parse_partition(args.mu)
    if mu.weight != args.k:
        raise InputError(f"mu = {mu} has weight {mu.weight}, expected k = {args.k}")
    count = count_transposition_factorizations(mu, args.i)
    feasible = transposition_feasible(mu, args.i)
    obj = {
        "k": args.k,
        "mu": list(mu.parts),
        "i": args.i,
        "count": str(count),
        "feasible": feasible,
        "agree": (count > 0) == feasible,
    }
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "mu", "i", "count", "feasible", "agree"])
    writer.writerow([args.k, str(mu), args.i, count, feasible, obj["agree"]])
    csv_text = buffer.getvalue()
    text = (
        f"k={args.k} mu={mu} i={args.i}\n"
        f"count:    {count}\n"
        f"feasible: {feasible}\n"
        f"agree:    {obj['agree']}\n"
    )
    _emit(args, argv, "OracleReport", obj, csv_text, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzdiv",
        description="Exact divisor-class calculus and bigness certificates "
        "on compactified spaces of branched covers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p_classes = sub.add_parser("classes", help="emit a divisor-class table")
    p_classes.add_argument(
        "subject",
        choices=(
            "hodge",
            "canonical-stack",
            "canonical-coarse",
            "branch-pullback",
            "kappa1",
            "canonical-m0b",
            "weierstrass",
        ),
    )
    p_classes.add_argument("--g", type=int)
    p_classes.add_argument("--k", type=int)
    p_classes.add_argument("--b", type=int)
    p_classes.add_argument("--i", type=int)
    add_format(p_classes)

    p_divisor = sub.add_parser("divisor", help="emit a low-slope divisor recipe")
    p_divisor.add_argument("kind", choices=("even", "odd", "syzygy-g7"))
    p_divisor.add_argument("--g", type=int)
    add_format(p_divisor)

    p_verify = sub.add_parser("verify", help="run a bigness verification")
    p_verify.add_argument("mode", choices=("stack", "coarse"))
    p_verify.add_argument("--g", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--slope", type=str, help='user-supplied slope "p/q"')
    p_verify.add_argument(
        "--assume-avoidance",
        action="store_true",
        help="assert that the user-supplied divisor misses the k-gonal locus",
    )
    p_verify.add_argument(
        "--assume-remark",
        action="store_true",
        help="allow the conditional third-Hilbert-point divisor (unproven hypothesis)",
    )
    add_format(p_verify)

    p_scan = sub.add_parser("scan", help="verify a rectangle of (g, k) cells")
    p_scan.add_argument("--k", type=int, nargs=2, metavar=("K_MIN", "K_MAX"), required=True)
    p_scan.add_argument("--g", type=int, nargs=2, metavar=("G_MIN", "G_MAX"), required=True)
    p_scan.add_argument("--out", type=str, help="write the CSV table to this path")
    p_scan.add_argument("--jobs", type=int, help="worker pool size (default: cpu count)")
    add_format(p_scan)

    p_oracle = sub.add_parser("oracle", help="count transposition factorizations")
    p_oracle.add_argument("--k", type=int)
    p_oracle.add_argument("--mu", type=str, help='partition as "m1,m2,..."')
    p_oracle.add_argument("--i", type=int)
    add_format(p_oracle)

    return parser


_RUNNERS = {
    "classes": _run_classes,
    "divisor": _run_divisor,
    "verify": _run_verify,
    "scan": _run_scan,
    "oracle": _run_oracle,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _RUNNERS[args.command](args, argv)
    except (InputError, HypothesisError, ResourceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 3


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
