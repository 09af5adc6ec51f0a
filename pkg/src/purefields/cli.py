"""Command-line front end.

Subcommands: basis (integral basis + index ledger), index (ledger only),
polygon (principal Newton polygon of X^(p^k) - m), atlas (parametric rows
per residue class), verify (independent certification of a freshly built
basis).  Results go to stdout, diagnostics to stderr.

Exit codes: 0 success/certified, 1 verification failure, 2 invalid input,
3 resource bound hit (undecided square-freeness, skipped enumeration,
unresolved atlas class).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .exactmath import QPolynomial, factorize
from .newton import (
    index_lower_bound,
    phi_development,
    polygon_ascii,
    polygon_json_dict,
    principal_polygon,
)
from .oracle import (
    CounterexampleFound,
    Proved,
    Skipped,
    certification_json_dict,
    certify,
)
from .periodicity import (
    ParametricRow,
    UnknownRow,
    atlas,
    atlas_json_dict,
    atlas_pretty,
)
from .purebasis import (
    IntegralBasis,
    PureField,
    UnknownSquareFreeError,
    basis_json_dict,
    compose_bases,
    index_report,
    prime_power_basis,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_BOUND = 3

log = logging.getLogger("purefields")


def _configure_logging() -> None:
    name = os.environ.get("PUREFIELDS_LOG", "").upper()
    if name:
        logging.basicConfig(
            stream=sys.stderr,
            level=getattr(logging, name, logging.WARNING),
            format="%(levelname)s %(name)s: %(message)s",
        )


def canonical_json(obj) -> str:
    """Deterministic serialization: sorted keys, no whitespace, no floats."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(args, json_obj, pretty_text: str) -> None:
    """stdout per --format; --output-path always receives the JSON form."""
    if args.output_path:
        with open(args.output_path, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(json_obj))
    if args.format == "pretty":
        sys.stdout.write(pretty_text)
    elif not args.output_path:
        sys.stdout.write(canonical_json(json_obj))


def _make_field(args) -> PureField:
    return PureField.create(
        args.n, args.m, allow_unknown=args.allow_unknown_squarefree
    )


def _build_uncertified(field: PureField) -> IntegralBasis:
    basis = None
    for p, k in field.factorization:
        piece = prime_power_basis(p, k, field.m, allow_unknown=True)
        basis = piece if basis is None else compose_bases(basis, piece, field.m)
    assert basis is not None
    return basis


def _certification_pretty(field: PureField, report) -> str:
    lines = [f"n = {field.n}, m = {field.m}"]
    good = sum(report.integrality)
    lines.append(f"integrality: {good}/{len(report.integrality)} integral")
    lines.append(f"ring closure: {'ok' if report.ring_closed else 'FAILED'}")
    lines.append(
        f"discriminant accounting: {'ok' if report.disc_match else 'FAILED'}"
    )
    for p, result in sorted(report.maximality.items()):
        if isinstance(result, Proved):
            lines.append(f"p = {p}: maximality proved")
        elif isinstance(result, Skipped):
            lines.append(f"p = {p}: skipped ({result.reason})")
        else:
            lines.append(f"p = {p}: counterexample {result.element}")
    lines.append("certified" if report.certified else "NOT CERTIFIED")
    return "\n".join(lines) + "\n"


def _skip_reasons(report) -> list[str]:
    return [
        f"p = {p}: {result.reason}"
        for p, result in sorted(report.maximality.items())
        if isinstance(result, Skipped)
    ]


def _cmd_basis(args) -> int:
    field = _make_field(args)
    log.info("building integral basis for n=%d, m=%d", field.n, field.m)
    basis = _build_uncertified(field)
    report = index_report(field)
    certification = certify(basis, enum_budget=args.enum_budget)
    if not certification.certified:
        print(
            f"constructed basis failed certification:\n"
            f"{_certification_pretty(field, certification)}",
            file=sys.stderr,
        )
        return EXIT_VERIFICATION_FAILED

    doc = basis_json_dict(basis, report)
    row = ", ".join(str(e) for e in basis.elements)
    index_text = " * ".join(
        f"{p}^{e}" for p, e in sorted(report.per_prime.items()) if e
    ) or "1"
    pretty = (
        f"n = {field.n}, m = {field.m}\n"
        f"basis: {row}\n"
        f"index: {index_text} = {report.total_index}\n"
        f"polynomial discriminant: {report.poly_discriminant}\n"
        f"field discriminant: {report.field_discriminant}\n"
    )
    _emit(args, doc, pretty)

    skips = _skip_reasons(certification)
    if skips:
        for reason in skips:
            print(
                f"enumeration skipped, {reason} "
                f"(raise --enum-budget to certify)",
                file=sys.stderr,
            )
        return EXIT_RESOURCE_BOUND
    return EXIT_OK


def _cmd_index(args) -> int:
    field = _make_field(args)
    report = index_report(field)
    doc = {
        "n": field.n,
        "m": field.m,
        "index": {str(p): e for p, e in sorted(report.per_prime.items())},
        "total_index": report.total_index,
        "disc_poly": report.poly_discriminant,
        "disc_field": report.field_discriminant,
    }
    index_text = " * ".join(
        f"{p}^{e}" for p, e in sorted(report.per_prime.items()) if e
    ) or "1"
    pretty = (
        f"n = {field.n}, m = {field.m}\n"
        f"index: {index_text} = {report.total_index}\n"
        f"polynomial discriminant: {report.poly_discriminant}\n"
        f"field discriminant: {report.field_discriminant}\n"
    )
    _emit(args, doc, pretty)
    return EXIT_OK


def _cmd_polygon(args) -> int:
    p, k, m = args.p, args.k, args.m
    if factorize(p) != [(p, 1)]:
        raise ValueError(f"p must be prime, got {p}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if m == 0:
        raise ValueError("m must be nonzero")
    degree = p**k
    f = QPolynomial.x_power(degree) - QPolynomial([m])
    # mod p the polynomial is (X - m)^(p^k), so the development base is linear
    phi = QPolynomial([-(m % p), 1])
    dev = phi_development(f, phi, p)
    polygon = principal_polygon(dev)
    bound, exact = index_lower_bound(f, p)
    doc = {
        "p": p,
        "k": k,
        "m": m,
        "phi": str(phi),
        "polygon": polygon_json_dict(polygon, 1),
        "index_bound": bound,
        "exact": exact,
    }
    pretty = (
        f"f = X^{degree} - ({m}), p = {p}, phi = {phi}\n"
        f"{polygon_ascii(polygon)}\n"
        f"index bound: {bound} ({'exact' if exact else 'lower bound only'})\n"
    )
    _emit(args, doc, pretty)
    return EXIT_OK


def _cmd_atlas(args) -> int:
    atl = atlas(args.n, scan_bound=args.scan_bound, enum_budget=args.enum_budget)
    _emit(args, atlas_json_dict(atl), atlas_pretty(atl))
    unresolved = [
        r for r, row in sorted(atl.rows.items()) if isinstance(row, UnknownRow)
    ]
    if unresolved:
        print(
            f"classes {unresolved} lack two square-free witnesses below the "
            f"scan bound (raise --scan-bound)",
            file=sys.stderr,
        )
        return EXIT_RESOURCE_BOUND
    return EXIT_OK


def _cmd_verify(args) -> int:
    field = _make_field(args)
    basis = _build_uncertified(field)
    certification = certify(basis, enum_budget=args.enum_budget)
    _emit(
        args,
        certification_json_dict(certification),
        _certification_pretty(field, certification),
    )
    if not certification.certified:
        failures = []
        if not all(certification.integrality):
            failures.append("integrality")
        if not certification.ring_closed:
            failures.append("ring closure")
        if not certification.disc_match:
            failures.append("discriminant accounting")
        for p, result in sorted(certification.maximality.items()):
            if isinstance(result, CounterexampleFound):
                failures.append(f"p-maximality at {p}")
        print(f"verification failed: {', '.join(failures)}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    skips = _skip_reasons(certification)
    if skips:
        for reason in skips:
            print(
                f"enumeration skipped, {reason} "
                f"(raise --enum-budget to certify)",
                file=sys.stderr,
            )
        return EXIT_RESOURCE_BOUND
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format",
        choices=("json", "pretty"),
        default="json",
        help="stdout format (default json)",
    )
    output.add_argument(
        "--output-path",
        default=None,
        help="also write the JSON result to this file; stdout then stays "
        "silent unless --format pretty",
    )

    radicand = argparse.ArgumentParser(add_help=False)
    radicand.add_argument("--n", type=int, required=True, help="field degree")
    radicand.add_argument("--m", type=int, required=True, help="radicand")
    radicand.add_argument(
        "--allow-unknown-squarefree",
        action="store_true",
        help="proceed when square-freeness cannot be settled by trial division",
    )

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument(
        "--enum-budget",
        type=int,
        default=2**24,
        help="coset budget for the maximality enumeration (default 2^24)",
    )

    parser = argparse.ArgumentParser(
        prog="purefields",
        description="Exact integral bases of pure fields Q(m^(1/n))",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_basis = sub.add_parser(
        "basis",
        parents=[radicand, budget, output],
        help="integral basis plus index ledger",
    )
    p_basis.set_defaults(func=_cmd_basis)

    p_index = sub.add_parser(
        "index", parents=[radicand, output], help="index ledger only"
    )
    p_index.set_defaults(func=_cmd_index)

    p_polygon = sub.add_parser(
        "polygon", parents=[output], help="Newton polygon of X^(p^k) - m"
    )
    p_polygon.add_argument("--p", type=int, required=True, help="prime")
    p_polygon.add_argument("--k", type=int, required=True, help="exponent")
    p_polygon.add_argument("--m", type=int, required=True, help="radicand")
    p_polygon.set_defaults(func=_cmd_polygon)

    p_atlas = sub.add_parser(
        "atlas",
        parents=[budget, output],
        help="parametric basis rows per residue class",
    )
    p_atlas.add_argument("--n", type=int, required=True, help="field degree")
    p_atlas.add_argument(
        "--scan-bound",
        type=int,
        default=None,
        help="witness search bound (default 10 * n0)",
    )
    p_atlas.set_defaults(func=_cmd_atlas)

    p_verify = sub.add_parser(
        "verify",
        parents=[radicand, budget, output],
        help="build a basis and certify it independently",
    )
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, and map errors to documented exit codes."""
    _configure_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnknownSquareFreeError as exc:
        print(f"error: {exc} (pass --allow-unknown-squarefree)", file=sys.stderr)
        return EXIT_RESOURCE_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


def main() -> None:
    sys.exit(run(sys.argv[1:]))
