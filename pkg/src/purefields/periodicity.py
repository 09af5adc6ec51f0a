"""Periodicity of integral bases in the radicand.

For fixed degree n, the integral basis of Q(m^(1/n)) written as polynomials
in the root depends only on m modulo

    n0 = prod over p | n of p^(v_p(n) + 1),

as long as m stays square-free.  This module computes n0, builds the atlas
mapping each residue class r mod n0 to its parametric basis row, and checks
the periodicity claim on demand for concrete pairs of radicands.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exactmath import QPolynomial, SquareFree, factorize, square_free_check
from .purebasis import BasisElement, PureField, integral_basis

__all__ = [
    "ParametricRow",
    "PeriodAtlas",
    "SkippedClass",
    "UnknownRow",
    "atlas",
    "atlas_json_dict",
    "atlas_pretty",
    "period_modulus",
    "verify_periodicity",
]


def period_modulus(n: int) -> int:
    """Smallest modulus n0 such that the basis shape depends only on m mod n0."""
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    n0 = 1
    for p, k in factorize(n):
        n0 *= p ** (k + 1)
    return n0


@dataclass(frozen=True)
class ParametricRow:
    """Basis row shared by every square-free radicand in one residue class."""

    witness: int
    second_witness: int
    polynomials: tuple[QPolynomial, ...]


@dataclass(frozen=True)
class SkippedClass:
    """Residue class containing no square-free integers."""

    reason: str


@dataclass(frozen=True)
class UnknownRow:
    """Class where the scan found fewer than two square-free witnesses."""

    scan_bound: int


AtlasRow = ParametricRow | SkippedClass | UnknownRow


@dataclass(frozen=True)
class PeriodAtlas:
    n: int
    n0: int
    rows: dict[int, AtlasRow]


def _square_free_witnesses(r: int, n0: int, scan_bound: int):
    """Square-free m with m = r mod n0, |m| <= scan_bound, smallest first.

    Ties between m and -m go to the positive one; 0 and +-1 are not radicands.
    """
    candidates = sorted(
        (
            m
            for t in range(-(scan_bound // n0) - 1, scan_bound // n0 + 2)
            for m in (t * n0 + r,)
            if m not in (0, 1, -1) and abs(m) <= scan_bound
        ),
        key=lambda m: (abs(m), m < 0),
    )
    for m in candidates:
        if isinstance(square_free_check(m), SquareFree):
            yield m


def atlas(
    n: int, *, scan_bound: int | None = None, enum_budget: int = 2**24
) -> PeriodAtlas:
    """Parametric basis table for degree n, one row per residue class mod n0.

    Each non-skipped class is certified at two independent witnesses; the two
    rows must agree as literal polynomial tuples, otherwise periodicity is
    violated and a RuntimeError reports the offending class.
    """
    n0 = period_modulus(n)
    if scan_bound is None:
        scan_bound = 10 * n0
    primes = [p for p, _ in factorize(n)]
    rows: dict[int, AtlasRow] = {}
    for r in range(n0):
        if any(r % (p * p) == 0 for p in primes):
            # p^2 divides n0 for every p | n, so p^2 | r forces p^2 | m
            # throughout the class: no member is square-free.
            p = next(p for p in primes if r % (p * p) == 0)
            rows[r] = SkippedClass(
                f"every m = {r} mod {n0} is divisible by {p}^2"
            )
            continue
        witnesses = list(
            itertools.islice(_square_free_witnesses(r, n0, scan_bound), 2)
        )
        if len(witnesses) < 2:
            rows[r] = UnknownRow(scan_bound)
            continue
        first, second = witnesses
        basis_a, _ = integral_basis(
            PureField.create(n, first), enum_budget=enum_budget
        )
        basis_b, _ = integral_basis(
            PureField.create(n, second), enum_budget=enum_budget
        )
        polys_a = tuple(e.as_qpoly() for e in basis_a.elements)
        polys_b = tuple(e.as_qpoly() for e in basis_b.elements)
        if polys_a != polys_b:
            raise RuntimeError(
                f"periodicity violated at residue {r} mod {n0}: "
                f"witnesses {first} and {second} yield different rows"
            )
        rows[r] = ParametricRow(first, second, polys_a)
    return PeriodAtlas(n, n0, rows)


def verify_periodicity(
    n: int, r: int, m1: int, m2: int, *, enum_budget: int = 2**24
) -> bool:
    """Check that two square-free radicands in class r share one basis row.

    Both m1 and m2 must be congruent to r modulo n0 and square-free; violated
    preconditions raise ValueError rather than returning False, since they
    say nothing about periodicity itself.
    """
    n0 = period_modulus(n)
    if not 0 <= r < n0:
        raise ValueError(f"residue {r} out of range for modulus {n0}")
    for m in (m1, m2):
        if m % n0 != r:
            raise ValueError(f"{m} is not congruent to {r} mod {n0}")
    # PureField.create rejects non-square-free radicands.
    basis_1, _ = integral_basis(PureField.create(n, m1), enum_budget=enum_budget)
    basis_2, _ = integral_basis(PureField.create(n, m2), enum_budget=enum_budget)
    polys_1 = tuple(e.as_qpoly() for e in basis_1.elements)
    polys_2 = tuple(e.as_qpoly() for e in basis_2.elements)
    return polys_1 == polys_2


def _coefficient_strings(poly: QPolynomial) -> list[str]:
    return [str(poly.coefficient(i)) for i in range(poly.degree + 1)]


def atlas_json_dict(atl: PeriodAtlas) -> dict:
    """JSON-ready dict; basis elements appear as coefficient-string lists."""
    rows: dict[str, dict] = {}
    for r in sorted(atl.rows):
        row = atl.rows[r]
        if isinstance(row, ParametricRow):
            rows[str(r)] = {
                "witness": row.witness,
                "second_witness": row.second_witness,
                "basis": [_coefficient_strings(p) for p in row.polynomials],
            }
        elif isinstance(row, SkippedClass):
            rows[str(r)] = {"skip": row.reason}
        else:
            rows[str(r)] = {"unknown_below": row.scan_bound}
    return {"n": atl.n, "n0": atl.n0, "rows": rows}


def atlas_pretty(atl: PeriodAtlas) -> str:
    """Human-readable atlas, grouping residue classes that share a row."""
    groups: dict[tuple[QPolynomial, ...], list[int]] = {}
    skipped: list[int] = []
    unknown: list[int] = []
    for r in sorted(atl.rows):
        row = atl.rows[r]
        if isinstance(row, ParametricRow):
            groups.setdefault(row.polynomials, []).append(r)
        elif isinstance(row, SkippedClass):
            skipped.append(r)
        else:
            unknown.append(r)
    lines = [f"degree {atl.n}, period {atl.n0}"]
    for polys, residues in sorted(groups.items(), key=lambda kv: kv[1][0]):
        residue_list = ", ".join(str(r) for r in residues)
        lines.append(f"m = {residue_list} (mod {atl.n0}):")
        rendered = ", ".join(
            str(BasisElement.from_qpoly(p)) for p in polys
        )
        lines.append(f"  [{rendered}]")
    if skipped:
        lines.append(
            "no square-free radicands: "
            + ", ".join(str(r) for r in skipped)
        )
    if unknown:
        lines.append(
            "unresolved (scan bound too small): "
            + ", ".join(str(r) for r in unknown)
        )
    return "\n".join(lines) + "\n"
