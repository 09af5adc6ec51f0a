"""Integral bases of pure fields Q(m^(1/n)).

The construction is fully explicit.  For prime-power degree the basis is a
family of geometric-sum polynomials divided by prime powers, selected by a
single valuation parameter s.  For composite degree the prime-power bases
are merged degree by degree with a coefficient-wise Chinese remainder step.
Alongside the basis we keep the index ledger: per-prime indices in closed
form, the total index, and the two discriminants it ties together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactmath import (
    SQUARE_FREE_BOUND_DEFAULT,
    IntMatrix,
    NotSquareFree,
    QPolynomial,
    Unknown,
    ext_gcd,
    factorize,
    hnf,
    square_free_check,
    vp_int,
)


class UnknownSquareFreeError(Exception):
    """Square-freeness of m could not be settled within the trial bound."""

    def __init__(self, m: int, bound: int):
        super().__init__(
            f"could not decide whether {m} is square-free "
            f"(trial divisors up to {bound})"
        )
        self.m = m
        self.bound = bound


@dataclass(frozen=True)
class PureField:
    """The degree-n field generated by a root of X^n - m, m square-free."""

    n: int
    m: int
    factorization: tuple[tuple[int, int], ...]

    @classmethod
    def create(
        cls,
        n: int,
        m: int,
        *,
        square_free_bound: int = SQUARE_FREE_BOUND_DEFAULT,
        allow_unknown: bool = False,
    ) -> "PureField":
        if n < 2:
            raise ValueError(f"degree must be at least 2, got {n}")
        if m in (0, 1, -1):
            raise ValueError(f"m must differ from 0 and +-1, got {m}")
        check = square_free_check(m, square_free_bound)
        if isinstance(check, NotSquareFree):
            raise ValueError(f"m = {m} is divisible by {check.prime}**2")
        if isinstance(check, Unknown) and not allow_unknown:
            raise UnknownSquareFreeError(m, check.bound)
        return cls(n, m, tuple(factorize(n)))

    @property
    def minimal_polynomial(self) -> QPolynomial:
        return QPolynomial((-self.m,) + (0,) * (self.n - 1) + (1,))

    def __str__(self) -> str:
        return f"Q({self.m}^(1/{self.n}))"


@dataclass(frozen=True)
class BasisElement:
    """numerator(alpha) / denominator, numerator an integer polynomial.

    Normalized: the gcd of all numerator coefficients and the denominator
    is 1, so the denominator is the least c with c * element in Z[alpha].
    """

    numerator: QPolynomial
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if not self.numerator.is_integral():
            raise ValueError("numerator must have integer coefficients")
        if self.numerator.is_zero():
            raise ValueError("zero basis element")
        g = math.gcd(self.numerator.content(), self.denominator)
        if g != 1:
            raise ValueError("element not in lowest terms")

    @classmethod
    def from_qpoly(cls, q: QPolynomial) -> "BasisElement":
        den = q.denominator()
        num = q * den
        g = math.gcd(num.content(), den)
        if g > 1:
            num, den = num / g, den // g
        return cls(num, den)

    @property
    def degree(self) -> int:
        return self.numerator.degree

    def as_qpoly(self) -> QPolynomial:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"({self.numerator})/{self.denominator}"


@dataclass(frozen=True)
class IntegralBasis:
    """Triangular basis of the maximal order, element i of degree i."""

    field: PureField
    elements: tuple[BasisElement, ...]

    def __post_init__(self):
        if len(self.elements) != self.field.n:
            raise ValueError("basis must have exactly n elements")
        for i, e in enumerate(self.elements):
            if e.degree != i:
                raise ValueError(f"element {i} has degree {e.degree}, want {i}")

    def denominator_ledger_ok(self) -> bool:
        # Theorem-level constraint: every denominator divides n/gcd(n, m)
        # and is coprime to m.
        bound = self.field.n // math.gcd(self.field.n, self.field.m)
        return all(
            bound % e.denominator == 0 and math.gcd(e.denominator, self.field.m) == 1
            for e in self.elements
        )

    def canonical(self) -> tuple[int, IntMatrix]:
        """(D, H): common denominator and HNF of the coordinate matrix.

        Row i of H holds the power-basis coordinates of D * (some Z-basis
        of the same lattice); two bases span the same order iff their
        canonical forms coincide.
        """
        common = 1
        for e in self.elements:
            common = common * e.denominator // math.gcd(common, e.denominator)
        n = self.field.n
        rows = []
        for e in self.elements:
            scale = common // e.denominator
            coeffs = e.numerator.integer_coefficients()
            rows.append([scale * (coeffs[j] if j < len(coeffs) else 0) for j in range(n)])
        return common, hnf(IntMatrix(rows))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.elements) + ")"


def spans_equal(basis1: IntegralBasis, basis2: IntegralBasis) -> bool:
    """Whether the two bases generate the same Z-module."""
    if (basis1.field.n, basis1.field.m) != (basis2.field.n, basis2.field.m):
        raise ValueError("bases live in different fields")
    d1, h1 = basis1.canonical()
    d2, h2 = basis2.canonical()
    if d1 == d2:
        return h1 == h2
    # different common denominators: rescale both to lcm
    lcm = d1 * d2 // math.gcd(d1, d2)
    s1, s2 = lcm // d1, lcm // d2
    return h1.scale(s1) == h2.scale(s2)


@dataclass(frozen=True)
class IndexReport:
    """Index and discriminant bookkeeping for one pure field."""

    per_prime: dict[int, int]
    total_index: int
    field_discriminant: int
    poly_discriminant: int

    def __post_init__(self):
        prod = 1
        for p, e in self.per_prime.items():
            prod *= p ** e
        if prod != self.total_index:
            raise ValueError("total index does not match per-prime exponents")
        if self.field_discriminant * self.total_index ** 2 != self.poly_discriminant:
            raise ValueError("discriminant identity violated")


def s_value(p: int, m: int) -> int:
    """v_p(m^p - m) - 1; the parameter steering the basis shape at p."""
    if m % p == 0:
        raise ValueError("s undefined when p divides m; the Eisenstein branch applies")
    return vp_int(p, m ** p - m) - 1


def h_polynomial(p: int, k: int, r: int, t: int) -> QPolynomial:
    """The geometric sum (X^(p^k) - r^(p^t)) / (X^(p^(k-t)) - r) expanded.

    Degree p^k - p^(k-t), with p^t terms r^j * X^(p^(k-t) * (p^t - 1 - j)).
    """
    if t < 0 or t > k:
        raise ValueError(f"t must lie in [0, {k}], got {t}")
    if not 0 <= r < p ** (k + 1):
        raise ValueError(f"r must be a residue in [0, {p ** (k + 1)})")
    if r % p == 0:
        raise ValueError("r must be coprime to p")
    step = p ** (k - t)
    terms = p ** t
    coeffs = [0] * (p ** k - step + 1)
    power = 1
    for j in range(terms):
        coeffs[step * (terms - 1 - j)] = power
        power *= r
    return QPolynomial(coeffs)


def ind_p_closed_form(p: int, k: int, m: int) -> int:
    """The p-index of a root of X^(p^k) - m, in closed form."""
    if m % p == 0:
        # X^(p^k) - m is p-Eisenstein for square-free m
        return 0
    s = s_value(p, m)
    if s <= k:
        return (p ** k - p ** (k - s)) // (p - 1)
    return (p ** k - 1) // (p - 1)


def _power_basis_elements(n: int) -> tuple[BasisElement, ...]:
    return tuple(BasisElement(QPolynomial.x_power(i), 1) for i in range(n))


def prime_power_basis(
    p: int, k: int, m: int, *, allow_unknown: bool = False
) -> IntegralBasis:
    """Integral basis of Q(m^(1/p^k)) for square-free m.

    For p | m the power basis is already maximal.  Otherwise the basis is
    the double-indexed family alpha^j * h_t(alpha) / p^t, with the row
    layout decided by comparing s = v_p(m^p - m) - 1 against k.
    allow_unknown skips the square-free recheck for callers that already
    settled it.
    """
    field = PureField.create(p ** k, m, allow_unknown=allow_unknown)
    n = field.n
    if m % p == 0:
        return IntegralBasis(field, _power_basis_elements(n))

    r = m % p ** (k + 1)
    s = s_value(p, m)
    elements = []
    if s < k:
        for t in range(s + 1):
            h = h_polynomial(p, k, r, t)
            width = p ** (k - s) if t == s else p ** (k - t) - p ** (k - t - 1)
            for j in range(width):
                elements.append(BasisElement(h.times_x_power(j), p ** t))
    else:
        for t in range(k):
            h = h_polynomial(p, k, r, t)
            width = p ** (k - t) - p ** (k - t - 1)
            for j in range(width):
                elements.append(BasisElement(h.times_x_power(j), p ** t))
        elements.append(BasisElement(h_polynomial(p, k, r, k), p ** k))
    elements.sort(key=lambda e: e.degree)
    return IntegralBasis(field, tuple(elements))


def _crt_pair(a: int, u: int, b: int, v: int) -> int:
    """The residue in [0, uv) that is a mod u and b mod v; gcd(u,v) = 1."""
    if u == 1:
        return b % v
    if v == 1:
        return a % u
    g, inv_u, _ = ext_gcd(u, v)
    if g != 1:
        raise ValueError("moduli are not coprime")
    return (a + u * ((b - a) * inv_u % v)) % (u * v)


def compose_bases(
    basis1: IntegralBasis, basis2: IntegralBasis, m: int
) -> IntegralBasis:
    """Merge bases of Q(m^(1/n1)) and Q(m^(1/n2)), gcd(n1, n2) = 1.

    For each degree k the unique stretched elements Psi = X^b * psi_a(X^n2)
    and Omega = X^d * omega_c(X^n1) of degree k are combined: writing them
    as A/u and B/v, the result is C/(uv) with C_i the CRT representative of
    (A_i mod u, B_i mod v) in [0, uv).  Then v*gamma - Psi and u*gamma -
    Omega are integral by construction, which makes gamma integral.
    """
    n1, n2 = basis1.field.n, basis2.field.n
    if math.gcd(n1, n2) != 1:
        raise ValueError(f"degrees {n1} and {n2} are not coprime")
    if basis1.field.m != m or basis2.field.m != m:
        raise ValueError("bases must belong to the same radicand m")
    n = n1 * n2
    # both inputs carry an already-validated m, so assemble the composite
    # field directly rather than re-running the square-free check
    merged = tuple(sorted(basis1.field.factorization + basis2.field.factorization))
    field = PureField(n, m, merged)

    elements = []
    for k in range(n):
        a, b = divmod(k, n2)
        c, d = divmod(k, n1)
        num_a = basis1.elements[a].numerator.inflate(n2).times_x_power(b)
        num_c = basis2.elements[c].numerator.inflate(n1).times_x_power(d)
        u = basis1.elements[a].denominator
        v = basis2.elements[c].denominator
        coeffs = []
        for i in range(k + 1):
            ai = int(num_a.coefficient(i))
            bi = int(num_c.coefficient(i))
            coeffs.append(_crt_pair(ai, u, bi, v))
        if coeffs[k] == 0:
            # both inputs are monic, so this only happens for u = v = 1,
            # where the representative range [0, 1) collapses; keep degree k
            coeffs[k] = u * v
        elements.append(BasisElement(QPolynomial(coeffs), u * v))
    return IntegralBasis(field, tuple(elements))


def index_report(field: PureField) -> IndexReport:
    """Assemble the index/discriminant ledger from the closed forms alone."""
    n, m = field.n, field.m
    per_prime = {}
    for p, k in field.factorization:
        # merging coprime parts raises each prime-power index to the
        # complementary power: ind_p picks up the cofactor n / p^k
        per_prime[p] = ind_p_closed_form(p, k, m) * (n // p ** k)
    total = 1
    for p, e in per_prime.items():
        total *= p ** e
    # disc(X^n + a) = (-1)^(n(n-1)/2) * n^n * a^(n-1); substituting a = -m
    # contributes a further (-1)^(n-1), so the exponent is (n-1)(n+2)/2
    sign = -1 if ((n - 1) * (n + 2) // 2) % 2 else 1
    poly_disc = sign * n ** n * m ** (n - 1)
    if poly_disc % (total * total) != 0:
        raise ArithmeticError("index square does not divide the discriminant")
    return IndexReport(per_prime, total, poly_disc // (total * total), poly_disc)


def integral_basis(
    field: PureField, *, enum_budget: int = 2 ** 24
) -> tuple[IntegralBasis, IndexReport]:
    """Integral basis plus index ledger, certified before being returned.

    Prime-power bases are folded over the ascending prime powers of n via
    the CRT merge.  The result is post-certified (integrality, ring
    closure, discriminant accounting, p-maximality within budget); a basis
    that fails certification is never emitted.
    """
    basis = None
    for p, k in field.factorization:
        piece = prime_power_basis(p, k, field.m, allow_unknown=True)
        basis = piece if basis is None else compose_bases(basis, piece, field.m)
    assert basis is not None
    report = index_report(field)

    from . import oracle

    certification = oracle.certify(basis, enum_budget=enum_budget)
    if not certification.certified:
        raise RuntimeError(
            f"constructed basis for {field} failed certification: {certification}"
        )
    if not basis.denominator_ledger_ok():
        raise RuntimeError(f"denominator ledger violated for {field}")
    _check_discriminant_accounting(basis, report)
    return basis, report


def _check_discriminant_accounting(basis: IntegralBasis, report: IndexReport) -> None:
    # triangular determinant: the product of the denominators is the index
    prod = 1
    for e in basis.elements:
        prod *= e.denominator
    if prod != report.total_index:
        raise RuntimeError(
            f"denominator product {prod} disagrees with index {report.total_index}"
        )


def basis_json_dict(basis: IntegralBasis, report: IndexReport) -> dict:
    """JSON-ready description of a basis and its ledger."""
    common, matrix = basis.canonical()
    return {
        "n": basis.field.n,
        "m": basis.field.m,
        "elements": [
            {"num": list(e.numerator.integer_coefficients()), "den": e.denominator}
            for e in basis.elements
        ],
        "hnf": {"den": common, "matrix": [list(row) for row in matrix.entries]},
        "index": {str(p): e for p, e in sorted(report.per_prime.items())},
        "total_index": report.total_index,
        "disc_field": report.field_discriminant,
        "disc_poly": report.poly_discriminant,
    }
