"""Newton polygons of integer polynomials at a prime p.

Builds phi-adic developments, the principal (negative-slope) polygon of the
valuation points, residual polynomials over F_p[x]/(phi), the regularity
test, and the resulting lower bound for the p-index of a monic integer
polynomial, which is exact exactly when every development is regular.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import (
    FpPolynomial,
    QPolynomial,
    fp_ext_gcd,
    fp_gcd,
    vp_poly,
)


# ---------------------------------------------------------------------------
# phi-adic development
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiDevelopment:
    """The base-phi expansion f = sum a_i * phi**i with deg(a_i) < deg(phi).

    valuations[i] is vp of a_i, or None when a_i = 0 (valuation +infinity).
    """

    f: QPolynomial
    phi: QPolynomial
    p: int
    coefficients: tuple[QPolynomial, ...]
    valuations: tuple[Optional[int], ...]


def phi_development(f: QPolynomial, phi: QPolynomial, p: int) -> PhiDevelopment:
    """Expand f in base phi by repeated division with remainder."""
    if not f.is_integral() or not phi.is_integral():
        raise ValueError("development expects integer coefficients")
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    coeffs: list[QPolynomial] = []
    rem = f
    while not rem.is_zero():
        rem, a = divmod(rem, phi)
        coeffs.append(a)
    if not coeffs:
        coeffs.append(QPolynomial())
    vals = tuple(None if a.is_zero() else vp_poly(p, a) for a in coeffs)
    return PhiDevelopment(f, phi, p, tuple(coeffs), vals)


# ---------------------------------------------------------------------------
# residual polynomials over F_p[x]/(phi)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FpExtPolynomial:
    """Polynomial in Y whose coefficients live in the field F_p[x]/(phi_bar)."""

    p: int
    phi_bar: FpPolynomial
    coefficients: tuple[FpPolynomial, ...]

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> FpPolynomial:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return FpPolynomial(self.p)

    def _mul_coeff(self, a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
        return (a * b) % self.phi_bar

    def _inv_coeff(self, a: FpPolynomial) -> FpPolynomial:
        g, s, _ = fp_ext_gcd(a, self.phi_bar)
        if g.degree != 0:
            raise ValueError("coefficient not invertible; phi_bar must be irreducible")
        return s % self.phi_bar

    def derivative(self) -> "FpExtPolynomial":
        return FpExtPolynomial(
            self.p,
            self.phi_bar,
            tuple((c * i) % self.phi_bar for i, c in enumerate(self.coefficients) if i),
        )

    def _divmod(self, divisor: "FpExtPolynomial") -> tuple["FpExtPolynomial", "FpExtPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        inv = self._inv_coeff(divisor.coefficients[-1])
        dd = divisor.degree
        rem = list(self.coefficients)
        quo = [FpPolynomial(self.p)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = self._mul_coeff(c, inv)
            quo[i - dd] = q
            for j, b in enumerate(divisor.coefficients):
                rem[i - dd + j] = rem[i - dd + j] - self._mul_coeff(q, b)
        return (
            FpExtPolynomial(self.p, self.phi_bar, tuple(quo)),
            FpExtPolynomial(self.p, self.phi_bar, tuple(rem[:dd])),
        )

    def gcd(self, other: "FpExtPolynomial") -> "FpExtPolynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a._divmod(b)[1]
        if a.is_zero():
            raise ValueError("gcd of zero polynomials undefined")
        inv = a._inv_coeff(a.coefficients[-1])
        return FpExtPolynomial(a.p, a.phi_bar, tuple(a._mul_coeff(c, inv) for c in a.coefficients))

    def is_separable(self) -> bool:
        """True iff the polynomial has no repeated roots over the residue field."""
        deriv = self.derivative()
        if deriv.is_zero():
            return self.degree == 0
        return self.gcd(deriv).degree == 0

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if c.is_zero():
                continue
            if c.degree == 0:
                cstr = "" if (c.coefficients[0] == 1 and i > 0) else str(c.coefficients[0])
            else:
                cstr = "(" + str(c.lift()).lower() + ")"
            if i == 0:
                term = cstr if cstr else "1"
            elif i == 1:
                term = f"{cstr}Y"
            else:
                term = f"{cstr}Y^{i}"
            parts.append(term)
        return "+".join(parts)


# ---------------------------------------------------------------------------
# the principal polygon
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Side:
    """One negative-slope side of a principal polygon.

    The slope is -h/e in lowest terms, l is the length of the horizontal
    projection, and d = l/e is the degree of the attached residual.
    """

    start: tuple[int, int]
    end: tuple[int, int]
    h: int
    e: int
    l: int
    d: int
    residual: Optional[FpExtPolynomial] = None

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)


@dataclass(frozen=True)
class NewtonPolygon:
    """Principal polygon: the negative-slope part of the lower convex hull."""

    points: tuple[tuple[int, int], ...]
    vertices: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]

    def __post_init__(self):
        slopes = [s.slope for s in self.sides]
        if any(s >= 0 for s in slopes):
            raise ValueError("principal polygon sides must have negative slope")
        if any(b <= a for a, b in zip(slopes, slopes[1:])):
            raise ValueError("side slopes must strictly increase")


def _lower_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def principal_polygon(dev: PhiDevelopment) -> NewtonPolygon:
    """Negative-slope part of the lower convex hull of the valuation points.

    Residual polynomials are attached to every side, including degree-one
    sides.  The polygon may be empty (no negative-slope hull edges).
    """
    points = tuple(
        (i, u) for i, u in enumerate(dev.valuations) if u is not None
    )
    hull = _lower_hull(points)
    vertices: list[tuple[int, int]] = []
    sides: list[Side] = []
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        dx = b[0] - a[0]
        dy = a[1] - b[1]
        g = math.gcd(dx, dy)
        geometry = Side(start=a, end=b, h=dy // g, e=dx // g, l=dx, d=g)
        side = Side(
            start=a, end=b, h=geometry.h, e=geometry.e, l=geometry.l, d=geometry.d,
            residual=residual_polynomial(dev, geometry),
        )
        if not vertices:
            vertices.append(a)
        vertices.append(b)
        sides.append(side)
    return NewtonPolygon(points, tuple(vertices), tuple(sides))


def residual_polynomial(dev: PhiDevelopment, side: Side) -> FpExtPolynomial:
    """Coefficients c_j read off the lattice points of the side.

    c_j is the reduction of a_i / p**u_i modulo (p, phi) when the point
    (i, u_i) with i = start + j*e lies on the side, and zero otherwise; the
    endpoints always lie on the side, so the degree is exactly d.
    """
    p = dev.p
    phi_bar = FpPolynomial.from_qpoly(p, dev.phi)
    coeffs: list[FpPolynomial] = []
    for j in range(side.d + 1):
        i = side.start[0] + j * side.e
        u_line = side.start[1] - j * side.h
        a_i = dev.coefficients[i] if i < len(dev.coefficients) else QPolynomial()
        u_i = dev.valuations[i] if i < len(dev.valuations) else None
        if a_i.is_zero() or u_i != u_line:
            coeffs.append(FpPolynomial(p))
            continue
        scaled = a_i / (p ** u_line)
        coeffs.append(FpPolynomial.from_qpoly(p, scaled) % phi_bar)
    return FpExtPolynomial(p, phi_bar, tuple(coeffs))


def phi_index(polygon: NewtonPolygon, degphi: int) -> int:
    """deg(phi) times the number of lattice points with x >= 1 and y >= 1
    lying on or below the polygon, with x bounded by the polygon's
    horizontal projection."""
    if not polygon.sides:
        return 0
    count = 0
    x_start = polygon.vertices[0][0]
    x_end = polygon.vertices[-1][0]
    for x in range(max(1, x_start), x_end + 1):
        for side in polygon.sides:
            if side.start[0] <= x <= side.end[0]:
                height = Fraction(side.start[1]) - Fraction(side.h, side.e) * (x - side.start[0])
                count += max(0, height.__floor__())
                break
    return degphi * count


def is_regular(dev: PhiDevelopment) -> bool:
    """True iff the residual polynomials of all sides are separable."""
    polygon = principal_polygon(dev)
    return all(side.residual.is_separable() for side in polygon.sides)


# ---------------------------------------------------------------------------
# factorization over F_p (distinct irreducible factors only)
# ---------------------------------------------------------------------------

def _pth_root(f: FpPolynomial) -> FpPolynomial:
    # over F_p a polynomial with zero derivative is g(X^p) = g(X)**p
    return FpPolynomial(f.p, [f.coefficient(i) for i in range(0, len(f.coefficients), f.p)])


def radical_mod_p(f: FpPolynomial) -> FpPolynomial:
    """Monic product of the distinct irreducible factors of f over F_p."""
    f = f.monic()
    if f.degree <= 0:
        return FpPolynomial(f.p, (1,))
    deriv = f.derivative()
    if deriv.is_zero():
        return radical_mod_p(_pth_root(f))
    g = fp_gcd(f, deriv)
    w = (f // g).monic()
    y = g
    while True:
        c = fp_gcd(y, w)
        if c.degree == 0:
            break
        y = y // c
    if y.degree <= 0:
        return w
    return (w * radical_mod_p(_pth_root(y))).monic()


def _distinct_degree(f: FpPolynomial) -> list[tuple[int, FpPolynomial]]:
    # f monic squarefree; returns (d, product of all irreducible factors of degree d)
    p = f.p
    out: list[tuple[int, FpPolynomial]] = []
    x = FpPolynomial(p, (0, 1))
    h = x
    rest = f
    d = 0
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            out.append((rest.degree, rest))
            break
        h = h.pow_mod(p, rest)
        g = fp_gcd(h - x, rest) if not (h - x).is_zero() else rest
        if g.degree > 0:
            out.append((d, g))
            rest = (rest // g).monic()
            h = h % rest
    return out


def _equal_degree(f: FpPolynomial, d: int, rng: random.Random) -> list[FpPolynomial]:
    # f monic squarefree, all irreducible factors of degree d
    p = f.p
    if f.degree == d:
        return [f]
    n = f.degree
    while True:
        a = FpPolynomial(p, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        g = fp_gcd(a, f)
        if 0 < g.degree < n:
            split = g
        else:
            if p == 2:
                t = a
                acc = a
                for _ in range(d - 1):
                    t = t.pow_mod(2, f)
                    acc = (acc + t) % f
                b = acc
            else:
                b = a.pow_mod((p ** d - 1) // 2, f) - FpPolynomial(p, (1,))
            if b.is_zero():
                continue
            split = fp_gcd(b, f)
            if not 0 < split.degree < n:
                continue
        return _equal_degree(split, d, rng) + _equal_degree((f // split).monic(), d, rng)


def distinct_irreducible_factors(f: FpPolynomial) -> list[FpPolynomial]:
    """Distinct monic irreducible factors of f over F_p, sorted by
    (degree, coefficient tuple) so the result is deterministic."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rad = radical_mod_p(f)
    rng = random.Random(0)
    factors: list[FpPolynomial] = []
    for d, prod in _distinct_degree(rad):
        factors.extend(_equal_degree(prod, d, rng))
    factors.sort(key=lambda g: (g.degree, g.coefficients))
    return factors


# ---------------------------------------------------------------------------
# the p-index bound
# ---------------------------------------------------------------------------

def _q_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a / a.leading_coefficient()


def index_lower_bound(f: QPolynomial, p: int) -> tuple[int, bool]:
    """Lower bound for the p-index of a monic integer polynomial.

    Factors f mod p into distinct monic irreducibles, lifts each factor phi
    to integer coefficients in [0, p), and sums the phi-indices of the
    principal polygons.  The second component is True when every
    development is regular, in which case the bound is the exact p-index.
    """
    if not f.is_integral() or not f.is_monic():
        raise ValueError("index bound expects a monic integer polynomial")
    if _q_gcd(f, f.derivative()).degree > 0:
        raise ValueError("polynomial must be square-free over Q")
    fbar = FpPolynomial.from_qpoly(p, f)
    total = 0
    exact = True
    for factor in distinct_irreducible_factors(fbar):
        phi = factor.lift()
        dev = phi_development(f, phi, p)
        polygon = principal_polygon(dev)
        total += phi_index(polygon, factor.degree)
        if not all(side.residual.is_separable() for side in polygon.sides):
            exact = False
    return total, exact


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def polygon_json_dict(polygon: NewtonPolygon, degphi: int) -> dict:
    """JSON-ready dictionary for a principal polygon."""
    return {
        "points": [[i, u] for i, u in polygon.points],
        "vertices": [[i, u] for i, u in polygon.vertices],
        "sides": [
            {
                "slope": f"-{s.h}/{s.e}",
                "residual": str(s.residual),
                "separable": s.residual.is_separable(),
            }
            for s in polygon.sides
        ],
        "phi_index": phi_index(polygon, degphi),
    }


def polygon_ascii(polygon: NewtonPolygon) -> str:
    """Plain-text plot of the development points and polygon vertices."""
    if not polygon.points:
        return "(no points)"
    max_u = max(u for _, u in polygon.points)
    max_i = max(i for i, _ in polygon.points)
    vertex_set = set(polygon.vertices)
    point_set = set(polygon.points)
    lines = []
    for u in range(max_u, -1, -1):
        row = [f"{u:3d} |"]
        for i in range(max_i + 1):
            if (i, u) in vertex_set:
                row.append(" o")
            elif (i, u) in point_set:
                row.append(" *")
            else:
                row.append("  ")
        lines.append("".join(row))
    lines.append("    +" + "--" * (max_i + 1))
    labels = "     "
    for i in range(max_i + 1):
        labels += f"{i:2d}" if i < 100 else " ."

    lines.append(labels)
    for s in polygon.sides:
        lines.append(
            f"side {s.start} -> {s.end}: slope -{s.h}/{s.e}, "
            f"residual {s.residual}, "
            f"{'separable' if s.residual.is_separable() else 'not separable'}"
        )
    if not polygon.sides:
        lines.append("(empty principal polygon)")
    return "\n".join(lines)
