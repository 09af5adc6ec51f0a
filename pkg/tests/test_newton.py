"""Tests for phi-adic developments, principal polygons, and the p-index bound."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purefields.exactmath import FpPolynomial, QPolynomial, vp_int
from purefields.newton import (
    FpExtPolynomial,
    NewtonPolygon,
    Side,
    distinct_irreducible_factors,
    index_lower_bound,
    is_regular,
    phi_development,
    phi_index,
    polygon_ascii,
    polygon_json_dict,
    principal_polygon,
    radical_mod_p,
    residual_polynomial,
)

X = QPolynomial([0, 1])


def poly(*coeffs):
    return QPolynomial(coeffs)


# ---------------------------------------------------------------------------
# developments
# ---------------------------------------------------------------------------

def test_development_phi_equals_x():
    dev = phi_development(poly(-2, 0, 0, 0, 1), X, 2)
    assert dev.coefficients == (poly(-2), poly(0), poly(0), poly(0), poly(1))
    assert dev.valuations == (1, None, None, None, 0)


def test_development_identity_case():
    phi = poly(3, 1)
    dev = phi_development(phi, phi, 5)
    assert dev.coefficients == (QPolynomial(), QPolynomial.one())
    assert dev.valuations == (None, 0)


def test_development_binomials():
    # X^9 - m in base X - m expands with binomial coefficients
    m = 28
    f = QPolynomial([-m] + [0] * 8 + [1])
    phi = poly(-m, 1)
    dev = phi_development(f, phi, 3)
    assert dev.coefficients[0] == poly(m ** 9 - m)
    import math
    for i in range(1, 10):
        assert dev.coefficients[i] == poly(math.comb(9, i) * m ** (9 - i))


def test_development_requires_monic_phi():
    with pytest.raises(ValueError):
        phi_development(poly(1, 1), poly(1, 2), 3)


@given(
    fc=st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=9),
    pc=st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=3),
    p=st.sampled_from([2, 3, 5]),
)
@settings(max_examples=120)
def test_development_reconstructs(fc, pc, p):
    f = QPolynomial(fc)
    phi = QPolynomial(pc + [1])
    dev = phi_development(f, phi, p)
    acc = QPolynomial()
    power = QPolynomial.one()
    for a in dev.coefficients:
        acc = acc + a * power
        power = power * phi
    assert acc == f
    assert all(a.degree < phi.degree for a in dev.coefficients)


# ---------------------------------------------------------------------------
# principal polygons
# ---------------------------------------------------------------------------

def _dev_x9_minus_28():
    f = QPolynomial([-28] + [0] * 8 + [1])
    return phi_development(f, poly(-28, 1), 3)


def test_polygon_x9_minus_28():
    polygon = principal_polygon(_dev_x9_minus_28())
    assert polygon.vertices == ((0, 3), (1, 2), (3, 1), (9, 0))
    assert [s.slope for s in polygon.sides] == [
        Fraction(-1), Fraction(-1, 2), Fraction(-1, 6)
    ]
    assert phi_index(polygon, 1) == 4


def test_polygon_flat_is_empty():
    dev = phi_development(poly(1, 0, 1), X, 5)
    polygon = principal_polygon(dev)
    assert polygon.sides == ()
    assert polygon.vertices == ()
    assert phi_index(polygon, 1) == 0


def test_polygon_eisenstein():
    # X^4 - 6 at p = 2 is Eisenstein: single side (0,1)-(4,0), index 0
    dev = phi_development(poly(-6, 0, 0, 0, 1), X, 2)
    polygon = principal_polygon(dev)
    assert polygon.vertices == ((0, 1), (4, 0))
    assert len(polygon.sides) == 1
    assert polygon.sides[0].slope == Fraction(-1, 4)
    assert phi_index(polygon, 1) == 0


def test_points_lie_on_or_above_polygon():
    polygon = principal_polygon(_dev_x9_minus_28())
    for x, u in polygon.points:
        for side in polygon.sides:
            if side.start[0] <= x <= side.end[0]:
                height = Fraction(side.start[1]) - Fraction(side.h, side.e) * (x - side.start[0])
                assert u >= height


# ---------------------------------------------------------------------------
# residual polynomials
# ---------------------------------------------------------------------------

def test_residual_merged_side_quartic():
    # X^4 - 5 at p = 2, phi = X - 1: one side (0,2)-(4,0) carrying Y^2+Y+1
    dev = phi_development(poly(-5, 0, 0, 0, 1), poly(-1, 1), 2)
    polygon = principal_polygon(dev)
    assert polygon.vertices == ((0, 2), (4, 0))
    side = polygon.sides[0]
    assert (side.h, side.e, side.l, side.d) == (1, 2, 4, 2)
    residual = side.residual
    assert residual.degree == 2
    assert [c.coefficients for c in residual.coefficients] == [(1,), (1,), (1,)]
    assert residual.is_separable()
    assert str(residual) == "Y^2+Y+1"


def test_residual_degree_one_sides():
    polygon = principal_polygon(_dev_x9_minus_28())
    for side in polygon.sides:
        assert side.d == 1
        assert side.residual.degree == 1
        assert side.residual.is_separable()


def test_residual_off_side_coefficient_is_zero():
    # X^2 + 4X + 12 at p = 2: points (0,2),(1,2),(2,0); (1,2) lies above the
    # side, so the middle residual coefficient vanishes and Y^2+1 = (Y+1)^2
    dev = phi_development(poly(12, 4, 1), X, 2)
    polygon = principal_polygon(dev)
    assert polygon.vertices == ((0, 2), (2, 0))
    side = polygon.sides[0]
    assert side.d == 2
    assert side.residual.coefficient(1).is_zero()
    assert not side.residual.is_separable()
    assert not is_regular(dev)


def test_residual_recompute_matches_attached():
    dev = _dev_x9_minus_28()
    polygon = principal_polygon(dev)
    for side in polygon.sides:
        assert residual_polynomial(dev, side) == side.residual


def test_is_regular_examples():
    assert is_regular(_dev_x9_minus_28())
    dev = phi_development(poly(-5, 0, 0, 0, 1), poly(-1, 1), 2)
    assert is_regular(dev)


# ---------------------------------------------------------------------------
# factorization mod p
# ---------------------------------------------------------------------------

def test_radical_strips_multiplicity():
    f = FpPolynomial(2, [0, 0, 1, 0, 1, 0, 1])  # X^2 * (X^2+X+1)^2
    rad = radical_mod_p(f)
    # the radical is X * (X^2+X+1) = X^3 + X^2 + X
    assert rad == FpPolynomial(2, [0, 1, 1, 1])


def test_distinct_factors_linear_split():
    f = FpPolynomial(5, [-1, 0, 0, 0, 1])  # X^4 - 1 over F_5
    factors = distinct_irreducible_factors(f)
    assert [g.coefficients for g in factors] == [(1, 1), (2, 1), (3, 1), (4, 1)]


def test_distinct_factors_mixed_degrees():
    f = FpPolynomial(2, [0, 0, 1, 1, 1])  # X^2 * (X^2+X+1)
    factors = distinct_irreducible_factors(f)
    assert factors == [FpPolynomial(2, [0, 1]), FpPolynomial(2, [1, 1, 1])]


def test_distinct_factors_frobenius_power():
    # X^9 - 28 mod 3 collapses to (X - 1)^9
    f = FpPolynomial(3, [-28] + [0] * 8 + [1])
    factors = distinct_irreducible_factors(f)
    assert factors == [FpPolynomial(3, [-1, 1])]


def test_distinct_factors_deterministic():
    rng = random.Random(42)
    for p in (2, 3, 5, 7):
        for _ in range(8):
            coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 9))] + [1]
            f = FpPolynomial(p, coeffs)
            once = distinct_irreducible_factors(f)
            twice = distinct_irreducible_factors(f)
            assert once == twice
            prod = FpPolynomial(p, (1,))
            for g in once:
                assert g.leading_coefficient() == 1
                assert (f % g).is_zero()
                prod = prod * g
            assert prod == radical_mod_p(f)


# ---------------------------------------------------------------------------
# the index bound
# ---------------------------------------------------------------------------

def test_index_bound_x9_minus_28():
    f = QPolynomial([-28] + [0] * 8 + [1])
    assert index_lower_bound(f, 3) == (4, True)


def test_index_bound_eisenstein():
    for n, m, p in [(4, 6, 2), (9, 3, 3), (6, 10, 5)]:
        f = QPolynomial([-m] + [0] * (n - 1) + [1])
        assert index_lower_bound(f, p) == (0, True)


def test_index_bound_inert_quadratic():
    # X^2 - 5 is irreducible mod 3 with multiplicity one: no contribution
    assert index_lower_bound(poly(-5, 0, 1), 3) == (0, True)


def test_index_bound_ramified_square():
    # mod 2, X^2 - 5 = (X+1)^2; the single side is regular and certifies
    # the full power-basis index of Z[sqrt(5)]
    assert index_lower_bound(poly(-5, 0, 1), 2) == (1, True)


def test_index_bound_irregular_flagged():
    bound, exact = index_lower_bound(poly(12, 4, 1), 2)
    assert bound == 1
    assert exact is False


def test_index_bound_rejects_bad_input():
    with pytest.raises(ValueError):
        index_lower_bound(poly(1, 2, 2), 3)  # not monic
    with pytest.raises(ValueError):
        index_lower_bound(QPolynomial([Fraction(1, 2), 1]), 3)  # not integral
    with pytest.raises(ValueError):
        index_lower_bound(poly(4, 4, 1), 2)  # (X+2)^2 has a repeated factor


def test_index_bound_against_maximal_order():
    # independent check: compare with the p-valuation of the index of the
    # power basis inside a maximal order computed by sympy
    import math

    import sympy
    from sympy.abc import x
    from sympy.polys.numberfields.basis import round_two

    for n, m in [(2, 5), (2, 13), (2, -26), (3, 10), (3, 28), (3, -26),
                 (4, 5), (4, 17), (4, 33), (5, 7), (5, -26), (6, 17)]:
        fe = x ** n - m
        _, dK = round_two(sympy.Poly(fe, x, domain="QQ"))
        disc_f = int(sympy.discriminant(fe))
        ind = math.isqrt(abs(disc_f // int(dK)))
        f = QPolynomial([-m] + [0] * (n - 1) + [1])
        for p in (2, 3, 5):
            bound, exact = index_lower_bound(f, p)
            if exact:
                assert bound == (vp_int(p, ind) if ind % p == 0 else 0), (n, m, p)
            else:
                assert bound <= (vp_int(p, ind) if ind % p == 0 else 0), (n, m, p)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def test_polygon_json_shape():
    dev = _dev_x9_minus_28()
    polygon = principal_polygon(dev)
    data = polygon_json_dict(polygon, 1)
    assert data["phi_index"] == 4
    assert data["vertices"] == [[0, 3], [1, 2], [3, 1], [9, 0]]
    assert [s["slope"] for s in data["sides"]] == ["-1/1", "-1/2", "-1/6"]
    assert all(s["separable"] for s in data["sides"])
    assert [0, 3] in data["points"]


def test_polygon_asciiemits_sides():
    polygon = principal_polygon(_dev_x9_minus_28())
    art = polygon_ascii(polygon)
    assert "slope -1/6" in art
    assert "o" in art
