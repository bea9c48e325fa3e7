import math
import random
from fractions import Fraction

import pytest

from apolar.errors import (
    ArityMismatchError,
    DegreeMismatchError,
    FieldMismatchError,
    NonHomogeneousError,
    ParseError,
    VariableOutOfRangeError,
)
from apolar.fields import QQ, PrimeField
from apolar.poly import (
    RING_S,
    Form,
    ProjectivePoint,
    coefficient_vector,
    contract,
    dual_power,
    linear_power,
    monomial_basis,
    parse_form,
)


def test_monomial_basis_small():
    assert monomial_basis(2, 1) == ((1, 0), (0, 1))
    assert monomial_basis(2, 0) == ((0, 0),)
    assert len(monomial_basis(3, 2)) == 6


def test_monomial_basis_counts_and_order():
    for nvars in (1, 2, 3, 4):
        for k in range(6):
            basis = monomial_basis(nvars, k)
            assert len(basis) == math.comb(k + nvars - 1, nvars - 1)
            assert len(set(basis)) == len(basis)
            assert all(sum(e) == k for e in basis)
            assert list(basis) == sorted(basis, reverse=True)


def test_parse_monomial():
    F = parse_form("x0*x1^2*x2^3", 3, QQ)
    assert F.terms == {(1, 2, 3): Fraction(1)}
    assert F.degree == 6


def test_parse_signs_and_coefficients():
    F = parse_form("x0^2 - x1^2", 2, QQ)
    assert F.terms == {(2, 0): Fraction(1), (0, 2): Fraction(-1)}
    G = parse_form("-3/2*x0*x1 + x1^2", 2, QQ)
    assert G.terms == {(1, 1): Fraction(-3, 2), (0, 2): Fraction(1)}


def test_parse_non_homogeneous_flagged():
    F = parse_form("x0 + x1^2", 2, QQ)
    assert not F.is_homogeneous
    with pytest.raises(NonHomogeneousError):
        F.degree


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_form("x0 + @", 2, QQ)
    assert err.value.position is not None
    with pytest.raises(VariableOutOfRangeError):
        parse_form("x5", 2, QQ)
    with pytest.raises(ParseError):
        parse_form("x0 y0", 2, QQ)
    with pytest.raises(ParseError):
        parse_form("", 2, QQ)
    with pytest.raises(ParseError):
        parse_form("x0 +", 2, QQ)


def test_parse_wrong_ring():
    with pytest.raises(ParseError):
        parse_form("y0", 2, QQ)  # default ring is x
    g = parse_form("y0^2", 2, QQ, ring=RING_S)
    assert g.ring == RING_S


def _random_form(rng, nvars, degree, field):
    terms = {}
    for exps in monomial_basis(nvars, degree):
        if field is QQ:
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        else:
            c = rng.randrange(field.p)
        terms[exps] = c
    return Form(nvars, field, terms)


def test_print_parse_round_trip():
    rng = random.Random(7)
    for _ in range(40):
        nvars = rng.randint(1, 3)
        degree = rng.randint(1, 4)
        field = QQ if rng.random() < 0.5 else PrimeField(101)
        F = _random_form(rng, nvars, degree, field)
        assert parse_form(str(F), nvars, field) == F


def test_contract_examples():
    y0 = parse_form("y0", 2, QQ, ring=RING_S)
    assert contract(y0, parse_form("x0^2", 2, QQ)) == parse_form("x0", 2, QQ)
    y0y1 = parse_form("y0*y1", 2, QQ, ring=RING_S)
    assert contract(y0y1, parse_form("x0*x1^2", 2, QQ)) == parse_form("x1", 2, QQ)
    y0sq = parse_form("y0^2", 2, QQ, ring=RING_S)
    assert contract(y0sq, parse_form("x0*x1^2", 2, QQ)).is_zero


def test_contract_bilinear_and_module_law():
    rng = random.Random(11)
    f101 = PrimeField(101)
    for _ in range(50):
        nvars = rng.randint(2, 3)
        g1 = _random_form(rng, nvars, rng.randint(1, 2), f101)
        g1 = Form(nvars, f101, g1.terms, RING_S)
        g2 = _random_form(rng, nvars, rng.randint(1, 2), f101)
        g2 = Form(nvars, f101, g2.terms, RING_S)
        F = _random_form(rng, nvars, rng.randint(3, 5), f101)
        if g1.degree == g2.degree:
            assert contract(g1 + g2, F) == contract(g1, F) + contract(g2, F)
        assert contract(g1, contract(g2, F)) == contract(g1 * g2, F)


def test_contract_mismatch_errors():
    g = parse_form("y0", 2, QQ, ring=RING_S)
    with pytest.raises(ArityMismatchError):
        contract(g, parse_form("x0^2", 3, QQ))
    with pytest.raises(FieldMismatchError):
        contract(g, parse_form("x0^2", 2, PrimeField(7)))


def test_linear_power():
    p = ProjectivePoint(QQ, [Fraction(1), Fraction(0)])
    assert linear_power(p, 3) == parse_form("x0^3", 2, QQ)
    p = ProjectivePoint(QQ, [Fraction(1), Fraction(1)])
    assert linear_power(p, 2) == parse_form("x0^2 + 2*x0*x1 + x1^2", 2, QQ)
    p = ProjectivePoint(QQ, [Fraction(1), Fraction(-1)])
    assert linear_power(p, 2) == parse_form("x0^2 - 2*x0*x1 + x1^2", 2, QQ)


def test_dual_power_contraction_identity():
    # contracting with g gives g(p) times the lower-degree dual form
    f7 = PrimeField(7)
    p = ProjectivePoint(f7, [1, 3, 5])
    D = dual_power(p, 4)
    value_deg1 = contract(parse_form("y1", 3, f7, ring=RING_S), D)
    assert value_deg1 == dual_power(p, 3).scale(3)
    value_deg2 = contract(parse_form("y1*y2", 3, f7, ring=RING_S), D)
    assert value_deg2 == dual_power(p, 2).scale(f7.mul(3, 5))


def test_coefficient_vector():
    basis = monomial_basis(2, 2)
    F = parse_form("x0*x1", 2, QQ)
    assert coefficient_vector(F, basis) == [0, 1, 0]
    assert coefficient_vector(Form.zero(2, QQ), basis) == [0, 0, 0]
    assert coefficient_vector(parse_form("3*x0^2", 2, QQ), basis) == [3, 0, 0]
    with pytest.raises(DegreeMismatchError):
        coefficient_vector(parse_form("x0", 2, QQ), basis)


def test_projective_point_normalization():
    p = ProjectivePoint(QQ, [Fraction(0), Fraction(2), Fraction(4)])
    assert p.coords == (0, 1, 2)
    q = ProjectivePoint(QQ, [Fraction(0), Fraction(1), Fraction(2)])
    assert p == q and hash(p) == hash(q)
    assert p != ProjectivePoint(QQ, [Fraction(1), Fraction(1), Fraction(2)])


def test_projective_point_parse_format():
    p = ProjectivePoint.parse("1:-1", QQ)
    assert p.coords == (1, -1)
    assert ProjectivePoint.parse(p.format(), QQ) == p
