"""Henselization towers: adjunction steps, exact equality, evaluation."""

import random
from fractions import Fraction

import pytest

from henselian.errors import (
    NotResiduallyIrreducible,
    PreconditionViolated,
)
from henselian.poly import Poly, field_factor
from henselian.rings import LocalizedIntegers, PrimeField, TruncatedPadics
from henselian.tower import (
    TowerRing,
    adjoin_hensel_root,
    adjoin_residue_extension,
    evaluate_into,
    separable_closure_step,
    tower_eq,
    tower_from_json,
    tower_local_split,
    tower_residue,
    tower_to_json,
)


def _standard_tower():
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    return adjoin_hensel_root(base, Poly(base, [-5, 1, 1]))  # X^2 + X - 5


def test_adjoin_hensel_root_example():
    tower, x = _standard_tower()
    assert tower_eq(x * (x + tower.one), tower.element(5))
    # explicit radical witness: x = -a0 * y^(-1) with y = x + a1
    y = x + tower.one
    assert tower_eq(y * x, tower.element(5))


def test_adjoin_degenerate_and_error():
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    tower, x = adjoin_hensel_root(base, Poly(base, [0, 1]))  # f = X
    assert not x
    with pytest.raises(PreconditionViolated):
        adjoin_hensel_root(base, Poly(base, [-1, 1, 1]))  # a0 is a unit


def test_tower_local_split_examples():
    tower, x = _standard_tower()
    assert tower_local_split(x)[0] == "radical"
    branch, inv = tower_local_split(x + tower.one)
    assert branch == "unit"
    assert tower_eq((x + tower.one) * inv, tower.one)
    branch, inv = tower_local_split(tower.element(Fraction(3, 2)))
    assert branch == "unit"
    assert tower_eq(inv, tower.element(Fraction(2, 3)))


def test_tower_eq_examples():
    tower, x = _standard_tower()
    assert tower_eq(x * x + x, tower.element(5))
    assert not tower_eq(x, tower.zero)
    assert tower_eq(x, x)


def test_tower_residue_examples():
    tower, x = _standard_tower()
    k = tower.residue_field
    assert tower_residue(x) == k.zero
    num = x + tower.element(3)
    _, inv = tower_local_split(x + tower.one)
    assert tower_residue(num * inv) == k.element(3)
    assert tower_residue(tower.element(Fraction(3, 2))) == k.element(4)


def test_evaluate_into_examples():
    tower, x = _standard_tower()
    t5 = TruncatedPadics(5, 3)
    assert evaluate_into(x, t5) == t5.element(105)
    assert (105 * 105 + 105 - 5) % 125 == 0 and 105 % 5 == 0
    assert evaluate_into(tower.element(Fraction(3, 2)), t5) == t5.element(
        (3 * pow(2, -1, 125)) % 125
    )
    base7 = TowerRing(LocalizedIntegers(7))
    tower7, x7 = adjoin_hensel_root(base7, Poly(base7, [-7, 1, 1]))
    t7 = TruncatedPadics(7, 3)
    assert evaluate_into(x7, t7) == t7.element(301)


def test_adjoin_residue_extension_examples():
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    ext, u = adjoin_residue_extension(base, Poly(base, [base.element(-2), base.zero, base.one]))
    k = ext.residue_field
    assert k.size == 25
    assert tower_residue(u) == k.gen()
    # trivial degree-1 step keeps the residue field
    triv, _ = adjoin_residue_extension(base, Poly(base, [base.element(-3), base.one]))
    assert triv.residue_field.size == 5
    with pytest.raises(NotResiduallyIrreducible):
        adjoin_residue_extension(base, Poly(base, [base.element(-1), base.zero, base.one]))


def test_separable_closure_step_examples():
    f2 = PrimeField(2)
    assert separable_closure_step(f2, 2) == Poly(f2, [1, 1, 1])
    assert separable_closure_step(f2, 1) == Poly(f2, [0, 1])
    f5 = PrimeField(5)
    g = separable_closure_step(f5, 2)
    assert g.is_monic and g.degree == 2
    assert len(field_factor(g)) == 1


def test_residue_extension_field_size():
    # residue field of a degree-d extension step has q^d elements
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    rel = separable_closure_step(PrimeField(5), 2)
    lift = Poly(base, [base.element(c.payload) for c in rel.coeffs])
    ext, _ = adjoin_residue_extension(base, lift)
    assert len(list(ext.residue_field.elements())) == 25


def test_uniqueness_of_adjoined_root():
    # adjoining the same polynomial twice yields equal roots under evaluation
    tower, x = _standard_tower()
    f2 = Poly(tower, [tower.element(-5), tower.one, tower.one])
    tower2, x2 = adjoin_hensel_root(tower, f2)
    t5 = TruncatedPadics(5, 8)
    assert evaluate_into(tower2.from_base(x), t5) == evaluate_into(x2, t5)
    assert tower_eq(tower2.from_base(x), x2)


def test_adjunction_order_commutes():
    # f-then-g and g-then-f evaluate identically on matched generators
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    fc, gc = [-5, 1, 1], [-10, 2, 0, 1]
    t_fg, xf = adjoin_hensel_root(base, Poly(base, fc))
    t_fg2, yg = adjoin_hensel_root(t_fg, Poly(t_fg, gc))
    t_gf, yg2 = adjoin_hensel_root(base, Poly(base, gc))
    t_gf2, xf2 = adjoin_hensel_root(t_gf, Poly(t_gf, fc))
    target = TruncatedPadics(5, 8)
    assert evaluate_into(t_fg2.from_base(xf), target) == evaluate_into(xf2, target)
    assert evaluate_into(yg, target) == evaluate_into(t_gf2.from_base(yg2), target)


def test_tower_eq_congruence_and_evaluation_agreement():
    tower, x = _standard_tower()
    rng = random.Random(9)
    target = TruncatedPadics(5, 10)
    for _ in range(50):
        a = tower.random_element(rng)
        b = tower.random_element(rng)
        c = tower.random_element(rng)
        if tower_eq(a, b):
            assert tower_eq(a + c, b + c)
            assert tower_eq(a * c, b * c)
        # evaluation distinguishing implies tower_eq false
        if evaluate_into(a, target) != evaluate_into(b, target):
            assert not tower_eq(a, b)
        else:
            # at precision 10 on this rank-2 tower evaluation is faithful
            assert tower_eq(a, b)


def test_faithful_flatness_on_base_elements():
    z5 = LocalizedIntegers(5)
    tower, _ = _standard_tower()
    rng = random.Random(15)
    for _ in range(30):
        a = z5.random_element(rng)
        in_base = z5.local_split(a)[0]
        in_tower = tower_local_split(tower.from_base(a))[0]
        assert in_base == in_tower
        assert tower_eq(tower.from_base(a), tower.zero) == (not a)


def test_tower_json_round_trip():
    tower, x = _standard_tower()
    ext, u = adjoin_residue_extension(
        tower, Poly(tower, [tower.element(-2), tower.zero, tower.one])
    )
    rebuilt = tower_from_json(tower_to_json(ext))
    assert rebuilt == ext
    elem = ext.from_base(x) * u + ext.one
    data = ext.to_json(elem)
    assert ext.from_json(data) == elem


def test_degree_cap():
    from henselian.errors import DegreeCapExceeded

    z5 = LocalizedIntegers(5)
    tower = TowerRing(z5)
    with pytest.raises(DegreeCapExceeded):
        for _ in range(8):
            f = Poly(tower, [tower.element(-5), tower.one, tower.zero, tower.one])
            tower, _ = adjoin_hensel_root(tower, f)
