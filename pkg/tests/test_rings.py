"""Ring instances: canonical forms, the unit/radical disjunction, residues."""

import random
from fractions import Fraction

import pytest

from henselian.errors import MixedRings, UnsupportedKind
from henselian.rings import (
    RADICAL,
    UNIT,
    FiniteField,
    LocalizedIntegers,
    ModularIntegers,
    PrimeField,
    Rationals,
    TruncatedPadics,
    TruncatedSeries,
    parse_ring,
)


def test_arith_examples():
    z5 = LocalizedIntegers(5)
    assert z5.element(Fraction(3, 2)) + z5.element(Fraction(1, 2)) == 2

    z36 = ModularIntegers(36)
    assert z36.element(27) * z36.element(27) == z36.element(9)

    t7 = TruncatedPadics(7, 3)
    assert t7.element(342) + t7.element(1) == t7.zero


def test_local_split_examples():
    z5 = LocalizedIntegers(5)
    branch, inv = z5.local_split(z5.element(Fraction(3, 2)))
    assert branch == UNIT and inv == Fraction(2, 3)
    assert z5.local_split(z5.element(10))[0] == RADICAL

    f7 = PrimeField(7)
    assert f7.local_split(f7.zero)[0] == RADICAL


def test_residue_examples():
    z5 = LocalizedIntegers(5)
    assert z5.residue(z5.element(Fraction(3, 2))) == 4
    assert z5.residue(z5.one) == 1

    t7 = TruncatedPadics(7, 3)
    assert t7.residue(t7.element(301)) == 0


def test_valuation_examples():
    z5 = LocalizedIntegers(5)
    assert z5.valuation(z5.element(50)) == 2

    t7 = TruncatedPadics(7, 3)
    assert t7.valuation(t7.zero) == 3

    s5 = TruncatedSeries(PrimeField(5), 4)
    assert s5.valuation(s5.element([0, 0, 1, 1])) == 2


def test_capability_flags():
    assert LocalizedIntegers(5).is_local
    assert LocalizedIntegers(5).is_residually_discrete
    assert not LocalizedIntegers(5).is_henselian_oracle
    for ring in (TruncatedPadics(7, 3), TruncatedSeries(PrimeField(5), 4)):
        assert ring.is_local and ring.is_residually_discrete
        assert ring.is_henselian_oracle
    assert Rationals().is_field and PrimeField(7).is_field
    assert ModularIntegers(36).has_nilpotents
    assert not ModularIntegers(35).has_nilpotents
    # prime powers carry the full local capability set
    z343 = ModularIntegers(343)
    assert z343.is_local and z343.is_henselian_oracle
    assert not ModularIntegers(36).is_local


def test_prime_validation():
    with pytest.raises(UnsupportedKind):
        LocalizedIntegers(6)
    with pytest.raises(UnsupportedKind):
        PrimeField(9)
    with pytest.raises(UnsupportedKind):
        TruncatedPadics(4, 2)


def test_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        LocalizedIntegers(5).one + LocalizedIntegers(7).one


LOCAL_RINGS = [
    LocalizedIntegers(5),
    TruncatedPadics(7, 3),
    TruncatedSeries(PrimeField(5), 4),
    ModularIntegers(27),
    PrimeField(7),
    FiniteField(PrimeField(2), [1, 1, 1]),
]


@pytest.mark.parametrize("ring", LOCAL_RINGS, ids=lambda r: r.spec_string())
def test_local_split_disjunction(ring):
    rng = random.Random(42)
    for _ in range(25):
        x = ring.random_element(rng)
        branch, inv = ring.local_split(x)
        if branch == UNIT:
            assert x * inv == ring.one
        else:
            assert branch == RADICAL
            # Jacobson membership: 1 + x*z is a unit for sampled z
            for _ in range(100):
                z = ring.random_element(rng)
                assert ring.local_split(ring.one + x * z)[0] == UNIT


@pytest.mark.parametrize("ring", LOCAL_RINGS, ids=lambda r: r.spec_string())
def test_residue_homomorphism(ring):
    rng = random.Random(7)
    for _ in range(25):
        x = ring.random_element(rng)
        y = ring.random_element(rng)
        assert ring.residue(x + y) == ring.residue(x) + ring.residue(y)
        assert ring.residue(x * y) == ring.residue(x) * ring.residue(y)
        # kernel of the residue map is the radical branch
        is_radical = ring.local_split(x)[0] == RADICAL
        assert (not ring.residue(x)) == is_radical


def test_modular_idempotents_closed_under_bool_ops():
    from henselian.algebra import idem_join, idem_meet, idem_not, idem_xor, Idempotent

    for m in (6, 12, 30, 36, 60):
        ring = ModularIntegers(m)
        idems = [ring.element(e) for e in range(m) if ring.element(e) ** 2 == ring.element(e)]
        idem_set = {e.payload for e in idems}
        for u in idems:
            iu = Idempotent(u)
            assert idem_not(iu).element.payload in idem_set
            for v in idems:
                iv = Idempotent(v)
                assert idem_meet(iu, iv).element.payload in idem_set
                assert idem_join(iu, iv).element.payload in idem_set
                assert idem_xor(iu, iv).element.payload in idem_set


def test_finite_field_tower():
    f4 = FiniteField(PrimeField(2), [1, 1, 1])
    assert f4.size == 4
    f16 = FiniteField(f4, [f4.gen(), f4.one, f4.one])
    assert f16.size == 16
    rng = random.Random(3)
    for _ in range(20):
        x = f16.random_element(rng)
        if x:
            assert x * f16.inv(x) == f16.one


def test_parse_ring_specs():
    specs = [
        "Q",
        "Fp:7",
        "Fq:2:[1,1,1]",
        "Zloc:5",
        "Zmod:36",
        "PadicTrunc:7:3",
        "SeriesTrunc:Fp:5:4",
    ]
    for spec in specs:
        ring = parse_ring(spec)
        assert parse_ring(ring.spec_string()) == ring


def test_json_round_trip():
    rng = random.Random(11)
    for ring in LOCAL_RINGS + [Rationals()]:
        for _ in range(10):
            x = ring.random_element(rng)
            assert ring.from_json(ring.to_json(x)) == x
