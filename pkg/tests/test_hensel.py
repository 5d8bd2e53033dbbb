"""Lifting of roots, idempotents, and factorizations over oracle rings."""

import random

import pytest

from henselian.algebra import FiniteAlgebra, Idempotent, idem_to_fact
from henselian.errors import (
    NotARoot,
    NotGaloisResidually,
    NotIdempotentResidually,
    NotResiduallyCoprime,
    NotSimple,
    PreconditionViolated,
)
from henselian.hensel import (
    HenselCapability,
    decompose_finite_algebra,
    hensel_root_monic,
    hensel_root_nonmonic,
    lift_galois_idempotent,
    lift_idempotent_finite_algebra,
    lift_idempotent_uda,
    lift_monic_factorization,
    lift_nonmonic_factorization,
    lift_simple_root,
    transform_nonmonic,
)
from henselian.poly import Poly, x_poly
from henselian.rings import LocalizedIntegers, ModularIntegers, TruncatedPadics
from henselian.uda import UdaAlgebra


def _brute_roots(f, modulus, p):
    """All residues x mod modulus with f(x) = 0 and p | x, by exhaustion."""
    ring = f.ring
    return [x for x in range(0, modulus, p) if not f(ring.element(x))]


def test_root_monic_examples():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    f = Poly(t7, [-7, 1, 1])
    assert _brute_roots(f, 343, 7) == [301]  # independent exhaustive oracle
    assert hensel_root_monic(h, f) == t7.element(301)
    assert hensel_root_monic(h, Poly(t7, [0, 1, 1])) == t7.zero
    with pytest.raises(PreconditionViolated):
        hensel_root_monic(h, Poly(t7, [1, 3, 1]))  # constant term is a unit
    with pytest.raises(PreconditionViolated):
        hensel_root_monic(h, Poly(t7, [7, 7, 1]))  # linear term not a unit


def test_transform_nonmonic_identity():
    # a0 * g(X) = (X+1)^n * f(-a0*a1^(-1)/(X+1)) as exact rational identities
    z5 = LocalizedIntegers(5)
    f = Poly(z5, [-5, 1, 5])
    tr = transform_nonmonic(f)
    assert tr.g.is_monic
    assert z5.local_split(tr.g.coeff(0))[0] == "radical"
    assert z5.residue(tr.g.coeff(1)) == z5.residue_field.one
    # verify the defining identity coefficientwise:
    # a0 * g(X) == sum_j a_j * (-a0*a1^-1)^j * (X+1)^(n-j)
    n = f.degree
    c = -tr.a0 * tr.inv_a1
    rhs = Poly(z5, [])
    xp1 = Poly(z5, [1, 1])
    for j in range(n + 1):
        rhs = rhs + xp1 ** (n - j) * (f.coeff(j) * c**j)
    assert tr.g * tr.a0 == rhs
    with pytest.raises(PreconditionViolated):
        transform_nonmonic(Poly(z5, [5, 5, 1]))


def test_root_nonmonic_examples():
    t5 = TruncatedPadics(5, 3)
    h = HenselCapability(t5)
    f = Poly(t5, [-5, 1, 5])
    assert _brute_roots(f, 125, 5) == [5]
    assert hensel_root_nonmonic(h, f) == t5.element(5)
    assert hensel_root_nonmonic(h, Poly(t5, [0, 1])) == t5.zero
    t7 = TruncatedPadics(7, 3)
    h7 = HenselCapability(t7)
    # the monic and non-monic paths agree on monic input
    f7 = Poly(t7, [-7, 1, 1])
    assert hensel_root_nonmonic(h7, f7) == hensel_root_monic(h7, f7)


def test_lift_simple_root_examples():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    k = t7.residue_field
    f = Poly(t7, [-2, 0, 1])
    assert (108 * 108 - 2) % 343 == 0  # independent arithmetic check
    assert lift_simple_root(h, f, k.element(3)) == t7.element(108)
    c = t7.element(29)
    assert lift_simple_root(h, Poly(t7, [-c, t7.one]), t7.residue(c)) == c
    with pytest.raises(NotARoot):
        lift_simple_root(h, f, k.element(1))
    t2 = TruncatedPadics(2, 3)
    with pytest.raises(NotSimple):
        lift_simple_root(
            HenselCapability(t2), Poly(t2, [-2, 0, 1]), t2.residue_field.zero
        )


def test_root_uniqueness_sampled():
    rng = random.Random(5)
    for p, prec in ((3, 3), (5, 2), (7, 2)):
        ring = TruncatedPadics(p, prec)
        h = HenselCapability(ring)
        for _ in range(10):
            a1 = ring.element(rng.randrange(1, p))  # unit
            a0 = ring.element(p * rng.randrange(ring.modulus // p))
            f = Poly(ring, [a0, a1, ring.one])
            roots = _brute_roots(f, ring.modulus, p)
            assert roots == [hensel_root_monic(h, f).payload]


def test_lift_galois_idempotent_example():
    t5 = TruncatedPadics(5, 2)
    h = HenselCapability(t5)
    d = UdaAlgebra(t5, Poly(t5, [2, -3, 1]))
    r = d.root(2) - d.one
    e, orbit = lift_galois_idempotent(h, d, r)
    assert [c.payload for c in e.element.coords] == [24, 1]
    assert [[c.payload for c in o.coords] for o in orbit] == [[24, 1], [2, 24]]
    with pytest.raises(NotGaloisResidually):
        lift_galois_idempotent(h, d, d.zero)
    # trivial residual orbit {1}
    e1, orbit1 = lift_galois_idempotent(h, d, d.one)
    assert e1.element == d.one and orbit1 == [d.one]


def test_lift_idempotent_uda_examples():
    t5 = TruncatedPadics(5, 2)
    h = HenselCapability(t5)
    d = UdaAlgebra(t5, Poly(t5, [2, -3, 1]))
    assert lift_idempotent_uda(h, d, d.zero).element == d.zero
    assert lift_idempotent_uda(h, d, d.one).element == d.one
    x2 = d.root(2)
    perturbed = x2 - d.one + d.scalar(t5.element(5)) * x2
    e = lift_idempotent_uda(h, d, perturbed)
    assert [c.payload for c in e.element.coords] == [24, 1]
    with pytest.raises(NotIdempotentResidually):
        lift_idempotent_uda(h, d, x2)


def test_lift_monic_factorization_example():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    f = Poly(t7, [-2, 0, 1])
    g0 = Poly(t7, [-3, 1])
    h0 = Poly(t7, [-4, 1])
    # independent oracle: enumerate all monic lifts of (X-3, X-4) mod 343
    matches = []
    for a in range(3, 343, 7):
        for b in range(4, 343, 7):
            if (-a - b) % 343 == 0 and (a * b + 2) % 343 == 0:
                matches.append((a, b))
    assert matches == [(108, 235)]
    g, hh = lift_monic_factorization(h, f, g0, h0)
    assert g == Poly(t7, [-108, 1]) and hh == Poly(t7, [108, 1])
    assert g * hh == f
    with pytest.raises(NotResiduallyCoprime):
        lift_monic_factorization(h, Poly(t7, [0, 0, 1]), x_poly(t7), x_poly(t7))


def test_lift_monic_factorization_trivial_split():
    z5 = ModularIntegers(25)
    h = HenselCapability(z5)
    f = Poly(z5, [0, -1, 1])
    g, hh = lift_monic_factorization(h, f, Poly(z5, [0, 1]), Poly(z5, [-1, 1]))
    assert (g, hh) == (Poly(z5, [0, 1]), Poly(z5, [-1, 1]))


def test_route_agreement():
    rng = random.Random(77)
    for p in (3, 5, 7):
        for prec in (2, 3):
            ring = TruncatedPadics(p, prec)
            h = HenselCapability(ring)
            for _ in range(2):
                a, b = rng.sample(range(p), 2)
                g0 = Poly(ring, [-a, 1])
                deg_h = rng.randint(1, 2)
                while True:
                    hc = [rng.randrange(ring.modulus) for _ in range(deg_h)] + [1]
                    h0 = Poly(ring, hc)
                    if not h0.residue()(ring.residue_field.element(a)):
                        continue
                    break
                f = g0 * h0 + Poly(ring, [p * rng.randrange(ring.modulus // p)])
                if f.residue() != (g0 * h0).residue():
                    continue
                quad = lift_monic_factorization(h, f, g0, h0, route="quadratic")
                uda = lift_monic_factorization(h, f, g0, h0, route="uda")
                assert quad == uda
                assert quad[0] * quad[1] == f


def test_lift_idempotent_finite_algebra_example():
    z343 = ModularIntegers(343)
    h = HenselCapability(z343)
    b = FiniteAlgebra.quotient_ring(z343, Poly(z343, [-2, 0, 1]))
    e0 = b.element([z343.element(4), z343.element(6)])
    e = lift_idempotent_finite_algebra(h, b, e0)
    assert [c.payload for c in e.element.coords] == [172, 27]
    # independent arithmetic: (172 + 27x)^2 = 172 + 27x given x^2 = 2
    const = (172 * 172 + 27 * 27 * 2) % 343
    lin = (2 * 172 * 27) % 343
    assert (const, lin) == (172, 27)
    assert lift_idempotent_finite_algebra(h, b, b.zero).element == b.zero
    assert lift_idempotent_finite_algebra(h, b, b.one).element == b.one
    with pytest.raises(NotIdempotentResidually):
        lift_idempotent_finite_algebra(h, b, b.generator())


def test_decompose_finite_algebra_examples():
    z343 = ModularIntegers(343)
    h = HenselCapability(z343)
    b = FiniteAlgebra.quotient_ring(z343, Poly(z343, [-2, 0, 1]))
    parts = decompose_finite_algebra(h, b)
    assert sorted(factor.rank for _, factor in parts) == [1, 1]
    local = FiniteAlgebra.quotient_ring(z343, Poly(z343, [-3, 0, 1]))
    assert len(decompose_finite_algebra(h, local)) == 1
    z25 = ModularIntegers(25)
    b25 = FiniteAlgebra.quotient_ring(z25, Poly(z25, [0, -1, 1]))
    parts25 = decompose_finite_algebra(HenselCapability(z25), b25)
    idems = sorted(tuple(c.payload for c in e.element.coords) for e, _ in parts25)
    assert idems == [(0, 1), (1, 24)]  # x and 1 - x


def test_nonmonic_factorization_reversal_branch():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    f = Poly(t7, [-1, 1, 7])
    g0 = Poly(t7, [-1, 1])
    h0 = Poly(t7, [1])
    # independent oracle: unique (a, b) with (X-a)(7X+b) = 7X^2+X-1 mod 343
    matches = []
    for a in range(343):
        for bb in range(343):
            if (bb - 7 * a - 1) % 343 == 0 and (-a * bb + 1) % 343 == 0:
                if (-a) % 7 == 6:  # residue of g must be X - 1
                    matches.append((a, bb))
    assert matches == [(92, 302)]
    g, hh = lift_nonmonic_factorization(h, f, g0, h0)
    assert g == Poly(t7, [-92, 1]) and hh == Poly(t7, [302, 7])
    assert g * hh == f


def test_nonmonic_factorization_shift_branch():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    f = Poly(t7, [0, 1, 7])  # f(0) in m forces the shift search, fbar(1) = 1
    g, hh = lift_nonmonic_factorization(h, f, Poly(t7, [0, 1]), Poly(t7, [1]))
    assert g.is_monic and g.residue() == Poly(t7.residue_field, [0, 1])
    assert g * hh == f


def test_nonmonic_monic_delegation():
    t7 = TruncatedPadics(7, 3)
    h = HenselCapability(t7)
    f = Poly(t7, [-2, 0, 1])
    assert lift_nonmonic_factorization(
        h, f, Poly(t7, [-3, 1]), Poly(t7, [-4, 1])
    ) == lift_monic_factorization(h, f, Poly(t7, [-3, 1]), Poly(t7, [-4, 1]))


def test_factorization_uniqueness_sampled():
    # brute enumeration of all monic factor pairs mod p^2 on sampled inputs
    rng = random.Random(101)
    for p in (3, 5):
        ring = TruncatedPadics(p, 2)
        h = HenselCapability(ring)
        m = ring.modulus
        for _ in range(5):
            a, b = rng.sample(range(p), 2)
            g0 = Poly(ring, [-a, 1])
            h0 = Poly(ring, [-b, 1])
            f = g0 * h0 + Poly(ring, [p * rng.randrange(p)])
            found = []
            for ga in range(m):
                for hb in range(m):
                    cand_g = Poly(ring, [ga, 1])
                    cand_h = Poly(ring, [hb, 1])
                    if cand_g * cand_h == f and cand_g.residue() == g0.residue():
                        found.append((cand_g, cand_h))
            assert len(found) == 1
            assert found[0] == lift_monic_factorization(h, f, g0, h0)


def test_root_from_lifted_idempotent():
    # idempotent lifting on B = A[X]/(f) with f residually X(X-1) yields the
    # radical root of f, recovering the defining Henselian property
    t5 = TruncatedPadics(5, 3)
    h = HenselCapability(t5)
    for c in (1, 2, 7):
        f = Poly(t5, [5 * c, -1, 1])  # X^2 - X + 5c, residually X(X-1)
        b = FiniteAlgebra.quotient_ring(t5, f)
        e = lift_idempotent_finite_algebra(h, b, b.generator())
        g, hh = idem_to_fact(f, e)
        root = -g.coeff(0) if not t5.residue(g.coeff(0)) else -hh.coeff(0)
        assert not f(root)
        assert t5.local_split(root)[0] == "radical"
        assert root == hensel_root_monic(h, f)


def test_tower_backed_root():
    from henselian.tower import TowerRing, adjoin_hensel_root

    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    h = HenselCapability(base)
    assert h.root_method == "adjoin-step"
    f = Poly(base, [base.element(5), base.one, base.one])
    alpha = hensel_root_monic(h, f)
    ext = alpha.ring
    # the root is exact in the extension and lies in its radical
    acc = ext.zero
    for c in reversed(f.coeffs):
        acc = acc * alpha + ext.from_base(c)
    assert not acc
    assert ext.local_split(alpha)[0] == "radical"
    with pytest.raises(PreconditionViolated):
        hensel_root_monic(h, Poly(base, [base.one, base.element(3), base.one]))


def test_tower_backed_henselian_property():
    # a tower step A[X]/(F) with F residually irreducible is local Henselian:
    # qualifying polynomials over it acquire roots by a further tower step
    from henselian.tower import TowerRing, adjoin_residue_extension

    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)
    ext, u = adjoin_residue_extension(base, Poly(base, [base.element(2), base.one, base.one]))
    h = HenselCapability(ext)
    rng = random.Random(3)
    for _ in range(3):
        a1 = ext.one + ext.element(5) * ext.random_element(rng)
        a0 = ext.element(5) * ext.random_element(rng)
        f = Poly(ext, [a0, a1, ext.one])
        alpha = hensel_root_monic(h, f)
        ring2 = alpha.ring
        acc = ring2.zero
        for c in reversed(f.coeffs):
            acc = acc * alpha + ring2.from_base(c)
        assert not acc
