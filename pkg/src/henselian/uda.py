"""The universal decomposition algebra D_A(f) of a monic polynomial.

For monic f of degree n, D_A(f) = A[x_1, ..., x_n] modulo the
identification of the elementary symmetric functions of the x_i with the
coefficients of f; it is free of rank n! with the monomial basis
x_1^{m_1} ... x_n^{m_n}, 0 <= m_j <= j-1, and carries an action of the
symmetric group permuting the roots.

Normal forms come from an iterated splitting chain: adjoin a root v_1 of
f, divide, adjoin a root v_2 of the quotient, and so on; the chain
generator v_k plays the role of x_{n+1-k}.  Products are computed by
Horner application of the per-generator multiplication matrices, never
through an (n!)^3 structure table.
"""

from __future__ import annotations

import itertools

from . import linalg
from .algebra import Idempotent, rank_polynomial
from .chains import ChainElement, ExtensionChain
from .errors import (
    DegreeCapExceeded,
    MixedAlgebras,
    NotInBaseImage,
    NotInvariant,
    NotMonic,
    ZeroIdempotent,
)
from .poly import Poly
from .rings import RingElement


class Permutation:
    """A permutation of {1..n}, stored as the image list."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        assert sorted(images) == list(range(1, len(images) + 1))
        self.images = images

    def __call__(self, i):
        return self.images[i - 1]

    def compose(self, other):
        """self after other: (self*other)(i) = self(other(i))."""
        return Permutation([self(other(i)) for i in range(1, len(self.images) + 1)])

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def all(cls, n):
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.images == self.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


class UdaAlgebra:
    """D_A(f) with its splitting-chain normal forms."""

    def __init__(self, base, f, cap=5):
        if not f.is_monic:
            raise NotMonic(repr(f))
        n = f.degree
        if n < 1:
            raise NotMonic("degree must be >= 1")
        if n > cap:
            raise DegreeCapExceeded(f"deg {n} > cap {cap}")
        self.base = base
        self.f = f
        self.n = n
        chain = ExtensionChain(base)
        # current polynomial to split, coefficients as ChainElements
        coeffs = None
        for k in range(n):
            if k == 0:
                rel = [f.coeff(i) for i in range(n)]
                chain = chain.adjoin(rel)
                coeffs = [
                    ChainElement(chain, chain.scalar_data(f.coeff(i)))
                    for i in range(n + 1)
                ]
            else:
                # synthetic division of the current monic polynomial by
                # (X - v_{k-1}); the remainder vanishes by the relation
                root = chain.gen(k - 1)
                d = len(coeffs) - 1
                q = [None] * d
                q[d - 1] = coeffs[d]
                for i in range(d - 1, 0, -1):
                    q[i - 1] = coeffs[i] + root * q[i]
                rem = coeffs[0] + root * q[0]
                assert not rem, "splitting chain division left a remainder"
                rel = [q[i].data for i in range(d - 1)]
                chain = chain.adjoin(rel)
                lift = lambda e: ChainElement(
                    chain, chain.lift_data(e.data, chain.levels - 1)
                )
                coeffs = [lift(c) for c in q]
        self.chain = chain
        self.rank = chain.rank
        assert self.rank == _factorial(n)
        self.exponents = chain.basis_exponents()
        self._index = {e: i for i, e in enumerate(self.exponents)}
        self.mult_matrices = [
            self._build_mult_matrix(k) for k in range(n)
        ]
        self._act_cache = {}
        self._verify_relations()

    # -- construction helpers ------------------------------------------------

    def _basis_chain_elements(self):
        if not hasattr(self, "_basis_cache"):
            cache = {}
            gens = [self.chain.gen(k) for k in range(self.n)]
            for exps in self.exponents:
                if not any(exps):
                    cache[exps] = self.chain.one
                    continue
                k = max(i for i, e in enumerate(exps) if e)
                pred = exps[:k] + (exps[k] - 1,) + exps[k + 1 :]
                cache[exps] = cache[pred] * gens[k]
            self._basis_cache = cache
        return self._basis_cache

    def _build_mult_matrix(self, k):
        gen = self.chain.gen(k)
        basis = self._basis_chain_elements()
        cols = []
        for exps in self.exponents:
            cols.append((basis[exps] * gen).flatten())
        return [
            [cols[j][i] for j in range(self.rank)] for i in range(self.rank)
        ]

    def _verify_relations(self):
        """Product of (X - v_k) over the chain equals f exactly."""
        prod = [self.chain.one]
        for k in range(self.n):
            root = self.chain.gen(k)
            new = [self.chain.zero] * (len(prod) + 1)
            for i, c in enumerate(prod):
                new[i + 1] = new[i + 1] + c
                new[i] = new[i] - c * root
            prod = new
        for i, c in enumerate(prod):
            expected = self.chain.scalar(self.f.coeff(i))
            assert c == expected, "splitting-chain relations violated"

    # -- elements ------------------------------------------------------------

    def element(self, coords):
        out = []
        for c in coords:
            if isinstance(c, RingElement):
                out.append(c)
            else:
                out.append(self.base.element(c))
        assert len(out) == self.rank
        return UdaElement(self, tuple(out))

    @property
    def zero(self):
        return self.element([self.base.zero] * self.rank)

    @property
    def one(self):
        coords = [self.base.zero] * self.rank
        coords[0] = self.base.one
        return self.element(coords)

    def scalar(self, c):
        coords = [self.base.zero] * self.rank
        coords[0] = c if isinstance(c, RingElement) else self.base.element(c)
        return self.element(coords)

    def basis_element(self, i):
        coords = [self.base.zero] * self.rank
        coords[i] = self.base.one
        return self.element(coords)

    def root(self, j):
        """The root x_j in 1-based numbering; x_j is the chain generator
        v_{n+1-j}."""
        k = self.n - j
        gen_vec = self.chain.gen(k).flatten()
        return self.element(gen_vec)

    def from_chain(self, elem):
        return self.element(elem.flatten())

    def to_chain(self, elem):
        return ChainElement(self.chain, self.chain.unflatten(list(elem.coords)))

    def random_element(self, rng):
        return self.element(
            [self.base.random_element(rng) for _ in range(self.rank)]
        )

    # -- multiplication by Horner over the generator matrices ----------------

    def mul(self, a, b):
        if a.algebra is not b.algebra and a.algebra != b.algebra:
            raise MixedAlgebras("different decomposition algebras")
        base = self.base
        degrees = self.chain.degrees
        block = list(b.coords)

        def rec(level, coords):
            # level counts down through generators: outermost coordinate
            # blocks belong to the last adjoined generator
            if level == self.n:
                c = coords[0]
                if not c:
                    return None
                return [c * x for x in a.coords]
            g = self.n - 1 - level
            d = degrees[g]
            size = len(coords) // d
            acc = None
            for e in range(d - 1, -1, -1):
                if acc is not None:
                    acc = linalg.mat_vec(self.mult_matrices[g], acc, base)
                sub = rec(level + 1, coords[e * size : (e + 1) * size])
                if sub is not None:
                    if acc is None:
                        acc = sub
                    else:
                        acc = [x + y for x, y in zip(acc, sub)]
            return acc

        out = rec(0, block)
        if out is None:
            return self.zero
        return self.element(out)

    def mult_matrix(self, a):
        """Matrix of multiplication by a, columns indexed by basis monomials."""
        base = self.base
        cols = {}
        cols[self.exponents[0]] = list(a.coords)
        for exps in self.exponents:
            if not any(exps):
                continue
            k = max(i for i, e in enumerate(exps) if e)
            pred = exps[:k] + (exps[k] - 1,) + exps[k + 1 :]
            cols[exps] = linalg.mat_vec(
                self.mult_matrices[k], cols[pred], base
            )
        return [
            [cols[self.exponents[j]][i] for j in range(self.rank)]
            for i in range(self.rank)
        ]

    # -- symmetric group action ----------------------------------------------

    def _action_matrix(self, sigma):
        key = sigma.images
        if key in self._act_cache:
            return self._act_cache[key]
        n = self.n
        # chain generator v_k is x_{n-k} (0-based k); sigma permutes the
        # 1-based root indices, so v_k maps to v_{n - sigma(n-k)}
        target = [n - sigma(n - k) for k in range(n)]
        base = self.base
        cols = {}
        unit = [base.zero] * self.rank
        unit[0] = base.one
        cols[self.exponents[0]] = unit
        for exps in self.exponents:
            if not any(exps):
                continue
            k = max(i for i, e in enumerate(exps) if e)
            pred = exps[:k] + (exps[k] - 1,) + exps[k + 1 :]
            cols[exps] = linalg.mat_vec(
                self.mult_matrices[target[k]], cols[pred], base
            )
        matrix = [
            [cols[self.exponents[j]][i] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self._act_cache[key] = matrix
        return matrix

    def act(self, sigma, a):
        matrix = self._action_matrix(sigma)
        return self.element(linalg.mat_vec(matrix, list(a.coords), self.base))

    def __eq__(self, other):
        return (
            isinstance(other, UdaAlgebra)
            and other.base == self.base
            and other.f == self.f
        )

    def __hash__(self):
        return hash((self.base, self.f.coeffs))

    def __repr__(self):
        return f"UdaAlgebra({self.base!r}, {self.f!r})"


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


class UdaElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, UdaElement):
            if other.algebra != self.algebra:
                raise MixedAlgebras("different decomposition algebras")
            return other
        if isinstance(other, RingElement) and other.ring == self.algebra.base:
            return self.algebra.scalar(other)
        return self.algebra.scalar(self.algebra.base.element(other))

    def __add__(self, other):
        other = self._coerce(other)
        return UdaElement(
            self.algebra,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return UdaElement(
            self.algebra,
            tuple(a - b for a, b in zip(self.coords, other.coords)),
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return UdaElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, RingElement) and other.ring == self.algebra.base:
            return UdaElement(
                self.algebra, tuple(other * c for c in self.coords)
            )
        if isinstance(other, int):
            c = self.algebra.base.element(other)
            return UdaElement(
                self.algebra, tuple(c * x for x in self.coords)
            )
        other = self._coerce(other)
        return self.algebra.mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.algebra.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UdaElement):
            return (
                self.algebra == other.algebra and self.coords == other.coords
            )
        if isinstance(other, (int, RingElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"UdaElement{list(self.coords)!r}"


# ---------------------------------------------------------------------------
# Public operations


def build_uda(base, f, cap=5):
    return UdaAlgebra(base, f, cap=cap)


def uda_mul(a, b):
    return a.algebra.mul(a, b)


def sn_act(sigma, a):
    return a.algebra.act(sigma, a)


def reduce_invariant(a):
    """Constant coordinate of an element fixed by the symmetric group.

    Callers must only pass images of symmetric polynomials (coefficients
    of products over full conjugate orbits); for those, all non-constant
    coordinates vanish in normal form.
    """
    alg = a.algebra
    n = alg.n
    for i in range(1, n):
        sigma = Permutation.transposition(n, i, i + 1)
        if sn_act(sigma, a) != a:
            raise NotInvariant(f"not fixed by transposition ({i} {i+1})")
    for c in a.coords[1:]:
        if c:
            raise NotInBaseImage(repr(a))
    return a.coords[0]


def idempotent_is_zero(e):
    """True iff the rank polynomial of multiplication by e is 1."""
    e = e.element if isinstance(e, Idempotent) else e
    alg = e.algebra
    matrix = alg.mult_matrix(e)
    rp = rank_polynomial(matrix, alg.base)
    return rp.coefficients[0] == alg.base.one


def orbit_of(e):
    """Distinct images of e under all permutations, starting with e."""
    alg = e.algebra
    seen = [e]
    for sigma in Permutation.all(alg.n):
        img = sn_act(sigma, e)
        if img not in seen:
            seen.append(img)
    return seen


def galois_from_idempotent(e):
    """(h, orbit of h, subset) with e = sum of the subset of the orbit.

    h is an atom of the Boolean algebra generated by the orbit of e; its
    orbit is a basic system of orthogonal idempotents (Galois idempotent).
    """
    e = e.element if isinstance(e, Idempotent) else e
    alg = e.algebra
    if not e:
        raise ZeroIdempotent("cannot extract a Galois idempotent from 0")
    assert e * e == e
    orbit_e = orbit_of(e)
    atoms = [alg.one]
    for u in orbit_e:
        refined = []
        for a in atoms:
            au = a * u
            if au:
                refined.append(au)
            rest = a - au
            if rest:
                refined.append(rest)
        atoms = refined
    h = None
    for a in atoms:
        if a * e == a:
            h = a
            break
    assert h is not None, "no atom below a nonzero idempotent"
    orbit_h = orbit_of(h)
    total = alg.zero
    for u in orbit_h:
        total = total + u
    assert total == alg.one, "orbit of the atom does not sum to 1"
    for i in range(len(orbit_h)):
        for j in range(i + 1, len(orbit_h)):
            assert not (orbit_h[i] * orbit_h[j]), "orbit not orthogonal"
    subset = [i for i, u in enumerate(orbit_h) if u * e == u]
    expr = alg.zero
    for i in subset:
        expr = expr + orbit_h[i]
    assert expr == e, "idempotent is not the subset sum of the orbit"
    return Idempotent(h), orbit_h, subset
