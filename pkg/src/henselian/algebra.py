"""Finite free algebras over a base ring, and the idempotent calculus.

A FiniteAlgebra stores structure constants for a chosen basis; elements
are coordinate vectors.  On top of that live the Cayley-Hamilton
machinery (characteristic polynomials of multiplication maps, inversion,
radical membership), the Boolean algebra of idempotents with its Newton
lift modulo nilpotents, rank polynomials of idempotent matrices, the
splitting of finite algebras over finite fields into local factors, and
the bijection between idempotents of A[X]/(f) and monic factorizations
f = g*h with residually coprime factors.
"""

from __future__ import annotations

from . import linalg
from .errors import (
    MixedAlgebras,
    MixedRings,
    NotAFactorization,
    NotAlmostIdempotent,
    NotIdempotent,
    NotIdempotentMatrix,
    NotInvertible,
)
from .poly import Poly, divmod_monic, ext_gcd_poly, field_factor, gcd_monic
from .rings import RADICAL, UNIT, RingElement


class FiniteAlgebra:
    """Free module of finite rank with commutative structure constants."""

    def __init__(self, base, table, unit_coords, monogenic=None, check=True):
        self.base = base
        self.rank = len(table)
        self.table = tuple(
            tuple(tuple(base.element(c) for c in vec) for vec in row)
            for row in table
        )
        self.unit_coords = tuple(base.element(c) for c in unit_coords)
        self.monogenic = monogenic  # monic Poly f when self = A[X]/(f)
        if check:
            self._check_axioms()

    def _check_axioms(self):
        n = self.rank
        one = self.element(self.unit_coords)
        basis = [self.basis_element(i) for i in range(n)]
        for i in range(n):
            assert one * basis[i] == basis[i], "unit axiom failed"
        triples = (
            [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
            if n <= 8
            else [(i, j, (i + j) % n) for i in range(n) for j in range(n)]
        )
        for i, j, k in triples:
            if i <= j:
                assert basis[i] * basis[j] == basis[j] * basis[i], (
                    "commutativity failed"
                )
            assert (basis[i] * basis[j]) * basis[k] == basis[i] * (
                basis[j] * basis[k]
            ), "associativity failed"

    @classmethod
    def quotient_ring(cls, base, f, check=False):
        """A[X]/(f) for monic f, with basis 1, x, ..., x^(deg f - 1)."""
        from .errors import NotMonic

        if not f.is_monic:
            raise NotMonic(repr(f))
        n = f.degree
        # coordinates of X^k mod f, for k up to 2n-2
        powers = [[base.zero] * n for _ in range(2 * n - 1)]
        for k in range(min(n, 2 * n - 1)):
            powers[k][k] = base.one
        for k in range(n, 2 * n - 1):
            prev = powers[k - 1]
            shifted = [base.zero] + prev[:-1]
            top = prev[n - 1]
            if top:
                for j in range(n):
                    shifted[j] = shifted[j] - top * f.coeff(j)
            powers[k] = shifted
        table = [
            [powers[i + j] for j in range(n)] for i in range(n)
        ]
        unit = [base.one] + [base.zero] * (n - 1)
        return cls(base, table, unit, monogenic=f, check=check)

    def element(self, coords):
        out = []
        for c in coords:
            if isinstance(c, RingElement):
                if c.ring != self.base:
                    raise MixedRings(f"{c.ring} vs {self.base}")
                out.append(c)
            else:
                out.append(self.base.element(c))
        assert len(out) == self.rank
        return AlgElement(self, tuple(out))

    def basis_element(self, i):
        coords = [self.base.zero] * self.rank
        coords[i] = self.base.one
        return AlgElement(self, tuple(coords))

    @property
    def zero(self):
        return AlgElement(self, tuple([self.base.zero] * self.rank))

    @property
    def one(self):
        return AlgElement(self, self.unit_coords)

    def scalar(self, c):
        c = c if isinstance(c, RingElement) else self.base.element(c)
        return AlgElement(self, tuple(c * u for u in self.unit_coords))

    def from_poly(self, p):
        """Image of p(x) for monogenic algebras with generator x."""
        assert self.monogenic is not None
        x = self.basis_element(1) if self.rank > 1 else self.scalar(0)
        _, r = divmod_monic(p, self.monogenic)
        coords = [r.coeff(i) for i in range(self.rank)]
        return self.element(coords)

    def generator(self):
        assert self.monogenic is not None
        if self.rank == 1:
            # x = root of the linear relation X + a0
            return self.scalar(-self.monogenic.coeff(0))
        return self.basis_element(1)

    def random_element(self, rng):
        return AlgElement(
            self,
            tuple(self.base.random_element(rng) for _ in range(self.rank)),
        )

    def residual_algebra(self):
        """The same structure constants over the residue field of the base."""
        k = self.base.residue_field
        res = self.base.residue
        table = [
            [[res(c) for c in vec] for vec in row] for row in self.table
        ]
        unit = [res(c) for c in self.unit_coords]
        mono = None
        if self.monogenic is not None:
            mono = self.monogenic.residue()
        return FiniteAlgebra(k, table, unit, monogenic=mono, check=False)

    def residue_element(self, x):
        resalg = self.residual_algebra()
        return resalg.element([self.base.residue(c) for c in x.coords])

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and other.base == self.base
            and other.table == self.table
            and other.unit_coords == self.unit_coords
        )

    def __hash__(self):
        return hash((self.base, self.rank))

    def __repr__(self):
        if self.monogenic is not None:
            return f"{self.base!r}[x]/({self.monogenic!r})"
        return f"FiniteAlgebra(rank {self.rank} over {self.base!r})"


class AlgElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.algebra != self.algebra:
                raise MixedAlgebras(
                    f"{other.algebra!r} vs {self.algebra!r}"
                )
            return other
        if isinstance(other, RingElement) and other.ring == self.algebra.base:
            return self.algebra.scalar(other)
        return self.algebra.scalar(self.algebra.base.element(other))

    def __add__(self, other):
        other = self._coerce(other)
        return AlgElement(
            self.algebra,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return AlgElement(
            self.algebra,
            tuple(a - b for a, b in zip(self.coords, other.coords)),
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, RingElement) and other.ring == self.algebra.base:
            return AlgElement(
                self.algebra, tuple(other * c for c in self.coords)
            )
        other = self._coerce(other)
        alg = self.algebra
        base = alg.base
        out = [base.zero] * alg.rank
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        ab = a * b
                        vec = alg.table[i][j]
                        for k in range(alg.rank):
                            if vec[k]:
                                out[k] = out[k] + ab * vec[k]
        return AlgElement(alg, tuple(out))

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
        if isinstance(other, AlgElement):
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
        return f"AlgElement{list(self.coords)!r}"


# ---------------------------------------------------------------------------
# Cayley-Hamilton machinery


def mult_matrix(x):
    """Matrix of multiplication by x in the algebra basis (columns = x*e_j)."""
    alg = x.algebra
    cols = [(x * alg.basis_element(j)).coords for j in range(alg.rank)]
    return [[cols[j][i] for j in range(alg.rank)] for i in range(alg.rank)]


def char_poly(x):
    """Characteristic polynomial of multiplication by x, monic of degree rank."""
    m = mult_matrix(x)
    coeffs = linalg.berkowitz_char_poly(m, x.algebra.base)
    return Poly(x.algebra.base, coeffs)


def invert_element(x):
    """Inverse via Cayley-Hamilton: solve chi(x) = 0 for the constant term."""
    chi = char_poly(x)
    c0 = chi.coeff(0)
    if not x.algebra.base.is_unit(c0):
        raise NotInvertible(f"constant term {c0!r} of char poly is not a unit")
    inv_c0 = x.algebra.base.inv(c0)
    # chi(x) = 0  =>  x * g(x) = -c0 with g = (chi - c0)/T
    g = Poly(x.algebra.base, chi.coeffs[1:])
    y = g(x) * (-inv_c0)
    assert x * y == x.algebra.one
    return y


def radical_member(x):
    """x in J_B = sqrt(m*B): residual multiplication matrix is nilpotent."""
    alg = x.algebra
    k = alg.base.residue_field
    res = alg.base.residue
    xbar = [res(c) for c in x.coords]
    resalg = alg.residual_algebra()
    m = mult_matrix(resalg.element(xbar))
    return linalg.is_nilpotent_matrix(m, k, alg.rank)


def minimal_polynomial(x):
    """Minimal polynomial of x over a discrete field base."""
    alg = x.algebra
    field = alg.base
    powers = [alg.one.coords]
    cur = alg.one
    for k in range(1, alg.rank + 1):
        cur = cur * x
        matrix = [
            [powers[j][i] for j in range(k)] for i in range(alg.rank)
        ]
        sol = linalg.solve_field(matrix, list(cur.coords), field)
        if sol is not None:
            return Poly(field, [-c for c in sol] + [field.one])
        powers.append(cur.coords)
    raise AssertionError("no minimal polynomial within rank bound")


def zero_dim_witness(x):
    """(k, s) with x^k * (1 - x*s(x)) = 0, from mu(T) = T^k * u(T)."""
    alg = x.algebra
    field = alg.base
    mu = minimal_polynomial(x)
    k = 0
    while k <= mu.degree and not mu.coeff(k):
        k += 1
    u = Poly(field, mu.coeffs[k:])
    u0 = u.coeff(0)
    inv_u0 = field.inv(u0)
    # u(T) = u0*(1 - T*s(T)) with s = -(u - u0)/(T*u0)
    s = Poly(field, [-c * inv_u0 for c in u.coeffs[1:]])
    witness = (x**k) * (alg.one - x * s(x))
    assert witness == alg.zero
    return k, s


def split_by_element(x):
    """Idempotent e in k[x] making x invertible on eB and nilpotent on (1-e)B."""
    alg = x.algebra
    field = alg.base
    mu = minimal_polynomial(x)
    ell = 0
    while ell <= mu.degree and not mu.coeff(ell):
        ell += 1
    u = Poly(field, mu.coeffs[ell:])
    t_ell = Poly(field, [field.zero] * ell + [field.one])
    if ell == 0:
        e = alg.one
    else:
        d, a, _ = ext_gcd_poly(t_ell, u)
        assert d.degree == 0
        inv_d = field.inv(d.coeff(0))
        e = Poly(field, [(c * inv_d) for c in (a * t_ell).coeffs])(x)
        if not isinstance(e, AlgElement):
            e = alg.scalar(e)
    assert e * e == e
    # verification of the two split properties
    one = alg.one
    assert invertible(x + (one - e)), "x + (1-e) not invertible"
    nil = x * (one - e)
    m = mult_matrix(nil)
    assert linalg.is_nilpotent_matrix(m, field, alg.rank)
    return Idempotent(e)


def invertible(x):
    try:
        invert_element(x)
        return True
    except NotInvertible:
        return False


# ---------------------------------------------------------------------------
# Idempotents


class Idempotent:
    """An element verified to satisfy e*e = e at construction."""

    __slots__ = ("element",)

    def __init__(self, element):
        if not _idem_check(element):
            raise NotIdempotent(repr(element))
        self.element = element

    def __eq__(self, other):
        if isinstance(other, Idempotent):
            return self.element == other.element
        return self.element == other

    def __hash__(self):
        return hash(self.element)

    def __repr__(self):
        return f"Idempotent({self.element!r})"


def _idem_check(e):
    return e * e == e


def _one_like(e):
    if isinstance(e, AlgElement):
        return e.algebra.one
    return e.ring.one


def _unwrap(e):
    return e.element if isinstance(e, Idempotent) else e


def idem_meet(u, v):
    return Idempotent(_unwrap(u) * _unwrap(v))


def idem_join(u, v):
    u, v = _unwrap(u), _unwrap(v)
    return Idempotent(u + v - u * v)


def idem_xor(u, v):
    d = _unwrap(u) - _unwrap(v)
    return Idempotent(d * d)


def idem_not(u):
    u = _unwrap(u)
    return Idempotent(_one_like(u) - u)


def idem_leq(u, v):
    u, v = _unwrap(u), _unwrap(v)
    return u * v == u


def bool_ops(op, u, v=None):
    if op == "meet":
        return idem_meet(u, v)
    if op == "join":
        return idem_join(u, v)
    if op == "xor":
        return idem_xor(u, v)
    if op == "not":
        return idem_not(u)
    if op == "leq":
        return idem_leq(u, v)
    raise ValueError(op)


def _is_nilpotent(t, bound):
    """Nilpotency of a ring or algebra element by repeated squaring."""
    if isinstance(t, AlgElement):
        m = mult_matrix(t)
        return linalg.is_nilpotent_matrix(m, t.algebra.base, t.algebra.rank)
    ring = t.ring
    if hasattr(ring, "is_nilpotent"):
        return ring.is_nilpotent(t)
    zero = ring.zero
    cur = t
    for _ in range(max(1, bound.bit_length() + 1)):
        if cur == zero:
            return True
        cur = cur * cur
    return cur == zero


def newton_lift_idempotent(e, bound=64):
    """Lift e with e^2 - e nilpotent to an exact idempotent.

    Newton iteration x -> 3x^2 - 2x^3 doubles the order of vanishing of
    x^2 - x each step; returns (Idempotent, iteration count).
    """
    t = e * e - e
    if not _is_nilpotent(t, bound):
        raise NotAlmostIdempotent(repr(e))
    x = e
    iterations = 0
    while x * x != x:
        x2 = x * x
        x = x2 * 3 - x2 * x * 2
        iterations += 1
        if iterations > bound:
            raise NotAlmostIdempotent("Newton iteration failed to converge")
    return Idempotent(x), iterations


# ---------------------------------------------------------------------------
# Rank polynomials of idempotent matrices


class RankPolynomial:
    """Coefficients of det(Id + (T-1)F): a basic orthogonal idempotent system."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, check=True):
        self.coefficients = tuple(coefficients)
        if check:
            ring = self.coefficients[0].ring
            total = ring.zero
            for c in self.coefficients:
                assert c * c == c, "rank polynomial coefficient not idempotent"
                total = total + c
            assert total == ring.one, "rank polynomial coefficients sum != 1"
            for i in range(len(self.coefficients)):
                for j in range(i + 1, len(self.coefficients)):
                    assert not (
                        self.coefficients[i] * self.coefficients[j]
                    ), "rank polynomial coefficients not orthogonal"

    def as_poly(self, ring):
        return Poly(ring, list(self.coefficients))

    def __repr__(self):
        return f"RankPolynomial({list(self.coefficients)!r})"


def _has_only_trivial_idempotents(ring):
    # local rings and fields have no idempotents besides 0 and 1
    return ring.is_field or ring.is_local


def rank_polynomial(f_matrix, ring):
    """P_F(T) = det(Id + (T-1)F) for an idempotent matrix F over ring."""
    n = len(f_matrix)
    if not linalg.mat_eq(
        linalg.mat_mul(f_matrix, f_matrix, ring), f_matrix
    ):
        raise NotIdempotentMatrix("F*F != F")
    if _has_only_trivial_idempotents(ring):
        # image of F is free of rank r = residual rank; P_F(T) = T^r
        if ring.is_field:
            r = linalg.rank_over_field(f_matrix, ring)
        else:
            k = ring.residue_field
            res_matrix = [[ring.residue(c) for c in row] for row in f_matrix]
            r = linalg.rank_over_field(res_matrix, k)
        coeffs = [ring.zero] * (n + 1)
        coeffs[r] = ring.one
        return RankPolynomial(coeffs)
    # general ring: P(T) = sum_k c_k (-1)^(n-k) (T-1)^(n-k), chi = det(T*I - F)
    chi = linalg.berkowitz_char_poly(f_matrix, ring)
    t_minus_1 = Poly(ring, [-1, 1])
    p = Poly(ring, [])
    for k, c in enumerate(chi):
        term = t_minus_1 ** (n - k)
        sign = 1 if (n - k) % 2 == 0 else -1
        p = p + term * (c if sign > 0 else -c)
    coeffs = [p.coeff(i) for i in range(n + 1)]
    return RankPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Local-ring linear helpers (membership in free column spans)


def _select_residual_pivots(matrix, ring):
    """Row indices making the chosen-column submatrix residually invertible."""
    if ring.is_field:
        res_matrix = matrix
        field = ring
    else:
        field = ring.residue_field
        res_matrix = [[ring.residue(c) for c in row] for row in matrix]
    ncols = len(matrix[0])
    rows = [list(r) for r in res_matrix]
    chosen = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(len(rows)):
            if i in [c[0] for c in chosen]:
                continue
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            return None
        inv = field.inv(rows[pr][col])
        rows[pr] = [c * inv for c in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[pr])]
        chosen.append((pr, col))
        r += 1
    return [c[0] for c in chosen]


def solve_in_column_span(matrix, v, ring):
    """Solve M a = v exactly over a local ring, M with residually
    independent columns; returns the coefficient vector or None."""
    pivots = _select_residual_pivots(matrix, ring)
    if pivots is None:
        return None
    square = [[matrix[i][j] for j in range(len(matrix[0]))] for i in pivots]
    rhs = [v[i] for i in pivots]
    sol = linalg.solve_unit_pivot(square, rhs, ring)
    check = linalg.mat_vec(matrix, sol, ring)
    if all(a == b for a, b in zip(check, v)):
        return sol
    return None


def free_ideal_basis(alg, gens):
    """Columns spanning the module generated by gens (assumed to generate a
    free direct summand): picks residually independent columns among
    gen * basis products."""
    base = alg.base
    cols = []
    for g in gens:
        for j in range(alg.rank):
            cols.append((g * alg.basis_element(j)).coords)
    if base.is_field:
        field, res_cols = base, cols
    else:
        field = base.residue_field
        res_cols = [[base.residue(c) for c in col] for col in cols]
    chosen = []
    chosen_res = []
    for idx, col in enumerate(cols):
        trial = chosen_res + [res_cols[idx]]
        matrix = [[trial[j][i] for j in range(len(trial))] for i in range(alg.rank)]
        if linalg.rank_over_field(matrix, field) == len(trial):
            chosen.append(col)
            chosen_res.append(res_cols[idx])
    return chosen


# ---------------------------------------------------------------------------
# Decomposition of finite algebras over finite fields


def subalgebra_from_idempotent(alg, e):
    """(factor algebra on e*B, basis columns) for an exact idempotent e.

    The factor has unit e; its basis is a residually independent column
    subset of the multiplication-by-e matrix.
    """
    base = alg.base
    e = _unwrap(e)
    basis_cols = free_ideal_basis(alg, [e])
    r = len(basis_cols)
    matrix = [[basis_cols[j][i] for j in range(r)] for i in range(alg.rank)]

    def coords_in_basis(v):
        sol = solve_in_column_span(matrix, list(v.coords), base)
        assert sol is not None, "element not in the idempotent's ideal"
        return sol

    basis_elems = [alg.element(c) for c in basis_cols]
    table = []
    for i in range(r):
        row = []
        for j in range(r):
            prod = basis_elems[i] * basis_elems[j]
            row.append(coords_in_basis(prod))
        table.append(row)
    unit = coords_in_basis(e * alg.one)
    factor = FiniteAlgebra(base, table, unit, check=False)
    return factor, basis_elems


def frobenius_fixed_space(alg):
    """Basis of {x in B : x^q = x} over a finite field F_q.

    Its dimension equals the number of local factors of B.
    """
    field = alg.base
    q = field.size
    n = alg.rank
    cols = [(alg.basis_element(j) ** q).coords for j in range(n)]
    frob = [[cols[j][i] for j in range(n)] for i in range(n)]
    m = [
        [
            frob[i][j] - (field.one if i == j else field.zero)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return linalg.kernel_over_field(m, field)


def is_local_algebra(alg):
    """Locality certificate: the Frobenius fixed space is one-dimensional."""
    return len(frobenius_fixed_space(alg)) == 1


def decompose_local(alg):
    """Split a finite algebra over a finite field into local factors.

    Returns a list of (Idempotent in alg, factor FiniteAlgebra); the
    idempotents form a basic system of orthogonal idempotents and each
    factor is local (one-dimensional Frobenius fixed space).
    """
    field = alg.base
    fixed = frobenius_fixed_space(alg)
    if len(fixed) == 1:
        return [(Idempotent(alg.one), alg)]
    # find a non-scalar fixed element: some basis vector not in span{1}
    v = None
    for vec in fixed:
        cand = alg.element(vec)
        if not _is_scalar(cand):
            v = cand
            break
    assert v is not None, "fixed space > 1-dim must contain a non-scalar"
    mu = minimal_polynomial(v)
    factors = field_factor(mu)
    assert len(factors) >= 2 and all(m == 1 for _, m in factors), (
        "Frobenius-fixed element must have squarefree split minimal polynomial"
    )
    result = []
    for lin, _ in factors:
        w, rem = divmod_monic(mu, lin)
        assert rem.is_zero
        d, a, b = ext_gcd_poly(lin, w)
        assert d.degree == 0
        inv_d = field.inv(d.coeff(0))
        e = (b * w)(v) * inv_d
        if not isinstance(e, AlgElement):
            e = alg.scalar(e)
        e = Idempotent(e)
        sub, basis_elems = subalgebra_from_idempotent(alg, e)
        for sub_idem, sub_factor in decompose_local(sub):
            # re-express the sub-idempotent in the ambient algebra
            ambient = alg.zero
            for c, bvec in zip(sub_idem.element.coords, basis_elems):
                ambient = ambient + bvec * c
            amb_idem = Idempotent(ambient)
            result.append((amb_idem, sub_factor))
    _assert_basic_system([e for e, _ in result], alg)
    return result


def _is_scalar(x):
    alg = x.algebra
    # x is scalar iff x = c * 1 for some c; solve on the unit coordinates
    field = alg.base
    matrix = [[alg.unit_coords[i]] for i in range(alg.rank)]
    sol = linalg.solve_field(matrix, list(x.coords), field)
    return sol is not None


def _assert_basic_system(idems, alg):
    total = alg.zero
    elems = [_unwrap(e) for e in idems]
    for e in elems:
        total = total + e
    assert total == alg.one, "idempotents do not sum to 1"
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            assert not (elems[i] * elems[j]), "idempotents not orthogonal"


# ---------------------------------------------------------------------------
# Proposition: idempotents of A[X]/(f) <-> monic factorizations f = g*h


def fact_to_idem(f, g, h):
    """Idempotent e = u(x)*g(x) in A[X]/(f) for a residually coprime f = g*h."""
    from .poly import bezout_coprime

    ring = f.ring
    if g * h != f:
        raise NotAFactorization(f"{g!r} * {h!r} != {f!r}")
    u, v = bezout_coprime(g, h)
    alg = FiniteAlgebra.quotient_ring(ring, f)
    e = alg.from_poly(u * g)
    idem = Idempotent(e)
    _assert_same_ideal(alg, alg.from_poly(g), e)
    return idem, alg


def _assert_same_ideal(alg, gx, e):
    """<g(x)> = <e> by mutual membership in free column spans."""
    base = alg.base
    for target, gens in ((e, [gx]), (gx, [e])):
        cols = free_ideal_basis(alg, gens)
        if not cols:
            assert not target, "ideal mismatch"
            continue
        matrix = [
            [cols[j][i] for j in range(len(cols))] for i in range(alg.rank)
        ]
        sol = solve_in_column_span(matrix, list(target.coords), base)
        assert sol is not None, "ideal mismatch"


def idem_to_fact(f, e):
    """Monic (g, h) with f = g*h from an idempotent e of A[X]/(f).

    h is the characteristic polynomial of x acting on e*B, g that of x on
    (1-e)*B; the convention matches fact_to_idem (e = u*g generates <g>).
    """
    ring = f.ring
    alg = (
        e.algebra
        if isinstance(e, AlgElement)
        else _unwrap(e).algebra
    )
    e = _unwrap(e)
    if e * e != e:
        raise NotIdempotent(repr(e))
    x = alg.generator()
    one = alg.one

    def char_on_part(idem):
        cols = free_ideal_basis(alg, [idem])
        r = len(cols)
        if r == 0:
            return Poly(ring, [1])
        matrix = [
            [cols[j][i] for j in range(r)] for i in range(alg.rank)
        ]
        xcols = []
        for col in cols:
            xc = x * alg.element(col)
            sol = solve_in_column_span(matrix, list(xc.coords), ring)
            assert sol is not None
            xcols.append(sol)
        m = [[xcols[j][i] for j in range(r)] for i in range(r)]
        return Poly(ring, linalg.berkowitz_char_poly(m, ring))

    h = char_on_part(e)
    g = char_on_part(one - e)
    assert g * h == f, "recovered factors do not multiply to f"
    # residual consistency: gbar = gcd(ebar, fbar) whenever the base is
    # residually discrete
    if alg.base.is_local and alg.base.is_residually_discrete:
        k = alg.base.residue_field
        ebar_poly = Poly(
            k, [alg.base.residue(c) for c in e.coords]
        )
        fbar = f.residue()
        if not ebar_poly.is_zero:
            gbar = gcd_monic(ebar_poly, fbar)
            # e generates <g>; so gcd(ebar, fbar) = gbar
            assert gbar == g.residue(), "residual gcd consistency failed"
    return g, h
