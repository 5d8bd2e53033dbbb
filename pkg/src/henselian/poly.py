"""Dense univariate polynomials over any ring instance.

Coefficients are stored low-to-high with no trailing zeros; the zero
polynomial has an empty coefficient list.  Includes Euclidean division by
monic divisors, Sylvester resultants, the Bezout certificate for
residually coprime monic pairs, and factorization over finite fields.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .errors import (
    MixedRings,
    NotFiniteField,
    NotMonic,
    NotResiduallyCoprime,
)
from .rings import (
    FiniteField,
    LocalizedIntegers,
    PrimeField,
    Rationals,
    RingElement,
)


class Poly:
    """Dense polynomial; indexable as coefficient list, low-to-high."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        elems = []
        for c in coeffs:
            if isinstance(c, RingElement):
                if c.ring != ring:
                    raise MixedRings(f"{c.ring} vs {ring}")
                elems.append(c)
            else:
                elems.append(ring.element(c))
        while elems and not elems[-1]:
            elems.pop()
        self.ring = ring
        self.coeffs = tuple(elems)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise MixedRings(f"{other.ring} vs {self.ring}")
            return other
        return Poly(self.ring, [other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Poly(self.ring, [])
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly(self.ring, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly(self.ring, [other])
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __call__(self, x):
        """Horner evaluation; x may live in the base ring or any algebra
        over it whose elements absorb base coefficients in + and *."""
        if not self.coeffs:
            if isinstance(x, RingElement):
                return self.ring.zero
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other):
        other = self._coerce(other)
        acc = Poly(self.ring, [])
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(self.ring, [c])
        return acc

    def shift(self, a):
        """f(X + a)."""
        return self.compose(Poly(self.ring, [a, 1]))

    def reverse(self, d=None):
        """X^d * f(1/X), defaulting d = deg f; no leading normalization."""
        if d is None:
            d = self.degree
        if d < self.degree:
            raise NotMonic(f"reverse degree {d} < deg {self.degree}")
        out = [self.ring.zero] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Poly(self.ring, out)

    def derivative(self):
        return Poly(
            self.ring,
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))],
        )

    def map_coeffs(self, fn, target_ring):
        return Poly(target_ring, [fn(c) for c in self.coeffs])

    def residue(self):
        """Coefficientwise image in the residue field of a local ring."""
        k = self.ring.residue_field
        return Poly(k, [self.ring.residue(c) for c in self.coeffs])

    def to_json(self):
        return [self.ring.to_json(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c!r})*X^{i}" if i else f"({c!r})")
        return "Poly(" + " + ".join(terms) + ")"


def x_poly(ring):
    return Poly(ring, [0, 1])


def divmod_monic(f, g):
    """Euclidean division by a monic divisor; exact over any ring."""
    if not g.is_monic:
        raise NotMonic(repr(g))
    ring = f.ring
    if f.degree < g.degree:
        return Poly(ring, []), f
    rem = list(f.coeffs)
    dq = f.degree - g.degree
    q = [ring.zero] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + g.degree]
        q[i] = c
        if c:
            for j in range(g.degree + 1):
                rem[i + j] = rem[i + j] - c * g.coeff(j)
    return Poly(ring, q), Poly(ring, rem[: g.degree])


def gcd_monic(f, g):
    """Monic gcd over a field."""
    field = f.ring
    a, b = f, g
    while not b.is_zero:
        lead_inv = field.inv(b.coeffs[-1])
        b_monic = Poly(field, [c * lead_inv for c in b.coeffs])
        _, r = divmod_monic(a, b_monic)
        a, b = b_monic, r
    if a.is_zero:
        return a
    lead_inv = field.inv(a.coeffs[-1])
    return Poly(field, [c * lead_inv for c in a.coeffs])


def ext_gcd_poly(f, g):
    """Extended gcd over a field: (d, s, t) with s*f + t*g = d, d monic."""
    field = f.ring
    r0, r1 = f, g
    s0, s1 = Poly(field, [1]), Poly(field, [])
    t0, t1 = Poly(field, []), Poly(field, [1])
    while not r1.is_zero:
        lead_inv = field.inv(r1.coeffs[-1])
        r1m = Poly(field, [c * lead_inv for c in r1.coeffs])
        q, r = divmod_monic(r0, r1m)
        q = Poly(field, [c * lead_inv for c in q.coeffs])
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero:
        c = field.inv(r0.coeffs[-1])
        r0 = Poly(field, [x * c for x in r0.coeffs])
        s0 = Poly(field, [x * c for x in s0.coeffs])
        t0 = Poly(field, [x * c for x in t0.coeffs])
    return r0, s0, t0


def sylvester_matrix(g, h):
    """Sylvester matrix of g, h (degrees m, n), size (m+n) x (m+n)."""
    ring = g.ring
    m, n = g.degree, h.degree
    size = m + n
    rows = []
    for i in range(n):
        row = [ring.zero] * size
        for j in range(m + 1):
            row[i + j] = g.coeff(m - j)
        rows.append(row)
    for i in range(m):
        row = [ring.zero] * size
        for j in range(n + 1):
            row[i + j] = h.coeff(n - j)
        rows.append(row)
    return rows


def _det_field(matrix, field):
    n = len(matrix)
    rows = [list(r) for r in matrix]
    det = field.one
    for col in range(n):
        pr = None
        for i in range(col, n):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            return field.zero
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = field.inv(rows[col][col])
        for i in range(col + 1, n):
            if rows[i][col]:
                c = rows[i][col] * inv
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[col])]
    return det


def _det_fraction(matrix, ring):
    """Determinant over Q or Z_(p) via exact Fraction elimination."""
    n = len(matrix)
    rows = [[c.payload for c in r] for r in matrix]
    det = Fraction(1)
    for col in range(n):
        pr = None
        for i in range(col, n):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            return ring.element(0)
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col]:
                c = rows[i][col] * inv
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[col])]
    return ring.element(det)


def resultant(g, h):
    """Sylvester resultant; res(f, constant) = constant^deg(f)."""
    ring = g.ring
    if g.is_zero or h.is_zero:
        if g.degree <= 0 and h.degree <= 0:
            return ring.one if (g.degree == 0 or h.degree == 0) else ring.zero
        return ring.zero
    if g.degree == 0:
        return g.coeffs[0] ** h.degree
    if h.degree == 0:
        return h.coeffs[0] ** g.degree
    matrix = sylvester_matrix(g, h)
    if ring.is_field:
        return _det_field(matrix, ring)
    if isinstance(ring, (Rationals, LocalizedIntegers)):
        return _det_fraction(matrix, ring)
    return linalg.det_dp_expansion(matrix, ring)


def bezout_coprime(g, h):
    """u, v with u*g + v*h = 1, deg u < deg h, deg v < deg g.

    Requires a local residually discrete ring and residually coprime monic
    inputs; solves the Sylvester system with unit pivots and self-checks.
    """
    ring = g.ring
    if not (g.is_monic and h.is_monic):
        raise NotMonic("bezout_coprime needs monic inputs")
    m, n = g.degree, h.degree
    if m == 0:  # g = 1: take u = 1, v = 0
        return Poly(ring, [1]), Poly(ring, [])
    if n == 0:  # h = 1: take u = 0, v = 1
        return Poly(ring, []), Poly(ring, [1])
    res = resultant(g, h)
    branch, _ = ring.local_split(res)
    if branch != "unit":
        raise NotResiduallyCoprime(f"res({g!r},{h!r}) is not a unit")
    # columns of Sylvester^T weight the coefficients of v (deg < m) and
    # u (deg < n) in v*h + u*g; build the (m+n)x(m+n) system directly.
    size = m + n
    cols = []
    for i in range(n):  # u = sum u_i X^i, deg u < n
        shifted = [ring.zero] * size
        for j, c in enumerate(g.coeffs):
            shifted[i + j] = c
        cols.append(shifted)
    for i in range(m):  # v coefficients
        shifted = [ring.zero] * size
        for j, c in enumerate(h.coeffs):
            shifted[i + j] = c
        cols.append(shifted)
    matrix = [[cols[j][i] for j in range(size)] for i in range(size)]
    rhs = [ring.one] + [ring.zero] * (size - 1)
    sol = linalg.solve_unit_pivot(matrix, rhs, ring)
    u = Poly(ring, sol[:n])
    v = Poly(ring, sol[n:])
    assert u * g + v * h == Poly(ring, [1]), "bezout certificate failed"
    return u, v


def squarefree_decomposition(f, field):
    """List of (squarefree monic g_i, multiplicity i) with product f."""
    p = field.char
    out = []
    lead_inv = field.inv(f.coeffs[-1])
    f = Poly(field, [c * lead_inv for c in f.coeffs])

    def sqfree_char_p(f, mult):
        d = f.derivative()
        if d.is_zero:
            # f = g(X^p); take p-th roots of the coefficients
            q = field.size
            root_coeffs = []
            for i in range(0, f.degree + 1, p):
                root_coeffs.append(f.coeff(i) ** (q // p))
            sqfree_char_p(Poly(field, root_coeffs), mult * p)
            return
        a = gcd_monic(f, d)
        b, _ = divmod_monic(f, a)  # product of distinct factors
        i = 1
        while b.degree > 0:
            c = gcd_monic(a, b)
            g, _ = divmod_monic(b, c)
            if g.degree > 0:
                out.append((g, mult * i))
            b = c
            a, _ = divmod_monic(a, c)
            i += 1
        if a.degree > 0:
            sqfree_char_p(a, mult)

    sqfree_char_p(f, 1)
    merged = {}
    for g, mult in out:
        merged[mult] = merged.get(mult, Poly(field, [1])) * g
    return [(g, mult) for mult, g in sorted(merged.items(), key=lambda kv: kv[0])]


def _pow_mod(base, exp, mod, field):
    result = Poly(field, [1])
    base = divmod_monic(base, mod)[1]
    while exp:
        if exp & 1:
            result = divmod_monic(result * base, mod)[1]
        base = divmod_monic(base * base, mod)[1]
        exp >>= 1
    return result


def _distinct_degree(f, field):
    """Split a squarefree monic f into (product of degree-d irreducibles, d)."""
    q = field.size
    out = []
    x = x_poly(field)
    h = x
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1 and rest.degree > 0:
        d += 1
        h = _pow_mod(h, q, rest, field)
        g = gcd_monic(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest, _ = divmod_monic(rest, g)
            h = divmod_monic(h, rest)[1] if rest.degree > 0 else h
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree_split(f, d, field, rng):
    """Cantor-Zassenhaus split of f (product of degree-d irreducibles)."""
    if f.degree == d:
        return [f]
    q = field.size
    while True:
        a = Poly(
            field,
            [field.random_element(rng) for _ in range(f.degree)],
        )
        if a.degree < 1:
            continue
        if field.char == 2:
            # trace map T(a) = a + a^2 + ... + a^(2^(kd-1))
            k = 0
            s = field.size
            while s > 1:
                s //= 2
                k += 1
            t = Poly(field, [])
            cur = divmod_monic(a, f)[1]
            for _ in range(k * d):
                t = t + cur
                cur = divmod_monic(cur * cur, f)[1]
            g = gcd_monic(f, t)
        else:
            e = (q**d - 1) // 2
            b = _pow_mod(a, e, f, field)
            g = gcd_monic(f, b - Poly(field, [1]))
        if 0 < g.degree < f.degree:
            other, _ = divmod_monic(f, g)
            return _equal_degree_split(g, d, field, rng) + _equal_degree_split(
                other, d, field, rng
            )


def field_factor(f, seed=0):
    """Factor f over a finite field into monic irreducibles with multiplicity."""
    field = f.ring
    if not (field.is_field and hasattr(field, "size")):
        raise NotFiniteField(str(field))
    if f.degree < 1:
        return []
    rng = random.Random(seed)
    result = {}
    for g, mult in squarefree_decomposition(f, field):
        for h, d in _distinct_degree(g, field):
            for irred in _equal_degree_split(h, d, field, rng):
                key = irred.coeffs
                if key in result:
                    result[key] = (irred, result[key][1] + mult)
                else:
                    result[key] = (irred, mult)
    factors = sorted(
        result.values(), key=lambda fm: (fm[0].degree, [repr(c) for c in fm[0].coeffs])
    )
    check = Poly(field, [f.coeffs[-1]])
    for irred, mult in factors:
        check = check * irred**mult
    assert check == f, "factorization self-check failed"
    return factors


def irreducible_poly(field, d, seed=0):
    """Lexicographically first monic irreducible of degree d over the field."""
    if d == 1:
        return x_poly(field)
    elems = list(field.elements())
    # lexicographic order on (c_0, ..., c_{d-1}) in enumeration order
    def candidates(pos, prefix):
        if pos == d:
            yield Poly(field, prefix + [field.one])
            return
        for e in elems:
            yield from candidates(pos + 1, prefix + [e])

    for f in candidates(0, []):
        factors = field_factor(f, seed=seed)
        if len(factors) == 1 and factors[0][1] == 1:
            return f
    raise AssertionError("no irreducible polynomial found")
