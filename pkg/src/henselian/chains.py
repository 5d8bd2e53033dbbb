"""Iterated monogenic extensions A[v1][v2].../(g1, g2, ...).

Each step adjoins one generator v_k subject to a monic relation g_k whose
coefficients live in the previous level.  Elements are nested coordinate
lists: a level-k element is a list of deg(g_k) level-(k-1) elements,
bottoming out at base RingElements.  The free-module rank of the whole
chain is the product of the step degrees.

Both the universal decomposition algebra (splitting chain of one
polynomial) and the Henselization tower (independent adjunctions) build
on this representation.
"""

from __future__ import annotations

from math import prod

from .errors import MixedAlgebras, MixedRings, NotMonic
from .rings import RingElement


class ExtensionChain:
    """A chain of monogenic extensions over a base ring."""

    def __init__(self, base):
        self.base = base
        self.degrees = []
        self.relations = []  # non-leading coefficients, low-to-high, per step

    @property
    def levels(self):
        return len(self.degrees)

    @property
    def rank(self):
        return prod(self.degrees)

    def copy(self):
        c = ExtensionChain(self.base)
        c.degrees = list(self.degrees)
        c.relations = list(self.relations)
        return c

    # -- element constructors ------------------------------------------------

    def zero_data(self, level=None):
        if level is None:
            level = self.levels
        if level == 0:
            return self.base.zero
        return [self.zero_data(level - 1) for _ in range(self.degrees[level - 1])]

    def scalar_data(self, c, level=None):
        if level is None:
            level = self.levels
        if level == 0:
            return c if isinstance(c, RingElement) else self.base.element(c)
        data = self.zero_data(level)
        data[0] = self.scalar_data(c, level - 1)
        return data

    def lift_data(self, data, level):
        """Reinterpret a level-(level) value as a level+1 value."""
        out = self.zero_data(level + 1)
        out[0] = data
        return out

    def scalar(self, c):
        return ChainElement(self, self.scalar_data(c))

    @property
    def zero(self):
        return ChainElement(self, self.zero_data())

    @property
    def one(self):
        return self.scalar(self.base.one)

    def gen(self, k):
        """The k-th adjoined generator (0-based) as a top-level element."""
        deg = self.degrees[k]
        if deg == 1:
            # linear relation: v = -g[0]
            data = self.lift_data(self._neg(self.relations[k][0], k), k)
        else:
            data = self.zero_data(k + 1)
            data[1] = self.scalar_data(self.base.one, k)
        for lvl in range(k + 1, self.levels):
            data = self.lift_data(data, lvl)
        return ChainElement(self, data)

    def adjoin(self, rel_coeffs):
        """New chain with one more generator; rel_coeffs are the non-leading
        coefficients (low-to-high, as level-`levels` data) of a monic
        relation of degree len(rel_coeffs)."""
        c = self.copy()
        c.degrees.append(len(rel_coeffs))
        c.relations.append(list(rel_coeffs))
        return c

    # -- nested arithmetic ---------------------------------------------------

    def _add(self, a, b, level):
        if level == 0:
            return a + b
        return [self._add(x, y, level - 1) for x, y in zip(a, b)]

    def _sub(self, a, b, level):
        if level == 0:
            return a - b
        return [self._sub(x, y, level - 1) for x, y in zip(a, b)]

    def _neg(self, a, level):
        if level == 0:
            return -a
        return [self._neg(x, level - 1) for x in a]

    def _is_zero(self, a, level):
        if level == 0:
            return not a
        return all(self._is_zero(x, level - 1) for x in a)

    def _scale(self, a, c, level):
        """Multiply level-`level` data by level-(level-1)-or-lower data c
        given as data at level-1."""
        return [self._mul(x, c, level - 1) for x in a]

    def _mul(self, a, b, level):
        if level == 0:
            return a * b
        d = self.degrees[level - 1]
        out = [self.zero_data(level - 1) for _ in range(2 * d - 1)]
        for i, x in enumerate(a):
            if self._is_zero(x, level - 1):
                continue
            for j, y in enumerate(b):
                if self._is_zero(y, level - 1):
                    continue
                out[i + j] = self._add(
                    out[i + j], self._mul(x, y, level - 1), level - 1
                )
        return self._reduce(out, level)

    def _reduce(self, coeffs, level):
        """Reduce a too-long coefficient list modulo the monic relation."""
        d = self.degrees[level - 1]
        rel = self.relations[level - 1]
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if not self._is_zero(c, level - 1):
                for j in range(d):
                    coeffs[i - d + j] = self._sub(
                        coeffs[i - d + j],
                        self._mul(c, rel[j], level - 1),
                        level - 1,
                    )
            coeffs.pop()
        while len(coeffs) < d:
            coeffs.append(self.zero_data(level - 1))
        return coeffs

    # -- flattening ----------------------------------------------------------

    def flatten(self, data, level=None):
        """Coordinates over the base, generator exponents in mixed radix
        (last adjoined generator varies fastest)."""
        if level is None:
            level = self.levels
        if level == 0:
            return [data]
        out = []
        for sub in data:
            out.extend(self.flatten(sub, level - 1))
        return out

    def unflatten(self, flat, level=None):
        if level is None:
            level = self.levels
        data, rest = self._unflatten(list(flat), level)
        assert not rest
        return data

    def _unflatten(self, flat, level):
        if level == 0:
            return flat[0], flat[1:]
        out = []
        for _ in range(self.degrees[level - 1]):
            sub, flat = self._unflatten(flat, level - 1)
            out.append(sub)
        return out, flat

    def basis_exponents(self):
        """Exponent tuples (e_0, ..., e_{levels-1}) indexed by generator, in
        flatten order: the last adjoined generator varies slowest."""
        def rec(level):
            if level == 0:
                yield ()
                return
            for e in range(self.degrees[level - 1]):
                for rest in rec(level - 1):
                    yield rest + (e,)

        return list(rec(self.levels))

    def map_base(self, data, fn, level=None):
        if level is None:
            level = self.levels
        if level == 0:
            return fn(data)
        return [self.map_base(sub, fn, level - 1) for sub in data]


class ChainElement:
    """Element of the top level of an ExtensionChain."""

    __slots__ = ("chain", "data")

    def __init__(self, chain, data):
        self.chain = chain
        self.data = data

    def _coerce(self, other):
        if isinstance(other, ChainElement):
            if other.chain is not self.chain and (
                other.chain.degrees != self.chain.degrees
                or other.chain.base != self.chain.base
            ):
                raise MixedAlgebras("chain mismatch")
            return other
        return self.chain.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        return ChainElement(
            self.chain,
            self.chain._add(self.data, other.data, self.chain.levels),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ChainElement(
            self.chain,
            self.chain._sub(self.data, other.data, self.chain.levels),
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return ChainElement(
            self.chain, self.chain._neg(self.data, self.chain.levels)
        )

    def __mul__(self, other):
        other = self._coerce(other)
        return ChainElement(
            self.chain,
            self.chain._mul(self.data, other.data, self.chain.levels),
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.chain.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (ChainElement, RingElement, int)):
            other = self._coerce(other)
            return self.chain._is_zero(
                self.chain._sub(self.data, other.data, self.chain.levels),
                self.chain.levels,
            )
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.flatten()))

    def __bool__(self):
        return not self.chain._is_zero(self.data, self.chain.levels)

    def flatten(self):
        return self.chain.flatten(self.data)

    def __repr__(self):
        return f"ChainElement({self.flatten()!r})"
