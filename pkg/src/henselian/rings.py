"""Computable commutative ring instances with exact arithmetic.

Every shipped ring keeps its elements in a canonical form, so equality is
syntactic.  The capability flags (``is_local``, ``is_residually_discrete``,
``is_henselian_oracle``, ``has_nilpotents``) are forced by the ring kind.

Shipped kinds:

* ``Rationals`` -- the field Q, payload ``Fraction``.
* ``PrimeField(p)`` -- F_p, payload ``int`` in [0, p).
* ``FiniteField(base, modulus)`` -- base[T]/(modulus), payload tuple of base
  elements; ``base`` may itself be a finite field, so towers of finite
  fields are supported.
* ``LocalizedIntegers(p)`` -- Z localized at p, payload reduced ``Fraction``
  with denominator prime to p.
* ``ModularIntegers(m)`` -- Z/m; local (and a Henselian oracle) exactly
  when m is a prime power.
* ``TruncatedPadics(p, N)`` -- Z/p^N viewed as a precision-N model of the
  p-adic integers; Henselian oracle.
* ``TruncatedSeries(field, N)`` -- field[[t]]/(t^N); Henselian oracle.
* ``UnramifiedPadics(p, N, modulus)`` -- Galois ring GR(p^N, d), the
  unramified degree-d extension of Z/p^N; used internally when a residue
  field is too small for a shift search.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    MixedRings,
    NotLocal,
    NotResiduallyDiscrete,
    UnsupportedKind,
)

UNIT = "unit"
RADICAL = "radical"


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def padic_valuation(n, p):
    """Valuation of a nonzero integer; caller handles 0."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class RingElement:
    """A canonical element of a ring; arithmetic delegates to the ring."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise MixedRings(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.element(other)

    def _coercible(self, other):
        return isinstance(other, (RingElement, int, Fraction))

    def __add__(self, other):
        if not self._coercible(other):
            return NotImplemented
        return self.ring.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not self._coercible(other):
            return NotImplemented
        return self.ring.add(self, self.ring.neg(self._coerce(other)))

    def __rsub__(self, other):
        if not self._coercible(other):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other):
        if not self._coercible(other):
            return NotImplemented
        return self.ring.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, n):
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, (int, Fraction)):
            return self == self.ring.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.payload))

    def __bool__(self):
        return self != self.ring.zero

    def __repr__(self):
        return f"{self.ring.format_element(self)}"


class Ring:
    is_discrete = True
    is_field = False
    is_local = False
    is_residually_discrete = False
    is_henselian_oracle = False
    has_nilpotents = False

    def element(self, payload):
        raise NotImplementedError

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def is_unit(self, x):
        return self.local_split(x)[0] == UNIT

    def local_split(self, x):
        """Decide x in A^x (returning the inverse) or x in the radical."""
        raise NotLocal(str(self))

    def inv(self, x):
        branch, y = self.local_split(x)
        if branch != UNIT:
            from .errors import NotInvertible

            raise NotInvertible(f"{x} in {self}")
        return y

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    @property
    def residue_field(self):
        raise NotResiduallyDiscrete(str(self))

    def residue(self, x):
        raise NotResiduallyDiscrete(str(self))

    def lift_residue(self, a):
        """Some preimage of a residue-field element under the quotient map."""
        raise NotResiduallyDiscrete(str(self))

    def valuation(self, x):
        raise UnsupportedKind(str(self))

    def random_element(self, rng):
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, data):
        return self.element(data)

    def format_element(self, x):
        return str(x.payload)

    def spec_string(self):
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


def _as_fraction(payload):
    if isinstance(payload, RingElement):
        payload = payload.payload
    if isinstance(payload, (list, tuple)):
        num, den = payload
        return Fraction(num, den)
    return Fraction(payload)


class Rationals(Ring):
    is_field = True
    is_local = True
    is_residually_discrete = True

    def element(self, payload):
        return RingElement(self, _as_fraction(payload))

    def add(self, x, y):
        return RingElement(self, x.payload + y.payload)

    def mul(self, x, y):
        return RingElement(self, x.payload * y.payload)

    def neg(self, x):
        return RingElement(self, -x.payload)

    def local_split(self, x):
        if x.payload == 0:
            return (RADICAL, None)
        return (UNIT, RingElement(self, 1 / x.payload))

    @property
    def residue_field(self):
        return self

    def residue(self, x):
        return x

    def lift_residue(self, a):
        return a

    def random_element(self, rng):
        return self.element(Fraction(rng.randint(-20, 20), rng.randint(1, 12)))

    def to_json(self, x):
        if x.payload.denominator == 1:
            return int(x.payload)
        return [x.payload.numerator, x.payload.denominator]

    def spec_string(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Ring):
    is_field = True
    is_local = True
    is_residually_discrete = True

    def __init__(self, p):
        if not is_prime(p):
            raise UnsupportedKind(f"{p} is not prime")
        self.p = p
        self.size = p
        self.char = p

    def element(self, payload):
        if isinstance(payload, RingElement):
            payload = payload.payload
        if isinstance(payload, Fraction):
            num = payload.numerator % self.p
            den = payload.denominator % self.p
            return RingElement(self, num * pow(den, -1, self.p) % self.p)
        return RingElement(self, int(payload) % self.p)

    def add(self, x, y):
        return RingElement(self, (x.payload + y.payload) % self.p)

    def mul(self, x, y):
        return RingElement(self, (x.payload * y.payload) % self.p)

    def neg(self, x):
        return RingElement(self, -x.payload % self.p)

    def local_split(self, x):
        if x.payload == 0:
            return (RADICAL, None)
        return (UNIT, RingElement(self, pow(x.payload, -1, self.p)))

    @property
    def residue_field(self):
        return self

    def residue(self, x):
        return x

    def lift_residue(self, a):
        return a

    def elements(self):
        for i in range(self.p):
            yield RingElement(self, i)

    def random_element(self, rng):
        return RingElement(self, rng.randrange(self.p))

    def to_json(self, x):
        return x.payload

    def spec_string(self):
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_divmod_field(num, den, field):
    """Euclidean division of coefficient lists over a field."""
    num = list(num)
    q = [field.zero] * max(0, len(num) - len(den) + 1)
    inv_lc = field.inv(den[-1])
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lc
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] = num[i + j] - c * d
    return q, _poly_trim(num)


def _poly_ext_gcd(a, b, field):
    """Extended gcd of coefficient lists over a field (monic gcd)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]

    def sub(u, v):
        out = list(u) + [field.zero] * max(0, len(v) - len(u))
        for i, c in enumerate(v):
            out[i] = out[i] - c
        return _poly_trim(out)

    def mul(u, v):
        if not u or not v:
            return []
        out = [field.zero] * (len(u) + len(v) - 1)
        for i, c in enumerate(u):
            if c:
                for j, d in enumerate(v):
                    out[i + j] = out[i + j] + c * d
        return _poly_trim(out)

    while r1:
        q, r = _poly_divmod_field(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0:
        c = field.inv(r0[-1])
        r0 = [x * c for x in r0]
        s0 = [x * c for x in s0]
        t0 = [x * c for x in t0]
    return r0, s0, t0


class FiniteField(Ring):
    """base[T]/(modulus); modulus monic, assumed irreducible over base."""

    is_field = True
    is_local = True
    is_residually_discrete = True

    def __init__(self, base, modulus):
        if not base.is_field or not hasattr(base, "size"):
            raise UnsupportedKind("finite field base must be a finite field")
        modulus = [base.element(c) for c in modulus]
        if len(modulus) < 2 or modulus[-1] != base.one:
            raise UnsupportedKind("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = len(modulus) - 1
        self.size = base.size**self.deg
        self.char = base.char
        self.p = base.char

    def element(self, payload):
        if isinstance(payload, RingElement):
            if payload.ring == self:
                return payload
            if payload.ring == self.base:
                payload = [payload]
            else:
                payload = payload.payload
        if isinstance(payload, int):
            payload = [payload]
        coeffs = [self.base.element(c) for c in payload]
        coeffs = self._reduce(coeffs)
        coeffs += [self.base.zero] * (self.deg - len(coeffs))
        return RingElement(self, tuple(coeffs))

    def _reduce(self, coeffs):
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, self.deg - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(self.deg):
                    coeffs[i - self.deg + j] = (
                        coeffs[i - self.deg + j] - c * self.modulus[j]
                    )
            coeffs.pop()
        return coeffs

    def add(self, x, y):
        return RingElement(
            self, tuple(a + b for a, b in zip(x.payload, y.payload))
        )

    def mul(self, x, y):
        out = [self.base.zero] * (2 * self.deg - 1)
        for i, a in enumerate(x.payload):
            if a:
                for j, b in enumerate(y.payload):
                    out[i + j] = out[i + j] + a * b
        out = self._reduce(out)
        out += [self.base.zero] * (self.deg - len(out))
        return RingElement(self, tuple(out))

    def neg(self, x):
        return RingElement(self, tuple(-a for a in x.payload))

    def local_split(self, x):
        if not any(x.payload):
            return (RADICAL, None)
        g, s, _ = _poly_ext_gcd(
            _poly_trim(x.payload), list(self.modulus), self.base
        )
        assert len(g) == 1, "modulus is not irreducible"
        return (UNIT, self.element(s))

    @property
    def residue_field(self):
        return self

    def residue(self, x):
        return x

    def lift_residue(self, a):
        return a

    def gen(self):
        return self.element([0, 1])

    def elements(self):
        for sub in _tuples(self.base, self.deg):
            yield RingElement(self, sub)

    def random_element(self, rng):
        return RingElement(
            self, tuple(self.base.random_element(rng) for _ in range(self.deg))
        )

    def to_json(self, x):
        return [self.base.to_json(c) for c in x.payload]

    def format_element(self, x):
        return "[" + ",".join(repr(c) for c in x.payload) + "]"

    def spec_string(self):
        if isinstance(self.base, PrimeField):
            mods = ",".join(str(c.payload) for c in self.modulus)
            return f"Fq:{self.base.p}:[{mods}]"
        return f"FqExt({self.base.spec_string()})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("Fq", self.base, self.modulus))


def _tuples(field, n):
    if n == 0:
        yield ()
        return
    for head in field.elements():
        for rest in _tuples(field, n - 1):
            yield (head,) + rest


class LocalizedIntegers(Ring):
    """Z_(p): reduced fractions with denominator prime to p."""

    is_local = True
    is_residually_discrete = True

    def __init__(self, p):
        if not is_prime(p):
            raise UnsupportedKind(f"{p} is not prime")
        self.p = p

    def element(self, payload):
        q = _as_fraction(payload)
        if q.denominator % self.p == 0:
            raise UnsupportedKind(f"{q} is not in Z localized at {self.p}")
        return RingElement(self, q)

    def add(self, x, y):
        return RingElement(self, x.payload + y.payload)

    def mul(self, x, y):
        return RingElement(self, x.payload * y.payload)

    def neg(self, x):
        return RingElement(self, -x.payload)

    def local_split(self, x):
        if x.payload != 0 and x.payload.numerator % self.p != 0:
            return (UNIT, RingElement(self, 1 / x.payload))
        return (RADICAL, None)

    @property
    def residue_field(self):
        return PrimeField(self.p)

    def residue(self, x):
        return self.residue_field.element(x.payload)

    def lift_residue(self, a):
        return self.element(a.payload)

    def valuation(self, x):
        if x.payload == 0:
            raise UnsupportedKind("valuation of exact zero is infinite")
        return padic_valuation(x.payload.numerator, self.p)

    def random_element(self, rng):
        num = rng.randint(-40, 40)
        den = rng.randint(1, 20)
        while den % self.p == 0:
            den = rng.randint(1, 20)
        return self.element(Fraction(num, den))

    def to_json(self, x):
        if x.payload.denominator == 1:
            return int(x.payload)
        return [x.payload.numerator, x.payload.denominator]

    def spec_string(self):
        return f"Zloc:{self.p}"

    def __eq__(self, other):
        return isinstance(other, LocalizedIntegers) and other.p == self.p

    def __hash__(self):
        return hash(("Zloc", self.p))


class ModularIntegers(Ring):
    """Z/m.  Local with a Newton-based Henselian oracle iff m = p^k."""

    def __init__(self, m):
        if m < 2:
            raise UnsupportedKind("modulus must be >= 2")
        self.m = m
        self._prime_power = None
        for p in range(2, m + 1):
            if m % p == 0:
                k = padic_valuation(m, p)
                if p**k == m and is_prime(p):
                    self._prime_power = (p, k)
                break
        rad = 1
        n = m
        d = 2
        while d * d <= n:
            if n % d == 0:
                rad *= d
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            rad *= n
        self.radical_modulus = rad
        self.has_nilpotents = rad != m
        if self._prime_power:
            self.is_local = True
            self.is_residually_discrete = True
            self.is_henselian_oracle = True
            self.p = self._prime_power[0]
            self.precision = self._prime_power[1]

    def element(self, payload):
        if isinstance(payload, RingElement):
            payload = payload.payload
        if isinstance(payload, Fraction):
            num = payload.numerator % self.m
            den = payload.denominator % self.m
            return RingElement(self, num * pow(den, -1, self.m) % self.m)
        return RingElement(self, int(payload) % self.m)

    def add(self, x, y):
        return RingElement(self, (x.payload + y.payload) % self.m)

    def mul(self, x, y):
        return RingElement(self, (x.payload * y.payload) % self.m)

    def neg(self, x):
        return RingElement(self, -x.payload % self.m)

    def is_unit(self, x):
        from math import gcd

        return gcd(x.payload, self.m) == 1

    def local_split(self, x):
        if not self.is_local:
            raise NotLocal(str(self))
        if x.payload % self.p == 0:
            return (RADICAL, None)
        return (UNIT, RingElement(self, pow(x.payload, -1, self.m)))

    def inv(self, x):
        from math import gcd

        if gcd(x.payload, self.m) != 1:
            from .errors import NotInvertible

            raise NotInvertible(f"{x.payload} mod {self.m}")
        return RingElement(self, pow(x.payload, -1, self.m))

    @property
    def residue_field(self):
        if not self.is_local:
            raise NotResiduallyDiscrete(str(self))
        return PrimeField(self.p)

    def residue(self, x):
        return self.residue_field.element(x.payload)

    def lift_residue(self, a):
        return self.element(a.payload)

    def valuation(self, x):
        if not self.is_local:
            raise UnsupportedKind(str(self))
        if x.payload == 0:
            return self.precision
        return min(padic_valuation(x.payload, self.p), self.precision)

    def is_nilpotent(self, x):
        return x.payload % self.radical_modulus == 0

    def elements(self):
        for i in range(self.m):
            yield RingElement(self, i)

    def random_element(self, rng):
        return RingElement(self, rng.randrange(self.m))

    def to_json(self, x):
        return x.payload

    def spec_string(self):
        return f"Zmod:{self.m}"

    def __eq__(self, other):
        return isinstance(other, ModularIntegers) and other.m == self.m

    def __hash__(self):
        return hash(("Zmod", self.m))


class TruncatedPadics(Ring):
    """Z/p^N as a fixed-precision model of the p-adic integers.

    An element of valuation >= N is 0 at this precision; callers needing
    more digits re-run at a higher N.
    """

    is_local = True
    is_residually_discrete = True
    is_henselian_oracle = True

    def __init__(self, p, precision):
        if not is_prime(p):
            raise UnsupportedKind(f"{p} is not prime")
        if precision < 1:
            raise UnsupportedKind("precision must be >= 1")
        self.p = p
        self.precision = precision
        self.modulus = p**precision

    def element(self, payload):
        if isinstance(payload, RingElement):
            payload = payload.payload
        if isinstance(payload, Fraction):
            num = payload.numerator % self.modulus
            den = payload.denominator
            if den % self.p == 0:
                raise UnsupportedKind(f"{payload} has negative valuation")
            return RingElement(self, num * pow(den, -1, self.modulus) % self.modulus)
        return RingElement(self, int(payload) % self.modulus)

    def add(self, x, y):
        return RingElement(self, (x.payload + y.payload) % self.modulus)

    def mul(self, x, y):
        return RingElement(self, (x.payload * y.payload) % self.modulus)

    def neg(self, x):
        return RingElement(self, -x.payload % self.modulus)

    def local_split(self, x):
        if x.payload % self.p == 0:
            return (RADICAL, None)
        return (UNIT, RingElement(self, pow(x.payload, -1, self.modulus)))

    @property
    def residue_field(self):
        return PrimeField(self.p)

    def residue(self, x):
        return self.residue_field.element(x.payload)

    def lift_residue(self, a):
        return self.element(a.payload)

    def valuation(self, x):
        if x.payload == 0:
            return self.precision
        return padic_valuation(x.payload, self.p)

    def elements(self):
        for i in range(self.modulus):
            yield RingElement(self, i)

    def random_element(self, rng):
        return RingElement(self, rng.randrange(self.modulus))

    def to_json(self, x):
        return x.payload

    def spec_string(self):
        return f"PadicTrunc:{self.p}:{self.precision}"

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedPadics)
            and other.p == self.p
            and other.precision == self.precision
        )

    def __hash__(self):
        return hash(("PadicTrunc", self.p, self.precision))


class TruncatedSeries(Ring):
    """field[[t]]/(t^N): truncated power series, a Henselian oracle."""

    is_local = True
    is_residually_discrete = True
    is_henselian_oracle = True
    has_nilpotents = True

    def __init__(self, coef_field, precision):
        if not coef_field.is_field:
            raise UnsupportedKind("series coefficients must form a field")
        if precision < 1:
            raise UnsupportedKind("precision must be >= 1")
        self.coef_field = coef_field
        self.precision = precision

    def element(self, payload):
        if isinstance(payload, RingElement):
            if payload.ring == self:
                return payload
            payload = [payload]
        if isinstance(payload, (int, Fraction)):
            payload = [payload]
        coeffs = [self.coef_field.element(c) for c in payload][: self.precision]
        coeffs += [self.coef_field.zero] * (self.precision - len(coeffs))
        return RingElement(self, tuple(coeffs))

    def add(self, x, y):
        return RingElement(
            self, tuple(a + b for a, b in zip(x.payload, y.payload))
        )

    def mul(self, x, y):
        out = [self.coef_field.zero] * self.precision
        for i, a in enumerate(x.payload):
            if a:
                for j, b in enumerate(y.payload):
                    if i + j < self.precision:
                        out[i + j] = out[i + j] + a * b
        return RingElement(self, tuple(out))

    def neg(self, x):
        return RingElement(self, tuple(-a for a in x.payload))

    def local_split(self, x):
        if not x.payload[0]:
            return (RADICAL, None)
        # invert by the geometric series: x = c(1 - u t...) with c a unit
        inv0 = self.coef_field.inv(x.payload[0])
        y = self.element([inv0])
        two = self.element(2)
        for _ in range(self.precision.bit_length() + 1):
            y = y * (two - x * y)
        assert (x * y).payload == self.one.payload
        return (UNIT, y)

    @property
    def residue_field(self):
        return self.coef_field

    def residue(self, x):
        return x.payload[0]

    def lift_residue(self, a):
        return self.element([a])

    def valuation(self, x):
        for i, c in enumerate(x.payload):
            if c:
                return i
        return self.precision

    def random_element(self, rng):
        return RingElement(
            self,
            tuple(
                self.coef_field.random_element(rng)
                for _ in range(self.precision)
            ),
        )

    def to_json(self, x):
        return [self.coef_field.to_json(c) for c in x.payload]

    def spec_string(self):
        return f"SeriesTrunc:{self.coef_field.spec_string()}:{self.precision}"

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and other.coef_field == self.coef_field
            and other.precision == self.precision
        )

    def __hash__(self):
        return hash(("SeriesTrunc", self.coef_field, self.precision))


class UnramifiedPadics(Ring):
    """(Z/p^N)[T]/(modulus) with modulus residually irreducible.

    The residue field is F_p[T]/(modulus mod p).  Internal machinery for
    non-monic factor lifting over small residue fields.
    """

    is_local = True
    is_residually_discrete = True
    is_henselian_oracle = True

    def __init__(self, p, precision, modulus):
        if not is_prime(p):
            raise UnsupportedKind(f"{p} is not prime")
        self.p = p
        self.precision = precision
        self.pn = p**precision
        self.modulus = tuple(int(c) % self.pn for c in modulus)
        if self.modulus[-1] != 1:
            raise UnsupportedKind("modulus must be monic")
        self.deg = len(self.modulus) - 1
        self._resfield = FiniteField(
            PrimeField(p), [c % p for c in self.modulus]
        )

    def element(self, payload):
        if isinstance(payload, RingElement):
            payload = payload.payload
        if isinstance(payload, int):
            payload = [payload]
        coeffs = [int(c) % self.pn for c in payload]
        coeffs = self._reduce(coeffs)
        coeffs += [0] * (self.deg - len(coeffs))
        return RingElement(self, tuple(coeffs))

    def _reduce(self, coeffs):
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, self.deg - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(self.deg):
                    coeffs[i - self.deg + j] = (
                        coeffs[i - self.deg + j] - c * self.modulus[j]
                    ) % self.pn
            coeffs.pop()
        return coeffs

    def add(self, x, y):
        return RingElement(
            self, tuple((a + b) % self.pn for a, b in zip(x.payload, y.payload))
        )

    def mul(self, x, y):
        out = [0] * (2 * self.deg - 1)
        for i, a in enumerate(x.payload):
            if a:
                for j, b in enumerate(y.payload):
                    out[i + j] = (out[i + j] + a * b) % self.pn
        out = self._reduce(out)
        out += [0] * (self.deg - len(out))
        return RingElement(self, tuple(out))

    def neg(self, x):
        return RingElement(self, tuple(-a % self.pn for a in x.payload))

    def local_split(self, x):
        r = self.residue(x)
        if not r:
            return (RADICAL, None)
        # Newton from the residual inverse: y <- y(2 - xy)
        rb, rinv = self._resfield.local_split(r)
        y = self.lift_residue(rinv)
        two = self.element(2)
        for _ in range(self.precision.bit_length() + 1):
            y = y * (two - x * y)
        assert (x * y).payload == self.one.payload
        return (UNIT, y)

    @property
    def residue_field(self):
        return self._resfield

    def residue(self, x):
        return self._resfield.element([c % self.p for c in x.payload])

    def lift_residue(self, a):
        return self.element([c.payload for c in a.payload])

    def valuation(self, x):
        if not any(x.payload):
            return self.precision
        return min(padic_valuation(c, self.p) for c in x.payload if c)

    def random_element(self, rng):
        return RingElement(
            self, tuple(rng.randrange(self.pn) for _ in range(self.deg))
        )

    def to_json(self, x):
        return list(x.payload)

    def spec_string(self):
        mods = ",".join(str(c) for c in self.modulus)
        return f"PadicUnram:{self.p}:{self.precision}:[{mods}]"

    def __eq__(self, other):
        return (
            isinstance(other, UnramifiedPadics)
            and other.p == self.p
            and other.precision == self.precision
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("PadicUnram", self.p, self.precision, self.modulus))


def parse_ring(spec):
    """Parse CLI ring-spec strings such as ``Zloc:5`` or ``Fq:2:[1,1,0,1]``."""
    parts = spec.split(":")
    kind = parts[0]
    if kind == "Q":
        return Rationals()
    if kind == "Fp":
        return PrimeField(int(parts[1]))
    if kind == "Fq":
        p = int(parts[1])
        mods = parts[2].strip("[]")
        modulus = [int(c) for c in mods.split(",")]
        return FiniteField(PrimeField(p), modulus)
    if kind == "Zloc":
        return LocalizedIntegers(int(parts[1]))
    if kind == "Zmod":
        return ModularIntegers(int(parts[1]))
    if kind == "PadicTrunc":
        return TruncatedPadics(int(parts[1]), int(parts[2]))
    if kind == "SeriesTrunc":
        coef = parse_ring(":".join(parts[1:-1]))
        return TruncatedSeries(coef, int(parts[-1]))
    if kind == "PadicUnram":
        mods = parts[3].strip("[]")
        return UnramifiedPadics(
            int(parts[1]), int(parts[2]), [int(c) for c in mods.split(",")]
        )
    raise UnsupportedKind(spec)
