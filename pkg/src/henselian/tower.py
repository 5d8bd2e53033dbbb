"""Henselization towers: explicit chains of one-step extensions.

A tower over LocalizedIntegers(p) adjoins, one step at a time, either the
Hensel root of a monic polynomial (linear coefficient a unit, constant
term in the maximal ideal) or a generator of a residue-field extension.
Elements are fractions r/s of chain elements whose denominator is a unit
at the distinguished point; equality is decided by a saturated-kernel
computation over the base, validated against evaluation into truncated
rings.

Internally each adjoined generator is the denominator-cleared scale q*x
of the requested root x, so every step relation is monic with
denominator-free chain coefficients; the returned root is the fraction
gen/q.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from . import linalg
from .chains import ExtensionChain
from .errors import (
    DegreeCapExceeded,
    MixedRings,
    NoCompatibleRoot,
    NotInvertible,
    NotMonic,
    NotResiduallyIrreducible,
    PreconditionViolated,
    UnsupportedBase,
    UnsupportedKind,
)
from .poly import Poly, field_factor, irreducible_poly
from .rings import (
    RADICAL,
    UNIT,
    FiniteField,
    LocalizedIntegers,
    PrimeField,
    Ring,
    RingElement,
)

HENSEL_ROOT = "hensel-root"
RESIDUE_EXTENSION = "residue-extension"

STEP_DEGREE_PRODUCT_CAP = 64


class TowerStep:
    """One adjunction record: its kind, the cleared monic relation for the
    scaled generator (non-leading chain coefficients at adjoin time), the
    clearing scale q, and the source polynomial for provenance."""

    __slots__ = ("kind", "relation", "scale", "source")

    def __init__(self, kind, relation, scale, source):
        self.kind = kind
        self.relation = relation
        self.scale = scale
        self.source = source

    def __repr__(self):
        return f"TowerStep({self.kind}, degree {len(self.relation)})"


class TowerElement(RingElement):
    """Fraction num/den of chain data; den has unit residue."""

    __slots__ = ()

    def __eq__(self, other):
        if isinstance(other, (RingElement, int, Fraction)):
            if isinstance(other, RingElement) and other.ring != self.ring:
                return NotImplemented
            return self.ring.eq_elements(self, self._coerce(other))
        return NotImplemented

    def __hash__(self):
        return hash(id(self.ring))

    def __bool__(self):
        return not self.ring.element_is_zero(self)


class TowerRing(Ring):
    """A Henselization tower over Z localized at p."""

    is_local = True
    is_residually_discrete = True

    def __init__(self, base):
        if not isinstance(base, LocalizedIntegers):
            raise UnsupportedBase(
                "towers are shipped over LocalizedIntegers(p) only"
            )
        self.base = base
        self.p = base.p
        self.chain = ExtensionChain(base)
        self.steps = []
        self._rf = [PrimeField(base.p)]
        self._basis_cache = None

    @classmethod
    def _from_parts(cls, base, chain, steps, rf):
        t = cls.__new__(cls)
        t.base = base
        t.p = base.p
        t.chain = chain
        t.steps = steps
        t._rf = rf
        t._basis_cache = None
        return t

    @property
    def rank(self):
        return self.chain.rank

    @property
    def levels(self):
        return len(self.steps)

    # -- element plumbing ----------------------------------------------------

    def element(self, payload):
        if isinstance(payload, TowerElement):
            if payload.ring == self:
                return payload
            return self.from_base(payload)
        if isinstance(payload, RingElement):
            if payload.ring != self.base:
                raise MixedRings(f"{payload.ring} vs {self}")
            return self._make(
                self.chain.scalar_data(payload), self._one_data()
            )
        return self._make(
            self.chain.scalar_data(self.base.element(payload)),
            self._one_data(),
        )

    def _one_data(self):
        return self.chain.scalar_data(self.base.one)

    def _make(self, num, den):
        """Normalize: a scalar-unit denominator is folded into the numerator."""
        flat_den = self.chain.flatten(den)
        if all(not c for c in flat_den[1:]):
            c = flat_den[0]
            if c != self.base.one:
                inv = self.base.element(1 / c.payload)
                num = self.chain.map_base(num, lambda x: x * inv)
            den = self._one_data()
        return TowerElement(self, (num, den))

    def from_base(self, v):
        """Embed a base element or an element of a prefix tower."""
        if isinstance(v, TowerElement):
            other = v.ring
            if (
                other.base != self.base
                or other.chain.degrees != self.chain.degrees[: other.levels]
            ):
                raise MixedRings("not a prefix tower")
            num, den = v.payload
            for lvl in range(other.levels, self.levels):
                num = self.chain.lift_data(num, lvl)
                den = self.chain.lift_data(den, lvl)
            return TowerElement(self, (num, den))
        if isinstance(v, RingElement) and v.ring == self.base:
            return self.element(v)
        return self.element(v)

    # -- arithmetic ----------------------------------------------------------

    def add(self, x, y):
        (an, ad), (bn, bd) = x.payload, y.payload
        lv = self.chain.levels
        if self.chain._is_zero(
            self.chain._sub(ad, bd, lv), lv
        ):
            return self._make(self.chain._add(an, bn, lv), ad)
        num = self.chain._add(
            self.chain._mul(an, bd, lv), self.chain._mul(bn, ad, lv), lv
        )
        return self._make(num, self.chain._mul(ad, bd, lv))

    def mul(self, x, y):
        (an, ad), (bn, bd) = x.payload, y.payload
        lv = self.chain.levels
        return self._make(
            self.chain._mul(an, bn, lv), self.chain._mul(ad, bd, lv)
        )

    def neg(self, x):
        num, den = x.payload
        return TowerElement(
            self, (self.chain._neg(num, self.chain.levels), den)
        )

    def eq_elements(self, x, y):
        return self.element_is_zero(x - y if x is not y else self.zero)

    def element_is_zero(self, x):
        num, _ = x.payload
        return self._data_is_zero(num)

    # -- the equality decision -----------------------------------------------

    def _basis_data(self):
        if self._basis_cache is None:
            n = self.rank
            out = []
            for i in range(n):
                flat = [self.base.zero] * n
                flat[i] = self.base.one
                out.append(self.chain.unflatten(flat))
            self._basis_cache = out
        return self._basis_cache

    def _data_is_zero(self, data):
        """True iff data maps to 0 in the localization at the distinguished
        point: either the normal form is 0, or some annihilator of it has
        unit residue."""
        lv = self.chain.levels
        flat = self.chain.flatten(data)
        if all(not c for c in flat):
            return True
        cols = [
            self.chain.flatten(self.chain._mul(data, b, lv))
            for b in self._basis_data()
        ]
        n = self.rank
        matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
        kernel = linalg.kernel_saturated_dvr(matrix, self.base)
        for vec in kernel:
            w = self.chain.unflatten(list(vec))
            if self._residue_data(w, lv):
                return True
        return False

    # -- residue field -------------------------------------------------------

    @property
    def residue_field(self):
        return self._rf[-1]

    def _embed_rf(self, a, frm, to):
        """Embed an element of _rf[frm] into _rf[to] (fields grow only at
        residue-extension steps; each extension embeds its base as the
        constant coordinate)."""
        for lvl in range(frm, to):
            if self._rf[lvl + 1] != self._rf[lvl]:
                a = self._rf[lvl + 1].element([a])
        return a

    def _residue_data(self, data, level):
        """Value of chain data at the distinguished point, in _rf[level]."""
        if level == 0:
            return self._rf[0].element(data.payload)
        sub = [self._residue_data(x, level - 1) for x in data]
        step = self.steps[level - 1]
        if (
            step.kind == HENSEL_ROOT
            or self._rf[level] == self._rf[level - 1]
        ):
            # generator residue 0 (Hensel root) or trivial extension
            return self._embed_rf(sub[0], level - 1, level)
        return self._rf[level].element(sub)

    def residue(self, x):
        num, den = x.payload
        lv = self.chain.levels
        k = self.residue_field
        rn = self._embed_rf(self._residue_data(num, lv), lv, lv)
        rd = self._residue_data(den, lv)
        return rn * k.inv(rd)

    def lift_residue(self, a):
        return self._make(
            self._lift_residue_data(a, self.chain.levels), self._one_data()
        )

    def _lift_residue_data(self, a, level):
        if level == 0:
            return self.base.element(a.payload)
        step_deg = self.chain.degrees[level - 1]
        if self._rf[level] != self._rf[level - 1]:
            # extension step: coordinates over the previous field
            data = [
                self._lift_residue_data(c, level - 1) for c in a.payload
            ]
            data += [
                self.chain.zero_data(level - 1)
                for _ in range(step_deg - len(data))
            ]
            return data
        data = self.chain.zero_data(level)
        data[0] = self._lift_residue_data(a, level - 1)
        return data

    def local_split(self, x):
        r = self.residue(x)
        if r:
            num, den = x.payload
            inv = self._make(den, num)
            return (UNIT, inv)
        return (RADICAL, None)

    # -- adjunction ----------------------------------------------------------

    def _clear_denominators(self, f):
        """Chain relation data for the scaled generator y = q*x, where x is
        a root of monic f with tower-element coefficients: the relation is
        Y^d + sum_i q^(d-1-i) m_i Y^i with c_i = m_i / q."""
        lv = self.chain.levels
        d = f.degree
        coeffs = [self.element(f.coeff(i)) for i in range(d)]
        q = self._one_data()
        for c in coeffs:
            q = self.chain._mul(q, c.payload[1], lv)
        rel = []
        for i, c in enumerate(coeffs):
            m = c.payload[0]
            for j, cj in enumerate(coeffs):
                if j != i:
                    m = self.chain._mul(m, cj.payload[1], lv)
            for _ in range(d - 1 - i):
                m = self.chain._mul(m, q, lv)
            rel.append(m)
        return rel, q

    def _adjoined(self, rel, q, kind, source, new_field):
        new_chain = self.chain.adjoin(rel)
        if new_chain.rank > STEP_DEGREE_PRODUCT_CAP:
            raise DegreeCapExceeded(
                f"step-degree product {new_chain.rank} exceeds "
                f"{STEP_DEGREE_PRODUCT_CAP}"
            )
        step = TowerStep(kind, rel, q, source)
        new = TowerRing._from_parts(
            self.base,
            new_chain,
            self.steps + [step],
            self._rf + [new_field],
        )
        gen = new_chain.gen(new_chain.levels - 1).data
        q_new = new_chain.lift_data(q, new_chain.levels - 1)
        x = new._make(gen, q_new)
        return new, x

    def adjoin_hensel_root(self, f):
        """New tower with an exact root of monic f (a1 unit, a0 in m)."""
        if not f.is_monic:
            raise NotMonic(repr(f))
        a1 = self.element(f.coeff(1))
        a0 = self.element(f.coeff(0))
        if self.local_split(a1)[0] != UNIT:
            raise PreconditionViolated("linear coefficient is not a unit")
        if self.local_split(a0)[0] != RADICAL:
            raise PreconditionViolated("constant term is not in the radical")
        rel, q = self._clear_denominators(f)
        new, x = self._adjoined(
            rel, q, HENSEL_ROOT, _poly_to_json(f), self._rf[-1]
        )
        fx = Poly(new, [new.from_base(self.element(c)) for c in f.coeffs])(x)
        assert not fx, "adjoined generator does not satisfy its relation"
        assert not new.residue(x), "Hensel root must lie in the radical"
        return new, x

    def adjoin_residue_extension(self, f):
        """New tower whose residue field is extended by the residually
        irreducible monic f; returns the tower and the adjoined class."""
        if not f.is_monic:
            raise NotMonic(repr(f))
        rel, q = self._clear_denominators(f)
        lv = self.chain.levels
        k = self.residue_field
        relbar = [self._residue_data(c, lv) for c in rel] + [k.one]
        fbar = Poly(k, relbar)
        factors = field_factor(fbar)
        if len(factors) != 1 or factors[0][1] != 1:
            raise NotResiduallyIrreducible(repr(f))
        if fbar.degree == 1:
            new_field = k
        else:
            new_field = FiniteField(k, list(fbar.coeffs))
        new, u = self._adjoined(
            rel, q, RESIDUE_EXTENSION, _poly_to_json(f), new_field
        )
        fu = Poly(new, [new.from_base(self.element(c)) for c in f.coeffs])(u)
        assert not fu, "adjoined generator does not satisfy its relation"
        return new, u

    def separable_closure_step(self, d, seed=0):
        """Adjoin the lex-first irreducible degree-d residue extension."""
        modbar = irreducible_poly(self.residue_field, d, seed=seed)
        f = Poly(
            self, [self.lift_residue(c) for c in modbar.coeffs]
        )
        return self.adjoin_residue_extension(f)

    # -- evaluation into Henselian oracles -----------------------------------

    def _generator_values(self, target, seed=0):
        from .hensel import hensel_root_monic, lift_simple_root

        if getattr(target, "p", None) != self.p:
            raise UnsupportedBase(
                f"target {target!r} is not an oracle over p = {self.p}"
            )
        vals = []
        for level, step in enumerate(self.steps):
            d = len(step.relation)
            coeffs = [
                self._eval_data(c, level, target, vals)
                for c in step.relation
            ] + [target.one]
            poly = Poly(target, coeffs)
            if d == 1:
                vals.append(-poly.coeff(0))
                continue
            if step.kind == HENSEL_ROOT:
                vals.append(hensel_root_monic(target, poly))
                continue
            pbar = poly.residue()
            root = None
            for a in target.residue_field.elements():
                if not pbar(a) and pbar.derivative()(a):
                    root = a
                    break
            if root is None:
                raise NoCompatibleRoot(
                    f"{target!r} has no residual root for a "
                    f"residue-extension step"
                )
            vals.append(lift_simple_root(target, poly, root))
        return vals

    def _eval_data(self, data, level, target, vals):
        if level == 0:
            return _base_into(target, data)
        acc = None
        for c in reversed(data):
            v = self._eval_data(c, level - 1, target, vals)
            acc = v if acc is None else acc * vals[level - 1] + v
        return acc

    def evaluate_into(self, t, target, seed=0):
        """Image of t under the unique local morphism into target sending
        each Hensel-step generator to the target's own Hensel root."""
        t = self.element(t)
        vals = self._generator_values(target, seed=seed)
        num, den = t.payload
        lv = self.chain.levels
        a = self._eval_data(num, lv, target, vals)
        b = self._eval_data(den, lv, target, vals)
        return a * target.inv(b)

    # -- Ring interface odds and ends ----------------------------------------

    def random_element(self, rng):
        flat = [self.base.random_element(rng) for _ in range(self.rank)]
        return self._make(self.chain.unflatten(flat), self._one_data())

    def format_element(self, x):
        num, den = x.payload
        ns = self.chain.flatten(num)
        ds = self.chain.flatten(den)
        return f"Tower({[str(c.payload) for c in ns]} / {[str(c.payload) for c in ds]})"

    def to_json(self, x):
        num, den = x.payload
        return {
            "num": _data_to_json(num, self.chain.levels),
            "den": _data_to_json(den, self.chain.levels),
        }

    def from_json(self, data):
        num = _data_from_json(self.base, data["num"], self.chain, self.chain.levels)
        den = _data_from_json(self.base, data["den"], self.chain, self.chain.levels)
        out = self._make(num, den)
        if not self.residue(self._make(den, self._one_data())):
            raise NotInvertible("denominator is not a unit at the point")
        return out

    def spec_string(self):
        return f"Tower:Zloc:{self.p}:{len(self.steps)}-steps"

    def __eq__(self, other):
        return (
            isinstance(other, TowerRing)
            and other.base == self.base
            and other.chain.degrees == self.chain.degrees
            and [s.kind for s in other.steps] == [s.kind for s in self.steps]
            and [s.relation for s in other.steps]
            == [s.relation for s in self.steps]
        )

    def __hash__(self):
        return hash(("Tower", self.base, tuple(self.chain.degrees)))

    def __repr__(self):
        return f"TowerRing(Zloc:{self.p}, {len(self.steps)} steps)"


# ---------------------------------------------------------------------------
# Module-level operation names matching the published interface


def tower_local_split(t):
    return t.ring.local_split(t)


def tower_eq(s, t):
    if s.ring != t.ring:
        raise MixedRings("tower elements from different towers")
    (sn, sd), (tn, td) = s.payload, t.payload
    chain = s.ring.chain
    lv = chain.levels
    w = chain._sub(
        chain._mul(sn, td, lv), chain._mul(tn, sd, lv), lv
    )
    return s.ring._data_is_zero(w)


def tower_residue(t):
    return t.ring.residue(t)


def evaluate_into(t, target, seed=0):
    return t.ring.evaluate_into(t, target, seed=seed)


def adjoin_hensel_root(ring, f):
    if isinstance(ring, LocalizedIntegers):
        ring = TowerRing(ring)
    return ring.adjoin_hensel_root(f)


def adjoin_residue_extension(ring, f):
    if isinstance(ring, LocalizedIntegers):
        ring = TowerRing(ring)
    return ring.adjoin_residue_extension(f)


def separable_closure_step(field, d, seed=0):
    """Monic irreducible of degree d over a finite field, lex-first."""
    return irreducible_poly(field, d, seed=seed)


# ---------------------------------------------------------------------------
# Serialization


def _base_into(target, c):
    """Map a LocalizedIntegers element into a Henselian oracle ring."""
    q = c.payload
    if q.denominator == 1:
        return target.element(q.numerator)
    try:
        return target.element(q)
    except (TypeError, ValueError):
        return target.element(q.numerator) * target.inv(
            target.element(q.denominator)
        )


def _poly_to_json(f):
    out = []
    for c in f.coeffs:
        if isinstance(c, TowerElement):
            out.append(c.ring.to_json(c))
        elif isinstance(c, RingElement):
            out.append(c.ring.to_json(c))
        else:
            out.append(c)
    return out


def _data_to_json(data, level):
    if level == 0:
        q = data.payload
        if q.denominator == 1:
            return int(q)
        return [q.numerator, q.denominator]
    return [_data_to_json(sub, level - 1) for sub in data]


def _data_from_json(base, data, chain, level):
    if level == 0:
        if isinstance(data, list):
            return base.element(Fraction(data[0], data[1]))
        return base.element(data)
    if not isinstance(data, list):
        # scalar shorthand: constant coordinate, zeros elsewhere
        out = [
            _data_from_json(base, 0, chain, level - 1)
            for _ in range(chain.degrees[level - 1])
        ]
        out[0] = _data_from_json(base, data, chain, level - 1)
        return out
    return [
        _data_from_json(base, sub, chain, level - 1) for sub in data
    ]


def tower_to_json(tower):
    return {
        "base": tower.base.spec_string(),
        "steps": [
            {
                "kind": step.kind,
                "relation": [
                    _data_to_json(c, lvl) for c in step.relation
                ],
                "scale": _data_to_json(step.scale, lvl),
                "source": step.source,
            }
            for lvl, step in enumerate(tower.steps)
        ],
    }


def tower_from_json(data):
    spec = data["base"]
    if not spec.startswith("Zloc:"):
        raise UnsupportedBase(spec)
    tower = TowerRing(LocalizedIntegers(int(spec.split(":")[1])))
    for lvl, rec in enumerate(data["steps"]):
        rel = [
            _data_from_json(tower.base, c, tower.chain, lvl)
            for c in rec["relation"]
        ]
        q = _data_from_json(tower.base, rec["scale"], tower.chain, lvl)
        if rec["kind"] == HENSEL_ROOT:
            new_field = tower._rf[-1]
        else:
            k = tower.residue_field
            relbar = [
                tower._residue_data(c, lvl) for c in rel
            ] + [k.one]
            fbar = Poly(k, relbar)
            new_field = (
                k if fbar.degree == 1 else FiniteField(k, list(fbar.coeffs))
            )
        tower, _ = tower._adjoined(
            rel, q, rec["kind"], rec.get("source"), new_field
        )
    return tower
