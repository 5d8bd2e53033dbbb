"""Hensel lifting: roots, idempotents, and factorizations.

Operations take a HenselCapability wrapping either a truncated ring
(Newton iteration at fixed precision) or a Henselization tower (roots by
adjoining a step).  Every lifted object is re-verified exactly before it
is returned.
"""

from __future__ import annotations

from .algebra import (
    AlgElement,
    FiniteAlgebra,
    Idempotent,
    char_poly,
    decompose_local,
    fact_to_idem,
    idem_to_fact,
    invert_element,
    is_local_algebra,
    solve_in_column_span,
    subalgebra_from_idempotent,
)
from .errors import (
    InternalDescentFailure,
    NotAFactorizationResidually,
    NotARoot,
    NotGaloisResidually,
    NotIdempotentResidually,
    NotMonic,
    NotResiduallyCoprime,
    NotSimple,
    PreconditionViolated,
    UnsupportedBase,
    UnsupportedKind,
)
from .poly import (
    Poly,
    divmod_monic,
    ext_gcd_poly,
    gcd_monic,
    irreducible_poly,
    x_poly,
)
from .rings import (
    RADICAL,
    UNIT,
    FiniteField,
    ModularIntegers,
    PrimeField,
    TruncatedPadics,
    TruncatedSeries,
    UnramifiedPadics,
)
from .uda import (
    Permutation,
    UdaAlgebra,
    galois_from_idempotent,
    reduce_invariant,
    sn_act,
)


class HenselCapability:
    """A ring together with the way Hensel roots are produced on it."""

    __slots__ = ("ring", "root_method")

    def __init__(self, ring):
        if getattr(ring, "is_henselian_oracle", False):
            self.root_method = "newton-at-precision"
        elif hasattr(ring, "adjoin_hensel_root"):
            self.root_method = "adjoin-step"
        else:
            raise UnsupportedKind(
                f"{ring!r} is neither a Henselian oracle nor a tower"
            )
        self.ring = ring

    def __repr__(self):
        return f"HenselCapability({self.ring!r}, {self.root_method})"


def _cap(h):
    return h if isinstance(h, HenselCapability) else HenselCapability(h)


def _check_defhensel(ring, f):
    """a1 unit, a0 in the radical, via local_split."""
    a0, a1 = f.coeff(0), f.coeff(1)
    branch1, _ = ring.local_split(a1)
    if branch1 != UNIT:
        raise PreconditionViolated("linear coefficient is not a unit")
    branch0, _ = ring.local_split(a0)
    if branch0 != RADICAL:
        raise PreconditionViolated("constant term is not in the radical")


def hensel_root_monic(h, f):
    """The unique root in the radical of a monic f with a1 a unit, a0 in m."""
    h = _cap(h)
    ring = h.ring
    if not f.is_monic:
        raise NotMonic(repr(f))
    _check_defhensel(ring, f)
    if h.root_method == "adjoin-step":
        _, x = ring.adjoin_hensel_root(f)
        return x
    # Newton at fixed precision, quadratic convergence from 0
    x = ring.zero
    fp = f.derivative()
    for _ in range(ring.precision.bit_length() + 2):
        fx = f(x)
        if not fx:
            break
        x = x - fx * ring.inv(fp(x))
    assert not f(x), "Newton iteration did not reach a root at precision"
    assert ring.local_split(x)[0] == RADICAL, "root escaped the radical"
    return x


class NonmonicTransform:
    """Monic replacement g for a non-monic f, with closed-form recovery.

    a0 * g(X - 1) = X^n * f(-a0 * a1^(-1) / X), so a root alpha of g in
    the radical maps back to beta = -a0 * a1^(-1) / (alpha + 1).
    """

    __slots__ = ("f", "g", "a0", "inv_a1", "ring")

    def __init__(self, f, g, a0, inv_a1, ring):
        self.f = f
        self.g = g
        self.a0 = a0
        self.inv_a1 = inv_a1
        self.ring = ring

    def recover(self, alpha):
        unit = alpha + self.ring.one
        return -(self.a0 * self.inv_a1) * self.ring.inv(unit)


def transform_nonmonic(f):
    """Monic g whose radical root recovers the radical root of f."""
    ring = f.ring
    _check_defhensel(ring, f)
    n = f.degree
    a0 = f.coeff(0)
    inv_a1 = ring.inv(f.coeff(1))
    if n < 1:
        raise PreconditionViolated("degree must be >= 1")
    # h(Y) = Y^n - Y^(n-1) + sum_{j>=2} (-1)^j a_j a0^(j-1) a1^(-j) Y^(n-j)
    coeffs = [ring.zero] * (n + 1)
    coeffs[n] = ring.one
    coeffs[n - 1] = coeffs[n - 1] - ring.one
    for j in range(2, n + 1):
        aj = f.coeff(j)
        if aj:
            sign = ring.one if j % 2 == 0 else -ring.one
            term = sign * aj * a0 ** (j - 1) * inv_a1**j
            coeffs[n - j] = coeffs[n - j] + term
    h_poly = Poly(ring, coeffs)
    g = h_poly.shift(ring.one)
    return NonmonicTransform(f, g, a0, inv_a1, ring)


def hensel_root_nonmonic(h, f):
    """Root in the radical of f with a1 a unit, a0 in m (f not necessarily
    monic); via the monic transformation."""
    h = _cap(h)
    ring = h.ring
    tr = transform_nonmonic(f)
    alpha = hensel_root_monic(h, tr.g)
    if h.root_method == "adjoin-step":
        # alpha lives in an extended tower; recover there
        ext_ring = alpha.ring
        beta = NonmonicTransform(
            tr.f, tr.g, ext_ring.from_base(tr.a0), ext_ring.from_base(tr.inv_a1), ext_ring
        ).recover(alpha)
        assert not _eval_in(f, beta, ext_ring), "recovered value is not a root"
        return beta
    beta = tr.recover(alpha)
    assert not f(beta), "recovered value is not a root"
    assert ring.local_split(beta)[0] == RADICAL
    return beta


def _eval_in(f, x, target_ring):
    acc = target_ring.from_base(f.coeffs[-1]) if f.coeffs else None
    if acc is None:
        return target_ring.zero
    for c in reversed(f.coeffs[:-1]):
        acc = acc * x + target_ring.from_base(c)
    return acc


def lift_simple_root(h, f, a):
    """The unique root of f lifting a simple residual root a."""
    h = _cap(h)
    ring = h.ring
    k = ring.residue_field
    fbar = f.residue()
    if fbar(a):
        raise NotARoot(f"{a!r} is not a residual root")
    if not fbar.derivative()(a):
        raise NotSimple(f"{a!r} is a multiple residual root")
    gamma = ring.lift_residue(a)
    shifted = f.shift(gamma)
    beta = hensel_root_nonmonic(h, shifted)
    if h.root_method == "adjoin-step":
        alpha = beta + beta.ring.from_base(gamma)
        assert not _eval_in(f, alpha, beta.ring), "lifted value is not a root"
        return alpha
    alpha = beta + gamma
    assert not f(alpha) and ring.residue(alpha) == a
    return alpha


# ---------------------------------------------------------------------------
# Idempotent lifting in universal decomposition algebras


def _residual_uda(d):
    ring = d.base
    k = ring.residue_field
    fbar = d.f.residue()
    return UdaAlgebra(k, fbar, cap=max(5, d.n))


def _residue_uda_element(d, dbar, r):
    ring = d.base
    return dbar.element([ring.residue(c) for c in r.coords])


def lift_galois_idempotent(h, d, r):
    """Lift a residual Galois idempotent to an exact one with its orbit.

    Builds the stabilizer product c1, its conjugates c_i, the invariant
    polynomial p(T) = prod (T - c_i) whose residue is T^h - T^(h-1),
    lifts the simple root 1 of p, and forms the Lagrange idempotents
    e_i = p'(alpha)^(-1) * prod_{j != i} (alpha - c_j).
    """
    h = _cap(h)
    ring = h.ring
    dbar = _residual_uda(d)
    rbar = _residue_uda_element(d, dbar, r)
    if not rbar or rbar * rbar != rbar:
        raise NotGaloisResidually("residue is not a nonzero idempotent")
    perms = Permutation.all(d.n)
    orbit_bar = []
    reps = []
    for sigma in perms:
        img = sn_act(sigma, rbar)
        if img not in orbit_bar:
            orbit_bar.append(img)
            reps.append(sigma)
    total = dbar.zero
    for u in orbit_bar:
        total = total + u
    if total != dbar.one:
        raise NotGaloisResidually("orbit does not sum to 1")
    for i in range(len(orbit_bar)):
        for j in range(i + 1, len(orbit_bar)):
            if orbit_bar[i] * orbit_bar[j]:
                raise NotGaloisResidually("orbit is not orthogonal")
    stab = [s for s in perms if sn_act(s, rbar) == rbar]
    c1 = d.one
    for sigma in stab:
        c1 = c1 * sn_act(sigma, r)
    conjugates = [sn_act(sigma, c1) for sigma in reps]
    size = len(conjugates)
    # p(T) = prod (T - c_i), coefficients are invariant and descend to A
    pc = [d.one]
    for c in conjugates:
        new = [d.zero] * (len(pc) + 1)
        for i, coeff in enumerate(pc):
            new[i + 1] = new[i + 1] + coeff
            new[i] = new[i] - coeff * c
        pc = new
    p = Poly(ring, [reduce_invariant(c) for c in pc])
    alpha = lift_simple_root(h, p, ring.residue_field.one)
    lam = ring.inv(p.derivative()(alpha))
    orbit = []
    for i in range(size):
        prod = d.scalar(lam)
        for j in range(size):
            if j != i:
                prod = prod * (d.scalar(alpha) - conjugates[j])
        orbit.append(prod)
    e1 = orbit[0]
    assert e1 * e1 == e1, "lifted element is not idempotent"
    total = d.zero
    for u in orbit:
        total = total + u
    assert total == d.one, "lifted orbit does not sum to 1"
    for i in range(size):
        for j in range(i + 1, size):
            assert not (orbit[i] * orbit[j]), "lifted orbit not orthogonal"
    for u, ubar in zip(orbit, orbit_bar):
        assert _residue_uda_element(d, dbar, u) == ubar, (
            "lifted orbit residues do not match"
        )
    return Idempotent(e1), orbit


def lift_idempotent_uda(h, d, r):
    """Lift any residual idempotent of D/mD to an exact idempotent of D."""
    h = _cap(h)
    ring = h.ring
    dbar = _residual_uda(d)
    rbar = _residue_uda_element(d, dbar, r)
    if rbar * rbar != rbar:
        raise NotIdempotentResidually(repr(r))
    if not rbar:
        return Idempotent(d.zero)
    if rbar == dbar.one:
        return Idempotent(d.one)
    _, orbit_bar, subset = galois_from_idempotent(rbar)
    hbar = orbit_bar[0]
    r_h = d.element([ring.lift_residue(c) for c in hbar.coords])
    _, orbit = lift_galois_idempotent(h, d, r_h)
    # match lifted orbit elements to the residual orbit by residue
    e = d.zero
    for idx in subset:
        found = None
        for u in orbit:
            if _residue_uda_element(d, dbar, u) == orbit_bar[idx]:
                found = u
                break
        assert found is not None, "residual orbit element has no lift"
        e = e + found
    assert e * e == e
    assert _residue_uda_element(d, dbar, e) == rbar
    return Idempotent(e)


# ---------------------------------------------------------------------------
# Factorization lifting


def _check_monic_fact_preconditions(ring, f, g0, h0):
    if not (f.is_monic and g0.is_monic and h0.is_monic):
        raise NotMonic("monic factorization lift needs monic inputs")
    k = ring.residue_field
    fbar, gbar, hbar = f.residue(), g0.residue(), h0.residue()
    if gbar * hbar != fbar:
        raise NotAFactorizationResidually(
            f"{g0!r} * {h0!r} != {f!r} residually"
        )
    if gcd_monic(gbar, hbar).degree != 0:
        raise NotResiduallyCoprime(f"gcd({g0!r}, {h0!r}) != 1 residually")
    return fbar, gbar, hbar


def _lift_poly(ring, pbar):
    return Poly(ring, [ring.lift_residue(c) for c in pbar.coeffs])


def lift_monic_factorization_quadratic(h, f, g0, h0):
    """Quadratic Hensel iteration at fixed precision (oracle rings only)."""
    h = _cap(h)
    ring = h.ring
    assert h.root_method == "newton-at-precision"
    fbar, gbar, hbar = _check_monic_fact_preconditions(ring, f, g0, h0)
    k = ring.residue_field
    dcheck, ubar, vbar = ext_gcd_poly(gbar, hbar)
    assert dcheck.degree == 0 and dcheck.coeff(0) == k.one
    g = _lift_poly(ring, gbar)
    hh = _lift_poly(ring, hbar)
    u = _lift_poly(ring, ubar)
    v = _lift_poly(ring, vbar)
    one = Poly(ring, [1])
    for _ in range(ring.precision.bit_length() + 2):
        e = f - g * hh
        if e.is_zero:
            break
        t, dg = divmod_monic(v * e, g)
        dh = u * e + hh * t
        g = g + dg
        hh = hh + dh
        r = u * g + v * hh - one
        u = u - u * r
        v = v - v * r
    assert f == g * hh, "quadratic lifting did not converge at precision"
    assert g.residue() == gbar and hh.residue() == hbar
    return g, hh


def lift_monic_factorization_uda(h, f, g0, h0, cap=5):
    """Monic factorization lift through the universal decomposition algebra.

    The residual idempotent of k[X]/(fbar) attached to the factorization
    is lifted inside D_A(f) and descended to B = A[X]/(f), then converted
    back into a factorization.
    """
    h = _cap(h)
    ring = h.ring
    fbar, gbar, hbar = _check_monic_fact_preconditions(ring, f, g0, h0)
    k = ring.residue_field
    idem_bar, balg_bar = fact_to_idem(fbar, gbar, hbar)
    d = UdaAlgebra(ring, f, cap=max(cap, f.degree))
    dbar = _residual_uda(d)
    # embed ebar(x) into D via x -> x_1 (1-based root numbering)
    ebar_coords = idem_bar.element.coords
    x1bar = dbar.root(1)
    ebar_d = dbar.zero
    power = dbar.one
    for c in ebar_coords:
        ebar_d = ebar_d + power * c
        power = power * x1bar
    r = d.element([ring.lift_residue(c) for c in ebar_d.coords])
    e_d = lift_idempotent_uda(h, d, r)
    # descend: solve e = sum b_j x1^j with j < deg f
    n = f.degree
    x1 = d.root(1)
    cols = []
    power = d.one
    for _ in range(n):
        cols.append(list(power.coords))
        power = power * x1
    matrix = [[cols[j][i] for j in range(n)] for i in range(d.rank)]
    sol = solve_in_column_span(matrix, list(e_d.element.coords), ring)
    if sol is None:
        raise InternalDescentFailure(
            "lifted idempotent is not in the image of A[X]/(f)"
        )
    balg = FiniteAlgebra.quotient_ring(ring, f)
    e_b = balg.element(sol)
    assert e_b * e_b == e_b
    g, hh = idem_to_fact(f, e_b)
    assert g.residue() == gbar and hh.residue() == hbar, (
        "descended factorization has wrong residues"
    )
    return g, hh


def lift_monic_factorization(h, f, g0, h0, route="auto", cap=5):
    """f = g*h with residues g0bar, h0bar; unique by residual coprimality."""
    h = _cap(h)
    if route == "quadratic":
        return lift_monic_factorization_quadratic(h, f, g0, h0)
    if route == "uda":
        return lift_monic_factorization_uda(h, f, g0, h0, cap=cap)
    if f.degree <= cap:
        return lift_monic_factorization_uda(h, f, g0, h0, cap=cap)
    if h.root_method != "newton-at-precision":
        raise UnsupportedBase(
            f"degree {f.degree} exceeds the decomposition-algebra cap"
        )
    return lift_monic_factorization_quadratic(h, f, g0, h0)


# ---------------------------------------------------------------------------
# Idempotents of arbitrary finite algebras (Theorem on idempotent lifting)


def lift_idempotent_finite_algebra(h, b, e):
    """Exact idempotent e' with e' - e in m*B, for e residually idempotent.

    Route: factor the characteristic polynomial of e as a*b with
    a_bar = T^l, b_bar = (T-1)^m, lift the factorization, then
    e' = (a(e)+b(e))^(-1) * a(e) is exactly idempotent by Cayley-Hamilton.
    """
    h = _cap(h)
    ring = h.ring
    ebar = b.residue_element(e)
    if ebar * ebar != ebar:
        raise NotIdempotentResidually(repr(e))
    chi = char_poly(e)
    chibar = chi.residue()
    k = ring.residue_field
    # chibar = T^l * (T-1)^m since ebar is an idempotent
    ell = 0
    rest = chibar
    t = x_poly(k)
    while rest.degree > 0 and not rest.coeff(0):
        q, r = divmod_monic(rest, t)
        rest = q
        ell += 1
    m = rest.degree
    tm1 = Poly(k, [-1, 1])
    check = rest
    for _ in range(m):
        q, r = divmod_monic(check, tm1)
        assert r.is_zero, "char poly of a residual idempotent must be T^l(T-1)^m"
        check = q
    if ell == 0:
        a_poly = Poly(ring, [1])
        b_poly = chi
    elif m == 0:
        a_poly = chi
        b_poly = Poly(ring, [1])
    else:
        abar = Poly(k, [k.zero] * ell + [k.one])
        bbar = tm1**m
        a_poly, b_poly = lift_monic_factorization(
            h, chi, _lift_poly(ring, abar), _lift_poly(ring, bbar),
            route="quadratic" if h.root_method == "newton-at-precision" else "auto",
        )
    ae = a_poly(e)
    be = b_poly(e)
    if not isinstance(ae, AlgElement):
        ae = b.scalar(ae)
    if not isinstance(be, AlgElement):
        be = b.scalar(be)
    nu = invert_element(ae + be)
    e_prime = nu * ae
    assert e_prime * e_prime == e_prime, "lifted element is not idempotent"
    assert not b.residue_element(e_prime - e), "lift moved outside m*B"
    return Idempotent(e_prime)


def decompose_finite_algebra(h, b):
    """Split a finite algebra over a Henselian base into residually local
    factors, by lifting the residual basic idempotent system exactly."""
    h = _cap(h)
    ring = h.ring
    bbar = b.residual_algebra()
    residual = decompose_local(bbar)
    if len(residual) == 1:
        return [(Idempotent(b.one), b)]
    lifted = []
    used = b.zero
    for i, (ebar, _) in enumerate(residual):
        if i == len(residual) - 1:
            cand = b.one - used
            assert cand * cand == cand
            e = Idempotent(cand)
        else:
            raw = b.element(
                [ring.lift_residue(c) for c in ebar.element.coords]
            )
            e0 = lift_idempotent_finite_algebra(h, b, raw).element
            # orthogonalize against the already-lifted idempotents
            cand = e0 * (b.one - used)
            assert cand * cand == cand
            e = Idempotent(cand)
        assert not (cand * used), "orthogonality failed"
        used = used + cand
        lifted.append(e)
    total = b.zero
    for e in lifted:
        total = total + e.element
    assert total == b.one
    result = []
    for e in lifted:
        factor, _ = subalgebra_from_idempotent(b, e)
        assert is_local_algebra(factor.residual_algebra()), (
            "factor is not residually local"
        )
        result.append((e, factor))
    return result


# ---------------------------------------------------------------------------
# Non-monic factorization lifting


def _extension_oracle(ring, d, seed=0):
    """A Henselian oracle extending ring with residue degree d, plus the
    coefficient embedding and a partial inverse (None when the element is
    not in the base line)."""
    if isinstance(ring, (TruncatedPadics, ModularIntegers)):
        p = ring.p
        n = ring.precision
        modbar = irreducible_poly(PrimeField(p), d, seed=seed)
        modulus = [c.payload for c in modbar.coeffs]
        ext = UnramifiedPadics(p, n, modulus)

        def embed(c):
            return ext.element([c.payload % ext.pn])

        def descend(c):
            if any(c.payload[1:]):
                return None
            return ring.element(c.payload[0])

        return ext, embed, descend
    if isinstance(ring, TruncatedSeries):
        k = ring.coef_field
        modbar = irreducible_poly(k, d, seed=seed)
        bigk = FiniteField(k, list(modbar.coeffs))
        ext = TruncatedSeries(bigk, ring.precision)

        def embed(c):
            return ext.element([bigk.element([x]) for x in c.payload])

        def descend(c):
            out = []
            for coeff in c.payload:
                if any(coeff.payload[1:]):
                    return None
                out.append(coeff.payload[0])
            return ring.element(out)

        return ext, embed, descend
    raise UnsupportedBase(
        f"no residue-field extension oracle for {ring!r}"
    )


def _nonmonic_via_reversal(h, f, gbar, hbar):
    """Branch for f(0) a unit: reverse, lift monic, reverse back."""
    ring = h.ring
    k = ring.residue_field
    n = f.degree
    f0 = f.coeff(0)
    inv_f0 = ring.inv(f0)
    big_f = Poly(ring, [inv_f0 * c for c in reversed(list(f.coeffs))])
    # residual targets: G = gbar(0)^(-1) rev(gbar), H = X^(n-k) hbar(0)^(-1) rev(hbar)
    r = gbar.degree
    kk = gbar.degree + hbar.degree
    g0c = k.inv(gbar.coeff(0))
    gtarget = Poly(k, [g0c * c for c in reversed(list(gbar.coeffs))])
    h0c = k.inv(hbar.coeff(0))
    htail = [h0c * c for c in reversed(list(hbar.coeffs))]
    htarget = Poly(k, [k.zero] * (n - kk) + htail)
    assert gtarget * htarget == big_f.residue()
    big_g, big_h = lift_monic_factorization(
        h, big_f, _lift_poly(ring, gtarget), _lift_poly(ring, htarget)
    )
    g0 = big_g.coeff(0)
    inv_g0 = ring.inv(g0)
    g = Poly(ring, [inv_g0 * c for c in reversed(list(big_g.coeffs))])
    q, rem = divmod_monic(f, g)
    assert rem.is_zero, "reversed factor does not divide f"
    return g, q


def lift_nonmonic_factorization(h, f, g0, h0, seed=0):
    """f = g*h with g monic, from a residually coprime residual split.

    Branches: (i) f(0) a unit -- reversal trick; (ii) shift by a residue
    a with fbar(a) != 0; (iii) residue field too small -- lift in one
    unramified extension and descend coordinatewise.
    """
    h = _cap(h)
    ring = h.ring
    k = ring.residue_field
    if not g0.is_monic:
        raise NotMonic("the designated monic factor must be monic")
    fbar = f.residue()
    gbar = g0.residue()
    hbar = h0.residue()
    if gbar * hbar != fbar:
        raise NotAFactorizationResidually(
            f"{g0!r} * {h0!r} != {f!r} residually"
        )
    if gcd_monic(gbar, _make_monic(hbar, k)).degree != 0:
        raise NotResiduallyCoprime(f"{g0!r}, {h0!r} share a residual factor")
    if gbar.degree == 0:
        # trivial monic factor: g = 1, h = f
        return Poly(ring, [1]), f
    if f.is_monic and f.degree == fbar.degree:
        g, hh = lift_monic_factorization(
            h, f, g0, _monic_cofactor_lift(ring, f, g0, hbar)
        )
        return g, hh
    # branch (i): constant term a unit
    if ring.local_split(f.coeff(0))[0] == UNIT:
        return _nonmonic_via_reversal(h, f, gbar, hbar)
    # branch (ii): shift search over the residue field, canonical order
    for a in _field_enumeration(k):
        if fbar(a):
            gamma = ring.lift_residue(a)
            fs = f.shift(gamma)
            gs = gbar.shift(a)
            hs = hbar.shift(a)
            g_s, h_s = _nonmonic_via_reversal(h, fs, gs, hs)
            g = g_s.shift(-gamma)
            hh = h_s.shift(-gamma)
            assert g * hh == f
            return g, hh
    # branch (iii): every residue is a root; extend the residue field once
    d = _next_prime(max(fbar.degree, 1))
    ext, embed, descend = _extension_oracle(ring, d, seed=seed)
    f_e = Poly(ext, [embed(c) for c in f.coeffs])
    g0_e = Poly(ext, [embed(c) for c in g0.coeffs])
    h0_e = Poly(ext, [embed(c) for c in h0.coeffs])
    g_e, h_e = lift_nonmonic_factorization(
        HenselCapability(ext), f_e, g0_e, h0_e, seed=seed
    )
    g_coeffs = [descend(c) for c in g_e.coeffs]
    h_coeffs = [descend(c) for c in h_e.coeffs]
    if any(c is None for c in g_coeffs + h_coeffs):
        raise InternalDescentFailure(
            "extension lift did not descend to the base line"
        )
    g = Poly(ring, g_coeffs)
    hh = Poly(ring, h_coeffs)
    assert g * hh == f
    return g, hh


def _make_monic(p, field):
    if p.is_zero or p.is_monic:
        return p
    inv = field.inv(p.coeffs[-1])
    return Poly(field, [inv * c for c in p.coeffs])


def _monic_cofactor_lift(ring, f, g0, hbar):
    """Monic lift of fbar / g0bar for the monic delegation path."""
    k = ring.residue_field
    q, r = divmod_monic(f.residue(), g0.residue())
    assert r.is_zero
    return _lift_poly(ring, q)


def _field_enumeration(k):
    return list(k.elements())


def _next_prime(n):
    from .rings import is_prime

    c = n + 1
    while not is_prime(c):
        c += 1
    return c
