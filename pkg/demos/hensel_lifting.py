"""Walkthrough: Hensel lifting of roots, factorizations, and idempotents.

Run with:  python3 demos/hensel_lifting.py
"""

from henselian import (
    FiniteAlgebra,
    HenselCapability,
    Poly,
    TruncatedPadics,
    decompose_finite_algebra,
    hensel_root_monic,
    hensel_root_nonmonic,
    lift_idempotent_finite_algebra,
    lift_monic_factorization,
    lift_nonmonic_factorization,
    lift_simple_root,
)
from henselian.rings import ModularIntegers


def main():
    t7 = TruncatedPadics(7, 3)
    cap = HenselCapability(t7)

    print("== Roots in the maximal ideal ==")
    f = Poly(t7, [-7, 1, 1])  # X^2 + X - 7
    alpha = hensel_root_monic(cap, f)
    print(f"X^2 + X - 7 over Z/7^3 has the radical root {alpha.payload}")
    print(f"  check: f({alpha.payload}) mod 343 =", (alpha.payload**2 + alpha.payload - 7) % 343)

    g = Poly(t7, [-14, 3, 7, 7])  # non-monic, linear coefficient a unit
    beta = hensel_root_nonmonic(cap, g)
    print(f"7X^3 + 7X^2 + 3X - 14 has the radical root {beta.payload}")

    print()
    print("== Lifting a simple residual root ==")
    sqrt2 = lift_simple_root(cap, Poly(t7, [-2, 0, 1]), t7.residue_field.element(3))
    print(f"the square root of 2 mod 343 with residue 3 is {sqrt2.payload}")

    print()
    print("== Lifting factorizations ==")
    f = Poly(t7, [-2, 0, 1])
    gg, hh = lift_monic_factorization(cap, f, Poly(t7, [-3, 1]), Poly(t7, [-4, 1]))
    print("X^2 - 2 = (X - 3)(X - 4) mod 7 lifts to")
    print(f"  ({gg!r}) * ({hh!r}) mod 343")
    gg, hh = lift_nonmonic_factorization(
        cap, Poly(t7, [-1, 1, 7]), Poly(t7, [-1, 1]), Poly(t7, [1])
    )
    print("7X^2 + X - 1 (non-monic!) lifts its residual split X - 1 to")
    print(f"  ({gg!r}) * ({hh!r}) mod 343")

    print()
    print("== Lifting idempotents and splitting an algebra ==")
    z343 = ModularIntegers(343)
    cap343 = HenselCapability(z343)
    b = FiniteAlgebra.quotient_ring(z343, Poly(z343, [-2, 0, 1]))
    e0 = b.element([z343.element(4), z343.element(6)])
    e = lift_idempotent_finite_algebra(cap343, b, e0)
    c0, c1 = (c.payload for c in e.element.coords)
    print(f"4 + 6x is idempotent mod 7 in (Z/343)[x]/(x^2-2); its exact lift is {c0} + {c1}x")
    parts = decompose_finite_algebra(cap343, b)
    print(f"the algebra splits into {len(parts)} local factors of ranks",
          [factor.rank for _, factor in parts])


if __name__ == "__main__":
    main()
