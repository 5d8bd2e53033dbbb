"""Walkthrough: universal decomposition algebras and Galois idempotents.

Run with:  python3 demos/decomposition_algebra.py
"""

from henselian import (
    HenselCapability,
    Permutation,
    Poly,
    Rationals,
    TruncatedPadics,
    UdaAlgebra,
    lift_galois_idempotent,
    reduce_invariant,
    sn_act,
)


def main():
    q = Rationals()

    print("== The universal decomposition algebra of X^2 - 3X + 2 ==")
    d = UdaAlgebra(q, Poly(q, [2, -3, 1]))
    x1, x2 = d.root(1), d.root(2)
    print("rank:", d.rank)
    print("x1 in normal form:", x1.coords, " (that is, 3 - x2)")
    print("x1 * x2 =", (x1 * x2).coords, " x2^2 =", (x2 * x2).coords)
    print("the invariant x1*x2 descends to the base:", reduce_invariant(x1 * x2))

    print()
    print("== The symmetric group action ==")
    swap = Permutation.transposition(2, 1, 2)
    print("swapping the roots sends x2 to", sn_act(swap, x2).coords)
    e = x2 - d.one
    print("e = x2 - 1 is idempotent:", e * e == e)

    print()
    print("== Rank grows as n! ==")
    d3 = UdaAlgebra(q, Poly(q, [1, 1, 0, 1]))
    print("degree 3 polynomial -> rank", d3.rank)

    print()
    print("== Lifting a Galois idempotent over the 5-adics ==")
    t5 = TruncatedPadics(5, 2)
    cap = HenselCapability(t5)
    d5 = UdaAlgebra(t5, Poly(t5, [2, -3, 1]))
    r = d5.root(2) - d5.one
    e, orbit = lift_galois_idempotent(cap, d5, r)
    print("lifted idempotent coordinates:", [c.payload for c in e.element.coords])
    print("its orbit:", [[c.payload for c in o.coords] for o in orbit])
    total = d5.zero
    for o in orbit:
        total = total + o
    print("orbit sums to 1:", total == d5.one,
          " orthogonal:", not (orbit[0] * orbit[1]))


if __name__ == "__main__":
    main()
