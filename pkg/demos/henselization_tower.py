"""Walkthrough: building a Henselization tower over the integers at 5.

Run with:  python3 demos/henselization_tower.py
"""

from fractions import Fraction

from henselian import (
    LocalizedIntegers,
    Poly,
    TowerRing,
    TruncatedPadics,
    adjoin_hensel_root,
    adjoin_residue_extension,
    evaluate_into,
    tower_eq,
    tower_local_split,
    tower_residue,
)


def main():
    z5 = LocalizedIntegers(5)
    base = TowerRing(z5)

    print("== Adjoining a Hensel root ==")
    tower, x = adjoin_hensel_root(base, Poly(base, [-5, 1, 1]))  # X^2 + X - 5
    print("adjoined the root x of X^2 + X - 5; exact identity x*(x+1) = 5:",
          tower_eq(x * (x + tower.one), tower.element(5)))

    print()
    print("== Locality: every element is a unit or in the maximal ideal ==")
    print("x          ->", tower_local_split(x)[0])
    branch, inv = tower_local_split(x + tower.one)
    print("x + 1      ->", branch, " (inverse verified:",
          tower_eq((x + tower.one) * inv, tower.one), ")")
    print("3/2        ->", tower_local_split(tower.element(Fraction(3, 2)))[0])
    print("residue of x in F_5:", tower_residue(x))

    print()
    print("== Evaluation into a p-adic oracle ==")
    t5 = TruncatedPadics(5, 3)
    print("x evaluates to", evaluate_into(x, t5).payload, "mod 125")
    print("  check: (105^2 + 105 - 5) % 125 =", (105**2 + 105 - 5) % 125)

    print()
    print("== Stacking a second step ==")
    tower2, y = adjoin_hensel_root(tower, Poly(tower, [-10, 2, 0, 1]))
    print("rank of the two-step tower module:", tower2.rank)
    t8 = TruncatedPadics(5, 8)
    print("y evaluates to", evaluate_into(y, t8).payload, "mod 5^8")

    print()
    print("== Growing the residue field (strict Henselization step) ==")
    ext, u = adjoin_residue_extension(base, Poly(base, [base.element(-2), base.zero, base.one]))
    print("adjoined U^2 - 2 (irreducible mod 5); residue field size:",
          ext.residue_field.size)
    print("residue of the new generator:", tower_residue(u))


if __name__ == "__main__":
    main()
