"""Tour of the exact cohomology engine.

Computes invariant factors of H^n(G, A) for small groups, demonstrates
the suspension shift for Picard-groupoid coefficients, the split-
coefficient decomposition, and the long-exact-sequence exactness check.

Run: python demos/cohomology_tour.py
"""

from catbiext import (
    cohomology_group,
    les_check,
    make_picard,
    parse_group,
    picard_cohomology,
    suspension,
)


def main() -> None:
    print("== plain coefficients ==")
    for gdesc, adesc, n in [
        ("Z/2", "Z/2", 2),
        ("Z/2", "Z/2", 3),
        ("Z/4", "Z/2", 2),
        ("Z/2xZ/2", "Z/2", 2),
        ("Z/3", "Z/3", 3),
    ]:
        G, A = parse_group(gdesc), parse_group(adesc)
        H = cohomology_group(G, A, n)
        print(f"H^{n}({gdesc}, {adesc}) invariants: {H.invariants.factors}")

    print("\n== suspension shift ==")
    Z2 = parse_group("Z/2")
    for n in (1, 2, 3):
        HP = picard_cohomology(Z2, suspension(Z2), n)
        HG = cohomology_group(Z2, Z2, n + 1)
        print(
            f"H^{n}(Z/2, suspension(Z/2)) = {HP.invariants.factors}"
            f"  vs  H^{n + 1}(Z/2, Z/2) = {HG.invariants.factors}"
        )

    print("\n== sign groupoid coefficients ==")
    sign = make_picard(Z2, Z2, [[1]])
    for n in (1, 2):
        H = picard_cohomology(Z2, sign, n)
        print(f"H^{n}(Z/2, sign groupoid) invariants: {H.invariants.factors}")

    print("\n== long exact sequence ==")
    for c in ([[0]], [[1]]):
        pic = make_picard(Z2, Z2, c)
        for n in (1, 2):
            print(f"exact at degree {n}, c={c}:", les_check(Z2, pic, n))


if __name__ == "__main__":
    main()
