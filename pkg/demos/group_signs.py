"""Build the 6-dimensional representation, close the group, and look at signs.

Several relations among the generators only hold up to the central element -I.
This script prints which ones, and shows that flipping the sign of S repairs
some of them but not H^6.

    python demos/group_signs.py
"""

from sl213.grouprep import (
    GMatrix,
    build_generators,
    build_word_elements,
    expected_H,
    generate_group,
    lift_word_2x2,
    negated_generators,
)

I = GMatrix.identity()


def sign_of(M, target):
    if M == target:
        return "+"
    if M == -target:
        return "-"
    return "?"


def report(label, gens):
    w = build_word_elements(gens)
    H, P, Q, T = w.H, w.P, w.Q, gens.T
    rows = [
        ("S^2 vs -I", gens.S @ gens.S, -I),
        ("(ST)^3 vs I", (gens.S @ T) ** 3, I),
        ("H vs printed matrix", H, expected_H()),
        ("H^6 vs I", H**6, I),
        ("H^-1 T H vs T^4", H.transpose() @ T @ H, gens.T_power(4)),
        ("(Q^3 P^4)^3 vs -I", (Q**3 @ P**4) ** 3, -I),
    ]
    print(label)
    for name, M, target in rows:
        print(f"  {name:24s} {sign_of(M, target)}")


g = build_generators()
report("printed S", g)
report("S replaced by -S", negated_generators())

table = generate_group()
print(f"\n|<S, T>| = {table.order}")
print(f"|<H, T>| = {generate_group([build_word_elements().H, g.T]).order}")

h = lift_word_2x2()
print(f"integer lift h = {h}, det {h.det()}, off-diagonal mod 13: {h[0][1] % 13}, {h[1][0] % 13}")
