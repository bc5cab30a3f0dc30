"""Evaluate power sums on the eta-scaled theta vector and recover their constants.

For each invariant that should be a multiple of a level-one form, divide the
q-expansion by that form and print the ratio next to the tabulated one.

    python demos/theta_normalizations.py [order]
"""

import sys
from fractions import Fraction

from sl213.invariants import NORMALIZATION
from sl213.modverify import find_constant, modular_data
from sl213.qseries import SeriesContext, theta_vector

order = int(sys.argv[1]) if len(sys.argv) > 1 else 6
md = modular_data(order)

print("theta vector, first terms:")
for i, a in enumerate(theta_vector(SeriesContext.order13(2)), start=1):
    print(f"  a_{i} = " + " + ".join(a.to_lines()[:3]) + " + ...")

pairs = [
    ((3, 0), "Delta"), ((0, 2), "Delta"),
    ((5, 0), "eta^8 Delta E4"), ((2, 2), "eta^8 Delta E4"),
    ((0, 5), "Delta^2 E6"), ((3, 3), "Delta^2 E6"), ((6, 1), "Delta^2 E6"),
    ((8, 0), "eta^8 Delta^2 E4"), ((5, 2), "eta^8 Delta^2 E4"), ((2, 4), "eta^8 Delta^2 E4"),
    ((0, 7), "Delta^3 E6"), ((3, 5), "Delta^3 E6"), ((6, 3), "Delta^3 E6"), ((9, 1), "Delta^3 E6"),
    ((11, 0), "eta^8 Delta^3 E4"),
]

print(f"\nun-normalized Phi_(m,n)(x) / target, through q^{order}:")
print(f"  {'(m,n)':8s} {'target':18s} {'found':>12s} {'tabulated':>12s}")
for mn, target in pairs:
    c, ok, _ = find_constant(md, md.raw(*mn), md.targets[target])
    tab = 1 / NORMALIZATION[mn]
    flag = "" if c == tab else "   <-- differs"
    shown = str(c) if ok else "no multiple"
    print(f"  {str(mn):8s} {target:18s} {shown:>12s} {str(Fraction(tab)):>12s}{flag}")
