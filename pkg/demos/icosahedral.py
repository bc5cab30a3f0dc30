"""The order-5 warm-up: Klein's icosahedral forms on two theta constants.

Checks the syzygy T^2 + H^3 = 1728 f^5, rebuilds H and T from f by Hessian and
Jacobian, then substitutes x_i = eta * theta and compares with Delta, E4, E6.

    python demos/icosahedral.py
"""

from sl213.modverify import eval_binary, klein_forms
from sl213.qseries import SeriesContext, delta_series, eisenstein, eta_series, order5_pair

f, H, T, hessian, jac = klein_forms()
print("T^2 + H^3 - 1728 f^5 == 0:", T**2 + H**3 - 1728 * f**5 == 0)
print("Hessian / 121 == H:      ", hessian == H)
print("-(1/20) Jac(f, H) == T:  ", jac == T, "  (== -T:", jac == -T, ")")

ctx = SeriesContext.order5(4)
a, b = order5_pair(ctx)
eta = eta_series(ctx)
x1, x2 = eta * a, eta * b
fv = eval_binary(f, x1, x2)
Hv = eval_binary(H, x1, x2)
Tv = eval_binary(T, x1, x2)
delta = delta_series(ctx)
print("\nf(x1, x2) + Delta == 0:           ", (fv + delta).is_zero())
print("H(x1, x2) + eta^8 Delta E4 == 0:  ", (Hv + eta**8 * delta * eisenstein(4, ctx)).is_zero())
print("T(x1, x2) - Delta^2 E6 == 0:      ", (Tv - delta * delta * eisenstein(6, ctx)).is_zero())
print("\nf(x1, x2) =", ", ".join(fv.to_lines()[:4]), "...")
