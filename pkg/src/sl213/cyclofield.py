"""Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(2*pi*i/13).

Elements are stored in the power basis 1, zeta, ..., zeta^11.  Anything of
higher degree is reduced modulo 1 + x + ... + x^12, so two elements are equal
exactly when their twelve rational coordinates agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import flint

P = 13
DIM = P - 1
PHI13 = flint.fmpq_poly([1] * P)


def _as_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational")


def parse_rational(text: str) -> flint.fmpq:
    """Parse "n/d" or "n" and insist on lowest terms with positive d."""
    num, sep, den = text.strip().partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d <= 0:
        raise ValueError(f"malformed rational {text!r}: denominator must be positive")
    q = flint.fmpq(n, d)
    if sep and (int(q.q) != d):
        raise ValueError(f"malformed rational {text!r}: not in lowest terms")
    return q


def format_rational(q) -> str:
    q = _as_fmpq(q)
    return f"{int(q.p)}/{int(q.q)}"


def to_fraction(q) -> Fraction:
    q = _as_fmpq(q)
    return Fraction(int(q.p), int(q.q))


class CycloElem:
    """An element of Q(zeta_13); immutable."""

    __slots__ = ("_p", "_key")

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        if len(coeffs) > DIM:
            # longer input is read as a polynomial in zeta and reduced
            self._p = flint.fmpq_poly([_as_fmpq(c) for c in coeffs]) % PHI13
        else:
            self._p = flint.fmpq_poly([_as_fmpq(c) for c in coeffs])
        self._key = None

    @classmethod
    def _wrap(cls, poly: flint.fmpq_poly) -> "CycloElem":
        # poly must already be reduced
        obj = object.__new__(cls)
        obj._p = poly
        obj._key = None
        return obj

    @classmethod
    def from_poly(cls, poly: flint.fmpq_poly) -> "CycloElem":
        if poly.degree() >= DIM:
            poly = poly % PHI13
        return cls._wrap(poly)

    @classmethod
    def rational(cls, value) -> "CycloElem":
        return cls._wrap(flint.fmpq_poly([_as_fmpq(value)]))

    # -- coordinates -------------------------------------------------------

    @property
    def poly(self) -> flint.fmpq_poly:
        """Reduced representative as a polynomial in zeta of degree < 12."""
        return self._p

    def coeffs(self) -> tuple[Fraction, ...]:
        cs = self._p.coeffs()
        cs = cs + [flint.fmpq(0)] * (DIM - len(cs))
        return tuple(to_fraction(c) for c in cs)

    def key(self):
        if self._key is None:
            self._key = (tuple(int(c) for c in self._p.numer().coeffs()), int(self._p.denom()))
        return self._key

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_rational(self) -> bool:
        return self._p.degree() <= 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return to_fraction(self._p.coeffs()[0]) if not self._p.is_zero() else Fraction(0)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycloElem):
            return other._p
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return flint.fmpq_poly([_as_fmpq(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._wrap(o - self._p)

    def __neg__(self):
        return CycloElem._wrap(-self._p)

    def __mul__(self, other):
        if isinstance(other, CycloElem):
            return CycloElem._wrap((self._p * other._p) % PHI13)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._wrap(self._p * o)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        """Solve a * x = 1 as a 12x12 rational linear system."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_13)")
        if self.is_rational():
            return CycloElem._wrap(flint.fmpq_poly([1 / self._p.coeffs()[0]]))
        cols = []
        for j in range(DIM):
            col = (self._p * _ZETA_POLYS[j]) % PHI13
            cs = col.coeffs()
            cols.append(cs + [0] * (DIM - len(cs)))
        mat = flint.fmpq_mat(DIM, DIM, [cols[j][i] for i in range(DIM) for j in range(DIM)])
        rhs = flint.fmpq_mat(DIM, 1, [1] + [0] * (DIM - 1))
        sol = mat.solve(rhs)
        return CycloElem._wrap(flint.fmpq_poly([sol[i, 0] for i in range(DIM)]))

    def __truediv__(self, other):
        if isinstance(other, CycloElem):
            return self * other.inverse()
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_13)")
        return CycloElem._wrap(self._p / o.coeffs()[0])

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem._wrap(o) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ONE._p
        b = base._p
        while n:
            if n & 1:
                result = (result * b) % PHI13
            n >>= 1
            if n:
                b = (b * b) % PHI13
        return CycloElem._wrap(result)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return not self._p.is_zero()

    # -- Galois action and embeddings ---------------------------------------

    def galois(self, k: int) -> "CycloElem":
        """Apply the automorphism zeta -> zeta^k (k prime to 13)."""
        if k % P == 0:
            raise ValueError("k must be prime to 13")
        acc = flint.fmpq_poly([])
        for i, c in enumerate(self._p.coeffs()):
            if c != 0:
                acc += c * _ZETA_POLYS[(i * k) % P]
        return CycloElem._wrap(acc % PHI13)

    def embed(self, precision: int = 15):
        """Value under zeta -> exp(2 pi i/13).

        Returns a Python complex when precision <= 15, otherwise a flint acb
        ball computed with a few guard digits.
        """
        if precision < 10:
            raise ValueError("precision must be at least 10 digits")
        old = flint.ctx.dps
        flint.ctx.dps = precision + 10
        try:
            z = (flint.acb(0, 2) * flint.acb.pi() / P).exp()
            acc = flint.acb(0)
            zk = flint.acb(1)
            for c in self._p.coeffs():
                acc += zk * flint.arb(c)
                zk *= z
        finally:
            flint.ctx.dps = old
        if precision <= 15:
            return complex(float(acc.real.mid()), float(acc.imag.mid()))
        return acc

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        cs = self._p.coeffs()
        cs = cs + [flint.fmpq(0)] * (DIM - len(cs))
        return " ".join(format_rational(c) for c in cs)

    @classmethod
    def from_text(cls, text: str) -> "CycloElem":
        parts = text.split()
        if len(parts) != DIM:
            raise ValueError(f"expected {DIM} rationals, got {len(parts)}")
        return cls._wrap(flint.fmpq_poly([parse_rational(s) for s in parts]))

    def __repr__(self):
        if self.is_zero():
            return "CycloElem(0)"
        terms = []
        for i, c in enumerate(self._p.coeffs()):
            if c != 0:
                terms.append(f"{format_rational(c)}" if i == 0 else f"{format_rational(c)}*z^{i}")
        return "CycloElem(" + " + ".join(terms) + ")"


_ZETA_POLYS = [flint.fmpq_poly([0] * k + [1]) % PHI13 for k in range(P)]

ZERO = CycloElem._wrap(flint.fmpq_poly([]))
ONE = CycloElem._wrap(flint.fmpq_poly([1]))


def zeta_power(k: int) -> CycloElem:
    return CycloElem._wrap(_ZETA_POLYS[k % P])


def zeta_combination(exponents_with_signs) -> CycloElem:
    """Sum of sign * zeta^k over (sign, k) pairs."""
    acc = flint.fmpq_poly([])
    for sign, k in exponents_with_signs:
        acc += sign * _ZETA_POLYS[k % P]
    return CycloElem._wrap(acc % PHI13)


def alpha_beta_gamma() -> tuple[CycloElem, CycloElem, CycloElem]:
    alpha = zeta_combination([(1, 1), (1, 12), (-1, 5), (-1, 8)])
    beta = zeta_combination([(1, 3), (1, 10), (-1, 2), (-1, 11)])
    gamma = zeta_combination([(1, 9), (1, 4), (-1, 6), (-1, 7)])
    return alpha, beta, gamma


@lru_cache(maxsize=None)
def gauss_sqrt13() -> CycloElem:
    """sqrt(13) as the quadratic Gauss sum, i.e. the branch with positive embedding."""
    a, b, c = alpha_beta_gamma()
    return a + b + c


@dataclass(frozen=True)
class PeriodsAndRadicals:
    theta1: CycloElem
    theta2: CycloElem
    theta3: CycloElem
    theta4: CycloElem
    r0: CycloElem
    r1: CycloElem
    r2: CycloElem
    r3: CycloElem
    r4: CycloElem
    rinf: CycloElem
    signs: tuple[int, int, int, int]

    @property
    def thetas(self):
        return (self.theta1, self.theta2, self.theta3, self.theta4)

    def r(self, key) -> CycloElem:
        return {0: self.r0, 1: self.r1, 2: self.r2, 3: self.r3, 4: self.r4, "inf": self.rinf}[key]


def gaussian_periods() -> tuple[CycloElem, CycloElem, CycloElem, CycloElem]:
    # cosets of the cubes {1, 3, 9} in (Z/13)^x, listed in the order 1, 2, 4, 8
    th = []
    for g in (1, 2, 4, 8):
        th.append(zeta_combination([(1, g), (1, 3 * g), (1, 9 * g)]))
    return tuple(th)


def radical_candidates() -> dict:
    """Unsigned square roots: r_i = s_i * base[i] for a sign s_i in {+1, -1}."""
    t1, t2, t3, t4 = gaussian_periods()
    return {
        1: (t1 - t3) + (t2 - t4),
        2: t1 - t3,
        3: -((t1 - t3) - (t2 - t4)),
        4: t2 - t4,
    }


def make_periods_and_radicals(signs=(1, 1, 1, 1)) -> PeriodsAndRadicals:
    t1, t2, t3, t4 = gaussian_periods()
    base = radical_candidates()
    r = {i: base[i] * s for i, s in zip((1, 2, 3, 4), signs)}
    r0 = 2 * (t1 - t3) - 3 * (t2 - t4)
    rinf = 2 * (t4 - t2) - 3 * (t1 - t3)
    return PeriodsAndRadicals(t1, t2, t3, t4, r0, r[1], r[2], r[3], r[4], rinf, tuple(signs))


def sign_assignments():
    return list(product((1, -1), repeat=4))


@lru_cache(maxsize=None)
def periods_and_radicals() -> PeriodsAndRadicals:
    """Periods and radicals with the r_i signs fixed by the cubic transformation law.

    The squares of r_1..r_4 determine them only up to sign.  Each of the 16
    sign patterns is tried against the transformation of D_0 and D_inf under
    S; exactly the satisfying one is returned.
    """
    from .invariants import find_radical_signs

    signs = find_radical_signs()
    return make_periods_and_radicals(signs)
