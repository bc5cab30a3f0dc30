"""Truncated q-expansions with exponents on a fixed fractional grid.

A series lives in a SeriesContext (denominator D, truncation N) and stands for
sum c_n q^(n/D) with exact coefficients c_n in Q(zeta_13), known for every
numerator n <= prec.  Products track precision the usual way: if f is known
through prec_f and g has valuation v_g, the product is known through
min(prec_f + v_g, prec_g + v_f), capped at N.

Coefficients are stored as one flint rational polynomial per zeta-basis
component, so rational series (the common case) cost a single polynomial
product per multiplication.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import flint

from .cyclofield import DIM, CycloElem, _as_fmpq, parse_rational, to_fraction
from .polyring import MPoly

QEXP_HEADER = "QEXP v1"

ORDER13_DENOMINATOR = 312
ORDER5_DENOMINATOR = 120
DEFAULT_ORDER = 12

# (k, sign) for a_1..a_6: a_i = sign * q^(k^2/104) * sum (-1)^n q^((13 n^2 + k n)/2)
THETA13_CHARACTERISTICS = ((11, 1), (7, 1), (5, 1), (3, -1), (9, 1), (1, 1))


@dataclass(frozen=True)
class SeriesContext:
    denominator: int = ORDER13_DENOMINATOR
    truncation: int = ORDER13_DENOMINATOR * DEFAULT_ORDER

    @classmethod
    def order13(cls, order: int = DEFAULT_ORDER) -> "SeriesContext":
        return cls(ORDER13_DENOMINATOR, ORDER13_DENOMINATOR * order)

    @classmethod
    def order5(cls, order: int = DEFAULT_ORDER) -> "SeriesContext":
        return cls(ORDER5_DENOMINATOR, ORDER5_DENOMINATOR * order)

    def exponent(self, numerator: int) -> Fraction:
        return Fraction(numerator, self.denominator)

    def numerator(self, exponent) -> int:
        x = Fraction(exponent) * self.denominator
        if x.denominator != 1:
            raise ValueError(f"exponent {exponent} is not on the 1/{self.denominator} grid")
        return int(x)


_EMPTY = flint.fmpq_poly([])


def _valuation(p: flint.fmpq_poly) -> int | None:
    if p.is_zero():
        return None
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    return None  # pragma: no cover


def _fold(prod: list) -> list:
    """Reduce components indexed 0..22 modulo 1 + zeta + ... + zeta^12."""
    out = list(prod[:DIM]) + [_EMPTY] * max(0, DIM - len(prod))
    for k in range(13, len(prod)):
        if not prod[k].is_zero():
            out[k - 13] = out[k - 13] + prod[k]
    if len(prod) > DIM and not prod[DIM].is_zero():
        c12 = prod[DIM]
        out = [o - c12 for o in out]
    return out


class QExp:
    """Immutable truncated q-expansion."""

    __slots__ = ("ctx", "shift", "parts", "prec")

    def __init__(self, ctx: SeriesContext, shift: int, parts: Sequence[flint.fmpq_poly], prec: int | None = None):
        self.ctx = ctx
        prec = ctx.truncation if prec is None else min(prec, ctx.truncation)
        parts = list(parts)
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        if not parts:
            parts = [_EMPTY]
        length = prec - shift + 1
        if length <= 0:
            parts = [_EMPTY]
        else:
            parts = [p.truncate(length) if p.length() > length else p for p in parts]
        vals = [v for v in (_valuation(p) for p in parts) if v is not None]
        if vals:
            v = min(vals)
            if v:
                parts = [p.right_shift(v) for p in parts]
                shift += v
        else:
            shift = 0
            parts = [_EMPTY]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        self.shift = shift
        self.parts = tuple(parts)
        self.prec = prec

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_terms(cls, ctx: SeriesContext, terms: dict, prec: int | None = None) -> "QExp":
        """terms maps numerator -> coefficient (int, Fraction or CycloElem)."""
        terms = {n: c for n, c in terms.items() if n <= (ctx.truncation if prec is None else prec)}
        if not terms:
            return cls.zero(ctx, prec)
        lo = min(terms)
        hi = max(terms)
        comps = [[0] * (hi - lo + 1) for _ in range(DIM)]
        for n, c in terms.items():
            if isinstance(c, CycloElem):
                for i, q in enumerate(c.poly.coeffs()):
                    comps[i][n - lo] = q
            else:
                comps[0][n - lo] = _as_fmpq(c)
        return cls(ctx, lo, [flint.fmpq_poly(c) for c in comps], prec)

    @classmethod
    def zero(cls, ctx: SeriesContext, prec: int | None = None) -> "QExp":
        return cls(ctx, 0, [_EMPTY], prec)

    @classmethod
    def one(cls, ctx: SeriesContext) -> "QExp":
        return cls(ctx, 0, [flint.fmpq_poly([1])])

    @classmethod
    def monomial(cls, ctx: SeriesContext, numerator: int, coeff=1) -> "QExp":
        return cls.from_terms(ctx, {numerator: coeff})

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def is_rational(self) -> bool:
        return len(self.parts) == 1

    def valuation(self) -> Fraction | None:
        """Exponent of the first nonzero term."""
        return None if self.is_zero() else self.ctx.exponent(self.shift)

    def leading(self) -> tuple[Fraction, CycloElem] | None:
        if self.is_zero():
            return None
        return self.ctx.exponent(self.shift), self.coefficient(self.shift)

    def coefficient(self, numerator: int) -> CycloElem:
        if numerator > self.prec:
            raise ValueError(f"coefficient q^({numerator}/{self.ctx.denominator}) is beyond the known precision")
        i = numerator - self.shift
        if i < 0:
            return CycloElem()
        cs = []
        for p in self.parts:
            cs.append(p.coeffs()[i] if i < p.length() else 0)
        return CycloElem(cs)

    def rational_coefficients(self) -> list[tuple[int, Fraction]]:
        if not self.is_rational():
            raise ValueError("series has cyclotomic coefficients")
        return [(self.shift + i, to_fraction(c)) for i, c in enumerate(self.parts[0].coeffs()) if c != 0]

    def items(self) -> Iterable[tuple[int, CycloElem]]:
        """Nonzero terms as (numerator, coefficient), increasing."""
        if self.is_zero():
            return
        cols = [p.coeffs() for p in self.parts]
        n = max(len(c) for c in cols)
        for i in range(n):
            cs = [c[i] if i < len(c) else 0 for c in cols]
            if any(x != 0 for x in cs):
                yield self.shift + i, CycloElem(cs)

    def numerators(self) -> list[int]:
        return [n for n, _ in self.items()]

    def __repr__(self):
        lead = self.leading()
        if lead is None:
            return f"QExp(0 + O(q^({self.prec}/{self.ctx.denominator})))"
        return f"QExp({lead[1]!r} q^{lead[0]} + ... + O(q^({self.prec}/{self.ctx.denominator})))"

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "QExp"):
        if other.ctx != self.ctx:
            raise ValueError("series from different contexts cannot be combined")

    def _aligned(self, other: "QExp"):
        lo = min(self.shift, other.shift)
        a = [p.left_shift(self.shift - lo) if self.shift > lo else p for p in self.parts]
        b = [p.left_shift(other.shift - lo) if other.shift > lo else p for p in other.parts]
        n = max(len(a), len(b))
        a += [_EMPTY] * (n - len(a))
        b += [_EMPTY] * (n - len(b))
        return lo, a, b

    def __add__(self, other):
        if not isinstance(other, QExp):
            if other == 0:
                return self
            other = QExp.from_terms(self.ctx, {0: other})
        self._check(other)
        lo, a, b = self._aligned(other)
        return QExp(self.ctx, lo, [x + y for x, y in zip(a, b)], min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return QExp(self.ctx, self.shift, [-p for p in self.parts], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QExp":
        if isinstance(c, CycloElem):
            if c.is_rational():
                return self.scale(c.rational_value())
            prod = [_EMPTY] * (len(self.parts) + DIM)
            for i, p in enumerate(self.parts):
                for j, q in enumerate(c.poly.coeffs()):
                    if q != 0 and not p.is_zero():
                        prod[i + j] = prod[i + j] + p * q
            return QExp(self.ctx, self.shift, _fold(prod), self.prec)
        q = _as_fmpq(c)
        return QExp(self.ctx, self.shift, [p * q for p in self.parts], self.prec)

    def __mul__(self, other):
        if not isinstance(other, QExp):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            va = self.shift if not self.is_zero() else None
            vb = other.shift if not other.is_zero() else None
            cands = [self.prec + (vb if vb is not None else other.prec)]
            cands.append(other.prec + (va if va is not None else self.prec))
            return QExp.zero(self.ctx, min(cands))
        prec = min(self.prec + other.shift, other.prec + self.shift, self.ctx.truncation)
        shift = self.shift + other.shift
        length = prec - shift + 1
        if length <= 0:
            return QExp.zero(self.ctx, prec)
        if self.is_rational() and other.is_rational():
            return QExp(self.ctx, shift, [self.parts[0].mul_low(other.parts[0], length)], prec)
        prod = [_EMPTY] * (len(self.parts) + len(other.parts) - 1)
        for i, p in enumerate(self.parts):
            if p.is_zero():
                continue
            for j, q in enumerate(other.parts):
                if q.is_zero():
                    continue
                prod[i + j] = prod[i + j] + p.mul_low(q, length)
        return QExp(self.ctx, shift, _fold(prod), prec)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "QExp":
        if n < 0:
            return self.inverse() ** (-n)
        result = QExp.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift_exponent(self, numerator: int) -> "QExp":
        """Multiply by q^(numerator/D)."""
        return QExp(self.ctx, self.shift + numerator, self.parts, self.prec + numerator)

    def inverse(self) -> "QExp":
        """1/f for f with a nonzero leading coefficient (Newton iteration)."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert a series with zero leading term")
        v = self.shift
        lead = self.coefficient(v)
        rel = self.prec - v  # relative precision of the unit part
        unit = QExp(self.ctx, 0, self.parts, rel).scale(lead.inverse())
        # unit = 1 + O(q^(1/D)); each Newton step doubles the correct prefix
        g = QExp(self.ctx, 0, [flint.fmpq_poly([1])], rel)
        for _ in range((rel + 1).bit_length()):
            g = g * (2 - unit * g)
        inv = g.scale(lead.inverse())
        return QExp(self.ctx, inv.shift - v, inv.parts, self.prec - 2 * v)

    def with_prec(self, prec: int) -> "QExp":
        return QExp(self.ctx, self.shift, self.parts, min(prec, self.prec))

    def __eq__(self, other):
        if not isinstance(other, QExp):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def agrees_with(self, other: "QExp") -> tuple[bool, str]:
        """Compare through the common precision; returns (ok, witness)."""
        diff = self - other
        if diff.is_zero():
            return True, f"equal through q^{format_exponent(self.ctx, diff.prec)}"
        n, c = next(iter(diff.items()))
        return False, f"first difference at q^{format_exponent(self.ctx, n)}: {coefficient_text(self.coefficient(n))} vs {coefficient_text(other.coefficient(n))}"

    # -- text forms -----------------------------------------------------------

    def to_lines(self, max_numerator: int | None = None) -> list[str]:
        if self.is_zero():
            return ["0"]
        out = []
        for n, c in self.items():
            if max_numerator is not None and n > max_numerator:
                break
            out.append(f"q^{format_exponent(self.ctx, n)}: {coefficient_text(c)}")
        return out

    def serialize(self) -> bytes:
        items = list(self.items())
        lines = [f"{QEXP_HEADER} {self.ctx.denominator} {self.ctx.truncation} {self.prec} {len(items)}"]
        for n, c in items:
            lines.append(f"{n} {c.to_text()}")
        return ("\n".join(lines) + "\n").encode("utf-8")

    @classmethod
    def deserialize(cls, data: bytes | str) -> "QExp":
        text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty QEXP stream")
        head = lines[0].split()
        if len(head) != 6 or " ".join(head[:2]) != QEXP_HEADER:
            raise ValueError(f"bad QEXP header {lines[0]!r}")
        den, trunc, prec, count = (int(x) for x in head[2:])
        if len(lines) - 1 != count:
            raise ValueError(f"header announces {count} terms, found {len(lines) - 1}")
        ctx = SeriesContext(den, trunc)
        terms = {}
        for ln in lines[1:]:
            fields = ln.split()
            if len(fields) != 1 + DIM:
                raise ValueError(f"malformed term line {ln!r}")
            terms[int(fields[0])] = CycloElem([parse_rational(s) for s in fields[1:]])
        return cls.from_terms(ctx, terms, prec)


def format_exponent(ctx: SeriesContext, numerator: int) -> str:
    e = Fraction(numerator, ctx.denominator)
    s = str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
    return s if (len(s) == 1) else "{" + s + "}"


def coefficient_text(c: CycloElem) -> str:
    if c.is_rational():
        v = c.rational_value()
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return "[" + c.to_text() + "]"


# -- special series ---------------------------------------------------------------


def theta_characteristic(eps_num: int, eps_den: int, level: int, ctx: SeriesContext | None = None) -> QExp:
    """e^(-pi i k/(2L)) theta[k/L; 1](0, L z) = q^(k^2/(8L)) sum_n (-1)^n q^((L n^2 + k n)/2).

    The phase prefactor cancels the constant phase of the theta sum, so all
    coefficients are rational integers.
    """
    if eps_den not in (5, 13) or level != eps_den:
        raise ValueError("supported characteristics: denominator 5 or 13 with level equal to it")
    L, k = level, eps_num
    if ctx is None:
        ctx = SeriesContext.order13() if L == 13 else SeriesContext.order5()
    D, N = ctx.denominator, ctx.truncation
    if (D * k * k) % (8 * L) or D % 2:
        raise ValueError(f"denominator {D} cannot hold the exponents of this theta constant")
    base = D * k * k // (8 * L)
    bound = math.ceil(math.sqrt(2 * N / L)) + 2
    terms: dict[int, int] = {}
    for n in range(-bound, bound + 1):
        e = base + D * (L * n * n + k * n) // 2
        if e <= N:
            terms[e] = terms.get(e, 0) + (1 if n % 2 == 0 else -1)
    return QExp.from_terms(ctx, terms)


def theta_vector(ctx: SeriesContext | None = None) -> list[QExp]:
    """(a_1, ..., a_6): order-13 theta constants, a_4 carrying an extra minus sign."""
    ctx = ctx or SeriesContext.order13()
    return [theta_characteristic(k, 13, 13, ctx) * s for k, s in THETA13_CHARACTERISTICS]


def order5_pair(ctx: SeriesContext | None = None) -> tuple[QExp, QExp]:
    """(a, b) with a = e^(-3 pi i/10) theta[3/5;1](0,5z), b = e^(-pi i/10) theta[1/5;1](0,5z)."""
    ctx = ctx or SeriesContext.order5()
    return theta_characteristic(3, 5, 5, ctx), theta_characteristic(1, 5, 5, ctx)


def eta_series(ctx: SeriesContext | None = None) -> QExp:
    """q^(1/24) prod (1 - q^n), via the pentagonal number expansion."""
    ctx = ctx or SeriesContext.order13()
    D, N = ctx.denominator, ctx.truncation
    if D % 24:
        raise ValueError("context denominator must be a multiple of 24")
    terms = {}
    k = 0
    while True:
        found = False
        for kk in ((k, -k) if k else (0,)):
            e = D // 24 + D * kk * (3 * kk - 1) // 2
            if e <= N:
                terms[e] = 1 if kk % 2 == 0 else -1
                found = True
        if not found and k > 0:
            break
        k += 1
    return QExp.from_terms(ctx, terms)


def eta_product_series(ctx: SeriesContext | None = None) -> QExp:
    """The same series computed from the Euler product; kept as an oracle."""
    ctx = ctx or SeriesContext.order13()
    D, N = ctx.denominator, ctx.truncation
    out = QExp.monomial(ctx, D // 24)
    for n in range(1, N // D + 1):
        out = out * (QExp.one(ctx) - QExp.monomial(ctx, n * D))
    return out


def delta_series(ctx: SeriesContext | None = None) -> QExp:
    return eta_series(ctx) ** 24


def _sigma(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def eisenstein(weight: int, ctx: SeriesContext | None = None) -> QExp:
    """E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n."""
    ctx = ctx or SeriesContext.order13()
    if weight == 4:
        c, k = 240, 3
    elif weight == 6:
        c, k = -504, 5
    else:
        raise ValueError("weight must be 4 or 6")
    D = ctx.denominator
    terms = {0: 1}
    for n in range(1, ctx.truncation // D + 1):
        terms[n * D] = c * _sigma(n, k)
    return QExp.from_terms(ctx, terms)


def j_series(ctx: SeriesContext | None = None) -> QExp:
    ctx = ctx or SeriesContext.order13()
    return eisenstein(4, ctx) ** 3 * delta_series(ctx).inverse()


# -- polynomials on series ------------------------------------------------------


def evaluate_poly_on_series(p: MPoly, v: Sequence[QExp]) -> QExp:
    """p(v_1, ..., v_6) with shared powers of the inputs."""
    if len(v) != 6:
        raise ValueError("need six series")
    ctx = v[0].ctx
    for s in v:
        if s.ctx != ctx:
            raise ValueError("series from different contexts cannot be combined")
    powers: dict[tuple[int, int], QExp] = {}

    def pw(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = v[i] if e == 1 else pw(i, e - 1) * v[i]
        return powers[(i, e)]

    acc = QExp.zero(ctx)
    for mon, c in p.terms().items():
        term = None
        for i, e in enumerate(mon):
            if e:
                term = pw(i, e) if term is None else term * pw(i, e)
        if term is None:
            term = QExp.one(ctx)
        acc = acc + term.scale(c)
    return acc


class ThetaPowerSums:
    """Fused evaluation of the fourteen-point power sums on the theta vector.

    The quadratic and cubic forms are evaluated once on (a_1..a_6); the sextic
    forms come from products of the cubic ones; then the power sums are taken
    in the group ring of Z/13 with series coefficients.  Results on the
    x-vector x_i = eta * a_i follow by multiplying with eta^(4m+6n).
    """

    def __init__(self, ctx: SeriesContext | None = None):
        from .invariants import PowerSumEngine, build_forms, g_from_d

        self.ctx = ctx or SeriesContext.order13()
        self.a = theta_vector(self.ctx)
        f = build_forms()
        self.A = [evaluate_poly_on_series(p, self.a) for p in f.A]
        self.D = {k: evaluate_poly_on_series(p, self.a) for k, p in f.D.items()}
        self.G = [g_from_d(self.D, k) for k in range(13)]
        self.eta = eta_series(self.ctx)
        self._eta_pows = {0: QExp.one(self.ctx)}
        self._engine = PowerSumEngine(
            self.A, self.G,
            mul=lambda x, y: x * y,
            add=lambda x, y: x + y,
            scale=lambda x, c: x.scale(c),
            one=QExp.one(self.ctx),
        )
        self._cache: dict[tuple[int, int], QExp] = {}

    def eta_power(self, d: int) -> QExp:
        if d not in self._eta_pows:
            self._eta_pows[d] = self.eta**d
        return self._eta_pows[d]

    def on_a(self, m: int, n: int) -> QExp:
        """Un-normalized power sum evaluated on the a-vector."""
        if (m, n) not in self._cache:
            self._cache[(m, n)] = self._engine.power_sum(m, n)
        return self._cache[(m, n)]

    def on_x(self, m: int, n: int, normalization=1) -> QExp:
        return (self.on_a(m, n) * self.eta_power(4 * m + 6 * n)).scale(Fraction(normalization))

    @property
    def x(self) -> list[QExp]:
        return [self.eta * ai for ai in self.a]


_POWER_SUMS: dict[SeriesContext, ThetaPowerSums] = {}


def theta_power_sums(ctx: SeriesContext | None = None) -> ThetaPowerSums:
    ctx = ctx or SeriesContext.order13()
    if ctx not in _POWER_SUMS:
        _POWER_SUMS[ctx] = ThetaPowerSums(ctx)
    return _POWER_SUMS[ctx]


# -- residue classes and the numeric transformation law --------------------------


def residue_class_check(f: QExp, modulus: int) -> int | None:
    """The common class mod `modulus` of all exponents written over `modulus`, if any."""
    classes = set()
    for n, _ in f.items():
        x = Fraction(n * modulus, f.ctx.denominator)
        if x.denominator != 1:
            return None
        classes.add(int(x) % modulus)
        if len(classes) > 1:
            return None
    return classes.pop() if len(classes) == 1 else None


def _theta_terms(z: complex, k: int, terms: int) -> complex:
    acc = 0j
    for n in range(-terms, terms + 1):
        e = k * k / 104 + (13 * n * n + k * n) / 2
        acc += (1 if n % 2 == 0 else -1) * cmath.exp(2j * math.pi * z * e)
    return acc


def _theta_tail_bound(z: complex, terms: int) -> float:
    # every omitted exponent is at least (13 n^2 - 11 n)/2 with n = terms + 1
    n = terms + 1
    e_min = (13 * n * n - 11 * n) / 2
    r = math.exp(-2 * math.pi * z.imag)
    if r >= 1:
        return math.inf
    return 2 * r**e_min / (1 - r ** (13 * n))


def numeric_theta_eval(z: complex, terms: int = 40) -> list[complex]:
    """Floating values of (a_1(z), ..., a_6(z))."""
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half plane")
    return [s * _theta_terms(z, k, terms) for k, s in THETA13_CHARACTERISTICS]


class NonConvergence(ArithmeticError):
    pass


def prop_inversion_deviation(z: complex, terms: int = 40, tolerance: float = 1e-9) -> float:
    """max_i |a_i(-1/z) - e^(i pi/4) sqrt(z) (S a(z))_i| with the principal square root."""
    from .grouprep import build_generators

    w = -1 / z
    bound = max(_theta_tail_bound(z, terms), _theta_tail_bound(w, terms))
    if bound > tolerance / 10:
        raise NonConvergence(f"theta tail bound {bound:.3g} exceeds tolerance at z={z}")
    S = build_generators().S
    Sc = [[S[i, k].embed() for k in range(6)] for i in range(6)]
    a_z = numeric_theta_eval(z, terms)
    a_w = numeric_theta_eval(w, terms)
    pref = cmath.exp(1j * math.pi / 4) * cmath.sqrt(z)
    dev = 0.0
    for i in range(6):
        rhs = pref * sum(Sc[i][k] * a_z[k] for k in range(6))
        dev = max(dev, abs(a_w[i] - rhs))
    return dev


def verify_inversion_law(z: complex, tolerance: float = 1e-9, terms: int = 40):
    from .report import check

    try:
        dev = prop_inversion_deviation(z, terms, tolerance)
    except NonConvergence as exc:
        return check(f"inversion law at z={z}", False, str(exc), ["A(-1/z) = e^(i pi/4) sqrt(z) S A(z)"])
    return check(f"inversion law at z={z}", dev < tolerance, f"max deviation {dev:.3e}",
                 ["A(-1/z) = e^(i pi/4) sqrt(z) S A(z)"])
