"""Sparse polynomials in z1..z6 with coefficients in Q(zeta_13).

Internally a polynomial is a flint rational multivariate polynomial in seven
variables z1..z6, y where y stands for zeta and is kept reduced modulo
1 + y + ... + y^12.  Monomials are ordered graded-lexicographically
(total degree first, then lexicographic with z1 > z2 > ... > z6).

Group action convention: substitute_linear(p, M) is the polynomial
x -> p(M x), i.e. z_i is replaced by sum_k M[i][k] z_k.  With this choice

    substitute_linear(p, M @ N) == substitute_linear(substitute_linear(p, M), N)
    evaluate(substitute_linear(p, M), x) == evaluate(p, M @ x)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

import flint

from .cyclofield import (
    DIM,
    P,
    CycloElem,
    _as_fmpq,
    format_rational,
    parse_rational,
    to_fraction,
)

NVARS = 6
VAR_NAMES = ("z1", "z2", "z3", "z4", "z5", "z6", "y")
CTX = flint.fmpq_mpoly_ctx.get(VAR_NAMES, "deglex")
_GENS = CTX.gens()
Y = _GENS[6]
PHI13_Y = sum((Y**k for k in range(P)), CTX.from_dict({}))

MPOLY_HEADER = "MPOLY v1"


def _cyclo_to_y(c: CycloElem):
    d = {}
    for i, q in enumerate(c.poly.coeffs()):
        if q != 0:
            d[(0,) * NVARS + (i,)] = q
    return CTX.from_dict(d)


def _reduce(p):
    if p.degrees()[6] >= DIM:
        return p % PHI13_Y
    return p


def graded_lex_key(exps: Sequence[int]):
    """Sort key; sorting ascending by this key lists the largest monomial first."""
    return (-sum(exps), tuple(-e for e in exps))


class MPoly:
    """Immutable sparse polynomial in z1..z6 over Q(zeta_13)."""

    __slots__ = ("_p",)

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        d = {}
        for mon, coeff in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != NVARS or min(mon) < 0:
                raise ValueError(f"bad monomial {mon}")
            if isinstance(coeff, CycloElem):
                for i, q in enumerate(coeff.poly.coeffs()):
                    if q != 0:
                        key = mon + (i,)
                        d[key] = d.get(key, 0) + q
            else:
                key = mon + (0,)
                d[key] = d.get(key, 0) + _as_fmpq(coeff)
        self._p = CTX.from_dict({k: v for k, v in d.items() if v != 0})

    @classmethod
    def _wrap(cls, p) -> "MPoly":
        obj = object.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def from_flint(cls, p) -> "MPoly":
        """Adopt a flint polynomial over the shared context (y reduced on entry)."""
        return cls._wrap(_reduce(p))

    @classmethod
    def var(cls, i: int) -> "MPoly":
        """The variable z_i, 1-based."""
        return cls._wrap(_GENS[i - 1])

    @classmethod
    def constant(cls, c) -> "MPoly":
        if isinstance(c, CycloElem):
            return cls._wrap(_cyclo_to_y(c))
        return cls._wrap(CTX.from_dict({(0,) * 7: _as_fmpq(c)}) if c != 0 else CTX.from_dict({}))

    @property
    def flint(self):
        return self._p

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def degree(self) -> int:
        """Total degree in z1..z6; -1 for the zero polynomial."""
        if self._p.is_zero():
            return -1
        return max(int(sum(m[:NVARS])) for m in self._p.monoms())

    def is_homogeneous(self) -> bool:
        degs = {int(sum(m[:NVARS])) for m in self._p.monoms()}
        return len(degs) <= 1

    def is_rational(self) -> bool:
        return self._p.is_zero() or self._p.degrees()[6] == 0

    def terms(self) -> dict[tuple[int, ...], CycloElem]:
        """Monomial -> coefficient, in graded-lex order (largest first)."""
        grouped: dict[tuple[int, ...], list] = {}
        for mon, c in zip(self._p.monoms(), self._p.coeffs()):
            slot = grouped.setdefault(tuple(int(e) for e in mon[:NVARS]), [0] * DIM)
            slot[int(mon[6])] = c
        return {
            mon: CycloElem(grouped[mon])
            for mon in sorted(grouped, key=graded_lex_key)
        }

    def num_terms(self) -> int:
        return len({tuple(m[:NVARS]) for m in self._p.monoms()})

    def coefficient(self, mon: Sequence[int]) -> CycloElem:
        mon = tuple(mon)
        return CycloElem([self._p[mon + (i,)] for i in range(DIM)])

    def rational_part(self) -> "MPoly":
        """The y^0 component; equals self exactly when self is rational."""
        d = {m: c for m, c in zip(self._p.monoms(), self._p.coeffs()) if m[6] == 0}
        return MPoly._wrap(CTX.from_dict(d))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, MPoly):
            return other._p
        if isinstance(other, CycloElem):
            return _cyclo_to_y(other)
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return CTX.from_dict({(0,) * 7: _as_fmpq(other)}) if other != 0 else CTX.from_dict({})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly._wrap(o - self._p)

    def __neg__(self):
        return MPoly._wrap(-self._p)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return MPoly._wrap(self._p * _as_fmpq(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly._wrap(_reduce(self._p * o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = CTX.from_dict({(0,) * 7: 1})
        base = self._p
        while n:
            if n & 1:
                result = _reduce(result * base)
            n >>= 1
            if n:
                base = _reduce(base * base)
        return MPoly._wrap(result)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(serialize(self))

    def __repr__(self):
        return f"MPoly({self.to_string()})"

    def to_string(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for mon, c in self.terms().items():
            m = "*".join(
                (f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}") for i, e in enumerate(mon) if e
            )
            if c.is_rational():
                cs = format_rational(c.rational_value()).removesuffix("/1")
            else:
                cs = f"({c!r})"
            if m and cs in ("1", "-1"):
                parts.append(("-" if cs == "-1" else "") + m)
            else:
                parts.append(f"{cs}*{m}" if m else cs)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- group action and evaluation ---------------------------------------

    def substitute_linear(self, M) -> "MPoly":
        return substitute_linear(self, M)

    def evaluate(self, point) -> CycloElem:
        return evaluate(self, point)


ZCTX = flint.fmpz_mpoly_ctx.get(VAR_NAMES, "deglex")
_ZGENS = ZCTX.gens()
_ZPHI13 = sum((_ZGENS[6] ** k for k in range(P)), ZCTX.from_dict({}))


def _density(entries: list[CycloElem]) -> int:
    return sum(sum(1 for c in e.poly.coeffs() if c != 0) for e in entries)


def _integer_form(rows: list[list[CycloElem]]):
    """Write rows = scale * (integer matrix) / den with scale a power of sqrt(13).

    Factoring out sqrt(13) keeps entries like (zeta^a - zeta^b)/sqrt(13) sparse,
    which is what makes substitution under S fast.
    """
    from .cyclofield import gauss_sqrt13

    flat = [c for row in rows for c in row]
    best = (CycloElem.rational(1), flat)
    s13 = gauss_sqrt13()
    for scale_inv, scale in ((s13, s13 / 13),):
        cand = [c * scale_inv for c in flat]
        if _density(cand) < _density(best[1]):
            best = (scale, cand)
    scale, flat = best
    den = 1
    for c in flat:
        den = flint.fmpz(den).lcm(c.poly.denom()) if not c.is_zero() else den
    den = int(den)
    int_rows = []
    for i in range(NVARS):
        row = []
        for k in range(NVARS):
            row.append([int(x * den) for x in flat[NVARS * i + k].poly.coeffs()])
        int_rows.append(row)
    return scale, den, int_rows


def _homogeneous_parts(p) -> dict[int, dict]:
    parts: dict[int, dict] = {}
    for mon, c in zip(p.monoms(), p.coeffs()):
        parts.setdefault(int(sum(mon[:NVARS])), {})[mon] = c
    return parts


def substitute_linear(p: MPoly, M) -> MPoly:
    """Return x -> p(M x); M is a GMatrix or any 6x6 nested sequence of CycloElem."""
    rows = M.rows() if hasattr(M, "rows") else M
    rows = [[c if isinstance(c, CycloElem) else CycloElem.rational(c) for c in row] for row in rows]
    if p.is_zero():
        return p
    scale, den, int_rows = _integer_form(rows)
    y = _ZGENS[6]
    images = []
    for i in range(NVARS):
        d = {}
        for k in range(NVARS):
            for j, a in enumerate(int_rows[i][k]):
                if a:
                    e = [0] * 7
                    e[k], e[6] = 1, j
                    d[tuple(e)] = a
        images.append(ZCTX.from_dict(d))
    out = CTX.from_dict({})
    for deg, terms in _homogeneous_parts(p.flint).items():
        qden = 1
        for c in terms.values():
            qden = int(flint.fmpz(qden).lcm(c.q))
        pz = ZCTX.from_dict({m: int(c * qden) for m, c in terms.items()})
        img = pz.compose(*images, y)
        if img.degrees()[6] >= DIM:
            img = divmod(img, _ZPHI13)[1]
        factor = (scale * flint.fmpq(1, den)) ** deg * flint.fmpq(1, qden)
        part = CTX.from_dict({m: flint.fmpq(int(c)) for m, c in zip(img.monoms(), img.coeffs())})
        out = out + part * _cyclo_to_y(factor)
    return MPoly._wrap(_reduce(out))


def evaluate(p: MPoly, point: Sequence) -> CycloElem:
    """Exact value of p at a point of Q(zeta)^6."""
    if len(point) != NVARS:
        raise ValueError("point must have six coordinates")
    vals = []
    for v in point:
        if not isinstance(v, CycloElem):
            v = CycloElem.rational(v)
        vals.append(_cyclo_to_y(v))
    if p.is_zero():
        return CycloElem()
    out = _reduce(p.flint.compose(*vals, Y))
    cs = [0] * DIM
    for mon, c in zip(out.monoms(), out.coeffs()):
        cs[int(mon[6])] = c
    return CycloElem(cs)


def evaluate_rational(p: MPoly, point: Sequence) -> Fraction:
    """Fast path for a rational polynomial at a rational point."""
    if not p.is_rational():
        raise ValueError("polynomial has cyclotomic coefficients")
    vals = [_as_fmpq(v) for v in point] + [flint.fmpq(0)]
    return to_fraction(p.flint(*vals)) if not p.is_zero() else Fraction(0)


def variables() -> tuple[MPoly, ...]:
    return tuple(MPoly.var(i) for i in range(1, NVARS + 1))


# -- serialization ------------------------------------------------------------


def serialize(p: MPoly) -> bytes:
    """Canonical "MPOLY v1" text, UTF-8 encoded."""
    terms = p.terms()
    lines = [f"{MPOLY_HEADER} {NVARS} {len(terms)}"]
    for mon, c in terms.items():
        lines.append(" ".join(str(e) for e in mon) + " " + c.to_text())
    return ("\n".join(lines) + "\n").encode("utf-8")


def deserialize(data: bytes | str) -> MPoly:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty MPOLY stream")
    head = lines[0].split()
    if len(head) != 4 or " ".join(head[:2]) != MPOLY_HEADER:
        raise ValueError(f"bad MPOLY header {lines[0]!r}")
    nvars, count = int(head[2]), int(head[3])
    if nvars != NVARS:
        raise ValueError(f"expected {NVARS} variables, header says {nvars}")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != count:
        raise ValueError(f"header announces {count} terms, found {len(body)}")
    d = {}
    for ln in body:
        fields = ln.split()
        if len(fields) != NVARS + DIM:
            raise ValueError(f"malformed term line {ln!r}")
        mon = tuple(int(e) for e in fields[:NVARS])
        if min(mon) < 0:
            raise ValueError(f"negative exponent in {ln!r}")
        for i, s in enumerate(fields[NVARS:]):
            q = parse_rational(s)
            if q != 0:
                d[mon + (i,)] = q
    return MPoly._wrap(CTX.from_dict(d))
