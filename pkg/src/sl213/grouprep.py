"""The six-dimensional representation of SL(2,13) generated by S and T."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import flint

from .cyclofield import PHI13, CycloElem, gauss_sqrt13, zeta_combination, zeta_power
from .report import CheckResult, check

N = 6
DEFAULT_GROUP_CAP = 10_000

GTBL_HEADER = "GTBL v1"


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration exceeds its configured cap."""


class GMatrix:
    """Exact 6x6 matrix over Q(zeta_13); immutable."""

    __slots__ = ("_e", "_key")

    def __init__(self, rows: Sequence[Sequence]):
        entries = []
        for row in rows:
            if len(row) != N:
                raise ValueError("GMatrix rows must have length 6")
            for c in row:
                if not isinstance(c, CycloElem):
                    c = CycloElem.rational(c)
                entries.append(c.poly)
        if len(entries) != N * N:
            raise ValueError("GMatrix needs 6 rows")
        self._e = tuple(entries)
        self._key = None

    @classmethod
    def _wrap(cls, polys) -> "GMatrix":
        obj = object.__new__(cls)
        obj._e = tuple(polys)
        obj._key = None
        return obj

    @classmethod
    def identity(cls) -> "GMatrix":
        one, zero = flint.fmpq_poly([1]), flint.fmpq_poly([])
        return cls._wrap(one if i == j else zero for i in range(N) for j in range(N))

    @classmethod
    def diagonal(cls, entries: Sequence[CycloElem]) -> "GMatrix":
        zero = flint.fmpq_poly([])
        return cls._wrap(
            entries[i].poly if i == j else zero for i in range(N) for j in range(N)
        )

    def __getitem__(self, ij) -> CycloElem:
        i, j = ij
        return CycloElem._wrap(self._e[N * i + j])

    def rows(self) -> list[list[CycloElem]]:
        return [[CycloElem._wrap(self._e[N * i + j]) for j in range(N)] for i in range(N)]

    def key(self):
        if self._key is None:
            self._key = tuple(
                (tuple(int(c) for c in p.numer().coeffs()), int(p.denom())) for p in self._e
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self.key())

    def __neg__(self):
        return GMatrix._wrap(-p for p in self._e)

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        a, b = self._e, other._e
        out = []
        for i in range(N):
            row = a[N * i : N * i + N]
            for j in range(N):
                acc = flint.fmpq_poly([])
                for k in range(N):
                    x = row[k]
                    if x.is_zero():
                        continue
                    y = b[N * k + j]
                    if y.is_zero():
                        continue
                    acc += x * y
                out.append(acc % PHI13 if acc.degree() >= 12 else acc)
        return GMatrix._wrap(out)

    def __mul__(self, scalar):
        c = scalar if isinstance(scalar, CycloElem) else CycloElem.rational(scalar)
        return GMatrix._wrap((p * c.poly) % PHI13 for p in self._e)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GMatrix":
        if n < 0:
            raise ValueError("negative powers: use the group relations instead")
        result = GMatrix.identity()
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def apply(self, vec: Sequence) -> list[CycloElem]:
        """Matrix-vector product M x."""
        out = []
        for i in range(N):
            acc = CycloElem()
            for k in range(N):
                v = vec[k] if isinstance(vec[k], CycloElem) else CycloElem.rational(vec[k])
                acc = acc + CycloElem._wrap(self._e[N * i + k]) * v
            out.append(acc)
        return out

    def transpose(self) -> "GMatrix":
        return GMatrix._wrap(self._e[N * j + i] for i in range(N) for j in range(N))

    def is_identity(self) -> bool:
        return self == GMatrix.identity()

    def is_signed_permutation(self) -> bool:
        for i in range(N):
            nz = [p for p in self._e[N * i : N * i + N] if not p.is_zero()]
            if len(nz) != 1 or nz[0] not in (flint.fmpq_poly([1]), flint.fmpq_poly([-1])):
                return False
        return True

    def to_text_entries(self) -> list[str]:
        return [CycloElem._wrap(p).to_text() for p in self._e]

    def __repr__(self):
        return "GMatrix(" + repr(self.rows()) + ")"


# exponent pairs (a, b) for the entries zeta^a - zeta^b of sqrt(13) * (-S)
S_PATTERN = (
    ((12, 1), (10, 3), (4, 9), (5, 8), (2, 11), (6, 7)),
    ((10, 3), (4, 9), (12, 1), (2, 11), (6, 7), (5, 8)),
    ((4, 9), (12, 1), (10, 3), (6, 7), (5, 8), (2, 11)),
    ((5, 8), (2, 11), (6, 7), (1, 12), (3, 10), (9, 4)),
    ((2, 11), (6, 7), (5, 8), (3, 10), (9, 4), (1, 12)),
    ((6, 7), (5, 8), (2, 11), (9, 4), (1, 12), (3, 10)),
)
T_EXPONENTS = (7, 11, 8, 6, 2, 5)

H_EXPECTED_ROWS = (
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, -1, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (0, -1, 0, 0, 0, 0),
)

H_LIFT_EXPECTED = ((4428249, -10547030), (-11594791, 27616019))


@dataclass(frozen=True)
class Generators:
    S: GMatrix
    T: GMatrix

    @property
    def S_inv(self) -> GMatrix:
        return -self.S

    @property
    def T_inv(self) -> GMatrix:
        return self.T_power(-1)

    def T_power(self, k: int) -> GMatrix:
        return GMatrix.diagonal([zeta_power(e * k) for e in T_EXPONENTS])

    def ST(self, nu: int) -> GMatrix:
        return self.S @ self.T_power(nu)


@lru_cache(maxsize=None)
def build_generators() -> Generators:
    # -1/sqrt(13) = -sqrt(13)/13 keeps everything inside the field
    scale = -gauss_sqrt13() / 13
    rows = [
        [scale * zeta_combination([(1, a), (-1, b)]) for a, b in row] for row in S_PATTERN
    ]
    S = GMatrix(rows)
    T = GMatrix.diagonal([zeta_power(e) for e in T_EXPONENTS])
    return Generators(S, T)


def compare_matrix(M: GMatrix, target: GMatrix, label: str) -> tuple[bool, str]:
    """(ok, witness) for an exact matrix comparison; the witness names the first discrepancy."""
    if M == target:
        return True, f"{label} equals the target entrywise"
    if M == -target:
        return False, f"{label} equals the NEGATIVE of the target"
    for i in range(6):
        for j in range(6):
            if M[i, j] != target[i, j]:
                return False, f"{label} differs at entry ({i + 1},{j + 1}): {M[i, j].to_text()}"
    raise AssertionError("unreachable")  # pragma: no cover


def verify_relations(gens: Generators | None = None, label: str = "") -> list[CheckResult]:
    g = gens or build_generators()
    I = GMatrix.identity()
    S, T = g.S, g.T
    cites = ["S^2 = -I, T^13 = (ST)^3 = I"]
    out = []
    for name, M, target in (
        ("S^2 = -I", S @ S, -I),
        ("T^13 = I", T**13, I),
        ("(ST)^3 = I", (S @ T) ** 3, I),
    ):
        ok, w = compare_matrix(M, target, name.split(" = ")[0])
        out.append(check(name + label, ok, w, cites))
    return out


@dataclass
class GroupTable:
    elements: list[GMatrix]
    index: dict

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GMatrix) -> bool:
        return g.key() in self.index

    def dump(self) -> str:
        """GTBL v1 text: index followed by the 36 entries in row-major order."""
        lines = [f"{GTBL_HEADER} {self.order}"]
        for i, g in enumerate(self.elements):
            lines.append(f"{i} " + " | ".join(g.to_text_entries()))
        return "\n".join(lines) + "\n"


def generate_group(generators: Iterable[GMatrix] | None = None, cap: int = DEFAULT_GROUP_CAP) -> GroupTable:
    """Breadth-first closure of the identity under right multiplication by the generators."""
    if generators is None:
        g = build_generators()
        generators = (g.S, g.T)
    generators = list(generators)
    start = GMatrix.identity()
    elements = [start]
    index = {start.key(): 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = x @ s
            k = y.key()
            if k in index:
                continue
            if len(elements) >= cap:
                raise ResourceLimitError(f"group closure exceeded the cap of {cap} elements")
            index[k] = len(elements)
            elements.append(y)
            queue.append(y)
    return GroupTable(elements, index)


@dataclass(frozen=True)
class WordElements:
    P: GMatrix
    Q: GMatrix
    H: GMatrix


def _h_word(P, Q, mul, pw):
    # Q^5 P^2 . P^2 Q^6 P^8 . Q^5 P^2 . P^3 Q
    factors = [
        pw(Q, 5), pw(P, 2),
        pw(P, 2), pw(Q, 6), pw(P, 8),
        pw(Q, 5), pw(P, 2),
        pw(P, 3), Q,
    ]
    out = factors[0]
    for f in factors[1:]:
        out = mul(out, f)
    return out


@lru_cache(maxsize=None)
def build_word_elements(gens: Generators | None = None) -> WordElements:
    if gens is None:
        return _default_word_elements()
    g = gens
    P = g.S @ g.T_inv @ g.S
    Q = g.S @ g.T_power(3)
    H = _h_word(P, Q, lambda a, b: a @ b, lambda a, n: a**n)
    return WordElements(P, Q, H)


@lru_cache(maxsize=None)
def _default_word_elements() -> WordElements:
    return build_word_elements(build_generators())


def negated_generators() -> Generators:
    """The pair (-S, T): same group, opposite sign convention for S."""
    g = build_generators()
    return Generators(-g.S, g.T)


def expected_H() -> GMatrix:
    return GMatrix(H_EXPECTED_ROWS)


def verify_word_elements(gens: Generators | None = None, label: str = "") -> list[CheckResult]:
    g = gens or build_generators()
    w = build_word_elements(gens)
    H, P, Q, T = w.H, w.P, w.Q, g.T
    I = GMatrix.identity()
    cites = ["H = Q^5 P^2 . P^2 Q^6 P^8 . Q^5 P^2 . P^3 Q"]
    out = []
    for name, M, target in (
        ("H equals the signed permutation matrix", H, expected_H()),
        ("H^6 = I", H**6, I),
        # H is a signed permutation matrix, so its inverse is its transpose
        ("H^-1 T H = -T^4", H.transpose() @ T @ H, -g.T_power(4)),
        ("(Q^3 P^4)^3 = -I", ((Q**3) @ (P**4)) ** 3, -I),
    ):
        ok, wit = compare_matrix(M, target, name.split(" = ")[0].split(" equals")[0])
        out.append(check(name + label, ok, wit, cites))
    return out


def verify_projective_relations() -> list[CheckResult]:
    """The same relations read in PSL(2,13), where a matrix and its negative coincide."""
    g = build_generators()
    w = build_word_elements()
    I = GMatrix.identity()
    cites = ["relations modulo the centre {I, -I}"]
    out = []
    for name, M, target in (
        ("(ST)^3 = +-I", (g.S @ g.T) ** 3, I),
        ("H = +-(signed permutation matrix)", w.H, expected_H()),
        ("H^6 = +-I", w.H**6, I),
        ("H^-1 T H = +-T^4", w.H.transpose() @ g.T @ w.H, g.T_power(4)),
        ("(Q^3 P^4)^3 = +-I", ((w.Q**3) @ (w.P**4)) ** 3, I),
    ):
        ok, wit = compare_matrix(M, target, name.split(" = ")[0])
        sign_only = not ok and M == -target
        out.append(check(name, ok or sign_only, wit if ok else (wit + "; equal up to sign" if sign_only else wit), cites))
    return out


# -- 2x2 integer lift ----------------------------------------------------------


class IntMatrix2(tuple):
    """2x2 integer matrix ((a, b), (c, d))."""

    def __new__(cls, rows):
        (a, b), (c, d) = rows
        return super().__new__(cls, ((int(a), int(b)), (int(c), int(d))))

    def __matmul__(self, other):
        (a, b), (c, d) = self
        (e, f), (g, h) = other
        return IntMatrix2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def __pow__(self, n):
        out = IntMatrix2(((1, 0), (0, 1)))
        for _ in range(n):
            out = out @ self
        return out

    def det(self) -> int:
        (a, b), (c, d) = self
        return a * d - b * c


def lift_word_2x2() -> IntMatrix2:
    s = IntMatrix2(((0, -1), (1, 0)))
    t = IntMatrix2(((1, 1), (0, 1)))
    t_inv = IntMatrix2(((1, -1), (0, 1)))
    p = s @ t_inv @ s
    q = s @ t**3
    return _h_word(p, q, lambda a, b: a @ b, lambda a, n: a**n)


def verify_lift() -> list[CheckResult]:
    h = lift_word_2x2()
    cites = ["h = q^5 p^2 . p^2 q^6 p^8 . q^5 p^2 . p^3 q"]
    return [
        check("h equals the displayed integer matrix", h == H_LIFT_EXPECTED, f"h = {list(map(list, h))}", cites),
        check("h entry (1,1) = 4428249", h[0][0] == 4428249, f"h[1,1] = {h[0][0]}", cites),
        check("h off-diagonal entries are 0 mod 13", h[0][1] % 13 == 0 and h[1][0] % 13 == 0,
              f"h[1,2] mod 13 = {h[0][1] % 13}, h[2,1] mod 13 = {h[1][0] % 13}", cites),
        check("det h = 1", h.det() == 1, f"det = {h.det()}", cites),
    ]
