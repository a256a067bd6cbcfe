"""PGL(2, p) acting on the projective line PL(F_p).

Points of the line are the integers ``0 .. p``; the index ``p`` is the point
at infinity. Matrices are kept as canonical 4-tuples ``(a, b, c, d)`` of
residues read row-major, scaled so the first nonzero entry is 1, which makes
equality and hashing agree with equality in PGL.

Permutation composition is left to right: ``compose(s, t)`` applies ``s``
first and then ``t``. The coset-diagram product ``xy`` therefore means
"x then y", which as a matrix acting on column vectors is ``Y @ X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterator, Sequence

from .errors import DomainError, NoOrderLElement, OrderOverflow
from .fieldcore import FieldElement, ModulusLike, PrimeModulus, as_modulus

Mat = tuple[int, int, int, int]
Perm = tuple[int, ...]


def canonical(m: Sequence[int], p: int) -> Mat:
    a, b, c, d = (x % p for x in m)
    for lead in (a, b, c, d):
        if lead:
            s = pow(lead, -1, p)
            return (a * s % p, b * s % p, c * s % p, d * s % p)
    raise DomainError("zero matrix")


def mat_mul(m: Mat, n: Mat, p: int) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def mat_det(m: Mat, p: int) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % p


def mat_trace(m: Mat, p: int) -> int:
    return (m[0] + m[3]) % p


def is_scalar(m: Mat, p: int) -> bool:
    return m[1] % p == 0 and m[2] % p == 0 and (m[0] - m[3]) % p == 0


@dataclass(frozen=True)
class PglElement:
    """A class of invertible 2x2 matrices modulo scalars."""

    entries: Mat
    p: int

    def __post_init__(self):
        m = canonical(self.entries, self.p)
        if mat_det(m, self.p) == 0:
            raise DomainError("singular matrix is not in PGL(2, p)")
        object.__setattr__(self, "entries", m)

    @classmethod
    def from_rows(cls, rows, p: ModulusLike) -> "PglElement":
        (a, b), (c, d) = rows
        return cls((int(a), int(b), int(c), int(d)), int(as_modulus(p)))

    @classmethod
    def identity(cls, p: ModulusLike) -> "PglElement":
        return cls((1, 0, 0, 1), int(p))

    @property
    def modulus(self) -> PrimeModulus:
        return PrimeModulus(self.p)

    def __matmul__(self, other: "PglElement") -> "PglElement":
        if other.p != self.p:
            raise DomainError("mixed moduli")
        return PglElement(mat_mul(self.entries, other.entries, self.p), self.p)

    def __pow__(self, n: int) -> "PglElement":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = (1, 0, 0, 1), self.entries
        while n:
            if n & 1:
                out = mat_mul(out, base, self.p)
            base = mat_mul(base, base, self.p)
            n >>= 1
        return PglElement(out, self.p)

    def inverse(self) -> "PglElement":
        a, b, c, d = self.entries
        return PglElement((d, -b, -c, a), self.p)

    def trace(self) -> FieldElement:
        return self.modulus(mat_trace(self.entries, self.p))

    def det(self) -> FieldElement:
        return self.modulus(mat_det(self.entries, self.p))

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def rows(self) -> list[list[int]]:
        a, b, c, d = self.entries
        return [[a, b], [c, d]]

    def __repr__(self):
        a, b, c, d = self.entries
        return f"PGL[[{a}, {b}], [{c}, {d}]] mod {self.p}"


def apply_int(m: Mat, z: int, p: int) -> int:
    """Image of point index ``z`` (``p`` is infinity) under z -> (az+b)/(cz+d)."""
    a, b, c, d = m
    if z == p:
        return a * pow(c, -1, p) % p if c % p else p
    den = (c * z + d) % p
    if den == 0:
        return p
    return (a * z + b) * pow(den, -1, p) % p


def apply_lft(m: PglElement, pt: int) -> int:
    if not 0 <= pt <= m.p:
        raise DomainError(f"point {pt} not on PL(F_{m.p})")
    return apply_int(m.entries, pt, m.p)


def permutation_of(m: Mat, p: int) -> Perm:
    return tuple(apply_int(m, z, p) for z in range(p + 1))


def lft_permutation(m: PglElement) -> Perm:
    return permutation_of(m.entries, m.p)


def compose(first: Perm, then: Perm) -> Perm:
    return tuple(then[i] for i in first)


def cycles(perm: Perm) -> list[list[int]]:
    """Cycle decomposition, each cycle starting at its smallest point,
    cycles ordered by that point. Fixed points are 1-cycles."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc, j = [], start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def perm_order(perm: Perm) -> int:
    return lcm(*(len(c) for c in cycles(perm)))


def point_label(i: int, p: int) -> str:
    return "inf" if i == p else str(i)


def format_cycles(perm: Perm, p: int, *, fixed: bool = False) -> str:
    parts = []
    for c in cycles(perm):
        if len(c) == 1 and not fixed:
            continue
        parts.append("(" + ",".join(point_label(i, p) for i in c) + ")")
    return "".join(parts) or "()"


def order_int(m: Mat, p: int) -> int:
    power = m
    for n in range(1, p + 2):
        if is_scalar(power, p):
            return n
        power = mat_mul(power, m, p)
    raise OrderOverflow(f"no power up to {p + 1} of {m} is scalar")


def pgl_order(m: PglElement) -> int:
    """Smallest n with M^n scalar, by repeated multiplication."""
    return order_int(m.entries, m.p)


def theta_int(m: Mat, p: int) -> int:
    return mat_trace(m, p) ** 2 * pow(mat_det(m, p), -1, p) % p


def theta_invariant(x: PglElement, y: PglElement) -> FieldElement:
    """(tr XY)^2 / det XY; unchanged by rescaling either matrix."""
    return (x @ y).modulus(theta_int((x @ y).entries, x.p))


def companion(b: int, p: int) -> Mat:
    """Determinant-one matrix with trace b."""
    return canonical((0, -1, 1, b), p)


@lru_cache(maxsize=256)
def _trace_table(p: int) -> dict[int, int]:
    """order -> smallest trace b of a determinant-one element of that order."""
    table: dict[int, int] = {}
    for b in range(p):
        table.setdefault(order_int(companion(b, p), p), b)
    return table


def find_order_trace(p: ModulusLike, l: int) -> FieldElement:
    """Smallest b for which [[0, -1], [1, b]] has order exactly l in PGL."""
    mod = as_modulus(p)
    if l < 2:
        raise DomainError("l must be >= 2")
    b = _trace_table(mod.p).get(l)
    if b is None:
        raise NoOrderLElement(f"no determinant-one element of order {l} in PGL(2, {mod.p})")
    return mod(b)


def enumerate_pgl(p: int) -> Iterator[Mat]:
    """Every element of PGL(2, p) once, as its canonical tuple."""
    for b in range(p):
        for c in range(p):
            for d in range(p):
                if (d - b * c) % p:
                    yield (1, b, c, d)
    for c in range(1, p):
        for d in range(p):
            yield (0, 1, c, d)
