"""Backward substitution: from a theta value to explicit generators.

X and Y are taken in the shapes

    X = [[a, c*i], [c, -a]]        Y = [[e, f*i], [f, b - e]]

with det Y = 1, det X = -(a^2 + i c^2) = delta and tr XY = r, where
r^2 = theta * delta. The search below is deterministic so that the same
(p, l, theta) always produces byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .errors import DomainError, NoOrderLElement, OrderMismatch, SearchExhausted
from .fieldcore import FieldElement, ModulusLike, PrimeModulus, as_modulus, sqrt_int
from .pgl2 import (
    Perm,
    PglElement,
    compose,
    find_order_trace,
    lft_permutation,
    pgl_order,
    theta_invariant,
)

ThetaLike = Union[int, FieldElement]


@dataclass(frozen=True)
class ConstructionParams:
    i: FieldElement
    e: FieldElement
    f: FieldElement
    b: FieldElement
    a: FieldElement
    c: FieldElement
    delta: FieldElement
    r: FieldElement

    def x_matrix(self) -> PglElement:
        a, c, i = self.a, self.c, self.i
        return PglElement.from_rows([[a, c * i], [c, -a]], a.modulus)

    def y_matrix(self) -> PglElement:
        e, f, i, b = self.e, self.f, self.i, self.b
        return PglElement.from_rows([[e, f * i], [f, b - e]], e.modulus)

    def x_rows(self) -> list[list[int]]:
        """X before projective scaling, so det X = delta."""
        a, c, i = self.a, self.c, self.i
        return [[int(a), int(c * i)], [int(c), int(-a)]]

    def y_rows(self) -> list[list[int]]:
        e, f, i, b = self.e, self.f, self.i, self.b
        return [[int(e), int(f * i)], [int(f), int(b - e)]]

    def as_ints(self) -> dict[str, int]:
        return {name: int(getattr(self, name)) for name in
                ("i", "e", "f", "b", "a", "c", "delta", "r")}


@dataclass(frozen=True)
class GeneratorPair:
    p: int
    l: int
    k: int  # actual PGL order of XY
    theta: FieldElement
    params: ConstructionParams
    X: PglElement
    Y: PglElement
    xperm: Perm = field(repr=False)
    yperm: Perm = field(repr=False)
    xyperm: Perm = field(repr=False)

    @classmethod
    def from_params(cls, params: ConstructionParams, l: int,
                    theta: Optional[ThetaLike] = None) -> "GeneratorPair":
        X, Y = params.x_matrix(), params.y_matrix()
        xperm, yperm = lft_permutation(X), lft_permutation(Y)
        mod = params.a.modulus
        return cls(
            p=mod.p,
            l=l,
            k=pgl_order(Y @ X),
            theta=theta_invariant(X, Y) if theta is None else mod(int(theta)),
            params=params,
            X=X,
            Y=Y,
            xperm=xperm,
            yperm=yperm,
            xyperm=compose(xperm, yperm),
        )


def choose_delta_r(theta: ThetaLike, p: ModulusLike) -> tuple[FieldElement, FieldElement]:
    mod = as_modulus(p)
    t = int(theta) % mod.p
    if t == 0:
        raise DomainError("theta = 0 gives an involution for xy")
    s = sqrt_int(t, mod.p)
    if s is not None:
        return mod(1), mod(s)
    return mod(t), mod(t)


def _solve_ac(u: int, v: int, i: int, r: int, delta: int, p: int) -> Iterator[tuple[int, int]]:
    """Solutions (a, c) of a*u + c*v = r, a^2 + i*c^2 = -delta, smaller c first."""
    if u:
        inv_u = pow(u, -1, p)
        qa = (v * v + i * u * u) % p
        qb = (-2 * r * v) % p
        qc = (r * r + delta * u * u) % p
        if qa:
            s = sqrt_int(qb * qb - 4 * qa * qc, p)
            if s is None:
                return
            inv = pow(2 * qa, -1, p)
            cs = sorted({(-qb + s) * inv % p, (-qb - s) * inv % p})
        elif qb:
            cs = [(-qc) * pow(qb, -1, p) % p]
        else:
            cs = [0] if qc == 0 else []
        for c in cs:
            yield (r - v * c) * inv_u % p, c
    elif v:
        c = r * pow(v, -1, p) % p
        a = sqrt_int(-delta - i * c * c, p)
        if a is not None:
            yield a, c


def _search(p: int, b: int, delta: int, r: int) -> Optional[tuple[int, int, int, int, int]]:
    for i in range(1, p):
        inv_i = pow(i, -1, p)
        for e in range(p):
            f = sqrt_int((e * b - e * e - 1) * inv_i, p)
            if f is None:
                continue
            if f == 0 and (2 * e - b) % p == 0:
                continue  # Y would be scalar
            u, v = (2 * e - b) % p, 2 * i * f % p
            for a, c in _solve_ac(u, v, i, r, delta, p):
                return i, e, f, a, c
    return None


def solve_generators(p: ModulusLike, l: int, theta: ThetaLike) -> GeneratorPair:
    mod = as_modulus(p)
    if l < 3:
        raise DomainError("l must be >= 3")
    b = find_order_trace(mod, l)
    delta, r = choose_delta_r(theta, mod)
    hit = _search(mod.p, int(b), int(delta), int(r))
    if hit is None:
        raise SearchExhausted(f"no (i, e, f, a, c) for p={mod.p}, l={l}, theta={int(theta)}")
    i, e, f, a, c = hit
    params = ConstructionParams(
        i=mod(i), e=mod(e), f=mod(f), b=b, a=mod(a), c=mod(c), delta=delta, r=r)
    pair = GeneratorPair.from_params(params, l, theta)
    report = verify_pair(pair)
    if not report.ok:
        raise OrderMismatch(f"constructed pair failed: {report.failures()}")
    return pair


def valid_ls(p: ModulusLike, lmax: int, lmin: int = 3) -> list[int]:
    """Orders l in [lmin, lmax] realisable by a determinant-one y."""
    out = []
    for l in range(lmin, lmax + 1):
        try:
            find_order_trace(p, l)
        except NoOrderLElement:
            continue
        out.append(l)
    return out


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def __str__(self):
        return "\n".join(
            f"{'PASS' if c.ok else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail else "")
            for c in self.checks)


def verify_pair(pair: GeneratorPair) -> VerificationReport:
    """Recheck every shape constraint, all orders, theta and the permutations."""
    P = pair.params
    a, c, e, f, i, b, delta, r = P.a, P.c, P.e, P.f, P.i, P.b, P.delta, P.r
    X, Y = pair.X, pair.Y
    ox, oy, oxy = pgl_order(X), pgl_order(Y), pgl_order(Y @ X)
    th = theta_invariant(X, Y)
    checks = [
        Check("i!=0", i != 0),
        Check("delta!=0", delta != 0),
        Check("det X = delta", -(a * a + i * c * c) == delta),
        Check("det Y = 1", 1 + i * f * f + e * e - e * b == 0),
        Check("trace XY = r", a * (2 * e - b) + 2 * i * c * f == r),
        Check("r^2 = theta*delta", r * r == pair.theta * delta),
        Check("X matches params", P.x_matrix() == X),
        Check("Y matches params", P.y_matrix() == Y),
        Check("order(X)=2", ox == 2, f"got {ox}"),
        Check(f"order(Y)={pair.l}", oy == pair.l, f"got {oy}"),
        Check(f"order(XY)={pair.k}", oxy == pair.k, f"got {oxy}"),
        Check("theta(X,Y)=theta", th == pair.theta, f"got {int(th)}"),
        Check("permutations", pair.xperm == lft_permutation(X)
              and pair.yperm == lft_permutation(Y)
              and pair.xyperm == compose(pair.xperm, pair.yperm)),
    ]
    return VerificationReport(checks)


def example_pair() -> GeneratorPair:
    """The worked p=31, l=4, theta=7 pair with i=3, b=8."""
    mod = PrimeModulus(31)
    params = ConstructionParams(
        i=mod(3), e=mod(0), f=mod(14), b=mod(8), a=mod(3), c=mod(10),
        delta=mod(1), r=mod(10))
    return GeneratorPair.from_params(params, 4, 7)
