"""Coset diagrams of a generator pair, the januarial test, genus, and exports.

Three genus routes are kept side by side so they can be checked against one
another: Higman's count g = (2 - (v - e + f)) / 2 from orbit numbers, the
same quantity rewritten in terms of fixed points of x, y and xy, and its
januarial specialisation (k = (p+1)/2, xy fixed-point free).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .construct import GeneratorPair, solve_generators
from .errors import DisconnectedError, NonIntegralGenus, ParityError
from .fieldcore import ModulusLike, as_modulus
from .gk import januarial_thetas
from .pgl2 import cycles, point_label


@dataclass(frozen=True)
class CosetDiagram:
    p: int
    l: int
    k: int
    theta: int
    y_cycles: list[list[int]] = field(repr=False)
    x_edges: list[tuple[int, int]] = field(repr=False)
    x_fixed: list[int] = field(repr=False)
    xy_orbits: list[list[int]] = field(repr=False)
    eta_x: int
    eta_y: int
    eta_xy: int
    components: list[list[int]] = field(repr=False)

    @property
    def n_points(self) -> int:
        return self.p + 1

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def y_fixed(self) -> list[int]:
        return [c[0] for c in self.y_cycles if len(c) == 1]

    def vef(self) -> tuple[int, int, int]:
        return len(self.y_cycles), len(self.x_edges), len(self.xy_orbits)

    def component_vef(self) -> list[tuple[int, int, int]]:
        """(v, e, f) restricted to each connected component."""
        where = {pt: n for n, comp in enumerate(self.components) for pt in comp}
        counts = [[0, 0, 0] for _ in self.components]
        for c in self.y_cycles:
            counts[where[c[0]]][0] += 1
        for a, _ in self.x_edges:
            counts[where[a]][1] += 1
        for c in self.xy_orbits:
            counts[where[c[0]]][2] += 1
        return [tuple(c) for c in counts]


def _components(n: int, y_cycles, x_edges) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for cyc in y_cycles:
        for a, b in zip(cyc, cyc[1:]):
            union(a, b)
    for a, b in x_edges:
        union(a, b)
    groups: dict[int, list[int]] = {}
    for pt in range(n):
        groups.setdefault(find(pt), []).append(pt)
    return sorted(groups.values())


def build_diagram(pair: GeneratorPair) -> CosetDiagram:
    y_cycles = cycles(pair.yperm)
    x_cycles = cycles(pair.xperm)
    xy_orbits = cycles(pair.xyperm)
    x_edges = [(c[0], c[1]) for c in x_cycles if len(c) == 2]
    x_fixed = [c[0] for c in x_cycles if len(c) == 1]
    return CosetDiagram(
        p=pair.p,
        l=pair.l,
        k=pair.k,
        theta=int(pair.theta),
        y_cycles=y_cycles,
        x_edges=x_edges,
        x_fixed=x_fixed,
        xy_orbits=xy_orbits,
        eta_x=len(x_fixed),
        eta_y=sum(1 for c in y_cycles if len(c) == 1),
        eta_xy=sum(1 for c in xy_orbits if len(c) == 1),
        components=_components(pair.p + 1, y_cycles, x_edges),
    )


def is_januarial(d: CosetDiagram) -> bool:
    half = (d.p + 1) // 2
    return len(d.xy_orbits) == 2 and all(len(o) == half for o in d.xy_orbits)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralGenus(f"{what} = {value} is not an integer")
    return int(value)


def genus_higman(v: int, e: int, f: int, *, connected: bool = True) -> int:
    """g = (2 - (v - e + f)) / 2 for y-cycles v, x-edges e, xy-orbits f."""
    if not connected:
        raise DisconnectedError("genus is only defined for a connected diagram")
    chi = v - e + f
    if chi % 2:
        raise ParityError(f"v - e + f = {chi} is odd")
    return (2 - chi) // 2


def genus_fixedpoint(p: int, k: int, l: int, eta_x: int, eta_y: int, eta_xy: int) -> int:
    n = p + 1
    bracket = ((2 * (k + l) - k * l) * n
               + k * l * (2 * (eta_y + eta_xy) + eta_x)
               - 2 * (k * eta_y + l * eta_xy))
    return _integral(1 - Fraction(bracket, 4 * k * l), "fixed-point genus")


def genus_januarial(p: int, l: int, eta_x: int, eta_y: int) -> int:
    n = p + 1
    g = -Fraction(n - eta_y, 2 * l) + Fraction(n - 2 * eta_y - eta_x, 4)
    return _integral(g, "januarial genus")


@dataclass(frozen=True)
class GenusBreakdown:
    v: int
    e: int
    f: int
    genus_higman: Optional[int]
    genus_fixedpoint: int
    genus_januarial: Optional[int] = None
    component_vef: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def genus(self) -> Optional[int]:
        return self.genus_higman

    def agree(self) -> bool:
        values = {self.genus_fixedpoint, self.genus_higman, self.genus_januarial} - {None}
        return len(values) == 1


def genus_breakdown(d: CosetDiagram) -> GenusBreakdown:
    v, e, f = d.vef()
    higman = genus_higman(v, e, f) if d.connected else None
    fixed = genus_fixedpoint(d.p, d.k, d.l, d.eta_x, d.eta_y, d.eta_xy)
    jan = genus_januarial(d.p, d.l, d.eta_x, d.eta_y) if is_januarial(d) else None
    return GenusBreakdown(v, e, f, higman, fixed, jan,
                          [] if d.connected else d.component_vef())


def orbit_labels(d: CosetDiagram) -> list[int]:
    """0/1 per point for the two xy-orbits of a januarial, else -1 everywhere."""
    labels = [-1] * d.n_points
    if is_januarial(d):
        first, second = sorted(d.xy_orbits, key=min)
        for pt in first:
            labels[pt] = 0
        for pt in second:
            labels[pt] = 1
    return labels


def export_dot(d: CosetDiagram) -> str:
    p = d.p
    name = lambda i: "v" + point_label(i, p)
    labels = orbit_labels(d)
    x_fixed, y_fixed = set(d.x_fixed), set(d.y_fixed)
    lines = [f"digraph D_{d.theta}_{p}_{d.l} {{"]
    for i in range(p + 1):
        attrs = [f'label="{point_label(i, p)}"', f'orbit="{labels[i]}"']
        if i in x_fixed:
            attrs.append('xfix="1"')
        if i in y_fixed:
            attrs.append('yfix="1"')
        lines.append(f"  {name(i)} [{', '.join(attrs)}];")
    edges = []
    for cyc in d.y_cycles:
        if len(cyc) > 1:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                edges.append((a, b, 'rel="y"'))
    for a, b in d.x_edges:
        edges.append((min(a, b), max(a, b), 'rel="x", dir="none"'))
    for a, b, attrs in sorted(edges):
        lines.append(f"  {name(a)} -> {name(b)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_document(d: CosetDiagram, pair: GeneratorPair) -> dict:
    g = genus_breakdown(d)
    return {
        "p": d.p,
        "l": d.l,
        "k": d.k,
        "theta": d.theta,
        "delta": int(pair.params.delta),
        "r": int(pair.params.r),
        "X": pair.params.x_rows(),
        "Y": pair.params.y_rows(),
        "eta_x": d.eta_x,
        "eta_y": d.eta_y,
        "eta_xy": d.eta_xy,
        "xy_orbits": [list(o) for o in d.xy_orbits],
        "genus": g.genus,
        "is_januarial": is_januarial(d),
    }


def export_json(d: CosetDiagram, pair: GeneratorPair) -> str:
    return json.dumps(diagram_document(d, pair)) + "\n"


CSV_HEADER = ("p", "l", "theta", "eta_x", "eta_y", "genus")


def census(p: ModulusLike, l: int) -> list[tuple[int, int, int, int, int, Optional[int]]]:
    """One row per januarial theta for the given p and l, sorted by theta.

    The genus is None when the diagram is disconnected.
    """
    mod = as_modulus(p)
    rows = []
    for theta in januarial_thetas(mod):
        d = build_diagram(solve_generators(mod, l, theta))
        g = genus_breakdown(d)
        rows.append((mod.p, l, theta, d.eta_x, d.eta_y, g.genus_higman))
    return rows
