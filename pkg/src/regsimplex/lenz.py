"""Extremal point configurations on orthogonal circles.

Builds the even-dimension construction (r orthogonal unit circles carrying
dodecagon copies plus a carefully ordered remainder), the odd-dimension
skeleton (r-1 circles and one 2-sphere), and the case-analysis partition
that maximizes the triangle count.

Positions on a circle are "ticks": residues modulo N, angle 2*pi*tick/N.
All moduli are multiples of 12 so the dodecagon chords live at tick
differences N/12 * {1..6}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .exactnum import Quad3, cos30_table, sin30_table, rational_to_str, rational_from_str
from .geometry import Point, PointSet

#: remainder fill order v1,v4,v7,v10,v2,v5,v8,v11,v3,v6,v9,v12 (0-indexed)
REMAINDER_ORDER = (0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8, 11)


@dataclass(frozen=True)
class Component:
    """One circle (or 2-sphere) of a configuration."""

    kind: str  # "circle" or "sphere2"
    modulus: int
    ticks: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("circle", "sphere2"):
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.modulus % 12 != 0:
            raise ValueError("modulus must be divisible by 12")
        if len(set(t % self.modulus for t in self.ticks)) != len(self.ticks):
            raise ValueError("ticks must be distinct modulo the modulus")

    @property
    def size(self) -> int:
        return len(self.ticks)


@dataclass(frozen=True)
class CircleConfig:
    """r mutually orthogonal components with a common center and radius.

    Component i occupies ambient coordinates (2i, 2i+1); a trailing sphere2
    component occupies three coordinates, its points lying on the great
    circle of the first two.
    """

    ambient_dim: int
    radius_sq: Fraction
    components: tuple[Component, ...]

    @property
    def n(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def r(self) -> int:
        return len(self.components)

    def labeled_points(self) -> list[tuple[int, int]]:
        """All points as (component index, tick), in deterministic order."""
        return [(i, t) for i, c in enumerate(self.components) for t in c.ticks]


def theorem12_partition(n: int, r: int) -> tuple[int, ...]:
    """The case-selected partition (n_1,...,n_r) maximizing the triangle count.

    p is the remainder of n modulo 2r; the four cases split on p < r and on
    the parity of p.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if n < r:
        raise ValueError("need n >= r")
    q = n // r
    p = n % (2 * r)
    if p < r and p % 2 == 0:
        part = (q,) * (r - p // 2) + (q + 2,) * (p // 2)
    elif p < r:
        part = (q,) * (r - (p + 1) // 2) + (q + 1,) + (q + 2,) * ((p - 1) // 2)
    elif p % 2 == 0:
        part = (q - 1,) * (r - p // 2) + (q + 1,) * (p // 2)
    else:
        part = (q - 1,) * (r - (p + 1) // 2) + (q,) + (q + 1,) * ((p - 1) // 2)
    assert sum(part) == n
    return part


def place_on_circle(n_i: int) -> tuple[int, tuple[int, ...]]:
    """Tick placement of n_i points: full dodecagon copies plus a remainder.

    With m = max(1, ceil(n_i/12)) the modulus is N = 12m and copy j of the
    dodecagon occupies ticks {j + c*m : c in 0..11}.  Distinct copies are
    offset by less than m ticks, so no cross-copy chord lands on a quarter
    (N/4 = 3m) or third (N/3 = 4m) of the circle.  The remainder fills one
    further copy in the order v1,v4,v7,v10,v2,...
    """
    if n_i < 0:
        raise ValueError("negative point count")
    m = max(1, ceil(n_i / 12))
    N = 12 * m
    full = n_i // 12
    ticks = [j + c * m for j in range(full) for c in range(12)]
    rem = n_i - 12 * full
    ticks += [full + c * m for c in REMAINDER_ORDER[:rem]]
    return N, tuple(sorted(ticks))


def build_even_config(n: int, r: int, partition: tuple[int, ...]) -> CircleConfig:
    """r orthogonal unit circles in R^{2r} with the standard placement."""
    if r < 3:
        raise ValueError("need r >= 3")
    if len(partition) != r or sum(partition) != n:
        raise ValueError("partition must have r entries summing to n")
    comps = []
    for n_i in partition:
        N, ticks = place_on_circle(n_i)
        comps.append(Component("circle", N, ticks))
    return CircleConfig(ambient_dim=2 * r, radius_sq=Fraction(1), components=tuple(comps))


def build_odd_config(n: int, r: int) -> CircleConfig:
    """r-1 circles plus one 2-sphere in R^{2r+1}, points split evenly.

    Larger classes go to the lowest-indexed components.  Sphere points sit
    on a designated great circle, so tick arithmetic applies unchanged; the
    denser sphere packings known from repeated-distance constructions are
    not reproduced here.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if n < 0:
        raise ValueError("negative point count")
    base, extra = divmod(n, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    comps = []
    for i, n_i in enumerate(sizes):
        N, ticks = place_on_circle(n_i)
        kind = "sphere2" if i == r - 1 else "circle"
        comps.append(Component(kind, N, ticks))
    return CircleConfig(ambient_dim=2 * r + 1, radius_sq=Fraction(1), components=tuple(comps))


def embed_config(config: CircleConfig) -> PointSet:
    """Exact coordinates for a configuration whose ticks are 30-degree multiples.

    Tick t on modulus N maps to the angle step 12*t/N, which must be an
    integer for coordinates to stay in Q(rt3); placements with more than one
    dodecagon copy per circle are therefore not embeddable.
    """
    zero = Quad3.of(0)
    pts = []
    coord = 0
    for comp in config.components:
        width = 3 if comp.kind == "sphere2" else 2
        if coord + width > config.ambient_dim:
            raise ValueError("components exceed ambient dimension")
        for t in comp.ticks:
            if (12 * t) % comp.modulus != 0:
                raise ValueError(
                    "tick is not a multiple of 30 degrees; cannot embed exactly"
                )
            step = (12 * t // comp.modulus) % 12
            coords = [zero] * config.ambient_dim
            coords[coord] = cos30_table(step)
            coords[coord + 1] = sin30_table(step)
            pts.append(Point(tuple(coords)))
        coord += width
    if config.radius_sq != 1:
        raise ValueError("embedding assumes unit radius")
    return PointSet(dim=config.ambient_dim, points=tuple(pts))


def config_to_json(config: CircleConfig) -> dict:
    return {
        "ambient_dim": config.ambient_dim,
        "radius_sq": rational_to_str(config.radius_sq),
        "components": [
            {"kind": c.kind, "modulus": c.modulus, "ticks": sorted(c.ticks)}
            for c in config.components
        ],
    }


def config_from_json(obj: dict) -> CircleConfig:
    return CircleConfig(
        ambient_dim=obj["ambient_dim"],
        radius_sq=rational_from_str(obj["radius_sq"]),
        components=tuple(
            Component(c["kind"], c["modulus"], tuple(c["ticks"]))
            for c in obj["components"]
        ),
    )
