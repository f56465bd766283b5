"""Hexagonal cells, tribones and triangular regions.

Cells ("black dots") are the monomials ``a * x^u * y^v`` of the abc-ring
``Z[a,b,c]/<abc-1>`` with ``x = a c^2``, ``y = a^2 b``, ``z = b^2 c``.  The
pair ``(u, v)`` is the *chart* coordinate; it is unique for every cell.
The 120 degree rotation ``a -> b -> c -> a`` sends ``x -> y -> z -> x``.

User-facing cells use sector coordinates ``(p, q, sector)``: the cell
``rho^sector(a x^p y^q)`` with ``p, q >= 0``.  The three sectors partition
the lattice.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .polynomial import ABC, XY, Polynomial, normalize_quotient

ABC_RELATION = (1, 1, 1)


class FixedCellError(ValueError):
    """Raised for T_N with N = 1 (mod 3): the rotation fixes a hexagon of the region."""

    def __init__(self, n: int):
        super().__init__(
            f"T_{n} has N = 1 (mod 3): there is a hexagon in T_N fixed by the "
            "120 degree rotation, so no rotation-symmetric tiling question is posed")
        self.n = n


# ---------------------------------------------------------------------------
# chart arithmetic
# ---------------------------------------------------------------------------

def rotate_uv(u: int, v: int) -> tuple:
    """Image of the cell ``a x^u y^v`` under ``a -> b -> c``."""
    return -v - 1, u - v - 1


def uv_to_abc(u: int, v: int) -> tuple:
    e = (1 + u + 2 * v, v, 2 * u)
    m = min(e)
    return tuple(x - m for x in e)


def abc_to_uv(exps) -> tuple:
    ea, eb, ec = exps
    s = ea - eb - 1       # u + v
    t = ec - eb           # 2u - v
    if (s + t) % 3:
        raise ValueError(f"monomial a^{ea} b^{eb} c^{ec} is not a cell (grading != 1)")
    u = (s + t) // 3
    return u, s - u


def _sector_of(u: int, v: int) -> tuple:
    if u >= 0 and v >= 0:
        return u, v, 0
    if u < 0 and v >= u:
        return v - u, -u - 1, 1
    return -v - 1, u - v - 1, 2


@dataclass(frozen=True, order=True)
class Cell:
    p: int
    q: int
    sector: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.sector not in (0, 1, 2):
            raise ValueError(f"invalid cell {self.p, self.q, self.sector}")

    @property
    def uv(self) -> tuple:
        u, v = self.p, self.q
        for _ in range(self.sector):
            u, v = rotate_uv(u, v)
        return u, v

    @classmethod
    def from_uv(cls, u: int, v: int) -> "Cell":
        return cls(*_sector_of(u, v))

    @classmethod
    def from_monomial(cls, exps) -> "Cell":
        return cls.from_uv(*abc_to_uv(exps))

    def monomial(self) -> tuple:
        return uv_to_abc(*self.uv)

    def rotate(self, times: int = 1) -> "Cell":
        return Cell(self.p, self.q, (self.sector + times) % 3)

    def to_json(self) -> list:
        return [self.p, self.q, self.sector]

    @classmethod
    def from_json(cls, data) -> "Cell":
        p, q, s = data
        return cls(int(p), int(q), int(s))


def grading(m) -> int:
    """Degree mod 3 of an abc-monomial (exponent tuple or one-term polynomial)."""
    if isinstance(m, Polynomial):
        degs = {sum(k) % 3 for k in m.monomials()}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous for the mod-3 grading")
        return degs.pop()
    return sum(m) % 3


def rotate120(f: Polynomial, times: int = 1) -> Polynomial:
    """Cyclic substitution ``a -> b -> c -> a`` (or ``x -> y -> z``) on a 3-variable ring."""
    if len(f.varset) != 3:
        raise ValueError("rotate120 needs a ring in three variables")
    times %= 3
    if not times:
        return normalize_quotient(f, ABC_RELATION)

    def shift(m):
        for _ in range(times):
            m = (m[2], m[0], m[1])
        return m

    return normalize_quotient(f.map_monomials(shift), ABC_RELATION)


def cells_poly(cells, varset=ABC) -> Polynomial:
    """abc-polynomial of a cell multiset (iterable of cells or ``{cell: weight}``)."""
    weights = cells if isinstance(cells, dict) else _count(cells)
    terms: dict = {}
    for cell, w in weights.items():
        m = cell.monomial()
        terms[m] = terms.get(m, 0) + w
    return Polynomial(terms, varset)


def poly_cells(f: Polynomial) -> dict:
    """Inverse of :func:`cells_poly`: ``{Cell: weight}``."""
    return {Cell.from_monomial(m): c for m, c in f.items()}


def _count(cells) -> dict:
    out: dict = {}
    for c in cells:
        out[c] = out.get(c, 0) + 1
    return out


def chart_poly(f: Polynomial, shift=(0, 0)) -> Polynomial:
    """Push a grading-1 abc-polynomial to ``Z[x, y]`` by dividing by ``a``.

    ``shift`` is added to every chart coordinate; the result must have
    non-negative exponents.
    """
    terms: dict = {}
    for m, c in f.items():
        u, v = abc_to_uv(m)
        key = (u + shift[0], v + shift[1])
        if key[0] < 0 or key[1] < 0:
            raise ValueError(f"cell {(u, v)} leaves the first quadrant; pass a shift")
        terms[key] = terms.get(key, 0) + c
    return Polynomial(terms, XY)


def uv_poly(points, varset=XY) -> Polynomial:
    terms: dict = {}
    for pt in points:
        terms[pt] = terms.get(pt, 0) + 1
    return Polynomial(terms, varset)


# ---------------------------------------------------------------------------
# tribones
# ---------------------------------------------------------------------------

class TriboneType(enum.Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def step(self) -> tuple:
        return {"X": (1, 0), "Y": (0, 1), "Z": (-1, -1)}[self.value]

    def rotate(self, times: int = 1) -> "TriboneType":
        names = "XYZ"
        return TriboneType(names[(names.index(self.value) + times) % 3])


@dataclass(frozen=True)
class Placement:
    type: TriboneType
    center: Cell
    weight: int = 1

    def __post_init__(self):
        if not isinstance(self.type, TriboneType):
            object.__setattr__(self, "type", TriboneType(self.type))

    @property
    def key(self) -> tuple:
        return self.type.value, self.center

    def cells(self) -> tuple:
        u, v = self.center.uv
        du, dv = self.type.step
        return (Cell.from_uv(u - du, v - dv), self.center, Cell.from_uv(u + du, v + dv))

    def rotate(self, times: int = 1) -> "Placement":
        return Placement(self.type.rotate(times), self.center.rotate(times), self.weight)

    def to_json(self) -> dict:
        return {"type": self.type.value, "center": self.center.to_json(), "weight": self.weight}

    @classmethod
    def from_json(cls, data) -> "Placement":
        return cls(TriboneType(data["type"]), Cell.from_json(data["center"]), int(data["weight"]))


def tribone_poly(kind, center: Cell) -> Polynomial:
    """abc-polynomial of the tribone of ``kind`` centred at ``center``."""
    return cells_poly(Placement(TriboneType(kind) if not isinstance(kind, TriboneType) else kind,
                                center).cells())


@dataclass(frozen=True)
class Tiling:
    placements: tuple
    region_n: int
    symmetric: bool = False

    def cell_weights(self) -> dict:
        out: dict = {}
        for pl in self.placements:
            for c in pl.cells():
                out[c] = out.get(c, 0) + pl.weight
        return {c: w for c, w in out.items() if w}

    def to_json(self) -> dict:
        return {
            "region_n": self.region_n,
            "symmetric": self.symmetric,
            "placements": [p.to_json() for p in self.placements],
        }

    @classmethod
    def from_json(cls, data) -> "Tiling":
        return cls(tuple(Placement.from_json(p) for p in data["placements"]),
                   int(data["region_n"]), bool(data.get("symmetric", False)))


def aggregate(placements: Iterable[Placement]) -> dict:
    """Net weight per ``(type, center)``; zero entries dropped."""
    out: dict = {}
    for pl in placements:
        k = pl.key
        out[k] = out.get(k, 0) + pl.weight
    return {k: w for k, w in out.items() if w}


# ---------------------------------------------------------------------------
# triangular regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    cells: frozenset
    n: int | None = None

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def uv_points(self) -> list:
        return sorted(c.uv for c in self.cells)

    def to_json(self) -> dict:
        return {"n": self.n, "cells": [c.to_json() for c in sorted(self.cells)]}


def _split(n: int) -> tuple:
    """``("3k-1" | "3k", k)``; raises FixedCellError for n = 1 (mod 3)."""
    if n < 1:
        raise ValueError("N must be positive")
    if n % 3 == 2:
        return "3k-1", (n + 1) // 3
    if n % 3 == 0:
        return "3k", n // 3
    raise FixedCellError(n)


def sector_uv(n: int) -> list:
    """Chart points of the fundamental sector of T_N (cone xOy content)."""
    family, k = _split(n)
    pts = [(u, v) for u in range(k) for v in range(k)]           # rhombus a * square_k
    if family == "3k-1":
        pts += [(1 + i, k + j) for i in range(k - 1) for j in range(i + 1)]    # a x y^k Delta_{k-1}
    else:
        pts += [(k + i, j) for j in range(k) for i in range(j + 1)]            # a x^k nabla_k
    return pts


def _rotations(pts) -> list:
    out = list(pts)
    cur = list(pts)
    for _ in range(2):
        cur = [rotate_uv(u, v) for u, v in cur]
        out += cur
    return out


def region_T(n: int) -> Region:
    """Cells of the triangle T_N with N cells per side.

    For N = 3k-1 and N = 3k the triangle is symmetric under the rotation and
    is built as the sector plus its two rotations.  For N = 1 (mod 3) no such
    placement exists; the triangle ``0 <= v <= u <= N-1`` of the chart is used.
    """
    if n == 0:
        return Region(frozenset(), 0)
    if n % 3 == 1:
        pts = [(u, v) for u in range(n) for v in range(u + 1)]
    else:
        pts = _rotations(sector_uv(n))
    cells = frozenset(Cell.from_uv(u, v) for u, v in pts)
    if len(cells) != n * (n + 1) // 2:
        raise AssertionError("region enumeration double counted a cell")
    return Region(cells, n)


def sector_poly(n: int) -> Polynomial:
    return cells_poly(Cell.from_uv(u, v) for u, v in sector_uv(n))


def region_poly(n: int) -> Polynomial:
    """abc integer-point transform of the whole region T_N."""
    return cells_poly(region_T(n).cells)


@dataclass(frozen=True)
class SectorForm:
    """``base + d * step``: small representative of the sector class."""

    family: str
    k: int
    d: int
    case_index: int
    base: Polynomial
    step: Polynomial

    @property
    def poly(self) -> Polynomial:
        return self.base + self.step * self.d


def _uv_cells_poly(pts) -> Polynomial:
    return cells_poly(Cell.from_uv(u, v) for u, v in pts)


def sector_form(n: int) -> SectorForm:
    family, k = _split(n)
    # chart points: a=(0,0), a x=(1,0), a y=(0,1); Delta_2 = 1+x+xy, nabla_2 = 1+y+xy
    if family == "3k-1":
        i, d = k % 3, k // 3
        if i == 0:
            base, step = [], [(1, 0), (2, 0), (2, 1)]              # a x Delta_2
        elif i == 1:
            base, step = [(0, 0)], [(1, 1), (2, 1), (2, 2)]        # a + d a x y Delta_2
        else:
            base, step = [(2, 2), (1, 2)], [(1, 2), (2, 2), (2, 3)]  # a x^2y^2 + a x y^2 (d Delta_2 + 1)
    else:
        r = k % 3
        if r == 0:
            i, d = 0, k // 3
            base, step = [], [(0, 0), (0, 1), (1, 1)]              # a nabla_2
        elif r == 1:
            i, d = 1, (k - 1) // 3
            base, step = [(0, 0), (1, 0)], [(1, 0), (1, 1), (2, 1)]  # a + a x (d nabla_2 + 1)
        else:
            i, d = -1, (k + 1) // 3
            base, step = [(2, 2)], [(2, 0), (2, 1), (3, 1)]        # a x^2y^2 + d a x^2 nabla_2
    return SectorForm(family, k, d, i, _uv_cells_poly(base), _uv_cells_poly(step))


def reduced_sector_form(n: int) -> Polynomial:
    return sector_form(n).poly


# ---------------------------------------------------------------------------
# the Z[x, y] chart: staircase triangles and block families
# ---------------------------------------------------------------------------

def region_xy(n: int) -> Polynomial:
    """Staircase triangle ``sum_{0<=j<=i<=n-1} x^i y^j``."""
    return uv_poly((i, j) for i in range(n) for j in range(i + 1))


def nabla_xy(n: int) -> Polynomial:
    """Mirror image of :func:`region_xy`: ``sum_{0<=i<=j<=n-1} x^i y^j``."""
    return uv_poly((i, j) for j in range(n) for i in range(j + 1))


def chain_xy(k: int) -> Polynomial:
    return uv_poly((i, 0) for i in range(k))


def square_xy(k: int) -> Polynomial:
    return uv_poly((i, j) for i in range(k) for j in range(k))


KINDS = ("L", "square", "delta", "nabla")


def enumerated_class(kind: str, k: int) -> Polynomial:
    builders = {"L": chain_xy, "square": square_xy, "delta": region_xy, "nabla": nabla_xy}
    if kind not in builders:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return builders[kind](k)


def closed_form_class(kind: str, k: int) -> Polynomial:
    """Small representative of the enumerated family modulo the tribone ideal of Z[x, y]."""
    if k < 1:
        raise ValueError("k must be positive")
    x, y = XY.gens()
    one = XY.one()
    r = k % 3
    if kind == "L":
        return [XY.zero(), one, one + x][r]
    if kind == "square":
        return [XY.zero(), one, x**2 * y**2][r]
    if kind in ("delta", "nabla"):
        small = one + x + x * y if kind == "delta" else one + y + x * y
        if r == 2:
            return small * ((k + 1) // 3)
        if r == 0:
            return small * (k // 3)
        return small * ((k - 1) // 3) + one
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
