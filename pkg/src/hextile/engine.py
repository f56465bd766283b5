"""Decision procedures, tiling certificates and the linear-algebra oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intmat
from .groebner import GroebnerBasis, buchberger_z, is_member, reduce_full
from .hexlattice import (
    Cell,
    Placement,
    Tiling,
    TriboneType,
    _split,
    aggregate,
    region_T,
    region_xy,
    rotate_uv,
)
from .invariants import region_delta_st, tribone_ideal_generators
from .polynomial import ST, XY, Polynomial, deglex, format_poly, lex

DEFAULT_MARGIN = 3
MAX_COLUMNS = 20000


class NotTileableError(ValueError):
    pass


class OracleDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    n: int
    symmetric: bool
    tileable: bool
    remainder: Polynomial
    closed_form_check: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "symmetric": self.symmetric,
            "tileable": self.tileable,
            "remainder": format_poly(self.remainder),
            "closed_form_check": self.closed_form_check,
        }


@dataclass(frozen=True)
class OracleReport:
    n: int
    symmetric: bool
    window_margin: int
    solvable: bool
    rows: int = 0
    columns: int = 0
    residual_shape: tuple = (0, 0)
    torsion: tuple = ()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "symmetric": self.symmetric,
            "window_margin": self.window_margin,
            "solvable": self.solvable,
            "rows": self.rows,
            "columns": self.columns,
            "residual_shape": list(self.residual_shape),
            "torsion": list(self.torsion),
        }


# ---------------------------------------------------------------------------
# cached bases
# ---------------------------------------------------------------------------

def tribone_xy_generators() -> tuple:
    """``1+x+x^2``, ``1+y+y^2``, ``1+xy+(xy)^2``: X, Y and Z tribones in the chart."""
    x, y = XY.gens()
    return 1 + x + x**2, 1 + y + y**2, 1 + x * y + (x * y) ** 2


_GEN_TYPES = (TriboneType.X, TriboneType.Y, TriboneType.Z)
# offset from a generator's lowest cell to the tribone centre
_CENTER_OFFSET = {TriboneType.X: (1, 0), TriboneType.Y: (0, 1), TriboneType.Z: (1, 1)}


@lru_cache(maxsize=None)
def basis_I() -> GroebnerBasis:
    return buchberger_z(tribone_xy_generators(), deglex(XY))


@lru_cache(maxsize=None)
def basis_trib() -> GroebnerBasis:
    return buchberger_z(tribone_ideal_generators(), lex(ST))


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def signed_tileable(n: int) -> Verdict:
    if n < 1:
        raise ValueError("N must be positive")
    rem = reduce_full(region_xy(n), basis_I())
    return Verdict(n, False, rem.is_zero(), rem, rem.is_zero() == (n % 9 in (0, 8)))


def symmetric_signed_tileable(n: int) -> Verdict:
    if n < 2:
        raise ValueError("N must be at least 2")
    dec = region_delta_st(n)  # raises FixedCellError for N = 1 (mod 3)
    rem = reduce_full(dec.total(), basis_trib())
    return Verdict(n, True, rem.is_zero(), rem, rem.is_zero() == (n % 27 in (0, 26)))


def check(n: int, symmetric: bool = False) -> Verdict:
    return symmetric_signed_tileable(n) if symmetric else signed_tileable(n)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def tile_points(points) -> list:
    """Signed tribone placements covering a finite set of chart points.

    Shifts the points into the first quadrant, writes the point polynomial
    over the three chart generators and reads every cofactor term
    ``c x^i y^j`` as a weight ``c`` tribone whose lowest cell is ``(i, j)``.
    """
    pts = list(points)
    if not pts:
        return []
    du = min(u for u, _ in pts)
    dv = min(v for _, v in pts)
    f = Polynomial({(u - du, v - dv): 1 for u, v in pts}, XY)
    cert = is_member(f, basis_I())
    if not cert.member:
        raise NotTileableError("point set has no signed tribone tiling")
    out = []
    for kind, cof in zip(_GEN_TYPES, cert.cofactors):
        su, sv = _CENTER_OFFSET[kind]
        for (i, j), c in sorted(cof.items()):
            center = Cell.from_uv(i + su + du, j + sv + dv)
            out.append(Placement(kind, center, c))
    return out


def extract_certificate(n: int) -> Tiling:
    region = region_T(n)
    try:
        placements = tile_points(region.uv_points())
    except NotTileableError:
        raise NotTileableError(f"T_{n} has no signed tiling (N mod 9 = {n % 9})") from None
    return Tiling(tuple(placements), n, False)


def _rhombus_rows(k: int) -> list:
    # k divisible by 3: straight rows of X tribones
    return [Placement(TriboneType.X, Cell.from_uv(u, v), 1)
            for v in range(k) for u in range(1, k, 3)]


def extract_symmetric_certificate(n: int) -> Tiling:
    family, k = _split(n)
    if n % 27 not in (0, 26):
        raise NotTileableError(f"T_{n} has no rotation-symmetric signed tiling")
    sector = _rhombus_rows(k)
    if family == "3k-1":
        tri = [(1 + i, k + j) for i in range(k - 1) for j in range(i + 1)]
    else:
        tri = [(k + i, j) for j in range(k) for i in range(j + 1)]
    sector += tile_points(tri)
    placements = list(sector)
    for times in (1, 2):
        placements += [p.rotate(times) for p in sector]
    return Tiling(tuple(placements), n, True)


def verify_tiling(n: int, tiling: Tiling, symmetric: bool = False, region=None) -> bool:
    """Exact check: weight 1 on every cell of the region, 0 everywhere else."""
    cells = region.cells if region is not None else region_T(n).cells
    weights = tiling.cell_weights()
    if set(weights) != set(cells) or any(w != 1 for w in weights.values()):
        return False
    if symmetric:
        agg = aggregate(tiling.placements)
        if aggregate(p.rotate() for p in tiling.placements) != agg:
            return False
    return True


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _triangle_bounds(points) -> tuple:
    """Half-plane description of a chart triangle.

    ``("up", a, b, c)`` means ``v >= a, u <= b, u - v >= c``;
    ``("down", a, b, c)`` means ``v <= a, u >= b, u - v <= c``.
    """
    pts = set(points)
    up = ("up", min(v for _, v in pts), max(u for u, _ in pts), min(u - v for u, v in pts))
    down = ("down", max(v for _, v in pts), min(u for u, _ in pts), max(u - v for u, v in pts))
    for cand in (up, down):
        if set(_triangle_points(cand, 0)) == pts:
            return cand
    raise ValueError("point set is not a chart triangle")


def _triangle_points(bounds, margin: int) -> list:
    kind, a, b, c = bounds
    m = margin
    if kind == "up":
        a, b, c = a - m, b + m, c - m
        return [(u, v) for u in range(a + c, b + 1) for v in range(a, u - c + 1)]
    a, b, c = a + m, b - m, c + m
    return [(u, v) for u in range(b, a + c + 1) for v in range(u - c, a + 1)]


def window_points(n: int, margin: int) -> list:
    """T_N widened by ``margin`` rows on every side (a triangle of side N + 3 margin)."""
    if margin < 0:
        raise ValueError("window margin must be non-negative")
    return _triangle_points(_triangle_bounds(region_T(n).uv_points()), margin)


def _window_placements(window: set) -> list:
    out = []
    for (u, v) in sorted(window):
        for kind in _GEN_TYPES:
            du, dv = kind.step
            if (u - du, v - dv) in window and (u + du, v + dv) in window:
                out.append((kind, (u, v)))
    return out


def _placement_points(kind, center) -> tuple:
    (u, v), (du, dv) = center, kind.step
    return (u - du, v - dv), (u, v), (u + du, v + dv)


def _rotate_placement(kind, center):
    return kind.rotate(), rotate_uv(*center)


def _orbit_rep(p):
    return min((p, rotate_uv(*p), rotate_uv(*rotate_uv(*p))))


def oracle_signed(n: int, window_margin: int = DEFAULT_MARGIN,
                  max_columns: int = MAX_COLUMNS) -> OracleReport:
    """Integer solvability of the truncated tiling system for T_N."""
    region = set(region_T(n).uv_points())
    window = set(window_points(n, window_margin))
    pls = _window_placements(window)
    if len(pls) > max_columns:
        raise OracleDimensionError(f"{len(pls)} placements exceed the cap of {max_columns}")
    columns = []
    for kind, center in pls:
        col: dict = {}
        for p in _placement_points(kind, center):
            col[p] = col.get(p, 0) + 1
        columns.append(col)
    rhs = {p: int(p in region) for p in window}
    ok, rr, rc, tors = intmat.solvable(columns, rhs)
    return OracleReport(n, False, window_margin, ok, len(window), len(columns), (rr, rc), tuple(tors))


def oracle_symmetric(n: int, window_margin: int = DEFAULT_MARGIN,
                     max_columns: int = MAX_COLUMNS) -> OracleReport:
    """Same system restricted to rotation-symmetrized placement triplets.

    Rows are cell orbits; a column records how often each orbit
    representative is covered by the triplet.
    """
    _split(n)  # FixedCellError for N = 1 (mod 3)
    region = set(region_T(n).uv_points())
    window = set(window_points(n, window_margin))
    seen = set()
    columns = []
    for kind, center in _window_placements(window):
        if (kind, center) in seen:
            continue
        orbit = [(kind, center)]
        for _ in range(2):
            orbit.append(_rotate_placement(*orbit[-1]))
        seen.update(orbit)
        col: dict = {}
        for k, c in orbit:
            for p in _placement_points(k, c):
                r = _orbit_rep(p)
                col[r] = col.get(r, 0) + 1
        # each orbit has three cells, each covered equally often
        columns.append({r: v // 3 for r, v in col.items()})
        if len(columns) > max_columns:
            raise OracleDimensionError(f"more than {max_columns} placement triplets")
    reps = {_orbit_rep(p) for p in window}
    rhs = {r: int(r in region) for r in reps}
    ok, rr, rc, tors = intmat.solvable(columns, rhs)
    return OracleReport(n, True, window_margin, ok, len(reps), len(columns), (rr, rc), tuple(tors))


def oracle(n: int, symmetric: bool = False, window_margin: int = DEFAULT_MARGIN,
           max_columns: int = MAX_COLUMNS) -> OracleReport:
    fn = oracle_symmetric if symmetric else oracle_signed
    return fn(n, window_margin, max_columns)


def oracle_sweep(n: int, symmetric: bool = False, start: int = 0, stop: int = 5,
                 max_columns: int = MAX_COLUMNS) -> list:
    """Reports for margins ``start..stop``; continues past ``stop`` until two
    consecutive margins agree."""
    reports = []
    m = start
    while True:
        reports.append(oracle(n, symmetric, m, max_columns))
        if m >= stop and len(reports) >= 2 and reports[-1].solvable == reports[-2].solvable:
            return reports
        m += 1


def sweep_is_monotone(reports) -> bool:
    flags = [r.solvable for r in reports]
    return all(not a or b for a, b in zip(flags, flags[1:]))
