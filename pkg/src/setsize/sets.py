"""Concrete and symbolic set models.

Coordinates are exact rationals (ints or :class:`~fractions.Fraction`), so
translation detection and disjointness are exact.
"""

from __future__ import annotations

import csv
import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import NotDisjoint, ParseError, TooFewPoints, UnsupportedModel
from .pair import to_rational

Point = tuple


def coord(x):
    """Exact coordinate; integral values are stored as plain ints."""
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    r = to_rational(x)
    return r.numerator if r.denominator == 1 else r


class FinitePoints:
    """A finite set of points in ``dim`` dimensions.

    Stored canonically as integer rows over the least common denominator
    ``den``: the point ``x`` is ``row / den``.  ``points`` gives the exact
    rational tuples.
    """

    def __init__(self, points: Iterable = (), dim: int = 1):
        pts = [_as_point(p) for p in points]
        den = math.lcm(*{c.denominator for p in pts for c in p}) if pts else 1
        rows = frozenset(tuple(c.numerator * (den // c.denominator) for c in p) for p in pts)
        self._init(rows, den, dim)

    @classmethod
    def from_rows(cls, rows: Iterable, den: int, dim: int) -> "FinitePoints":
        """Points ``row / den`` from integer rows; no rational arithmetic."""
        self = cls.__new__(cls)
        self._init(frozenset(rows), den, dim)
        return self

    def _init(self, rows: frozenset, den: int, dim: int):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        if den < 1:
            raise ValueError("denominator must be positive")
        for row in rows:
            if len(row) != dim:
                raise ValueError(f"point {row} is not {dim}-dimensional")
        if den > 1:
            g = math.gcd(den, *{c for row in rows for c in row})
            if g > 1:
                den //= g
                rows = frozenset(tuple(c // g for c in row) for row in rows)
        self.rows, self.den, self.dim = rows, den, dim

    def rescaled(self, den: int) -> frozenset:
        """Rows over a multiple ``den`` of the stored denominator."""
        k, rem = divmod(den, self.den)
        if rem:
            raise ValueError(f"{den} is not a multiple of {self.den}")
        if k == 1:
            return self.rows
        return frozenset(tuple(c * k for c in row) for row in self.rows)

    @functools.cached_property
    def points(self) -> frozenset:
        if self.den == 1:
            return self.rows
        return frozenset(tuple(coord(Fraction(c, self.den)) for c in row) for row in self.rows)

    @property
    def scaled(self) -> tuple:
        return self.den, self.rows

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        scaled = [coord(c) * self.den for c in _as_point(p)]
        if any(getattr(c, "denominator", 1) != 1 for c in scaled):
            return False
        return tuple(int(c) for c in scaled) in self.rows

    def __eq__(self, other):
        if not isinstance(other, FinitePoints):
            return NotImplemented
        return (self.dim, self.den, self.rows) == (other.dim, other.den, other.rows)

    def __hash__(self):
        return hash((self.dim, self.den, self.rows))

    def __repr__(self):
        return f"FinitePoints(n={len(self)}, dim={self.dim}, den={self.den})"

    def sorted_points(self) -> list:
        if self.den == 1:
            return sorted(self.rows)
        return [tuple(coord(Fraction(c, self.den)) for c in row) for row in sorted(self.rows)]

    def issubset(self, other: "FinitePoints") -> bool:
        if self.dim != other.dim:
            return False
        den = math.lcm(self.den, other.den)
        return self.rescaled(den) <= other.rescaled(den)


def _common(*sets: FinitePoints):
    den = math.lcm(*(s.den for s in sets))
    return den, [s.rescaled(den) for s in sets]


@dataclass(frozen=True)
class Box:
    """Axis-aligned product of half-open intervals ``[lower_i, upper_i)``."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        lo = tuple(coord(a) for a in self.lower)
        hi = tuple(coord(b) for b in self.upper)
        if len(lo) != len(hi) or not lo:
            raise ValueError("box corners must share a positive dimension")
        if any(a >= b for a, b in zip(lo, hi)):
            raise ValueError(f"degenerate box {lo} .. {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dim(self) -> int:
        return len(self.lower)


@dataclass(frozen=True)
class IFSFractal:
    """Attractor of the maps ``x -> (x + o) / m`` for each offset ``o``.

    Offsets live in ``{0, ..., m-1}^dim``; the attractor sits in the unit cube.
    """

    m: int
    offsets: tuple
    dim: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("contraction denominator m must be >= 2")
        offs = tuple(tuple(int(c) for c in o) for o in self.offsets)
        if not offs:
            raise ValueError("need at least one offset")
        if len(set(offs)) != len(offs):
            raise ValueError("offsets must be distinct")
        for o in offs:
            if len(o) != self.dim or any(not 0 <= c < self.m for c in o):
                raise ValueError(f"offset {o} outside {{0..{self.m - 1}}}^{self.dim}")
        object.__setattr__(self, "offsets", offs)

    @property
    def branching(self) -> int:
        return len(self.offsets)


@dataclass(frozen=True)
class SymbolicNaturals:
    """The set of natural numbers, handled symbolically."""

    def __str__(self):
        return "N"


SetModel = Union[FinitePoints, Box, IFSFractal, SymbolicNaturals]


@dataclass(frozen=True)
class Translation:
    offset: tuple


def _as_point(p) -> Point:
    if isinstance(p, (tuple, list)):
        return tuple(coord(c) for c in p)
    return (coord(p),)


def finite_points(items: Iterable, dim: Optional[int] = None) -> FinitePoints:
    """Build a point set; bare numbers are 1-d points, duplicates collapse."""
    pts = [_as_point(p) for p in items]
    if dim is None:
        if not pts:
            raise ValueError("dimension of an empty point set must be given")
        dim = len(pts[0])
    return FinitePoints(pts, dim)


def empty_like(s: SetModel) -> FinitePoints:
    return FinitePoints((), getattr(s, "dim", 1))


CANTOR = IFSFractal(3, ((0,), (2,)), 1, name="cantor")
SIERPINSKI = IFSFractal(2, ((0, 0), (1, 0), (0, 1)), 2, name="sierpinski")
PRESETS = {"cantor": CANTOR, "sierpinski": SIERPINSKI}


def preset(name: str) -> IFSFractal:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def translate(s: SetModel, offset: Sequence) -> SetModel:
    e = tuple(coord(c) for c in offset)
    if isinstance(s, FinitePoints):
        if len(e) != s.dim:
            raise ValueError("offset dimension mismatch")
        return FinitePoints([tuple(a + b for a, b in zip(p, e)) for p in s.points], s.dim)
    if isinstance(s, Box):
        return Box(tuple(a + b for a, b in zip(s.lower, e)), tuple(a + b for a, b in zip(s.upper, e)))
    raise UnsupportedModel(f"cannot translate {type(s).__name__}")


def is_translation(a: SetModel, b: SetModel) -> Optional[Translation]:
    """The constant offset ``e`` with ``a + e = b``, or None."""
    for s in (a, b):
        if not isinstance(s, (FinitePoints, Box)):
            raise UnsupportedModel(f"translation is undefined for {type(s).__name__}")
    if a.dim != b.dim:
        raise ValueError("sets live in different dimensions")
    if isinstance(a, Box) and isinstance(b, Box):
        e = tuple(y - x for x, y in zip(a.lower, b.lower))
        if all(x + d == y for x, d, y in zip(a.upper, e, b.upper)):
            return Translation(e)
        return None
    if not (isinstance(a, FinitePoints) and isinstance(b, FinitePoints)):
        return None
    if len(a) != len(b):
        return None
    if not a.rows:
        return Translation((0,) * a.dim)
    # a translation preserves lexicographic order
    den, (ra, rb) = _common(a, b)
    pa, pb = sorted(ra), sorted(rb)
    e = tuple(y - x for x, y in zip(pa[0], pb[0]))
    for p, q in zip(pa, pb):
        if any(x + d != y for x, d, y in zip(p, e, q)):
            return None
    return Translation(tuple(coord(Fraction(d, den)) for d in e))


def _require_points(*sets):
    for s in sets:
        if not isinstance(s, FinitePoints):
            raise UnsupportedModel(f"expected FinitePoints, got {type(s).__name__}")


def union_disjoint(a: FinitePoints, b: FinitePoints) -> FinitePoints:
    _require_points(a, b)
    if a.dim != b.dim:
        raise ValueError("sets live in different dimensions")
    den, (ra, rb) = _common(a, b)
    shared = ra & rb
    if shared:
        example = tuple(coord(Fraction(c, den)) for c in min(shared))
        raise NotDisjoint(f"sets share {len(shared)} point(s), e.g. {render_point(example)}")
    return FinitePoints.from_rows(ra | rb, den, a.dim)


def union(parts: Sequence[FinitePoints], dim: Optional[int] = None) -> FinitePoints:
    _require_points(*parts)
    if dim is None:
        dim = parts[0].dim if parts else 1
    if not parts:
        return FinitePoints((), dim)
    den, rows = _common(*parts)
    return FinitePoints.from_rows(frozenset().union(*rows), den, dim)


def cartesian_product(a: FinitePoints, b: FinitePoints) -> FinitePoints:
    _require_points(a, b)
    den, (ra, rb) = _common(a, b)
    return FinitePoints.from_rows((p + q for p, q in itertools.product(ra, rb)), den, a.dim + b.dim)


def chebyshev(p: Point, q: Point):
    return max(abs(x - y) for x, y in zip(p, q))


def min_gap(s: FinitePoints):
    """Smallest Chebyshev distance between two distinct points, exactly.

    Coordinates are scaled to integers over a common denominator.
    Neighbouring lexicographic pairs give an upper bound ``delta``; any
    closer pair must then sit in the same or an adjacent ``delta``-cell.
    """
    _require_points(s)
    if len(s) < 2:
        raise TooFewPoints("min_gap needs at least two points")
    den, rows = s.scaled
    pts = sorted(rows)
    best = None
    for p, q in zip(pts, pts[1:]):
        d = _cheb_int(p, q)
        if best is None or d < best:
            best = d
            if best == 1:
                # scaled coordinates are integers, nothing can be closer
                return coord(Fraction(1, den))
    delta = best
    cells: dict = {}
    for p in pts:
        cells.setdefault(tuple(c // delta for c in p), []).append(p)
    steps = list(itertools.product((-1, 0, 1), repeat=s.dim))
    for key, members in cells.items():
        for step in steps:
            other = cells.get(tuple(k + d for k, d in zip(key, step)))
            if other is None:
                continue
            for p in members:
                for q in other:
                    if p < q:
                        d = _cheb_int(p, q)
                        if d < best:
                            best = d
    return coord(Fraction(best, den))


def _cheb_int(p, q):
    return max(abs(x - y) for x, y in zip(p, q))


def render_coord(c) -> str:
    return str(c)


def render_point(p: Point) -> str:
    if len(p) == 1:
        return render_coord(p[0])
    return "(" + ", ".join(render_coord(c) for c in p) + ")"


def describe(s) -> str:
    """Short human-readable descriptor used in reports."""
    if isinstance(s, FinitePoints):
        if len(s) <= 8:
            return "{" + ", ".join(render_point(p) for p in s.sorted_points()) + "}"
        return f"FinitePoints(n={len(s)}, d={s.dim})"
    if isinstance(s, Box):
        return "Box(" + " x ".join(f"[{a}, {b})" for a, b in zip(s.lower, s.upper)) + ")"
    if isinstance(s, IFSFractal):
        return s.name or f"IFS(m={s.m}, b={s.branching}, d={s.dim})"
    return str(s)


def model_json(s) -> dict:
    if isinstance(s, FinitePoints):
        return {"kind": "points", "n": len(s), "dim": s.dim}
    if isinstance(s, Box):
        return {"kind": "box", "lower": [str(c) for c in s.lower], "upper": [str(c) for c in s.upper]}
    if isinstance(s, IFSFractal):
        return {"kind": "ifs", "name": s.name, "m": s.m, "branching": s.branching, "dim": s.dim,
                "offsets": [list(o) for o in s.offsets]}
    return {"kind": "naturals"}


def read_points_csv(path, delimiter: str = ",", header: Optional[bool] = None) -> FinitePoints:
    """Load one point per row; fields are integers, decimals or ``p/q``.

    ``header=None`` treats a first row that does not parse as a header.
    """
    rows = []
    dim = None
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh, delimiter=delimiter), start=1):
            if not row or all(not f.strip() for f in row):
                continue
            try:
                point = tuple(coord(Fraction(f.strip())) for f in row)
            except (ValueError, ZeroDivisionError):
                if lineno == 1 and header is not False:
                    continue
                raise ParseError(f"bad number in row {row!r}", line=lineno) from None
            if lineno == 1 and header:
                continue
            if dim is None:
                dim = len(point)
            elif len(point) != dim:
                raise ParseError(f"expected {dim} fields, got {len(point)}", line=lineno)
            rows.append(point)
    if dim is None:
        raise ParseError(f"{path}: no points found")
    return FinitePoints(rows, dim)


def write_points_csv(path, s: FinitePoints, delimiter: str = ","):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        for p in s.sorted_points():
            writer.writerow([str(c) for c in p])
