"""Grid covers with their counts N(C), plus equivalence of covers and sizes.

A grid cover at scale ``r`` is the set of half-open boxes
``prod [k_i r, (k_i + 1) r)`` that meet the set; boxes are identified by
their integer index vectors ``k``.  All boxes at one scale are translates
of each other, which is what lets a cover count become a size pair.

The empty member every cover carries is implicit and never counted.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import ScaleMismatch, ScaleNotAligned, SymbolicUnsupported, UnsupportedModel
from .graduation import Finite, MValue
from .pair import SizePair, to_rational
from .sets import Box, FinitePoints, IFSFractal, SetModel, SymbolicNaturals, is_translation

log = logging.getLogger(__name__)

PARALLEL_MIN_POINTS = 20_000


@dataclass(frozen=True)
class IndexSet:
    """Explicitly listed box indices."""

    cells: frozenset
    dim: int

    @property
    def size(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.cells)

    def __contains__(self, k) -> bool:
        return k in self.cells

    def min_corner(self) -> tuple:
        return tuple(min(k[i] for k in self.cells) for i in range(self.dim))

    def shifted(self, e: tuple) -> "IndexSet":
        return IndexSet(frozenset(tuple(a + b for a, b in zip(k, e)) for k in self.cells), self.dim)


@dataclass(frozen=True)
class IndexRange:
    """All indices with ``lo[i] <= k[i] < hi[i]``."""

    lo: tuple
    hi: tuple

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def size(self) -> int:
        n = 1
        for a, b in zip(self.lo, self.hi):
            n *= max(b - a, 0)
        return n

    def __iter__(self) -> Iterator[tuple]:
        return itertools.product(*(range(a, b) for a, b in zip(self.lo, self.hi)))

    def __contains__(self, k) -> bool:
        return len(k) == self.dim and all(a <= x < b for a, x, b in zip(self.lo, k, self.hi))

    def min_corner(self) -> tuple:
        return self.lo

    def shifted(self, e: tuple) -> "IndexRange":
        return IndexRange(tuple(a + d for a, d in zip(self.lo, e)), tuple(b + d for b, d in zip(self.hi, e)))


@dataclass(frozen=True)
class IFSCells:
    """Cells of the level-``level`` construction of a grid-aligned IFS.

    A cell index, written in base ``m`` digit by digit along every axis,
    picks one offset per level; the cell belongs iff every picked digit
    vector is an offset.
    """

    m: int
    offsets: tuple
    level: int
    origin: tuple

    @property
    def dim(self) -> int:
        return len(self.origin)

    @property
    def size(self) -> int:
        return len(self.offsets) ** self.level

    def __iter__(self) -> Iterator[tuple]:
        cells = [tuple(0 for _ in self.origin)]
        for _ in range(self.level):
            cells = [tuple(self.m * c + o for c, o in zip(cell, off)) for cell in cells for off in self.offsets]
        for cell in cells:
            yield tuple(c + o for c, o in zip(cell, self.origin))

    def __contains__(self, k) -> bool:
        if len(k) != self.dim:
            return False
        rel = [a - b for a, b in zip(k, self.origin)]
        side = self.m**self.level
        if any(not 0 <= x < side for x in rel):
            return False
        allowed = set(self.offsets)
        for _ in range(self.level):
            digits = tuple(x % self.m for x in rel)
            if digits not in allowed:
                return False
            rel = [x // self.m for x in rel]
        return True

    def min_corner(self) -> tuple:
        geometric = (self.m**self.level - 1) // (self.m - 1)
        return tuple(o + min(off[i] for off in self.offsets) * geometric for i, o in enumerate(self.origin))

    def shifted(self, e: tuple) -> "IFSCells":
        return IFSCells(self.m, self.offsets, self.level, tuple(a + d for a, d in zip(self.origin, e)))


BoxSet = Union[IndexSet, IndexRange, IFSCells]


@dataclass(frozen=True)
class Cover:
    """A grid cover: the scale and the occupied box indices."""

    scale: Fraction
    elements: BoxSet
    contains_empty: bool = True

    @property
    def size(self) -> int:
        return self.elements.size


@dataclass(frozen=True)
class ExplicitCover:
    """A cover given by explicit member sets (FinitePoints or Box)."""

    members: tuple
    contains_empty: bool = True


def _point_cells(rows, num: int, den: int, dim: int) -> frozenset:
    """Box indices ``floor(x * den / num)`` of integer rows."""
    if num == 1 and den == 1:
        return frozenset(rows)
    if dim == 1:
        return frozenset(((x * den) // num,) for (x,) in rows)
    if dim == 2:
        return frozenset(((x * den) // num, (y * den) // num) for x, y in rows)
    return frozenset(tuple((x * den) // num for x in row) for row in rows)


def _points_cover_cells(s: FinitePoints, r: Fraction, workers: int) -> frozenset:
    # point x = row / D falls in box floor(x / r) = floor(row * q / (D * p)) for r = p/q
    scale_den, rows = s.scaled
    num, den = scale_den * r.numerator, r.denominator
    if workers <= 1 or len(rows) < PARALLEL_MIN_POINTS:
        return _point_cells(rows, num, den, s.dim)
    # sort so the chunking, and hence each worker's input, is reproducible
    rows = sorted(rows)
    step = -(-len(rows) // workers)
    chunks = [rows[i:i + step] for i in range(0, len(rows), step)]
    log.debug("hashing %d points across %d workers", len(rows), len(chunks))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_point_cells, chunks, *([x] * len(chunks) for x in (num, den, s.dim))))
    return frozenset().union(*parts)


def ifs_level(s: IFSFractal, r: Fraction) -> int:
    """k with ``r == m**-k``, or ScaleNotAligned."""
    if r.numerator != 1:
        raise ScaleNotAligned(f"scale {r} is not a power of 1/{s.m}")
    q, k = r.denominator, 0
    while q % s.m == 0:
        q //= s.m
        k += 1
    if q != 1:
        raise ScaleNotAligned(f"scale {r} is not a power of 1/{s.m}")
    return k


def grid_cover(s: SetModel, r, workers: int = 1) -> Cover:
    r = to_rational(r)
    if r <= 0:
        raise ValueError(f"scale must be positive, got {r}")
    if isinstance(s, FinitePoints):
        return Cover(r, IndexSet(_points_cover_cells(s, r, workers), s.dim))
    if isinstance(s, Box):
        lo = tuple(a // r for a in s.lower)
        hi = tuple(-(-b // r) for b in s.upper)
        return Cover(r, IndexRange(lo, hi))
    if isinstance(s, IFSFractal):
        k = ifs_level(s, r)
        return Cover(r, IFSCells(s.m, s.offsets, k, (0,) * s.dim))
    raise UnsupportedModel(f"no grid cover for {type(s).__name__}")


def count(c: Union[Cover, ExplicitCover]) -> Finite:
    """N(C): the number of non-empty members."""
    if isinstance(c, ExplicitCover):
        return Finite(sum(1 for m in c.members if not (isinstance(m, FinitePoints) and not m.rows)))
    return Finite(c.elements.size)


def measure_size(s: SetModel, r, workers: int = 1) -> SizePair:
    c = grid_cover(s, r, workers)
    return SizePair(c.scale, count(c))


def apply_graduation(n: MValue, g: MValue) -> MValue:
    """Re-express a count in units of graduation ``g``, rounding up."""
    if not isinstance(g, Finite) or g.value < 1:
        raise ValueError(f"graduation must be a finite value >= 1, got {g}")
    if g.value == 1:
        return n
    if not isinstance(n, Finite):
        raise SymbolicUnsupported(f"ceiling rule needs a finite count, got {n}")
    return Finite(-(-n.value // g.value))


def _subset(a: BoxSet, b: BoxSet) -> bool:
    if a == b:
        return True
    if a.size > b.size:
        return False
    return all(k in b for k in a)


def same_cells(a: BoxSet, b: BoxSet) -> bool:
    return a.size == b.size and _subset(a, b)


def covers_equivalent(c1, c2) -> bool:
    """Each member of ``C1 - C1∩C2`` has a translate in ``C2 - C1∩C2``, and back."""
    if isinstance(c1, Cover) and isinstance(c2, Cover):
        if c1.scale != c2.scale:
            raise ScaleMismatch(f"covers at scales {c1.scale} and {c2.scale}")
        # equal-size boxes are all translates, so only emptiness matters
        first_empty = _subset(c1.elements, c2.elements)
        second_empty = _subset(c2.elements, c1.elements)
        return first_empty == second_empty
    if isinstance(c1, ExplicitCover) and isinstance(c2, ExplicitCover):
        m1, m2 = set(c1.members), set(c2.members)
        d1, d2 = m1 - m2, m2 - m1

        def matched(src, dst):
            return all(any(_translates(a, b) for b in dst) for a in src)

        return matched(d1, d2) and matched(d2, d1)
    raise TypeError("covers must both be grid covers or both explicit")


def _translates(a, b) -> bool:
    try:
        return is_translation(a, b) is not None
    except ValueError:
        return False


def sizes_equivalent_at(s1: SetModel, s2: SetModel, r, workers: int = 1) -> bool:
    """Whether ``s1`` and ``s2`` are indistinguishable at scale ``r``.

    The cover of ``s2`` is shifted so the componentwise minimum box
    indices coincide, and must then reproduce the cover of ``s1`` box for
    box.
    """
    c1, c2 = grid_cover(s1, r, workers), grid_cover(s2, r, workers)
    if c1.size != c2.size:
        return False
    if c1.size == 0:
        return True
    if c1.elements.dim != c2.elements.dim:
        return False
    offset = tuple(a - b for a, b in zip(c1.elements.min_corner(), c2.elements.min_corner()))
    return same_cells(c1.elements, c2.elements.shifted(offset))


def sizes_equal(s1: SetModel, s2: SetModel) -> bool:
    """Equality of sizes at graduation 1.

    Every singleton translates onto every other, so for point sets this is
    equality of point counts.
    """
    for s in (s1, s2):
        if not isinstance(s, (FinitePoints, SymbolicNaturals)):
            raise UnsupportedModel(f"graduation-1 equality is undefined for {type(s).__name__}")
    if isinstance(s1, SymbolicNaturals) or isinstance(s2, SymbolicNaturals):
        return isinstance(s1, SymbolicNaturals) and isinstance(s2, SymbolicNaturals)
    return len(s1) == len(s2)
