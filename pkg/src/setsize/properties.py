"""Executable checks that cover counts behave as an outer measure.

Each ``check_*`` function tests one instance and returns a
:class:`PropertyReport`; :func:`run_property_suite` drives all four over
seeded random instances.  The count function is injectable so that broken
counters can be shown to fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Sequence

from .cover import count, grid_cover
from .errors import NotASubset, NotDisjoint
from .sets import FinitePoints, SetModel, empty_like, min_gap, render_point, union

Counter = Callable[[SetModel, Fraction], int]

NONNEGATIVITY = "nonnegativity"
MONOTONICITY = "monotonicity"
SUBADDITIVITY = "subadditivity"
ADDITIVITY_G1 = "additivity_graduation1"


def grid_count(s: SetModel, r: Fraction) -> int:
    return count(grid_cover(s, r)).value


@dataclass
class PropertyReport:
    name: str
    instances: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        if other.name != self.name:
            raise ValueError(f"cannot merge {other.name} into {self.name}")
        return PropertyReport(self.name, self.instances + other.instances, self.failures + other.failures)

    def to_json(self) -> dict:
        return {"property": self.name, "trials": self.instances, "passed": self.passed,
                "failures": self.failures}


def _points_json(s) -> list:
    if isinstance(s, FinitePoints):
        return [render_point(p) for p in s.sorted_points()]
    return [str(s)]


def check_nonnegativity(s: SetModel, r, counter: Counter = grid_count) -> PropertyReport:
    r = Fraction(r)
    report = PropertyReport(NONNEGATIVITY, 1)
    n_empty = counter(empty_like(s), r)
    n = counter(s, r)
    if n_empty != 0 or n < 0:
        report.failures.append({"scale": str(r), "set": _points_json(s),
                                "empty_count": n_empty, "count": n})
    return report


def check_monotonicity(a: FinitePoints, b: FinitePoints, r, counter: Counter = grid_count) -> PropertyReport:
    r = Fraction(r)
    if not a.issubset(b):
        raise NotASubset("first set is not contained in the second")
    report = PropertyReport(MONOTONICITY, 1)
    na, nb = counter(a, r), counter(b, r)
    if na > nb:
        report.failures.append({"scale": str(r), "subset": _points_json(a), "superset": _points_json(b),
                                "counts": [na, nb]})
    return report


def check_subadditivity(parts: Sequence[FinitePoints], r, counter: Counter = grid_count) -> PropertyReport:
    r = Fraction(r)
    report = PropertyReport(SUBADDITIVITY, 1)
    dim = parts[0].dim if parts else 1
    n_union = counter(union(parts, dim), r)
    n_parts = [counter(p, r) for p in parts]
    if n_union > sum(n_parts):
        report.failures.append({"scale": str(r), "parts": [_points_json(p) for p in parts],
                                "union_count": n_union, "part_counts": n_parts})
    return report


def resolving_scale(s: FinitePoints) -> Fraction:
    """A scale at which every point of ``s`` gets its own box."""
    if len(s) < 2:
        return Fraction(1)
    return Fraction(min_gap(s)) / 2


def check_additivity_graduation1(parts: Sequence[FinitePoints], counter: Counter = grid_count) -> PropertyReport:
    dim = parts[0].dim if parts else 1
    whole = union(parts, dim)
    if len(whole) != sum(len(p) for p in parts):
        raise NotDisjoint("parts must be pairwise disjoint")
    r = resolving_scale(whole)
    report = PropertyReport(ADDITIVITY_G1, 1)
    n_union = counter(whole, r)
    n_parts = [counter(p, r) for p in parts]
    if n_union != sum(n_parts):
        report.failures.append({"scale": str(r), "parts": [_points_json(p) for p in parts],
                                "union_count": n_union, "part_counts": n_parts})
    return report


# -- generators --------------------------------------------------------------

SCALES = tuple(Fraction(x) for x in ("1/4", "1/3", "1/2", "1", "3/2", "2", "5"))


def random_points(rng: random.Random, n: int, dim: int, span: int = 12, denom: int = 1) -> FinitePoints:
    """Up to ``n`` distinct points on the lattice ``(1/denom) Z^dim`` in ``[0, span)^dim``."""
    side = span * denom
    codes = rng.sample(range(side**dim), min(n, side**dim))
    return FinitePoints.from_rows(_decode(codes, side, dim), denom, dim)


def _decode(codes, side: int, dim: int) -> list:
    """Integer rows in ``[0, side)^dim`` from codes in ``range(side**dim)``."""
    rows = []
    for code in codes:
        row = []
        for _ in range(dim):
            code, k = divmod(code, side)
            row.append(k)
        rows.append(tuple(row))
    return rows


def random_subset(rng: random.Random, s: FinitePoints) -> FinitePoints:
    rows = sorted(s.rows)
    keep = rng.randint(0, len(rows))
    return FinitePoints.from_rows(rng.sample(rows, keep), s.den, s.dim)


def random_disjoint_family(rng: random.Random, max_parts: int = 50, max_points: int = 100) -> list:
    dim = rng.randint(1, 3)
    denom = rng.randint(1, 3)
    sizes = [rng.randint(1, max_points) for _ in range(rng.randint(1, max_parts))]
    total = sum(sizes)
    side = 2
    while side**dim < 4 * total:
        side *= 2
    codes = rng.sample(range(side**dim), total)
    pool = _decode(codes, side, dim)
    parts, start = [], 0
    for size in sizes:
        parts.append(FinitePoints.from_rows(pool[start:start + size], denom, dim))
        start += size
    return parts


def _trial_rng(seed: int, name: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{trial}")


def _tag(report: PropertyReport, seed: int, trial: int) -> PropertyReport:
    for failure in report.failures:
        failure.update({"seed": seed, "trial": trial})
    return report


def run_property_suite(trials: int = 1000, seed: int = 42, counter: Counter = grid_count) -> List[PropertyReport]:
    """All four checks, ``trials`` seeded instances each."""
    reports = {name: PropertyReport(name) for name in (NONNEGATIVITY, MONOTONICITY, SUBADDITIVITY, ADDITIVITY_G1)}
    for i in range(trials):
        rng = _trial_rng(seed, NONNEGATIVITY, i)
        s = random_points(rng, rng.randint(0, 30), rng.randint(1, 3), denom=rng.randint(1, 3))
        rep = check_nonnegativity(s, rng.choice(SCALES), counter)
        reports[NONNEGATIVITY] = reports[NONNEGATIVITY].merge(_tag(rep, seed, i))

        rng = _trial_rng(seed, MONOTONICITY, i)
        b = random_points(rng, rng.randint(0, 40), rng.randint(1, 3), denom=rng.randint(1, 3))
        a = random_subset(rng, b)
        rep = check_monotonicity(a, b, rng.choice(SCALES), counter)
        reports[MONOTONICITY] = reports[MONOTONICITY].merge(_tag(rep, seed, i))

        rng = _trial_rng(seed, SUBADDITIVITY, i)
        dim, denom = rng.randint(1, 3), rng.randint(1, 3)
        # a small span makes the parts overlap
        parts = [random_points(rng, rng.randint(0, 20), dim, span=6, denom=denom)
                 for _ in range(rng.randint(1, 8))]
        rep = check_subadditivity(parts, rng.choice(SCALES), counter)
        reports[SUBADDITIVITY] = reports[SUBADDITIVITY].merge(_tag(rep, seed, i))

        rng = _trial_rng(seed, ADDITIVITY_G1, i)
        rep = check_additivity_graduation1(random_disjoint_family(rng), counter)
        reports[ADDITIVITY_G1] = reports[ADDITIVITY_G1].merge(_tag(rep, seed, i))
    return list(reports.values())
