"""Box-counting dimension from a log-log fit of counts against scales."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cover import measure_size
from .errors import DegenerateCount, InsufficientSamples, ScaleNotSubUnit
from .graduation import Finite
from .pair import SizePair, log_inverse_scale, pair_dimension, to_rational


def geometric_sweep(r0, factor, steps: int) -> list:
    """Scales ``r0 * factor**j`` for ``j = 0 .. steps-1``, exactly."""
    r0, factor = to_rational(r0), to_rational(factor)
    if r0 <= 0:
        raise ValueError("sweep start must be positive")
    if not 0 < factor < 1:
        raise ValueError("sweep factor must lie in (0, 1)")
    if steps < 1:
        raise ValueError("sweep needs at least one step")
    return [r0 * factor**j for j in range(steps)]


def least_squares(xs: Sequence[float], ys: Sequence[float]):
    """Ordinary least-squares line through the points, with its R^2."""
    n = len(xs)
    mx, my = math.fsum(xs) / n, math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        raise InsufficientSamples("all scales coincide")
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_tot = math.fsum((y - my) ** 2 for y in ys)
    ss_res = math.fsum((y - intercept - slope * x) ** 2 for x, y in zip(xs, ys))
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    return slope, intercept, r2


@dataclass(frozen=True)
class DimensionFit:
    pairs: tuple
    slope: float
    intercept: float
    r_squared: float
    used: tuple

    def per_scale(self) -> list:
        """``ln N / ln(1/r)`` per pair, None where it is undefined."""
        out = []
        for p in self.pairs:
            try:
                out.append(pair_dimension(p))
            except (DegenerateCount, ScaleNotSubUnit):
                out.append(None)
        return out


def fit_dimension(pairs: Sequence[SizePair]) -> DimensionFit:
    """Regress ln N on ln(1/r) over the pairs whose count is at least 2."""
    used = tuple(i for i, p in enumerate(pairs) if isinstance(p.count, Finite) and p.count.value >= 2)
    if len(used) < 2:
        raise InsufficientSamples(f"only {len(used)} scale(s) with count >= 2")
    xs = [log_inverse_scale(pairs[i].scale) for i in used]
    ys = [math.log(pairs[i].count.value) for i in used]
    slope, intercept, r2 = least_squares(xs, ys)
    return DimensionFit(tuple(pairs), slope, intercept, r2, used)


def estimate_dimension(model, scales: Sequence[Fraction], workers: int = 1,
                       pairs: Optional[Sequence[SizePair]] = None) -> DimensionFit:
    if pairs is None:
        pairs = [measure_size(model, r, workers) for r in scales]
    return fit_dimension(pairs)
