"""Set sizes measured as (scale, count) pairs over expanded covers."""

from .cover import count, grid_cover, measure_size, sizes_equal, sizes_equivalent_at
from .dimension import estimate_dimension, fit_dimension, geometric_sweep
from .graduation import OMEGA, ONE, ZERO, Finite, Omega, Pow2, Prod, Sum, parse_mvalue
from .pair import LIMIT_ZERO, SizePair, pair_add, pair_dimension, pair_distance, pair_mul, parse_pair
from .sets import CANTOR, SIERPINSKI, Box, FinitePoints, IFSFractal, SymbolicNaturals, finite_points

__version__ = "0.1.0"

__all__ = [
    "count", "grid_cover", "measure_size", "sizes_equal", "sizes_equivalent_at",
    "estimate_dimension", "fit_dimension", "geometric_sweep",
    "OMEGA", "ONE", "ZERO", "Finite", "Omega", "Pow2", "Prod", "Sum", "parse_mvalue",
    "LIMIT_ZERO", "SizePair", "pair_add", "pair_dimension", "pair_distance", "pair_mul", "parse_pair",
    "CANTOR", "SIERPINSKI", "Box", "FinitePoints", "IFSFractal", "SymbolicNaturals", "finite_points",
]
