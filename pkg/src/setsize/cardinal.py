"""Symbolic sizes of infinite sets and the hypothesis-conditional
continuum rewriting.

Nothing here asserts the continuum hypothesis.  The rule ``2^w = 1/r`` is
applied only by the functions in this module, never by the global normal
form in :mod:`setsize.graduation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .cover import sizes_equal
from .errors import UnsupportedModel
from .graduation import OMEGA, ONE, ZERO, Finite, MValue, Omega, Pow2, as_mvalue, m_pow2, omega_tower
from .pair import LIMIT_ZERO, SizePair, make_scale, pair_dimension, render_scale
from .sets import FinitePoints, SetModel, SymbolicNaturals, describe

HYPOTHESIS = "hypothesis-conditional"


@dataclass(frozen=True)
class RealVal:
    value: float

    def __str__(self):
        v = float(self.value)
        return str(int(v)) if v.is_integer() else repr(v)


@dataclass(frozen=True)
class MRatio:
    num: MValue
    den: MValue

    def __post_init__(self):
        if self.den == ZERO:
            raise ZeroDivisionError("ratio with denominator 0")

    def __str__(self):
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class LogRatio:
    """``ln(value) / ln(1/r)`` with ``r`` left symbolic."""

    value: MValue

    def __str__(self):
        return f"ln {self.value}/ln(1/r)"


SymbolicDim = Union[RealVal, MRatio, LogRatio]


@dataclass(frozen=True)
class OpaqueSet:
    """A named set with no usable structure, e.g. a non-measurable one."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class CoverSize:
    """The set covering itself once: ``(S, 1)``."""

    cover: str
    count: MValue = ONE
    graduation1: Optional[MValue] = None

    def __str__(self):
        return f"({self.cover}, {self.count})"


def cardinality_of(s) -> CoverSize:
    g1 = None
    if isinstance(s, FinitePoints):
        g1 = Finite(len(s))
    elif isinstance(s, SymbolicNaturals):
        g1 = OMEGA
    name = str(s) if isinstance(s, (OpaqueSet, SymbolicNaturals)) else describe(s)
    return CoverSize(name, ONE, g1)


def size_of_naturals(r=LIMIT_ZERO) -> SizePair:
    return SizePair(make_scale(r), OMEGA)


def power_set_count(x) -> MValue:
    """``|P(A)| = 2^|A|``, taken as a rule for symbolic counts too."""
    return m_pow2(as_mvalue(x))


@dataclass(frozen=True)
class ChRecord:
    scale: object
    pair: SizePair
    dimension: SymbolicDim
    statement: str
    corollary: str
    status: str = HYPOTHESIS

    def to_json(self) -> dict:
        return {"scale": render_scale(self.scale), "pair": str(self.pair), "dimension": str(self.dimension),
                "statement": self.statement, "corollary": self.corollary, "status": self.status}


def ch_equation(r=LIMIT_ZERO) -> ChRecord:
    """The continuum equation at scale ``r`` (the limit marker by default)."""
    r = make_scale(r)
    if r is not LIMIT_ZERO and r >= 1:
        raise ValueError(f"scale must be below 1, got {r}")
    s = render_scale(r)
    return ChRecord(
        scale=r,
        pair=SizePair(r, Pow2(OMEGA)),
        dimension=RealVal(1.0),
        statement=f"({s}, 2^w) = ({s}, 1/r) = 1",
        corollary="w * (r, 2) = 1",
    )


def ch_dimension(count) -> SymbolicDim:
    """Dimension of ``(r, count)`` as ``r -> 0`` under the continuum rule.

    ``(r, 2^w)`` has dimension 1, so ``(r, 2)`` has dimension ``1/w`` and
    ``(r, 2^X) = X * (r, 2)`` has dimension ``X/w``.
    """
    count = as_mvalue(count)
    if isinstance(count, Pow2):
        if isinstance(count.exponent, Omega):
            return RealVal(1.0)
        return MRatio(count.exponent, OMEGA)
    return LogRatio(count)


def ch_rewrite_chain(count) -> list:
    """The rewriting steps from ``(r, count)`` to its symbolic dimension."""
    count = as_mvalue(count)
    steps = [f"(r, {count})"]
    if isinstance(count, Pow2):
        if isinstance(count.exponent, Omega):
            steps.append("(r, 1/r)")
        else:
            steps.append(f"{count.exponent} * (r, 2)")
    steps.append(str(ch_dimension(count)))
    return steps


def gch_dimension_sequence(n: int) -> list:
    """Dimensions of ``w, 2^w, 2^(2^w), ...`` (the first ``n``)."""
    if n < 1:
        raise ValueError("sequence length must be at least 1")
    return [ch_dimension(omega_tower(k)) for k in range(n)]


def ch_consistency(k_max: int = 12) -> list:
    """``(k, dim(10^-k, ceil(10^k)))`` for ``k = 1 .. k_max``."""
    out = []
    for k in range(1, k_max + 1):
        r = make_scale(f"1/{10**k}")
        n = -(-1 // r)
        out.append((k, pair_dimension(SizePair(r, Finite(int(n))))))
    return out


def equal_cardinality(s1: SetModel, s2: SetModel) -> bool:
    for s in (s1, s2):
        if not isinstance(s, (FinitePoints, SymbolicNaturals)):
            raise UnsupportedModel(f"cardinality comparison is undefined for {type(s).__name__}")
    return sizes_equal(s1, s2)
