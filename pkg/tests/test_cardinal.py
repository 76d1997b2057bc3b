import random

import pytest

from setsize.cardinal import (
    HYPOTHESIS,
    LogRatio,
    MRatio,
    OpaqueSet,
    RealVal,
    cardinality_of,
    ch_consistency,
    ch_dimension,
    ch_equation,
    ch_rewrite_chain,
    equal_cardinality,
    gch_dimension_sequence,
    power_set_count,
    size_of_naturals,
)
from setsize.errors import UnsupportedModel
from setsize.graduation import OMEGA, ONE, ZERO, Finite, Pow2, normalize, omega_tower
from setsize.pair import LIMIT_ZERO, SizePair
from setsize.sets import CANTOR, SymbolicNaturals, finite_points


def test_cardinality_examples():
    n = cardinality_of(SymbolicNaturals())
    assert str(n) == "(N, 1)" and n.count == ONE and n.graduation1 == OMEGA
    three = cardinality_of(finite_points([0, 1, 2]))
    assert str(three) == "({0, 1, 2}, 1)" and three.graduation1 == Finite(3)
    assert str(cardinality_of(OpaqueSet("U"))) == "(U, 1)"
    assert cardinality_of(CANTOR).count == ONE


def test_size_of_naturals():
    assert size_of_naturals("1/2") == SizePair("1/2", OMEGA)
    assert str(size_of_naturals(LIMIT_ZERO)) == "(0+, w)"


def test_ch_equation():
    rec = ch_equation()
    assert rec.statement == "(0+, 2^w) = (0+, 1/r) = 1"
    assert rec.corollary == "w * (r, 2) = 1"
    assert rec.status == HYPOTHESIS and str(rec.dimension) == "1"
    assert rec.pair == SizePair(LIMIT_ZERO, Pow2(OMEGA))
    assert ch_equation("1/2").statement.startswith("(1/2, 2^w)")
    with pytest.raises(ValueError):
        ch_equation(1)


def test_ch_rule_is_not_global():
    assert normalize(Pow2(OMEGA)) == Pow2(OMEGA)
    assert ch_dimension(Pow2(OMEGA)) == RealVal(1.0)


def test_gch_sequence():
    assert [str(d) for d in gch_dimension_sequence(4)] == ["ln w/ln(1/r)", "1", "2^w/w", "2^(2^w)/w"]
    assert [str(d) for d in gch_dimension_sequence(1)] == ["ln w/ln(1/r)"]
    assert gch_dimension_sequence(3)[2] == MRatio(Pow2(OMEGA), OMEGA)
    for n in range(1, 11):
        assert gch_dimension_sequence(n + 1)[:n] == gch_dimension_sequence(n)
    with pytest.raises(ValueError):
        gch_dimension_sequence(0)


def test_third_infinity_rewrite():
    assert ch_rewrite_chain(omega_tower(2)) == ["(r, 2^(2^w))", "2^w * (r, 2)", "2^w/w"]
    assert ch_rewrite_chain(Finite(3)) == ["(r, 3)", "ln 3/ln(1/r)"]


def test_symbolic_dim_types():
    assert str(RealVal(0.5)) == "0.5"
    assert str(LogRatio(OMEGA)) == "ln w/ln(1/r)"
    with pytest.raises(ZeroDivisionError):
        MRatio(OMEGA, ZERO)
    assert power_set_count(OMEGA) == Pow2(OMEGA) and power_set_count(3) == Finite(8)


def test_ch_consistency_converges_monotonically():
    values = ch_consistency(12)
    assert [k for k, _ in values] == list(range(1, 13))
    errors = [abs(d - 1.0) for _, d in values]
    assert all(e <= 1e-9 for e in errors)
    assert all(b <= a for a, b in zip(errors, errors[1:]))


def test_equal_cardinality_examples():
    assert equal_cardinality(finite_points([1, 2, 3]), finite_points([4, 5, 6]))
    assert equal_cardinality(SymbolicNaturals(), SymbolicNaturals())
    assert not equal_cardinality(finite_points([1, 2]), finite_points([1, 2, 3]))
    with pytest.raises(UnsupportedModel):
        equal_cardinality(CANTOR, CANTOR)


def test_equal_cardinality_matches_counting():
    rng = random.Random(11)
    for _ in range(1000):
        a = [rng.randrange(-50, 50) for _ in range(rng.randrange(0, 12))]
        b = [(rng.randrange(9), rng.randrange(9)) for _ in range(rng.randrange(0, 12))]
        assert equal_cardinality(finite_points(a, 1), finite_points(b, 2)) == (len(set(a)) == len(set(b)))
