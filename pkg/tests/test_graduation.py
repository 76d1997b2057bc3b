import itertools

import pytest
from hypothesis import assume, given, strategies as st

from setsize.errors import ExponentTooLarge, ParseError, SymbolicUnsupported, UnderflowError
from setsize.graduation import (
    OMEGA,
    ONE,
    ZERO,
    Finite,
    Ordering,
    Pow2,
    Prod,
    Sum,
    m_add,
    m_compare,
    m_mul,
    m_pow2,
    m_sub,
    normalize,
    omega_tower,
    parse_mvalue,
    tower_height,
)

from strategies import finite, naturals, trees


def test_add_examples():
    assert m_add(Finite(2), Finite(3)) == Finite(5)
    assert m_add(ZERO, OMEGA) == OMEGA
    assert m_add(OMEGA, OMEGA) == Sum(OMEGA, OMEGA)


def test_sub_examples():
    assert m_sub(Finite(5), Finite(2)) == Finite(3)
    assert m_sub(Finite(2), Finite(2)) == ZERO
    with pytest.raises(UnderflowError):
        m_sub(Finite(2), Finite(5))
    with pytest.raises(SymbolicUnsupported):
        m_sub(OMEGA, Finite(1))


def test_mul_examples():
    assert m_mul(Finite(4), Finite(6)) == Finite(24)
    assert m_mul(ZERO, OMEGA) == ZERO
    assert m_mul(Finite(2), OMEGA) == Prod(Finite(2), OMEGA)
    assert m_mul(OMEGA, Finite(2)) == Prod(Finite(2), OMEGA)
    assert m_mul(ONE, OMEGA) == OMEGA


def test_pow2_examples():
    assert m_pow2(Finite(3)) == Finite(8)
    assert m_pow2(OMEGA) == Pow2(OMEGA)
    assert m_pow2(Pow2(OMEGA)) == Pow2(Pow2(OMEGA))
    with pytest.raises(ExponentTooLarge):
        m_pow2(Finite(10**6 + 1))
    assert m_pow2(Finite(20), bound=20) == Finite(2**20)


def test_compare_examples():
    assert m_compare(Finite(7), OMEGA) is Ordering.LESS
    assert m_compare(Pow2(OMEGA), Pow2(OMEGA)) is Ordering.EQUAL
    assert m_compare(Sum(OMEGA, OMEGA), Prod(Finite(2), OMEGA)) is Ordering.INCOMPARABLE
    assert m_compare(Pow2(OMEGA), Finite(10**40)) is Ordering.GREATER


def test_negative_finite_rejected():
    with pytest.raises(UnderflowError):
        Finite(-1)
    with pytest.raises(TypeError):
        Finite(1.0)


def test_rendering():
    assert str(OMEGA) == "w"
    assert str(Pow2(OMEGA)) == "2^w"
    assert str(Pow2(Pow2(OMEGA))) == "2^(2^w)"
    assert str(Sum(OMEGA, OMEGA)) == "(w+w)"
    assert str(Prod(Finite(2), OMEGA)) == "(2*w)"
    assert str(Pow2(Sum(Finite(1), OMEGA))) == "2^(1+w)"


@pytest.mark.parametrize("n", [10**3999, 10**4000 + 7, 2**65536, 3**20000], ids=["1e3999", "1e4000", "2^65536", "3^20000"])
def test_huge_integers_round_trip(n):
    text = str(Finite(n))
    assert parse_mvalue(text) == Finite(n)
    assert text[:20] == str(n // 10 ** (len(text) - 20))


def test_parse_errors():
    for text in ("", "w+", "3^w", "(w", "w)", "x"):
        with pytest.raises(ParseError):
            parse_mvalue(text)


@given(naturals, naturals)
def test_finite_arithmetic_matches_integers(a, b):
    assert m_add(Finite(a), Finite(b)) == Finite(a + b)
    assert m_mul(Finite(a), Finite(b)) == Finite(a * b)
    assert m_sub(m_add(Finite(a), Finite(b)), Finite(b)) == Finite(a)


@given(finite, finite, finite)
def test_finite_commutative_associative(a, b, c):
    assert m_add(a, b) == m_add(b, a)
    assert m_mul(a, b) == m_mul(b, a)
    assert m_add(m_add(a, b), c) == m_add(a, m_add(b, c))
    assert m_mul(m_mul(a, b), c) == m_mul(a, m_mul(b, c))


@given(naturals, naturals, naturals)
def test_compare_total_order_on_finite(a, b, c):
    ab = m_compare(Finite(a), Finite(b))
    assert ab is {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}[(a > b) - (a < b)]
    assert m_compare(Finite(b), Finite(a)) is ab.flipped()
    if ab is Ordering.LESS and m_compare(Finite(b), Finite(c)) is Ordering.LESS:
        assert m_compare(Finite(a), Finite(c)) is Ordering.LESS


def test_tower_order_transitive_exhaustive():
    values = [Finite(0), Finite(5)] + [omega_tower(h) for h in range(6)]
    rank = {v: i for i, v in enumerate(values)}
    for a, b in itertools.product(values, repeat=2):
        expected = Ordering.EQUAL if a == b else (Ordering.LESS if rank[a] < rank[b] else Ordering.GREATER)
        assert m_compare(a, b) is expected
    for a, b, c in itertools.product(values, repeat=3):
        if m_compare(a, b) is Ordering.LESS and m_compare(b, c) is Ordering.LESS:
            assert m_compare(a, c) is Ordering.LESS
    assert [tower_height(omega_tower(h)) for h in range(6)] == list(range(6))


def _depth(x):
    if isinstance(x, Pow2):
        return 1 + _depth(x.exponent)
    if isinstance(x, (Sum, Prod)):
        return 1 + max(_depth(x.left), _depth(x.right))
    return 0


def _is_normal(x):
    if isinstance(x, Pow2):
        return not isinstance(x.exponent, Finite) and _is_normal(x.exponent)
    if isinstance(x, (Sum, Prod)):
        if isinstance(x.left, Finite) and isinstance(x.right, Finite):
            return False
        if ZERO in (x.left, x.right):
            return False
        if isinstance(x, Prod) and ONE in (x.left, x.right):
            return False
        return _is_normal(x.left) and _is_normal(x.right)
    return True


def _normal(x):
    try:
        return normalize(x)
    except ExponentTooLarge:
        assume(False)


@given(trees)
def test_normalize_idempotent(x):
    assume(_depth(x) <= 8)
    n = _normal(x)
    assert normalize(n) == n
    assert _is_normal(n)


@given(trees)
def test_render_parse_round_trip(x):
    n = _normal(x)
    assert parse_mvalue(str(n)) == n


@given(st.integers(0, 3), st.integers(0, 3))
def test_finite_trees_fold_to_integers(a, b):
    assert normalize(Sum(Pow2(Finite(a)), Prod(Finite(b), Finite(a)))) == Finite(2**a + a * b)
