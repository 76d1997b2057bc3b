import pytest

from setsize.errors import AlgebraError, ParseError
from setsize.expr import evaluate, render_value, value_kind


def ev(text):
    return render_value(evaluate(text))


@pytest.mark.parametrize("text, expected", [
    ("(1/2,3)+(1/2,4)", "(1/2,7)"),
    ("dist((1/2,3),(1/2,8))", "(1/2,5)"),
    ("(1/2, 7) - (1/2, 4)", "(1/2,3)"),
    ("(1/2,2)*(1/2,2)", "(1/4,4)"),
    ("2*(1/2,3)", "(1/2,9)"),
    ("(1/2,3)*2", "(1/2,9)"),
    ("(1/4,16)^(1/2)", "(1/4,4)"),
    ("1/2*(1/4,16)", "(1/4,4)"),
    ("((1/2,1)+(1/2,1))^3", "(1/2,8)"),
    ("(0+, w) ", "(0+,w)"),
    ("(1/2,w)+(1/2,2^w)", "(1/2,(w+2^w))"),
    ("1/2 + 0.25", "3/4"),
    ("2^10", "1024"),
])
def test_values(text, expected):
    assert ev(text) == expected


def test_dim():
    assert evaluate("dim((1/27,8))") == pytest.approx(0.6309297535714574, abs=1e-15)
    assert value_kind(evaluate("dim((1/4,16))")) == "real"
    assert value_kind(evaluate("(1/2,3)")) == "pair"


@pytest.mark.parametrize("text, position", [
    ("(1/2,3)+(1/3,4)", 7),
    ("(1/2,3) - (1/2,5)", 8),
    ("(1/3,1)*3", 7),
    ("(1/4,15)^(1/2)", 8),
    ("dim((1/2,1))", 0),
    ("(1/2,3)+1", 7),
    ("(0+,2)+(0+,3)", 6),
])
def test_errors_carry_operator_position(text, position):
    with pytest.raises(AlgebraError) as err:
        evaluate(text)
    assert err.value.position == position


@pytest.mark.parametrize("text", ["", "(1/2,3", "(1/2,3))", "foo", "(1/2,3)+", "1/0", "(0,3)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        evaluate(text)
