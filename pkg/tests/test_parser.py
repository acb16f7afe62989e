from fractions import Fraction

import pytest

from p1parts.fields import GF, QQ
from p1parts.parser import (
    ParseError, ProblemError, parse_polynomial, parse_problem,
)
from p1parts.poly import Layout, Polynomial, ProjLayout, to_canonical_text

AX3 = Layout.affine(3)
PL3 = ProjLayout(3)


def test_parse_example_generator():
    f = parse_polynomial("x_1*(x_3^2*x_2+x_3+1)", AX3, QQ)
    x1 = Polynomial.var(QQ, 3, AX3.pos("x_1"))
    x2 = Polynomial.var(QQ, 3, AX3.pos("x_2"))
    x3 = Polynomial.var(QQ, 3, AX3.pos("x_3"))
    one = Polynomial.const(QQ, 3, 1)
    assert f == x1 * (x3 * x3 * x2 + x3 + one)


def test_parse_y_form():
    f = parse_polynomial("y_6^2+y_6", PL3, QQ)
    y6 = Polynomial.var(QQ, 12, PL3.y_pos(6))
    assert f == y6 * y6 + y6


def test_parse_precedence_and_unary():
    # '^' binds tighter than '*', '*' tighter than '+'
    assert parse_polynomial("2*y_1^2+1", PL3, QQ) == \
        parse_polynomial("(2*(y_1^2))+1", PL3, QQ)
    assert parse_polynomial("-y_1^2", PL3, QQ) == -parse_polynomial("y_1^2", PL3, QQ)
    assert parse_polynomial("1-y_1-y_2", PL3, QQ) == \
        parse_polynomial("1-(y_1+y_2)", PL3, QQ)


def test_parse_rational_coefficients():
    f = parse_polynomial("1/2*y_1-3/4", PL3, QQ)
    assert f.lead_coeff() == Fraction(1, 2)
    assert f.terms[(0,) * 12] == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_polynomial("1/2*y_1", PL3, GF(5))


def test_parse_errors_are_positioned():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x_1*", AX3, QQ)
    assert err.value.offset == 4

    with pytest.raises(ParseError) as err:
        parse_polynomial("x_9+1", AX3, QQ)
    assert err.value.offset == 0
    assert "unknown variable" in err.value.message

    with pytest.raises(ParseError):
        parse_polynomial("(y_1+1", PL3, QQ)
    with pytest.raises(ParseError):
        parse_polynomial("2 y_1", PL3, QQ)  # implicit multiplication
    with pytest.raises(ParseError):
        parse_polynomial("y_1 @ 2", PL3, QQ)
    with pytest.raises(ParseError):
        parse_polynomial("", PL3, QQ)


def test_parse_whitespace_insensitive():
    a = parse_polynomial("y_2 * y_1   -  1", ProjLayout(2), QQ)
    b = parse_polynomial("y_2*y_1-1", ProjLayout(2), QQ)
    assert a == b


EXAMPLE_FILE = """
# the running example
char 0
n 3
form x
ideal:
x_1*(x_3^2*x_2+x_3+1)
x_3*(x_3^2*x_2+x_3+1)
"""


def test_parse_problem():
    prob = parse_problem(EXAMPLE_FILE)
    assert prob.field == QQ
    assert prob.n == 3
    assert prob.form == "x"
    assert len(prob.generators) == 2
    assert prob.generators[1] == parse_polynomial(
        "x_3*(x_3^2*x_2+x_3+1)", AX3, QQ)


def test_parse_problem_semicolons_and_comments():
    prob = parse_problem(
        "char 5\nn 2\nform x\nideal:\nx_2*x_1-1 ; x_1^2  # two gens\n")
    assert prob.field == GF(5)
    assert len(prob.generators) == 2


def test_parse_problem_crlf():
    prob = parse_problem("char 5\r\nn 2\r\nform x\r\nideal:\r\nx_2*x_1-1\r\n")
    assert prob.n == 2


def test_parse_problem_y_form():
    prob = parse_problem("char 0\nn 2\nform y\nideal:\ny_4*y_2-y_3*y_1\n")
    assert prob.form == "y"
    assert prob.generators[0].nslots == 8


def test_parse_problem_errors():
    with pytest.raises(ProblemError, match="not prime"):
        parse_problem("char 4\nn 2\nform x\nideal:\nx_1\n")
    with pytest.raises(ProblemError, match="missing header"):
        parse_problem("char 5\nn 2\nideal:\nx_1\n")
    with pytest.raises(ProblemError, match="empty ideal"):
        parse_problem("char 5\nn 2\nform x\nideal:\n")
    with pytest.raises(ProblemError, match="empty ideal"):
        parse_problem("char 5\nn 2\nform x\n")
    with pytest.raises(ProblemError):
        parse_problem("char 5\nn 2\nform x\nideal:\nx_3\n")  # index > n
    with pytest.raises(ProblemError, match="z variable"):
        parse_problem("char 5\nn 2\nform y\nideal:\nz_1*y_2\n")
    with pytest.raises(ProblemError, match="form"):
        parse_problem("char 5\nn 2\nform q\nideal:\nx_1\n")
    with pytest.raises(ProblemError, match="duplicate"):
        parse_problem("char 5\nchar 5\nn 2\nform x\nideal:\nx_1\n")


def test_counterexample_problem():
    prob = parse_problem("char 5\nn 2\nform x\nideal:\nx_2*x_1-1\n")
    ax = Layout.affine(2)
    assert prob.generators[0] == parse_polynomial("x_2*x_1-1", ax, GF(5))


def test_round_trip_of_canonical_text():
    texts = ["y_6^2+y_6", "z_4*y_6^2+y_6+1", "y_6+2*y_5-1", "-1",
             "z_1-1", "y_5^2-y_5"]
    for s in texts:
        f = parse_polynomial(s, PL3, QQ)
        assert to_canonical_text(f, PL3) == s
