from fractions import Fraction

from heckepoly.exactlinalg import ExactMatrix
from heckepoly.polyring import BoundedPolynomial
from heckepoly.serialize import (
    charpoly_latex,
    fraction_latex,
    fraction_str,
    matrix_json,
    matrix_latex,
    poly_json,
    poly_latex,
    poly_text,
)


def test_fraction_str():
    assert fraction_str(Fraction(3, 2)) == "3/2"
    assert fraction_str(Fraction(-691, 2730)) == "-691/2730"
    assert fraction_str(Fraction(4)) == "4"
    assert fraction_str(0) == "0"


def test_fraction_latex():
    assert fraction_latex(Fraction(-1, 15)) == r"-\frac{1}{15}"
    assert fraction_latex(Fraction(7)) == "7"


def test_poly_renderings():
    p = Fraction(-1, 15) * BoundedPolynomial([0, 1, 0, -5, 0, 4], bound=6)
    assert poly_json(p) == {"bound": 6, "coeffs": ["0", "-1/15", "0", "1/3", "0", "-4/15", "0"]}
    assert poly_text(p) == "-4/15*X^5 + 1/3*X^3 - 1/15*X"
    assert poly_latex(p) == r"-\frac{4}{15}X^{5}+\frac{1}{3}X^{3}-\frac{1}{15}X"
    assert poly_text(BoundedPolynomial.zero(3)) == "0"


def test_matrix_renderings():
    m = ExactMatrix([[-208, 36], [-1120, 184]])
    assert matrix_json(m) == [["-208", "36"], ["-1120", "184"]]
    assert "pmatrix" in matrix_latex(m)


def test_charpoly_latex():
    assert charpoly_latex([Fraction(2048), Fraction(24), Fraction(1)]) == "x^{2}+24x+2048"
    assert charpoly_latex([Fraction(0), Fraction(-1), Fraction(1)]) == "x^{2}-x"
