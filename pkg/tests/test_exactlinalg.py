import random
from fractions import Fraction
from math import factorial

import pytest

from heckepoly.errors import (
    InconsistentSystemError,
    SingularMatrixError,
    UnderdeterminedSystemError,
)
from heckepoly.exactlinalg import (
    ExactMatrix,
    charpoly,
    determinant,
    hankel_bernoulli,
    mat_inverse,
    rank,
    solve_right,
)
from heckepoly.exactnum import bernoulli_number


def test_matrix_basics():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m[0, 1] == 2
    assert m.trace() == 5
    assert m.transpose() == ExactMatrix([[1, 3], [2, 4]])
    assert not m.is_symmetric()
    assert (m * ExactMatrix.identity(2)) == m
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_inverse_examples():
    ident = ExactMatrix.identity(4)
    assert mat_inverse(ident) == ident
    m = ExactMatrix([[1, 2], [3, 4]])
    assert mat_inverse(m) == ExactMatrix([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]])


def test_inverse_singular_rank():
    with pytest.raises(SingularMatrixError) as info:
        mat_inverse(ExactMatrix([[0, 0], [0, 0]]))
    assert info.value.rank == 0
    with pytest.raises(SingularMatrixError) as info:
        mat_inverse(ExactMatrix([[1, 2], [2, 4]]))
    assert info.value.rank == 1


def test_inverse_random_roundtrip():
    rng = random.Random(17)
    for size in range(1, 9):
        for _ in range(6):
            m = ExactMatrix([[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)])
            try:
                inv = mat_inverse(m)
            except SingularMatrixError:
                assert determinant(m) == 0
                continue
            assert m * inv == ExactMatrix.identity(size)
            assert inv * m == ExactMatrix.identity(size)


def test_determinant_values():
    assert determinant(ExactMatrix([[1, 2], [3, 4]])) == -2
    assert determinant(ExactMatrix.identity(5)) == 1
    assert determinant(ExactMatrix([[Fraction(1, 2), 0], [7, Fraction(2, 3)]])) == Fraction(1, 3)
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(1, 6)
        m = ExactMatrix([[Fraction(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)])
        # cofactor expansion as the independent oracle
        assert determinant(m) == _cofactor_det(m.entries)


def _cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _cofactor_det(minor)
    return total


def test_charpoly_examples():
    assert charpoly(ExactMatrix.identity(2)) == [Fraction(1), Fraction(-2), Fraction(1)]
    assert charpoly(ExactMatrix([[-208, 36], [-1120, 184]])) == [Fraction(2048), Fraction(24), Fraction(1)]
    companion = ExactMatrix([[0, 0, 5], [1, 0, 0], [0, 1, 0]])
    assert charpoly(companion) == [Fraction(-5), Fraction(0), Fraction(0), Fraction(1)]


def test_charpoly_trace_det_relations():
    rng = random.Random(31)
    for _ in range(12):
        n = rng.randint(1, 6)
        m = ExactMatrix([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
        cp = charpoly(m)
        assert len(cp) == n + 1
        assert cp[n] == 1
        assert cp[n - 1] == -m.trace()
        assert cp[0] == (-1) ** n * determinant(m)


def test_rank():
    assert rank(ExactMatrix([[1, 2], [2, 4], [3, 6]])) == 1
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(ExactMatrix.zeros(2, 3)) == 0


def test_solve_right():
    a = ExactMatrix([[1, 0], [0, 1], [1, 1]])
    b = ExactMatrix([[2], [3], [5]])
    assert solve_right(a, b) == ExactMatrix([[2], [3]])
    with pytest.raises(InconsistentSystemError):
        solve_right(a, ExactMatrix([[2], [3], [6]]))
    with pytest.raises(UnderdeterminedSystemError):
        solve_right(ExactMatrix([[1, 1], [2, 2]]), ExactMatrix([[1], [2]]))


def test_hankel_one_by_one():
    det, closed = hankel_bernoulli(1, 1)
    assert det == closed == Fraction(1, 12)  # B_2/2! = 4^-1 * 3^-1
    det, closed = hankel_bernoulli(2, 1)
    assert det == closed == Fraction(-1, 720)  # B_4/4!
    det, closed = hankel_bernoulli(3, 1)
    assert det == closed == Fraction(1, 30240)  # B_6/6!


def test_hankel_matches_direct_determinant():
    for which in (1, 2, 3):
        for n in range(1, 6):
            det, closed = hankel_bernoulli(which, n)
            entries = [
                [
                    bernoulli_number(2 * i + 2 * j + 2 * which) / factorial(2 * i + 2 * j + 2 * which)
                    for j in range(n)
                ]
                for i in range(n)
            ]
            assert det == _cofactor_det(entries)
            assert det == closed


def test_hankel_input_guards():
    with pytest.raises(ValueError):
        hankel_bernoulli(4, 1)
    with pytest.raises(ValueError):
        hankel_bernoulli(1, 0)
