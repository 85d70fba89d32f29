"""Exact dense linear algebra over the rationals.

Determinants go through fraction-free Bareiss elimination on a
denominator-cleared integer matrix; inverses use exact rational Gauss-Jordan
(dimensions stay small here); characteristic polynomials use
Faddeev-LeVerrier, whose only divisions are by integers.
"""

from fractions import Fraction
from math import factorial, lcm

from .errors import (
    InconsistentSystemError,
    SingularMatrixError,
    UnderdeterminedSystemError,
)
from .exactnum import bernoulli_number


def _as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class ExactMatrix:
    """Dense matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [[_as_fraction(x) for x in row] for row in entries]
        rows = len(entries)
        if rows:
            cols = len(entries[0])
            if any(len(row) != cols for row in entries):
                raise ValueError("ragged rows")
        else:
            cols = cols or 0
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return ExactMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], cols=self.rows)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self):
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], cols=self.cols
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], cols=self.cols
        )

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch: %dx%d times %dx%d" % (self.rows, self.cols, other.rows, other.cols))
            tcols = other.transpose().entries
            return ExactMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in tcols] for row in self.entries],
                cols=other.cols,
            )
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return ExactMatrix([[c * x for x in row] for row in self.entries], cols=self.cols)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __repr__(self):
        return "ExactMatrix(%r)" % [[str(x) for x in row] for row in self.entries]


def determinant(mat):
    """Exact determinant by Bareiss fraction-free elimination."""
    if not mat.is_square():
        raise ValueError("determinant needs a square matrix")
    n = mat.rows
    if n == 0:
        return Fraction(1)
    # clear denominators row by row; det scales by the product of the row scales
    work = []
    scale = 1
    for row in mat.entries:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        scale *= mult
        work.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (pivot * work[i][j] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = pivot
    return Fraction(sign * work[n - 1][n - 1], scale)


def mat_inverse(mat):
    """Exact inverse via Gauss-Jordan elimination.

    Raises SingularMatrixError carrying the rank when the matrix is singular.
    """
    if not mat.is_square():
        raise ValueError("inverse needs a square matrix")
    n = mat.rows
    a = [row[:] for row in mat.entries]
    inv = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        pivot_row = None
        for i in range(rank, n):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv[rank], inv[pivot_row] = inv[pivot_row], inv[rank]
        pivot = a[rank][col]
        a[rank] = [x / pivot for x in a[rank]]
        inv[rank] = [x / pivot for x in inv[rank]]
        for i in range(n):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[rank])]
        rank += 1
    if rank < n:
        raise SingularMatrixError("matrix is singular (rank %d of %d)" % (rank, n), rank=rank)
    return ExactMatrix(inv)


def rank(mat):
    """Exact rank by rational row reduction."""
    a = [row[:] for row in mat.entries]
    r = 0
    for col in range(mat.cols):
        pivot_row = next((i for i in range(r, mat.rows) if a[i][col]), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        a[r] = [x / pivot for x in a[r]]
        for i in range(mat.rows):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def solve_right(a, b):
    """Solve A X = B exactly for the unique X; A may have more rows than columns.

    Raises UnderdeterminedSystemError when the solution is not unique and
    InconsistentSystemError when there is none.
    """
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    n, d, t = a.rows, a.cols, b.cols
    aug = [a.entries[i][:] + b.entries[i][:] for i in range(n)]
    r = 0
    pivots = []
    for col in range(d):
        pivot_row = next((i for i in range(r, n) if aug[i][col]), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pivot = aug[r][col]
        aug[r] = [x / pivot for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if r < d:
        raise UnderdeterminedSystemError("system rank %d < %d unknowns" % (r, d))
    for i in range(r, n):
        if any(aug[i][d:]):
            raise InconsistentSystemError("system has no exact solution")
    x = [[Fraction(0)] * t for _ in range(d)]
    for row, col in enumerate(pivots):
        x[col] = aug[row][d:]
    return ExactMatrix(x, cols=t)


def charpoly(mat):
    """Characteristic polynomial det(xI - M), monic, coefficients ascending.

    Faddeev-LeVerrier iteration: every division is by an integer, so the
    result is exact for rational input.
    """
    if not mat.is_square():
        raise ValueError("charpoly needs a square matrix")
    n = mat.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m_k = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        m_k = mat * m_k
        c = -m_k.trace() / k
        coeffs[n - k] = c
        if k < n:
            m_k = m_k + ExactMatrix.identity(n) * c
    return coeffs


def _odd_product(lo, hi, base, expo):
    value = Fraction(1)
    for i in range(lo, hi + 1):
        value /= Fraction(base(i)) ** expo(i)
    return value


_HANKEL_CLOSED = {
    1: lambda n: Fraction(1, 4 ** (n * n)) * _odd_product(1, 2 * n - 1, lambda i: 2 * i + 1, lambda i: 2 * n - i),
    2: lambda n: Fraction((-1) ** n, 4 ** (n * n + n) * 9**n)
    * _odd_product(1, 2 * n - 1, lambda i: 2 * i + 3, lambda i: 2 * n - i),
    3: lambda n: Fraction((n + 1) * (2 * n + 3), 4 ** (n * n + 2 * n))
    * _odd_product(1, 2 * n + 1, lambda i: 2 * i + 1, lambda i: 2 * n + 2 - i),
}


def hankel_bernoulli(which, n):
    """Hankel determinant of Bernoulli numbers and its closed-form product.

    The n x n matrix has entries B_{2i+2j+2k0} / (2i+2j+2k0)! for
    0 <= i, j <= n-1 with offset k0 = which in {1, 2, 3}.  Returns the pair
    (determinant, closed form); the two agree identically.
    """
    if which not in (1, 2, 3):
        raise ValueError("which must be 1, 2, or 3")
    if n < 1:
        raise ValueError("n must be positive")
    entries = [
        [bernoulli_number(2 * i + 2 * j + 2 * which) / factorial(2 * i + 2 * j + 2 * which) for j in range(n)]
        for i in range(n)
    ]
    det = determinant(ExactMatrix(entries))
    return det, _HANKEL_CLOSED[which](n)
