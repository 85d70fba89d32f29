"""End-to-end Hecke matrix pipeline.

Builds the Gram-style matrices S1 (pairings of the base period polynomials)
and S2 (pairings against the corrected index-m polynomials) and solves
T_m = S1^-1 S2.  Complete for level 2; levels 3..5 run in an experimental
mode where a failed basis is surfaced, never patched.
"""

from dataclasses import dataclass

from .errors import BasisDeficientError, EmptySpaceError, LevelError, SingularMatrixError
from .exactlinalg import ExactMatrix, charpoly, mat_inverse
from .heckesum import r_minus_hecke
from .periodpoly import PeriodContext, r_plus_odd, s_poly
from .polyring import coeff_inner_product

# dim S_k(Gamma0(N)) for N in {3, 4, 5}, even weight k; values from the
# standard genus-0 dimension count for these index <= 6 groups, spot-checked
# against the worked examples in scope (e.g. dim S_10(Gamma0(4)) = 3).
_DIM_TABLE = {
    3: {k: k // 3 - 1 for k in range(4, 63, 2)},
    4: {k: k // 2 - 2 for k in range(4, 63, 2)},
    5: {k: 2 * (k // 4) - 1 for k in range(4, 63, 2)},
}

_BASIS_VARIANTS = ("even_low", "even_high", "odd_low", "odd_high")


def dim_cusp(level, w):
    """Dimension of the weight-(w+2) cusp space on Gamma0(level), level in {2..5}."""
    if w < 2 or w % 2:
        raise ValueError("w must be an even integer >= 2")
    if level == 2:
        return (w - 2) // 4
    if level in _DIM_TABLE:
        table = _DIM_TABLE[level]
        k = w + 2
        if k not in table:
            raise LevelError("weight %d outside the stored dimension table for level %d" % (k, level))
        return table[k]
    raise LevelError("level %d unsupported (need 2..5)" % level)


def basis_matrix(w, which):
    """Coefficient matrix certifying one of the four level-2 period bases.

    Rows index the basis forms, columns the designated coefficients:

    * ``even_low``:  coeff of X^(w-2j+1) in the odd polynomial of index 2i
    * ``even_high``: coeff of X^(2j-1)   in the odd polynomial of index w-2i
    * ``odd_low``:   coeff of X^(w-2j)   in the even polynomial of index 2i-1
    * ``odd_high``:  coeff of X^(2j)     in the even polynomial of index w-2i+1
    """
    if which not in _BASIS_VARIANTS:
        raise ValueError("which must be one of %s" % (_BASIS_VARIANTS,))
    d = dim_cusp(2, w)
    if d == 0:
        return ExactMatrix([], cols=0)
    rows = []
    for i in range(1, d + 1):
        if which == "even_low":
            poly = s_poly(PeriodContext(2, w, 2 * i))
            rows.append([poly.coeff(w - 2 * j + 1) for j in range(1, d + 1)])
        elif which == "even_high":
            poly = s_poly(PeriodContext(2, w, w - 2 * i))
            rows.append([poly.coeff(2 * j - 1) for j in range(1, d + 1)])
        elif which == "odd_low":
            poly = r_plus_odd(PeriodContext(2, w, 2 * i - 1))
            rows.append([poly.coeff(w - 2 * j) for j in range(1, d + 1)])
        else:
            poly = r_plus_odd(PeriodContext(2, w, w - 2 * i + 1))
            rows.append([poly.coeff(2 * j) for j in range(1, d + 1)])
    return ExactMatrix(rows)


@dataclass
class HeckeComputation:
    """One full T_m computation with its intermediate matrices."""

    level: int
    w: int
    m: int
    basis_indices: list
    s1: ExactMatrix
    s2: ExactMatrix
    t: ExactMatrix

    def charpoly(self):
        return charpoly(self.t)


def hecke_computation(level, w, m):
    """Compute T_m on the weight-(w+2) cusp space, with S1, S2 retained.

    The matrix represents T_m with respect to the normalized even-index
    period basis; entries are exact rationals.
    """
    if m < 1:
        raise ValueError("m must be positive")
    d = dim_cusp(level, w)
    if d == 0:
        raise EmptySpaceError("dimension 0 (d_w = 0) for level %d, w = %d" % (level, w))
    indices = [2 * i for i in range(1, d + 1)]
    if indices[-1] >= w:
        raise BasisDeficientError(
            "dimension %d exceeds the %d even period indices available at w = %d" % (d, (w - 2) // 2, w)
        )
    base = [s_poly(PeriodContext(level, w, n)) for n in indices]
    images = [r_minus_hecke(PeriodContext(level, w, n), m) for n in indices]
    s1 = ExactMatrix([[coeff_inner_product(bi, bj) for bj in base] for bi in base])
    s2 = ExactMatrix([[coeff_inner_product(bi, img) for img in images] for bi in base])
    try:
        t = mat_inverse(s1) * s2
    except SingularMatrixError as exc:
        raise BasisDeficientError(
            "period polynomials of indices %s are dependent (rank %s); no basis at level %d, w = %d"
            % (indices, exc.rank, level, w)
        ) from exc
    return HeckeComputation(level=level, w=w, m=m, basis_indices=indices, s1=s1, s2=s2, t=t)


def hecke_matrix(level, w, m):
    """The matrix of T_m on S_{w+2}(Gamma0(level)) in the period basis."""
    return hecke_computation(level, w, m).t


def hecke_charpoly(level, w, m):
    """Characteristic polynomial of T_m, monic, coefficients ascending."""
    return charpoly(hecke_matrix(level, w, m))
