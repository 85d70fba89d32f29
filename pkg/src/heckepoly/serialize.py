"""Rendering of exact values: reduced rational strings, JSON shapes, text, LaTeX."""

from fractions import Fraction


def fraction_str(x):
    """Reduced 'p/q' string; integers render without the denominator."""
    x = x if isinstance(x, Fraction) else Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def fraction_latex(x):
    x = x if isinstance(x, Fraction) else Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(x.numerator), x.denominator)


def poly_json(poly):
    return {"bound": poly.bound, "coeffs": [fraction_str(c) for c in poly.coeffs]}


def _poly_terms(poly):
    terms = []
    for k in range(poly.bound, -1, -1):
        c = poly.coeff(k)
        if c:
            terms.append((k, c))
    return terms


def poly_text(poly):
    """Human-readable rendering, descending powers."""
    terms = _poly_terms(poly)
    if not terms:
        return "0"
    parts = []
    for idx, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if idx else "")
        mag = abs(c)
        if k == 0:
            body = fraction_str(mag)
        else:
            var = "X" if k == 1 else "X^%d" % k
            body = var if mag == 1 else "%s*%s" % (fraction_str(mag), var)
        parts.append((sign + " " if sign and idx else sign) + body)
    return " ".join(parts)


def poly_latex(poly):
    terms = _poly_terms(poly)
    if not terms:
        return "0"
    parts = []
    for idx, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if idx else "")
        mag = abs(c)
        if k == 0:
            body = fraction_latex(mag)
        else:
            var = "X" if k == 1 else "X^{%d}" % k
            body = var if mag == 1 else fraction_latex(mag) + var
        parts.append(sign + body)
    return "".join(parts)


def matrix_json(mat):
    return [[fraction_str(x) for x in row] for row in mat.entries]


def matrix_text(mat):
    widths = [0] * mat.cols
    cells = [[fraction_str(x) for x in row] for row in mat.entries]
    for row in cells:
        for j, s in enumerate(row):
            widths[j] = max(widths[j], len(s))
    return "\n".join("[ " + "  ".join(s.rjust(widths[j]) for j, s in enumerate(row)) + " ]" for row in cells)


def matrix_latex(mat):
    rows = [" & ".join(fraction_latex(x) for x in row) for row in mat.entries]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"


def coeffs_json(coeffs):
    return [fraction_str(c) for c in coeffs]


def charpoly_latex(coeffs):
    """Monic polynomial in x from ascending coefficients."""
    n = len(coeffs) - 1
    parts = []
    for k in range(n, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = fraction_latex(mag)
        else:
            var = "x" if k == 1 else "x^{%d}" % k
            body = var if mag == 1 else fraction_latex(mag) + var
        parts.append(sign + body)
    return "".join(parts) if parts else "0"
