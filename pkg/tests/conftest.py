"""Shared test helpers.

``cofactor_det`` is the independent determinant oracle used throughout the
tests: plain recursive cofactor expansion, working over any commutative ring
(Fractions, ints, Poly).  It shares no code with the library's elimination or
recurrence paths.
"""

from fractions import Fraction

from coronaspectra import IntMatrix, Poly


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        lead = rows[0][j]
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = lead * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def charpoly_via_cofactor(m: IntMatrix) -> Poly:
    """Characteristic polynomial by cofactor expansion of xI - M."""
    n = m.rows
    rows = [[Poly([-m.at(i, j), 1]) if i == j else Poly([-m.at(i, j)])
             for j in range(n)] for i in range(n)]
    return cofactor_det(rows)


def fraction_rows(int_rows):
    return [[Fraction(v) for v in row] for row in int_rows]
