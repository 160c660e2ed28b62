"""Exact arithmetic for rational-coefficient polynomials and rational functions.

Coefficients are arbitrary-precision ``fractions.Fraction`` values; nothing in
this module touches floating point.  All values are immutable after
construction, so they can be shared freely between threads.

The module also provides the two matrix workhorses the rest of the package is
built on:

* ``charpoly_and_adjugate`` -- the characteristic polynomial of an integer
  matrix M together with the adjugate of (xI - M), computed by the
  Faddeev-LeVerrier recurrence in exact integer arithmetic.
* ``polymatrix_det`` -- the determinant of a matrix of polynomials, computed
  by evaluating at enough integer points (fraction-free Bareiss elimination
  per point) and interpolating against a provable degree bound.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Degree of the zero polynomial.  Kept as a comparable sentinel so degree
#: arithmetic (max over rows, bounds) never hits an off-by-one.
NEG_INF = float("-inf")


def _coeff(value) -> Fraction:
    """Coerce an exact scalar (int, Fraction or decimal string) to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Univariate polynomial, coefficients ascending by degree.

    The coefficient tuple never has trailing zeros; the zero polynomial is the
    empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, with NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = c / lead
                quot[i - db] = q
                for j, cb in enumerate(other.coeffs):
                    rem[i - db + j] -= q * cb
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Divide, insisting on a zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def gcd(self, other) -> "Poly":
        """Monic greatest common divisor (zero if both arguments are zero)."""
        a, b = self, _as_poly(other)
        while not b.is_zero:
            a, b = b, a % b
        return a if a.is_zero else a.monic()

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Fraction:
        x = _coeff(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- housekeeping -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == _as_poly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = f"{mag}"
            else:
                xpart = "x" if k == 1 else f"x^{k}"
                term = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([_coeff(value)])


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_to_json(p: Poly) -> list:
    """Ascending-degree list of decimal-string rationals, e.g. ["-1","0","1"]."""
    return [str(c) for c in p.coeffs]


def poly_from_json(data) -> Poly:
    return Poly([Fraction(str(c)) for c in data])


def lagrange_interpolate(points, degree_bound: int) -> Poly:
    """Unique polynomial of degree <= degree_bound through the given points.

    Expects at least degree_bound + 1 points with pairwise distinct abscissae;
    extra points are honoured (a ValueError is raised if they cannot all lie
    on one polynomial of the stated degree).
    """
    pts = [(_coeff(x), _coeff(y)) for x, y in points]
    if len(pts) < degree_bound + 1:
        raise ValueError("not enough interpolation points for the degree bound")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    master = ONE
    for x in xs:
        master = master * Poly([-x, 1])
    acc = ZERO
    for x, y in pts:
        if y == 0:
            continue
        basis = master.exact_div(Poly([-x, 1]))
        acc = acc + basis * (y / basis(x))
    if not acc.is_zero and acc.degree > degree_bound:
        raise ValueError("points do not lie on a polynomial of the stated degree")
    return acc


class RatFun:
    """Quotient of two polynomials, kept fully reduced with a monic denominator.

    Zero is stored as 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = num.gcd(den)
            num = num.exact_div(g)
            den = den.exact_div(g)
            lead = den.leading
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _as_ratfun(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfun(other))

    def __rsub__(self, other):
        return _as_ratfun(other) + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (RatFun, Poly, int, Fraction)):
            other = _as_ratfun(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_ratfun(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    return RatFun(_as_poly(value))


RATFUN_ZERO = RatFun(ZERO)


def ratfun_to_json(f: RatFun) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfun_from_json(data) -> RatFun:
    return RatFun(poly_from_json(data["num"]), poly_from_json(data["den"]))


class IntMatrix:
    """Dense matrix of exact integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match the matrix shape")
        for e in entries:
            if not isinstance(e, int):
                raise TypeError("IntMatrix entries must be int")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [self.entries[i * self.cols + j]
                          for j in range(self.cols) for i in range(self.rows)])

    def __add__(self, other):
        self._shape_check(other)
        return IntMatrix(self.rows, self.cols,
                         [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._shape_check(other)
        return IntMatrix(self.rows, self.cols,
                         [a - b for a, b in zip(self.entries, other.entries)])

    def _shape_check(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a = self.to_rows()
        bt = other.transpose().to_rows()
        out = []
        for arow in a:
            for bcol in bt:
                out.append(sum(x * y for x, y in zip(arow, bcol)))
        return IntMatrix(self.rows, other.cols, out)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [k * e for e in self.entries])

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.at(i, i) for i in range(self.rows))

    def submatrix(self, row_idx, col_idx) -> "IntMatrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return IntMatrix(len(row_idx), len(col_idx),
                         [self.at(i, j) for i in row_idx for j in col_idx])

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix.from_rows({self.to_rows()!r})"


class PolyMatrix:
    """Dense matrix of Poly entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_as_poly(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match the matrix shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"PolyMatrix.from_rows({self.to_rows()!r})"


def charpoly_and_adjugate(m: IntMatrix):
    """Characteristic polynomial det(xI - M) and adjugate of (xI - M).

    Runs the Faddeev-LeVerrier recurrence entirely in integer arithmetic:
    with M_1 = I and c_n = 1,

        c_{n-k} = -trace(M @ M_k) / k,
        M_{k+1} = M @ M_k + c_{n-k} I,

    the characteristic polynomial is x^n + c_{n-1} x^{n-1} + ... + c_0 and
    adj(xI - M) = sum_k M_k x^{n-k}.  The trace divisions are exact for
    integer matrices.  Satisfies (xI - M) @ adj = charpoly * I.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE, PolyMatrix(0, 0, [])
    a = m.to_rows()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mats = []
    for k in range(1, n + 1):
        mats.append(mk)
        prod = _int_rows_matmul(a, mk)
        tr = sum(prod[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier trace division not exact")
        coeffs[n - k] = c
        if k < n:
            mk = [[prod[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    charpoly = Poly(coeffs)
    # coefficient of x^d in adj entry (i, j) is mats[n-1-d][i][j]
    adj_entries = []
    for i in range(n):
        for j in range(n):
            adj_entries.append(Poly([mats[n - 1 - d][i][j] for d in range(n)]))
    return charpoly, PolyMatrix(n, n, adj_entries)


def _int_rows_matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(arow, bcol)) for bcol in bt] for arow in a]


def _bareiss_det_int(rows) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    rows = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            rk = rows[k]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def fraction_matrix_det(rows) -> Fraction:
    """Exact determinant of a matrix of Fractions.

    Rows are scaled to integers first so the elimination itself is
    fraction-free.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    int_rows = []
    for row in rows:
        cs = [_coeff(c) for c in row]
        den = math.lcm(*(c.denominator for c in cs)) if cs else 1
        scale *= den
        int_rows.append([int(c * den) for c in cs])
    return Fraction(_bareiss_det_int(int_rows), scale)


def polymatrix_det(m: PolyMatrix) -> Poly:
    """Exact determinant of a square polynomial matrix.

    The degree is bounded by the sum over rows of the largest entry degree;
    the determinant is recovered from scalar evaluations at the points
    0, 1, -1, 2, -2, ... by Lagrange interpolation.  Each scalar determinant
    is computed by fraction-free elimination, so any evaluation point is
    safe.
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    bound = 0
    grid = m.to_rows()
    for row in grid:
        row_deg = max(e.degree for e in row)
        if row_deg == NEG_INF:
            return ZERO
        bound += int(row_deg)
    points = list(_eval_points(bound + 1))
    samples = []
    for x in points:
        rows = [[e(x) for e in row] for row in grid]
        samples.append((x, fraction_matrix_det(rows)))
    return lagrange_interpolate(samples, bound)


def _eval_points(count: int):
    """Yield 0, 1, -1, 2, -2, ... (count of them)."""
    yielded = 0
    k = 0
    while yielded < count:
        if k == 0:
            yield 0
            yielded += 1
        else:
            yield k
            yielded += 1
            if yielded < count:
                yield -k
                yielded += 1
        k += 1
