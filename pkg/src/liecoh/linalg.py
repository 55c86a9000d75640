"""Exact dense linear algebra over the rationals.

Everything in this module is exact: entries are `fractions.Fraction`
(always in lowest terms, positive denominator) and no rounding ever
happens.  Matrices and subspaces are immutable after construction, so all
operations are pure and safe to share between threads.

Conventions
-----------
* Vectors are plain tuples of Fractions.
* A `Subspace` stores its basis as the rows of a matrix in reduced row
  echelon form with no zero rows.  This makes the basis canonical: two
  subspaces are equal iff their basis matrices are equal.
* `rank` uses fraction-free (Bareiss) elimination on a denominator-cleared
  integer copy; canonical bases use ordinary rational reduction, since
  reduced echelon form needs division anyway.  The kernel/rank consistency
  checks in the test suite exercise both elimination routes against each
  other.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import ContainmentError, DimensionMismatchError

__all__ = [
    "QMatrix",
    "Subspace",
    "rank",
    "rref",
    "rref_transform",
    "solve",
    "kernel",
    "image",
    "quotient_basis",
    "vector",
    "unit_vector",
    "zero_vector",
]


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed; pass ints, Fractions or strings")
    return Fraction(x)


def vector(entries) -> tuple:
    """Coerce an iterable of ints/Fractions/strings into a rational vector.

    Floats are rejected outright: silently converting them would smuggle
    binary rounding into an exact computation.
    """
    return tuple(_frac(x) for x in entries)


def zero_vector(n: int) -> tuple:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


class QMatrix:
    """Immutable dense matrix of Fractions, row major.

    Zero-by-k and k-by-zero shapes are allowed; they show up naturally as
    differentials at the ends of a complex.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = tuple(vector(row) for row in data)
        self.rows = len(data)
        if data:
            self.cols = len(data[0])
            if any(len(row) != self.cols for row in data):
                raise DimensionMismatchError("rows of unequal length")
        else:
            if cols is None:
                cols = 0
            self.cols = cols
        self.data = data

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls(tuple(zero_vector(cols) for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(tuple(unit_vector(n, i) for i in range(n)), cols=n)

    @classmethod
    def from_columns(cls, columns, rows=None) -> "QMatrix":
        columns = [vector(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            rows = 0
        return cls(tuple(tuple(c[i] for c in columns) for i in range(rows)),
                   cols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        self._require_same_shape(other)
        return QMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                             for r, s in zip(self.data, other.data)), cols=self.cols)

    def __sub__(self, other):
        self._require_same_shape(other)
        return QMatrix(tuple(tuple(a - b for a, b in zip(r, s))
                             for r, s in zip(self.data, other.data)), cols=self.cols)

    def __neg__(self):
        return QMatrix(tuple(tuple(-a for a in r) for r in self.data), cols=self.cols)

    def scale(self, c) -> "QMatrix":
        c = _frac(c)
        return QMatrix(tuple(tuple(c * a for a in r) for r in self.data), cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            out = []
            for r in self.data:
                acc = [Fraction(0)] * other.cols
                for k, a in enumerate(r):
                    if a:
                        orow = other.data[k]
                        for j, b in enumerate(orow):
                            if b:
                                acc[j] += a * b
                row = tuple(acc)
                out.append(row)
            return QMatrix(tuple(out), cols=other.cols)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "QMatrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("matrix power needs a square matrix")
        result = QMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def apply(self, v) -> tuple:
        """Matrix times column vector."""
        v = vector(v)
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.rows}x{self.cols}")
        out = []
        for r in self.data:
            s = Fraction(0)
            for a, x in zip(r, v):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(self.column(j) for j in range(self.cols)), cols=self.rows)

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def __repr__(self):
        if self.rows * self.cols > 36:
            return f"<QMatrix {self.rows}x{self.cols}>"
        body = "; ".join(" ".join(str(a) for a in row) for row in self.data)
        return f"QMatrix[{body}]"

    def _require_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def rank(m: QMatrix) -> int:
    """Rank over Q, by fraction-free Bareiss elimination.

    Rows are first scaled to integers (row scaling does not change the row
    space), then eliminated keeping every intermediate entry an integer.
    """
    rows = []
    for row in m.data:
        if any(row):
            mult = lcm(*(a.denominator for a in row)) if row else 1
            ints = [int(a * mult) for a in row]
            g = 0
            for x in ints:
                g = gcd(g, x)
            if g > 1:
                ints = [x // g for x in ints]
            rows.append(ints)
    if not rows:
        return 0
    ncols = m.cols
    r = 0
    prev_pivot = 1
    for c in range(ncols):
        p = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        row_r = rows[r]
        for i in range(r + 1, len(rows)):
            fi = rows[i][c]
            row_i = rows[i]
            for j in range(c, ncols):
                row_i[j] = (piv * row_i[j] - fi * row_r[j]) // prev_pivot
        prev_pivot = piv
        r += 1
        if r == len(rows):
            break
    return r


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    R, _, pivots = _rref_rows([list(row) for row in m.data], m.cols, transform=False)
    return QMatrix(tuple(tuple(r) for r in R), cols=m.cols), pivots


def rref_transform(m: QMatrix) -> tuple[QMatrix, QMatrix, tuple[int, ...]]:
    """As `rref`, also returning an invertible T with T * m = rref(m)."""
    R, T, pivots = _rref_rows([list(row) for row in m.data], m.cols, transform=True)
    return (QMatrix(tuple(tuple(r) for r in R), cols=m.cols),
            QMatrix(tuple(tuple(r) for r in T), cols=m.rows),
            pivots)


def _rref_rows(rows, ncols, transform):
    nrows = len(rows)
    T = [[Fraction(1 if i == j else 0) for j in range(nrows)] for i in range(nrows)] \
        if transform else None
    pivots = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        if transform:
            T[r], T[p] = T[p], T[r]
        piv = rows[r][c]
        if piv != 1:
            inv = Fraction(1) / piv
            rows[r] = [a * inv for a in rows[r]]
            if transform:
                T[r] = [a * inv for a in T[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                if transform:
                    T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, T, tuple(pivots)


def solve(m: QMatrix, b) -> tuple | None:
    """One exact solution x of m x = b, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    b = vector(b)
    if len(b) != m.rows:
        raise DimensionMismatchError("right-hand side has wrong length")
    aug = QMatrix(tuple(row + (bb,) for row, bb in zip(m.data, b)), cols=m.cols + 1)
    if not m.rows:
        return zero_vector(m.cols)
    R, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, c in enumerate(pivots):
        x[c] = R[r, m.cols]
    return tuple(x)


class Subspace:
    """A linear subspace of Q^n with a canonical echelon basis.

    `basis` is a QMatrix whose rows form a basis in reduced row echelon
    form (no zero rows), so equality of subspaces is equality of matrices.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: QMatrix):
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_rows(cls, ambient_dim: int, rows) -> "Subspace":
        m = QMatrix(tuple(vector(r) for r in rows), cols=ambient_dim)
        if m.rows and m.cols != ambient_dim:
            raise DimensionMismatchError("row length differs from ambient dimension")
        R, pivots = rref(m)
        keep = tuple(R.row(i) for i in range(len(pivots)))
        return cls(ambient_dim, QMatrix(keep, cols=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, QMatrix((), cols=ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, QMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def pivots(self) -> tuple[int, ...]:
        piv = []
        for row in self.basis.data:
            for j, a in enumerate(row):
                if a:
                    piv.append(j)
                    break
        return tuple(piv)

    def reduce(self, v) -> tuple:
        """Remainder of v after subtracting its projection onto the basis rows."""
        v = list(vector(v))
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector has wrong ambient dimension")
        for row, p in zip(self.basis.data, self.pivots()):
            f = v[p]
            if f:
                for j, a in enumerate(row):
                    if a:
                        v[j] -= f * a
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v) -> tuple:
        """Coordinates of v in the canonical basis; ContainmentError if v is outside."""
        v = vector(v)
        if not self.contains(v):
            raise ContainmentError("vector not in subspace")
        return tuple(v[p] for p in self.pivots())

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(other.contains(row) for row in self.basis.data)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return Subspace.from_rows(self.ambient_dim,
                                  self.basis.data + other.basis.data)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection, by the Zassenhaus double-block elimination."""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        n = self.ambient_dim
        block = [row + row for row in self.basis.data]
        block += [row + zero_vector(n) for row in other.basis.data]
        R, _ = rref(QMatrix(tuple(block), cols=2 * n))
        inter = []
        for row in R.data:
            if any(row):
                if not any(row[:n]):
                    inter.append(row[n:])
        return Subspace.from_rows(n, inter)

    def __repr__(self):
        return f"<Subspace dim={self.dim} of Q^{self.ambient_dim}>"


def kernel(m: QMatrix) -> Subspace:
    """The solution space {v : m v = 0} as a subspace of Q^cols."""
    R, pivots = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in pivots]
    rows = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r, f]
        rows.append(tuple(v))
    return Subspace.from_rows(n, rows)


def image(m: QMatrix) -> Subspace:
    """Column space of m, as a subspace of Q^rows."""
    return Subspace.from_rows(m.rows, m.transpose().data)


def quotient_basis(big: Subspace, small: Subspace) -> list[tuple]:
    """Vectors of `big` whose classes form a basis of big/small.

    The vectors are picked greedily from the canonical basis of `big`, so
    the result is deterministic.  Raises ContainmentError unless
    small <= big.
    """
    if small.ambient_dim != big.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    if not small <= big:
        raise ContainmentError("small subspace is not contained in the big one")
    chosen = []
    span = list(small.basis.data)
    current = Subspace.from_rows(big.ambient_dim, span)
    for row in big.basis.data:
        if not current.contains(row):
            chosen.append(row)
            span.append(row)
            current = Subspace.from_rows(big.ambient_dim, span)
    return chosen
