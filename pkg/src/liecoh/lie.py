"""Finite dimensional Lie algebras given by structure constants.

A `LieAlgebra` is a rational structure-constant table c with
[e_i, e_j] = sum_k c[i][j][k] e_k.  On top of that this module provides
validation (antisymmetry, Jacobi), the two descending series, quotients
and subalgebras as new structure-constant tables, and bases adapted to
the bracket filtration together with their weight sequence.

All values are immutable and all functions are pure.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AdaptedBasisError,
    DimensionMismatchError,
    InvalidAlgebraError,
    NotAnIdealError,
    NotASubalgebraError,
    NotNilpotentError,
)
from .linalg import (
    QMatrix,
    Subspace,
    quotient_basis,
    rref,
    rref_transform,
    vector,
)

__all__ = [
    "LieAlgebra",
    "ValidationReport",
    "IdealChain",
    "AdaptedBasis",
    "Quotient",
    "validate",
    "bracket",
    "bracket_span",
    "lower_central_series",
    "power_filtration",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "is_ideal",
    "is_subalgebra",
    "quotient",
    "nil_quotient",
    "subalgebra",
    "adapted_basis",
    "reorder_basis",
]


class LieAlgebra:
    """Structure-constant presentation of a Lie algebra over Q."""

    __slots__ = ("dim", "labels", "c")

    def __init__(self, c, labels=None):
        c = tuple(tuple(vector(col) for col in row) for row in c)
        self.dim = len(c)
        for row in c:
            if len(row) != self.dim or any(len(col) != self.dim for col in row):
                raise DimensionMismatchError("structure constants must be dim x dim x dim")
        if labels is None:
            labels = tuple(f"e{i+1}" for i in range(self.dim))
        labels = tuple(str(x) for x in labels)
        if len(labels) != self.dim:
            raise DimensionMismatchError("one label per basis element")
        self.c = c
        self.labels = labels

    @classmethod
    def from_brackets(cls, labels, brackets) -> "LieAlgebra":
        """Build from a sparse table {(i, j): [(coeff, k), ...]} with i < j.

        Antisymmetric partners are filled in automatically; unlisted pairs
        commute.
        """
        labels = tuple(labels)
        n = len(labels)
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in brackets.items():
            if not 0 <= i < j < n:
                raise DimensionMismatchError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
            for coeff, k in terms:
                c[i][j][k] += Fraction(coeff)
                c[j][i][k] -= Fraction(coeff)
        return cls(c, labels)

    @classmethod
    def from_matrices(cls, labels, matrices) -> "LieAlgebra":
        """The Lie algebra spanned by the given square matrices.

        The matrices must be linearly independent and their span closed
        under commutators; structure constants are derived from matrix
        commutators.
        """
        labels = tuple(labels)
        mats = [m if isinstance(m, QMatrix) else QMatrix(m) for m in matrices]
        n = len(mats)
        if n != len(labels):
            raise DimensionMismatchError("one label per matrix")
        flat = [tuple(a for row in m.data for a in row) for m in mats]
        ambient = len(flat[0]) if flat else 0
        span = Subspace.from_rows(ambient, flat)
        if span.dim != n:
            raise NotASubalgebraError("matrices are linearly dependent")
        # Row-reduce [flat | I] so arbitrary span members can be rewritten
        # in the original (not echelonized) basis.
        aug = QMatrix(tuple(f + tuple(Fraction(1 if t == s else 0) for t in range(n))
                            for s, f in enumerate(flat)), cols=ambient + n)
        R, pivots = rref(aug)
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                comm = mats[i] * mats[j] - mats[j] * mats[i]
                v = list(a for row in comm.data for a in row)
                coeffs = [Fraction(0)] * n
                for r, p in enumerate(pivots):
                    if p >= ambient:
                        break
                    f = v[p]
                    if f:
                        for t in range(ambient):
                            v[t] -= f * R[r, t]
                        for t in range(n):
                            coeffs[t] += f * R[r, ambient + t]
                if any(v):
                    raise NotASubalgebraError(
                        f"[{labels[i]}, {labels[j]}] falls outside the span")
                for k in range(n):
                    c[i][j][k] = coeffs[k]
                    c[j][i][k] = -coeffs[k]
        return cls(c, labels)

    def bracket_matrix(self, i: int) -> QMatrix:
        """Matrix of ad e_i acting on coordinate columns."""
        return QMatrix.from_columns([self.c[i][j] for j in range(self.dim)],
                                    rows=self.dim)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.c) == (other.dim, other.labels, other.c)

    def __hash__(self):
        return hash((self.dim, self.labels, self.c))

    def __repr__(self):
        return f"<LieAlgebra dim={self.dim} [{', '.join(self.labels)}]>"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking antisymmetry and the Jacobi identity."""

    ok: bool
    kind: str | None = None          # "antisymmetry" | "jacobi"
    triple: tuple[int, ...] | None = None

    def require(self):
        if not self.ok:
            raise InvalidAlgebraError(f"{self.kind} fails at indices {self.triple}")


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Lie axioms; reports the first violated index tuple."""
    n = L.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if L.c[i][j][k] != -L.c[j][i][k]:
                    return ValidationReport(False, "antisymmetry", (i, j))
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                s = _jacobi_sum(L, i, j, l)
                if any(s):
                    return ValidationReport(False, "jacobi", (i, j, l))
    return ValidationReport(True)


def _jacobi_sum(L: LieAlgebra, i: int, j: int, l: int) -> tuple:
    ei, ej, el = (tuple(Fraction(1 if t == s else 0) for t in range(L.dim))
                  for s in (i, j, l))
    return tuple(a + b + c for a, b, c in zip(
        bracket(L, bracket(L, ei, ej), el),
        bracket(L, bracket(L, ej, el), ei),
        bracket(L, bracket(L, el, ei), ej)))


def bracket(L: LieAlgebra, u, v) -> tuple:
    """Bilinear extension of the structure constants to coordinate vectors."""
    u = vector(u)
    v = vector(v)
    if len(u) != L.dim or len(v) != L.dim:
        raise DimensionMismatchError("vectors must have the algebra's dimension")
    out = [Fraction(0)] * L.dim
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, coeff in enumerate(L.c[i][j]):
                if coeff:
                    out[k] += ab * coeff
    return tuple(out)


def bracket_span(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of all brackets [a, b], as a subspace of the algebra."""
    rows = [bracket(L, u, v) for u in a.basis.data for v in b.basis.data]
    return Subspace.from_rows(L.dim, rows)


@dataclass(frozen=True)
class IdealChain:
    """A weakly decreasing chain of ideals, run until it stabilizes.

    `terms` holds the distinct terms only; `stabilized` records that one
    more step was computed and reproduced the last stored term.
    """

    terms: tuple[Subspace, ...]
    stabilized: bool

    @property
    def last(self) -> Subspace:
        return self.terms[-1]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    def term(self, n: int) -> Subspace:
        """The n-th term (1-based), extending constantly past stabilization."""
        if n < 1:
            raise ValueError("terms are indexed from 1")
        return self.terms[min(n, len(self.terms)) - 1]


def _descending_chain(L: LieAlgebra, step) -> IdealChain:
    terms = [Subspace.full(L.dim)]
    while True:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            return IdealChain(tuple(terms), True)
        terms.append(nxt)


def lower_central_series(L: LieAlgebra) -> IdealChain:
    """Terms of the descending series L, [L, L], [L, [L, L]], ...

    Stabilizes within dim steps; the final term is the intersection of the
    whole series.
    """
    full = Subspace.full(L.dim)
    return _descending_chain(L, lambda t: bracket_span(L, full, t))


def derived_series(L: LieAlgebra) -> IdealChain:
    """Terms of the series L, [L, L], [[L, L], [L, L]], ..."""
    return _descending_chain(L, lambda t: bracket_span(L, t, t))


def power_filtration(L: LieAlgebra) -> IdealChain:
    """The filtration with degree-d term  sum_j [term_j, term_{d-j}].

    Classically this equals the lower central series; the library computes
    both and the test suite asserts their equality on every instance
    instead of citing the identity.
    """
    terms = [Subspace.full(L.dim)]
    while True:
        d = len(terms) + 1
        nxt = Subspace.zero(L.dim)
        for j in range(1, d):
            nxt = nxt + bracket_span(L, terms[min(j, len(terms)) - 1],
                                     terms[min(d - j, len(terms)) - 1])
        if nxt == terms[-1]:
            return IdealChain(tuple(terms), True)
        terms.append(nxt)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).last.dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).last.dim == 0


def is_subalgebra(L: LieAlgebra, sub: Subspace) -> bool:
    rows = sub.basis.data
    return all(sub.contains(bracket(L, u, v))
               for a, u in enumerate(rows) for v in rows[a + 1:])


def is_ideal(L: LieAlgebra, sub: Subspace) -> bool:
    if sub.ambient_dim != L.dim:
        raise DimensionMismatchError("subspace has wrong ambient dimension")
    for i in range(L.dim):
        ei = tuple(Fraction(1 if t == i else 0) for t in range(L.dim))
        for v in sub.basis.data:
            if not sub.contains(bracket(L, ei, v)):
                return False
    return True


@dataclass(frozen=True)
class Quotient:
    """A quotient algebra together with the projection and a linear section.

    projection * section is the identity of the quotient; the section
    columns are the chosen lifts of the quotient basis.
    """

    algebra: LieAlgebra
    projection: QMatrix     # (quotient dim) x (ambient dim)
    section: QMatrix        # (ambient dim) x (quotient dim)

    def lift(self, a: int) -> tuple:
        return self.section.column(a)


def quotient(L: LieAlgebra, ideal: Subspace) -> Quotient:
    """Structure constants of L/ideal in a lifted basis.

    Quotient basis labels carry a ``_bar`` suffix of the lifted elements'
    labels.  Raises NotAnIdealError when the subspace is not an ideal.
    """
    if not is_ideal(L, ideal):
        raise NotAnIdealError("quotient requires a bracket-stable ideal")
    lifts = quotient_basis(Subspace.full(L.dim), ideal)
    q = len(lifts)
    # Invert the basis (lifts then ideal basis) to read off the projection.
    cols = list(lifts) + list(ideal.basis.data)
    B = QMatrix.from_columns(cols, rows=L.dim)
    R, T, _ = rref_transform(B)
    if R != QMatrix.identity(L.dim):
        raise NotAnIdealError("ideal basis and lifts do not span the algebra")
    projection = QMatrix(T.data[:q], cols=L.dim)
    section = QMatrix.from_columns(lifts, rows=L.dim)
    labels = []
    for v in lifts:
        i = next(j for j, a in enumerate(v) if a)
        labels.append(f"{L.labels[i]}_bar")
    c = [[projection.apply(bracket(L, lifts[a], lifts[b])) for b in range(q)]
         for a in range(q)]
    return Quotient(LieAlgebra(c, labels), projection, section)


def nil_quotient(L: LieAlgebra) -> Quotient:
    """Quotient by the last lower-central term; the result is nilpotent."""
    q = quotient(L, lower_central_series(L).last)
    assert is_nilpotent(q.algebra)
    return q


def subalgebra(L: LieAlgebra, sub: Subspace) -> tuple[LieAlgebra, QMatrix]:
    """The algebra carried by a bracket-closed subspace, plus its inclusion.

    The inclusion matrix has the canonical basis vectors of `sub` as
    columns.  Raises NotASubalgebraError when the span is not closed.
    """
    if sub.ambient_dim != L.dim:
        raise DimensionMismatchError("subspace has wrong ambient dimension")
    rows = sub.basis.data
    k = len(rows)
    pivots = sub.pivots()
    c = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            w = bracket(L, rows[a], rows[b])
            if not sub.contains(w):
                raise NotASubalgebraError("subspace is not closed under the bracket")
            c[a][b] = tuple(w[p] for p in pivots)
    labels = tuple(L.labels[p] for p in pivots)
    inclusion = QMatrix.from_columns(rows, rows=L.dim)
    return LieAlgebra(c, labels), inclusion


@dataclass(frozen=True)
class AdaptedBasis:
    """A reordering of the basis adapted to the bracket filtration.

    order[p] is the original index of the element at adapted position p;
    nu[p] is its weight: the deepest filtration term containing it.  The
    tail {positions p : nu[p] >= d} spans the degree-d filtration term,
    and [e_i, e_j] lies in the span of elements of weight >= nu_i + nu_j.
    """

    order: tuple[int, ...]
    nu: tuple[int, ...]


def adapted_basis(L: LieAlgebra) -> AdaptedBasis:
    """Weights and ordering for a nilpotent algebra's standard basis.

    Requires every filtration term to be spanned by standard basis
    vectors (true for all built-in and generated algebras); raises
    AdaptedBasisError otherwise, since a mere permutation cannot then be
    adapted.
    """
    if not is_nilpotent(L):
        raise NotNilpotentError("adapted bases exist only for nilpotent algebras")
    chain = power_filtration(L)
    n = L.dim
    units = [tuple(Fraction(1 if t == i else 0) for t in range(n)) for i in range(n)]
    nu = []
    for i in range(n):
        depth = 0
        for d in range(1, len(chain.terms) + 1):
            if chain.term(d).contains(units[i]):
                depth = d
        if depth == 0:
            raise AdaptedBasisError(
                f"basis element {L.labels[i]} does not lie in the algebra's filtration")
        nu.append(depth)
    for d in range(1, len(chain.terms) + 1):
        tail = [units[i] for i in range(n) if nu[i] >= d]
        if Subspace.from_rows(n, tail) != chain.term(d):
            raise AdaptedBasisError(
                "filtration terms are not spanned by standard basis vectors; "
                "re-express the algebra in a filtration-compatible basis")
    order = tuple(sorted(range(n), key=lambda i: (nu[i], i)))
    return AdaptedBasis(order, tuple(nu[i] for i in order))


def reorder_basis(L: LieAlgebra, order) -> LieAlgebra:
    """The same algebra presented in a permuted basis."""
    order = tuple(order)
    if sorted(order) != list(range(L.dim)):
        raise DimensionMismatchError("order must be a permutation of the basis indices")
    inv = [0] * L.dim
    for p, i in enumerate(order):
        inv[i] = p
    c = [[[L.c[order[p]][order[q]][k] for k in order] for q in range(L.dim)]
         for p in range(L.dim)]
    return LieAlgebra(c, tuple(L.labels[i] for i in order))
