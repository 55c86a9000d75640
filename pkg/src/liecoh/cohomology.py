"""The standard (Chevalley-Eilenberg) complex and everything built on it.

Cochains, conventions
---------------------
C^p carries the basis (wedge subset S of size p) x (coefficient basis
index b), enumerated subsets-outer: the cochain labelled (S, b) sends the
basis wedge S to coefficient vector b and all other basis wedges to zero.
Dual wedges pair with wedges by the determinant rule, e.g. the pairing of
f1 ^ f2 with v1 ^ v2 is f1(v1) f2(v2) - f1(v2) f2(v1).

The differential of a p-cochain f, evaluated on a (p+1)-wedge, is

    sum_i (-1)^i x_i . f(... x_i omitted ...)
  + sum_{a<b} (-1)^(a+b) f([x_a, x_b] ^ ... x_a, x_b omitted ...)

Cohomology spaces come with explicit representative cocycles (an echelon
complement of the coboundaries inside the cocycles) and an exact linear
projection taking any cocycle to its coordinates in that representative
basis, so induced maps on cohomology are honest matrices.

An ambient algebra acts on the complex of an ideal by

    (x . f)(x_1 ^ ... ^ x_p) = x . f(x_1 ^ ... ^ x_p)
                               - sum_i f(x_1 ^ ... ^ [x, x_i] ^ ... ^ x_p)

and the operator is checked to commute with the differential before being
pushed to cohomology.  The inflation map pulls cochains back along the
projection to the nilpotent quotient and is likewise checked to be a
chain map.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import wedge
from .errors import (
    ChainMapError,
    ContainmentError,
    DimensionMismatchError,
    NotAnIdealError,
)
from .lie import LieAlgebra, Quotient, is_ideal, nil_quotient, quotient, subalgebra
from .linalg import (
    QMatrix,
    Subspace,
    image,
    kernel,
    quotient_basis,
    rank,
    rref_transform,
    vector,
)
from .rep import LieModule, restrict, trivial_module

__all__ = [
    "CochainComplex",
    "CohomologyResult",
    "ActionOnCohomology",
    "InflationReport",
    "E2Page",
    "ce_complex",
    "cohomology",
    "cohomology_of",
    "cochain_action_operators",
    "action_on_cohomology",
    "inflation_map",
    "inflation_on_cohomology",
    "hs_e2_page",
]


def _binomial(n: int, p: int) -> int:
    if p < 0 or p > n:
        return 0
    out = 1
    for i in range(p):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class CochainComplex:
    """Differential matrices of the standard complex of (algebra, coeff)."""

    algebra: LieAlgebra
    coeff: LieModule
    deltas: tuple[QMatrix, ...]          # deltas[p]: C^p -> C^{p+1}, p = 0..n-1

    def space_dim(self, p: int) -> int:
        return _binomial(self.algebra.dim, p) * self.coeff.dim

    def delta(self, p: int) -> QMatrix:
        """The differential out of C^p; zero maps beyond the stored range."""
        if 0 <= p < len(self.deltas):
            return self.deltas[p]
        return QMatrix.zero(self.space_dim(p + 1), self.space_dim(p))

    @property
    def top_degree(self) -> int:
        return self.algebra.dim


def ce_complex(L: LieAlgebra, M: LieModule) -> CochainComplex:
    """Matrices of the standard-complex differential in the wedge basis."""
    if M.algebra != L:
        raise DimensionMismatchError("coefficient module is not a module over this algebra")
    n = L.dim
    m = M.dim
    deltas = []
    for p in range(n):
        rows_sets = wedge.subsets(n, p + 1)
        cols_sets = wedge.subsets(n, p)
        col_index = {S: t for t, S in enumerate(cols_sets)}
        out = [[Fraction(0)] * (len(cols_sets) * m) for _ in range(len(rows_sets) * m)]
        for trow, T in enumerate(rows_sets):
            rbase = trow * m
            # action terms: drop one wedge factor, act on the coefficient
            for i, t in enumerate(T):
                S = T[:i] + T[i + 1:]
                cbase = col_index[S] * m
                sign = -1 if i % 2 else 1
                act = M.rho[t]
                for beta in range(m):
                    row = out[rbase + beta]
                    arow = act.data[beta]
                    for b in range(m):
                        if arow[b]:
                            row[cbase + b] += sign * arow[b]
            # bracket terms: contract two wedge factors into one
            for a in range(len(T)):
                for bpos in range(a + 1, len(T)):
                    rest = tuple(x for idx, x in enumerate(T) if idx not in (a, bpos))
                    pair_sign = -1 if (a + bpos) % 2 else 1
                    for k, gamma in enumerate(L.c[T[a]][T[bpos]]):
                        if not gamma:
                            continue
                        hit = wedge.insert_sign(rest, k)
                        if hit is None:
                            continue
                        ins_sign, S = hit
                        coeff = pair_sign * ins_sign * gamma
                        cbase = col_index[S] * m
                        for beta in range(m):
                            out[rbase + beta][cbase + beta] += coeff
        deltas.append(QMatrix(tuple(tuple(r) for r in out), cols=len(cols_sets) * m))
    return CochainComplex(L, M, tuple(deltas))


@dataclass(frozen=True)
class CohomologyResult:
    """Per-degree dimensions, representative cocycles, and projections.

    representatives[q] are vectors in C^q whose classes form a basis of
    H^q; projections[q] is a matrix sending any cocycle to its coordinates
    in that basis (it is only meaningful on cocycles, and `project`
    enforces that).
    """

    complex: CochainComplex
    dims: tuple[int, ...]
    representatives: tuple[tuple[tuple, ...], ...]
    projections: tuple[QMatrix, ...]

    def rep_matrix(self, q: int) -> QMatrix:
        """Representatives of H^q as the columns of a matrix."""
        return QMatrix.from_columns(self.representatives[q],
                                    rows=self.complex.space_dim(q))

    def project(self, q: int, z) -> tuple:
        """Coordinates of the class of a cocycle z in the chosen H^q basis."""
        z = vector(z)
        if any(self.complex.delta(q).apply(z)):
            raise ContainmentError("vector is not a cocycle")
        return self.projections[q].apply(z)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def euler_characteristic(self) -> int:
        return sum(d if q % 2 == 0 else -d for q, d in enumerate(self.dims))


def cohomology_of(cx: CochainComplex) -> CohomologyResult:
    """Cohomology of an already-built complex."""
    n = cx.top_degree
    dims = []
    reps_all = []
    projections = []
    for q in range(n + 1):
        cdim = cx.space_dim(q)
        cocycles = kernel(cx.delta(q))
        boundaries = image(cx.delta(q - 1)) if q > 0 else Subspace.zero(cdim)
        reps = quotient_basis(cocycles, boundaries)
        dims.append(len(reps))
        reps_all.append(tuple(reps))
        cols = list(reps) + list(boundaries.basis.data)
        if not cols:
            projections.append(QMatrix.zero(0, cdim))
            continue
        A = QMatrix.from_columns(cols, rows=cdim)
        R, T, pivots = rref_transform(A)
        if pivots != tuple(range(A.cols)):
            raise ChainMapError("representative columns are unexpectedly dependent")
        projections.append(QMatrix(T.data[:len(reps)], cols=cdim))
    return CohomologyResult(cx, tuple(dims), tuple(reps_all), tuple(projections))


def cohomology(L: LieAlgebra, M: LieModule) -> CohomologyResult:
    """Cohomology of the algebra with the given coefficients."""
    return cohomology_of(ce_complex(L, M))


def _ideal_coordinates(ideal: Subspace, w) -> tuple:
    """Coordinates in the ideal's canonical basis (basis rows are echelon)."""
    if not ideal.contains(w):
        raise ContainmentError("bracket left the ideal")
    return tuple(w[p] for p in ideal.pivots())


def _action_operator(cx: CochainComplex, L: LieAlgebra, ideal: Subspace,
                     M: LieModule, x, p: int) -> QMatrix:
    """Matrix of the ambient element x on C^p(ideal, M)."""
    from .lie import bracket

    s = cx.algebra.dim
    m = cx.coeff.dim
    sets = wedge.subsets(s, p)
    index = {S: t for t, S in enumerate(sets)}
    coeff_act = M.action(x)
    incl_cols = [ideal.basis.data[a] for a in range(s)]
    bracket_coords = [
        _ideal_coordinates(ideal, bracket(L, x, col)) for col in incl_cols
    ]
    out = [[Fraction(0)] * (len(sets) * m) for _ in range(len(sets) * m)]
    for trow, T in enumerate(sets):
        rbase = trow * m
        # coefficient part
        for beta in range(m):
            row = out[rbase + beta]
            arow = coeff_act.data[beta]
            for b in range(m):
                if arow[b]:
                    row[rbase + b] += arow[b]
        # wedge part: replace one factor by its bracket with x
        for pos in range(p):
            gam = bracket_coords[T[pos]]
            for k in range(s):
                if not gam[k]:
                    continue
                hit = wedge.replace_sign(T, pos, k)
                if hit is None:
                    continue
                sign, S = hit
                cbase = index[S] * m
                for beta in range(m):
                    out[rbase + beta][cbase + beta] -= sign * gam[k]
    return QMatrix(tuple(tuple(r) for r in out), cols=len(sets) * m)


def cochain_action_operators(L: LieAlgebra, ideal: Subspace, M: LieModule,
                             x) -> tuple[QMatrix, ...]:
    """Chain-level operators of an ambient element on C^*(ideal, M).

    One square matrix per degree 0..dim(ideal); verified to commute with
    the differential (ChainMapError otherwise, which would mean a bug).
    """
    if not is_ideal(L, ideal):
        raise NotAnIdealError("the acting construction needs a Lie ideal")
    sub_alg, _ = subalgebra(L, ideal)
    cx = ce_complex(sub_alg, restrict(M, ideal))
    ops = tuple(_action_operator(cx, L, ideal, M, x, p)
                for p in range(sub_alg.dim + 1))
    for p in range(sub_alg.dim):
        if cx.delta(p) * ops[p] != ops[p + 1] * cx.delta(p):
            raise ChainMapError("action operator does not commute with the differential")
    return ops


@dataclass(frozen=True)
class ActionOnCohomology:
    """The nilpotent quotient acting on the cohomology of an ideal.

    modules[q] is H^q(ideal, coeff) as a module over quotient.algebra, in
    the representative basis of ideal_cohomology.
    """

    quotient: Quotient
    ideal_cohomology: CohomologyResult
    modules: tuple[LieModule, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return self.ideal_cohomology.dims


def action_on_cohomology(L: LieAlgebra, ideal: Subspace,
                         M: LieModule) -> ActionOnCohomology:
    """Induced action of L/ideal on H^*(ideal, M).

    Lifts of the quotient basis act through the chain-level operator;
    elements of the ideal itself induce zero, so the matrices satisfy the
    quotient's bracket relations (this is re-checked on construction).
    """
    if M.algebra != L:
        raise DimensionMismatchError("coefficients must form a module over the ambient algebra")
    if not is_ideal(L, ideal):
        raise NotAnIdealError("action on cohomology needs a Lie ideal")
    sub_alg, _ = subalgebra(L, ideal)
    cx = ce_complex(sub_alg, restrict(M, ideal))
    coh = cohomology_of(cx)
    nq = quotient(L, ideal)
    per_lift_ops = []
    for a in range(nq.algebra.dim):
        x = nq.lift(a)
        ops = tuple(_action_operator(cx, L, ideal, M, x, p)
                    for p in range(sub_alg.dim + 1))
        for p in range(sub_alg.dim):
            if cx.delta(p) * ops[p] != ops[p + 1] * cx.delta(p):
                raise ChainMapError("action operator does not commute with the differential")
        per_lift_ops.append(ops)
    modules = []
    for q in range(sub_alg.dim + 1):
        reps = coh.rep_matrix(q)
        rho = [coh.projections[q] * (ops[q] * reps) for ops in per_lift_ops]
        modules.append(LieModule(nq.algebra, rho, dim=coh.dims[q]))
    return ActionOnCohomology(nq, coh, tuple(modules))


def _minor_det(mat: QMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> Fraction:
    """Determinant of the square submatrix picked out by rows x cols."""
    p = len(rows)
    if p != len(cols):
        raise DimensionMismatchError("minor must be square")
    if p == 0:
        return Fraction(1)
    a = [[mat[r, c] for c in cols] for r in rows]
    det = Fraction(1)
    for i in range(p):
        piv = None
        for r in range(i, p):
            if a[r][i]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        inv = Fraction(1) / a[i][i]
        for r in range(i + 1, p):
            if a[r][i]:
                f = a[r][i] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return det


def inflation_map(L: LieAlgebra, nq: Quotient | None = None) -> tuple[QMatrix, ...]:
    """Cochain pullback along the projection to the nilpotent quotient.

    With trivial coefficients the degree-p matrix has entries the p x p
    minors of the projection; the family is verified to be a chain map.
    Returns matrices for p = 0..dim(quotient).
    """
    if nq is None:
        nq = nil_quotient(L)
    n = L.dim
    qd = nq.algebra.dim
    cx_L = ce_complex(L, trivial_module(L))
    cx_q = ce_complex(nq.algebra, trivial_module(nq.algebra))
    maps = []
    for p in range(qd + 1):
        rows_sets = wedge.subsets(n, p)
        cols_sets = wedge.subsets(qd, p)
        out = [[_minor_det(nq.projection, S, T) for S in cols_sets]
               for T in rows_sets]
        maps.append(QMatrix(tuple(tuple(r) for r in out), cols=len(cols_sets)))
    for p in range(qd + 1):
        nxt = maps[p + 1] if p + 1 <= qd else QMatrix.zero(cx_L.space_dim(p + 1), 0)
        if cx_L.delta(p) * maps[p] != nxt * cx_q.delta(p):
            raise ChainMapError("inflation is not a chain map")
    return tuple(maps)


@dataclass(frozen=True)
class InflationReport:
    """Induced maps H^p(quotient) -> H^p(algebra) and their verdicts."""

    quotient: Quotient
    source_dims: tuple[int, ...]      # H^*(quotient), padded to degree dim L
    target_dims: tuple[int, ...]      # H^*(algebra)
    induced: tuple[QMatrix, ...]
    iso_per_degree: tuple[bool, ...]

    @property
    def is_isomorphism(self) -> bool:
        return all(self.iso_per_degree)


def inflation_on_cohomology(L: LieAlgebra, nq: Quotient | None = None) -> InflationReport:
    """Whether pullback from the nilpotent quotient is an isomorphism."""
    if nq is None:
        nq = nil_quotient(L)
    maps = inflation_map(L, nq)
    qd = nq.algebra.dim
    coh_L = cohomology(L, trivial_module(L))
    coh_q = cohomology(nq.algebra, trivial_module(nq.algebra))
    induced = []
    isos = []
    src_dims = []
    for p in range(L.dim + 1):
        hs = coh_q.dims[p] if p <= qd else 0
        ht = coh_L.dims[p]
        src_dims.append(hs)
        if p <= qd:
            mat = coh_L.projections[p] * (maps[p] * coh_q.rep_matrix(p))
        else:
            mat = QMatrix.zero(ht, 0)
        induced.append(mat)
        isos.append(hs == ht and rank(mat) == ht)
    return InflationReport(nq, tuple(src_dims), tuple(coh_L.dims),
                           tuple(induced), tuple(isos))


@dataclass(frozen=True)
class E2Page:
    """Starting-page dimension table of the quotient-by-ideal spectral sequence.

    dims[p][q] is the dimension of the degree-p cohomology of the
    nilpotent quotient with coefficients in the degree-q cohomology of the
    stable ideal.  Only the starting page is computed; higher
    differentials are out of scope, but the dimension bound
    sum_{p+q=n} dims[p][q] >= dim H^n(algebra) is testable.
    """

    dims: tuple[tuple[int, ...], ...]

    @property
    def bottom_row(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.dims)

    def antidiagonal_sum(self, n: int) -> int:
        total = 0
        for p, row in enumerate(self.dims):
            q = n - p
            if 0 <= q < len(row):
                total += row[q]
        return total

    def concentrated_in_bottom_row(self) -> bool:
        return all(not d for row in self.dims for d in row[1:])


def _e2_from_action(aoc: ActionOnCohomology) -> E2Page:
    nil = aoc.quotient.algebra
    table = []
    for p in range(nil.dim + 1):
        table.append(tuple(cohomology(nil, mod).dims[p] for mod in aoc.modules))
    return E2Page(tuple(table))


def hs_e2_page(L: LieAlgebra) -> E2Page:
    """E2-style dimension table for the extension of the nilpotent quotient
    by the stable term of the lower central series."""
    from .lie import lower_central_series

    linf = lower_central_series(L).last
    aoc = action_on_cohomology(L, linf, trivial_module(L))
    return _e2_from_action(aoc)
