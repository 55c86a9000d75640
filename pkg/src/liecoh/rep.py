"""Finite dimensional modules over a Lie algebra.

A `LieModule` stores one action matrix per basis element of the acting
algebra and re-checks the bracket relations on construction, so a module
object in hand is always a genuine representation.  Derived constructions
(dual, exterior powers, restriction, direct sums) re-validate; a failure
there is an implementation bug and raises RepresentationLawError rather
than being swallowed.

The trivial-subquotient test works over the base field: for a nilpotent
acting algebra the simultaneous generalized kernel of the action matrices
is nonzero exactly when some subquotient is the one-dimensional module
with zero action.  Exponents are capped at the module dimension (Fitting
stabilization), so no field extension is ever required.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import wedge
from .errors import (
    CharacterError,
    ContainmentError,
    DimensionMismatchError,
    NotNilpotentError,
    RepresentationLawError,
)
from .lie import LieAlgebra, is_nilpotent, subalgebra
from .linalg import QMatrix, Subspace, kernel, vector

__all__ = [
    "LieModule",
    "Character",
    "trivial_module",
    "one_dim_module",
    "adjoint_module",
    "dual",
    "exterior_power",
    "restrict",
    "submodule",
    "direct_sum",
    "invariants",
    "has_trivial_subquotient",
]


class LieModule:
    """A representation: rho[i] is the matrix by which basis element i acts."""

    __slots__ = ("algebra", "dim", "rho")

    def __init__(self, algebra: LieAlgebra, rho, check: bool = True, dim: int | None = None):
        rho = tuple(m if isinstance(m, QMatrix) else QMatrix(m) for m in rho)
        if len(rho) != algebra.dim:
            raise DimensionMismatchError("one action matrix per basis element")
        if rho:
            dim = rho[0].rows
        elif dim is None:
            # over the zero algebra the size cannot be inferred from rho
            dim = 0
        for m in rho:
            if m.rows != m.cols or m.rows != dim:
                raise DimensionMismatchError("action matrices must be square of equal size")
        self.algebra = algebra
        self.dim = dim
        self.rho = rho
        if check:
            self._check_representation_law()

    def _check_representation_law(self):
        n = self.algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.rho[i] * self.rho[j] - self.rho[j] * self.rho[i]
                rhs = QMatrix.zero(self.dim, self.dim)
                for k, coeff in enumerate(self.algebra.c[i][j]):
                    if coeff:
                        rhs = rhs + self.rho[k].scale(coeff)
                if lhs != rhs:
                    raise RepresentationLawError(
                        f"action matrices break the bracket of "
                        f"{self.algebra.labels[i]} and {self.algebra.labels[j]}")

    def action(self, x) -> QMatrix:
        """Action matrix of an arbitrary algebra element (coordinate vector)."""
        x = vector(x)
        if len(x) != self.algebra.dim:
            raise DimensionMismatchError("element must have the algebra's dimension")
        out = QMatrix.zero(self.dim, self.dim)
        for a, m in zip(x, self.rho):
            if a:
                out = out + m.scale(a)
        return out

    def is_trivial(self) -> bool:
        return all(m.is_zero() for m in self.rho)

    def __eq__(self, other):
        if not isinstance(other, LieModule):
            return NotImplemented
        return (self.algebra, self.dim, self.rho) == (other.algebra, other.dim, other.rho)

    def __repr__(self):
        return f"<LieModule dim={self.dim} over {self.algebra!r}>"


@dataclass(frozen=True)
class Character:
    """A one-dimensional action: one rational per basis element.

    Valid characters vanish on all brackets; `one_dim_module` enforces
    this.
    """

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "Character":
        return cls(vector(values))

    def is_additive(self, L: LieAlgebra) -> bool:
        n = L.dim
        for i in range(n):
            for j in range(i + 1, n):
                if sum((c * v for c, v in zip(L.c[i][j], self.values)), Fraction(0)):
                    return False
        return True

    def is_zero(self) -> bool:
        return not any(self.values)


def trivial_module(L: LieAlgebra, dim: int = 1) -> LieModule:
    """The module of the given size with zero action."""
    return LieModule(L, tuple(QMatrix.zero(dim, dim) for _ in range(L.dim)),
                     check=False, dim=dim)


def one_dim_module(L: LieAlgebra, chi: Character) -> LieModule:
    """One-dimensional module on which e_i acts by chi.values[i]."""
    if len(chi.values) != L.dim:
        raise DimensionMismatchError("one character value per basis element")
    if not chi.is_additive(L):
        raise CharacterError("character does not vanish on the derived subalgebra")
    return LieModule(L, tuple(QMatrix([[v]]) for v in chi.values), check=False)


def adjoint_module(L: LieAlgebra) -> LieModule:
    """The algebra acting on itself by the bracket."""
    return LieModule(L, tuple(L.bracket_matrix(i) for i in range(L.dim)))


def dual(M: LieModule) -> LieModule:
    """Contragredient module: x acts by minus the transpose."""
    return LieModule(M.algebra, tuple((-m.transpose()) for m in M.rho), dim=M.dim)


def exterior_power(M: LieModule, p: int) -> LieModule:
    """The p-th exterior power, with the action extended as a derivation."""
    m = M.dim
    basis = wedge.subsets(m, p)
    index = {S: t for t, S in enumerate(basis)}
    rho = []
    for mat in M.rho:
        out = [[Fraction(0)] * len(basis) for _ in range(len(basis))]
        for col, S in enumerate(basis):
            for pos in range(p):
                s = S[pos]
                for k in range(m):
                    a = mat[k, s]
                    if not a:
                        continue
                    hit = wedge.replace_sign(S, pos, k)
                    if hit is None:
                        continue
                    sign, T = hit
                    out[index[T]][col] += sign * a
        rho.append(QMatrix(tuple(tuple(r) for r in out), cols=len(basis)))
    return LieModule(M.algebra, rho, dim=len(basis))


def restrict(M: LieModule, sub: Subspace) -> LieModule:
    """Restriction of the action to a bracket-closed subspace of the algebra.

    The result is a module over the subalgebra carried by `sub`, in that
    subalgebra's canonical basis.
    """
    if sub.ambient_dim != M.algebra.dim:
        raise DimensionMismatchError("subspace must sit inside the acting algebra")
    sub_alg, inclusion = subalgebra(M.algebra, sub)
    rho = [M.action(inclusion.column(a)) for a in range(sub_alg.dim)]
    return LieModule(sub_alg, rho, dim=M.dim)


def submodule(M: LieModule, sub: Subspace) -> LieModule:
    """The action induced on an invariant subspace, in its canonical basis."""
    if sub.ambient_dim != M.dim:
        raise DimensionMismatchError("subspace must sit inside the module")
    rows = sub.basis.data
    pivots = sub.pivots()
    rho = []
    for mat in M.rho:
        cols = []
        for r in rows:
            w = mat.apply(r)
            if not sub.contains(w):
                raise ContainmentError("subspace is not invariant under the action")
            cols.append(tuple(w[p] for p in pivots))
        rho.append(QMatrix.from_columns(cols, rows=sub.dim))
    return LieModule(M.algebra, rho, dim=sub.dim)


def direct_sum(M: LieModule, N: LieModule) -> LieModule:
    """Block-diagonal sum of two modules over the same algebra."""
    if M.algebra != N.algebra:
        raise DimensionMismatchError("summands must share the acting algebra")
    d = M.dim + N.dim
    rho = []
    for a, b in zip(M.rho, N.rho):
        rows = [row + (Fraction(0),) * N.dim for row in a.data]
        rows += [(Fraction(0),) * M.dim + row for row in b.data]
        rho.append(QMatrix(tuple(rows), cols=d))
    return LieModule(M.algebra, rho, dim=d)


def invariants(M: LieModule) -> Subspace:
    """Joint kernel of all action matrices."""
    space = Subspace.full(M.dim)
    for mat in M.rho:
        space = space & kernel(mat)
    return space


def has_trivial_subquotient(M: LieModule) -> bool:
    """Whether some subquotient is the trivial one-dimensional module.

    Only meaningful (and only allowed) over a nilpotent acting algebra:
    there the generalized weight spaces split the module, and weight zero
    occurs iff the simultaneous generalized kernel is nonzero.
    """
    if not is_nilpotent(M.algebra):
        raise NotNilpotentError("trivial-subquotient detection needs a nilpotent algebra")
    if M.dim == 0:
        return False
    space = Subspace.full(M.dim)
    for mat in M.rho:
        space = space & kernel(mat ** M.dim)
        if space.dim == 0:
            return False
    return space.dim > 0
