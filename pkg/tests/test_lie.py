import random
from fractions import Fraction

import pytest

from liecoh import catalog
from liecoh.errors import AdaptedBasisError, NotAnIdealError, NotNilpotentError
from liecoh.lie import (
    LieAlgebra,
    adapted_basis,
    bracket,
    bracket_span,
    derived_series,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    lower_central_series,
    nil_quotient,
    power_filtration,
    quotient,
    reorder_basis,
    subalgebra,
    validate,
)
from liecoh.linalg import Subspace, unit_vector

ALL_NAMES = catalog.names()


def _unit(L, i):
    return unit_vector(L.dim, i)


# --- validation ---------------------------------------------------------

def test_catalog_validates():
    for name in ALL_NAMES:
        assert validate(catalog.get(name)).ok, name


def test_catalog_doctests():
    import doctest
    assert doctest.testmod(catalog).failed == 0


def test_abelian_validates():
    assert validate(catalog.abelian(3)).ok


def test_jacobi_violation_detected():
    # [x,y] = z, [x,z] = x, [y,z] = y: the cyclic sum on (x, y, z) is
    # [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 + [y,x] + [-x,y] = -2z
    bad = LieAlgebra.from_brackets(
        "xyz", {(0, 1): [(1, 2)], (0, 2): [(1, 0)], (1, 2): [(1, 1)]})
    report = validate(bad)
    assert not report.ok
    assert report.kind == "jacobi"
    assert report.triple == (0, 1, 2)
    # recompute the cyclic sum with plain loops as an oracle
    x, y, z = (_unit(bad, i) for i in range(3))
    total = [Fraction(0)] * 3
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        term = bracket(bad, bracket(bad, u, v), w)
        total = [a + b for a, b in zip(total, term)]
    assert any(total)


def test_cyclic_bracket_table_is_actually_valid():
    # [x,y] = z, [y,z] = x, [x,z] = y satisfies Jacobi (it is a form of
    # the traceless 2x2 algebra), so it must validate
    v = LieAlgebra.from_brackets(
        "xyz", {(0, 1): [(1, 2)], (1, 2): [(1, 0)], (0, 2): [(1, 1)]})
    assert validate(v).ok


def test_antisymmetry_violation_detected():
    c = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    report = validate(LieAlgebra(c))
    assert not report.ok and report.kind == "antisymmetry"


# --- bracket ------------------------------------------------------------

def test_bracket_examples():
    amz = catalog.amazing_l()
    assert bracket(amz, _unit(amz, 0), _unit(amz, 1)) == (0, Fraction(2), 0, 0, 0)
    ab = catalog.abelian(3)
    assert not any(bracket(ab, (1, 2, 3), (4, 5, 6)))
    A = catalog.example_a()
    assert bracket(A, _unit(A, 0), _unit(A, 1)) == (0, Fraction(1))


def test_bracket_bilinear():
    H = catalog.heisenberg3()
    u = (Fraction(2), Fraction(1), Fraction(0))
    v = (Fraction(0), Fraction(3), Fraction(-1))
    lhs = bracket(H, u, v)
    rhs = [Fraction(0)] * 3
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            term = bracket(H, _unit(H, i), _unit(H, j))
            rhs = [r + a * b * t for r, t in zip(rhs, term)]
    assert lhs == tuple(rhs)


# --- series -------------------------------------------------------------

def test_lower_central_series_examples():
    ab = catalog.abelian(3)
    chain = lower_central_series(ab)
    assert chain.dims == (3, 0)
    assert chain.stabilized

    A = catalog.example_a()
    chain = lower_central_series(A)
    assert chain.dims == (2, 1)
    assert chain.last.contains((0, 1))   # spanned by y

    amz = catalog.amazing_l()
    chain = lower_central_series(amz)
    assert chain.last == Subspace.from_rows(5, [unit_vector(5, i) for i in (1, 2, 3, 4)])


def test_series_terms_are_ideals_and_decreasing():
    for name in ALL_NAMES:
        L = catalog.get(name)
        chain = lower_central_series(L)
        assert len(chain.terms) <= L.dim + 1
        for prev, term in zip(chain.terms, chain.terms[1:]):
            assert term <= prev
            assert term.dim < prev.dim
        for term in chain.terms:
            assert is_ideal(L, term)
        # stabilization really happened: one more step reproduces the last term
        assert bracket_span(L, Subspace.full(L.dim), chain.last) == chain.last


def test_nilpotent_solvable_verdicts():
    assert is_nilpotent(catalog.heisenberg3())
    assert is_solvable(catalog.heisenberg3())
    A = catalog.example_a()
    assert is_solvable(A) and not is_nilpotent(A)
    s = catalog.sl2()
    assert not is_solvable(s) and not is_nilpotent(s)
    # series of the simple algebra never shrink
    assert lower_central_series(s).dims == (3,)
    assert derived_series(s).dims == (3,)


def test_power_filtration_matches_lower_central_series():
    for name in ALL_NAMES:
        L = catalog.get(name)
        assert power_filtration(L).terms == lower_central_series(L).terms, name


# --- quotients ----------------------------------------------------------

def test_quotient_by_zero_ideal_is_isomorphic_copy():
    H = catalog.heisenberg3()
    q = quotient(H, Subspace.zero(3))
    assert q.algebra.c == H.c
    assert q.algebra.labels == ("x_bar", "y_bar", "z_bar")
    assert q.projection * q.section == type(q.projection).identity(3)


def test_nil_quotients():
    A = catalog.example_a()
    qa = nil_quotient(A)
    assert qa.algebra.dim == 1
    assert qa.algebra.labels == ("x_bar",)
    assert is_nilpotent(qa.algebra)

    amz = catalog.amazing_l()
    qm = nil_quotient(amz)
    assert qm.algebra.dim == 1
    assert qm.algebra.labels == ("t_bar",)

    for name in ALL_NAMES:
        assert is_nilpotent(nil_quotient(catalog.get(name)).algebra), name


def test_quotient_requires_ideal():
    s = catalog.sl2()
    # span{e} is not an ideal of sl2
    with pytest.raises(NotAnIdealError):
        quotient(s, Subspace.from_rows(3, [unit_vector(3, 1)]))


def test_projection_kills_ideal_and_respects_bracket():
    P = catalog.prop_c()
    linf = lower_central_series(P).last
    q = quotient(P, linf)
    for row in linf.basis.data:
        assert not any(q.projection.apply(row))
    # projection is a Lie homomorphism on lifted pairs
    for a in range(q.algebra.dim):
        for b in range(q.algebra.dim):
            lifted = bracket(P, q.lift(a), q.lift(b))
            down = q.projection.apply(lifted)
            direct = bracket(q.algebra, unit_vector(q.algebra.dim, a),
                             unit_vector(q.algebra.dim, b))
            assert down == direct


# --- subalgebras --------------------------------------------------------

def test_subalgebra_of_stable_term():
    amz = catalog.amazing_l()
    linf = lower_central_series(amz).last
    sub, incl = subalgebra(amz, linf)
    assert sub.dim == 4
    assert sub.labels == ("x", "y", "z", "w")
    assert validate(sub).ok
    # inclusion intertwines the brackets
    u = unit_vector(4, 0)
    v = unit_vector(4, 1)
    inside = bracket(sub, u, v)
    outside = bracket(amz, incl.apply(u), incl.apply(v))
    assert incl.apply(inside) == outside


def test_subalgebra_rejects_non_closed_span():
    s = catalog.sl2()
    from liecoh.errors import NotASubalgebraError
    with pytest.raises(NotASubalgebraError):
        subalgebra(s, Subspace.from_rows(3, [unit_vector(3, 1), unit_vector(3, 2)]))
    assert not is_subalgebra(s, Subspace.from_rows(3, [unit_vector(3, 1), unit_vector(3, 2)]))


# --- adapted bases ------------------------------------------------------

def test_adapted_basis_examples():
    assert adapted_basis(catalog.abelian(2)).nu == (1, 1)
    ab = adapted_basis(catalog.heisenberg3())
    assert ab.nu == (1, 1, 2)
    assert ab.order == (0, 1, 2)          # z already last
    ab2 = adapted_basis(catalog.strict_ut(3))
    assert ab2.nu == (1, 1, 2)


def test_adapted_basis_requires_nilpotent():
    with pytest.raises(NotNilpotentError):
        adapted_basis(catalog.example_a())


def test_adapted_basis_spans_and_key_inequality():
    for name in ("abelian4", "heisenberg3", "strict-ut3"):
        L = catalog.get(name)
        ab = adapted_basis(L)
        chain = power_filtration(L)
        n = L.dim
        assert all(a <= b for a, b in zip(ab.nu, ab.nu[1:]))
        for d in range(1, len(chain.terms) + 1):
            tail = [unit_vector(n, ab.order[p]) for p in range(n) if ab.nu[p] >= d]
            assert Subspace.from_rows(n, tail) == chain.term(d), (name, d)
        # bracket of adapted elements lands in the expected tail span
        for p in range(n):
            for q in range(n):
                w = bracket(L, unit_vector(n, ab.order[p]), unit_vector(n, ab.order[q]))
                tail = [unit_vector(n, ab.order[r]) for r in range(n)
                        if ab.nu[r] >= ab.nu[p] + ab.nu[q]]
                assert Subspace.from_rows(n, tail).contains(w), (name, p, q)


def test_adapted_basis_incompatible_coordinates():
    # heisenberg in the skewed basis f1 = x, f2 = y, f3 = x + z:
    # [f1, f2] = z = f3 - f1 and [f2, f3] = [y, x] = -z = f1 - f3, so the
    # filtration term span{f3 - f1} is not a coordinate subspace
    skew = LieAlgebra.from_brackets(
        "abc", {(0, 1): [(-1, 0), (1, 2)], (1, 2): [(1, 0), (-1, 2)]})
    assert validate(skew).ok
    assert is_nilpotent(skew)
    with pytest.raises(AdaptedBasisError):
        adapted_basis(skew)


def test_reorder_basis_roundtrip():
    L = catalog.strict_ut(3)
    perm = (2, 0, 1)
    R = reorder_basis(L, perm)
    assert validate(R).ok
    inv = tuple(perm.index(i) for i in range(3))
    assert reorder_basis(R, inv).c == L.c


# --- matrix-built algebras ---------------------------------------------

def test_ut3_structure_from_commutators():
    U = catalog.ut(3)
    # labels: E11 E22 E33 E12 E23 E13
    i = {lab: k for k, lab in enumerate(U.labels)}
    e = lambda lab: unit_vector(6, i[lab])
    assert bracket(U, e("E11"), e("E12")) == e("E12")
    assert bracket(U, e("E22"), e("E12")) == tuple(-a for a in e("E12"))
    assert bracket(U, e("E12"), e("E23")) == e("E13")
    assert bracket(U, e("E11"), e("E22")) == (0,) * 6


def test_prop_c_structure():
    P = catalog.prop_c()
    i = {lab: k for k, lab in enumerate(P.labels)}
    e = lambda lab: unit_vector(5, i[lab])
    # D1 = E11 + E33: [D1, E12] = E12, [D1, E23] = -E23, [D1, E13] = 0
    assert bracket(P, e("D1"), e("E12")) == e("E12")
    assert bracket(P, e("D1"), e("E23")) == tuple(-a for a in e("E23"))
    assert bracket(P, e("D1"), e("E13")) == (0,) * 5
    linf = lower_central_series(P).last
    assert linf == Subspace.from_rows(5, [e("E12"), e("E23"), e("E13")])


def test_random_reordered_series_invariant():
    rng = random.Random(7)
    H = catalog.heisenberg3()
    for _ in range(5):
        perm = list(range(3))
        rng.shuffle(perm)
        R = reorder_basis(H, tuple(perm))
        assert lower_central_series(R).dims == (3, 1, 0)
        assert is_nilpotent(R)
