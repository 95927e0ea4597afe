from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_lie_algebras, small_rationals
from symenlarge import lie, linalg, registry
from symenlarge.lie import LieAlgebra


def e(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def test_bracket_so3_reads_structure_constant(so3):
    assert lie.bracket(so3, e(3, 0), e(3, 1)) == e(3, 2)


def test_bracket_abelian_vanishes():
    A = lie.abelian(4)
    assert lie.bracket(A, e(4, 0), e(4, 2)) == [0] * 4


def test_bracket_dimension_mismatch(so3):
    with pytest.raises(lie.DimensionMismatch):
        lie.bracket(so3, [1, 0], [0, 1, 0])


@settings(max_examples=60, deadline=None)
@given(random_lie_algebras(), st.data())
def test_bracket_bilinear_and_alternating(L, data):
    vec = st.lists(small_rationals, min_size=L.dim, max_size=L.dim)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    a, b = data.draw(small_rationals), data.draw(small_rationals)
    ax_by = [a * p + b * q for p, q in zip(x, y)]
    lhs = lie.bracket(L, ax_by, z)
    rhs = [a * p + b * q for p, q in zip(lie.bracket(L, x, z), lie.bracket(L, y, z))]
    assert lhs == rhs
    assert lie.bracket(L, x, x) == [0] * L.dim
    assert lie.bracket(L, x, y) == [-v for v in lie.bracket(L, y, x)]


def test_jacobi_so3_and_abelian(so3):
    assert lie.jacobi_check(so3).ok
    assert lie.jacobi_check(lie.abelian(5)).ok


def test_jacobi_violation_witness():
    L = LieAlgebra.from_brackets("bad", ["e1", "e2", "e3"],
                                 [(0, 1, {2: 1}), (1, 2, {0: 1}), (2, 0, {0: 1})])
    rep = lie.jacobi_check(L)
    assert not rep.ok
    assert rep.violations == ((0, 1, 2, (0, 0, 1)),)
    with pytest.raises(lie.JacobiError):
        lie.validate(L)


def test_both_halves_consistent_and_inconsistent():
    ok = LieAlgebra.from_brackets("x", ["a", "b", "c"], [(0, 1, {2: 1}), (1, 0, {2: -1})])
    assert ok.bracket_basis(1, 0) == {2: -1}
    with pytest.raises(lie.InconsistentBrackets):
        LieAlgebra.from_brackets("x", ["a", "b", "c"], [(0, 1, {2: 1}), (1, 0, {2: 1})])
    with pytest.raises(lie.LieAlgebraError):
        LieAlgebra.from_brackets("x", ["a", "b"], [(0, 0, {1: 1})])


def test_downstream_requires_validation():
    raw = LieAlgebra.from_brackets("h", ["p", "q", "z"], [(0, 1, {2: 1})])
    with pytest.raises(lie.NotValidated):
        lie.killing_form(raw)
    assert lie.killing_form(lie.validate(raw)) == [[0] * 3] * 3


def test_killing_so3(so3):
    assert lie.killing_form(so3) == [[-2 if i == j else 0 for j in range(3)] for i in range(3)]


def test_killing_heisenberg_and_abelian(heis1):
    assert lie.killing_form(heis1) == [[0] * 3] * 3
    assert lie.killing_form(lie.abelian(3)) == [[0] * 3] * 3


def _defining_trace_killing(n_total, mats):
    # oracle for so(p,q): K(X, Y) = (n - 2) tr(XY) in the defining representation
    k = len(mats)
    return [[(n_total - 2) * sum(mats[i][a][b] * mats[j][b][a] for a in range(n_total) for b in range(n_total))
             for j in range(k)] for i in range(k)]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_killing_so_n_matches_trace_formula(n):
    names, mats = registry._rotations(n, n)
    L = registry.build("so", (n,)).algebra
    assert lie.killing_form(L) == _defining_trace_killing(n, mats)


def test_killing_lorentz_det():
    names, mats = registry._lorentz_generators(3, 4)
    L = registry.build("lorentz").algebra
    K = lie.killing_form(L)
    assert K == _defining_trace_killing(4, mats)
    # J block -4 I, K block +4 I
    assert linalg.bareiss_det(K) == -4096
    assert lie.is_semisimple(L)


def test_semisimplicity_examples(so3, heis1):
    assert lie.is_semisimple(so3)
    assert not lie.is_semisimple(heis1)
    for n in range(3, 7):
        assert lie.is_semisimple(registry.build("so", (n,)).algebra)
    assert not lie.is_semisimple(registry.build("galilei", (3,)).algebra)
    assert not lie.is_semisimple(registry.build("poincare", (1, 3)).algebra)


@settings(max_examples=40, deadline=None)
@given(random_lie_algebras())
def test_killing_symmetric(L):
    K = lie.killing_form(L)
    assert all(K[i][j] == K[j][i] for i in range(L.dim) for j in range(L.dim))


def test_center_examples(so3, heis1):
    assert lie.center(heis1) == [e(3, 2)]
    assert lie.center(lie.abelian(3)) == [e(3, i) for i in range(3)]
    assert lie.center(so3) == []


def test_derived_examples(so3, heis1):
    assert len(lie.derived_subalgebra(so3)) == 3
    assert lie.derived_subalgebra(lie.abelian(4)) == []
    assert lie.derived_subalgebra(heis1) == [e(3, 2)]


@settings(max_examples=60, deadline=None)
@given(random_lie_algebras())
def test_rank_nullity_center(L):
    Z = lie.center(L)
    assert len(Z) + lie.ad_stack_rank(L) == L.dim
    for z in Z:
        for i in range(L.dim):
            assert not any(lie.bracket(L, z, e(L.dim, i)))


@settings(max_examples=30, deadline=None)
@given(random_lie_algebras())
def test_change_basis_identity_is_noop(L):
    I = [[1 if i == j else 0 for j in range(L.dim)] for i in range(L.dim)]
    M = lie.change_basis(L, I)
    assert dict(M.brackets) == dict(L.brackets)
