from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from symenlarge import lie, registry
from symenlarge.linalg import NotInvertible, inverse

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def two_step_nilpotent(a: int, b: int, coeffs) -> lie.LieAlgebra:
    """[e_i, e_j] in span(f_k), everything else zero; Jacobi holds trivially."""
    c = {}
    it = iter(coeffs)
    for i, j in combinations(range(a), 2):
        vec = {a + k: next(it) for k in range(b)}
        c[(i, j)] = {k: v for k, v in vec.items() if v}
    basis = [f"e{i + 1}" for i in range(a)] + [f"f{k + 1}" for k in range(b)]
    return lie.LieAlgebra.from_structure_constants("nil", basis, c)


def almost_abelian(matrix) -> lie.LieAlgebra:
    """R ⋉_A R^m: [e0, e_i] = sum_k A[k][i] e_k; Jacobi holds for every A."""
    m = len(matrix)
    c = {}
    for i in range(m):
        vec = {k + 1: matrix[k][i] for k in range(m) if matrix[k][i]}
        if vec:
            c[(0, i + 1)] = vec
    return lie.LieAlgebra.from_structure_constants("almost_abelian", [f"e{i}" for i in range(m + 1)], c)


@st.composite
def random_lie_algebras(draw, max_dim: int = 6):
    kind = draw(st.sampled_from(["nil", "almost_abelian", "registry", "sum"]))
    if kind == "nil":
        a = draw(st.integers(2, 3))
        b = draw(st.integers(1, 2))
        coeffs = draw(st.lists(small_rationals, min_size=b * a * (a - 1) // 2, max_size=b * a * (a - 1) // 2))
        L = two_step_nilpotent(a, b, coeffs)
    elif kind == "almost_abelian":
        m = draw(st.integers(1, max_dim - 1))
        mat = [[draw(small_rationals) for _ in range(m)] for _ in range(m)]
        L = almost_abelian(mat)
    elif kind == "registry":
        name = draw(st.sampled_from(["so(3)", "euclidean(2)", "heisenberg(1)", "galilei(1)", "lorentz(1,3)"]))
        L = registry.build_from_text(name).algebra
        P = draw(invertible_matrices(L.dim))
        L = lie.change_basis(L, P)
    else:
        A = registry.build_from_text(draw(st.sampled_from(["so(3)", "heisenberg(1)", "euclidean(2)"]))).algebra
        B = lie.abelian(draw(st.integers(1, 2)))
        L = lie.direct_sum(A, B)
    return lie.validate(L)


@st.composite
def invertible_matrices(draw, n: int):
    """Unit lower times unit upper triangular, optionally with a row swap; always invertible."""
    ent = st.integers(-2, 2)
    lo = [[Fraction(1) if i == j else (Fraction(draw(ent)) if i > j else Fraction(0)) for j in range(n)]
          for i in range(n)]
    up = [[Fraction(1) if i == j else (Fraction(draw(ent)) if i < j else Fraction(0)) for j in range(n)]
          for i in range(n)]
    P = [[sum(lo[i][k] * up[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    if n > 1 and draw(st.booleans()):
        P[0], P[-1] = P[-1], P[0]
    return P


def random_invertible(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> list[list[Fraction]]:
    while True:
        P = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        try:
            inverse(P)
        except NotInvertible:
            continue
        return P


def solvable_counterexample() -> lie.LieAlgebra:
    """[e1, e2] = e2, [e1, e3] = e3."""
    return lie.validate(lie.LieAlgebra.from_brackets(
        "solvable", ["e1", "e2", "e3"], [(0, 1, {1: 1}), (0, 2, {2: 1})]))


@pytest.fixture
def so3():
    return registry.build("so", (3,)).algebra


@pytest.fixture
def heis1():
    return registry.build("heisenberg", (1,)).algebra


@pytest.fixture
def e2():
    return registry.build("euclidean").algebra


@pytest.fixture
def galilei3():
    return registry.build("galilei", (3,)).algebra


@pytest.fixture
def solvable():
    return solvable_counterexample()
