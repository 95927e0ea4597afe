import dataclasses
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rationals, solvable_counterexample
from symenlarge import cohomology as co
from symenlarge import extensions as ex
from symenlarge import lie, registry
from symenlarge.cohomology import TwoCochain
from symenlarge.extensions import Fingerprint


def test_abelian2_extension_is_heisenberg():
    E = ex.central_extend(lie.abelian(2), [TwoCochain.from_entries(2, {(0, 1): 1})])
    assert E.central_indices == (2,)
    L = lie.validate(E.algebra)
    assert L.bracket_basis(0, 1) == {2: 1}
    assert lie.center(L) == [[0, 0, 1]]
    assert ex.fingerprint(L) == ex.fingerprint(registry.build("heisenberg", (1,)).algebra)


def test_galilei_extension_has_mass_bracket(galilei3):
    (rep,) = co.h2(galilei3).representatives
    E = ex.central_extend(galilei3, [rep])
    L = lie.validate(E.algebra)
    names = L.basis
    z = E.central_indices[0]
    assert names[z] == "Z"
    for i in range(1, 4):
        for j in range(1, 4):
            k, p = names.index(f"K{i}"), names.index(f"P{j}")
            assert L.bracket_basis(k, p).get(z, 0) == (1 if i == j else 0)
    assert ex.quotient_by_center_slice(E).brackets == galilei3.brackets


def test_zero_cocycle_gives_direct_sum(so3):
    E = ex.central_extend(so3, [TwoCochain.zero(3)])
    assert E.algebra.brackets == lie.direct_sum(so3, lie.abelian(1)).brackets


def test_quotient_round_trip_abelian():
    A = lie.abelian(2)
    E = ex.central_extend(A, [TwoCochain.from_entries(2, {(0, 1): 3})])
    assert ex.quotient_by_center_slice(E).brackets == A.brackets


def test_heisenberg_as_extension_of_abelian(heis1):
    E = ex.as_extension(heis1, [2])
    assert E.base_dim == 2
    assert dict(ex.quotient_by_center_slice(E).brackets) == {}
    assert E.cocycles[0].entries == {(0, 1): 1}
    with pytest.raises(lie.LieAlgebraError):
        ex.as_extension(heis1, [0])


def test_fingerprint_examples(so3, heis1):
    assert ex.fingerprint(so3) == Fingerprint(3, 0, 3, (0, 3, 0), 0)
    assert ex.fingerprint(lie.abelian(2)) == Fingerprint(2, 2, 0, (0, 0, 2), 1)
    assert ex.fingerprint(heis1) == Fingerprint(3, 1, 1, (0, 0, 3), 2)


def test_central_extend_dimension_mismatch(so3):
    with pytest.raises(lie.DimensionMismatch):
        ex.central_extend(so3, [TwoCochain.zero(2)])


_BASES = ["euclidean(2)", "heisenberg(1)", "galilei(1)", "abelian(3)", "galilei(2)", "so(3)"]


def _base(name):
    if name == "solvable":
        return solvable_counterexample()
    return registry.build_from_text(name).algebra


@st.composite
def algebra_and_cochain(draw):
    L = _base(draw(st.sampled_from(_BASES + ["solvable"])))
    if draw(st.booleans()):
        # random element of Z2
        basis = co.cocycle_basis(L)
        om = TwoCochain.zero(L.dim)
        for z in basis:
            om = om + z.scaled(draw(small_rationals))
    else:
        pairs = co.pair_list(L.dim)
        vals = draw(st.lists(small_rationals, min_size=len(pairs), max_size=len(pairs)))
        om = TwoCochain.from_entries(L.dim, dict(zip(pairs, vals)))
    return L, om


@settings(max_examples=200, deadline=None)
@given(algebra_and_cochain())
def test_jacobi_iff_cocycle(pair):
    L, om = pair
    E = ex.central_extend(L, [om])
    assert lie.jacobi_check(E.algebra).ok == co.is_cocycle(L, om)
    assert ex.quotient_by_center_slice(E).brackets == L.brackets


def test_solvable_noncocycle_breaks_jacobi(solvable):
    E = ex.central_extend(solvable, [TwoCochain.from_entries(3, {(1, 2): 1})])
    assert not lie.jacobi_check(E.algebra).ok


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["euclidean(2)", "heisenberg(1)", "galilei(2)", "abelian(3)"]), st.data())
def test_cohomologous_cocycles_equal_fingerprints(name, data):
    L = _base(name)
    h = co.h2(L)
    om = h.representatives[0]
    lam = data.draw(st.lists(small_rationals, min_size=L.dim, max_size=L.dim))
    om2 = om + co.d1(L, lam)
    assert co.are_cohomologous(L, om, om2) is not None
    f1 = ex.fingerprint(ex.central_extend(L, [om]).algebra)
    f2 = ex.fingerprint(ex.central_extend(L, [om2]).algebra)
    assert f1 == f2


def test_heisenberg_cocycle_symbolic():
    x, y, x2, y2, x3, y3 = sympy.symbols("x y x2 y2 x3 y3")

    def xi(g, h):
        return (g[0] * h[1] - g[1] * h[0]) / 2

    g1, g2, g3 = (x, y), (x2, y2), (x3, y3)
    m = lambda g, h: (g[0] + h[0], g[1] + h[1])
    assert sympy.expand(xi(g1, g2) + xi(m(g1, g2), g3) - xi(g2, g3) - xi(g1, m(g2, g3))) == 0


def test_heisenberg_check_exact():
    rep = ex.group_cocycle_check(ex.heisenberg_spec(1), 2000, seed=3)
    assert rep.exact and rep.max_residual == 0
    ex.group_cocycle_check(ex.heisenberg_spec(3), 500, seed=4)


def test_zero_cocycle_passes():
    ex.group_cocycle_check(ex.zero_spec(ex.heisenberg_spec(1)), 100)
    ex.group_cocycle_check(ex.zero_spec(ex.bargmann_spec()), 100)


def test_gstar_heisenberg_example():
    spec = ex.heisenberg_spec(1)
    z, g = ex.gstar_multiply((0,), (1, 0), (0,), (0, 1), spec)
    assert z == (Fraction(1, 2),) and g == (1, 1)


def test_gstar_identity():
    spec = ex.heisenberg_spec(1)
    g = (Fraction(3, 2), Fraction(-7, 5))
    assert ex.gstar_multiply((0,), spec.identity, (Fraction(5),), g, spec) == ((Fraction(5),), g)
    with pytest.raises(lie.DimensionMismatch):
        ex.gstar_multiply((0, 0), g, (0,), g, spec)


def test_bargmann_cocycle_and_associativity():
    spec = ex.bargmann_spec()
    rep = ex.group_cocycle_check(spec, 10_000, seed=0, tol=1e-12)
    assert rep.max_residual < 1e-12
    assoc = ex.gstar_associativity(spec, 1000, seed=1)
    assert assoc.failures == 0 and assoc.max_residual < 1e-12


def test_perturbed_cocycle_detected():
    spec = ex.bargmann_spec()
    bad = dataclasses.replace(spec, xi=lambda g, h: (spec.xi(g, h)[0] + 0.5 * g.t * h.t * g.t,))
    with pytest.raises(ex.CocycleViolation) as info:
        ex.group_cocycle_check(bad, 50)
    assert len(info.value.witness) == 3
    assert ex.gstar_associativity(bad, 50).failures > 0


def test_unnormalized_cocycle_gets_normalized():
    base = ex.heisenberg_spec(1)
    spec = ex.GroupCocycleSpec.normalized("shifted", (1,), 1, base.identity, base.multiply,
                                          lambda g, h: (base.xi(g, h)[0] + 7,), base.sample,
                                          base.distance, True)
    assert spec.xi(base.identity, base.identity) == (0,)
    ex.group_cocycle_check(spec, 100)


def test_galilei_element_json_round_trip():
    import random
    g = ex.bargmann_spec().sample(random.Random(5))
    h = ex.GalileiElement.from_json(g.to_json())
    assert ex.bargmann_spec().distance(g, h) == 0
