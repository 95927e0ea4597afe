import cmath
import itertools

import numpy as np
import pytest

from symenlarge import verify as v


def test_ray_basis_vector():
    assert np.allclose(v.ray_to_density([1, 0]), np.diag([1, 0]), atol=1e-15)


def test_ray_phase_invariance():
    psi = np.array([1, 1]) / np.sqrt(2)
    rho = v.ray_to_density(psi)
    assert np.max(np.abs(v.ray_to_density(cmath.exp(1j * np.pi / 3) * psi) - rho)) <= 1e-12


def test_ray_three_four():
    rho = v.ray_to_density([3, 4])
    assert np.max(np.abs(rho - np.array([[9, 12], [12, 16]]) / 25)) <= 1e-15
    assert v.is_density_matrix(rho)


def test_zero_vector_rejected():
    with pytest.raises(v.ZeroVector):
        v.ray_to_density([0, 0])
    with pytest.raises(v.ZeroVector):
        v.transition_probability([0, 0], [1, 0])


def test_transition_probability_examples():
    assert v.transition_probability([1, 0], [0, 1]) == 0
    assert abs(v.transition_probability([1, 2], [2, 4]) - 1) <= 1e-15
    assert abs(v.transition_probability([1, 0], np.array([1, 1]) / np.sqrt(2)) - 0.5) <= 1e-15


@pytest.mark.parametrize("d", [1, 2, 5])
def test_rays_report_passes(d):
    assert all(c.passed for c in v.rays_report(d, 200, seed=d))


def test_weyl_d2_is_pauli():
    clock, shift = v.weyl_ops(2)
    assert np.allclose(clock, np.diag([1, -1]), atol=1e-15)
    assert np.allclose(shift, [[0, 1], [1, 0]], atol=1e-15)


def test_weyl_relation_and_order():
    clock, shift = v.weyl_ops(3)
    zeta = cmath.exp(2j * cmath.pi / 3)
    assert np.max(np.abs(clock @ shift - zeta * shift @ clock)) <= 1e-12
    _, shift5 = v.weyl_ops(5)
    assert np.max(np.abs(np.linalg.matrix_power(shift5, 5) - np.eye(5))) <= 1e-12


def test_weyl_bad_dimension():
    with pytest.raises(v.BadDimension):
        v.weyl_ops(1)


def test_commutator_phase_examples():
    assert abs(v.weyl_commutator_phase(2, 1, 0, 0, 1) + 1) <= 1e-12
    assert abs(v.weyl_commutator_phase(4, 2, 3, 2, 3) - 1) <= 1e-12
    assert abs(v.weyl_commutator_phase(3, 1, 0, 0, 1) - cmath.exp(2j * cmath.pi / 3)) <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_phase_depends_only_on_symplectic_form(d):
    seen = {}
    for a, b, a2, b2 in itertools.product(range(d), repeat=4):
        key = (a * b2 - a2 * b) % d
        c = v.weyl_commutator_phase(d, a, b, a2, b2)
        seen.setdefault(key, c)
        assert abs(seen[key] - c) <= 1e-12
    assert v.weyl_phase_residual(d) <= 1e-12


def test_no_sign_redefinition_removes_phase():
    s = v.weyl_phase_redefinition_search(2)
    assert s["candidates"] == 16
    assert s["homomorphisms"] == 0
    assert s["phases"] == [complex(-1, 0)]


def test_weyl_report_d2():
    checks = {c.name: c for c in v.weyl_report(2)}
    assert all(c.passed for c in checks.values())
    assert checks["commutator_phase_(1,0)_(0,1)"].extra["value"] == [-1.0, 0.0]


def test_su2_to_so3_identity_and_kernel():
    assert np.allclose(v.su2_to_so3(np.eye(2)), np.eye(3), atol=1e-15)
    assert np.allclose(v.su2_to_so3(-np.eye(2)), np.eye(3), atol=1e-15)


def test_su2_to_so3_quarter_turn_about_z():
    U = np.diag([cmath.exp(1j * cmath.pi / 4), cmath.exp(-1j * cmath.pi / 4)])
    R = v.su2_to_so3(U)
    assert np.max(np.abs(R - [[0, 1, 0], [-1, 0, 0], [0, 0, 1]])) <= 1e-12
    assert abs(np.trace(R) - 1) <= 1e-12


def test_su2_to_so3_rejects():
    with pytest.raises(v.NotSU2):
        v.su2_to_so3(np.diag([1, -1]))


def test_section_sign_examples():
    Rz = v.rotation_about([0, 0, 1], np.pi)
    assert v.section_sign(Rz, Rz) == -1
    rng = np.random.default_rng(0)
    for _ in range(20):
        R = v.su2_to_so3(v.random_su2(rng))
        assert v.section_sign(np.eye(3), R) == 1


@pytest.mark.parametrize("axis", [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, -1, 1]])
def test_section_lifts_pi_rotations(axis):
    R = v.rotation_about(axis, np.pi)
    assert np.max(np.abs(v.su2_to_so3(v.so3_section(R)) - R)) <= 1e-9


def test_sign_audit():
    audit = v.so3_section_sign_audit(1000, seed=0)
    assert audit.cocycle_failures == 0
    assert audit.minus_count / audit.samples > 0.1
    assert audit.lift_residual <= 1e-9


def test_su2so3_report_passes():
    assert all(c.passed for c in v.su2so3_report(300, seed=2))
