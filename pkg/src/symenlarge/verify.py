"""Finite-dimensional numerical checks of projective-representation phenomena.

Covers rays versus density matrices, transition probabilities, the clock and
shift (Weyl) operators of Z_d x Z_d, and the SU(2) -> SO(3) double cover with
its sign cocycle.  Everything is plain numpy in double precision.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class ZeroVector(ValueError):
    pass


class BadDimension(ValueError):
    pass


class NotScalar(ArithmeticError):
    pass


class NotSU2(ValueError):
    pass


class LiftFailure(ArithmeticError):
    pass


@dataclass
class Check:
    name: str
    passed: bool
    max_residual: float
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": bool(self.passed), "max_residual": float(self.max_residual)}
        out.update(self.extra)
        return out


def _state(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    if psi.size == 0 or not np.any(psi):
        raise ZeroVector("state vector must be nonzero")
    return psi


# --- rays and transition probabilities ------------------------------------

def ray_to_density(psi) -> np.ndarray:
    psi = _state(psi)
    return np.outer(psi, psi.conj()) / np.vdot(psi, psi).real


def density_to_ray(rho) -> np.ndarray:
    """Unit vector spanning the range of a rank-one projector (leading eigenvector)."""
    w, v = np.linalg.eigh(np.asarray(rho, dtype=complex))
    return v[:, np.argmax(w)]


def is_density_matrix(rho, herm_tol=1e-12, trace_tol=1e-12, psd_tol=1e-10) -> bool:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - rho.conj().T)) > herm_tol:
        return False
    if abs(np.trace(rho) - 1) > trace_tol:
        return False
    return bool(np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2)) >= -psd_tol)


def transition_probability(psi, phi) -> float:
    psi = _state(psi)
    phi = _state(phi)
    num = abs(np.vdot(phi, psi)) ** 2
    return float(num / (np.vdot(phi, phi).real * np.vdot(psi, psi).real))


def random_state(rng: np.random.Generator, d: int) -> np.ndarray:
    return rng.normal(size=d) + 1j * rng.normal(size=d)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def rays_report(d: int, samples: int, seed: int = 0) -> list[Check]:
    if d < 1:
        raise BadDimension("dimension must be at least 1")
    rng = np.random.default_rng(seed)
    idem = phase = roundtrip = invariance = symmetry = 0.0
    valid = True
    for _ in range(samples):
        psi, phi = random_state(rng, d), random_state(rng, d)
        rho = ray_to_density(psi)
        valid &= is_density_matrix(rho)
        idem = max(idem, np.max(np.abs(rho @ rho - rho)))
        lam = complex(rng.normal(), rng.normal())
        phase = max(phase, np.max(np.abs(ray_to_density(lam * psi) - rho)))
        roundtrip = max(roundtrip, abs(1 - transition_probability(density_to_ray(rho), psi)))
        U = random_unitary(rng, d)
        invariance = max(invariance, abs(transition_probability(U @ psi, U @ phi)
                                         - transition_probability(psi, phi)))
        symmetry = max(symmetry, abs(transition_probability(psi, phi) - transition_probability(phi, psi)))
    return [
        Check("density_matrix_axioms", bool(valid), 0.0),
        Check("projector_idempotent", idem <= 1e-10, idem),
        Check("ray_invariance", phase <= 1e-12, phase),
        Check("ray_roundtrip", roundtrip <= 1e-10, roundtrip),
        Check("transition_probability_unitary_invariance", invariance <= 1e-10, invariance),
        Check("transition_probability_symmetric", symmetry <= 1e-12, symmetry),
    ]


# --- Weyl operators ------------------------------------------------------------

def weyl_ops(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Clock ``diag(1, z, ..., z^(d-1))`` and shift ``|k> -> |k+1 mod d>``, z = exp(2 pi i / d)."""
    if d < 2:
        raise BadDimension("Weyl operators need d >= 2")
    zeta = np.exp(2j * np.pi / d)
    clock = np.diag(zeta ** np.arange(d))
    shift = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    return clock, shift


def _weyl_element(clock, shift, a: int, b: int) -> np.ndarray:
    return np.linalg.matrix_power(clock, a % clock.shape[0]) @ np.linalg.matrix_power(shift, b % clock.shape[0])


def weyl_commutator_phase(d: int, a: int, b: int, a2: int, b2: int) -> complex:
    """Scalar c with W W' W^-1 W'^-1 = c I for W = Z^a X^b, W' = Z^a' X^b'."""
    clock, shift = weyl_ops(d)
    W = _weyl_element(clock, shift, a, b)
    V = _weyl_element(clock, shift, a2, b2)
    C = W @ V @ W.conj().T @ V.conj().T
    c = C[0, 0]
    off = np.max(np.abs(C - c * np.eye(d)))
    if off > 1e-10:
        raise NotScalar(f"group commutator is not scalar (residue {off:.3g})")
    return complex(c)


def expected_weyl_phase(d: int, a: int, b: int, a2: int, b2: int) -> complex:
    return complex(np.exp(2j * np.pi * ((a * b2 - a2 * b) % d) / d))


def weyl_phase_residual(d: int) -> float:
    """Largest deviation from exp(2 pi i (ab' - a'b)/d) over all of (Z_d)^4."""
    worst = 0.0
    for a, b, a2, b2 in itertools.product(range(d), repeat=4):
        got = weyl_commutator_phase(d, a, b, a2, b2)
        worst = max(worst, abs(got - expected_weyl_phase(d, a, b, a2, b2)))
    return worst


def weyl_phase_redefinition_search(d: int = 2) -> dict:
    """Try every sign redefinition beta: Z_d x Z_d -> {+1, -1} of g -> Z^a X^b.

    Returns how many redefinitions turn the projective representation into
    a homomorphism and the set of commutator phases seen.  For d = 2 the
    answer is none and {-1}: the extension is nontrivial.
    """
    clock, shift = weyl_ops(d)
    elems = list(itertools.product(range(d), repeat=2))
    mats = {g: _weyl_element(clock, shift, *g) for g in elems}
    homomorphisms = 0
    phases = set()
    for signs in itertools.product((1, -1), repeat=len(elems)):
        beta = dict(zip(elems, signs))
        W = {g: beta[g] * mats[g] for g in elems}
        ok = all(np.allclose(W[g] @ W[h], W[((g[0] + h[0]) % d, (g[1] + h[1]) % d)], atol=1e-12)
                 for g in elems for h in elems)
        homomorphisms += ok
        C = W[(1, 0)] @ W[(0, 1)] @ np.linalg.inv(W[(1, 0)]) @ np.linalg.inv(W[(0, 1)])
        phases.add(complex(np.round(C[0, 0], 12)))
    return {"candidates": 2 ** len(elems), "homomorphisms": homomorphisms, "phases": sorted(phases, key=lambda z: (z.real, z.imag))}


def weyl_report(d: int) -> list[Check]:
    clock, shift = weyl_ops(d)
    eye = np.eye(d)
    zeta = np.exp(2j * np.pi / d)
    unit = max(np.max(np.abs(clock.conj().T @ clock - eye)), np.max(np.abs(shift.conj().T @ shift - eye)))
    rel = np.max(np.abs(clock @ shift - zeta * shift @ clock))
    order = np.max(np.abs(np.linalg.matrix_power(shift, d) - eye))
    phase = weyl_phase_residual(d)
    c = weyl_commutator_phase(d, 1, 0, 0, 1)
    checks = [
        Check("unitary", unit <= 1e-12, unit),
        Check("clock_shift_relation", rel <= 1e-12, rel),
        Check("shift_order", order <= 1e-12, order),
        Check("commutator_phase_exhaustive", phase <= 1e-12, phase),
        Check("commutator_phase_(1,0)_(0,1)", abs(c - zeta) <= 1e-12, abs(c - zeta),
              {"value": [round(c.real, 12) + 0.0, round(c.imag, 12) + 0.0]}),
    ]
    if d == 2:
        s = weyl_phase_redefinition_search(2)
        checks.append(Check("no_sign_redefinition_trivializes", s["homomorphisms"] == 0
                            and s["phases"] == [complex(-1, 0)], 0.0,
                            {"candidates": s["candidates"]}))
    return checks


# --- SU(2) -> SO(3) -----------------------------------------------------------

def is_su2(U, tol=1e-10) -> bool:
    U = np.asarray(U, dtype=complex)
    return (U.shape == (2, 2) and np.max(np.abs(U.conj().T @ U - np.eye(2))) <= tol
            and abs(np.linalg.det(U) - 1) <= tol)


def su2_to_so3(U) -> np.ndarray:
    """R_ij = tr(sigma_i U sigma_j U^dagger) / 2."""
    U = np.asarray(U, dtype=complex)
    if not is_su2(U):
        raise NotSU2("matrix is not in SU(2)")
    Ud = U.conj().T
    R = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            R[i, j] = 0.5 * np.trace(PAULI[i] @ U @ PAULI[j] @ Ud).real
    return R


def quaternion_to_su2(q) -> np.ndarray:
    """(w, x, y, z) -> w I - i (x sigma_x + y sigma_y + z sigma_z)."""
    w, x, y, z = q
    return w * np.eye(2) - 1j * (x * PAULI[0] + y * PAULI[1] + z * PAULI[2])


def rotation_to_quaternion(R) -> np.ndarray:
    """Unit quaternion of a rotation, in the canonical hemisphere.

    Scalar part nonnegative; if it vanishes (rotation by pi) the first
    nonzero vector component is made positive.
    """
    R = np.asarray(R, dtype=float)
    tr = np.trace(R)
    # branch on the largest of w^2, x^2, y^2, z^2 so division is well conditioned
    diag = np.array([tr, R[0, 0], R[1, 1], R[2, 2]])
    k = int(np.argmax(diag))
    if k == 0:
        s = 2.0 * np.sqrt(max(1.0 + tr, 0.0))
        q = np.array([s / 4, (R[2, 1] - R[1, 2]) / s, (R[0, 2] - R[2, 0]) / s, (R[1, 0] - R[0, 1]) / s])
    else:
        i = k - 1
        j, l = (i + 1) % 3, (i + 2) % 3
        s = 2.0 * np.sqrt(max(1.0 + R[i, i] - R[j, j] - R[l, l], 0.0))
        if s == 0.0:
            raise LiftFailure("rotation matrix is degenerate")
        q = np.empty(4)
        q[0] = (R[l, j] - R[j, l]) / s
        q[1 + i] = s / 4
        q[1 + j] = (R[j, i] + R[i, j]) / s
        q[1 + l] = (R[l, i] + R[i, l]) / s
    q /= np.linalg.norm(q)
    if abs(q[0]) <= 1e-12:
        q[0] = 0.0
        lead = next((v for v in q[1:] if abs(v) > 1e-12), None)
        if lead is None:
            raise LiftFailure("could not extract rotation axis")
        if lead < 0:
            q = -q
            q[0] = 0.0
    elif q[0] < 0:
        q = -q
    return q


def so3_section(R) -> np.ndarray:
    """Fixed (discontinuous) section SO(3) -> SU(2)."""
    return quaternion_to_su2(rotation_to_quaternion(R))


def section_sign(R1, R2) -> int:
    """epsilon in {+1, -1} with s(R1) s(R2) = epsilon s(R1 R2)."""
    P = so3_section(R1) @ so3_section(R2)
    S = so3_section(np.asarray(R1) @ np.asarray(R2))
    if np.max(np.abs(P - S)) <= 1e-9:
        return 1
    if np.max(np.abs(P + S)) <= 1e-9:
        return -1
    raise LiftFailure("section product is not +/- the section of the product")


def rotation_about(axis, angle: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    K = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return np.eye(3) + np.sin(angle) * K + (1 - np.cos(angle)) * K @ K


def random_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    return quaternion_to_su2(q / np.linalg.norm(q))


@dataclass
class SignAudit:
    samples: int
    minus_count: int
    cocycle_failures: int
    lift_residual: float

    def to_json(self) -> dict:
        return {"samples": self.samples, "minus_count": self.minus_count,
                "cocycle_failures": self.cocycle_failures, "lift_residual": self.lift_residual}


def so3_section_sign_audit(samples: int, seed: int = 0) -> SignAudit:
    """Sign cocycle of the section on random pairs, Z_2 cocycle identity on random triples."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    rots = lambda: su2_to_so3(random_su2(rng))  # noqa: E731
    minus = 0
    failures = 0
    lift = 0.0
    for _ in range(samples):
        R1, R2, R3 = rots(), rots(), rots()
        e12 = section_sign(R1, R2)
        minus += e12 == -1
        lhs = e12 * section_sign(R1 @ R2, R3)
        rhs = section_sign(R2, R3) * section_sign(R1, R2 @ R3)
        failures += lhs != rhs
        lift = max(lift, float(np.max(np.abs(su2_to_so3(so3_section(R1)) - R1))))
    return SignAudit(samples, int(minus), int(failures), lift)


def su2so3_report(samples: int, seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    hom = orth = kern = 0.0
    for _ in range(samples):
        U1, U2 = random_su2(rng), random_su2(rng)
        R1, R2 = su2_to_so3(U1), su2_to_so3(U2)
        hom = max(hom, np.max(np.abs(su2_to_so3(U1 @ U2) - R1 @ R2)))
        orth = max(orth, np.max(np.abs(R1.T @ R1 - np.eye(3))), abs(np.linalg.det(R1) - 1))
        kern = max(kern, np.max(np.abs(su2_to_so3(-U1) - R1)))
    audit = so3_section_sign_audit(samples, seed)
    frac = audit.minus_count / samples
    return [
        Check("homomorphism", hom < 1e-9, hom),
        Check("orthogonal_det_one", orth <= 1e-10, orth),
        Check("kernel_plus_minus_identity", kern <= 1e-12, kern),
        Check("section_lifts", audit.lift_residual <= 1e-9, audit.lift_residual),
        Check("section_sign_minus_occurs", audit.minus_count > 0 if samples >= 100 else True, 0.0,
              {"minus_count": audit.minus_count, "fraction": frac}),
        Check("z2_cocycle_identity", audit.cocycle_failures == 0, float(audit.cocycle_failures)),
    ]
