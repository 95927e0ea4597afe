"""Central extensions: algebra level and the group law on R^m x G.

At the algebra level ``central_extend`` twists the bracket of ``g + R^m`` by
2-cochains.  At the group level ``gstar_multiply`` implements

    (x, g1) . (y, g2) = (x + y + xi(g1, g2), g1 g2)

for a group cocycle ``xi``; ``group_cocycle_check`` samples the cocycle
identity that makes this associative.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from . import cohomology, lie
from .cohomology import TwoCochain
from .lie import DimensionMismatch, LieAlgebra, LieAlgebraError


@dataclass(frozen=True)
class ExtendedAlgebra:
    algebra: LieAlgebra
    base_dim: int
    central_indices: tuple[int, ...]
    cocycles: tuple[TwoCochain, ...] = ()


def _central_names(base: Sequence[str], m: int) -> list[str]:
    stem = ["Z"] if m == 1 else [f"Z{a + 1}" for a in range(m)]
    taken = set(base)
    out = []
    for s in stem:
        while s in taken:
            s += "'"
        taken.add(s)
        out.append(s)
    return out


def central_extend(L: LieAlgebra, cocycles: Sequence[TwoCochain], name: str | None = None) -> ExtendedAlgebra:
    """Extension of ``L`` by ``R^m`` with bracket ``([x,y], om_1(x,y), ..., om_m(x,y))``.

    The cochains need not be closed; the result satisfies Jacobi exactly when
    they all are, so the returned algebra is left unvalidated.
    """
    n = L.dim
    for om in cocycles:
        if om.dim != n:
            raise DimensionMismatch(f"cochain of dim {om.dim} for algebra of dim {n}")
    m = len(cocycles)
    c = {k: dict(v) for k, v in L.brackets.items()}
    for a, om in enumerate(cocycles):
        for (i, j), v in om.entries.items():
            c.setdefault((i, j), {})[n + a] = v
    basis = list(L.basis) + _central_names(L.basis, m)
    ext = LieAlgebra.from_structure_constants(name or f"{L.name}~", basis, c)
    return ExtendedAlgebra(ext, n, tuple(range(n, n + m)), tuple(cocycles))


def quotient_by_center_slice(E: ExtendedAlgebra) -> LieAlgebra:
    """Drop the central coordinates; the base structure constants come back exactly."""
    n = E.base_dim
    c = {}
    for (i, j), vec in E.algebra.brackets.items():
        if i >= n or j >= n:
            continue
        kept = {k: v for k, v in vec.items() if k < n}
        if kept:
            c[(i, j)] = kept
    name = E.algebra.name[:-1] if E.algebra.name.endswith("~") else E.algebra.name
    return LieAlgebra.from_structure_constants(name, E.algebra.basis[:n], c)


def as_extension(L: LieAlgebra, central: Sequence[int]) -> ExtendedAlgebra:
    """View ``L`` as a central extension by the given trailing central generators."""
    central = tuple(central)
    n = L.dim - len(central)
    if central != tuple(range(n, L.dim)):
        raise LieAlgebraError("central generators must be the trailing basis elements")
    for z in central:
        if any(L.bracket_basis(z, i) for i in range(L.dim)):
            raise LieAlgebraError(f"generator {L.basis[z]} is not central")
    cocycles = []
    for a, z in enumerate(central):
        entries = {(i, j): vec[z] for (i, j), vec in L.brackets.items() if z in vec and j < n}
        cocycles.append(TwoCochain(n, dict(sorted(entries.items()))))
    return ExtendedAlgebra(L, n, central, tuple(cocycles))


# --- fingerprints ----------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    dim: int
    dim_center: int
    dim_derived: int
    killing_signature: tuple[int, int, int]
    dim_H2: int


def fingerprint(L: LieAlgebra) -> Fingerprint:
    """Isomorphism invariants.  Equal fingerprints are necessary, not sufficient."""
    L = lie.validate(L)
    from .linalg import inertia

    return Fingerprint(
        dim=L.dim,
        dim_center=len(lie.center(L)),
        dim_derived=len(lie.derived_subalgebra(L)),
        killing_signature=inertia(lie.killing_form(L)),
        dim_H2=cohomology.h2(L).dim_H2,
    )


# --- group cocycles --------------------------------------------------------

class CocycleViolation(AssertionError):
    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class GroupCocycleSpec:
    """A concrete group with an R^m-valued 2-cocycle.

    ``xi`` is stored normalized: ``xi(e, g) = xi(g, e) = 0``.
    """

    name: str
    params: tuple
    central_dim: int
    identity: Any
    multiply: Callable[[Any, Any], Any]
    xi: Callable[[Any, Any], tuple]
    sample: Callable[[random.Random], Any]
    distance: Callable[[Any, Any], float]
    exact: bool

    @classmethod
    def normalized(cls, name, params, central_dim, identity, multiply, xi, sample, distance, exact):
        # for a cocycle xi(e, g) = xi(g, e) = xi(e, e); subtracting that constant normalizes it
        base = tuple(xi(identity, identity))
        if any(base):
            raw = xi

            def xi(g1, g2, _raw=raw, _base=base):
                return tuple(a - b for a, b in zip(_raw(g1, g2), _base))
        return cls(name, tuple(params), central_dim, identity, multiply, xi, sample, distance, exact)


def _cocycle_residual(spec: GroupCocycleSpec, g1, g2, g3) -> tuple:
    m = spec.multiply
    lhs = [a + b for a, b in zip(spec.xi(g1, g2), spec.xi(m(g1, g2), g3))]
    rhs = [a + b for a, b in zip(spec.xi(g2, g3), spec.xi(g1, m(g2, g3)))]
    return tuple(a - b for a, b in zip(lhs, rhs))


@dataclass(frozen=True)
class CocycleReport:
    name: str
    samples: int
    exact: bool
    max_residual: float
    tolerance: float


def group_cocycle_check(spec: GroupCocycleSpec, samples: int, seed: int = 0,
                        tol: float = 1e-12) -> CocycleReport:
    """Sample ``xi(g1,g2) + xi(g1g2,g3) = xi(g2,g3) + xi(g1,g2g3)``.

    Exact comparison for rational evaluators, absolute tolerance ``tol``
    otherwise.  Raises ``CocycleViolation`` with the offending triple.
    """
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        g1, g2, g3 = spec.sample(rng), spec.sample(rng), spec.sample(rng)
        res = _cocycle_residual(spec, g1, g2, g3)
        r = max((abs(float(v)) for v in res), default=0.0)
        bad = any(res) if spec.exact else r > tol
        if bad:
            raise CocycleViolation(f"{spec.name}: cocycle identity fails (residual {r:.3g})", (g1, g2, g3))
        worst = max(worst, r)
    for g in (spec.sample(rng) for _ in range(min(samples, 16))):
        for v in spec.xi(spec.identity, g) + spec.xi(g, spec.identity):
            if (v != 0) if spec.exact else abs(v) > tol:
                raise CocycleViolation(f"{spec.name}: cocycle is not normalized", (g,))
    return CocycleReport(spec.name, samples, spec.exact, worst, 0.0 if spec.exact else tol)


def gstar_multiply(x: Sequence, g1, y: Sequence, g2, spec: GroupCocycleSpec) -> tuple[tuple, Any]:
    if len(x) != spec.central_dim or len(y) != spec.central_dim:
        raise DimensionMismatch(f"central coordinates must have length {spec.central_dim}")
    z = tuple(a + b + c for a, b, c in zip(x, y, spec.xi(g1, g2)))
    return z, spec.multiply(g1, g2)


@dataclass(frozen=True)
class AssociativityReport:
    samples: int
    max_residual: float
    failures: int


def gstar_associativity(spec: GroupCocycleSpec, samples: int, seed: int = 0,
                        tol: float = 1e-12) -> AssociativityReport:
    """Compare ``(a b) c`` with ``a (b c)`` on sampled elements of R^m x G."""
    rng = random.Random(seed)
    worst = 0.0
    failures = 0

    def central():
        if spec.exact:
            return tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(spec.central_dim))
        return tuple(rng.uniform(-1, 1) for _ in range(spec.central_dim))

    for _ in range(samples):
        (x, g1), (y, g2), (w, g3) = [(central(), spec.sample(rng)) for _ in range(3)]
        left = gstar_multiply(*gstar_multiply(x, g1, y, g2, spec), w, g3, spec)
        right = gstar_multiply(x, g1, *gstar_multiply(y, g2, w, g3, spec), spec)
        r = max(abs(float(a - b)) for a, b in zip(left[0], right[0]))
        r = max(r, spec.distance(left[1], right[1]))
        worst = max(worst, r)
        if (r != 0) if spec.exact else r > tol:
            failures += 1
    return AssociativityReport(samples, worst, failures)


# --- concrete specs ----------------------------------------------------------

def heisenberg_spec(n: int = 1) -> GroupCocycleSpec:
    """R^{2n} with xi((x, y), (x', y')) = (x.y' - y.x') / 2, exact rationals.

    Elements are tuples of length 2n: the first n entries are x, the rest y.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def multiply(g, h):
        return tuple(a + b for a, b in zip(g, h))

    def xi(g, h):
        x, y = g[:n], g[n:]
        x2, y2 = h[:n], h[n:]
        s = sum((a * b for a, b in zip(x, y2)), Fraction(0)) - sum((a * b for a, b in zip(y, x2)), Fraction(0))
        return (s / 2,)

    def sample(rng):
        return tuple(Fraction(rng.randint(-100, 100), rng.randint(1, 12)) for _ in range(2 * n))

    def distance(g, h):
        return max((abs(float(a - b)) for a, b in zip(g, h)), default=0.0)

    return GroupCocycleSpec.normalized(
        "heisenberg", (n,), 1, tuple(Fraction(0) for _ in range(2 * n)),
        multiply, xi, sample, distance, exact=True)


@dataclass(frozen=True)
class GalileiElement:
    """(R, v, a, t): x -> R x + v t + a, t -> t + t0."""

    R: np.ndarray
    v: np.ndarray
    a: np.ndarray
    t: float

    def to_json(self) -> dict:
        return {"R": self.R.tolist(), "v": self.v.tolist(), "a": self.a.tolist(), "t": float(self.t)}

    @classmethod
    def from_json(cls, obj: dict) -> "GalileiElement":
        unknown = set(obj) - {"R", "v", "a", "t"}
        if unknown:
            raise ValueError(f"unknown keys in Galilei element: {sorted(unknown)}")
        R = np.asarray(obj["R"], dtype=float).reshape(3, 3)
        return cls(R, np.asarray(obj["v"], dtype=float), np.asarray(obj["a"], dtype=float), float(obj["t"]))


def galilei_multiply(g: GalileiElement, h: GalileiElement) -> GalileiElement:
    return GalileiElement(g.R @ h.R, g.v + g.R @ h.v, g.a + g.R @ h.a + g.v * h.t, g.t + h.t)


def random_rotation(rng: random.Random) -> np.ndarray:
    q = np.array([rng.gauss(0, 1) for _ in range(4)])
    w, x, y, z = q / np.linalg.norm(q)
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def bargmann_spec() -> GroupCocycleSpec:
    """Galilei group in 3 space dimensions with the mass cocycle.

    xi(g1, g2) = |v1|^2 t2 / 2 + v1 . (R1 a2), unit mass.  Registry data, checked
    by ``group_cocycle_check`` rather than assumed.
    """

    def xi(g, h):
        return (0.5 * float(g.v @ g.v) * h.t + float(g.v @ (g.R @ h.a)),)

    def sample(rng):
        return GalileiElement(random_rotation(rng),
                              np.array([rng.uniform(-1, 1) for _ in range(3)]),
                              np.array([rng.uniform(-1, 1) for _ in range(3)]),
                              rng.uniform(-1, 1))

    def distance(g, h):
        return float(max(np.max(np.abs(g.R - h.R)), np.max(np.abs(g.v - h.v)),
                         np.max(np.abs(g.a - h.a)), abs(g.t - h.t)))

    identity = GalileiElement(np.eye(3), np.zeros(3), np.zeros(3), 0.0)
    return GroupCocycleSpec.normalized("bargmann", (3,), 1, identity, galilei_multiply, xi, sample,
                                       distance, exact=False)


def zero_spec(base: GroupCocycleSpec) -> GroupCocycleSpec:
    """Same group as ``base`` with the trivial cocycle."""
    zero = Fraction(0) if base.exact else 0.0
    return GroupCocycleSpec(f"{base.name}/trivial", base.params, base.central_dim, base.identity,
                            base.multiply, lambda g, h: (zero,) * base.central_dim, base.sample,
                            base.distance, base.exact)


GROUP_SPECS = {"heisenberg": heisenberg_spec, "galilei": lambda n=3: bargmann_spec()}
