"""Named groups and their Lie algebras.

Structure constants are generated by commuting explicit matrix realizations
and decomposing the result in the chosen basis, so no bracket table is typed
by hand.  The topological data (fundamental group, universal cover) cannot be
computed from the algebra and is curated below, with a source note per entry.

Basis conventions:

* ``so(3)`` / ``su2``: ``J1, J2, J3`` with ``[J1, J2] = J3`` cyclically.
* ``so(n)``, n >= 4: ``J_ab = E_ab - E_ba`` for ``a < b``.
* ``lorentz(1,d)``: rotations then boosts ``K_i = E_0i + E_i0``.
* ``poincare(1,d)``: the Lorentz block followed by translations ``P0..Pd``.
* ``galilei(d)``: ``(J, K_i, P_i, H)`` acting on ``(x, t, 1)``;
  ``[K_i, H] = P_i`` and ``[K_i, P_j] = 0``.
* ``euclidean(2)``: ``J, P1, P2`` with ``[J, P1] = P2``, ``[J, P2] = -P1``.
* ``heisenberg(n)``: ``p1..pn, q1..qn, z`` with ``[p_i, q_i] = z``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from . import linalg
from .lie import LieAlgebra, LieAlgebraError, abelian, validate

Matrix = list[list[Fraction]]


class UnknownGroup(LieAlgebraError):
    pass


class BadParams(LieAlgebraError):
    pass


@dataclass(frozen=True)
class Pi1Descriptor:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion orders must be at least 2")

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{t}" for t in self.torsion]
        return " x ".join(parts) if parts else "trivial"


TRIVIAL = Pi1Descriptor()
Z2 = Pi1Descriptor(torsion=(2,))


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    algebra: LieAlgebra
    simply_connected: bool
    pi1: Pi1Descriptor
    universal_cover_name: str | None = None
    notes: str = ""

    def __post_init__(self):
        if self.simply_connected != self.pi1.trivial:
            raise ValueError(f"{self.name}: simply_connected disagrees with pi1")


# --- matrix realizations ---------------------------------------------------

def _zeros(n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(n)]


def _unit(n: int, a: int, b: int, v=1) -> Matrix:
    m = _zeros(n)
    m[a][b] = Fraction(v)
    return m


def _add(*ms: Matrix) -> Matrix:
    n = len(ms[0])
    return [[sum((m[i][j] for m in ms), Fraction(0)) for j in range(n)] for i in range(n)]


def _mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = _zeros(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                aik = a[i][k]
                row = b[k]
                for j in range(n):
                    if row[j]:
                        out[i][j] += aik * row[j]
    return out


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    ab = _mul(a, b)
    ba = _mul(b, a)
    n = len(a)
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def algebra_from_matrices(name: str, names: Sequence[str], mats: Sequence[Matrix]) -> LieAlgebra:
    """Structure constants of the span of ``mats`` (must be closed under commutators)."""
    n = len(mats[0])
    flat_rows = []
    for i in range(n):
        for j in range(n):
            flat_rows.append({g: m[i][j] for g, m in enumerate(mats) if m[i][j]})
    if linalg.rank(flat_rows, len(mats)) != len(mats):
        raise ValueError("generator matrices are linearly dependent")
    c = {}
    for a, b in combinations(range(len(mats)), 2):
        comm = _commutator(mats[a], mats[b])
        rhs = [comm[i][j] for i in range(n) for j in range(n)]
        x = linalg.solve(flat_rows, len(mats), rhs)
        if x is None:
            raise ValueError(f"[{names[a]}, {names[b]}] leaves the span")
        if x:
            c[(a, b)] = x
    return validate(LieAlgebra.from_structure_constants(name, names, c))


def _rotations(d: int, n: int, offset: int = 0) -> tuple[list[str], list[Matrix]]:
    """Rotation generators of the coordinates offset..offset+d-1 inside n x n matrices."""
    if d == 3:
        # L_i with (L_i)_jk = -eps_ijk, so [L1, L2] = L3
        names, mats = [], []
        for i, (j, k) in enumerate(((1, 2), (2, 0), (0, 1))):
            m = _zeros(n)
            m[offset + j][offset + k] = Fraction(-1)
            m[offset + k][offset + j] = Fraction(1)
            names.append(f"J{i + 1}")
            mats.append(m)
        return names, mats
    names, mats = [], []
    for a, b in combinations(range(d), 2):
        m = _add(_unit(n, offset + a, offset + b), _unit(n, offset + b, offset + a, -1))
        names.append(f"J{a + 1}{b + 1}")
        mats.append(m)
    return names, mats


def _so(n: int, name: str) -> LieAlgebra:
    names, mats = _rotations(n, n)
    return algebra_from_matrices(name, names, mats)


def _lorentz_generators(d: int, size: int) -> tuple[list[str], list[Matrix]]:
    names, mats = _rotations(d, size, offset=1)
    for i in range(1, d + 1):
        names.append(f"K{i}")
        mats.append(_add(_unit(size, 0, i), _unit(size, i, 0)))
    return names, mats


def _lorentz(d: int) -> LieAlgebra:
    names, mats = _lorentz_generators(d, d + 1)
    return algebra_from_matrices(f"lorentz(1,{d})", names, mats)


def _poincare(d: int) -> LieAlgebra:
    size = d + 2
    names, mats = _lorentz_generators(d, size)
    for mu in range(d + 1):
        names.append(f"P{mu}")
        mats.append(_unit(size, mu, d + 1))
    return algebra_from_matrices(f"poincare(1,{d})", names, mats)


def _galilei(d: int) -> LieAlgebra:
    # acts on (x_1..x_d, t, 1)
    size = d + 2
    names, mats = _rotations(d, size) if d >= 2 else ([], [])
    for i in range(d):
        names.append(f"K{i + 1}")
        mats.append(_unit(size, i, d))
    for i in range(d):
        names.append(f"P{i + 1}")
        mats.append(_unit(size, i, d + 1))
    names.append("H")
    mats.append(_unit(size, d, d + 1))
    return algebra_from_matrices(f"galilei({d})", names, mats)


def _euclidean2() -> LieAlgebra:
    J = _add(_unit(3, 1, 0), _unit(3, 0, 1, -1))
    return algebra_from_matrices("euclidean(2)", ["J", "P1", "P2"], [J, _unit(3, 0, 2), _unit(3, 1, 2)])


def _heisenberg(n: int) -> LieAlgebra:
    size = n + 2
    names, mats = [], []
    for i in range(n):
        names.append(f"p{i + 1}")
        mats.append(_unit(size, 0, i + 1))
    for i in range(n):
        names.append(f"q{i + 1}")
        mats.append(_unit(size, i + 1, n + 1))
    names.append("z")
    mats.append(_unit(size, 0, n + 1))
    return algebra_from_matrices(f"heisenberg({n})", names, mats)


def _superscript(n: int) -> str:
    return str(n).translate(str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹"))


def _rotation_pi1(d: int) -> Pi1Descriptor:
    if d <= 1:
        return TRIVIAL
    if d == 2:
        return Pi1Descriptor(free_rank=1)
    return Z2


def _spin_name(d: int) -> str:
    return {2: "ℝ", 3: "SU(2)"}.get(d, f"Spin({d})")


# --- builders --------------------------------------------------------------

def _need(params: Sequence[int], arity: int, name: str) -> None:
    if len(params) != arity:
        raise BadParams(f"{name} takes {arity} parameter(s), got {len(params)}")


def _build_so(params):
    _need(params, 1, "so")
    (n,) = params
    if n < 3:
        raise BadParams("so(n) requires n >= 3")
    cover = {3: "SU(2)", 4: "SU(2) × SU(2)"}.get(n, f"Spin({n})")
    return GroupDescriptor(
        name=f"so({n})", algebra=_so(n, f"so({n})"), simply_connected=False, pi1=Z2,
        universal_cover_name=cover,
        notes="pi1(SO(n)) = Z_2 for n >= 3; universal cover Spin(n) (standard; rotation-group example)")


def _build_su2(params):
    _need(params, 0, "su2")
    return GroupDescriptor(
        name="su2", algebra=_so(3, "su2"), simply_connected=True, pi1=TRIVIAL,
        universal_cover_name="SU(2)",
        notes="SU(2) is diffeomorphic to the 3-sphere, hence simply connected; "
              "basis J_k = -(i/2) sigma_k shares the structure constants of so(3)")


def _lorentz_params(params, name):
    if len(params) == 0:
        return 3
    _need(params, 2, name)
    one, d = params
    if one != 1 or d < 2:
        raise BadParams(f"{name} takes (1, d) with d >= 2")
    return d


def _build_lorentz(params):
    d = _lorentz_params(params, "lorentz")
    cover = "SL(2,ℂ)" if d == 3 else f"Spin(1,{d})"
    return GroupDescriptor(
        name=f"lorentz(1,{d})", algebra=_lorentz(d), simply_connected=False, pi1=_rotation_pi1(d),
        universal_cover_name=cover,
        notes="SO+(1,d) retracts onto SO(d); pi1 = Z_2 for d >= 3 (double cover SL(2,C) for d = 3)")


def _build_poincare(params):
    d = _lorentz_params(params, "poincare")
    cover = f"ℝ{_superscript(d + 1)} ⋊ " + ("SL(2,ℂ)" if d == 3 else f"Spin(1,{d})")
    return GroupDescriptor(
        name=f"poincare(1,{d})", algebra=_poincare(d), simply_connected=False, pi1=_rotation_pi1(d),
        universal_cover_name=cover,
        notes="R^{d+1} ⋊ SO+(1,d); translations are contractible so pi1 is that of SO(d)")


def _build_galilei(params):
    _need(params, 1, "galilei")
    (d,) = params
    if d < 1:
        raise BadParams("galilei(d) requires d >= 1")
    pi1 = _rotation_pi1(d)
    cover = f"ℝ{_superscript(d + 1)} ⋊ (ℝ{_superscript(d)} ⋊ {_spin_name(d)})" if d >= 2 else None
    if d == 1:
        cover = "galilei(1)"
    return GroupDescriptor(
        name=f"galilei({d})", algebra=_galilei(d), simply_connected=pi1.trivial, pi1=pi1,
        universal_cover_name=cover,
        notes="R^{d+1} ⋊ (R^d ⋊ SO(d)); only the rotation factor carries topology")


def _build_euclidean(params):
    if params not in ((), (2,)):
        raise BadParams("euclidean is only provided in dimension 2")
    return GroupDescriptor(
        name="euclidean(2)", algebra=_euclidean2(), simply_connected=False, pi1=Pi1Descriptor(free_rank=1),
        universal_cover_name="ℝ² ⋊ ℝ",
        notes="E(2) = R^2 ⋊ SO(2); pi1 = pi1(SO(2)) = Z")


def _build_heisenberg(params):
    _need(params, 1, "heisenberg")
    (n,) = params
    if n < 1:
        raise BadParams("heisenberg(n) requires n >= 1")
    return GroupDescriptor(
        name=f"heisenberg({n})", algebra=_heisenberg(n), simply_connected=True, pi1=TRIVIAL,
        universal_cover_name=f"heisenberg({n})",
        notes="nilpotent, diffeomorphic to R^{2n+1} via the exponential map")


def _build_abelian(params):
    _need(params, 1, "abelian")
    (n,) = params
    if n < 1:
        raise BadParams("abelian(n) requires n >= 1")
    return GroupDescriptor(
        name=f"abelian({n})", algebra=abelian(n), simply_connected=True, pi1=TRIVIAL,
        universal_cover_name=f"ℝ{_superscript(n)}", notes="R^n is contractible")


def _build_torus(params):
    _need(params, 1, "torus")
    (n,) = params
    if n < 1:
        raise BadParams("torus(n) requires n >= 1")
    return GroupDescriptor(
        name=f"torus({n})", algebra=abelian(n, f"torus({n})"), simply_connected=False,
        pi1=Pi1Descriptor(free_rank=n), universal_cover_name=f"ℝ{_superscript(n)}",
        notes="T^n = R^n / Z^n; pi1 = Z^n. Cohomology representatives are algebra-level only")


_BUILDERS: dict[str, tuple[Callable, str, str]] = {
    "so": (_build_so, "1", "rotation group SO(n), n >= 3"),
    "su2": (_build_su2, "0", "SU(2), simply connected cover of SO(3)"),
    "lorentz": (_build_lorentz, "0 or 2", "proper orthochronous Lorentz group SO+(1,d), default (1,3)"),
    "poincare": (_build_poincare, "0 or 2", "proper orthochronous Poincaré group, default (1,3)"),
    "galilei": (_build_galilei, "1", "Galilei group in d space dimensions"),
    "euclidean": (_build_euclidean, "0 or 1", "Euclidean group E(2)"),
    "heisenberg": (_build_heisenberg, "1", "Heisenberg group of dimension 2n+1"),
    "abelian": (_build_abelian, "1", "vector group R^n"),
    "torus": (_build_torus, "1", "torus T^n"),
}

_ALIASES = {"so3": ("so", (3,)), "su(2)": ("su2", ()), "e2": ("euclidean", ())}


def build(name: str, params: Sequence[int] = ()) -> GroupDescriptor:
    key = name.strip().lower()
    params = tuple(int(p) for p in params)
    if key in _ALIASES and not params:
        key, params = _ALIASES[key]
    if key not in _BUILDERS:
        raise UnknownGroup(f"unknown group {name!r}; known: {', '.join(_BUILDERS)}")
    return _BUILDERS[key][0](params)


def parse_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"poincare(1,3)"`` into ``("poincare", (1, 3))``."""
    m = re.fullmatch(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\(([^)]*)\))?\s*", text)
    if not m:
        raise UnknownGroup(f"cannot parse group name {text!r}")
    args = m.group(2)
    try:
        params = tuple(int(a) for a in args.split(",")) if args and args.strip() else ()
    except ValueError:
        raise BadParams(f"non-integer parameter in {text!r}") from None
    return m.group(1), params


def build_from_text(text: str) -> GroupDescriptor:
    return build(*parse_name(text))


def list_groups() -> list[tuple[str, str, str]]:
    return [(name, arity, desc) for name, (_, arity, desc) in _BUILDERS.items()]


def candidates_of_dim(dim: int) -> list[GroupDescriptor]:
    """Registry instances whose algebra has the given dimension, in a fixed order."""
    out = []
    n = 3
    while n * (n - 1) // 2 <= dim:
        if n * (n - 1) // 2 == dim:
            out.append(build("so", (n,)))
        n += 1
    if dim == 3:
        out.append(build("su2"))
        out.append(build("euclidean"))
    if dim % 2 == 1 and dim >= 3:
        out.append(build("heisenberg", ((dim - 1) // 2,)))
    d = 2
    while d * (d + 1) // 2 <= dim:
        if d * (d + 1) // 2 == dim:
            out.append(build("lorentz", (1, d)))
        if d * (d + 1) // 2 + d + 1 == dim:
            out.append(build("poincare", (1, d)))
        d += 1
    d = 1
    while d * (d - 1) // 2 + 2 * d + 1 <= dim:
        if d * (d - 1) // 2 + 2 * d + 1 == dim:
            out.append(build("galilei", (d,)))
        d += 1
    out.append(build("abelian", (dim,)))
    out.append(build("torus", (dim,)))
    return out


def galilei_dim(d: int) -> int:
    return d * (d - 1) // 2 + 2 * d + 1
