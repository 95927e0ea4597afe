"""Finite-dimensional real Lie algebras given by exact structure constants.

Structure constants are stored only for ``i < j``:
``brackets[(i, j)] = {k: c^k_ij}``.  The opposite half and the diagonal are
synthesized, so antisymmetry cannot be violated.  Raw algebras come out of
``LieAlgebra.from_brackets``; ``validate`` runs the Jacobi check and returns
the validated copy that the rest of the package requires.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import linalg

Vector = list[Fraction]


class LieAlgebraError(ValueError):
    pass


class DimensionMismatch(LieAlgebraError):
    pass


class InconsistentBrackets(LieAlgebraError):
    """Both halves of a bracket were given and they disagree."""


class JacobiError(LieAlgebraError):
    def __init__(self, report: "JacobiReport"):
        i, j, k, _ = report.violations[0]
        super().__init__(
            f"Jacobi identity fails on {len(report.violations)} triple(s), first at ({i}, {j}, {k})")
        self.report = report


class NotValidated(LieAlgebraError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    basis: tuple[str, ...]
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]]
    validated: bool = field(default=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_brackets(cls, name: str, basis: Sequence[str],
                      brackets: Iterable[tuple[int, int, Mapping[int, Fraction | int | str]]]
                      ) -> "LieAlgebra":
        """Build a raw algebra from ``(i, j, {k: coeff})`` entries.

        Either half (or both) of ``c^k_ij`` may be supplied; entries with
        ``i > j`` are negated into the stored half, and a pair supplied twice
        must agree.
        """
        from .rational import parse_rational

        n = len(basis)
        if n == 0:
            raise LieAlgebraError("dimension must be positive")
        if len(set(basis)) != n:
            raise LieAlgebraError("basis names must be distinct")
        stored: dict[tuple[int, int], dict[int, Fraction]] = {}
        given: set[tuple[int, int]] = set()
        for i, j, coeffs in brackets:
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(f"bracket index ({i}, {j}) out of range for dim {n}")
            vec = {}
            for k, v in coeffs.items():
                k = int(k)
                if not 0 <= k < n:
                    raise DimensionMismatch(f"coefficient index {k} out of range for dim {n}")
                q = parse_rational(v)
                if q:
                    vec[k] = q
            if i == j:
                if vec:
                    raise LieAlgebraError(f"[e{i}, e{i}] must vanish")
                continue
            if (i, j) in given:
                raise LieAlgebraError(f"bracket ({i}, {j}) given twice")
            given.add((i, j))
            key = (min(i, j), max(i, j))
            oriented = dict(sorted(vec.items())) if i < j else {k: -q for k, q in sorted(vec.items())}
            if (j, i) in given and stored[key] != oriented:
                raise InconsistentBrackets(f"brackets ({i}, {j}) and ({j}, {i}) disagree")
            stored[key] = oriented
        stored = {k: v for k, v in stored.items() if v}
        return cls(name=name, basis=tuple(basis), brackets=stored)

    @classmethod
    def from_structure_constants(cls, name: str, basis: Sequence[str],
                                 c: Mapping[tuple[int, int], Mapping[int, Fraction]]) -> "LieAlgebra":
        return cls.from_brackets(name, basis, ((i, j, v) for (i, j), v in c.items()))

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """``[e_i, e_j]`` as a sparse coefficient map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j).get(k, Fraction(0))

    def basis_vector(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def rename(self, name: str) -> "LieAlgebra":
        return replace(self, name=name)


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    violations: tuple[tuple[int, int, int, tuple[Fraction, ...]], ...] = ()


def _require_validated(L: LieAlgebra) -> None:
    if not L.validated:
        raise NotValidated(f"algebra {L.name!r} has not been validated")


def _coerce(L: LieAlgebra, x: Sequence) -> Vector:
    if len(x) != L.dim:
        raise DimensionMismatch(f"vector of length {len(x)} for algebra of dim {L.dim}")
    return [Fraction(v) for v in x]


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    x = _coerce(L, x)
    y = _coerce(L, y)
    out = [Fraction(0)] * L.dim
    for (i, j), vec in L.brackets.items():
        w = x[i] * y[j] - x[j] * y[i]
        if w:
            for k, c in vec.items():
                out[k] += w * c
    return out


def _bracket_sparse(L: LieAlgebra, a: Mapping[int, Fraction], j: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, ai in a.items():
        for k, c in L.bracket_basis(i, j).items():
            out[k] = out.get(k, 0) + ai * c
    return {k: v for k, v in out.items() if v}


def jacobi_check(L: LieAlgebra) -> JacobiReport:
    # integer structure constants D*c; the cyclic sum then carries a factor D^2
    den = 1
    for vec in L.brackets.values():
        for v in vec.values():
            den = lcm(den, v.denominator)
    ints = {p: {k: int(v * den) for k, v in vec.items()} for p, vec in L.brackets.items()}

    def br(a: int, b: int) -> dict[int, int]:
        if a < b:
            return ints.get((a, b), {})
        if a > b:
            return {k: -v for k, v in ints.get((b, a), {}).items()}
        return {}

    violations = []
    for i, j, k in combinations(range(L.dim), 3):
        res: dict[int, int] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, u in br(a, b).items():
                for q, w in br(m, c).items():
                    res[q] = res.get(q, 0) + u * w
        if any(res.values()):
            vec = tuple(Fraction(res.get(m, 0), den * den) for m in range(L.dim))
            violations.append((i, j, k, vec))
    return JacobiReport(ok=not violations, violations=tuple(violations))


def validate(L: LieAlgebra) -> LieAlgebra:
    if L.validated:
        return L
    report = jacobi_check(L)
    if not report.ok:
        raise JacobiError(report)
    return replace(L, validated=True)


def ad_matrix(L: LieAlgebra, i: int) -> list[list[Fraction]]:
    """Matrix of ``ad e_i``: column j holds the coordinates of ``[e_i, e_j]``."""
    n = L.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k, c in L.bracket_basis(i, j).items():
            m[k][j] = c
    return m


def killing_form(L: LieAlgebra) -> list[list[Fraction]]:
    _require_validated(L)
    n = L.dim
    ads = [ad_matrix(L, i) for i in range(n)]
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A, B = ads[i], ads[j]
            t = sum((A[k][l] * B[l][k] for k in range(n) for l in range(n) if A[k][l]), Fraction(0))
            K[i][j] = K[j][i] = t
    return K


def is_semisimple(L: LieAlgebra) -> bool:
    """Cartan criterion: the Killing form is nondegenerate."""
    return linalg.bareiss_det(killing_form(L)) != 0


def _ad_stack_rows(L: LieAlgebra) -> list[dict[int, Fraction]]:
    # row (i, k): sum_m z_m c^k_{m i}; unknowns are the coordinates of z
    rows = []
    n = L.dim
    for i in range(n):
        per_k: dict[int, dict[int, Fraction]] = {}
        for m in range(n):
            for k, c in L.bracket_basis(m, i).items():
                per_k.setdefault(k, {})[m] = c
        rows.extend(per_k.values())
    return rows


def ad_stack_rank(L: LieAlgebra) -> int:
    return linalg.rank(_ad_stack_rows(L), L.dim)


def center(L: LieAlgebra) -> list[Vector]:
    _require_validated(L)
    return [linalg.sparse_to_dense(v, L.dim) for v in linalg.nullspace(_ad_stack_rows(L), L.dim)]


def derived_subalgebra(L: LieAlgebra) -> list[Vector]:
    _require_validated(L)
    rows = [vec for vec in L.brackets.values()]
    return [linalg.sparse_to_dense(v, L.dim) for v in linalg.rref(rows, L.dim)]


def change_basis(L: LieAlgebra, P: Sequence[Sequence[Fraction | int]], name: str | None = None) -> LieAlgebra:
    """Structure constants in the basis ``f_a = sum_i P[i][a] e_i``.

    Returns a raw (unvalidated) algebra; Jacobi is preserved by any
    invertible ``P`` but is re-checked by ``validate`` as usual.
    """
    n = L.dim
    if len(P) != n or any(len(row) != n for row in P):
        raise DimensionMismatch("change of basis must be an n x n matrix")
    P = [[Fraction(v) for v in row] for row in P]
    Pinv = linalg.inverse(P)
    cols = [{i: P[i][a] for i in range(n) if P[i][a]} for a in range(n)]
    out = {}
    for a, b in combinations(range(n), 2):
        acc: dict[int, Fraction] = {}
        for i, pi in cols[a].items():
            for j, pj in cols[b].items():
                if i == j:
                    continue
                for k, c in L.bracket_basis(i, j).items():
                    acc[k] = acc.get(k, 0) + pi * pj * c
        new = {}
        for k, v in acc.items():
            if not v:
                continue
            for cidx in range(n):
                w = Pinv[cidx][k]
                if w:
                    new[cidx] = new.get(cidx, 0) + w * v
        new = {k: v for k, v in new.items() if v}
        if new:
            out[(a, b)] = new
    names = tuple(f"f{a + 1}" for a in range(n))
    return LieAlgebra.from_structure_constants(name or f"{L.name}'", names, out)


def direct_sum(A: LieAlgebra, B: LieAlgebra, name: str | None = None) -> LieAlgebra:
    off = A.dim
    basis = list(A.basis) + [b if b not in A.basis else f"{b}'" for b in B.basis]
    c = dict(A.brackets)
    for (i, j), vec in B.brackets.items():
        c[(i + off, j + off)] = {k + off: v for k, v in vec.items()}
    return LieAlgebra.from_structure_constants(name or f"{A.name}+{B.name}", basis, c)


def abelian(n: int, name: str | None = None) -> LieAlgebra:
    return validate(LieAlgebra(name or f"abelian({n})", tuple(f"e{i + 1}" for i in range(n)), {}))
