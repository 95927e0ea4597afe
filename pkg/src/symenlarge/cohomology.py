"""Chevalley-Eilenberg complex with trivial real coefficients, degrees 1 to 3.

Sign conventions (used for every representative printed by this package)::

    (d1 lam)(x, y)    = -lam([x, y])
    (d2 om)(x, y, z)  = -om([x, y], z) + om([x, z], y) - om([y, z], x)

Cochains are indexed in lexicographic order of their index tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .lie import DimensionMismatch, LieAlgebra, LieAlgebraError, _require_validated


class NotACocycle(LieAlgebraError):
    pass


@dataclass(frozen=True)
class OneCochain:
    values: tuple[Fraction, ...]

    @classmethod
    def from_values(cls, values: Iterable) -> "OneCochain":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def __call__(self, vec: Sequence) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(vec, self.values)), Fraction(0))


@dataclass(frozen=True)
class TwoCochain:
    """Antisymmetric bilinear form, stored as its ``i < j`` entries."""

    dim: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int], Fraction | int] | Iterable) -> "TwoCochain":
        """Accepts either orientation; ``(j, i)`` entries are negated."""
        items = entries.items() if isinstance(entries, Mapping) else entries
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in items:
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"cochain index ({i}, {j}) out of range for dim {dim}")
            v = Fraction(v)
            if i == j:
                if v:
                    raise LieAlgebraError("a 2-cochain vanishes on the diagonal")
                continue
            key, v = ((i, j), v) if i < j else ((j, i), -v)
            out[key] = out.get(key, 0) + v
        return cls(dim, {k: v for k, v in sorted(out.items()) if v})

    @classmethod
    def zero(cls, dim: int) -> "TwoCochain":
        return cls(dim, {})

    def value(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.entries.get((i, j), Fraction(0))
        return -self.entries.get((j, i), Fraction(0))

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        total = Fraction(0)
        for (i, j), v in self.entries.items():
            total += v * (Fraction(x[i]) * Fraction(y[j]) - Fraction(x[j]) * Fraction(y[i]))
        return total

    def scaled(self, a) -> "TwoCochain":
        a = Fraction(a)
        return TwoCochain(self.dim, {k: a * v for k, v in self.entries.items() if a * v})

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        _same_dim(self.dim, other.dim)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return TwoCochain(self.dim, {k: v for k, v in sorted(out.items()) if v})

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return self + other.scaled(-1)

    def is_zero(self) -> bool:
        return not self.entries

    def to_vector(self) -> dict[int, Fraction]:
        index = pair_index(self.dim)
        return {index[k]: v for k, v in self.entries.items()}

    @classmethod
    def from_vector(cls, dim: int, vec: Mapping[int, Fraction]) -> "TwoCochain":
        pairs = pair_list(dim)
        return cls(dim, {pairs[c]: Fraction(v) for c, v in sorted(vec.items()) if v})


@dataclass(frozen=True)
class ThreeCochain:
    dim: int
    entries: Mapping[tuple[int, int, int], Fraction] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.entries


@dataclass(frozen=True)
class CohomologyBasis:
    dim_Z2: int
    dim_B2: int
    dim_H2: int
    representatives: tuple[TwoCochain, ...]


def _same_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatch(f"cochain of dim {a} used with algebra of dim {b}")


@lru_cache(maxsize=64)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=64)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: c for c, p in enumerate(pair_list(n))}


def _add_pair(row: dict[int, Fraction], index, a: int, b: int, coeff: Fraction) -> None:
    # accumulates coeff * om(e_a, e_b) into a row over the i<j coordinates
    if a == b or not coeff:
        return
    if a > b:
        a, b, coeff = b, a, -coeff
    c = index[(a, b)]
    v = row.get(c, 0) + coeff
    if v:
        row[c] = v
    else:
        row.pop(c, None)


def d1_columns(L: LieAlgebra) -> list[dict[int, Fraction]]:
    """Column k of the d1 matrix: d1 applied to the dual basis element e_k*."""
    index = pair_index(L.dim)
    cols: list[dict[int, Fraction]] = [{} for _ in range(L.dim)]
    for (i, j), vec in L.brackets.items():
        c = index[(i, j)]
        for k, coeff in vec.items():
            cols[k][c] = -coeff
    return cols


def d1_rows(L: LieAlgebra) -> list[dict[int, Fraction]]:
    """Rows of d1 indexed by pairs, unknowns indexed by the dual basis."""
    return [{k: -coeff for k, coeff in L.brackets.get(p, {}).items()} for p in pair_list(L.dim)]


def d2_rows(L: LieAlgebra) -> list[dict[int, Fraction]]:
    """Rows of the d2 matrix, one per triple x<y<z, sparse over pair coordinates."""
    n = L.dim
    index = pair_index(n)
    rows = []
    br = L.bracket_basis
    for x, y, z in combinations(range(n), 3):
        row: dict[int, Fraction] = {}
        for k, c in br(x, y).items():
            _add_pair(row, index, k, z, -c)
        for k, c in br(x, z).items():
            _add_pair(row, index, k, y, c)
        for k, c in br(y, z).items():
            _add_pair(row, index, k, x, -c)
        rows.append(row)
    return rows


def d1(L: LieAlgebra, lam: OneCochain | Sequence) -> TwoCochain:
    if not isinstance(lam, OneCochain):
        lam = OneCochain.from_values(lam)
    _same_dim(lam.dim, L.dim)
    entries = {}
    for (i, j), vec in L.brackets.items():
        v = -sum((c * lam.values[k] for k, c in vec.items()), Fraction(0))
        if v:
            entries[(i, j)] = v
    return TwoCochain(L.dim, dict(sorted(entries.items())))


def d2(L: LieAlgebra, om: TwoCochain) -> ThreeCochain:
    _same_dim(om.dim, L.dim)
    vec = om.to_vector()
    out = {}
    for t, row in zip(combinations(range(L.dim), 3), d2_rows(L)):
        v = sum((c * vec[k] for k, c in row.items() if k in vec), Fraction(0))
        if v:
            out[t] = v
    return ThreeCochain(L.dim, out)


def is_cocycle(L: LieAlgebra, om: TwoCochain) -> bool:
    return d2(L, om).is_zero()


def _require_cocycle(L: LieAlgebra, om: TwoCochain) -> None:
    if not is_cocycle(L, om):
        raise NotACocycle("cochain is not closed under d2")


def is_coboundary(L: LieAlgebra, om: TwoCochain) -> OneCochain | None:
    """A primitive ``lam`` with ``d1(lam) == om``, or None if ``om`` is not exact."""
    _require_validated(L)
    _same_dim(om.dim, L.dim)
    _require_cocycle(L, om)
    rhs = [om.entries.get(p, Fraction(0)) for p in pair_list(L.dim)]
    x = linalg.solve(d1_rows(L), L.dim, rhs)
    if x is None:
        return None
    return OneCochain(tuple(linalg.sparse_to_dense(x, L.dim)))


def are_cohomologous(L: LieAlgebra, om1: TwoCochain, om2: TwoCochain) -> OneCochain | None:
    """``lam`` with ``om2 - om1 == d1(lam)``, or None."""
    _require_validated(L)
    _require_cocycle(L, om1)
    _require_cocycle(L, om2)
    return is_coboundary(L, om2 - om1)


def h2(L: LieAlgebra) -> CohomologyBasis:
    """Exact second cohomology with canonical representatives.

    The representatives are the reduced row echelon basis of the cocycles
    vanishing on the pivot coordinates of the (reduced) coboundary space.
    That subspace is a complement of B2 inside Z2 and depends only on the two
    subspaces, not on the elimination order.
    """
    _require_validated(L)
    n = L.dim
    npairs = n * (n - 1) // 2
    z2 = linalg.nullspace(d2_rows(L), npairs)
    b2 = linalg.Echelon(npairs)
    b2.extend(d1_columns(L))
    reduced = linalg.Echelon(npairs)
    for z in z2:
        r = b2.reduce(z)
        if r:
            reduced.add(r)
    reps = tuple(TwoCochain.from_vector(n, v) for v in reduced.rref())
    dim_h2 = len(z2) - b2.rank
    assert len(reps) == dim_h2
    return CohomologyBasis(dim_Z2=len(z2), dim_B2=b2.rank, dim_H2=dim_h2, representatives=reps)


def cocycle_basis(L: LieAlgebra) -> list[TwoCochain]:
    """Basis of Z2 (closed 2-cochains)."""
    n = L.dim
    return [TwoCochain.from_vector(n, v) for v in linalg.nullspace(d2_rows(L), n * (n - 1) // 2)]
