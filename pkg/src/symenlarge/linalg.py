"""Exact linear algebra over the rationals.

Three elimination routes live here:

* ``rank`` / ``rref`` / ``nullspace`` / ``solve``: FLINT's exact rational
  row reduction (fraction-free over the integers internally).  The cochain
  complex goes through these; after a dense change of basis its matrices
  have thousands of rows with large entries.
* ``Echelon``: incremental sparse fraction-free row reduction in pure
  Python.  Rows are kept as primitive integer vectors (content divided out
  after every step).  Used where rows arrive one at a time and for canonical
  remainders modulo a span.
* ``bareiss_det`` / ``bareiss_rank``: classic dense Bareiss elimination with
  exact division by the previous pivot, for small dense matrices (Killing
  forms).

The three are cross-checked against each other in the tests.

Sparse vectors are ``dict[int, Fraction]`` with no stored zeros.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

import flint

SparseVec = dict[int, Fraction]


class NotInvertible(ValueError):
    pass


def _to_primitive(row: Mapping[int, Fraction | int]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row (sign not normalized)."""
    den = 1
    for v in row.values():
        if v:
            den = lcm(den, Fraction(v).denominator)
    out: dict[int, int] = {}
    g = 0
    for k, v in row.items():
        if v:
            iv = int(Fraction(v) * den)
            out[k] = iv
            g = gcd(g, iv)
    if g > 1:
        for k in out:
            out[k] //= g
    return out


def _primitive_inplace(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in row:
            row[k] //= g


def _eliminate(row: dict[int, int], piv: dict[int, int], col: int) -> dict[int, int]:
    a = row[col]
    p = piv[col]
    g = gcd(a, p)
    a //= g
    p //= g
    out = {k: p * v for k, v in row.items()} if p != 1 else dict(row)
    for k, v in piv.items():
        nv = out.get(k, 0) - a * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    _primitive_inplace(out)
    return out


class Echelon:
    """Incrementally built row echelon form of a set of rational rows.

    ``add`` reports whether the row enlarged the span; ``reduce`` gives the
    canonical remainder of a vector modulo the span once the form has been
    reduced with ``rref``.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict[int, int]] = {}
        self._reduced = True

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def _reduce_int(self, row: dict[int, int]) -> dict[int, int]:
        rows = self._rows
        last = -1
        while row:
            cands = [k for k in row if k > last and k in rows]
            if not cands:
                break
            last = min(cands)
            row = _eliminate(row, rows[last], last)
        return row

    def add(self, row: Mapping[int, Fraction | int]) -> bool:
        r = self._reduce_int(_to_primitive(row))
        if not r:
            return False
        lead = min(r)
        if r[lead] < 0:
            r = {k: -v for k, v in r.items()}
        self._rows[lead] = r
        self._reduced = False
        return True

    def extend(self, rows: Iterable[Mapping[int, Fraction | int]]) -> None:
        for r in rows:
            self.add(r)

    def _back_substitute(self) -> None:
        if self._reduced:
            return
        rows = self._rows
        order = sorted(rows, reverse=True)
        for idx, c in enumerate(order):
            r = rows[c]
            for c2 in sorted(order[:idx]):
                if c2 in r:
                    r = _eliminate(r, rows[c2], c2)
            if r[c] < 0:
                r = {k: -v for k, v in r.items()}
            rows[c] = r
        self._reduced = True

    def rref(self) -> list[SparseVec]:
        """Reduced row echelon basis, leading coefficient 1, sorted by pivot."""
        self._back_substitute()
        out = []
        for c in sorted(self._rows):
            r = self._rows[c]
            p = r[c]
            out.append({k: Fraction(v, p) for k, v in sorted(r.items())})
        return out

    def reduce(self, row: Mapping[int, Fraction | int]) -> SparseVec:
        """Remainder of ``row`` with every pivot coordinate eliminated."""
        self._back_substitute()
        out = {k: Fraction(v) for k, v in row.items() if v}
        for c in sorted(self._rows):
            a = out.get(c)
            if not a:
                continue
            r = self._rows[c]
            f = a / r[c]
            for k, v in r.items():
                nv = out.get(k, 0) - f * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def contains(self, row: Mapping[int, Fraction | int]) -> bool:
        return not self._reduce_int(_to_primitive(row))


def _fmpq(v) -> flint.fmpq:
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def rref(rows: Iterable[Mapping[int, Fraction | int]], ncols: int) -> list[SparseVec]:
    """Reduced row echelon basis of the row span, sorted by pivot."""
    rows = [r for r in rows if any(r.values())]
    if not rows or ncols == 0:
        return []
    A = flint.fmpq_mat(len(rows), ncols)
    for i, r in enumerate(rows):
        for k, v in r.items():
            if v:
                A[i, k] = _fmpq(v)
    R, rk = A.rref()
    out = []
    for i in range(rk):
        row = {}
        for j in range(ncols):
            e = R[i, j]
            if e != 0:
                row[j] = Fraction(int(e.p), int(e.q))
        out.append(row)
    return out


def rank(rows: Iterable[Mapping[int, Fraction | int]], ncols: int) -> int:
    return len(rref(rows, ncols))


def nullspace(rows: Iterable[Mapping[int, Fraction | int]], ncols: int) -> list[SparseVec]:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    basis = rref(rows, ncols)
    pivots = {min(r): r for r in basis}
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v: SparseVec = {free: Fraction(1)}
        for c, r in pivots.items():
            a = r.get(free)
            if a:
                v[c] = -a
        out.append(dict(sorted(v.items())))
    return out


def solve(rows: Sequence[Mapping[int, Fraction | int]], ncols: int,
          rhs: Sequence[Fraction | int]) -> SparseVec | None:
    """One solution of A x = b (free variables set to zero), or None."""
    if len(rows) != len(rhs):
        raise ValueError("row count and right-hand side length differ")
    aug = []
    for r, b in zip(rows, rhs):
        a = dict(r)
        if b:
            a[ncols] = b
        aug.append(a)
    x: SparseVec = {}
    for r in rref(aug, ncols + 1):
        lead = min(r)
        if lead == ncols:
            return None
        b = r.get(ncols)
        if b:
            x[lead] = b
    return x


def dense_to_sparse(matrix: Sequence[Sequence[Fraction | int]]) -> list[SparseVec]:
    return [{j: Fraction(v) for j, v in enumerate(row) if v} for row in matrix]


def sparse_to_dense(vec: Mapping[int, Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for k, v in vec.items():
        out[k] = Fraction(v)
    return out


def inverse(matrix: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise ValueError("matrix is not square")
        r = {j: Fraction(v) for j, v in enumerate(row) if v}
        r[n + i] = Fraction(1)
        aug.append(r)
    red = rref(aug, 2 * n)
    if len(red) < n or any(min(r) >= n for r in red):
        raise NotInvertible("matrix is singular")
    return [[r.get(n + j, Fraction(0)) for j in range(n)] for r in red]


def _integer_matrix(matrix: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[int]], int]:
    """Clear denominators row-wise; returns the integer matrix and the product of scales."""
    out = []
    scale = 1
    for row in matrix:
        den = 1
        for v in row:
            den = lcm(den, Fraction(v).denominator)
        out.append([int(Fraction(v) * den) for v in row])
        scale *= den
    return out, scale


def _bareiss(m: list[list[int]]) -> tuple[int, int, int]:
    """In-place fraction-free elimination.  Returns (rank, last pivot, sign)."""
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, prev, sign


def bareiss_det(matrix: Sequence[Sequence[Fraction | int]]) -> Fraction:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    m, scale = _integer_matrix(matrix)
    r, last, sign = _bareiss(m)
    if r < n:
        return Fraction(0)
    return Fraction(sign * last, scale)


def bareiss_rank(matrix: Sequence[Sequence[Fraction | int]]) -> int:
    if not matrix:
        return 0
    m, _ = _integer_matrix(matrix)
    return _bareiss(m)[0]


def inertia(matrix: Sequence[Sequence[Fraction | int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Exact symmetric congruence diagonalization (Sylvester's law of inertia).
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    diag: list[Fraction] = []
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            # all remaining diagonal entries vanish: use x -> x + y on an off-diagonal pair
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                diag.extend(Fraction(0) for _ in active)
                break
            i, j = pair
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        p = a[k][k]
        rest = [i for i in active if i != k]
        for i in rest:
            f = a[i][k] / p
            if f:
                for j in rest:
                    a[i][j] -= f * a[k][j]
        diag.append(p)
        active = rest
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, n - pos - neg
