"""Exact integer linear algebra: Smith normal form, kernels, ranks.

Everything runs on Python's arbitrary-precision integers, so overflow is
impossible by construction.  ``snf`` carries full unimodular transforms and
self-verifies; ``elementary_divisors`` is a transform-free sparse path for
the large boundary matrices produced by subdivided quotients, cross-checked
against ``snf`` in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass
class IntMatrix:
    rows: int
    cols: int
    entries: list  # row-major, len == rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count must equal rows * cols")

    @staticmethod
    def from_rows(rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return IntMatrix(r, c, [int(x) for row in rows for x in row])

    @staticmethod
    def identity(n):
        return IntMatrix(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @staticmethod
    def zero(r, c):
        return IntMatrix(r, c, [0] * (r * c))

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [self.entries[i * c : (i + 1) * c] for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(
            self.cols, self.rows, [self.at(i, j) for j in range(self.cols) for i in range(self.rows)]
        )

    def mult(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum(ai[t] * b[t][j] for t in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def mult_vec(self, v):
        return [sum(self.at(i, j) * v[j] for j in range(self.cols)) for i in range(self.rows)]


@dataclass
class SnfResult:
    """U @ A @ V == D with U, V unimodular and d_1 | d_2 | ... >= 0."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self):
        return [self.d.at(i, i) for i in range(min(self.d.rows, self.d.cols))]

    def rank(self):
        return sum(1 for x in self.diagonal() if x != 0)

    def nonunit_divisors(self):
        return [x for x in self.diagonal() if x > 1]


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form with transforms.

    Pivot rule: smallest nonzero absolute value, ties by position.  The
    factorization U*A*V = D is re-multiplied and checked before returning.
    """
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, q):
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def addmul_col(dst, src, q):
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # smallest nonzero |entry| in the trailing block, ties by position
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x != 0 and (piv is None or abs(x) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if A[t][t] < 0:
            negate_row(t)
        clean = False
        while not clean:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    addmul_row(i, t, -q)
                    if A[i][t]:  # remainder smaller than pivot: promote it
                        swap_rows(t, i)
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    addmul_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        clean = False
        t += 1
    # enforce the divisibility chain d_i | d_{i+1}
    r = t
    for i in range(r):
        for j in range(i + 1, r):
            di, dj = A[i][i], A[j][j]
            if dj % di == 0:
                continue
            # fold column j into column i, then re-clear the 2x2 block
            addmul_col(i, j, 1)
            g, x, y = _xgcd(di, dj)
            # row_i <- x*row_i + y*row_j ; row_j <- -(dj/g)*row_i' + ...
            Ai, Aj = A[i][:], A[j][:]
            Ui, Uj = U[i][:], U[j][:]
            A[i] = [x * p + y * q for p, q in zip(Ai, Aj)]
            U[i] = [x * p + y * q for p, q in zip(Ui, Uj)]
            A[j] = [(di // g) * q - (dj // g) * p for p, q in zip(Ai, Aj)]
            U[j] = [(di // g) * q - (dj // g) * p for p, q in zip(Ui, Uj)]
            # clear A[j][i] (= dj * something) and A[i][j]
            q = A[j][i] // A[i][i]
            addmul_row(j, i, -q)
            q = A[i][j] // A[i][i]
            addmul_col(j, i, -q)
            if A[i][i] < 0:
                negate_row(i)
            if A[j][j] < 0:
                negate_row(j)
    res = SnfResult(
        IntMatrix(m, m, [x for row in U for x in row]),
        IntMatrix(m, n, [x for row in A for x in row]),
        IntMatrix(n, n, [x for row in V for x in row]),
    )
    _verify_snf(a, res)
    return res


def _xgcd(a, b):
    g, x, y = math.gcd(a, b), 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    assert old_r == g
    return g, old_x, old_y


def _verify_snf(a: IntMatrix, res: SnfResult):
    prod = res.u.mult(a).mult(res.v)
    if prod.entries != res.d.entries:
        raise AssertionError("SNF verification failed: U*A*V != D")
    diag = res.diagonal()
    for i in range(len(diag) - 1):
        if diag[i + 1] and diag[i] == 0:
            raise AssertionError("zero before nonzero on the diagonal")
        if diag[i] and diag[i + 1] % diag[i] != 0:
            raise AssertionError("divisibility chain broken")
    for i in range(res.d.rows):
        for j in range(res.d.cols):
            if i != j and res.d.at(i, j) != 0:
                raise AssertionError("D not diagonal")


def kernel_basis(a: IntMatrix):
    """Basis of the integer kernel: columns of V over zero diagonal entries."""
    res = snf(a)
    r = res.rank()
    basis = []
    for j in range(r, a.cols):
        col = [res.v.at(i, j) for i in range(a.cols)]
        if any(a.mult_vec(col)):
            raise AssertionError("kernel vector check failed")
        basis.append(col)
    return basis


def rank_fraction_free(a: IntMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination (independent of SNF)."""
    A = [row[:] for row in a.to_rows()]
    m, n = a.rows, a.cols
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        for i in range(row + 1, m):
            for j in range(col + 1, n):
                A[i][j] = (A[row][col] * A[i][j] - A[i][col] * A[row][j]) // prev
            A[i][col] = 0
        prev = A[row][col]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def elementary_divisors(cols) -> list:
    """Nonzero elementary divisors of a sparse integer matrix.

    ``cols`` maps column index -> {row index: entry}.  Strategy: repeatedly
    eliminate on a ±1 pivot chosen to minimize fill (Markowitz count); when
    no ±1 pivot remains, finish the small residue with dense ``snf``.  Only
    the divisor list is produced -- no transforms -- which is what the
    homology ranks and torsion need.
    """
    rows = {}
    cols = {j: dict(c) for j, c in cols.items() if c}
    for j, col in cols.items():
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    ones = 0
    while True:
        best = None
        for i, r in rows.items():
            li = len(r) - 1
            for j, v in r.items():
                if v == 1 or v == -1:
                    score = li * (len(cols[j]) - 1)
                    if best is None or score < best[0]:
                        best = (score, i, j)
                        if score == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        piv = rows[pi][pj]
        prow = rows.pop(pi)
        pcol = cols.pop(pj)
        del prow[pj]
        for i, v in pcol.items():
            if i == pi:
                continue
            f = -v * piv  # piv is ±1, so this clears the entry exactly
            r = rows[i]
            del r[pj]
            for j2, w in prow.items():
                nv = r.get(j2, 0) + f * w
                if nv:
                    r[j2] = nv
                    cols[j2][i] = nv
                else:
                    r.pop(j2, None)
                    cols[j2].pop(i, None)
            if not r:
                del rows[i]
        for j2 in prow:
            cols[j2].pop(pi, None)
            if not cols[j2]:
                del cols[j2]
        ones += 1
    divisors = [1] * ones
    rem_rows = sorted(rows)
    rem_cols = sorted(cols)
    if rem_rows and rem_cols:
        dense = IntMatrix.from_rows(
            [[rows[i].get(j, 0) for j in rem_cols] for i in rem_rows]
        )
        divisors.extend(d for d in snf(dense).diagonal() if d != 0)
    return divisors


def boundary_divisors(mat: IntMatrix) -> list:
    """``elementary_divisors`` for a dense IntMatrix input."""
    cols = {}
    for j in range(mat.cols):
        col = {i: mat.at(i, j) for i in range(mat.rows) if mat.at(i, j)}
        if col:
            cols[j] = col
    return elementary_divisors(cols)
