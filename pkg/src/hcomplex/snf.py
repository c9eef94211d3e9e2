"""Sparse exact elimination over Z and F_p, and Smith normal form.

Matrices are dicts of rows, each row a dict col -> non-zero int.  The
elimination clears one pivot at a time, chosen greedily from the shortest
rows with a fill-minimizing column (Markowitz-style).  Over Z only pivots of
absolute value 1 are used, so all arithmetic stays integral; rows that run
out of unit entries are set aside and the survivors form a small residual
that is finished by a dense reduction.  Over F_p any non-zero pivot works and
a dense mod-p sweep takes over once the active core is small.

Clearing a pivot's column by row operations leaves that column with a single
non-zero, so dropping the pivot row and column afterwards is a unimodular
reduction: the invariant factors of the original matrix are those of the
residual plus one unit per pivot.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from math import gcd

Rows = dict[int, dict[int, int]]


def rows_from_dense(dense: list[list[int]]) -> Rows:
    return {
        i: {j: v for j, v in enumerate(row) if v} for i, row in enumerate(dense)
    }


def transpose_rows(rows: Rows) -> Rows:
    out: Rows = {}
    for i, row in rows.items():
        for j, v in row.items():
            out.setdefault(j, {})[i] = v
    return out


class _Eliminator:
    def __init__(self, rows: Rows, p: int | None, scale_rows: bool, dense_cutoff: int):
        self.p = p
        self.scale_rows = scale_rows
        self.dense_cutoff = dense_cutoff
        self.rows: Rows = {}
        self.cols: dict[int, set[int]] = {}
        for i, row in rows.items():
            if p is not None:
                row = {j: v % p for j, v in row.items() if v % p}
            else:
                row = {j: v for j, v in row.items() if v}
            if row:
                self.rows[i] = dict(row)
                for j in row:
                    self.cols.setdefault(j, set()).add(i)
        self.heap = [(len(row), i) for i, row in self.rows.items()]
        heapify(self.heap)
        self.rank = 0

    def _pick_col(self, row: dict[int, int]) -> int | None:
        best = None
        for j, v in row.items():
            if self.p is None and v not in (1, -1):
                continue
            key = (len(self.cols[j]), j)
            if best is None or key < best:
                best = key
        return None if best is None else best[1]

    def _pivot(self, i: int, j: int) -> None:
        rows, cols, p = self.rows, self.cols, self.p
        prow = rows.pop(i)
        for jj in prow:
            cols[jj].discard(i)
        v = prow[j]
        inv = v if p is None else pow(v, -1, p)  # over Z, v is +-1 so 1/v = v
        for r in list(cols[j]):
            row = rows[r]
            m = row[j] * inv if p is None else (row[j] * inv) % p
            for jj, vv in prow.items():
                cur = row.get(jj, 0) - m * vv
                if p is not None:
                    cur %= p
                if cur:
                    if jj not in row:
                        cols[jj].add(r)
                    row[jj] = cur
                elif jj in row:
                    del row[jj]
                    cols[jj].discard(r)
            if not row:
                del rows[r]
                continue
            if self.scale_rows and p is None:
                g = 0
                for vv in row.values():
                    g = gcd(g, vv)
                    if g == 1:
                        break
                if g > 1:
                    for jj in row:
                        row[jj] //= g
            heappush(self.heap, (len(row), r))
        del cols[j]
        self.rank += 1

    def run(self) -> Rows:
        """Eliminate until no eligible pivot remains; returns the residual."""
        deferred: list[int] = []
        while self.heap:
            if (
                self.p is not None
                and self.dense_cutoff
                and 0 < len(self.rows) <= self.dense_cutoff
                and len(self.cols) <= self.dense_cutoff
            ):
                self.rank += _dense_rank_mod_p(self.rows, self.p)
                self.rows = {}
                return {}
            length, i = heappop(self.heap)
            row = self.rows.get(i)
            if row is None or len(row) != length:
                continue  # stale entry
            j = self._pick_col(row)
            if j is None:
                deferred.append(i)
                continue
            self._pivot(i, j)
            for d in deferred:
                if d in self.rows:
                    heappush(self.heap, (len(self.rows[d]), d))
            deferred.clear()
        return self.rows


def _dense_rank_mod_p(rows: Rows, p: int) -> int:
    import numpy as np

    col_ids = sorted({j for row in rows.values() for j in row})
    cmap = {j: k for k, j in enumerate(col_ids)}
    a = np.zeros((len(rows), len(col_ids)), dtype=np.int64)
    for k, row in enumerate(rows.values()):
        for j, v in row.items():
            a[k, cmap[j]] = v % p
    r = 0
    for c in range(a.shape[1]):
        if r == a.shape[0]:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            a[r + 1 + hit] = (a[r + 1 + hit] - np.outer(below[hit], a[r])) % p
        r += 1
    return r


def _dense_snf(rows: Rows) -> list[int]:
    """Invariant factors of a small integer matrix, by direct reduction."""
    if not rows:
        return []
    col_ids = sorted({j for row in rows.values() for j in row})
    cmap = {j: k for k, j in enumerate(col_ids)}
    m = [[0] * len(col_ids) for _ in rows]
    for k, row in enumerate(rows.values()):
        for j, v in row.items():
            m[k][cmap[j]] = v
    return _snf_kernel(m)


def _snf_kernel(m: list[list[int]]) -> list[int]:
    rows, cols = len(m), len(m[0])
    invariants: list[int] = []
    t = 0
    while True:
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = m[i][j]
                if v and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        while True:
            piv = m[t][t]
            redo = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // piv
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t]:  # remainder strictly smaller than the pivot
                        m[t], m[i] = m[i], m[t]
                        redo = True
                        break
            if redo:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // piv
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        redo = True
                        break
            if not redo:
                break
        piv = m[t][t]
        offender = None
        for i in range(t + 1, rows):
            if any(v % piv for v in m[i][t + 1:]):
                offender = i
                break
        if offender is not None:
            m[t] = [a + b for a, b in zip(m[t], m[offender])]
            continue  # pivot search restarts; gcd strictly divides down
        invariants.append(abs(piv))
        t += 1
        if t == rows or t == cols:
            break
    return invariants


def smith_normal_form(rows: Rows) -> tuple[int, ...]:
    """Non-zero invariant factors d_1 | d_2 | .. of an integer matrix.

    >>> smith_normal_form(rows_from_dense([[1, 0], [0, 1]]))
    (1, 1)
    >>> smith_normal_form(rows_from_dense([[2, 4], [0, 6]]))
    (2, 6)
    >>> smith_normal_form(rows_from_dense([[0, 0], [0, 0]]))
    ()
    """
    engine = _Eliminator(rows, p=None, scale_rows=False, dense_cutoff=0)
    residual = engine.run()
    return (1,) * engine.rank + tuple(_dense_snf(residual))


def rank_q(rows: Rows) -> int:
    """Rank over the rationals, exactly (gcd row scaling is allowed here)."""
    engine = _Eliminator(rows, p=None, scale_rows=True, dense_cutoff=0)
    residual = engine.run()
    return engine.rank + sum(1 for d in _dense_snf(residual) if d)


def rank_mod_p(rows: Rows, p: int, dense_cutoff: int = 600) -> int:
    """Rank over the prime field F_p.

    >>> rank_mod_p(rows_from_dense([[2, 4], [0, 6]]), 2)
    0
    >>> rank_mod_p(rows_from_dense([[2, 4], [0, 6]]), 3)  # 6 = 0 mod 3
    1
    >>> rank_mod_p(rows_from_dense([[2, 4], [0, 6]]), 5)
    2
    """
    engine = _Eliminator(rows, p=p, scale_rows=False, dense_cutoff=dense_cutoff)
    leftover = engine.run()
    if leftover:
        raise AssertionError("mod-p elimination left uneliminated rows")
    return engine.rank
