"""Exact integer linear algebra for the brute-force tiling oracle.

Matrices are lists of rows of Python ints.  Sparse systems are first shrunk
by eliminating unit pivots (which never changes integer solvability), then
the dense remainder goes through Hermite normal form.
"""

from __future__ import annotations

from dataclasses import dataclass


def _xgcd(a: int, b: int) -> tuple:
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(rows) -> list:
    """Row-style HNF: nonzero rows in echelon form, pivots positive, entries
    above each pivot reduced into ``[0, pivot)``.  Spans the same row lattice."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out = []
    col = 0
    while m and col < ncols:
        nz = [r for r in m if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in m if not r[col]]
        # gcd-combine all rows with a nonzero entry in this column
        piv = nz[0]
        others = []
        for r in nz[1:]:
            g, s, t = _xgcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [s * x + t * y for x, y in zip(piv, r)]
            new_r = [-b * x + a * y for x, y in zip(piv, r)]
            piv = new_piv
            if any(new_r):
                others.append(new_r)
        if piv[col] < 0:
            piv = [-x for x in piv]
        for prev in out:
            q = prev[col] // piv[col]
            if q:
                for j in range(col, ncols):
                    prev[j] -= q * piv[j]
        out.append(piv)
        m = rest + others
        col += 1
    return out


def in_row_lattice(hnf: list, target) -> bool:
    """Whether ``target`` is an integer combination of the HNF rows."""
    b = list(target)
    for row in hnf:
        j = next(i for i, x in enumerate(row) if x)
        if b[j] % row[j]:
            return False
        q = b[j] // row[j]
        if q:
            b = [x - q * y for x, y in zip(b, row)]
    return not any(b)


def smith_invariants(rows) -> list:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # smallest nonzero entry as pivot
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for r in m:
            r[t], r[j] = r[j], r[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = m[i][t] // p
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = m[t][j] // p
                if q:
                    for r in m:
                        r[j] -= q * r[t]
                if m[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if m[i][j] % p), None)
                if bad is None:
                    break
                m[t] = [a + b for a, b in zip(m[t], m[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(m[i][t]), i, t) for i in range(t, nrows) if m[i][t]]
            cands += [(abs(m[t][j]), t, j) for j in range(t, ncols) if m[t][j]]
            _, i, j = min(cands)
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for r in m:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


@dataclass
class SparseSystem:
    """``A w = b`` with ``A`` stored by rows (dict col -> value) and by columns."""

    rows: dict
    cols: dict
    rhs: dict

    @classmethod
    def from_columns(cls, columns, rhs: dict) -> "SparseSystem":
        rows: dict = {r: {} for r in rhs}
        cols: dict = {}
        for j, col in enumerate(columns):
            cols[j] = set()
            for r, v in col.items():
                if v:
                    rows.setdefault(r, {})[j] = v
                    cols[j].add(r)
        return cls(rows, cols, {r: rhs.get(r, 0) for r in rows})

    def eliminate_units(self) -> int:
        """Pivot on +-1 entries (Markowitz order) until none is left.

        Each pivot removes one row and one column: the row's equation can
        always be met by the pivot column's variable.
        """
        count = 0
        while True:
            best = None
            for r, row in self.rows.items():
                for j, v in row.items():
                    if v in (1, -1):
                        cost = (len(row) - 1) * (len(self.cols[j]) - 1)
                        if best is None or cost < best[0]:
                            best = (cost, r, j)
                            if cost == 0:
                                break
                if best and best[0] == 0:
                    break
            if best is None:
                return count
            _, r, j = best
            self._pivot(r, j)
            count += 1

    def _pivot(self, r, j):
        prow = self.rows.pop(r)
        pv = prow[j]
        pb = self.rhs.pop(r)
        for c in prow:
            self.cols[c].discard(r)
        for r2 in list(self.cols[j]):
            row2 = self.rows[r2]
            f = row2[j] * pv  # pv is +-1 so this is row2[j] / pv
            for c, v in prow.items():
                nv = row2.get(c, 0) - f * v
                if nv:
                    if c not in row2:
                        self.cols[c].add(r2)
                    row2[c] = nv
                elif c in row2:
                    del row2[c]
                    self.cols[c].discard(r2)
            self.rhs[r2] -= f * pb
        del self.cols[j]

    def residual(self) -> tuple:
        """Dense ``(matrix, rhs, row_keys)`` of what is left; empty rows kept."""
        keys = sorted(self.rows, key=repr)
        cols = sorted(c for c in self.cols if self.cols[c])
        index = {c: i for i, c in enumerate(cols)}
        mat = []
        for r in keys:
            line = [0] * len(cols)
            for c, v in self.rows[r].items():
                line[index[c]] = v
            mat.append(line)
        return mat, [self.rhs[r] for r in keys], keys


def solvable(columns, rhs: dict) -> tuple:
    """Integer solvability of ``sum_j w_j columns[j] = rhs``.

    Returns ``(solvable, residual_rows, residual_cols, invariants)``; the
    invariants are the torsion part of the residual cokernel.
    """
    system = SparseSystem.from_columns(columns, rhs)
    system.eliminate_units()
    mat, b, _ = system.residual()
    ncols = len(mat[0]) if mat else 0
    if ncols == 0:
        ok = not any(b)
        return ok, len(mat), 0, []
    transposed = [list(col) for col in zip(*mat)]
    hnf = hermite_normal_form(transposed)
    ok = in_row_lattice(hnf, b)
    return ok, len(mat), ncols, hnf_torsion(hnf)


def hnf_torsion(hnf: list) -> list:
    return [d for d in smith_invariants(hnf) if d != 1]
