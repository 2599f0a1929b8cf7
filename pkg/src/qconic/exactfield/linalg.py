"""Sparse exact linear algebra over the field tower.

Vectors are dicts column -> nonzero field element.  Everything is exact;
zero tests use the elements' own truthiness.
"""
from __future__ import annotations

from ..errors import DomainError


def axpy(vec: dict, c, row: dict) -> None:
    """vec += c * row, in place, dropping cancelled entries."""
    for k, v in row.items():
        t = vec.get(k)
        if t is None:
            vec[k] = c * v
        else:
            t = t + c * v
            if t:
                vec[k] = t
            else:
                del vec[k]


def sparse(dense) -> dict:
    return {k: v for k, v in enumerate(dense) if v}


def densify(vec: dict, n: int, zero) -> list:
    out = [zero] * n
    for k, v in vec.items():
        out[k] = v
    return out


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a subspace.

    ``priority`` lists columns from most to least preferred as pivots; by
    default higher column indices are preferred, so that reduction removes
    the largest coordinates first.
    """

    def __init__(self, ncols: int, priority=None):
        self.ncols = ncols
        if priority is None:
            priority = range(ncols - 1, -1, -1)
        self._pos = {c: k for k, c in enumerate(priority)}
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec: dict) -> dict:
        out = dict(vec)
        for p in [c for c in out if c in self.rows]:
            c = out.get(p)
            if c:
                axpy(out, -c, self.rows[p])
        return out

    def insert(self, vec: dict) -> bool:
        r = self.reduce(vec)
        if not r:
            return False
        pos = self._pos
        pivot = min(r, key=pos.__getitem__)
        inv = 1 / r[pivot]
        r = {k: v * inv for k, v in r.items()}
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                axpy(row, -c, r)
        self.rows[pivot] = r
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]


def echelon(rows, ncols: int, priority=None) -> EchelonBasis:
    eb = EchelonBasis(ncols, priority)
    for r in rows:
        eb.insert(r)
    return eb


def rank(rows, ncols: int) -> int:
    return echelon(rows, ncols).rank


def nullspace(rows, ncols: int, one) -> list:
    """Basis of {v : M v = 0} for M given by sparse rows; one sparse vector per free column."""
    eb = echelon(rows, ncols, priority=range(ncols))
    free = [c for c in range(ncols) if c not in eb.rows]
    basis = []
    for f in free:
        v = {f: one}
        for p, row in eb.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def left_nullspace(rows, ncols: int, one) -> list:
    """Basis of {w : w M = 0}, i.e. linear relations among the rows."""
    return nullspace(transpose(rows, ncols), len(rows), one)


def transpose(rows, ncols: int) -> list:
    cols = [dict() for _ in range(ncols)]
    for i, r in enumerate(rows):
        for j, v in r.items():
            cols[j][i] = v
    return cols


def span_intersection(a, b, ncols: int, one) -> list:
    """Basis of span(a) ∩ span(b), both given by sparse spanning vectors."""
    a = echelon(a, ncols).basis()
    b = echelon(b, ncols).basis()
    # x in both iff sum s_i a_i = sum t_j b_j
    stacked = list(a) + [{k: -v for k, v in r.items()} for r in b]
    rel = left_nullspace(stacked, ncols, one)
    out = EchelonBasis(ncols)
    for coeffs in rel:
        vec = {}
        for i, c in coeffs.items():
            if i < len(a):
                axpy(vec, c, a[i])
        out.insert(vec)
    return out.basis()


def det(matrix) -> object:
    """Determinant of a dense square matrix by fraction-carrying elimination."""
    n = len(matrix)
    if n == 0:
        raise DomainError("empty matrix")
    m = [list(r) for r in matrix]
    result = None
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return m[0][0] * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        result = p if result is None else result * p
        inv = 1 / p
        for r in range(col + 1, n):
            c = m[r][col]
            if c:
                f = c * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result if sign == 1 else -result


def solve_dense(matrix, rhs):
    """Solve matrix * x = rhs for square invertible dense matrix."""
    n = len(matrix)
    m = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise DomainError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def inverse_dense(matrix, one):
    n = len(matrix)
    zero = one * 0
    m = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise DomainError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
