"""Exact sparse linear algebra over Q by fraction-free integer row reduction."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


def _integral(row: dict) -> dict[object, int]:
    """Scale a rational sparse row to a primitive integer row with positive leading entry."""
    row = {k: Fraction(v) for k, v in row.items() if v}
    if not row:
        return {}
    den = reduce(lcm, (v.denominator for v in row.values()), 1)
    ints = {k: int(v * den) for k, v in row.items()}
    return _primitive(ints)


def _primitive(row: dict) -> dict:
    g = reduce(gcd, row.values(), 0)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Incremental row echelon form keyed by sparse column labels.

    Columns are compared through ``order`` (a dict label -> position);
    unknown labels are appended in first-seen order.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}
        self.order: dict = {}

    def _pos(self, label) -> int:
        if label not in self.order:
            self.order[label] = len(self.order)
        return self.order[label]

    def reduce(self, row: dict) -> dict:
        row = _integral(row)
        row = {self._pos(k): v for k, v in row.items()}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            a, b = piv[col], row[col]
            out = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _primitive(out) if out else {}
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True when it was independent of the rows so far."""
        red = self.reduce(row)
        if not red:
            return False
        self.pivots[min(red)] = red
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def solve_in_span(basis: list[dict], target: dict) -> list[Fraction] | None:
    """Coefficients c with sum c_j basis[j] = target, or None when target is outside the span.

    The basis vectors must be linearly independent.
    """
    # eliminate on augmented rows: vector part, then an identity tag
    labels = sorted({k for v in basis for k in v} | set(target), key=repr)
    m = len(basis)
    rows = []
    for j, v in enumerate(basis):
        row = [Fraction(v.get(k, 0)) for k in labels] + [Fraction(int(i == j)) for i in range(m)]
        rows.append(row)
    width = len(labels)
    pivot_of = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_of.append(c)
        r += 1
    if r < m:
        raise ValueError("basis vectors are linearly dependent")
    vec = [Fraction(target.get(k, 0)) for k in labels]
    coeffs = [Fraction(0)] * m
    for i, c in enumerate(pivot_of):
        f = vec[c]
        if f:
            vec = [x - f * y for x, y in zip(vec, rows[i][:width])]
            for j in range(m):
                coeffs[j] += f * rows[i][width + j]
    if any(vec):
        return None
    return coeffs


PRIME = (1 << 61) - 1


class ModEchelon:
    """Row echelon form over GF(p).

    The rank it reports never exceeds the rank over Q, so it certifies
    vanishing of anything bounded above by (size - rank).
    """

    def __init__(self, p: int = PRIME):
        self.p = p
        self.pivots: dict[int, dict] = {}
        self.order: dict = {}

    def add(self, row: dict) -> bool:
        p = self.p
        cur = {}
        for k, v in row.items():
            if k not in self.order:
                self.order[k] = len(self.order)
            v = Fraction(v)
            v = v.numerator * pow(v.denominator, -1, p) % p
            if v:
                cur[self.order[k]] = v
        while cur:
            col = min(cur)
            piv = self.pivots.get(col)
            if piv is None:
                inv = pow(cur[col], -1, p)
                self.pivots[col] = {k: v * inv % p for k, v in cur.items()}
                return True
            f = cur[col]
            for k, v in piv.items():
                nv = (cur.get(k, 0) - f * v) % p
                if nv:
                    cur[k] = nv
                else:
                    cur.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

