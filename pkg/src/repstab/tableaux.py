"""Standard Young tableaux, their ascents and major index, and two special classes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from repstab.partitions import Partition, partitions_of
from repstab.symfunc import SymFn


@dataclass(frozen=True, order=True)
class StandardTableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = [len(r) for r in rows]
        Partition(shape)  # raises on a non-partition shape
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError("columns must increase downwards")

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        """Read the text form ``"1 2 4 / 3"``; an empty string is the empty tableau."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(tuple(int(x) for x in part.split()) for part in text.split("/")))

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self) -> dict[int, int]:
        return {x: k for k, r in enumerate(self.rows) for x in r}

    def restrict(self, k: int) -> StandardTableau:
        """Delete every entry larger than k."""
        return StandardTableau(tuple(tuple(x for x in r if x <= k) for r in self.rows))


def _syt(shape: tuple) -> list[tuple]:
    # place n in each removable corner, recursively
    n = sum(shape)
    if n == 0:
        return [()]
    out = []
    for k in range(len(shape)):
        if k + 1 < len(shape) and shape[k + 1] == shape[k]:
            continue
        smaller = list(shape)
        smaller[k] -= 1
        for rows in _syt(tuple(x for x in smaller if x)):
            rows = [list(r) for r in rows] + [[]] * (len(shape) - len(rows))
            rows = [list(r) for r in rows]
            rows[k].append(n)
            out.append(tuple(tuple(r) for r in rows))
    return out


def enumerate_syt(lam) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape lam, sorted by their row tuples."""
    return _enumerate_syt(Partition(lam))


@cache
def _enumerate_syt(lam: Partition) -> tuple[StandardTableau, ...]:
    return tuple(sorted(StandardTableau(rows) for rows in _syt(tuple(lam))))


@cache
def all_syt(n: int) -> tuple[StandardTableau, ...]:
    return tuple(q for lam in partitions_of(n) for q in enumerate_syt(lam))


def ascents(q: StandardTableau) -> set[int]:
    """i is an ascent when i+1 sits in a weakly higher row than i; n always is one."""
    n = q.size
    row = q.row_of()
    out = {i for i in range(1, n) if row[i + 1] <= row[i]}
    out.add(n)
    return out


def maj(q: StandardTableau) -> int:
    """Sum of i < n with i in a strictly higher row than i+1."""
    row = q.row_of()
    return sum(i for i in range(1, q.size) if row[i] < row[i + 1])


def is_desarrangement(q: StandardTableau) -> bool:
    return min(ascents(q)) % 2 == 0


_SMALL_WHITNEY = {(), ((1, 2),), ((1, 2), (3,))}
_T1 = ((1, 2), (3,), (4,))
_T2 = ((1, 2, 4), (3,))
_T3 = ((1, 2), (3, 4))
_T4 = ((1, 2, 3), (4,))


def is_whitney_generating(q: StandardTableau) -> bool:
    if q.size <= 3:
        return q.rows in _SMALL_WHITNEY
    head = q.restrict(4).rows
    if head in (_T1, _T2):
        return True
    if head not in (_T3, _T4):
        return False
    first = min(a for a in ascents(q) if a >= 4)
    return first % 2 == 1 if head == _T3 else first % 2 == 0


CLASSES = {"desarrangement": is_desarrangement, "whitney": is_whitney_generating}


def tableaux_in_class(n: int, cls: str) -> list[StandardTableau]:
    test = CLASSES[cls]
    return [q for q in all_syt(n) if test(q)]


def tableau_sum(n: int, cls: str) -> SymFn:
    """Sum of s_shape(Q) over the tableaux of size n in the chosen class."""
    table = {}
    for q in tableaux_in_class(n, cls):
        table[q.shape] = table.get(q.shape, 0) + 1
    return SymFn.from_basis("s", table)
