"""Integer partitions: the index type for irreducibles and cycle types."""
from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction; anything else that is not
    weakly decreasing and nonnegative raises ``ValueError``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read the literal form ``"4,2,1"``; the empty string is the empty partition."""
        text = text.strip().strip("[]()")
        if not text:
            return cls()
        return cls(int(t) for t in text.split(","))

    def literal(self) -> str:
        return ",".join(map(str, self))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def rank(self) -> int:
        return sum(self) - len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part size j to m_j."""
        return dict(sorted(Counter(self).items()))

    def z(self) -> int:
        """Size of the centralizer of a permutation with this cycle type."""
        out = 1
        for j, m in Counter(self).items():
            out *= j**m * factorial(m)
        return out

    def class_size(self) -> int:
        return factorial(sum(self)) // self.z()

    def pad(self, m: int) -> Partition:
        """Add ``m`` cells to the first row."""
        if m < 0:
            raise ValueError("padding must be nonnegative")
        if not self:
            return Partition([m])
        return Partition((self[0] + m,) + tuple(self[1:]))

    def without_ones(self) -> Partition:
        return Partition(p for p in self if p > 1)

    def contains(self, other) -> bool:
        """Diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def is_horizontal_strip_over(self, inner) -> bool:
        """True iff ``self / inner`` is a horizontal strip (no two cells in a column)."""
        if not self.contains(inner):
            return False
        inner = list(inner) + [0] * (len(self) - len(inner))
        # interlacing: self[k+1] <= inner[k]
        return all(self[k + 1] <= inner[k] for k in range(len(self) - 1))


def conjugate(lam) -> Partition:
    return Partition(lam).conjugate()


def rank_of(lam) -> int:
    return Partition(lam).rank()


def z_of(lam) -> int:
    return Partition(lam).z()


def pad_first_row(lam, m: int) -> Partition:
    return Partition(lam).pad(m)


@cache
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int, min_part: int | None = None, exact_rank: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, optionally filtered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = _partitions(n, n)
    if min_part is not None:
        out = [p for p in out if not p or p[-1] >= min_part]
    if exact_rank is not None:
        out = [p for p in out if p.rank() == exact_rank]
    return list(out)


def derangement_types(i: int, m: int) -> list[Partition]:
    """Cycle types of size ``m`` with no fixed points and rank ``i``."""
    return partitions_of(m, min_part=2, exact_rank=i)


def hook_lengths(lam) -> list[list[int]]:
    lam = Partition(lam)
    conj = lam.conjugate()
    return [[lam[r] - c + conj[c] - r - 1 for c in range(lam[r])] for r in range(len(lam))]


def count_syt(lam) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    lam = Partition(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(lam.size) // prod


def hook_partition(first: int, n: int) -> Partition:
    """The partition ``(first, 1^(n - first))``."""
    return Partition([first] + [1] * (n - first))


def frobenius_notation(lam) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(a | b) with a_k = lam_k - k and b_k = lam^t_k - k over the diagonal cells."""
    lam = Partition(lam)
    conj = lam.conjugate()
    r = sum(1 for k, part in enumerate(lam, start=1) if part >= k)
    return (tuple(lam[k] - k - 1 for k in range(r)), tuple(conj[k] - k - 1 for k in range(r)))
