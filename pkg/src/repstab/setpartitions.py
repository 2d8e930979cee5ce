"""The lattice of set partitions of {1..n}: chain characters alpha_S and beta_S."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations

from repstab.characters import ClassFunction, decompose_sym, frobenius_ch
from repstab.liewhitney import whitney_homology
from repstab.partitions import Partition, partitions_of
from repstab.symfunc import SymFn


@dataclass
class LatticeConfig:
    max_chains: int = 20_000_000  # budget on refinement tests per character
    max_n: int = 9


LATTICE = LatticeConfig()


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SetPartition:
    """Stored as a restricted growth string: rgs[x] is the block label of x+1."""

    rgs: tuple

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> SetPartition:
        blocks = [sorted(b) for b in blocks if b]
        if n is None:
            n = sum(len(b) for b in blocks)
        label = [None] * n
        for b in sorted(blocks):
            for x in b:
                if not 1 <= x <= n or label[x - 1] is not None:
                    raise ValueError("blocks must partition {1..n}")
                label[x - 1] = min(b)
        if None in label:
            raise ValueError("blocks must cover {1..n}")
        return cls(canonical(label))

    @property
    def n(self) -> int:
        return len(self.rgs)

    def blocks(self) -> list[tuple[int, ...]]:
        out = {}
        for x, a in enumerate(self.rgs, start=1):
            out.setdefault(a, []).append(x)
        return [tuple(b) for b in out.values()]

    @property
    def rank(self) -> int:
        return self.n - len(set(self.rgs))

    def type(self) -> Partition:
        return Partition(sorted((len(b) for b in self.blocks()), reverse=True))

    def __str__(self):
        return "|".join("".join(map(str, b)) if self.n < 10 else ",".join(map(str, b))
                        for b in self.blocks())


def canonical(labels) -> tuple:
    seen = {}
    return tuple(seen.setdefault(a, len(seen)) for a in labels)


def refines(a, b) -> bool:
    """True iff every block of a lies inside a block of b."""
    ra = a.rgs if isinstance(a, SetPartition) else a
    rb = b.rgs if isinstance(b, SetPartition) else b
    image = {}
    for x, y in zip(ra, rb):
        if image.setdefault(x, y) != y:
            return False
    return True


def bottom(n: int) -> SetPartition:
    return SetPartition(tuple(range(n)))


def top(n: int) -> SetPartition:
    return SetPartition((0,) * n)


@cache
def _rgs_with_blocks(n: int, k: int) -> tuple[tuple, ...]:
    out = []

    def rec(prefix, used):
        left = n - len(prefix)
        if used + left < k:
            return
        if not left:
            if used == k:
                out.append(tuple(prefix))
            return
        for a in range(min(used + 1, k)):
            prefix.append(a)
            rec(prefix, max(used, a + 1))
            prefix.pop()

    if n == 0:
        return ((),) if k == 0 else ()
    rec([0], 1)
    return tuple(out)


def set_partitions(n: int, rank: int | None = None) -> list[SetPartition]:
    if rank is not None:
        return [SetPartition(r) for r in _rgs_with_blocks(n, n - rank)]
    return [SetPartition(r) for k in range(n + 1) for r in _rgs_with_blocks(n, k)]


@cache
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def chain_count(n: int, S) -> int:
    """Chains with one element at each rank of S: S(n, n-r_1) prod S(n-r_j, n-r_(j+1))."""
    ranks = sorted(S)
    if not ranks:
        return 1
    out = stirling2(n, n - ranks[0])
    for a, b in zip(ranks, ranks[1:]):
        out *= stirling2(n - a, n - b)
    return out


def work_estimate(n: int, S) -> int:
    ranks = sorted(S)
    sizes = [stirling2(n, n - r) for r in ranks]
    return sum(sizes) + sum(a * b for a, b in zip(sizes, sizes[1:]))


def representative(mu) -> tuple[int, ...]:
    """A permutation of {0..n-1} with cycle type mu, cycles on consecutive integers."""
    w, start = [], 0
    for part in Partition(mu):
        w += [start + (j + 1) % part for j in range(part)]
        start += part
    return tuple(w)


def is_fixed(rgs: tuple, w: tuple) -> bool:
    """w fixes the partition when it maps every block onto a block."""
    moved = [None] * len(rgs)
    for x, a in enumerate(rgs):
        moved[w[x]] = a
    return canonical(moved) == rgs


def _check_ranks(n: int, S) -> list[int]:
    if n > LATTICE.max_n:
        raise BudgetExceeded(f"n={n} exceeds the lattice cap {LATTICE.max_n}")
    ranks = sorted(set(S))
    if ranks and (ranks[0] < 1 or ranks[-1] > n - 2):
        raise ValueError(f"rank set must lie in 1..{n - 2}")
    return ranks


def fixed_chains(n: int, S, w: tuple) -> int:
    ranks = _check_ranks(n, S)
    if not ranks:
        return 1
    levels = [[r for r in _rgs_with_blocks(n, n - k) if is_fixed(r, w)] for k in ranks]
    counts = {r: 1 for r in levels[0]}
    for upper in levels[1:]:
        counts = {u: c for u in upper if (c := sum(v for s, v in counts.items() if refines(s, u)))}
    return sum(counts.values())


@cache
def _alpha(n: int, ranks: tuple) -> ClassFunction:
    if work_estimate(n, ranks) > LATTICE.max_chains:
        raise BudgetExceeded(f"alpha_S for n={n}, S={list(ranks)} exceeds the chain budget")
    return ClassFunction(n, {mu: fixed_chains(n, ranks, representative(mu)) for mu in partitions_of(n)})


def alpha_S(n: int, S) -> ClassFunction:
    """Permutation character of S_n on the chains of the lattice through the ranks in S."""
    return _alpha(n, tuple(_check_ranks(n, S)))


@cache
def _beta(n: int, ranks: tuple) -> SymFn:
    out = SymFn.zero()
    for k in range(len(ranks) + 1):
        for T in combinations(ranks, k):
            out = out + frobenius_ch(_alpha(n, T)) * (-1) ** (len(ranks) - k)
    return out


def beta_S_sym(n: int, S) -> SymFn:
    """ch of beta_S; checked to be a genuine character."""
    f = _beta(n, tuple(_check_ranks(n, S)))
    if any(c < 0 for c in decompose_sym(f).values()):
        raise ArithmeticError("β not effective")
    return f


def beta_S(n: int, S) -> ClassFunction:
    f = beta_S_sym(n, S)
    return ClassFunction(n, {lam: c * lam.z() for lam, c in f.items()})


def verify_whitney_beta(n: int, i: int) -> bool:
    if not 1 <= i <= n - 2:
        raise ValueError("need 1 <= i <= n - 2")
    lhs = whitney_homology(i, n)
    rhs = beta_S_sym(n, range(1, i + 1)) + beta_S_sym(n, range(1, i))
    return lhs == rhs


def beta_onset_experiment(S, n_max: int = 9) -> dict:
    """Observed sharp onset of beta_S(Pi_n), compared against 4 max(S) and 4i - (|S| - 1)."""
    from repstab.stability import pad

    ranks = sorted(set(S))
    if not ranks:
        raise ValueError("rank set must be nonempty")
    if n_max > LATTICE.max_n:
        raise BudgetExceeded(f"n_max {n_max} exceeds the lattice cap {LATTICE.max_n}")
    i = ranks[-1]
    start = i + 2
    seq = {n: beta_S_sym(n, ranks) for n in range(start, n_max + 1)}
    ok = {n: seq[n + 1] == pad(seq[n], 1) for n in range(start, n_max)}
    onset = None
    if ok and ok[n_max - 1]:
        onset = n_max - 1
        while onset > start and ok[onset - 1]:
            onset -= 1
    conjecture = 4 * i - (len(ranks) - 1)
    if onset is None:
        status = "inconclusive"  # no stable step inside the window
    else:
        status = "consistent" if onset == conjecture else "inconsistent"
    return {
        "S": ranks,
        "n_max": n_max,
        "observed_onset": onset,
        "bound_4i": 4 * i,
        "within_4i": onset is not None and onset <= 4 * i,
        "conjecture": conjecture,
        "status": status,
        "certified": onset is not None,
        "decompositions": {n: decompose_sym(f) for n, f in seq.items()},
    }
