"""Exact symmetric functions stored in the power-sum basis.

Every ``SymFn`` is a finite Q-linear combination of power sums ``p_lambda``,
possibly mixing degrees.  Schur, complete and elementary expansions are
derived views.  All arithmetic uses ``fractions.Fraction``.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from repstab.partitions import Partition, partitions_of

BASES = ("p", "s", "h", "e")


@dataclass
class EngineConfig:
    max_degree: int = 16
    cache: object = None  # optional on-disk plethysm cache, see repstab.cache


CONFIG = EngineConfig()


class DegreeCapError(RuntimeError):
    """An operation would produce a homogeneous degree above ``CONFIG.max_degree``."""


def _check_degree(d: int) -> None:
    if d > CONFIG.max_degree:
        raise DegreeCapError(f"degree {d} exceeds the cap {CONFIG.max_degree}")


def _P(parts) -> Partition:
    # trusted fast path: parts already weakly decreasing and positive
    return tuple.__new__(Partition, parts)


def _merge(a: tuple, b: tuple) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return _P(sorted(a + b, reverse=True))


def as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


# -- character table ---------------------------------------------------------

def character_value(lam, mu) -> int:
    """chi^lam evaluated on cycle type mu, by Murnaghan-Nakayama on beta-sets."""
    return _chi(Partition(lam), Partition(mu))


@cache
def _chi(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], _P(mu[1:])
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    present = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in present:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = sorted((present - {b}) | {c}, reverse=True)
        smaller = Partition(new[i] - (n - 1 - i) for i in range(n))
        total += (-1) ** height * _chi(smaller, rest)
    return total


_table_lock = threading.Lock()
_tables: dict[int, dict] = {}


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """The full table ``{(lam, mu): chi^lam(mu)}`` for partitions of n, memoized per n."""
    table = _tables.get(n)
    if table is None:
        parts = partitions_of(n)
        table = {(lam, mu): _chi(lam, mu) for lam in parts for mu in parts}
        with _table_lock:
            _tables.setdefault(n, table)
    return table


# -- the symmetric function type ---------------------------------------------

class SymFn:
    """A symmetric function with exact rational coefficients.

    Stored as a dict from partitions to nonzero ``Fraction`` coefficients
    in the power-sum basis.  Treat instances as immutable.
    """

    __slots__ = ("_p", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            c = as_fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self._p = {k: v for k, v in clean.items() if v}
        self._hash = None
        if self._p:
            _check_degree(max(k.size for k in self._p))

    @classmethod
    def _raw(cls, terms: dict) -> SymFn:
        out = object.__new__(cls)
        out._p = {k: v for k, v in terms.items() if v}
        out._hash = None
        return out

    # constructors
    @classmethod
    def zero(cls) -> SymFn:
        return cls._raw({})

    @classmethod
    def one(cls) -> SymFn:
        return cls._raw({Partition(): Fraction(1)})

    @classmethod
    def scalar(cls, c) -> SymFn:
        return cls._raw({Partition(): as_fraction(c)})

    @classmethod
    def p(cls, lam) -> SymFn:
        if isinstance(lam, int):
            lam = [lam] if lam else []
        lam = Partition(lam)
        _check_degree(lam.size)
        return cls._raw({lam: Fraction(1)})

    @classmethod
    def from_basis(cls, basis: str, table: dict) -> SymFn:
        """Build from a coefficient table expressed in ``basis``."""
        if basis == "p":
            return cls(table)
        make = {"s": schur, "h": h_lambda, "e": e_lambda}[basis]
        out = {}
        for lam, c in table.items():
            c = as_fraction(c)
            if not c:
                continue
            for mu, a in make(Partition(lam))._p.items():
                out[mu] = out.get(mu, 0) + c * a
        return cls._raw(out)

    # basic protocol
    def items(self):
        return self._p.items()

    def __bool__(self):
        return bool(self._p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFn.scalar(other)
        if not isinstance(other, SymFn):
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._p.items()))
        return self._hash

    def key(self) -> tuple:
        return tuple(sorted(self._p.items()))

    def __repr__(self):
        if not self._p:
            return "SymFn(0)"
        try:
            table = self.coefficients("s")
            basis = "s"
        except DegreeCapError:
            table, basis = self._p, "p"
        return "SymFn(" + format_terms(table, basis) + ")"

    # grading
    def degrees(self) -> list[int]:
        return sorted({lam.size for lam in self._p})

    def max_degree(self) -> int:
        return max((lam.size for lam in self._p), default=-1)

    def homogeneous(self, n: int) -> SymFn:
        return SymFn._raw({k: v for k, v in self._p.items() if k.size == n})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # ring operations
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFn.scalar(other)
        if not isinstance(other, SymFn):
            return NotImplemented
        out = dict(self._p)
        for k, v in other._p.items():
            out[k] = out.get(k, 0) + v
        return SymFn._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFn._raw({k: -v for k, v in self._p.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFn.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SymFn._raw({k: v * c for k, v in self._p.items()}) if c else SymFn.zero()
        if not isinstance(other, SymFn):
            return NotImplemented
        if not self._p or not other._p:
            return SymFn.zero()
        _check_degree(self.max_degree() + other.max_degree())
        out = {}
        for a, x in self._p.items():
            for b, y in other._p.items():
                k = _merge(a, b)
                out[k] = out.get(k, 0) + x * y
        return SymFn._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, k: int):
        out = SymFn.one()
        for _ in range(k):
            out = out * self
        return out

    def __getitem__(self, g: SymFn) -> SymFn:
        """Plethysm ``self[g]``."""
        return plethysm(self, g)

    # views
    def coefficients(self, basis: str = "s") -> dict[Partition, Fraction]:
        """Coefficient table of this function in ``basis`` (one of p, s, h, e)."""
        if basis == "p":
            return dict(self._p)
        if basis == "s":
            return _to_schur(self)
        if basis == "h":
            return _peel(self, h_lambda)
        if basis == "e":
            return _peel(omega(self), h_lambda)
        raise ValueError(f"unknown basis {basis!r}")

    def schur(self) -> dict[Partition, int]:
        """Integer Schur expansion; raises if a coefficient is not integral."""
        out = {}
        for lam, c in _to_schur(self).items():
            if c.denominator != 1:
                raise ValueError(f"non-integral Schur coefficient {c} on {list(lam)}")
            out[lam] = int(c)
        return out

    def is_schur_positive(self) -> bool:
        return all(c > 0 for c in _to_schur(self).values())

    def to_json(self, basis: str = "s") -> dict:
        return {"basis": basis, "terms": terms_json(self.coefficients(basis))}

    @classmethod
    def from_json(cls, data: dict) -> SymFn:
        table = {Partition(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls.from_basis(data["basis"], table)


def ordered(table: dict) -> list:
    # degree ascending, then reverse lexicographic
    return sorted(table.items(), key=lambda kv: (kv[0].size, _revlex(kv[0])))


def _revlex(lam):
    # larger tuples first; pad so that prefixes sort after longer extensions
    return tuple(-x for x in lam) + (1,)


def fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def terms_json(table: dict) -> list[dict]:
    return [{"n": lam.size, "partition": list(lam), "coeff": fraction_str(Fraction(c))}
            for lam, c in ordered(table)]


def format_terms(table: dict, basis: str = "s") -> str:
    if not table:
        return "0"
    out = []
    for lam, c in ordered(table):
        c = Fraction(c)
        sym = f"{basis}[{','.join(map(str, lam))}]"
        mag = abs(c)
        body = sym if mag == 1 else f"{fraction_str(mag)}*{sym}"
        out.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# -- named functions ---------------------------------------------------------

# caps are checked in the public wrappers so memoized values obey them too

def schur(lam) -> SymFn:
    lam = Partition(lam)
    _check_degree(lam.size)
    return _schur(lam)


@cache
def _schur(lam: Partition) -> SymFn:
    return SymFn._raw({mu: Fraction(_chi(lam, mu), mu.z()) for mu in partitions_of(lam.size)})


def h(n: int) -> SymFn:
    if n < 0:
        return SymFn.zero()
    _check_degree(n)
    return _h(n)


@cache
def _h(n: int) -> SymFn:
    return SymFn._raw({mu: Fraction(1, mu.z()) for mu in partitions_of(n)})


def e(n: int) -> SymFn:
    if n < 0:
        return SymFn.zero()
    _check_degree(n)
    return _e(n)


@cache
def _e(n: int) -> SymFn:
    return SymFn._raw({mu: Fraction((-1) ** (n - len(mu)), mu.z()) for mu in partitions_of(n)})


def p(lam) -> SymFn:
    return SymFn.p(lam)


def h_lambda(lam) -> SymFn:
    lam = Partition(lam)
    _check_degree(lam.size)
    return _h_lambda(lam)


@cache
def _h_lambda(lam: Partition) -> SymFn:
    out = SymFn.one()
    for part in lam:
        out = out * h(part)
    return out


def e_lambda(lam) -> SymFn:
    lam = Partition(lam)
    _check_degree(lam.size)
    return _e_lambda(lam)


@cache
def _e_lambda(lam: Partition) -> SymFn:
    out = SymFn.one()
    for part in lam:
        out = out * e(part)
    return out


# -- conversions -------------------------------------------------------------

def _to_schur(f: SymFn) -> dict[Partition, Fraction]:
    out = {}
    for n in f.degrees():
        comp = {mu: c for mu, c in f._p.items() if mu.size == n}
        for lam in partitions_of(n):
            val = sum((c * _chi(lam, mu) for mu, c in comp.items()), Fraction(0))
            if val:
                out[lam] = val
    return out


def _peel(f: SymFn, basis_fn) -> dict[Partition, Fraction]:
    """Expand f in a basis {b_mu} with b_mu = s_mu + (lex-larger Schur terms)."""
    out = {}
    residual = f
    for n in f.degrees():
        for mu in reversed(partitions_of(n)):  # lex increasing
            c = _to_schur(residual.homogeneous(n)).get(mu, Fraction(0))
            if c:
                out[mu] = c
                residual = residual - basis_fn(mu) * c
    if residual:
        raise ArithmeticError("basis peeling left a nonzero residual")
    return out


def convert(f: SymFn, target_basis: str) -> dict[Partition, Fraction]:
    return f.coefficients(target_basis)


def from_schur(table: dict) -> SymFn:
    return SymFn.from_basis("s", table)


# -- operators ---------------------------------------------------------------

def multiply(f: SymFn, g: SymFn) -> SymFn:
    return f * g


def omega(f: SymFn) -> SymFn:
    return SymFn._raw({lam: (-c if (lam.size - len(lam)) % 2 else c) for lam, c in f._p.items()})


def hall_inner(f: SymFn, g: SymFn) -> Fraction:
    if len(f._p) > len(g._p):
        f, g = g, f
    total = Fraction(0)
    for lam, c in f._p.items():
        d = g._p.get(lam)
        if d:
            total += c * d * lam.z()
    return total


def d_dp1(f: SymFn) -> SymFn:
    """Formal derivative in p_1; restriction from S_n to S_(n-1)."""
    out = {}
    for lam, c in f._p.items():
        m1 = lam.count(1)
        if m1:
            k = _P(lam[:-1])
            out[k] = out.get(k, 0) + c * m1
    return SymFn._raw(out)


def mul_p1(f: SymFn) -> SymFn:
    """Multiplication by p_1; induction from S_n to S_(n+1)."""
    _check_degree(f.max_degree() + 1)
    return SymFn._raw({_P(lam + (1,)): c for lam, c in f._p.items()})


def _horizontal_strips(mu: Partition, r: int):
    mu = tuple(mu)
    rows = len(mu) + 1
    padded = mu + (0,)

    def rec(k, remaining, acc):
        if k == rows:
            if remaining == 0:
                yield Partition(acc)
            return
        upper = remaining + padded[k] if k == 0 else min(padded[k - 1], padded[k] + remaining)
        for v in range(padded[k], upper + 1):
            yield from rec(k + 1, remaining - (v - padded[k]), acc + [v])

    yield from rec(0, r, [])


def pieri_h(mu, r: int) -> SymFn:
    """``s_mu * h_r`` as the sum of ``s_lam`` over horizontal strips lam/mu of size r."""
    mu = Partition(mu)
    return SymFn.from_basis("s", {lam: 1 for lam in _horizontal_strips(mu, r)})


def pieri_shapes(mu, r: int) -> list[Partition]:
    return list(_horizontal_strips(Partition(mu), r))


# -- plethysm ----------------------------------------------------------------

_pleth_lock = threading.Lock()
_pleth_memo: dict = {}


def _adams(g: SymFn, k: int) -> SymFn:
    """p_k[g]: replace every p_m by p_(km); rational scalars are fixed."""
    return SymFn._raw({_P(tuple(k * x for x in lam)): c for lam, c in g._p.items()})


def plethysm(f: SymFn, g: SymFn) -> SymFn:
    """The plethysm ``f[g]`` computed by substitution in the power-sum basis."""
    if not f or not g:
        return f.homogeneous(0) if f else SymFn.zero()
    _check_degree(f.max_degree() * max(g.max_degree(), 0))
    key = (f.key(), g.key())
    hit = _pleth_memo.get(key)
    if hit is not None:
        return hit
    disk = CONFIG.cache
    if disk is not None:
        hit = disk.get(f, g)
        if hit is not None:
            with _pleth_lock:
                _pleth_memo[key] = hit
            return hit
    adams = {}
    powers = {}

    def power(j, m):
        if (j, m) not in powers:
            if j not in adams:
                adams[j] = _adams(g, j)
            powers[(j, m)] = adams[j] ** m
        return powers[(j, m)]

    out = SymFn.zero()
    for lam, c in f._p.items():
        term = SymFn.scalar(c)
        for j, m in lam.multiplicities().items():
            term = term * power(j, m)
        out = out + term
    with _pleth_lock:
        _pleth_memo[key] = out
    if disk is not None:
        disk.put(f, g, out)
    return out


# -- generalized Schur functions ---------------------------------------------

def _sort_with_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] < seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return seq, sign


def schur_alpha(alpha) -> SymFn:
    """``s_alpha`` for an integer sequence, straightened to 0 or ``±s_lambda``."""
    alpha = [int(a) for a in alpha]
    ell = len(alpha)
    shifted = [a + ell - 1 - i for i, a in enumerate(alpha)]
    if len(set(shifted)) < ell:
        return SymFn.zero()
    srt, sign = _sort_with_sign(shifted)
    lam = [b - (ell - 1 - i) for i, b in enumerate(srt)]
    if lam and lam[-1] < 0:
        return SymFn.zero()
    return schur(Partition(lam)) * sign


def jacobi_trudi(alpha) -> SymFn:
    """``det(h_(alpha_i - i + j))`` expanded directly (Leibniz), for short alpha."""
    alpha = [int(a) for a in alpha]
    ell = len(alpha)
    out = SymFn.zero()
    for perm in itertools.permutations(range(ell)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = SymFn.scalar((-1) ** inv)
        for i, j in enumerate(perm):
            idx = alpha[i] - i + j
            if idx < 0:
                term = SymFn.zero()
                break
            term = term * h(idx)
        out = out + term
    return out


def dual_jacobi_trudi(lam) -> SymFn:
    """``s_lam = det(e_(lam^t_i - i + j))``."""
    conj = Partition(lam).conjugate()
    ell = len(conj)
    out = SymFn.zero()
    for perm in itertools.permutations(range(ell)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = SymFn.scalar((-1) ** inv)
        for i, j in enumerate(perm):
            idx = conj[i] - i + j
            if idx < 0:
                term = SymFn.zero()
                break
            term = term * e(idx)
        out = out + term
    return out


# -- boundedness -------------------------------------------------------------

def bounded_by(f: SymFn) -> int:
    """Sharp bound: the largest first row among shapes in the Schur support."""
    support = [lam for lam, c in _to_schur(f).items() if c]
    if not support:
        raise ValueError("undefined bound: zero symmetric function")
    return max((lam[0] if lam else 0) for lam in support)


def dimension(f: SymFn) -> Fraction:
    """Degree of the (virtual) character: the coefficient of p_1^n, times n!."""
    total = Fraction(0)
    for lam, c in f._p.items():
        if all(x == 1 for x in lam):
            total += c * factorial(len(lam))
    return total
