"""The Orlik-Solomon algebra of the braid arrangement over Q, with its S_n action.

Generators a_ij (i < j) are ordered by a_ij < a_kl iff (j, i) < (l, k).  With
that order the broken circuits are the pairs {a_ik, a_jk} with i < j < k, so a
monomial is nbc exactly when every vertex has at most one smaller neighbour.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations

from repstab.characters import ClassFunction, frobenius_ch
from repstab.linalg import Echelon, ModEchelon, solve_in_span
from repstab.liewhitney import euler_hatW, hook_21, whitney_homology
from repstab.partitions import Partition, partitions_of
from repstab.setpartitions import representative
from repstab.symfunc import SymFn, h, schur


@dataclass
class OSConfig:
    max_n: int = 7  # full algebra and the hatted complex
    max_n_hat: int = 8


OS = OSConfig()


def edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError("a_ii is not a generator")
    return (i, j) if i < j else (j, i)


def _key(e: tuple[int, int]):
    return (e[1], e[0])


def sort_with_sign(edges) -> tuple[int, tuple | None]:
    """Sort generators into the fixed order; sign of the permutation, or (0, None) on a repeat."""
    seq = list(edges)
    if len(set(seq)) < len(seq):
        return 0, None
    sign = 1
    # insertion sort counts transpositions
    for a in range(1, len(seq)):
        b = a
        while b > 0 and _key(seq[b - 1]) > _key(seq[b]):
            seq[b - 1], seq[b] = seq[b], seq[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(seq)


def _broken(mono: tuple) -> tuple[int, int] | None:
    """Positions (p, q) of a broken circuit a_ik, a_jk in a sorted monomial, if any."""
    seen = {}
    for pos, (i, k) in enumerate(mono):
        if k in seen:
            return seen[k], pos
        seen[k] = pos
    return None


@cache
def _straighten_sorted(mono: tuple) -> tuple:
    hit = _broken(mono)
    if hit is None:
        return ((mono, 1),)
    p, q = hit
    (i, k), (j, _) = mono[p], mono[q]
    # bring a_jk next to a_ik
    rest = list(mono[:p]) + list(mono[p + 1:q]) + list(mono[q + 1:])
    sign = (-1) ** (q - p - 1)
    # a_ik a_jk = a_ij a_jk - a_ij a_ik, inserted at position p
    out = {}
    for pair, c in ((((i, j), (j, k)), sign), (((i, j), (i, k)), -sign)):
        s, srt = sort_with_sign(rest[:p] + list(pair) + rest[p:])
        if not s:
            continue
        for m, v in _straighten_sorted(srt):
            out[m] = out.get(m, 0) + c * s * v
    return tuple((m, v) for m, v in sorted(out.items(), key=lambda kv: [_key(e) for e in kv[0]]) if v)


def straighten(edges) -> dict[tuple, int]:
    """nbc expansion of a product of generators taken in the given order."""
    s, srt = sort_with_sign(edge(*e) for e in edges)
    if not s:
        return {}
    return {m: s * v for m, v in _straighten_sorted(srt)}


@dataclass
class OSElement:
    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        out = {}
        for mono, c in self.terms.items():
            c = Fraction(c)
            if not c:
                continue
            for m, v in straighten(mono).items():
                out[m] = out.get(m, 0) + c * v
        self.terms = {m: v for m, v in out.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> OSElement:
        out = object.__new__(cls)
        out.n = n
        out.terms = {m: v for m, v in terms.items() if v}
        return out

    @classmethod
    def one(cls, n: int) -> OSElement:
        return cls._raw(n, {(): Fraction(1)})

    @classmethod
    def parse(cls, n: int, text: str) -> OSElement:
        """Read a monomial like ``a(1,3)a(2,3)``; the empty string is 1."""
        pairs = re.findall(r"a\((\d+),(\d+)\)", text.replace(" ", ""))
        if "".join(f"a({i},{j})" for i, j in pairs) != text.replace(" ", ""):
            raise ValueError(f"cannot parse monomial {text!r}")
        edges = [edge(int(i), int(j)) for i, j in pairs]
        if any(not 1 <= v <= n for e in edges for v in e):
            raise ValueError(f"indices must lie in 1..{n}")
        return cls(n, {tuple(edges): 1}) if edges else cls.one(n)

    def __add__(self, other):
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out.get(m, 0) + v
        return OSElement._raw(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> OSElement:
        return OSElement._raw(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, OSElement):
            return self.scale(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                for m, v in straighten(a + b).items():
                    out[m] = out.get(m, 0) + x * y * v
        return OSElement._raw(self.n, out)

    def __eq__(self, other):
        return isinstance(other, OSElement) and self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def act(self, w) -> OSElement:
        """Permute indices by w (a tuple on 0..n-1, acting on vertex labels 1..n)."""
        out = {}
        for mono, c in self.terms.items():
            for m, v in straighten(permute(mono, w)).items():
                out[m] = out.get(m, 0) + c * v
        return OSElement._raw(self.n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in sorted(self.terms.items(), key=lambda kv: [_key(e) for e in kv[0]]):
            mono = "".join(f"a({i},{j})" for i, j in m) or "1"
            mag = abs(c)
            body = mono if mag == 1 else f"{mag}*{mono}"
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def permute(mono: tuple, w) -> list[tuple[int, int]]:
    return [edge(w[i - 1] + 1, w[j - 1] + 1) for i, j in mono]


def nbc_basis(n: int, i: int) -> list[tuple]:
    """nbc monomials of degree i: pick at most one smaller neighbour for each vertex 2..n."""
    out = []
    for tops in combinations(range(2, n + 1), i):
        stack = [()]
        for k in tops:
            stack = [m + ((j, k),) for m in stack for j in range(1, k)]
        out.extend(stack)
    return out


def dims(n: int) -> list[int]:
    return [len(nbc_basis(n, i)) for i in range(n)]


def char_poly_dims(n: int) -> list[int]:
    """Coefficients of prod_{k=1}^{n-1} (1 + k t)."""
    coeffs = [1]
    for k in range(1, n):
        coeffs = [a + k * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def omega_element(n: int) -> OSElement:
    return OSElement._raw(n, {((i, j),): Fraction(1) for i, j in combinations(range(1, n + 1), 2)})


def _d_mono(n: int, mono: tuple) -> dict:
    out = {}
    for e in combinations(range(1, n + 1), 2):
        for m, v in straighten((e,) + mono).items():
            out[m] = out.get(m, 0) + v
    return {m: v for m, v in out.items() if v}


def differential(x: OSElement) -> OSElement:
    """Left multiplication by the invariant element sum a_ij."""
    out = {}
    for mono, c in x.terms.items():
        for m, v in _d_mono(x.n, mono).items():
            out[m] = out.get(m, 0) + c * v
    return OSElement._raw(x.n, out)


def support(mono: tuple) -> set[int]:
    return {v for e in mono for v in e}


def filtration_basis(n: int, p: int, i: int) -> list[tuple]:
    """nbc monomials of degree i touching at least p vertices."""
    if not 0 <= p <= n:
        raise ValueError("need 0 <= p <= n")
    return [m for m in nbc_basis(n, i) if len(support(m)) >= p]


def _check_n(n: int, cap: int):
    if n > cap:
        from repstab.setpartitions import BudgetExceeded

        raise BudgetExceeded(f"n = {n} exceeds the Orlik-Solomon cap {cap}")


def complex_ranks(n: int, p: int = 0, field: str = "Q") -> list[int]:
    """Rank of d: F_p(A^i) -> F_p(A^(i+1)) for each i.

    field is "Q" or "GFp"; ranks mod the prime are lower bounds for the ranks over Q.
    """
    make = {"Q": Echelon, "GFp": ModEchelon}[field]
    out = []
    for i in range(n):
        ech = make()
        for m in filtration_basis(n, p, i):
            ech.add(_d_mono(n, m))
        out.append(ech.rank)
    return out


def _cohomology_from(sizes: list[int], d: list[int]) -> list[int]:
    return [sizes[i] - d[i] - (d[i - 1] if i else 0) for i in range(len(sizes))]


def cohomology(n: int, p: int = 0) -> list[int]:
    return list(_cohomology(n, p))


@cache
def _cohomology(n: int, p: int) -> tuple[int, ...]:
    # Ranks mod a prime can only drop, so the modular answer bounds the true one
    # from above.  With at most one nonzero degree the Euler characteristic pins
    # it down exactly; otherwise redo the elimination over Q.
    sizes = [len(filtration_basis(n, p, i)) for i in range(n)]
    for field in ("GFp", "Q"):
        coh = _cohomology_from(sizes, complex_ranks(n, p, field))
        if sum(1 for c in coh if c) <= 1:
            break
    return tuple(coh)


def hatW_cohomology(n: int) -> list[tuple[int, int]]:
    """Nonzero (degree, dimension) pairs of the cohomology of (F_n(A), d)."""
    if n < 2:
        raise ValueError("need n >= 2")
    _check_n(n, OS.max_n_hat)
    return [(i, c) for i, c in enumerate(cohomology(n, n)) if c]


def is_exact(n: int) -> bool:
    _check_n(n, OS.max_n)
    return not any(cohomology(n, 0))


def trace(basis: list[tuple], w) -> int:
    """Trace of w on the span of the given nbc monomials (closed under the action)."""
    index = set(basis)
    total = 0
    for m in basis:
        img = straighten(permute(m, w))
        if any(k not in index for k in img):
            raise ValueError("basis is not closed under the action")
        total += img.get(m, 0)
    return total


def character(basis: list[tuple], n: int) -> SymFn:
    return frobenius_ch(ClassFunction(n, {mu: trace(basis, representative(mu)) for mu in partitions_of(n)}))


def A_character(n: int, i: int) -> SymFn:
    _check_n(n, OS.max_n)
    return character(nbc_basis(n, i), n)


def F_character(n: int, p: int, i: int) -> SymFn:
    return character(filtration_basis(n, p, i), n)


def euler_character_by_traces(n: int) -> SymFn:
    out = SymFn.zero()
    for i in range(n):
        out = out + F_character(n, n, i) * (-1) ** i
    return out


def hatW_top_character(n: int, check_traces: bool = True) -> SymFn:
    """Character of the only nonzero cohomology group, read off the Euler characteristic."""
    coh = hatW_cohomology(n)
    if len(coh) != 1 or coh[0][0] != n - 1:
        raise ArithmeticError("cannot identify character from Euler characteristic")
    sign = (-1) ** (n - 1)
    top = euler_hatW(n) * sign
    if check_traces and euler_character_by_traces(n) * sign != top:
        raise ArithmeticError("trace and symmetric-function Euler characteristics disagree")
    return top


def cohomology_report(n: int, check_traces: bool = True) -> dict:
    """JSON-ready summary: nonzero degrees of the F_n cohomology and the top character."""
    coh = hatW_cohomology(n)
    out = {"n": n, "dims": [list(c) for c in coh]}
    if len(coh) == 1 and coh[0][0] == n - 1:
        out["top_character"] = hatW_top_character(n, check_traces).to_json()
    return out


def star_tree(n: int, i: int) -> list[tuple[int, int]]:
    """m^(i) = a_(1,i) ... a_(i-1,i) a_(i,i+1) ... a_(i,n), as an ordered product."""
    return [edge(j, i) for j in range(1, i)] + [edge(i, j) for j in range(i + 1, n + 1)]


@dataclass
class StarTreeReport:
    n: int
    relation_holds: bool
    dimension: int
    character: SymFn

    @property
    def ok(self) -> bool:
        return self.relation_holds and self.dimension == self.n - 1 and self.character == hook_21(self.n)


def star_tree_span(n: int) -> StarTreeReport:
    if n < 2:
        raise ValueError("need n >= 2")
    vecs = [straighten(star_tree(n, i)) for i in range(1, n + 1)]
    relation = {}
    for i, v in enumerate(vecs, start=1):
        for m, c in v.items():
            relation[m] = relation.get(m, 0) + (-1) ** i * c
    relation_holds = not any(relation.values())
    ech = Echelon()
    chosen = [i for i, v in enumerate(vecs, start=1) if ech.add(v)]
    basis = [vecs[i - 1] for i in chosen]
    dim = len(basis)

    def act_star(i, w):
        return straighten(permute(tuple(star_tree(n, i)), w))

    values = {}
    for mu in partitions_of(n):
        w = representative(mu)
        tr = Fraction(0)
        for j, i in enumerate(chosen):
            coeffs = solve_in_span(basis, act_star(i, w))
            if coeffs is None:
                raise ArithmeticError("span is not stable under the action")
            tr += coeffs[j]
        values[mu] = tr
    return StarTreeReport(n, relation_holds, dim, frobenius_ch(ClassFunction(n, values)))


def verify_Dprime_euler(n: int) -> bool:
    """h_n - sum_{k=2}^n (-1)^k s_(2,1^(k-2)) h_(n-k) = 0."""
    if n < 2:
        raise ValueError("need n >= 2")
    total = h(n)
    for k in range(2, n + 1):
        total = total - schur([2] + [1] * (k - 2)) * h(n - k) * (-1) ** k
    return not total


def verify_A_characters(n: int) -> bool:
    return all(A_character(n, i) == whitney_homology(i, n) for i in range(n))


def d_squared_zero(n: int) -> bool:
    for i in range(n):
        for m in nbc_basis(n, i):
            x = OSElement._raw(n, {m: Fraction(1)})
            if differential(differential(x)):
                return False
    return True


def d_equivariant(n: int) -> bool:
    """g d(x) = d(g x) for adjacent transpositions g and basis monomials x."""
    for t in range(n - 1):
        w = list(range(n))
        w[t], w[t + 1] = w[t + 1], w[t]
        for i in range(n):
            for m in nbc_basis(n, i):
                x = OSElement._raw(n, {m: Fraction(1)})
                if differential(x).act(w) != differential(x.act(w)):
                    return False
    return True
