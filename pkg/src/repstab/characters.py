"""Virtual characters of S_n as class functions, and the Frobenius dictionary."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from repstab.partitions import Partition, count_syt, partitions_of
from repstab.symfunc import SymFn, character_value, h


@dataclass(frozen=True)
class ClassFunction:
    """A rational-valued function on the cycle types of S_n."""

    n: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        vals = {}
        for mu, v in self.values.items():
            mu = Partition(mu)
            if mu.size != self.n:
                raise ValueError(f"cycle type {list(mu)} is not a partition of {self.n}")
            v = Fraction(v)
            if v:
                vals[mu] = v
        object.__setattr__(self, "values", vals)

    def __call__(self, mu) -> Fraction:
        return self.values.get(Partition(mu), Fraction(0))

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._same_n(other)
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return ClassFunction(self.n, out)

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return self + other.scale(-1)

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.n, {k: v * c for k, v in self.values.items()})

    def __mul__(self, other):
        """Pointwise (tensor) product, or scaling by a number."""
        if isinstance(other, ClassFunction):
            self._same_n(other)
            return ClassFunction(self.n, {k: v * other(k) for k, v in self.values.items()})
        return self.scale(other)

    __rmul__ = __mul__

    def _same_n(self, other):
        if other.n != self.n:
            raise ValueError(f"class functions on S_{self.n} and S_{other.n} do not mix")

    def degree(self) -> Fraction:
        return self(Partition([1] * self.n))

    def inner(self, other: ClassFunction) -> Fraction:
        """The normalized character inner product (1/n!) sum_w f(w) g(w)."""
        self._same_n(other)
        total = sum((v * other(mu) / mu.z() for mu, v in self.values.items()), Fraction(0))
        return total


def frobenius_ch(chi: ClassFunction) -> SymFn:
    """ch(chi) = sum over cycle types lam of chi(lam) p_lam / z_lam."""
    return SymFn({lam: v / lam.z() for lam, v in chi.values.items()}) if chi.values else SymFn.zero()


def inverse_ch(f: SymFn, n: int | None = None) -> ClassFunction:
    degs = f.degrees()
    if n is None:
        if len(degs) > 1:
            raise ValueError("inverse_ch needs a homogeneous symmetric function")
        n = degs[0] if degs else 0
    elif degs and degs != [n]:
        raise ValueError(f"symmetric function is not homogeneous of degree {n}")
    return ClassFunction(n, {lam: c * lam.z() for lam, c in f.items()})


def irreducible(lam) -> ClassFunction:
    lam = Partition(lam)
    return ClassFunction(lam.size, {mu: character_value(lam, mu) for mu in partitions_of(lam.size)})


def trivial(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: 1 for mu in partitions_of(n)})


def sign(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: (-1) ** (n - len(mu)) for mu in partitions_of(n)})


def regular(n: int) -> ClassFunction:
    return ClassFunction(n, {Partition([1] * n): factorial(n)})


def zero(n: int) -> ClassFunction:
    return ClassFunction(n, {})


def induction_product(chi1: ClassFunction, chi2: ClassFunction) -> ClassFunction:
    return inverse_ch(frobenius_ch(chi1) * frobenius_ch(chi2), chi1.n + chi2.n)


def M_sym(f: SymFn, n: int, n0: int | None = None) -> SymFn:
    """f * h_(n - n0); zero when n < n0."""
    if n0 is None:
        degs = f.degrees()
        if len(degs) > 1:
            raise ValueError("M needs a homogeneous generator")
        n0 = degs[0] if degs else 0
    if n < n0:
        return SymFn.zero()
    return f * h(n - n0)


def M_n(chi: ClassFunction, n: int) -> ClassFunction:
    if n < chi.n:
        return zero(n)
    return inverse_ch(M_sym(frobenius_ch(chi), n, chi.n), n)


def decompose_sym(f: SymFn) -> dict[Partition, int]:
    """Integer multiplicities of irreducibles, in reverse lexicographic order."""
    out = {}
    for lam, c in sorted(f.coefficients("s").items(), key=lambda kv: (kv[0].size, [-x for x in kv[0]])):
        if c.denominator != 1:
            raise ValueError(f"not a virtual character: multiplicity {c} on {list(lam)}")
        out[lam] = int(c)
    return out


def decompose(chi: ClassFunction) -> dict[Partition, int]:
    mult = decompose_sym(frobenius_ch(chi))
    dim = sum(c * count_syt(lam) for lam, c in mult.items())
    if dim != chi.degree():
        raise ArithmeticError("decomposition does not reproduce the degree")
    return mult


def dimension(f: SymFn) -> int:
    """Degree of a virtual character from its Schur expansion via hook lengths."""
    return sum(c * count_syt(lam) for lam, c in decompose_sym(f).items())


def decomposition_json(n: int, mult: dict) -> dict:
    return {"n": n, "multiplicities": [{"partition": list(lam), "mult": m}
                                       for lam, m in sorted(mult.items(), key=lambda kv: [-x for x in kv[0]])]}

