"""Representation stability: padding, sharp onsets of M(chi), polynomial characters."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from repstab.characters import ClassFunction, frobenius_ch, inverse_ch
from repstab.liewhitney import conf_kind, hat_aggregate
from repstab.partitions import Partition, partitions_of
from repstab.symfunc import SymFn, bounded_by, h, hall_inner, schur


def _as_sym(chi) -> SymFn:
    return frobenius_ch(chi) if isinstance(chi, ClassFunction) else chi


def pad(chi, m: int):
    """Replace every irreducible chi^lam by chi^(lam + (m)); works on ClassFunction or SymFn."""
    f = _as_sym(chi)
    table = {}
    for lam, c in f.coefficients("s").items():
        key = lam.pad(m)
        table[key] = table.get(key, 0) + c
    out = SymFn.from_basis("s", table)
    if isinstance(chi, ClassFunction):
        return inverse_ch(out, chi.n + m)
    return out


def M(chi, n: int) -> SymFn:
    """M_n applied to every homogeneous piece: sum_m chi_m * h_(n-m) over m <= n."""
    f = _as_sym(chi)
    out = SymFn.zero()
    for m in f.degrees():
        if m <= n:
            out = out + f.homogeneous(m) * h(n - m)
    return out


def onset_of_M(chi) -> int:
    """Sharp onset max(|mu| + mu_1) over the Schur support of a genuine character."""
    coeffs = _as_sym(chi).coefficients("s")
    if any(c < 0 or c.denominator != 1 for c in coeffs.values()):
        raise ValueError("onset undefined for virtual characters")
    return max((lam.size + (lam[0] if lam else 0) for lam in coeffs), default=0)


@dataclass
class OnsetReport:
    onset: int | None
    n_max: int
    certified: bool
    note: str = ""


def onset_scan(chi, n_max: int) -> OnsetReport:
    """Least n0 with M_(n+1) = pad(M_n, 1) for every n0 <= n < n_max."""
    f = _as_sym(chi)
    seq = [M(f, n) for n in range(n_max + 1)]
    ok = [seq[n + 1] == pad(seq[n], 1) for n in range(n_max)]
    if not ok or not ok[-1]:
        return OnsetReport(None, n_max, False, "no stable range observed in window")
    n0 = n_max - 1
    while n0 > 0 and ok[n0 - 1]:
        n0 -= 1
    coeffs = f.coefficients("s")
    genuine = all(c > 0 and c.denominator == 1 for c in coeffs.values())
    note = ""
    certified = genuine
    if not genuine:
        note = "uncertified: virtual character"
    elif n_max <= onset_of_M(f):
        certified = False
        note = "window too short to certify"
    return OnsetReport(n0, n_max, certified, note)


def onset_bruteforce(chi, n_max: int) -> int | None:
    return onset_scan(chi, n_max).onset


def refined_multiplicity_from(f: SymFn, nu, n: int) -> int:
    """<chi^(n-|nu|, nu), M_n(f)> through the horizontal-strip criterion."""
    nu = Partition(nu)
    if nu and n - nu.size < nu[0]:
        return 0
    total = 0
    for mu, c in f.coefficients("s").items():
        if mu.size > n:
            continue
        first = mu[0] if mu else 0
        if mu.is_horizontal_strip_over(nu) and n >= nu.size + first:
            total += c
    return int(total)


def refined_multiplicity(i: int, nu, n: int, parity: str) -> int:
    """f_(i,nu)(n): multiplicity of chi^(n-|nu|,nu) in the rank-i cohomology."""
    kind = {"odd": "Lie", "d-odd": "Lie", "even": "W", "d-even": "W"}[parity]
    return refined_multiplicity_from(hat_aggregate(kind, i), nu, n)


def refined_multiplicity_direct(i: int, nu, n: int, parity: str) -> int:
    nu = Partition(nu)
    if nu and n - nu.size < nu[0]:
        return 0
    kind = "Lie" if "odd" in parity else "W"
    target = schur((n - nu.size,) + tuple(nu))
    return int(hall_inner(target, M(hat_aggregate(kind, i), n)))


# -- polynomial statistics ---------------------------------------------------

def _binom_product(a: int, b: int) -> dict[int, int]:
    """binom(x,a) binom(x,b) = sum_k binom(k,a) binom(a,k-b) binom(x,k)."""
    return {k: comb(k, a) * comb(a, k - b) for k in range(max(a, b), a + b + 1)}


def _to_exps(lam: Partition) -> dict[int, int]:
    return lam.multiplicities()


def _from_exps(exps: dict[int, int]) -> Partition:
    parts = []
    for j, m in exps.items():
        parts += [j] * m
    return Partition(sorted(parts, reverse=True))


@dataclass(frozen=True)
class PolynomialStatistic:
    """P = sum_lam c_lam binom(X, lam), where binom(X, lam) = prod_j binom(x_j, m_j(lam))."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.terms.items():
            lam = Partition(lam)
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @property
    def degree(self) -> int | None:
        """Max |lam| with nonzero coefficient; None stands for the zero polynomial."""
        return max((lam.size for lam in self.terms), default=None)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PolynomialStatistic(out)

    def scale(self, c) -> PolynomialStatistic:
        return PolynomialStatistic({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PolynomialStatistic):
            return self.scale(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                ea, eb = _to_exps(a), _to_exps(b)
                partial = {(): Fraction(x * y)}
                for j in sorted(set(ea) | set(eb)):
                    nxt = {}
                    for key, c in partial.items():
                        for k, w in _binom_product(ea.get(j, 0), eb.get(j, 0)).items():
                            nk = key + ((j, k),)
                            nxt[nk] = nxt.get(nk, 0) + c * w
                    partial = nxt
                for key, c in partial.items():
                    lam = _from_exps(dict(key))
                    out[lam] = out.get(lam, 0) + c
        return PolynomialStatistic(out)

    def __call__(self, multiplicities: dict[int, int]) -> Fraction:
        total = Fraction(0)
        for lam, c in self.terms.items():
            total += c * prod(comb(multiplicities.get(j, 0), m) for j, m in lam.multiplicities().items())
        return total

    @classmethod
    def constant(cls, c) -> PolynomialStatistic:
        return cls({Partition(): c})

    @classmethod
    def binomial(cls, j: int, m: int) -> PolynomialStatistic:
        return cls({Partition([j] * m): 1})

    @classmethod
    def from_monomials(cls, table: dict) -> PolynomialStatistic:
        """Ingest {exponent dict {j: e}: coeff} via forward differences at 0 per variable."""
        out = cls()
        for exps, c in table.items():
            term = cls.constant(c)
            for j, e in dict(exps).items():
                # x^e = sum_k (Delta^k x^e)(0) binom(x, k)
                diffs = {k: sum((-1) ** (k - t) * comb(k, t) * t**e for t in range(k + 1))
                         for k in range(e + 1)}
                term = term * cls({Partition([j] * k): d for k, d in diffs.items()})
            out = out + term
        return out

    @classmethod
    def parse(cls, text: str) -> PolynomialStatistic:
        """Literal syntax: integer-coefficient sums of products of b(j,m) and x(j)^e factors."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial literal")
        terms = re.findall(r"[+-]?[^+-]+", src)
        if "".join(terms) != src:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out = cls()
        for term in terms:
            m = re.fullmatch(r"([+-]?)(\d*)\*?((?:b\(\d+,\d+\)|x\(?\d+\)?(?:\^\d+)?)*)", term)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {term!r}")
            coeff = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
            piece = cls.constant(coeff)
            for fac in re.findall(r"b\(\d+,\d+\)|x\(?\d+\)?(?:\^\d+)?", m.group(3)):
                if fac.startswith("b"):
                    j, k = map(int, re.findall(r"\d+", fac))
                    if j < 1:
                        raise ValueError("variables are x1, x2, ...")
                    piece = piece * cls.binomial(j, k)
                else:
                    nums = list(map(int, re.findall(r"\d+", fac)))
                    j, e = nums[0], (nums[1] if len(nums) > 1 else 1)
                    if j < 1:
                        raise ValueError("variables are x1, x2, ...")
                    piece = piece * cls.from_monomials({((j, e),): 1})
            out = out + piece
        return out


def poly_char(P: PolynomialStatistic, n: int) -> ClassFunction:
    """chi_P(w) = P(m_1(w), m_2(w), ...)."""
    return ClassFunction(n, {mu: P(mu.multiplicities()) for mu in partitions_of(n)})


def ch_poly_char(lam, n: int) -> SymFn:
    """ch of the character of binom(X, lam): p_lam / z_lam * h_(n - |lam|)."""
    lam = Partition(lam)
    if n < lam.size:
        return SymFn.zero()
    return SymFn.p(lam) * Fraction(1, lam.z()) * h(n - lam.size)


def ch_poly(P: PolynomialStatistic, n: int) -> SymFn:
    out = SymFn.zero()
    for lam, c in P.terms.items():
        out = out + ch_poly_char(lam, n) * c
    return out


def predicted_constant_from(P: PolynomialStatistic, b: int) -> int:
    deg = P.degree
    if deg is None:
        return 0
    return max(2 * deg, deg + b)


@dataclass
class PairingReport:
    values: list
    observed: int
    predicted: int
    certified: bool

    @property
    def ok(self) -> bool:
        return self.observed <= self.predicted


def pairing_stability(P: PolynomialStatistic, chi, n_max: int, b: int | None = None) -> PairingReport:
    """Track <chi_P, M_n(chi)> for n <= n_max and compare the constant range with the bound."""
    f = _as_sym(chi)
    if b is None:
        b = bounded_by(f)
    values = [hall_inner(ch_poly(P, n), M(f, n)) for n in range(n_max + 1)]
    observed = n_max
    while observed > 0 and values[observed - 1] == values[n_max]:
        observed -= 1
    predicted = predicted_constant_from(P, b)
    return PairingReport(values, observed, predicted, certified=predicted < n_max)


def conf_pairing_bound(P: PolynomialStatistic, i: int, d: int) -> int:
    return predicted_constant_from(P, i + (0 if d % 2 else 1))


def conf_pairing(P: PolynomialStatistic, i: int, d: int, n_max: int) -> PairingReport:
    """<chi_P, H^(i(d-1))(Conf_n R^d)> for n <= n_max against the improved bound."""
    f = hat_aggregate(conf_kind(d), i)
    return pairing_stability(P, f, n_max, b=i + (0 if d % 2 else 1))


def conf_pairing_sweep(deg_max: int = 3, i_max: int = 3, ds=(2, 3), n_max: int = 14) -> list[dict]:
    out = []
    for d in ds:
        for i in range(i_max + 1):
            for deg in range(deg_max + 1):
                for lam in partitions_of(deg):
                    P = PolynomialStatistic({lam: 1})
                    r = conf_pairing(P, i, d, n_max)
                    out.append({"d": d, "i": i, "P": list(lam), "observed": r.observed,
                                "predicted": r.predicted, "ok": r.ok and r.certified})
    return out


def theorem_1_1_rows(i_max: int = 4, brute_max: int = 3) -> list[dict]:
    rows = []
    for i in range(1, i_max + 1):
        lie, w = hat_aggregate("Lie", i), hat_aggregate("W", i)
        row = {"i": i, "lie": onset_of_M(lie), "w": onset_of_M(w), "lie_brute": None, "w_brute": None}
        if i <= brute_max:
            row["lie_brute"] = onset_bruteforce(lie, 3 * i + 2)
            row["w_brute"] = onset_bruteforce(w, 3 * i + 3)
        rows.append(row)
    return rows


def verify_theorem_1_1(i_max: int = 4, brute_max: int = 3) -> bool:
    for row in theorem_1_1_rows(i_max, brute_max):
        i = row["i"]
        if row["lie"] != 3 * i or row["w"] != 3 * i + 1:
            return False
        if i <= brute_max and (row["lie_brute"] != 3 * i or row["w_brute"] != 3 * i + 1):
            return False
    return True
