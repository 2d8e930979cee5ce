"""Higher Lie characters, Whitney homology characters and their derangement-indexed parts.

Everything is returned as a Frobenius characteristic (a ``SymFn``).  The
hatted entries are built straight from the sum over cycle types with no
fixed points; the recurrences and generating functions below are checks
against that definition, never used to compute it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from repstab.partitions import Partition, derangement_types, partitions_of
from repstab.symfunc import SymFn, d_dp1, e, h, mul_p1, omega, p, plethysm, schur

KINDS = ("Lie", "W")


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@cache
def ell(n: int) -> SymFn:
    """ch(Lie_(n)) = (1/n) sum_{d | n} mu(d) p_d^(n/d)."""
    if n < 1:
        raise ValueError("ell needs n >= 1")
    out = SymFn.zero()
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            out = out + p([d] * (n // d)) * Fraction(mu, n)
    return out


@cache
def pi(n: int) -> SymFn:
    """Sign twist of ell(n)."""
    return omega(ell(n))


def lie_lambda(lam) -> SymFn:
    return _lie_lambda(Partition(lam))


@cache
def _lie_lambda(lam: Partition) -> SymFn:
    out = SymFn.one()
    for j, m in lam.multiplicities().items():
        out = out * plethysm(h(m), ell(j))
    return out


def w_lambda(lam) -> SymFn:
    return _w_lambda(Partition(lam))


@cache
def _w_lambda(lam: Partition) -> SymFn:
    out = SymFn.one()
    for j, m in lam.multiplicities().items():
        outer = h(m) if j % 2 else e(m)
        out = out * plethysm(outer, pi(j))
    return out


def _family(kind: str):
    if kind in ("Lie", "lie", "L"):
        return lie_lambda
    if kind in ("W", "w"):
        return w_lambda
    raise ValueError(f"unknown family {kind!r}; expected Lie or W")


@cache
def hat_entry(kind: str, i: int, m: int) -> SymFn:
    """Sum of Lie_lam (or W_lam) over lam of size m and rank i with no parts equal to 1."""
    build = _family(kind)
    out = SymFn.zero()
    for lam in derangement_types(i, m):
        out = out + build(lam)
    return out


def hat_aggregate(kind: str, i: int) -> SymFn:
    """All sizes at rank i together (mixed degree, i+1 <= m <= 2i)."""
    out = SymFn.zero()
    for m in range(i + 1 if i else 0, 2 * i + 1):
        out = out + hat_entry(kind, i, m)
    return out


def graded(kind: str, i: int, n: int) -> SymFn:
    build = _family(kind)
    out = SymFn.zero()
    for lam in partitions_of(n, exact_rank=i):
        out = out + build(lam)
    return out


def whitney_homology(i: int, n: int) -> SymFn:
    return graded("W", i, n)


def lie_graded(i: int, n: int) -> SymFn:
    return graded("Lie", i, n)


def graded_via_M(kind: str, i: int, n: int) -> SymFn:
    """The same character assembled as sum_m hat_entry(i, m) * h_(n-m)."""
    out = SymFn.zero()
    for m in range(0, n + 1):
        piece = hat_entry(kind, i, m)
        if piece:
            out = out + piece * h(n - m)
    return out


def conf_cohomology(n: int, d: int, i: int) -> SymFn:
    """Reduced-convention cohomology character of n ordered points in R^d, degree i."""
    if d < 2 or i < 0:
        raise ValueError("need d >= 2 and i >= 0")
    if i % (d - 1):
        return SymFn.zero()
    j = i // (d - 1)
    return lie_graded(j, n) if d % 2 else whitney_homology(j, n)


def conf_kind(d: int) -> str:
    return "Lie" if d % 2 else "W"


def tau(n: int) -> SymFn:
    if n < 0:
        raise ValueError("tau needs n >= 0")
    if n <= 3:
        return h(n)
    return schur([3] + [1] * (n - 3)) - schur([2, 2] + [1] * (n - 4))


@cache
def kappa(n: int) -> SymFn:
    out = SymFn.zero()
    for i in range(n):
        out = out + hat_entry("Lie", i, n)
    return out if n else SymFn.one()


@cache
def nu(n: int) -> SymFn:
    out = SymFn.zero()
    for i in range(n):
        out = out + hat_entry("W", i, n)
    return out if n else SymFn.one()


def row_recurrence_sides(n: int):
    """(kappa_n, p1 kappa_(n-1) + (-1)^n e_n, nu_n, p1 nu_(n-1) + (-1)^n tau_n)."""
    sgn = (-1) ** n
    return (kappa(n), mul_p1(kappa(n - 1)) + e(n) * sgn,
            nu(n), mul_p1(nu(n - 1)) + tau(n) * sgn)


def verify_row_recurrence(n: int) -> bool:
    if n < 1:
        raise ValueError("the recurrence starts at n = 1")
    k, k_rhs, v, v_rhs = row_recurrence_sides(n)
    return k == k_rhs and v == v_rhs


def _hat(kind: str, i: int, n: int) -> SymFn:
    if i < 0 or n < 0:
        return SymFn.zero()
    return hat_entry(kind, i, n)


def verify_wg_recurrence(n: int, i: int, kinds=KINDS) -> bool:
    """d/dp1 X^i_n = p1 d/dp1 X^(i-1)_(n-1) + p1 X^(i-1)_(n-2) for both hatted families."""
    if n < 2 or i < 1:
        raise ValueError("need n >= 2 and i >= 1")
    for kind in kinds:
        lhs = d_dp1(_hat(kind, i, n))
        rhs = mul_p1(d_dp1(_hat(kind, i - 1, n - 1))) + mul_p1(_hat(kind, i - 1, n - 2))
        if lhs != rhs:
            return False
    return True


def euler_hatW(n: int) -> SymFn:
    if n < 2:
        raise ValueError("euler_hatW needs n >= 2")
    out = SymFn.zero()
    for i in range(n):
        out = out + hat_entry("W", i, n) * (-1) ** i
    return out


def hook_21(n: int) -> SymFn:
    """s_(2, 1^(n-2))."""
    return schur([2] + [1] * (n - 2))


def ell_via_maj(n: int) -> SymFn:
    """Sum of s_shape(Q) over standard tableaux Q of size n with maj(Q) = 1 mod n."""
    from repstab.tableaux import all_syt, maj

    if n < 2:
        raise ValueError("ell_via_maj needs n >= 2")
    table = {}
    for q in all_syt(n):
        if maj(q) % n == 1 % n:
            table[q.shape] = table.get(q.shape, 0) + 1
    return SymFn.from_basis("s", table)


# -- product generating functions --------------------------------------------
#
# A bivariate truncated series is a dict {(u_degree, partition): coefficient}
# in the power-sum basis, keeping only x-degree <= N.

def _poly_mul(a: dict, b: dict, cap: int) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= cap:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def a_ell(ell_: int, sign: int = 1) -> dict:
    """a_ell(sign*u) = (1/ell) sum_{d | ell} mu(d) (sign*u)^(ell/d), as {u_degree: coeff}."""
    out = {}
    for d in divisors(ell_):
        k = ell_ // d
        c = Fraction(mobius(d) * sign**k, ell_)
        if c:
            out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v}


def _binomial_poly(c: dict, k: int, cap: int) -> dict:
    """binom(c, k) for a polynomial c(u), truncated in u-degree."""
    out = {0: Fraction(1)}
    for j in range(k):
        factor = dict(c)
        factor[0] = factor.get(0, 0) - j
        out = _poly_mul(out, {a: b for a, b in factor.items() if b}, cap)
    return {a: b / factorial(k) for a, b in out.items()}


def _series_mul(a: dict, b: dict, N: int) -> dict:
    out = {}
    for (ua, la), x in a.items():
        for (ub, lb), y in b.items():
            if la.size + lb.size <= N:
                key = (ua + ub, Partition(sorted(la + lb, reverse=True)))
                out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _factor(ell_: int, base_sign: int, exponent: dict, N: int) -> dict:
    """(1 + base_sign * p_ell)^exponent(u), truncated at x-degree N."""
    out = {}
    for k in range(N // ell_ + 1):
        coeff = _binomial_poly(exponent, k, N)
        lam = Partition([ell_] * k)
        for udeg, c in coeff.items():
            out[(udeg, lam)] = out.get((udeg, lam), 0) + c * base_sign**k
    return {k: v for k, v in out.items() if v}


def _inverse_H(N: int) -> dict:
    """exp(-sum_m p_m u^m / m) truncated at x-degree N."""
    out = {(0, Partition()): Fraction(1)}
    for m in range(1, N + 1):
        factor = {}
        for k in range(N // m + 1):
            factor[(m * k, Partition([m] * k))] = Fraction((-1) ** k, m**k * factorial(k))
        out = _series_mul(out, factor, N)
    return out


def product_side(kind: str, N: int) -> dict:
    """Expand the product formula for L(u), W(u), or the hatted versions."""
    hatted = kind.lower().startswith("hat")
    base = kind[3:] if hatted else kind
    base = "Lie" if base.lower() == "lie" else "W"
    out = {(0, Partition()): Fraction(1)}
    for ell_ in range(1, N + 1):
        if base == "Lie":
            exponent = {k: -v for k, v in a_ell(ell_).items()}
            fac = _factor(ell_, -1, exponent, N)
        else:
            fac = _factor(ell_, (-1) ** ell_, a_ell(ell_, -1), N)
        out = _series_mul(out, fac, N)
    if hatted:
        out = _series_mul(out, _inverse_H(N), N)
    return out


def direct_side(kind: str, N: int) -> dict:
    """sum over lam with |lam| <= N of ch(X_lam) u^(number of parts)."""
    hatted = kind.lower().startswith("hat")
    base = kind[3:] if hatted else kind
    build = _family("Lie" if base.lower() == "lie" else "W")
    out = {}
    for n in range(N + 1):
        for lam in partitions_of(n):
            if hatted and 1 in lam:
                continue
            for mu, c in build(lam).items():
                key = (len(lam), mu)
                out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def graded_side(kind: str, N: int) -> dict:
    """sum over n, i of ch(X^i_n) u^(n-i), built from the rank-graded characters."""
    hatted = kind.lower().startswith("hat")
    base = kind[3:] if hatted else kind
    base = "Lie" if base.lower() == "lie" else "W"
    out = {}
    for n in range(N + 1):
        for i in range(n + 1):
            f = hat_entry(base, i, n) if hatted else graded(base, i, n)
            for mu, c in f.items():
                key = (n - i, mu)
                out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def check_product_gf(n_max: int, kind: str) -> bool:
    prod = product_side(kind, n_max)
    return prod == direct_side(kind, n_max) == graded_side(kind, n_max)
