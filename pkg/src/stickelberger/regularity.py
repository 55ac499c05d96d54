"""Irregular-prime machinery: the exact-rational Bernoulli oracle, the
root scan of the quotient polynomial Q over F_p, and the alternating-sum
fact that rules out a vanishing B_((p+1)/2) when (p-1)/2 is odd.

The oracle is the ground truth here: it is built from the classical
recurrence over exact fractions and has no code in common with the
scanner, so agreement between the two is meaningful.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import canon_power, is_prime, primitive_root
from .groupring import delta_coeffs, fp_gr_eval, polynomial_Q

# B_0, B_1, ... computed on demand and never shrunk.
_bernoulli_cache = [Fraction(1)]


def bernoulli_fraction(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention), via
    sum_j C(n+1, j) B_j = 0."""
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        acc = Fraction(0)
        for j, b in enumerate(_bernoulli_cache):
            if b:
                acc += comb(m + 1, j) * b
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def bernoulli_mod(k: int, p: int) -> int:
    """B_k mod p for a single index; rejects k = 0 mod p-1 where the
    von Staudt-Clausen denominator kills the reduction."""
    if k > 0 and k % (p - 1) == 0:
        raise ValueError(f"B_{k} mod {p}: denominator divisible by {p}")
    b = bernoulli_fraction(k)
    if b.denominator % p == 0:
        raise ValueError(f"B_{k} has denominator divisible by {p}")
    return b.numerator * pow(b.denominator, -1, p) % p


def bernoulli_mod_p(p: int) -> dict:
    """k -> B_k mod p for every even k in [2, p-3]."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    return {k: bernoulli_mod(k, p) for k in range(2, p - 2, 2)}


def irregular_indices(p: int) -> frozenset:
    """Even k in [2, p-3] with p dividing the numerator of B_k."""
    return frozenset(k for k, r in bernoulli_mod_p(p).items() if r == 0)


@dataclass(frozen=True)
class RegularityVerdict:
    p: int
    v: int
    odd_roots: frozenset  # m with Q(v^(2m+1)) = 0 mod p, 1 <= m <= (p-3)/2
    all_roots: frozenset  # n in [2, p-2] with Q(v^n) = 0 mod p
    irregular_indices: frozenset  # even k with B_k = 0 mod p, from the oracle
    verdict: str  # "regular" / "irregular", decided by the oracle
    agreement: bool  # |odd_roots| == |irregular_indices|

    def to_json_obj(self):
        return {
            "p": self.p,
            "v": self.v,
            "odd_roots": sorted(self.odd_roots),
            "all_roots": sorted(self.all_roots),
            "irregular_indices": sorted(self.irregular_indices),
            "verdict": self.verdict,
            "agreement": self.agreement,
        }


def q_root_scan(p: int, v: int | None = None) -> RegularityVerdict:
    """Evaluate Q at v^n for n in [2, p-2] and cross the odd-exponent root
    count against the Bernoulli oracle.

    Odd exponents are exactly the residues X with X^((p-1)/2) = -1; no such
    root means the scan is consistent with p being regular.
    """
    if v is None:
        v = primitive_root(p)
    q_poly = polynomial_Q(p, v)
    all_roots = set()
    odd_roots = set()
    for n in range(2, p - 1):
        if fp_gr_eval(q_poly, canon_power(v, n, p)) == 0:
            all_roots.add(n)
            if n % 2 == 1:
                odd_roots.add((n - 1) // 2)
    irr = irregular_indices(p)
    return RegularityVerdict(
        p=p,
        v=v,
        odd_roots=frozenset(odd_roots),
        all_roots=frozenset(all_roots),
        irregular_indices=irr,
        verdict="irregular" if irr else "regular",
        agreement=len(odd_roots) == len(irr),
    )


@dataclass(frozen=True)
class HalfBernoulliCheck:
    p: int
    v: int
    q_at_minus_one: int  # Q(v^((p-1)/2)) mod p
    s1: int  # sum of even-index inverse powers of v
    s2: int  # sum of odd-index inverse powers of v
    big_v: int  # -(s1 - s2)
    ok: bool

    def to_json_obj(self):
        return {
            "p": self.p,
            "v": self.v,
            "q_at_minus_one": self.q_at_minus_one,
            "s1": self.s1,
            "s2": self.s2,
            "V": self.big_v,
            "ok": self.ok,
        }


def b_half_check(p: int, v: int | None = None) -> HalfBernoulliCheck:
    """For p = 3 mod 4: Q(v^((p-1)/2)) is nonzero mod p, and the integer
    identities behind it hold: S1 + S2 = p(p-1)/2 (odd), V = -(S1 - S2)
    nonzero with |V| < p(p-1)/2."""
    if p % 4 != 3:
        raise ValueError("hypothesis requires (p-1)/2 odd, i.e. p = 3 mod 4")
    if v is None:
        v = primitive_root(p)
    value = fp_gr_eval(polynomial_Q(p, v), canon_power(v, (p - 1) // 2, p))
    inverse_powers = [canon_power(v, -i, p) for i in range(p - 1)]
    s1 = sum(inverse_powers[0::2])
    s2 = sum(inverse_powers[1::2])
    big_v = -(s1 - s2)
    ok = (
        value != 0
        and s1 + s2 == p * (p - 1) // 2
        and big_v != 0
        and abs(big_v) < p * (p - 1) // 2
    )
    return HalfBernoulliCheck(
        p=p, v=v, q_at_minus_one=value, s1=s1, s2=s2, big_v=big_v, ok=ok
    )


def delta_floor_form(p: int, v: int):
    """Independent form of the deltas: -floor(v^(-i) * v / p)."""
    return [-((canon_power(v, -i, p) * v) // p) for i in range(p - 1)]


def scan_range(p_max: int, v_choice=None):
    """RegularityVerdicts for every odd prime p <= p_max, ascending."""
    out = []
    for p in range(3, p_max + 1):
        if is_prime(p):
            out.append(q_root_scan(p, v_choice(p) if v_choice else None))
    return out


# delta_coeffs is re-exported for callers that cross-check the floor form
__all__ = [
    "bernoulli_fraction",
    "bernoulli_mod",
    "bernoulli_mod_p",
    "irregular_indices",
    "RegularityVerdict",
    "q_root_scan",
    "HalfBernoulliCheck",
    "b_half_check",
    "delta_floor_form",
    "delta_coeffs",
    "scan_range",
]
