"""Principality congruences for prime ideals of inertial degree f > 1, the
half-degree corollary, and the norm-probe search over elements congruent
to a rational integer mod lambda^(p+1).

Certificates are one-directional by design: a full set of nonvanishing
congruence values certifies p-principality, but nothing here ever claims
non-principality.
"""

from dataclasses import dataclass, field
from itertools import product

from .arith import (
    MILLER_RABIN_WITNESS_COUNT,
    MILLER_RABIN_DETERMINISTIC_BOUND,
    canon_power,
    is_prime,
    multiplicative_order,
    primitive_root,
)
from .cyclotomic import CycInt, lambda_element, norm
from .groupring import polynomial_S2


@dataclass(frozen=True)
class PrincipalityReport:
    p: int
    q: int
    f: int
    m: int
    v: int
    s2_coeffs: tuple
    sigma_values: dict  # l in [1, m-1] -> sum_i c_i v^(lfi) mod p
    full_orbit_sum_ok: bool  # the l = m identity: p * sum c_i = p(p-1)/2
    certificate: str  # "p-principal" / "inconclusive"

    def to_json_obj(self):
        return {
            "p": self.p,
            "q": self.q,
            "f": self.f,
            "m": self.m,
            "v": self.v,
            "s2_coeffs": list(self.s2_coeffs),
            "sigma_values": {str(l): val for l, val in sorted(self.sigma_values.items())},
            "full_orbit_sum_ok": self.full_orbit_sum_ok,
            "certificate": self.certificate,
        }


def principality_test(p: int, q: int, v: int | None = None) -> PrincipalityReport:
    """Evaluate the m-1 congruences sum_i c_i v^(lfi) mod p built from the
    folded Stickelberger coefficients c_i.

    All values nonzero certifies that the prime ideals over q are
    p-principal; a vanishing value is inconclusive.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if q == p:
        raise ValueError("q must differ from p")
    f = multiplicative_order(q, p)
    if f == 1:
        raise ValueError("test undefined for f = 1 (use other means)")
    if v is None:
        v = primitive_root(p)
    m = (p - 1) // f
    s2 = polynomial_S2(p, q, v)
    coeffs = s2.coeffs[:m]
    sigma_values = {}
    for l in range(1, m):
        x = canon_power(v, l * f, p)
        sigma_values[l] = sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p
    full_orbit_ok = p * sum(coeffs) == p * (p - 1) // 2
    certificate = (
        "p-principal"
        if full_orbit_ok and all(val != 0 for val in sigma_values.values())
        else "inconclusive"
    )
    return PrincipalityReport(
        p=p,
        q=q,
        f=f,
        m=m,
        v=v,
        s2_coeffs=tuple(coeffs),
        sigma_values=sigma_values,
        full_orbit_sum_ok=full_orbit_ok,
        certificate=certificate,
    )


@dataclass(frozen=True)
class HalfDegreeVerdict:
    p: int
    v: int
    sigma: int  # the single l = 1 congruence value, an exact integer
    sigma_mod_p: int
    verdict: bool  # True: every prime ideal with f = (p-1)/2 is p-principal

    def to_json_obj(self):
        return {
            "p": self.p,
            "v": self.v,
            "sigma": self.sigma,
            "sigma_mod_p": self.sigma_mod_p,
            "verdict": self.verdict,
        }


def half_degree_corollary(p: int, v: int | None = None) -> HalfDegreeVerdict:
    """For p = 3 mod 4 and f = (p-1)/2 (so m = 2): the single congruence
    value is [sum v^(-2j)]/p - [sum v^(-(1+2j))]/p, nonzero mod p by the
    parity of p(p-1)/2."""
    if p % 4 != 3:
        raise ValueError("corollary requires p = 3 mod 4")
    if p == 3:
        raise ValueError("p = 3 gives f = 1, outside the f > 1 hypothesis")
    if v is None:
        v = primitive_root(p)
    even_orbit = sum(canon_power(v, -2 * j, p) for j in range((p - 1) // 2))
    odd_orbit = sum(canon_power(v, -(1 + 2 * j), p) for j in range((p - 1) // 2))
    if even_orbit % p or odd_orbit % p:
        raise AssertionError("orbit sums must be divisible by p")
    sigma = even_orbit // p - odd_orbit // p
    return HalfDegreeVerdict(
        p=p, v=v, sigma=sigma, sigma_mod_p=sigma % p, verdict=sigma % p != 0
    )


@dataclass(frozen=True)
class ProbeWitness:
    a: int
    x_coeffs: tuple
    norm_q: int
    residue: int  # p^((q-1)/p) mod q
    passes: bool

    def to_json_obj(self):
        return {
            "a": self.a,
            "x_coeffs": list(self.x_coeffs),
            "q": str(self.norm_q),
            "residue": str(self.residue),
            "passes": self.passes,
        }


@dataclass
class ProbeReport:
    p: int
    search_bound: int
    coeff_bound: int
    candidates_tested: int
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    status: str = "ok"
    probabilistic_primality_used: bool = False

    def to_json_obj(self):
        return {
            "p": self.p,
            "search_bound": self.search_bound,
            "coeff_bound": self.coeff_bound,
            "candidates_tested": self.candidates_tested,
            "witnesses": [w.to_json_obj() for w in self.witnesses],
            "counterexamples": [w.to_json_obj() for w in self.counterexamples],
            "status": self.status,
            "probabilistic_primality_used": self.probabilistic_primality_used,
            "miller_rabin_witness_count": MILLER_RABIN_WITNESS_COUNT,
        }


def _graded_lex_vectors(length, bound):
    vecs = list(product(range(-bound, bound + 1), repeat=length))
    vecs.sort(key=lambda t: (sum(abs(c) for c in t), t))
    return vecs


def principal_norm_probe(
    p: int, search_bound: int = 10_000, coeff_bound: int = 2
) -> ProbeReport:
    """Sweep q1 = a + lambda^(p+1) * x over small-coefficient x; whenever
    |norm(q1)| is a prime q, the power test p^((q-1)/p) = 1 mod q must
    pass.  Any failing witness lands in `counterexamples`.

    An exhausted sweep without prime-norm hits is reported as
    status="no candidates", not as a failure.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    shift = lambda_element(p) ** (p + 1)
    report = ProbeReport(
        p=p, search_bound=search_bound, coeff_bound=coeff_bound, candidates_tested=0
    )
    for x_vec in _graded_lex_vectors(p - 1, coeff_bound):
        if report.candidates_tested >= search_bound:
            break
        x = CycInt(p, x_vec)
        base = shift * x
        for a in range(1, p):
            if report.candidates_tested >= search_bound:
                break
            report.candidates_tested += 1
            q1 = base + a
            n = abs(norm(q1))
            if n < 2 or not is_prime(n):
                continue
            assert n % p == 1, "a prime norm must split, so q = 1 mod p"
            if n >= MILLER_RABIN_DETERMINISTIC_BOUND:
                report.probabilistic_primality_used = True
            residue = pow(p, (n - 1) // p, n)
            witness = ProbeWitness(
                a=a, x_coeffs=tuple(x_vec), norm_q=n, residue=residue,
                passes=residue == 1,
            )
            report.witnesses.append(witness)
            if not witness.passes:
                report.counterexamples.append(witness)
    if not report.witnesses:
        report.status = "no candidates"
    return report
