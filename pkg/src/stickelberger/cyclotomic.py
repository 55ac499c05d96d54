"""Exact arithmetic in Z[zeta_p] and Z[zeta_pq], plus the two valuations
the verification suites run on: the lambda-adic one at the prime over p,
and split-prime valuations over q realized through Hensel-lifted roots of
the p-th cyclotomic polynomial.

Elements are kept in the reduced power basis: zeta_p^0..zeta_p^(p-2),
using zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  All coefficients are
arbitrary-precision Python ints.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, primitive_root


class PrecisionExhausted(RuntimeError):
    """A q-adic evaluation needed more precision than the configured cap."""


class ValuationCapExceeded(RuntimeError):
    """A lambda-adic valuation exceeded its cap without terminating."""


def _reduce_exponents(p, vec):
    """Fold a coefficient vector indexed by exponents 0..len-1 (len < 2p-1)
    into the reduced basis of length p-1."""
    out = list(vec[: p - 1]) + [0] * max(0, p - 1 - len(vec))
    for e in range(p, len(vec)):
        out[e - p] += vec[e]
    if len(vec) >= p:
        c = vec[p - 1]
        if c:
            for i in range(p - 1):
                out[i] -= c
    return out


class CycInt:
    """Element of Z[zeta_p] as a length-(p-1) integer coefficient vector."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p, k=1):
        """zeta_p^k, any integer k."""
        vec = [0] * p
        vec[k % p] = 1
        return cls(p, _reduce_exponents(p, vec))

    def __repr__(self):
        return f"CycInt(p={self.p}, {self.coeffs})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return other
        raise TypeError(f"cannot combine CycInt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        conv = [0] * (2 * p - 3)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        return CycInt(p, _reduce_exponents(p, conv))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("only nonnegative exponents")
        result = CycInt.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def galois(self, t):
        """Apply zeta -> zeta^t, gcd(t, p) = 1."""
        return galois_apply(t, self)

    def conj(self):
        return galois_apply(self.p - 1, self)

    def content_valuation(self, ell):
        """Largest e with ell^e dividing every coefficient (0 element -> inf)."""
        if self.is_zero():
            return math.inf
        e = 0
        coeffs = self.coeffs
        while all(c % ell == 0 for c in coeffs):
            coeffs = tuple(c // ell for c in coeffs)
            e += 1
        return e

    def divexact_int(self, n):
        if any(c % n for c in self.coeffs):
            raise ValueError(f"coefficients not divisible by {n}")
        return CycInt(self.p, tuple(c // n for c in self.coeffs))

    def evaluate_mod(self, x, modulus):
        """Value of the coefficient polynomial at zeta = x, mod `modulus`."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % modulus
        return acc

    def to_json_obj(self):
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj):
        return cls(obj["p"], tuple(int(c) for c in obj["coeffs"]))


def galois_apply(t, a: CycInt) -> CycInt:
    """zeta_p -> zeta_p^t on a CycInt; t must be a unit mod p."""
    p = a.p
    if t % p == 0:
        raise ValueError("t must be coprime to p")
    vec = [0] * p
    for i, c in enumerate(a.coeffs):
        vec[(t * i) % p] += c
    return CycInt(p, _reduce_exponents(p, vec))


def norm(a: CycInt) -> int:
    """Product of all p-1 Galois conjugates, a rational integer."""
    if a.is_zero():
        raise ValueError("norm of 0 is degenerate")
    p = a.p
    acc = a
    for t in range(2, p):
        acc = acc * galois_apply(t, a)
    return acc.rational_value()


@lru_cache(maxsize=None)
def lambda_element(p) -> CycInt:
    """lambda = zeta_p - 1, the generator of the prime over p."""
    return CycInt.zeta(p) - 1


@lru_cache(maxsize=None)
def lambda_complement(p) -> CycInt:
    """M with lambda * M = p, namely prod_{k=2}^{p-1} (zeta^k - 1)."""
    acc = CycInt.from_int(p, 1)
    for k in range(2, p):
        acc = acc * (CycInt.zeta(p, k) - 1)
    return acc


def lambda_divexact(a: CycInt) -> CycInt:
    """Exact division by lambda: a * M / p with integer coefficient checks."""
    return (a * lambda_complement(a.p)).divexact_int(a.p)


def lambda_divides(a: CycInt) -> bool:
    # Z[zeta]/(lambda) = F_p via zeta -> 1
    return sum(a.coeffs) % a.p == 0


def lambda_valuation(a: CycInt, cap=None):
    """lambda-adic valuation; math.inf for 0.  Raises ValuationCapExceeded
    past the cap (default 4p)."""
    if a.is_zero():
        return math.inf
    if cap is None:
        cap = 4 * a.p
    v = 0
    while lambda_divides(a):
        a = lambda_divexact(a)
        v += 1
        if v > cap:
            raise ValuationCapExceeded(f"lambda valuation exceeded cap {cap}")
    return v


# ---------------------------------------------------------------------------
# Z[zeta_pq]


class BiCycInt:
    """Element of Z[zeta_pq] as a (p-1) x (q-1) integer coefficient matrix;
    entry (i, j) multiplies zeta_p^i zeta_q^j.  Reduced modulo both
    cyclotomic polynomials."""

    __slots__ = ("p", "q", "coeffs")

    def __init__(self, p, q, coeffs):
        coeffs = tuple(tuple(int(c) for c in row) for row in coeffs)
        if len(coeffs) != p - 1 or any(len(row) != q - 1 for row in coeffs):
            raise ValueError(f"need a ({p - 1})x({q - 1}) matrix")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("BiCycInt is immutable")

    @classmethod
    def from_int(cls, p, q, n):
        rows = [[0] * (q - 1) for _ in range(p - 1)]
        rows[0][0] = n
        return cls(p, q, rows)

    @classmethod
    def from_cyc(cls, a: CycInt, q):
        rows = [[0] * (q - 1) for _ in range(a.p - 1)]
        for i, c in enumerate(a.coeffs):
            rows[i][0] = c
        return cls(a.p, q, rows)

    @classmethod
    def from_exponent_grid(cls, p, q, grid):
        """Reduce a full p x q exponent grid (zeta_p^i zeta_q^j for i < p,
        j < q) into the basis."""
        top = grid[p - 1]
        rows = [
            [grid[i][j] - top[j] - grid[i][q - 1] + top[q - 1] for j in range(q - 1)]
            for i in range(p - 1)
        ]
        return cls(p, q, rows)

    def __repr__(self):
        return f"BiCycInt(p={self.p}, q={self.q}, {self.coeffs})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiCycInt.from_int(self.p, self.q, other)
        if not isinstance(other, BiCycInt):
            return NotImplemented
        return (self.p, self.q, self.coeffs) == (other.p, other.q, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.q, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, int):
            return BiCycInt.from_int(self.p, self.q, other)
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return BiCycInt.from_cyc(other, self.q)
        if isinstance(other, BiCycInt):
            if (other.p, other.q) != (self.p, self.q):
                raise ValueError("mixed cyclotomic orders")
            return other
        raise TypeError(f"cannot combine BiCycInt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return BiCycInt(
            self.p,
            self.q,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.coeffs, other.coeffs)
            ),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return BiCycInt(
            self.p,
            self.q,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.coeffs, other.coeffs)
            ),
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return BiCycInt(
            self.p, self.q, tuple(tuple(-a for a in row) for row in self.coeffs)
        )

    def __mul__(self, other):
        other = self._coerce(other)
        p, q = self.p, self.q
        conv = [[0] * (2 * q - 3) for _ in range(2 * p - 3)]
        for i, ra in enumerate(self.coeffs):
            for j, a in enumerate(ra):
                if a:
                    for k, rb in enumerate(other.coeffs):
                        for l, b in enumerate(rb):
                            if b:
                                conv[i + k][j + l] += a * b
        # reduce the zeta_q direction row by row, then the zeta_p direction
        half = [_reduce_exponents(q, row) for row in conv]
        cols = [_reduce_exponents(p, [half[i][j] for i in range(2 * p - 3)]) for j in range(q - 1)]
        rows = [[cols[j][i] for j in range(q - 1)] for i in range(p - 1)]
        return BiCycInt(p, q, rows)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("only nonnegative exponents")
        result = BiCycInt.from_int(self.p, self.q, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return all(c == 0 for row in self.coeffs for c in row)

    def galois(self, s=1, t=1):
        """zeta_p -> zeta_p^s, zeta_q -> zeta_q^t."""
        p, q = self.p, self.q
        if s % p == 0 or t % q == 0:
            raise ValueError("galois exponents must be units")
        grid = [[0] * q for _ in range(p)]
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    grid[(s * i) % p][(t * j) % q] += c
        return BiCycInt.from_exponent_grid(p, q, grid)

    def conj(self):
        """Complex conjugation: inverts both roots of unity."""
        return self.galois(self.p - 1, self.q - 1)

    def in_zeta_p_subring(self):
        return all(c == 0 for row in self.coeffs for c in row[1:])

    def to_cyc(self) -> CycInt:
        if not self.in_zeta_p_subring():
            raise ValueError("element has nonzero zeta_q part")
        return CycInt(self.p, tuple(row[0] for row in self.coeffs))

    def to_json_obj(self):
        return {
            "p": self.p,
            "q": self.q,
            "coeffs": [[str(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls(
            obj["p"], obj["q"], [[int(c) for c in row] for row in obj["coeffs"]]
        )


def bi_lambda_divides(a: BiCycInt) -> bool:
    # Z[zeta_pq]/(lambda) = Z[zeta_q]/(p): collapse zeta_p -> 1, reduce mod p
    return all(sum(row[j] for row in a.coeffs) % a.p == 0 for j in range(a.q - 1))


def bi_lambda_divexact(a: BiCycInt) -> BiCycInt:
    b = a * lambda_complement(a.p)
    if any(c % a.p for row in b.coeffs for c in row):
        raise ValueError("not divisible by lambda")
    return BiCycInt(a.p, a.q, tuple(tuple(c // a.p for c in row) for row in b.coeffs))


def bi_lambda_valuation(a: BiCycInt, cap=None):
    """Number of exact divisions by lambda = zeta_p - 1 in Z[zeta_pq]."""
    if a.is_zero():
        return math.inf
    if cap is None:
        cap = 4 * a.p
    v = 0
    while bi_lambda_divides(a):
        a = bi_lambda_divexact(a)
        v += 1
        if v > cap:
            raise ValuationCapExceeded(f"lambda valuation exceeded cap {cap}")
    return v


# ---------------------------------------------------------------------------
# Degree-1 primes over q via Hensel-lifted roots of Phi_p


@dataclass(frozen=True)
class HenselRoot:
    """A root of Phi_p modulo q^precision, labelling the prime ideal
    (q, zeta_p - root).  `label` = t is the discrete log of the root with
    respect to the smallest mod-q root, fixing the conjugate dictionary."""

    p: int
    q: int
    precision: int
    root: int
    label: int

    @property
    def modulus(self):
        return self.q ** self.precision


def _phi_eval(p, r, modulus):
    acc = 0
    power = 1
    for _ in range(p):
        acc = (acc + power) % modulus
        power = power * r % modulus
    return acc


def _phi_derivative_eval(p, r, modulus):
    acc = 0
    power = 1
    for i in range(1, p):
        acc = (acc + i * power) % modulus
        power = power * r % modulus
    return acc


def _newton_lift(p, q, root_mod_q, precision):
    target = q ** precision
    modulus = q
    r = root_mod_q % q
    while modulus < target:
        modulus = min(modulus * modulus, target)
        d = _phi_derivative_eval(p, r, modulus)
        r = (r - _phi_eval(p, r, modulus) * pow(d, -1, modulus)) % modulus
    assert _phi_eval(p, r, target) == 0
    return r


def hensel_roots(p, q, precision=None):
    """All p-1 roots of Phi_p mod q^precision for a totally split q
    (q = 1 mod p), labelled by discrete log base the smallest root."""
    if not is_prime(p) or not is_prime(q) or p == q:
        raise ValueError("p and q must be distinct primes")
    if (q - 1) % p != 0:
        raise ValueError(f"q={q} is not 1 mod p={p}: no degree-1 splitting")
    if precision is None:
        precision = 2 * p + 4
    base = pow(primitive_root(q) if q > 2 else 1, (q - 1) // p, q)
    residues = sorted(pow(base, t, q) for t in range(1, p))
    reference = residues[0]
    labels = {pow(reference, t, q): t for t in range(1, p)}
    roots = [
        HenselRoot(
            p=p,
            q=q,
            precision=precision,
            root=_newton_lift(p, q, r, precision),
            label=labels[r],
        )
        for r in residues
    ]
    roots.sort(key=lambda h: h.label)
    return roots


def _residue_valuation(y, q, precision):
    """q-adic valuation of a residue y mod q^precision; returns precision
    when y = 0 (meaning: at least that much)."""
    if y == 0:
        return precision
    v = 0
    while y % q == 0:
        y //= q
        v += 1
    return v


def ideal_valuation(a: CycInt, h: HenselRoot, max_precision=None) -> int:
    """Valuation of a at the degree-1 prime ideal labelled by h.

    Rational content q^e is stripped first and e added back, so elements
    divisible by q as integers do not exhaust precision.  Precision doubles
    on demand up to 16p before PrecisionExhausted is raised.
    """
    if a.is_zero():
        raise ValueError("valuation of 0 requested")
    if a.p != h.p:
        raise ValueError("mismatched p")
    if max_precision is None:
        max_precision = 16 * h.p
    q = h.q
    e = a.content_valuation(q)
    reduced = a.divexact_int(q ** e) if e else a
    precision, root = h.precision, h.root
    while True:
        modulus = q ** precision
        y = reduced.evaluate_mod(root, modulus)
        v = _residue_valuation(y, q, precision)
        if v < precision - 1:
            return e + v
        precision *= 2
        if precision > max_precision:
            raise PrecisionExhausted(
                f"valuation at q={q} needs precision beyond {max_precision}"
            )
        root = _newton_lift(h.p, q, root % q, precision)
