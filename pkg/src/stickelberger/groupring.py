"""Z[G_p] arithmetic for the Galois group of the p-th cyclotomic field,
and the specific elements the verification suites revolve around: the
Stickelberger element S, its power-basis form P, the quotient polynomials
Q and Q1, and the folded element S2 used for inertial degree f > 1.

Coefficient i always multiplies sigma^i where sigma: zeta -> zeta^v for
the chosen primitive root v; exponent arithmetic is mod p-1.
"""

from .arith import canon_power, multiplicative_order
from .cyclotomic import CycInt, galois_apply


class GroupRingElt:
    """Element of Z[G_p] as a length-(p-1) integer vector over sigma^i."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("GroupRingElt is immutable")

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def sigma_power(cls, p, i, coefficient=1):
        vec = [0] * (p - 1)
        vec[i % (p - 1)] = coefficient
        return cls(p, vec)

    def __repr__(self):
        return f"GroupRingElt(p={self.p}, {self.coeffs})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElt.from_int(self.p, other)
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, int):
            return GroupRingElt.from_int(self.p, other)
        if isinstance(other, GroupRingElt):
            if other.p != self.p:
                raise ValueError("mixed group rings")
            return other
        raise TypeError(f"cannot combine GroupRingElt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return GroupRingElt(
            self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return GroupRingElt(
            self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GroupRingElt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElt(self.p, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        n = self.p - 1
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return GroupRingElt(self.p, out)

    __rmul__ = __mul__

    def scale_divexact(self, n):
        if any(c % n for c in self.coeffs):
            raise ValueError(f"coefficients not divisible by {n}")
        return GroupRingElt(self.p, tuple(c // n for c in self.coeffs))

    def coefficient_sum(self):
        return sum(self.coeffs)

    def support_size(self):
        return sum(1 for c in self.coeffs if c)


def fp_gr_eval(g: GroupRingElt, x: int) -> int:
    """Evaluate sum c_i x^i mod p (as a plain polynomial value)."""
    p = g.p
    acc = 0
    for c in reversed(g.coeffs):
        acc = (acc * x + c) % p
    return acc


def _dlog_table(p, v):
    table = {}
    cur = 1
    for i in range(p - 1):
        table[cur] = i
        cur = cur * v % p
    if len(table) != p - 1:
        raise ValueError(f"{v} is not a primitive root mod {p}")
    return table


def stickelberger_S(p, v) -> GroupRingElt:
    """S = sum_t t * w_t^(-1) translated into sigma-powers.

    w_t: zeta -> zeta^t, and w_t^(-1) = sigma^i exactly when v^i = t^(-1)
    mod p, so the coefficient lands at the discrete log of t^(-1).
    """
    dlog = _dlog_table(p, v)
    coeffs = [0] * (p - 1)
    for t in range(1, p):
        coeffs[dlog[pow(t, -1, p)]] += t
    return GroupRingElt(p, coeffs)


def polynomial_P(p, v) -> GroupRingElt:
    """P(sigma) = sum_i sigma^i v^(-i) with representatives in [1, p-1]."""
    _dlog_table(p, v)
    return GroupRingElt(p, [canon_power(v, -i, p) for i in range(p - 1)])


def delta_coeffs(p, v):
    """The quotient coefficients delta_i = (v^(-(i-1)) - v^(-i) v)/p,
    exact integers in (-p, 0] with delta_0 = 0."""
    deltas = []
    for i in range(p - 1):
        num = canon_power(v, -(i - 1), p) - canon_power(v, -i, p) * v
        assert num % p == 0, "delta numerator must be divisible by p"
        d = num // p
        assert -p < d <= 0, f"delta_{i}={d} out of (-p, 0]"
        deltas.append(d)
    assert deltas[0] == 0, "delta_0 must vanish"
    return deltas


def polynomial_Q(p, v) -> GroupRingElt:
    """Q = sum delta_i sigma^i, satisfying P * (sigma - v) = p * Q."""
    return GroupRingElt(p, delta_coeffs(p, v))


def q_identity_holds(p, v) -> bool:
    """Exact check of P * (sigma - v) = p * Q in Z[G_p]."""
    P = polynomial_P(p, v)
    Q = polynomial_Q(p, v)
    sigma_minus_v = GroupRingElt.sigma_power(p, 1) - GroupRingElt.from_int(p, v)
    return P * sigma_minus_v == Q * p


def polynomial_Q1_factorization(p, v):
    """Q1 = (1 - sigma) * (sum_{i<=(p-3)/2} delta_i sigma^i)
           + (1 - v) sigma^((p-1)/2),
    together with the verdict of the exact factorization
    Q = Q1 * (1 + sigma + ... + sigma^((p-3)/2))."""
    deltas = delta_coeffs(p, v)
    half = (p - 1) // 2
    low = [0] * (p - 1)
    for i in range(half):
        low[i] = deltas[i]
    low_part = GroupRingElt(p, low)
    one_minus_sigma = GroupRingElt.from_int(p, 1) - GroupRingElt.sigma_power(p, 1)
    q1 = one_minus_sigma * low_part + GroupRingElt.sigma_power(p, half, 1 - v)
    ladder = GroupRingElt(p, [1] * half + [0] * (p - 1 - half))
    verdict = q1 * ladder == polynomial_Q(p, v)
    return q1, verdict


def polynomial_S2(p, q, v) -> GroupRingElt:
    """Folded Stickelberger element for inertial degree f > 1:
    coefficient i is (sum_j v^(-(i+jm)))/p for i < m = (p-1)/f, an exact
    integer."""
    f = multiplicative_order(q, p)
    if f == 1:
        raise ValueError("S2 is undefined for f = 1; use S")
    m = (p - 1) // f
    coeffs = [0] * (p - 1)
    for i in range(m):
        block = sum(canon_power(v, -(i + j * m), p) for j in range(f))
        assert block % p == 0, "S2 coefficient must be integral"
        coeffs[i] = block // p
    return GroupRingElt(p, coeffs)


def s2_refold_identity_holds(p, q, v) -> bool:
    """p * S2[i] must equal the sum of S coefficients over exponents
    congruent to i mod m."""
    f = multiplicative_order(q, p)
    m = (p - 1) // f
    s = stickelberger_S(p, v)
    s2 = polynomial_S2(p, q, v)
    for i in range(m):
        if p * s2.coeffs[i] != sum(s.coeffs[i + j * m] for j in range(f)):
            return False
    return all(c == 0 for c in s2.coeffs[m:])


def polynomial_T_reduced(p, v) -> GroupRingElt:
    """T = v^(-(p-2)) * prod_{k != 1} (sigma - v^k), expanded exactly in
    Z[x] and folded mod x^(p-1) - 1.  Coefficients grow like v^(p^2/2), so
    callers bound p themselves."""
    n = p - 1
    coeffs = [0] * n
    coeffs[0] = canon_power(v, -(p - 2), p)
    for k in range(p - 1):
        if k == 1:
            continue
        root = canon_power(v, k, p)
        shifted = [0] * n
        for i, c in enumerate(coeffs):
            if c:
                shifted[(i + 1) % n] += c
                shifted[i] -= root * c
        coeffs = shifted
    return GroupRingElt(p, coeffs)


def polynomial_R(p, v) -> GroupRingElt:
    """R with P = T + p*R; exact, degree < p-2."""
    diff = polynomial_P(p, v) - polynomial_T_reduced(p, v)
    r = diff.scale_divexact(p)
    assert r.coeffs[p - 2] == 0, "R must have degree < p-2"
    return r


def split_pos_neg(g: GroupRingElt):
    """g = pos - neg with both parts nonnegative."""
    pos = GroupRingElt(g.p, tuple(c if c > 0 else 0 for c in g.coeffs))
    neg = GroupRingElt(g.p, tuple(-c if c < 0 else 0 for c in g.coeffs))
    return pos, neg


def apply_exponent(g: GroupRingElt, a: CycInt, v: int) -> CycInt:
    """Galois-twisted exponentiation a^(sum c_i sigma^i) with sigma:
    zeta -> zeta^v; every coefficient must be nonnegative."""
    if g.p != a.p:
        raise ValueError("mismatched p")
    if any(c < 0 for c in g.coeffs):
        raise ValueError(
            "negative exponent coefficient; split into a numerator/denominator "
            "pair with split_pos_neg first"
        )
    result = CycInt.from_int(a.p, 1)
    for i, c in enumerate(g.coeffs):
        if c:
            result = result * galois_apply(canon_power(v, i, a.p), a) ** c
    return result


def polynomial_Qd(p, v, d) -> GroupRingElt:
    """The 0/1 annihilator polynomial from the cyclotomic-function family:
    Q_d = sum over i with v^((p-1)/2-i) + v^((p-1)/2-i+ind_v(d)) > p.

    Provided for exploration; no annihilation oracle is available at desk
    scale, so nothing downstream depends on it.
    """
    if not 1 <= d <= p - 2:
        raise ValueError("d must lie in [1, p-2]")
    ind = _dlog_table(p, v)[d % p]
    half = (p - 1) // 2
    coeffs = [0] * (p - 1)
    for i in range(p - 1):
        if canon_power(v, half - i, p) + canon_power(v, half - i + ind, p) > p:
            coeffs[i] = 1
    return GroupRingElt(p, coeffs)
