"""Modular arithmetic, primitive roots, and the residue fields F_{q^f}.

Field elements are coefficient tuples over F_q in the polynomial basis of
a fixed monic irreducible modulus; a :class:`FieldDesc` bundles the
modulus together with the distinguished element of multiplicative order p
that pins down the p-th power residue character.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

# Deterministic Miller-Rabin witness set, valid for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MILLER_RABIN_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
# Beyond the deterministic bound: first 40 primes as fixed witnesses.
_MR_EXTRA_WITNESSES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139,
    149, 151, 157, 163, 167, 173,
)

MILLER_RABIN_WITNESS_COUNT = len(_MR_EXTRA_WITNESSES)


def _miller_rabin(n: int, witnesses) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in witnesses:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: trial division for small n, Miller-Rabin above.

    Deterministic for n < 2^64 (and in fact below 3.3e24); for larger n a
    fixed list of 40 prime witnesses is used so results stay reproducible.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < MILLER_RABIN_DETERMINISTIC_BOUND:
        return _miller_rabin(n, _MR_WITNESSES)
    return _miller_rabin(n, _MR_EXTRA_WITNESSES)


def factorize(n: int) -> dict:
    """Trial-division factorization, returns {prime: exponent}.

    Only meant for the desk-scale group orders that appear here (p-1,
    q^f-1 and the like); do not feed it cryptographic-size integers.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    for d in (2, 3):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 5
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2 if d % 6 == 5 else 4
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in (Z/pZ)^* for prime p."""
    a %= p
    if a == 0:
        raise ValueError("order of 0 is undefined")
    e = p - 1
    for ell in factorize(p - 1):
        while e % ell == 0 and pow(a, e // ell, p) == 1:
            e //= ell
    return e


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/pZ)^* for an odd prime p.

    The smallest-root convention makes every object built downstream of a
    primitive root deterministic.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    cofactors = [(p - 1) // ell for ell in factorize(p - 1)]
    for v in range(2, p):
        if all(pow(v, c, p) != 1 for c in cofactors):
            return v
    raise AssertionError("unreachable: (Z/pZ)^* is cyclic")


def canon_power(v: int, k: int, p: int) -> int:
    """Representative of v^k mod p in [1, p-1]; negative k means the
    inverse power."""
    if v % p == 0:
        raise ValueError(f"{v} is divisible by {p}")
    r = pow(v % p, k, p)
    assert 1 <= r <= p - 1
    return r


# ---------------------------------------------------------------------------
# F_{q^f} in the polynomial basis


@dataclass(frozen=True)
class FieldDesc:
    """The residue field of a prime of Z[zeta_p] above q.

    f is the multiplicative order of q mod p, `modulus` a monic irreducible
    of degree f over F_q (coefficients low-to-high, length f+1; for f=1 the
    polynomial x is used and elements are plain residues), `generator` a
    generator of the multiplicative group found by lexicographic search,
    and `zeta_p_image` = generator^((q^f-1)/p), of order exactly p.

    Picking zeta_p_image IS picking the prime ideal: it fixes the image of
    zeta_p in the residue field, hence which conjugate ideal the character
    belongs to.
    """

    p: int
    q: int
    f: int
    modulus: tuple
    generator: tuple
    zeta_p_image: tuple

    @property
    def order(self) -> int:
        return self.q ** self.f


def _poly_trim(a):
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _poly_mulmod(a, b, modulus, q):
    f = len(modulus) - 1
    conv = [0] * (2 * f - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    for e in range(2 * f - 2, f - 1, -1):
        c = conv[e] % q
        if c:
            for i in range(f):
                conv[e - f + i] -= c * modulus[i]
        conv[e] = 0
    return tuple(c % q for c in conv[:f])


def _poly_powmod(a, e, modulus, q):
    f = len(modulus) - 1
    result = (1,) + (0,) * (f - 1)
    base = tuple(a) + (0,) * (f - len(a))
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, q)
        base = _poly_mulmod(base, base, modulus, q)
        e >>= 1
    return result


def _poly_gcd(a, b, q):
    a = list(_poly_trim(a))
    b = list(_poly_trim(b))
    while b:
        # reduce a mod b (b made monic on the fly)
        inv_lead = pow(b[-1], -1, q)
        while len(a) >= len(b) and a:
            c = a[-1] * inv_lead % q
            shift = len(a) - len(b)
            for i, x in enumerate(b):
                a[shift + i] = (a[shift + i] - c * x) % q
            a = list(_poly_trim(a))
        a, b = b, a
    return tuple(a)


def _is_irreducible(modulus, q, f):
    # x^(q^f) == x mod modulus, and x^(q^(f/ell)) - x coprime to modulus
    x = (0, 1) + (0,) * (f - 2) if f >= 2 else (0,)
    if _poly_powmod(x, q ** f, modulus, q) != x:
        return False
    for ell in factorize(f):
        frob = _poly_powmod(x, q ** (f // ell), modulus, q)
        diff = tuple((frob[i] - x[i]) % q for i in range(f))
        if len(_poly_gcd(diff, modulus, q)) != 1:
            return False
    return True


def _find_modulus(q, f):
    # monic x^f + sum c_i x^i, low coefficients enumerated as base-q digits
    for n in range(q ** f):
        digits = []
        m = n
        for _ in range(f):
            digits.append(m % q)
            m //= q
        if digits[0] == 0:
            continue
        modulus = tuple(digits) + (1,)
        if _is_irreducible(modulus, q, f):
            return modulus
    raise AssertionError(f"no irreducible degree-{f} polynomial over F_{q}")


def _find_generator(fd_modulus, q, f):
    group_order = q ** f - 1
    cofactors = [group_order // ell for ell in factorize(group_order)]
    one = (1,) + (0,) * (f - 1)
    for coeffs in product(range(q), repeat=f):
        # product() varies the last coordinate fastest; reverse so the
        # constant coefficient is the fastest-moving digit.
        cand = tuple(reversed(coeffs))
        if all(c == 0 for c in cand):
            continue
        if all(_poly_powmod(cand, c, fd_modulus, q) != one for c in cofactors):
            return cand
    raise AssertionError("multiplicative group of a finite field is cyclic")


def field_make(p: int, q: int) -> FieldDesc:
    """Build the residue field description for a prime q =/= p.

    f is computed as the multiplicative order of q mod p; the modulus and
    group generator are found by deterministic lexicographic search.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"p={p} is not an odd prime")
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if q == p:
        raise ValueError("q must differ from p")
    f = multiplicative_order(q, p)
    if f == 1:
        modulus = (0, 1)
        g0 = (primitive_root(q) if q > 2 else 1,)
    else:
        modulus = _find_modulus(q, f)
        g0 = _find_generator(modulus, q, f)
    zeta = _poly_powmod(g0, (q ** f - 1) // p, modulus, q)
    fd = FieldDesc(p=p, q=q, f=f, modulus=modulus, generator=g0, zeta_p_image=zeta)
    assert _ff_order_is_p(fd), "zeta_p_image must have order exactly p"
    return fd


def _ff_order_is_p(fd):
    one = (1,) + (0,) * (fd.f - 1)
    return fd.zeta_p_image != one and ff_pow(fd.zeta_p_image, fd.p, fd) == one


def ff_mul(a, b, fd: FieldDesc):
    return _poly_mulmod(a, b, fd.modulus, fd.q)


def ff_pow(a, e, fd: FieldDesc):
    return _poly_powmod(a, e, fd.modulus, fd.q)


def ff_elements(fd: FieldDesc):
    """All nonzero field elements, in a fixed deterministic order."""
    zero = (0,) * fd.f
    for coeffs in product(range(fd.q), repeat=fd.f):
        cand = tuple(reversed(coeffs))
        if cand != zero:
            yield cand


def ff_trace(x, fd: FieldDesc) -> int:
    """Trace down to the prime field: x + x^q + ... + x^(q^(f-1)), as a
    residue mod q."""
    acc = list(x) + [0] * (fd.f - len(x))
    t = tuple(acc)
    for _ in range(fd.f - 1):
        t = ff_pow(t, fd.q, fd)
        for i in range(fd.f):
            acc[i] = (acc[i] + t[i]) % fd.q
    if any(c % fd.q for c in acc[1:]):
        raise AssertionError("trace landed outside the prime field")
    return acc[0] % fd.q


@lru_cache(maxsize=None)
def _zeta_power_table(fd: FieldDesc):
    table = {}
    cur = (1,) + (0,) * (fd.f - 1)
    for c in range(fd.p):
        table[cur] = c
        cur = ff_mul(cur, fd.zeta_p_image, fd)
    return table


def residue_char_exponent(x, fd: FieldDesc) -> int:
    """Exponent c with x^((q^f-1)/p) = zeta_p_image^c, for nonzero x.

    The residue character used in the Gauss sum is the inverse one,
    zeta_p^(-c); callers negate the exponent themselves.
    """
    x = tuple(x) + (0,) * (fd.f - len(x))
    if all(c % fd.q == 0 for c in x):
        raise ValueError("character undefined at 0")
    y = ff_pow(x, (fd.order - 1) // fd.p, fd)
    table = _zeta_power_table(fd)
    if y not in table:
        raise AssertionError("p-th power residue landed outside <zeta_p_image>")
    return table[y]


def smallest_prime_with_order(p: int, f: int, limit: int = 100_000) -> int:
    """Smallest prime q with multiplicative order f mod p (q =/= p)."""
    if (p - 1) % f != 0:
        raise ValueError(f"{f} does not divide p-1={p - 1}")
    q = 2
    while q < limit:
        if q != p and is_prime(q) and multiplicative_order(q, p) == f:
            return q
        q += 1
    raise ValueError(f"no prime of order {f} mod {p} below {limit}")
