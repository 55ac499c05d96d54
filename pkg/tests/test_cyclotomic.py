import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from stickelberger.arith import is_prime
from stickelberger.cyclotomic import (
    BiCycInt,
    CycInt,
    PrecisionExhausted,
    ValuationCapExceeded,
    bi_lambda_valuation,
    galois_apply,
    hensel_roots,
    ideal_valuation,
    lambda_complement,
    lambda_element,
    lambda_valuation,
    norm,
    _newton_lift,
)

SMALL_PRIMES = [3, 5, 7, 11, 13]


def random_cyc(rng, p, bound=50):
    return CycInt(p, [rng.randint(-bound, bound) for _ in range(p - 1)])


cyc_strategy = st.sampled_from(SMALL_PRIMES).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.lists(
            st.integers(min_value=-30, max_value=30),
            min_size=p - 1,
            max_size=p - 1,
        ),
    )
).map(lambda t: CycInt(t[0], t[1]))


class TestCycIntRing:
    def test_zeta_times_inverse_power(self):
        for p in SMALL_PRIMES:
            assert CycInt.zeta(p) * CycInt.zeta(p, p - 1) == 1

    def test_lambda_complement(self):
        for p in SMALL_PRIMES:
            assert lambda_element(p) * lambda_complement(p) == p

    def test_multiplicative_identity(self):
        rng = random.Random(7)
        for p in SMALL_PRIMES:
            a = random_cyc(rng, p)
            assert a * CycInt.from_int(p, 1) == a

    @settings(max_examples=150, deadline=None)
    @given(a=cyc_strategy)
    def test_add_mul_commute_with_conjugation(self, a):
        b = galois_apply(2 % a.p if a.p > 2 else 1, a)
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()

    def test_ring_axioms_random(self):
        rng = random.Random(11)
        for p in SMALL_PRIMES:
            for _ in range(30):
                a, b, c = (random_cyc(rng, p) for _ in range(3))
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a * b == b * a

    def test_mixed_p_rejected(self):
        with pytest.raises(ValueError):
            CycInt.zeta(5) * CycInt.zeta(7)

    def test_power_basis_length_enforced(self):
        with pytest.raises(ValueError):
            CycInt(5, (1, 2, 3))


class TestGalois:
    def test_identity_and_conjugation(self):
        rng = random.Random(3)
        for p in SMALL_PRIMES:
            a = random_cyc(rng, p)
            assert galois_apply(1, a) == a
            assert galois_apply(p - 1, a) == a.conj()
            assert a.conj().conj() == a

    def test_group_law(self):
        rng = random.Random(5)
        for p in SMALL_PRIMES:
            for _ in range(20):
                a = random_cyc(rng, p)
                t1 = rng.randint(1, p - 1)
                t2 = rng.randint(1, p - 1)
                lhs = galois_apply(t1, galois_apply(t2, a))
                assert lhs == galois_apply(t1 * t2 % p, a)

    def test_rejects_zero_exponent(self):
        with pytest.raises(ValueError):
            galois_apply(5, CycInt.zeta(5))


class TestNorm:
    def test_examples(self):
        assert norm(lambda_element(5)) == 5
        assert norm(lambda_element(11)) == 11
        assert norm(CycInt.from_int(5, 9)) == 9**4
        assert norm(CycInt.zeta(7)) == 1

    def test_multiplicative(self):
        rng = random.Random(17)
        for p in SMALL_PRIMES:
            for _ in range(10):
                a = random_cyc(rng, p, 9)
                b = random_cyc(rng, p, 9)
                if a.is_zero() or b.is_zero():
                    continue
                assert norm(a * b) == norm(a) * norm(b)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            norm(CycInt.from_int(5, 0))


class TestLambdaValuation:
    def test_examples(self):
        for p in (3, 5, 7):
            lam = lambda_element(p)
            assert lambda_valuation(lam ** (2 * p)) == 2 * p
            assert lambda_valuation(CycInt.from_int(p, p)) == p - 1
            assert lambda_valuation(CycInt.zeta(p) + 1) == 0

    def test_zero_is_infinite(self):
        assert lambda_valuation(CycInt.from_int(5, 0)) == math.inf

    def test_additive_on_products(self):
        rng = random.Random(23)
        for p in (3, 5, 7):
            for _ in range(20):
                a = random_cyc(rng, p, 20)
                b = random_cyc(rng, p, 20)
                if a.is_zero() or b.is_zero():
                    continue
                va, vb = lambda_valuation(a), lambda_valuation(b)
                assert lambda_valuation(a * b) == va + vb

    def test_cap_signal(self):
        lam = lambda_element(5)
        with pytest.raises(ValuationCapExceeded):
            lambda_valuation(lam ** 30, cap=10)


class TestHensel:
    def test_frozen_example_3_7(self):
        roots = hensel_roots(3, 7, 2)
        assert sorted(h.root for h in roots) == [18, 30]

    def test_count_and_defining_property(self):
        for (p, q) in [(3, 7), (5, 11), (7, 29), (11, 23)]:
            roots = hensel_roots(p, q)
            assert len(roots) == p - 1
            assert sorted(h.label for h in roots) == list(range(1, p))
            for h in roots:
                m = h.modulus
                phi = sum(pow(h.root, i, m) for i in range(p)) % m
                assert phi == 0

    def test_rejects_non_split(self):
        with pytest.raises(ValueError):
            hensel_roots(5, 3)

    def test_label_dictionary(self):
        roots = hensel_roots(5, 11)
        reference = min(h.root % 11 for h in roots)
        for h in roots:
            assert pow(reference, h.label, 11) == h.root % 11

    def test_newton_lift_agrees_with_exhaustive_search(self):
        # all roots of Phi_3 mod 7^2 by brute force
        brute = sorted(
            r for r in range(49) if (r * r + r + 1) % 49 == 0
        )
        lifted = sorted(_newton_lift(3, 7, r, 2) for r in (2, 4))
        assert brute == lifted == [18, 30]


class TestIdealValuation:
    def test_rational_q_has_valuation_one_everywhere(self):
        for (p, q) in [(3, 7), (5, 11)]:
            for h in hensel_roots(p, q):
                assert ideal_valuation(CycInt.from_int(p, q), h) == 1

    def test_unit_example(self):
        h = hensel_roots(5, 11)[0]
        assert ideal_valuation(CycInt.from_int(5, 3), h) == 0

    def test_valuation_sum_equals_norm_valuation(self):
        rng = random.Random(31)
        for (p, q) in [(3, 7), (5, 11)]:
            roots = hensel_roots(p, q)
            for trial in range(15):
                a = random_cyc(rng, p, 40)
                if a.is_zero():
                    continue
                if trial % 3 == 0:
                    a = a * q  # force nonzero rational content
                n = norm(a)
                vq = 0
                while n % q == 0:
                    n //= q
                    vq += 1
                assert sum(ideal_valuation(a, h) for h in roots) == vq

    def test_precision_retry_and_exhaustion(self):
        h = hensel_roots(3, 7, 2)[0]
        # lambda-free element with huge valuation at one ideal
        lifted_root = _newton_lift(3, 7, h.root % 7, 40)
        a = (CycInt.zeta(3) - lifted_root % 7**39) * 1  # val >= 39 at this ideal
        with pytest.raises(PrecisionExhausted):
            ideal_valuation(a, h, max_precision=16)

    def test_zero_rejected(self):
        h = hensel_roots(3, 7)[0]
        with pytest.raises(ValueError):
            ideal_valuation(CycInt.from_int(3, 0), h)


class TestBiCycInt:
    def test_ring_axioms_random(self):
        rng = random.Random(41)
        for (p, q) in [(3, 5), (5, 3), (3, 2)]:
            for _ in range(12):
                mats = [
                    BiCycInt(
                        p,
                        q,
                        [
                            [rng.randint(-9, 9) for _ in range(q - 1)]
                            for _ in range(p - 1)
                        ],
                    )
                    for _ in range(3)
                ]
                a, b, c = mats
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a * b == b * a

    def test_zeta_orders(self):
        for (p, q) in [(3, 5), (5, 3), (3, 2)]:
            zp = BiCycInt.from_cyc(CycInt.zeta(p), q)
            assert zp ** p == 1
            # zeta_q via exponent grid
            grid = [[0] * q for _ in range(p)]
            grid[0][1 % q] = 1
            zq = BiCycInt.from_exponent_grid(p, q, grid)
            assert zq ** q == 1

    def test_collapse(self):
        a = CycInt(5, (1, -2, 3, 0))
        b = BiCycInt.from_cyc(a, 7)
        assert b.in_zeta_p_subring()
        assert b.to_cyc() == a
        grid = [[0] * 7 for _ in range(5)]
        grid[1][2] = 1
        c = BiCycInt.from_exponent_grid(5, 7, grid)
        assert not c.in_zeta_p_subring()
        with pytest.raises(ValueError):
            c.to_cyc()

    def test_galois_group_law(self):
        rng = random.Random(43)
        p, q = 5, 7
        a = BiCycInt(
            p, q, [[rng.randint(-5, 5) for _ in range(q - 1)] for _ in range(p - 1)]
        )
        assert a.galois(2, 3).galois(3, 5) == a.galois(2 * 3 % p, 3 * 5 % q)
        assert a.conj().conj() == a

    def test_bi_lambda_valuation(self):
        p, q = 5, 7
        lam = BiCycInt.from_cyc(lambda_element(p), q)
        grid = [[0] * q for _ in range(p)]
        grid[0][3] = 1
        zq3 = BiCycInt.from_exponent_grid(p, q, grid)
        assert bi_lambda_valuation(lam ** 3 * zq3) == 3
        assert bi_lambda_valuation(BiCycInt.from_int(p, q, p)) == p - 1
        assert bi_lambda_valuation(zq3) == 0


class TestComplexEmbeddingOracle:
    """The embedding zeta -> exp(2 pi i / n) is a ring homomorphism, so
    float evaluation cross-checks the exact reduction kernels through a
    path that shares no code with them."""

    @staticmethod
    def _cyc_value(a):
        import cmath

        z = cmath.exp(2j * cmath.pi / a.p)
        return sum(c * z**i for i, c in enumerate(a.coeffs))

    @staticmethod
    def _bicyc_value(a):
        import cmath

        zp = cmath.exp(2j * cmath.pi / a.p)
        zq = cmath.exp(2j * cmath.pi / a.q)
        return sum(
            c * zp**i * zq**j
            for i, row in enumerate(a.coeffs)
            for j, c in enumerate(row)
        )

    def test_cyc_multiplication(self):
        rng = random.Random(53)
        for p in SMALL_PRIMES:
            for _ in range(20):
                a = random_cyc(rng, p, 12)
                b = random_cyc(rng, p, 12)
                lhs = self._cyc_value(a * b)
                rhs = self._cyc_value(a) * self._cyc_value(b)
                assert abs(lhs - rhs) < 1e-6

    def test_bicyc_multiplication(self):
        rng = random.Random(59)
        for (p, q) in [(3, 7), (5, 3), (3, 2), (5, 7)]:
            for _ in range(10):
                mats = [
                    BiCycInt(
                        p,
                        q,
                        [
                            [rng.randint(-6, 6) for _ in range(q - 1)]
                            for _ in range(p - 1)
                        ],
                    )
                    for _ in range(2)
                ]
                a, b = mats
                lhs = self._bicyc_value(a * b)
                rhs = self._bicyc_value(a) * self._bicyc_value(b)
                assert abs(lhs - rhs) < 1e-6

    def test_galois_permutes_embeddings(self):
        import cmath

        rng = random.Random(61)
        p = 7
        a = random_cyc(rng, p, 9)
        for t in range(1, p):
            z = cmath.exp(2j * cmath.pi * t / p)
            direct = sum(c * z**i for i, c in enumerate(a.coeffs))
            assert abs(self._cyc_value(galois_apply(t, a)) - direct) < 1e-6


class TestSerialization:
    def test_cyc_round_trip(self):
        a = CycInt(5, (10**80, -(3**100), 0, 42))
        blob = json.dumps(a.to_json_obj())
        assert CycInt.from_json_obj(json.loads(blob)) == a

    def test_bicyc_round_trip(self):
        rng = random.Random(47)
        a = BiCycInt(
            3, 7, [[rng.randint(-(10**30), 10**30) for _ in range(6)] for _ in range(2)]
        )
        blob = json.dumps(a.to_json_obj())
        assert BiCycInt.from_json_obj(json.loads(blob)) == a

    def test_strings_are_decimal(self):
        obj = CycInt(3, (12, -7)).to_json_obj()
        assert obj["coeffs"] == ["12", "-7"]
