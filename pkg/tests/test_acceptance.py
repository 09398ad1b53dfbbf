"""
Property and oracle sweeps at full size.

The heavier sweeps are marked slow; run them with `pytest -m slow`.
"""
import random
import sys
from math import gcd, prod
from pathlib import Path

import pytest

# Add project root to sys.path
project_root = Path(__file__).resolve().parent.parent
sys.path.append(str(project_root))

from bezout.conditions import (
    adequate_split,
    feckly_clean_decompose,
    feckly_clean_table,
    pm_split,
    pm_witness,
    stable_range_one,
)
from bezout.matrices import Matrix, unit_product_factorization
from bezout.reduction import diagonal_reduce, kaplansky_step, mspec_pivot_loop, reduce_mod_jacobson
from bezout.rings import Integers, LocalizedIntegers, PolyOverPrimeField, RationalQuaternions

ZZ = Integers()
F5 = PolyOverPrimeField(5)
ZLOC = LocalizedIntegers()
H = RationalQuaternions()

SHAPES = [(2, 2), (2, 3), (3, 3), (4, 4)]


def assert_valid(a, result):
    """P·A·Q = D with exact inverses and a divisibility chain."""
    ring = a.ring
    assert result.P @ a @ result.Q == result.D
    assert (result.P @ result.Pinv).is_identity()
    assert (result.Q @ result.Qinv).is_identity()
    assert result.D.is_diagonal()
    for d, e in zip(result.chain, result.chain[1:]):
        assert ring.divides(d, e)


@pytest.mark.slow
class TestMinorGcdOracle:
    """Chain products against brute-force determinantal divisors."""

    @pytest.mark.parametrize("shape", SHAPES, ids=lambda s: f"{s[0]}x{s[1]}")
    def test_integer_matrices(self, shape):
        """Test 200 integer matrices per shape with entries in [−50, 50]."""
        rng = random.Random(1000 + shape[0] * 10 + shape[1])
        rows, cols = shape
        for _ in range(200):
            a = Matrix.random(ZZ, rng, rows, cols, 50)
            result = diagonal_reduce(a)
            assert_valid(a, result)
            for k in range(1, min(rows, cols) + 1):
                product = prod(result.chain[:k], start=ZZ.one)
                assert abs(product.value) == a.minor_gcd(k).value


@pytest.mark.slow
class TestTransformValidity:
    """Exact transform checks beyond the integers."""

    def test_polynomials(self):
        """Test 200 matrices over F_5[x] with degrees ≤ 4."""
        rng = random.Random(2000)
        for i in range(200):
            rows, cols = SHAPES[i % 3]
            a = Matrix.random(F5, rng, rows, cols, 4)
            assert_valid(a, diagonal_reduce(a))

    def test_localized_integers(self):
        """Test 200 matrices over Z_(2) ∩ Z_(3)."""
        rng = random.Random(2001)
        for i in range(200):
            rows, cols = SHAPES[i % 3]
            a = Matrix.random(ZLOC, rng, rows, cols)
            assert_valid(a, diagonal_reduce(a))


class TestFactorizationIdentity:
    """The four elementary factors against their closed form."""

    def test_integers(self):
        """Test 500 random integer triples."""
        rng = random.Random(3000)
        for _ in range(500):
            s, t, w = (ZZ.random_element(rng, 100) for _ in range(3))
            f = unit_product_factorization(s, t, w)
            assert f.product == f.closed_form
            assert f.identity_holds == (s * w * t == ZZ.one)

    def test_quaternions(self):
        """Test 500 random quaternion triples, order respected."""
        rng = random.Random(3001)
        for _ in range(500):
            s, t, w = (H.random_element(rng) for _ in range(3))
            wt = w * t
            f = unit_product_factorization(s, t, w)
            assert f.product == Matrix.from_rows(H, [[s, s * wt - 1], [1 - wt * s, 2 * wt - wt * s * wt]])
            if not wt.is_zero():
                g = unit_product_factorization(H.inverse(wt), t, w)
                assert g.identity_holds


class TestKaplanskySoundness:
    """Witnesses for comaximal triples over Z and F_5[x]."""

    def test_random_triples(self):
        """Test 1000 triples with entries bounded by 10⁴."""
        rng = random.Random(4000)
        checked = 0
        while checked < 1000:
            a, b, c = (rng.randint(-10_000, 10_000) for _ in range(3))
            if gcd(gcd(a, b), c) != 1:
                continue
            w = kaplansky_step(ZZ.from_int(a), ZZ.from_int(b), ZZ.from_int(c))
            e, f = w.p * w.a + w.q * w.b, w.q * w.c
            assert ZZ.is_unit(ZZ.gcd(e, f))
            assert w.r * w.a + w.s * w.b + w.t * w.c == ZZ.one
            assert ZZ.divides(w.s, w.r * w.t)
            checked += 1

    def test_random_polynomial_triples(self):
        """Test 1000 comaximal triples over F_5[x] with degrees at most 4."""
        rng = random.Random(4001)
        checked = 0
        while checked < 1000:
            a, b, c = (F5.random_element(rng, 4) for _ in range(3))
            if not F5.is_unit(F5.gcd(F5.gcd(a, b), c)):
                continue
            w = kaplansky_step(a, b, c)
            assert F5.is_unit(F5.gcd(w.p * a + w.q * b, w.q * c))
            assert w.r * a + w.s * b + w.t * c == F5.one
            assert F5.divides(w.s, w.r * w.t)
            checked += 1


@pytest.mark.slow
class TestStableRangeSweep:
    """Exhaustive stable range one for Z/nZ."""

    def test_all_moduli_up_to_500(self):
        """Test every 2 ≤ n ≤ 500."""
        for n in range(2, 501):
            assert stable_range_one(n).verdict, n


@pytest.mark.slow
class TestSplitSweeps:
    """Adequate and PM decompositions at volume."""

    def test_adequate_split(self):
        """Test 1000 random pairs with the prime audit."""
        rng = random.Random(6000)
        for _ in range(1000):
            a = ZZ.from_int(rng.randint(1, 999_999))
            b = ZZ.from_int(rng.randint(-999_999, 999_999))
            split = adequate_split(a, b, audit=True)
            assert split.r * split.s == a
            assert ZZ.is_unit(ZZ.gcd(split.r, b))
            assert all(not ZZ.is_unit(shared) for _, shared in split.audit)

    def test_pm_split(self):
        """Test 1000 random inputs with comaximal (b, c)."""
        rng = random.Random(6001)
        checked = 0
        while checked < 1000:
            a, b, c = (rng.randint(1, 999_999) for _ in range(3))
            if gcd(b, c) != 1:
                continue
            split = pm_split(ZZ.from_int(a), ZZ.from_int(b), ZZ.from_int(c))
            assert split.r.value * split.s.value == a
            assert gcd(split.r.value, b) == 1
            assert gcd(split.s.value, c) == 1
            checked += 1

    def test_pm_witness_sweep(self):
        """Test every b + c ≡ 1 mod a for a ≤ 60."""
        for a in range(1, 61):
            for b in range(a):
                w = pm_witness(a, b, 1 - b)
                assert (1 + w.b * w.r) * (1 + w.c * w.s) % a == 0


class TestFecklyCleanCompleteness:
    """Idempotent lifts over Z_(2) ∩ Z_(3)."""

    def test_table_and_random_elements(self):
        """Test the residue table and 1000 random decompositions."""
        assert feckly_clean_table().complete
        rng = random.Random(7000)
        for _ in range(1000):
            a = ZLOC.random_element(rng, 1000)
            w = feckly_clean_decompose(a)
            assert w.e + w.unit == a
            assert ZLOC.is_unit(w.unit)
            assert ZLOC.jacobson_membership(w.e * w.e - w.e)


@pytest.mark.slow
class TestCrossAlgorithmAgreement:
    """Alternative reductions against diagonal_reduce."""

    def test_pivot_loop(self):
        """Test 500 random integer 2x2 matrices."""
        rng = random.Random(8000)
        for _ in range(500):
            a = Matrix.random(ZZ, rng, 2, 2, 50)
            assert mspec_pivot_loop(a).chain == diagonal_reduce(a).chain

    def test_mod_jacobson(self):
        """Test 500 random 2x2 matrices over Z_(2) ∩ Z_(3)."""
        rng = random.Random(8001)
        for _ in range(500):
            a = Matrix.random(ZLOC, rng, 2, 2)
            assert reduce_mod_jacobson(a).chain == diagonal_reduce(a).chain
