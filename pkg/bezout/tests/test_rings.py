import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to sys.path
project_root = Path(__file__).resolve().parent.parent.parent
sys.path.append(str(project_root))

from bezout.errors import (
    DescriptorMismatchError,
    DivisionByZeroError,
    NotAUnitError,
    NotDivisibleError,
    ParseError,
    PreconditionError,
    UnsupportedRingError,
)
from bezout.rings import (
    Integers,
    LocalizedIntegers,
    ModularIntegers,
    PolyOverPrimeField,
    RationalQuaternions,
    canonical_associate,
    extended_gcd,
    mspec,
    parse_descriptor,
    quotient_ring,
    try_divide,
)

ZZ = Integers()
F5 = PolyOverPrimeField(5)
ZLOC = LocalizedIntegers()
Z12 = ModularIntegers(12)
H = RationalQuaternions()

ALL_RINGS = [ZZ, F5, ZLOC, Z12, H]
COMMUTATIVE_RINGS = [ZZ, F5, ZLOC, Z12]


class TestIntegers:
    """Test suite for the integer instance."""

    def test_arithmetic(self):
        """Test addition, negation and products."""
        assert ZZ.add(ZZ.from_int(2), ZZ.from_int(3)) == ZZ.from_int(5)
        assert -ZZ.from_int(4) == ZZ.from_int(-4)
        assert ZZ.from_int(6) * 7 == ZZ.from_int(42)

    def test_units(self):
        """Test that only ±1 are units."""
        assert ZZ.is_unit(ZZ.from_int(-1))
        assert not ZZ.is_unit(ZZ.from_int(2))
        with pytest.raises(NotAUnitError):
            ZZ.inverse(ZZ.from_int(2))

    def test_try_divide(self):
        """Test exact division and its failure modes."""
        assert try_divide(ZZ.from_int(12), ZZ.from_int(4)) == ZZ.from_int(3)
        assert try_divide(ZZ.from_int(12), ZZ.from_int(5)) is None
        with pytest.raises(NotDivisibleError):
            ZZ.divide(ZZ.from_int(12), ZZ.from_int(5))
        with pytest.raises(DivisionByZeroError):
            ZZ.try_divide(ZZ.from_int(12), ZZ.zero)

    def test_extended_gcd(self):
        """Test the witness 4 = 12·1 + 8·(−1)."""
        a, b = ZZ.from_int(12), ZZ.from_int(8)
        w = extended_gcd(a, b)
        assert w.d == ZZ.from_int(4)
        assert (w.x, w.y) == (ZZ.from_int(1), ZZ.from_int(-1))
        assert w.holds(a, b)

    def test_gcd_witnesses_are_native_numbers(self):
        """Test that witnesses from the integer gcd backend come back as int and Fraction."""
        w = ZZ.extended_gcd(ZZ.from_int(240), ZZ.from_int(46))
        assert w.d == ZZ.from_int(2)
        assert all(type(v.value) is int for v in (w.d, w.x, w.y))
        w = Z12.extended_gcd(Z12.from_int(8), Z12.from_int(6))
        assert all(type(v.value) is int for v in (w.d, w.x, w.y))
        assert w.holds(Z12.from_int(8), Z12.from_int(6))
        w = ZLOC.extended_gcd(ZLOC.parse("12/5"), ZLOC.parse("18/7"))
        assert all(type(v.value) is Fraction for v in (w.d, w.x, w.y))
        assert w.holds(ZLOC.parse("12/5"), ZLOC.parse("18/7"))

    def test_extended_gcd_with_zero(self):
        """Test that gcd(a, 0) is the canonical associate with a unit normalizer."""
        w = ZZ.extended_gcd(ZZ.from_int(-6), ZZ.zero)
        assert w.d == ZZ.from_int(6)
        assert w.x == ZZ.from_int(-1)
        assert w.y == ZZ.zero

    def test_canonical_associate(self):
        """Test that associates are nonnegative."""
        assert canonical_associate(ZZ.from_int(-6)) == (ZZ.from_int(-1), ZZ.from_int(6))

    def test_jacobson_membership(self):
        """Test that J(Z) = 0."""
        assert ZZ.jacobson_membership(ZZ.zero)
        assert not ZZ.jacobson_membership(ZZ.from_int(7))

    def test_mspec(self):
        """Test maximal ideals containing an integer."""
        assert mspec(ZZ.from_int(12)) == [2, 3]
        assert mspec(ZZ.from_int(1)) == []
        assert mspec(ZZ.from_int(-30)) == [2, 3, 5]
        with pytest.raises(PreconditionError):
            mspec(ZZ.zero)

    def test_descriptor_mismatch(self):
        """Test that mixing rings is rejected."""
        with pytest.raises(DescriptorMismatchError):
            ZZ.add(ZZ.from_int(2), ZLOC.from_int(2))

    def test_quotient_ring(self):
        """Test that Z/aZ is built for nonzero non-units."""
        assert quotient_ring(ZZ.from_int(-12)) == ModularIntegers(12)
        with pytest.raises(PreconditionError):
            quotient_ring(ZZ.from_int(1))
        with pytest.raises(UnsupportedRingError):
            quotient_ring(F5.x())


class TestPolynomials:
    """Test suite for F_p[x]."""

    def test_rejects_composite_modulus(self):
        """Test that p must be prime."""
        with pytest.raises(PreconditionError):
            PolyOverPrimeField(4)

    def test_canonical_associate_is_monic(self):
        """Test 3x+1 = 3·(x+2) over F_5."""
        u, c = F5.canonical_associate(F5.parse("1+3*x"))
        assert u == F5.from_int(3)
        assert c == F5.parse("2+x")

    def test_extended_gcd(self):
        """Test gcd(x²−1, x−1) = x − 1 (monic, i.e. x + 4)."""
        a, b = F5.parse("-1+x^2"), F5.parse("-1+x")
        w = F5.extended_gcd(a, b)
        assert w.d == F5.parse("4+x")
        assert w.holds(a, b)

    def test_prime_divisors(self):
        """Test factorization of x² − 1 into monic linear factors."""
        assert F5.prime_divisors(F5.parse("4+x^2")) == [F5.parse("1+x"), F5.parse("4+x")]

    def test_euclidean_size(self):
        """Test that the size is the degree and −1 for zero."""
        assert F5.euclidean_size(F5.zero) == -1
        assert F5.euclidean_size(F5.parse("1+2*x^2")) == 2

    def test_codec(self):
        """Test ascending text encoding."""
        assert F5.format(F5.parse("1+3*x^2")) == "1+3*x^2"
        assert F5.format(F5.zero) == "0"
        assert F5.parse("7") == F5.from_int(2)
        assert F5.parse("x + x") == F5.parse("2*x")
        assert PolyOverPrimeField.ascending(5, [1, 0, 3]) == F5.parse("1+3*x^2")

    @pytest.mark.parametrize("text", ["x^", "3*y", "", "1++x"])
    def test_parse_errors(self, text):
        """Test that malformed polynomials are rejected."""
        with pytest.raises(ParseError):
            F5.parse(text)

    def test_units_are_nonzero_constants(self):
        """Test units and their inverses."""
        assert F5.is_unit(F5.from_int(3))
        assert F5.inverse(F5.from_int(3)) == F5.from_int(2)
        assert not F5.is_unit(F5.x())
        assert not F5.is_unit(F5.zero)


class TestLocalizedIntegers:
    """Test suite for Z_(2) ∩ Z_(3)."""

    def test_inverse_of_unit(self):
        """Test 1/5 · 5 = 1."""
        assert ZLOC.element(Fraction(1, 5)) * 5 == ZLOC.one

    def test_units(self):
        """Test that units are fractions with numerator coprime to 6."""
        assert ZLOC.is_unit(ZLOC.parse("5/7"))
        assert not ZLOC.is_unit(ZLOC.from_int(2))
        assert not ZLOC.is_unit(ZLOC.from_int(3))

    def test_rejects_foreign_denominators(self):
        """Test that 1/2 is not an element."""
        with pytest.raises(ParseError):
            ZLOC.parse("1/2")
        with pytest.raises(PreconditionError):
            ZLOC.element(Fraction(1, 3))

    def test_try_divide(self):
        """Test 2 = 10 · 1/5."""
        assert ZLOC.try_divide(ZLOC.from_int(2), ZLOC.from_int(10)) == ZLOC.parse("1/5")
        assert ZLOC.try_divide(ZLOC.from_int(3), ZLOC.from_int(2)) is None

    def test_extended_gcd(self):
        """Test gcd(4/5, 6) = 2."""
        a, b = ZLOC.parse("4/5"), ZLOC.from_int(6)
        w = ZLOC.extended_gcd(a, b)
        assert w.d == ZLOC.from_int(2)
        assert w.holds(a, b)

    def test_canonical_associate(self):
        """Test 20/7 = 5/7 · 4."""
        assert ZLOC.canonical_associate(ZLOC.parse("20/7")) == (ZLOC.parse("5/7"), ZLOC.from_int(4))

    def test_jacobson_radical_is_6R(self):
        """Test J = 6R."""
        assert ZLOC.jacobson_membership(ZLOC.parse("12/5"))
        assert not ZLOC.jacobson_membership(ZLOC.from_int(4))

    def test_mspec(self):
        """Test that only (2) and (3) occur."""
        assert mspec(ZLOC.parse("4/7")) == [2]
        assert mspec(ZLOC.parse("-18/5")) == [2, 3]

    def test_units_have_empty_mspec(self):
        """Test is_unit, jacobson_membership and mspec against each other."""
        rng = random.Random(7)
        for _ in range(300):
            a = ZLOC.random_element(rng)
            if a.is_zero():
                continue
            assert ZLOC.is_unit(a) == (mspec(a) == [])
            if ZLOC.jacobson_membership(a):
                assert mspec(a) == [2, 3]

    def test_residue_and_size(self):
        """Test the image in Z/6Z and the size i + j."""
        assert ZLOC.residue_mod_six(ZLOC.parse("5/7")) == 5
        assert ZLOC.residue_mod_six(ZLOC.parse("1/5")) == 5
        assert ZLOC.euclidean_size(ZLOC.from_int(12)) == 3
        assert ZLOC.quotient_modulus(ZLOC.parse("36/35")) == 36


class TestModularIntegers:
    """Test suite for Z/nZ."""

    def test_rejects_small_modulus(self):
        """Test that n must be at least 2."""
        with pytest.raises(PreconditionError):
            ModularIntegers(1)

    def test_is_not_a_domain(self):
        """Test zero divisors exist."""
        assert not Z12.domain
        assert Z12.from_int(3) * Z12.from_int(4) == Z12.zero

    def test_jacobson_membership(self):
        """Test rad(12) = 6."""
        assert Z12.jacobson_membership(Z12.from_int(6))
        assert not Z12.jacobson_membership(Z12.from_int(4))

    def test_canonical_associate(self):
        """Test 8 = 5·4 mod 12."""
        assert Z12.canonical_associate(Z12.from_int(8)) == (Z12.from_int(5), Z12.from_int(4))
        assert Z12.canonical_associate(Z12.zero) == (Z12.one, Z12.zero)

    def test_try_divide(self):
        """Test 8·2 = 4 mod 12 and a failing division."""
        assert Z12.try_divide(Z12.from_int(4), Z12.from_int(8)) == Z12.from_int(2)
        assert Z12.try_divide(Z12.from_int(3), Z12.from_int(8)) is None

    def test_gcd_cofactors_are_comaximal(self):
        """Test x·a' + y·b' = 1 exactly for every pair mod 6 and mod 12."""
        for ring in (ModularIntegers(6), Z12):
            for a in range(ring.n):
                for b in range(ring.n):
                    ea, eb = ring.from_int(a), ring.from_int(b)
                    c = ring.gcd_cofactors(ea, eb)
                    assert c.d * c.a_cofactor == ea
                    assert c.d * c.b_cofactor == eb
                    assert c.x * c.a_cofactor + c.y * c.b_cofactor == ring.one

    def test_mspec_unsupported(self):
        """Test that mspec is not enumerated over Z/nZ."""
        with pytest.raises(UnsupportedRingError):
            mspec(Z12.from_int(2))


class TestQuaternions:
    """Test suite for the rational quaternions."""

    def test_multiplication_table(self):
        """Test i·j = k and j·i = −k."""
        i, j, k = H.basis("i"), H.basis("j"), H.basis("k")
        assert i * j == k
        assert j * i == -k
        assert i * i == H.from_int(-1)

    def test_structure_flags(self):
        """Test that only the quaternions are noncommutative and only Z/12 has zero divisors."""
        assert not H.commutative and H.domain
        assert all(r.commutative for r in (ZZ, F5, ZLOC, Z12))
        assert all(r.domain for r in (ZZ, F5, ZLOC))

    def test_every_nonzero_element_is_a_unit(self):
        """Test q·q⁻¹ = q⁻¹·q = 1."""
        rng = random.Random(3)
        for _ in range(100):
            q = H.random_element(rng)
            if q.is_zero():
                continue
            assert H.is_unit(q)
            assert q * H.inverse(q) == H.one == H.inverse(q) * q

    def test_right_division(self):
        """Test a = b·c for c = try_divide(a, b)."""
        a, b = H.parse("1,2,3,4"), H.parse("0,1,-1,1/2")
        c = H.try_divide(a, b)
        assert b * c == a

    def test_codec(self):
        """Test quadruple and symbolic encodings."""
        assert H.parse("1/2i") == H.element((0, Fraction(1, 2), 0, 0))
        assert H.parse("-j") == -H.basis("j")
        assert H.parse("1+2k") == H.parse("1,0,0,2")
        assert H.format(H.parse("2,0,0,0")) == "2"
        assert H.format(H.parse("1,2,3,4")) == "1,2,3,4"
        with pytest.raises(ParseError):
            H.parse("1,2,3")

    def test_trivial_gcd(self):
        """Test that gcd(j, k) = 1."""
        j, k = H.basis("j"), H.basis("k")
        w = H.extended_gcd(j, k)
        assert w.d == H.one
        assert w.holds(j, k)

    @pytest.mark.parametrize("a_text,b_text", [("j", "k"), ("0", "k"), ("1,1,0,0", "0"), ("2i", "1,2,3,4")])
    def test_gcd_blocks(self, a_text, b_text):
        """Test (a, b)·Q = (1, 0) and P·(a, b)ᵀ = (1, 0)ᵀ with exact inverses."""
        a, b = H.parse(a_text), H.parse(b_text)
        q = H.gcd_block(a, b, "right").block
        assert a * q[0] + b * q[2] == H.one
        assert (a * q[1] + b * q[3]).is_zero()
        p = H.gcd_block(a, b, "left").block
        assert p[0] * a + p[1] * b == H.one
        assert (p[2] * a + p[3] * b).is_zero()


class TestDescriptors:
    """Test suite for ring descriptor parsing."""

    @pytest.mark.parametrize(
        "text,ring",
        [("int", ZZ), ("poly:5", F5), ("zloc23", ZLOC), ("mod:12", Z12), ("quat", H), (" INT ", ZZ)],
    )
    def test_parse_descriptor(self, text, ring):
        """Test that every descriptor kind builds its instance."""
        assert parse_descriptor(text) == ring

    def test_descriptor_roundtrip(self):
        """Test that descriptor strings identify instances."""
        for ring in ALL_RINGS:
            assert parse_descriptor(ring.descriptor) == ring

    @pytest.mark.parametrize("text,error", [("foo", ParseError), ("mod:x", ParseError), ("poly:4", PreconditionError), ("mod:1", PreconditionError)])
    def test_bad_descriptors(self, text, error):
        """Test parse and parameter errors."""
        with pytest.raises(error):
            parse_descriptor(text)


class TestRingAxioms:
    """Property checks shared by every instance."""

    @pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.descriptor)
    def test_axioms_on_random_triples(self, ring):
        """Test associativity, both distributive laws and the identity."""
        rng = random.Random(11)
        for _ in range(100):
            a, b, c = (ring.random_element(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a * ring.one == a == ring.one * a
            assert a - a == ring.zero

    @pytest.mark.parametrize("ring", COMMUTATIVE_RINGS, ids=lambda r: r.descriptor)
    def test_extended_gcd_witness(self, ring):
        """Test d = ax + by, d | a, d | b and d canonical on 1000 pairs."""
        rng = random.Random(5)
        for _ in range(1000):
            a, b = ring.random_element(rng), ring.random_element(rng)
            w = ring.extended_gcd(a, b)
            assert w.holds(a, b)
            assert ring.canonical_associate(w.d)[1] == w.d
            assert w.d.is_zero() == (a.is_zero() and b.is_zero())

    @pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.descriptor)
    def test_canonical_associate_roundtrip(self, ring):
        """Test u·c = a with u a unit."""
        rng = random.Random(9)
        for _ in range(200):
            a = ring.random_element(rng)
            u, c = ring.canonical_associate(a)
            assert u * c == a
            assert ring.is_unit(u)

    @pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.descriptor)
    def test_try_divide_is_exact(self, ring):
        """Test try_divide(a, b) = c implies b·c = a."""
        rng = random.Random(13)
        for _ in range(200):
            a, b = ring.random_element(rng), ring.random_element(rng)
            if b.is_zero():
                continue
            c = ring.try_divide(a, b)
            if c is not None:
                assert b * c == a
            assert ring.try_divide(b * a, b) is not None
