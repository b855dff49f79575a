"""Field arithmetic, canonical moduli, Frobenius, orders and embeddings."""

import math

import pytest

from qcstab import (
    frobenius,
    make_field,
    multiplicative_order,
    subfield_embed,
    subfield_project,
)
from qcstab.errors import (
    DegreeZeroError,
    FieldTooLargeError,
    InverseOfZeroError,
    MixedFieldsError,
    NotASubfieldError,
    NotCoprimeError,
    NotInSubfieldError,
    NotPrimeError,
)


def brute_order(elem):
    """Independent multiplicative-order oracle by repeated multiplication."""
    assert elem.code != 0
    cur = elem
    for k in range(1, elem.spec.q):
        if cur.code == 1:
            return k
        cur = cur * elem
    raise AssertionError("order scan failed")


def test_make_field_validations():
    with pytest.raises(NotPrimeError):
        make_field(4, 1)
    with pytest.raises(NotPrimeError):
        make_field(1, 2)
    with pytest.raises(DegreeZeroError):
        make_field(2, 0)
    with pytest.raises(FieldTooLargeError):
        make_field(2, 33)


def test_prime_field_basics(gf2):
    assert gf2.q == 2 and gf2.modulus == (1, 1)
    assert gf2.primitive_element().code == 1
    x = gf2.one()
    assert (x + x).code == 0  # characteristic 2


def test_make_field_is_deterministic_and_cached():
    a = make_field(3, 2)
    b = make_field(3, 2)
    assert a is b
    assert a.modulus == (2, 2, 1)


def test_modulus_is_irreducible_small_fields():
    # brute factor scan: no monic factor of degree 1..r-1 divides the modulus
    for p, r in [(2, 3), (2, 4), (3, 2), (5, 2), (2, 9)]:
        spec = make_field(p, r)
        mod = list(spec.modulus)

        def poly_mod(a, b):
            b = list(b)
            a = list(a)
            inv = pow(b[-1], p - 2, p)
            while len(a) >= len(b) and any(a):
                if a[-1] == 0:
                    a.pop()
                    continue
                c = a[-1] * inv % p
                off = len(a) - len(b)
                for i, bi in enumerate(b):
                    a[off + i] = (a[off + i] - c * bi) % p
                a.pop()
            return a

        import itertools
        for d in range(1, r):
            for tail in itertools.product(range(p), repeat=d):
                cand = list(tail) + [1]
                if not any(poly_mod(mod, cand)):
                    raise AssertionError(f"{spec} modulus divisible by {cand}")


def test_field_axioms_randomized(rng):
    specs = [make_field(2, 1), make_field(3, 1), make_field(5, 1),
             make_field(2, 2), make_field(2, 3), make_field(3, 2),
             make_field(5, 2), make_field(3, 4), make_field(2, 9),
             make_field(2, 15)]
    for spec in specs:
        one = spec.one()
        for _ in range(150):
            a, b, c = (spec.from_code(rng.randrange(spec.q)) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == spec.zero()
            if a.code:
                assert a * a.inverse() == one
                assert a / a == one


def test_inverse_of_zero(gf9):
    with pytest.raises(InverseOfZeroError):
        gf9.zero().inverse()


def test_mixed_fields_rejected(gf2, gf3):
    with pytest.raises(MixedFieldsError):
        gf2.one() + gf3.one()


def test_gf9_power_table_and_primitive(gf9):
    # enumerate the orders of all 8 nonzero elements (independent oracle)
    orders = {code: brute_order(gf9.from_code(code)) for code in range(1, 9)}
    zeta = gf9.primitive_element()
    assert orders[zeta.code] == 8
    # lex-least: no element earlier in coordinate-lex order has full order
    for code in gf9.iter_codes_lex():
        if code == zeta.code:
            break
        assert code == 0 or orders[code] < 8
    assert (zeta**4).code != 1 and (zeta**8).code == 1
    assert (zeta**4).code == 2  # -1 in GF(9)


def test_gf8_primitive_order(gf8):
    zeta = gf8.primitive_element()
    assert brute_order(zeta) == 7


def test_pow_matches_brute_force(gf9, rng):
    for _ in range(50):
        a = gf9.from_code(rng.randrange(1, 9))
        e = rng.randrange(0, 20)
        cur = gf9.one()
        for _ in range(e):
            cur = cur * a
        assert a**e == cur
    # negative exponent
    a = gf9.primitive_element()
    assert a**-1 == a.inverse()


def test_frobenius_identity_and_additivity(gf9, gf8, rng):
    for spec in (gf9, gf8):
        for _ in range(100):
            a = spec.from_code(rng.randrange(spec.q))
            b = spec.from_code(rng.randrange(spec.q))
            assert frobenius(a, 0) == a
            k = rng.randrange(0, 4)
            assert frobenius(a + b, k) == frobenius(a, k) + frobenius(b, k)
            assert frobenius(a * b, k) == frobenius(a, k) * frobenius(b, k)


def test_frobenius_gf9_example(gf9):
    zeta = gf9.primitive_element()
    cube = zeta * zeta * zeta
    assert frobenius(zeta, 1) == cube


def test_frobenius_fixes_exactly_the_subfield():
    # inside GF(2^4), Frobenius^2 fixes exactly the 4 elements of GF(4)
    big = make_field(2, 4)
    fixed = [c for c in range(16) if big.frob(c, 2) == c]
    assert len(fixed) == 4
    small = make_field(2, 2)
    image = {subfield_embed(small.from_code(c), big).code for c in range(4)}
    assert image == set(fixed)


def test_multiplicative_order_reference_values():
    assert multiplicative_order(2, 151) == 15
    assert multiplicative_order(8, 73) == 3
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(9, 80) == 2


def test_multiplicative_order_brute_agreement():
    def brute(q, n):
        cur = q % n
        m = 1
        while cur != 1:
            cur = cur * q % n
            m += 1
        return m

    import random

    for q in (2, 3, 4, 5, 8, 9):
        for n in range(1, 400):
            if math.gcd(q, n) != 1:
                with pytest.raises(NotCoprimeError):
                    multiplicative_order(q, n)
            else:
                assert multiplicative_order(q, n) == (1 if n == 1 else brute(q, n))
    rng = random.Random(4)
    for _ in range(60):
        q = rng.choice((2, 3, 4, 5, 8, 9))
        n = rng.randrange(400, 10_000)
        if math.gcd(q, n) == 1:
            assert multiplicative_order(q, n) == brute(q, n)


def test_subfield_embedding_round_trip(rng):
    gf8 = make_field(2, 3)
    gf512 = make_field(2, 9)
    one_img = subfield_embed(gf8.one(), gf512)
    zero_img = subfield_embed(gf8.zero(), gf512)
    assert one_img.code == 1 and zero_img.code == 0
    for _ in range(50):
        a = gf8.from_code(rng.randrange(8))
        b = gf8.from_code(rng.randrange(8))
        ia, ib = subfield_embed(a, gf512), subfield_embed(b, gf512)
        assert subfield_embed(a * b, gf512) == ia * ib
        assert subfield_embed(a + b, gf512) == ia + ib
        assert subfield_project(ia, gf8) == a
    # GF(2) -> GF(2^15): image of 1 is 1
    assert subfield_embed(make_field(2, 1).one(), make_field(2, 15)).code == 1


def test_subfield_errors():
    gf4 = make_field(2, 2)
    gf512 = make_field(2, 9)
    with pytest.raises(NotASubfieldError):
        subfield_embed(gf4.one(), gf512)  # 2 does not divide 9
    gf8 = make_field(2, 3)
    image = {subfield_embed(gf8.from_code(c), gf512).code for c in range(8)}
    outside = next(c for c in range(512) if c not in image)
    with pytest.raises(NotInSubfieldError):
        subfield_project(gf512.from_code(outside), gf8)


def test_element_text_round_trip(gf2, gf9):
    assert gf2.parse_element("1").code == 1
    assert str(gf2.one()) == "1"
    z = gf9.primitive_element()
    assert gf9.parse_element("z^5") == z**5
    assert gf9.parse_element("z") == z
    assert gf9.parse_element("[1,2]").coeffs == (1, 2)
    assert gf9.parse_element("2").code == 2
    for code in range(9):
        e = gf9.from_code(code)
        assert gf9.parse_element(str(e)) == e
    with pytest.raises(ValueError):
        gf9.parse_element("[1]")
    with pytest.raises(ValueError):
        gf9.parse_element("")


def test_element_arithmetic_dispatch(gf9):
    from qcstab import element_arithmetic

    z = gf9.primitive_element()
    assert element_arithmetic(z, z, "add") == z + z
    assert element_arithmetic(z, gf9.one(), "sub") == z - gf9.one()
    assert element_arithmetic(z, z, "mul") == z * z
    assert element_arithmetic(z, None, "inv") == z.inverse()
    assert element_arithmetic(z, 5, "pow") == z**5
    with pytest.raises(ValueError):
        element_arithmetic(z, z, "nope")
