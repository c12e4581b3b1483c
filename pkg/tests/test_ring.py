"""Ring layer: construction gates, arithmetic laws, enumeration helpers."""
import pytest
from hypothesis import given, strategies as st

from jpaut import (PrimeField, ProductRing, DualNumbers, Rationals,
                   RingElement, parse_ring, idempotents, mu_n,
                   find_sqrt_minus_one, embedding)
from jpaut.errors import (BadInput, ParseError, NonEnumerableRing,
                          IncompatibleRings)

F3 = PrimeField(3)
F5 = PrimeField(5)
F33 = ProductRing(F3, F3)
F3T = DualNumbers(F3)
Q = Rationals()


def test_prime_field_rejects_non_odd_primes():
    # 2 is excluded: the toolkit divides by 2 throughout
    for bad in (1, 2, 4, 9, -3):
        with pytest.raises(BadInput):
            PrimeField(bad)


def test_parse_ring_round_trips():
    for name in ("F3", "F5", "F13", "Q", "F3xF3", "F3[t]", "F5xF5", "QxQ"):
        ring = parse_ring(name)
        assert ring.name == name
        assert parse_ring(ring.name).name == name


def test_parse_ring_tolerates_spaces():
    assert parse_ring(" F3 x F3 ").name == "F3xF3"


def test_parse_ring_rejects_junk():
    for bad in ("", "F4", "F", "junk", "F3x", "[t]"):
        with pytest.raises(ParseError):
            parse_ring(bad)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_f5_ring_laws(a, b, c):
    x, y, z = (F5.from_int(v) for v in (a, b, c))
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(st.integers(1, 4))
def test_f5_inverse_round_trip(a):
    x = F5.from_int(a)
    assert x.is_unit
    assert x * x.inverse() == F5.one


def test_division_and_negation():
    # 3 / 2 = 3 * 3 = 9 = 4 in F5
    assert F5.from_int(3) / F5.from_int(2) == F5.from_int(4)
    assert -F3.one == F3.from_int(2)


def test_element_counts():
    assert len(list(F3.elements())) == 3
    assert len(list(F33.elements())) == 9
    assert len(list(F3T.elements())) == 9
    assert F33.size == 9 and F33.characteristic == 3


def test_product_ring_componentwise_arithmetic():
    x = RingElement(F33, (1, 2))
    y = RingElement(F33, (2, 2))
    assert (x + y).payload == (0, 1)
    assert (x * y).payload == (2, 1)
    assert x.is_unit and x.inverse().payload == (1, 2)
    assert not RingElement(F33, (1, 0)).is_unit  # zero divisor


def test_dual_numbers_nilpotent():
    t = RingElement(F3T, (0, 1))
    assert t * t == RingElement(F3T, F3T.zero_p)
    assert not t.is_unit
    one_t = RingElement(F3T, (1, 1))
    assert one_t.is_unit
    # (1 + t)(1 - t) = 1 - t^2 = 1
    assert one_t.inverse().payload == (1, 2)


def test_idempotents():
    assert [str(e) for e in idempotents(F3)] == ["0", "1"]
    assert [str(e) for e in idempotents(F33)] == \
        ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    with pytest.raises(NonEnumerableRing):
        idempotents(Q)


def test_primitive_idempotents():
    assert F3.primitive_idempotents() == [1]
    assert F33.primitive_idempotents() == [(1, 0), (0, 1)]
    # dual numbers are local: only the unit survives
    assert F3T.primitive_idempotents() == [(1, 0)]


def test_mu_n_square_roots_of_unity():
    assert [str(x) for x in mu_n(F3, 2)] == ["1", "2"]
    assert [str(x) for x in mu_n(F3, 1)] == ["1"]
    # the unit group of F5 is cyclic of order 4
    assert [str(x) for x in mu_n(F5, 4)] == ["1", "2", "3", "4"]
    assert [str(x) for x in mu_n(F33, 2)] == \
        ["(1,1)", "(1,2)", "(2,1)", "(2,2)"]
    with pytest.raises(BadInput):
        mu_n(F3, 0)
    with pytest.raises(NonEnumerableRing):
        mu_n(Q, 2)


def test_find_sqrt_minus_one():
    assert find_sqrt_minus_one(F3) is None
    assert find_sqrt_minus_one(F5).payload == 2  # 2*2 = 4 = -1
    assert find_sqrt_minus_one(PrimeField(13)).payload == 5  # 25 = -1 mod 13
    assert find_sqrt_minus_one(Q) is None
    assert find_sqrt_minus_one(F33) is None  # no i componentwise


def test_embedding():
    emb = embedding(F3, F33)
    assert emb(2) == (2, 2)
    assert embedding(F5, F5)(3) == 3
    with pytest.raises(IncompatibleRings):
        embedding(F3, F5)
    with pytest.raises(IncompatibleRings):
        embedding(Q, F3)


def test_rationals_are_exact_and_infinite():
    half = Q.from_int(1) / Q.from_int(2)
    assert half + half == Q.one
    assert not Q.is_finite
    with pytest.raises(NonEnumerableRing):
        list(Q.elements())
