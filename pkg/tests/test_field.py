"""Field arithmetic: axioms, tables, encodings, JSON round-trip."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convinv import GF, FieldSpec
from convinv.errors import ConvinvError

FIELDS = [FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(2, 2), FieldSpec(3, 2), FieldSpec(2, 4)]


@pytest.mark.parametrize("f", FIELDS, ids=lambda f: f"q{f.q}")
def test_axioms_exhaustive(f):
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
@settings(max_examples=60, deadline=None)
def test_associativity_gf25(a, b, c):
    f = FieldSpec(5, 2)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


def test_tables_match_scalar_ops():
    for f in FIELDS:
        assert f.add_table is not None
        for a in f.elements():
            for b in f.elements():
                assert int(f.add_table[a, b]) == f.add(a, b)
                assert int(f.mul_table[a, b]) == f.mul(a, b)


def test_prime_field_is_mod_p():
    f = FieldSpec(7)
    for a in range(7):
        for b in range(7):
            assert f.add(a, b) == (a + b) % 7
            assert f.mul(a, b) == (a * b) % 7


def test_default_modulus_is_least_irreducible():
    # x^2 + x + 1 is the least monic irreducible quadratic over GF(2)
    assert list(FieldSpec(2, 2).modulus) == [1, 1, 1]
    # x^2 + 1 factors over GF(3)? (x-?) no root: 0,1,2 -> 1,2,2; irreducible
    assert list(FieldSpec(3, 2).modulus) == [1, 0, 1]


def test_reducible_modulus_rejected():
    with pytest.raises(ConvinvError, match="reducible"):
        FieldSpec(2, 2, modulus=(1, 0, 1))  # x^2+1 = (x+1)^2 over GF(2)


def test_nonprime_characteristic_rejected():
    with pytest.raises(ConvinvError):
        FieldSpec(4)


def test_gf_factory_and_json_round_trip():
    f = GF(9)
    assert (f.p, f.m) == (3, 2)
    g = FieldSpec.from_json(f.to_json())
    assert g.q == 9 and list(g.modulus) == list(f.modulus)
    assert FieldSpec.from_json({"p": 2}).q == 2


def test_out_of_range_encoding_rejected():
    f = FieldSpec(3)
    with pytest.raises(ConvinvError):
        f.check(3)
    with pytest.raises(ConvinvError):
        f.inv(0)
