import random
from fractions import Fraction

import pytest

from eucideal.class_number import (class_number_biquadratic,
                                   class_number_cyclic, is_square_in_K,
                                   k_element, k_mul, k_neg, load_fixture,
                                   subfield_data, unit_index)
from eucideal.errors import UnknownClassNumber
from eucideal.fields import validate_biquadratic, validate_cyclic

SPEC = validate_biquadratic(29, 37, 41)


def test_subfield_data():
    d1, d2, d3 = subfield_data(SPEC)
    assert (d1.D, d2.D, d3.D) == (29, 1517, 43993)
    assert all(d.D % 4 == 1 for d in (d1, d2, d3))
    d1, d2, d3 = subfield_data(validate_biquadratic(29, 37, 61))
    assert (d1.D, d2.D, d3.D) == (29, 2257, 65453)


def test_is_square_in_K_rationals():
    one = is_square_in_K(k_element(SPEC, 1))
    assert one is not None and one.coords in ((1, 0, 0, 0), (-1, 0, 0, 0))
    rootq = is_square_in_K(k_element(SPEC, 29))
    assert rootq is not None and k_mul(rootq, rootq).coords == (29, 0, 0, 0)
    assert abs(rootq.coords[1]) == 1
    assert is_square_in_K(k_element(SPEC, 2)) is None
    with pytest.raises(ValueError):
        is_square_in_K(k_element(SPEC))


def test_is_square_in_K_sign_obstructions():
    assert is_square_in_K(k_element(SPEC, -1)) is None
    # sqrt(29) itself has two negative embeddings
    assert is_square_in_K(k_element(SPEC, 0, 1)) is None


def test_is_square_in_K_recovers_random_squares():
    rng = random.Random(20260817)
    for _ in range(25):
        coords = tuple(Fraction(rng.randrange(-12, 13), rng.choice((1, 2))) for _ in range(4))
        if all(c == 0 for c in coords):
            continue
        from eucideal.class_number import KElement
        x = KElement(coords, SPEC)
        delta = k_mul(x, x)
        root = is_square_in_K(delta)
        assert root is not None
        assert k_mul(root, root).coords == delta.coords
        # a perturbed target must be rejected, not rounded to the nearest root
        off = KElement((delta.coords[0] + 1,) + delta.coords[1:], SPEC)
        computed = is_square_in_K(off)
        if computed is not None:
            assert k_mul(computed, computed).coords == off.coords


def test_unit_index_structure():
    res = unit_index(SPEC)
    assert res.Q in (1, 2, 4, 8) and res.Q == 2 ** res.rank
    # exponent triples must be closed under xor (they form an F_2 subspace)
    masks = {a << 2 | b << 1 | c for a, b, c in res.square_set} | {0}
    assert {m ^ n for m in masks for n in masks} == masks
    assert len(masks) == res.Q


def test_class_number_biquadratic_examples():
    assert class_number_biquadratic(SPEC) == 2
    assert class_number_biquadratic(validate_biquadratic(29, 37, 53)) == 16
    assert class_number_biquadratic(validate_biquadratic(37, 41, 73)) == 48
    assert class_number_biquadratic(validate_biquadratic(29, 73, 89)) == 12


def test_class_number_biquadratic_product_relation():
    for q, k, r in ((29, 37, 41), (29, 37, 53), (29, 73, 89)):
        spec = validate_biquadratic(q, k, r)
        d1, d2, d3 = subfield_data(spec)
        Q = unit_index(spec).Q
        assert Q * d1.h * d2.h * d3.h == 4 * class_number_biquadratic(spec)


def test_class_number_cyclic_fixture_lookup():
    fixture = load_fixture()
    assert class_number_cyclic(validate_cyclic(17, 41, 4), fixture) == 2
    assert class_number_cyclic(validate_cyclic(17, 89, 8), fixture) == 26
    assert class_number_cyclic(validate_cyclic(41, 89, 8), fixture) == 10
    with pytest.raises(UnknownClassNumber):
        class_number_cyclic(validate_cyclic(17, 137, 4), fixture)


def test_load_fixture_shipped_and_custom(tmp_path):
    assert len(load_fixture()) == 38
    good = tmp_path / "ok.csv"
    good.write_text("# comment\ncyclic,17,41,4,2\n\ncyclic,17,73,8,6\n")
    assert load_fixture(good) == {(17, 41, 4): 2, (17, 73, 8): 6}


@pytest.mark.parametrize("line", [
    "cyclic,17,41,4",               # missing field
    "biquadratic,29,37,41,2",       # wrong family tag
    "cyclic,17,41,four,2",          # non-integer
])
def test_load_fixture_rejects_malformed(tmp_path, line):
    bad = tmp_path / "bad.csv"
    bad.write_text(line + "\n")
    with pytest.raises(ValueError):
        load_fixture(bad)


def test_unit_products_with_negation():
    # the +- in the square test matters: at least one witnessed product needs
    # the negative branch or the positive one; both coexist consistently
    res = unit_index(SPEC)
    for a, b, c in res.square_set:
        if (a, b, c) == (0, 0, 0):
            continue
        d1, d2, d3 = subfield_data(SPEC)
        from eucideal.class_number import _unit_as_element
        prod = k_element(SPEC, 1)
        for axis, (expo, data) in enumerate(zip((a, b, c), (d1, d2, d3)), start=1):
            if expo:
                prod = k_mul(prod, _unit_as_element(SPEC, data, axis))
        assert (is_square_in_K(prod) is not None) or (is_square_in_K(k_neg(prod)) is not None)
