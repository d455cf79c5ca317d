import pytest

from eucideal.arith import is_squarefree
from eucideal.quadratic import (class_number, field_data,
                                fundamental_discriminant, fundamental_unit)
from oracles import brute_form_class_number, pell_min_solution


def fundamental_discriminants(bound):
    out = []
    for m in range(2, bound):
        if not is_squarefree(m):
            continue
        D = fundamental_discriminant(m)
        if D < bound:
            out.append(D)
    return sorted(set(out))


def test_fundamental_discriminant_examples():
    assert fundamental_discriminant(29) == 29
    assert fundamental_discriminant(1517) == 1517
    assert fundamental_discriminant(2) == 8
    assert fundamental_discriminant(3) == 12
    with pytest.raises(ValueError):
        fundamental_discriminant(12)


def test_fundamental_unit_examples():
    # hand-checkable minimal solutions of x^2 - D y^2 = +-4
    assert fundamental_unit(5) == (1, 1, -1)     # golden ratio
    assert fundamental_unit(8) == (2, 1, -1)     # 1 + sqrt(2), doubled coords
    assert fundamental_unit(13) == (3, 1, -1)
    assert fundamental_unit(29) == (5, 1, -1)


def test_fundamental_unit_exact_norm_and_oracle():
    for D in fundamental_discriminants(500):
        x, y, sg = fundamental_unit(D)
        assert x * x - D * y * y == 4 * sg
        assert (x, y, sg) == pell_min_solution(D), D


def test_fundamental_unit_rejects_non_fundamental():
    with pytest.raises(ValueError):
        fundamental_unit(20)    # 20 = 4 * 5, not fundamental


def test_class_number_examples():
    assert class_number(5) == (1, 1)
    assert class_number(229)[0] == 3
    assert class_number(1517)[0] == 2


def test_class_number_oracle_sample():
    for D in fundamental_discriminants(1500):
        h, h_narrow = class_number(D)
        _, _, sg = fundamental_unit(D)
        assert h_narrow in (h, 2 * h)
        assert (h_narrow == 2 * h) == (sg == 1)
        assert h == brute_form_class_number(D, sg), D


def test_field_data_shape():
    data = field_data(1517)
    assert data.m == 1517 and data.D == 1517
    assert data.h == 2
    x, y = data.eps
    assert x * x - 1517 * y * y == 4 * data.eps_norm


def test_large_conductor_sanity():
    # D = 29 * 37 * 41, the biggest subfield discriminant in the survey's
    # first row; exercised heavily by the class-number pipeline
    data = field_data(43993)
    x, y = data.eps
    assert x * x - 43993 * y * y == 4 * data.eps_norm
    assert data.h >= 1 and data.h_narrow in (data.h, 2 * data.h)
