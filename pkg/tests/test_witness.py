import pytest

from eucideal.errors import ConditionFailure, SearchExhausted
from eucideal.fields import conductor, validate_biquadratic, validate_cyclic
from eucideal.witness import (check_conditions, derive_u, find_s,
                              witness_pair)


def spec_for(row):
    q, k, third = row["params"]
    if q >= 29 and third > k:
        return validate_biquadratic(q, k, third)
    return validate_cyclic(q, k, third)


def test_find_s_examples():
    assert find_s(validate_biquadratic(29, 37, 41)) == 13
    assert find_s(validate_biquadratic(29, 37, 61)) == 23
    assert find_s(validate_cyclic(17, 41, 4)) == 5


def test_derive_u_examples():
    # 13 = 1 (mod 4) forces the shift by 2 * 43993; 23 = 3 (mod 4) stays
    assert derive_u(13, validate_biquadratic(29, 37, 41)) == 87999
    assert derive_u(23, validate_biquadratic(29, 37, 61)) == 23
    assert derive_u(5, validate_cyclic(17, 41, 4)) == 1399


def test_check_conditions_passes():
    rep = check_conditions(87999, validate_biquadratic(29, 37, 41))
    assert rep.all_pass and rep.failed == ()
    assert rep.ell == 16 * 43993
    rep = check_conditions(23, validate_biquadratic(29, 37, 61))
    assert rep.all_pass


def test_check_conditions_failure_carries_report():
    with pytest.raises(ConditionFailure) as exc:
        check_conditions(1, validate_biquadratic(29, 37, 41))
    report = exc.value.report
    assert 2 in report.failed         # (u-1)/2 = 0 shares every factor with ell
    assert not report.all_pass


def test_check_conditions_rejects_even_or_nonpositive():
    spec = validate_biquadratic(29, 37, 41)
    with pytest.raises(ValueError):
        check_conditions(10, spec)
    with pytest.raises(ValueError):
        check_conditions(-3, spec)


def test_witness_pair_examples():
    pair = witness_pair(validate_biquadratic(29, 37, 41))
    assert (pair.s, pair.u, pair.ell) == (13, 87999, 703888)
    assert pair.conditions_verified == (True, True, True)
    pair = witness_pair(validate_cyclic(17, 41, 4))
    assert (pair.s, pair.u) == (5, 1399)
    assert pair.ell == 16 * 697


def test_witness_pair_deterministic():
    spec = validate_cyclic(17, 89, 8)
    assert witness_pair(spec) == witness_pair(spec)


def test_search_bound_exhaustion():
    with pytest.raises(SearchExhausted):
        find_s(validate_biquadratic(29, 37, 41), bound=12)


def test_golden_witnesses(table1_rows, table2_rows):
    for row in table1_rows + table2_rows:
        if "s" not in row:
            continue
        spec = spec_for(row)
        pair = witness_pair(spec)
        assert (pair.s, pair.u) == (row["s"], row["u"]), row["params"]
        assert pair.ell == 16 * conductor(spec)
        # the audit is independent of the search: re-run it standalone
        assert check_conditions(pair.u, spec).all_pass
