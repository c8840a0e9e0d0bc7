# tests/extremal/test_extremal.py
from concurrent.futures import ThreadPoolExecutor

import pytest

from qmcert.core.exceptions import DomainError
from qmcert.domains.extremal import (
    X,
    check_auxidentity,
    check_depth1_recurrence_forms,
    check_depth2_chain,
    check_depth2_exceptional,
    check_kkd1_recurrences,
    check_lowpos,
    check_ode_depth1,
    check_ode_depth1_expanded,
    check_ode_depth2,
    check_x121,
    extremal,
    extremal_table,
    registry,
)
from qmcert.domains.qm1 import E2, E4, E6, qm1_to_qexp


def failures(certs):
    return [c.name for c in certs if not c.passed]


def test_small_weights_closed_form():
    assert X(6, 1) == (E2 * E4 - E6) / 720
    assert X(4, 2) == (E4 - E2 * E2) / 288


def test_expansion_of_x61():
    series = qm1_to_qexp(X(6, 1), 12)
    assert [series.coefficient(n) for n in range(0, 12, 2)] == [0, 1, 18, 84, 292, 630]


def test_tabulated_forms():
    assert failures(extremal_table()) == []


def test_recurrences_hit_the_normalisation():
    for w, s in ((18, 1), (20, 1), (16, 2), (18, 2)):
        form = extremal(w, s)
        assert form.recurrence_scale == 1
        assert form.poly.weight_depth().depth == s
        series = qm1_to_qexp(form.poly, 2 * form.expected_order + 2)
        assert series.order == 2 * form.expected_order
        assert series.coefficient(series.order) == 1


def test_registry_memoises():
    assert extremal(12, 1) is extremal(12, 1)


def test_differential_equations():
    assert check_ode_depth1(12).passed
    assert check_ode_depth1_expanded(18).passed
    assert check_ode_depth2(8).passed
    with pytest.raises(DomainError):
        check_ode_depth1(8)
    with pytest.raises(DomainError):
        check_ode_depth2(10)


def test_depth1_recurrences():
    assert failures(check_kkd1_recurrences(24)) == []
    assert failures(check_depth1_recurrence_forms(12)) == []


def test_depth2_relations():
    assert failures(check_depth2_chain(12)) == []
    assert failures(check_depth2_exceptional()) == []


def test_low_weight_identities():
    assert failures(check_lowpos()) == []
    assert check_auxidentity().passed
    assert check_x121().passed


def test_domain_errors():
    for w, s in ((6, 2), (4, 1), (7, 1), (8, 3)):
        with pytest.raises(DomainError):
            extremal(w, s)


def test_registry_clear_rebuilds_the_same_form():
    before = X(18, 1)
    registry.clear()
    assert X(18, 1) == before


def test_registry_concurrent_lookups_share_one_form():
    registry.clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        forms = list(pool.map(lambda _: extremal(36, 1), range(16)))
    assert all(form is forms[0] for form in forms)
    assert extremal(30, 1) is extremal(30, 1)
