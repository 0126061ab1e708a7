import math

import pytest

from qdistinct import constants as K
from qdistinct import laws as L
from qdistinct.errors import ContractError

EXACT = [name for name, c in K.REGISTRY.items() if c.expr is not None]


@pytest.mark.parametrize("name", EXACT)
def test_decimal_matches_expression(name):
    const = K.REGISTRY[name]
    assert const.value(1.0) == pytest.approx(const.decimal, abs=1e-12)


def test_numerical_entries_match_procedures():
    m, d = L.mp_median_and_diameter()
    assert K.value("mp-median") == pytest.approx(m, abs=1e-10)
    assert K.value("orbit-diameter") == pytest.approx(d, abs=1e-10)


def test_cross_checks_against_laws():
    consts = L.closed_form_constants()
    assert K.value("transmission-center") == pytest.approx(consts["T1"], abs=1e-12)
    assert K.value("entropic-center") == pytest.approx(consts["E1"], abs=1e-12)
    assert K.value("trace-center") == pytest.approx(L.trace_center_c(1.0), abs=1e-9)
    assert K.value("trace-generic") == pytest.approx(L.trace_pair_c(1.0), abs=1e-9)
    assert K.value("chernoff") == pytest.approx(L.chernoff_min()[1], abs=1e-12)
    aub = L.aubrun_negativity(1.0)
    assert K.value("negative-fraction") == pytest.approx(aub["f_N"], abs=1e-12)
    assert K.value("negativity-integral") == pytest.approx(aub["N"], abs=1e-12)
    assert K.value("hs-pair-scaled") == pytest.approx(L.hs_pair_scaled_c(1.0), abs=1e-9)
    assert K.value("hs-center-scaled") == pytest.approx(L.hs_center_scaled_c(1.0), abs=1e-9)
    # root fidelity with 1/N tends to int sqrt(x) dMP_1
    assert K.value("root-fidelity-center") == pytest.approx(L.MP(1.0).functional(math.sqrt), abs=1e-9)


def test_c_dependent_entries():
    assert K.value("cdep-hs-center", c=4.0) == pytest.approx(0.5)
    assert K.value("cdep-hs-pair", c=2.0) == pytest.approx(1.0)
    for c in (2.0, 5.0):
        assert K.value("cdep-hs-center", c=c) == pytest.approx(L.hs_center_scaled_c(c), rel=1e-9)


def test_ball_entries():
    assert K.value("ball-3-l1") == pytest.approx(55 * math.pi / 112)
    assert K.value("ball-3-l1-printed") == 1.15428
    assert K.get("ball-2-linf").expr is None


def test_formatting_and_lookup():
    assert K.get("trace-generic").formatted() == "1/4 + 1/pi = 0.568309..."
    with pytest.raises(ContractError):
        K.get("no-such-constant")


def test_table1_reference():
    assert K.table1_reference("tr", "pure") == 1.0
    assert K.table1_reference("t", "generic") == 0.5
    assert K.table1_reference("b", "pure") == pytest.approx(math.sqrt(2))
    assert set(K.TABLE1) == {"tr", "hs", "inf", "t", "b", "e", "h"}
