import math

import numpy as np
import pytest

from qdistinct import constants as K
from qdistinct import experiments as E
from qdistinct.ensembles import SeededStream
from qdistinct.errors import ContractError


def test_summarize_oracle():
    v = np.array([1.0, 2.0, 4.0, 7.0])
    row = E.summarize("x", v, 3.0)
    assert row.mean == pytest.approx(3.5)
    assert row.stderr == pytest.approx(np.std(v, ddof=1) / 2)
    assert row.diff == pytest.approx(0.5)
    assert tuple(row.as_dict()) == E.ROW_FIELDS
    lone = E.summarize("y", [1.0])
    assert math.isnan(lone.stderr) and lone.diff is None


def test_run_samples_thread_independent():
    fn = lambda s: float(s.rng().normal())
    a = E.run_samples(fn, 50, SeededStream(9), threads=1)
    b = E.run_samples(fn, 50, SeededStream(9), threads=4)
    assert np.array_equal(a, b)


def test_run_plan_deterministic():
    plan = E.dimension_plan("tr-pair", [4, 8], samples=20, seed=5)
    one = E.run_plan(plan, threads=1)
    many = E.run_plan(plan, threads=3)
    assert [r.as_dict() for r in one] == [r.as_dict() for r in many]
    assert one[0].reference == pytest.approx(K.value("trace-generic"))


def test_stderr_shrinks_like_root_samples():
    small = E.run_plan(E.dimension_plan("tr-center", [6], 400, 1))[0]
    large = E.run_plan(E.dimension_plan("tr-center", [6], 800, 2))[0]
    assert 0.6 <= large.stderr / small.stderr <= 0.8


def test_c_plan_references():
    rows = E.run_plan(E.c_plan("hs-scaled-center", 20, [1.0, 4.0], 10, 3))
    assert rows[1].reference == pytest.approx(K.value("cdep-hs-center", c=4.0))
    with pytest.raises(ContractError):
        E.c_plan("tr-pair", 4, [0.01], 10, 0)


def test_plan_validation():
    with pytest.raises(ContractError):
        E.ExperimentPlan("tr-pair", ((4, 4),), 1, 0)
    with pytest.raises(ContractError):
        E.ExperimentPlan("tr-pair", (), 10, 0)
    with pytest.raises(ContractError):
        E.ExperimentPlan("tr-pair", ((0, 4),), 10, 0)
    with pytest.raises(ContractError):
        E.ExperimentPlan("nope", ((4, 4),), 10, 0)


def test_tail_decreases_with_dimension():
    rows = E.concentration_tail([8, 32], eps=0.05, samples=200, seed=4)
    assert rows[0].fraction > rows[1].fraction
    assert rows[0].sd > rows[1].sd
    assert tuple(rows[0].as_dict()) == E.TAIL_FIELDS
    with pytest.raises(ContractError):
        E.concentration_tail([8], eps=0.0, samples=10, seed=0)


def test_table1_pure_column():
    col = E.table1_pure_column()
    for metric, val in col.items():
        assert val == pytest.approx(K.table1_reference(metric, "pure"), abs=1e-12)


def test_table1_shape():
    rows = E.table1(6, samples=4, seed=0)
    assert len(rows) == 21
    assert {r.label.split("/")[1] for r in rows} == {"center", "generic", "pure"}


def test_free_product_identity():
    one = lambda t: np.ones_like(t)
    chk = E.free_product_check(one, lambda t: t, 10, 5, 0)
    assert chk.mc.mean == pytest.approx(1.0, abs=1e-12)
    assert chk.quadrature == pytest.approx(1.0, abs=1e-9)


def test_ball_table_rows():
    rows = E.ball_table([1, 3], samples=2000, seed=0)
    labels = [r.label for r in rows]
    assert labels == ["n=1 l1", "n=1 l2", "n=1 linf", "n=3 l1", "n=3 l2", "n=3 linf",
                      "n=3 l1-tabulated"]
    assert rows[0].mean == pytest.approx(2 / 3, abs=0.03)


def test_suites_shapes():
    assert len(E.classical_table(8, 5, 0, "statistical")) == 6
    with pytest.raises(ContractError):
        E.classical_table(8, 5, 0, "other")
    assert len(E.coherence_suite(8, 5, 0, "real", "pure")) == 3
    assert len(E.coherence_suite(8, 5, 0, "complex", "mixed")) == 2
    ent = E.entanglement_suite(3, 3, 5, 0)
    assert ent[1].mean == pytest.approx(ent[0].mean / 2)
    assert len(E.pure_entanglement_suite(4, 5, 0)) == 2


def test_rescaled_spectrum_mean():
    vals = E.rescaled_spectrum_sample(10, 20, 30, 0)
    assert vals.size == 300
    assert vals.mean() == pytest.approx(20 / 10, abs=1e-9)  # mean of MP_c is c
