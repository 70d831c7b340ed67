"""Benchmark harness: rows, checksums, rendering, config validation.

Timings are environment noise and are never asserted beyond positivity;
everything else a report carries must be reproducible run to run.
"""

import numpy as np
import pytest

from lineclip.bench import (BenchConfig, outcome_checksum, render_report,
                            run_bench)
from lineclip.clippers import Algorithm
from lineclip.errors import AxisParallelNotSupported, ConfigError
from lineclip.geometry import ClipWindow
from lineclip.workload import SCENARIOS, ScenarioId

SMALL = dict(n=1500, repetitions=3, counted_sample=64)

AXIS_SCENARIOS = (ScenarioId.P8, ScenarioId.P9, ScenarioId.P10,
                  ScenarioId.P11, ScenarioId.P12)


@pytest.fixture(scope="module")
def small_report():
    return run_bench(BenchConfig(scenarios=(ScenarioId.P1, ScenarioId.P6,
                                            ScenarioId.P9),
                                 **SMALL))


def test_lb_is_the_reference_speed(small_report):
    for row in small_report.rows:
        if row.algorithm is Algorithm.LB:
            assert row.v == 1.0
        elif not row.excluded:
            assert row.v is not None and row.v > 0.0


def test_checksums_agree_across_algorithms(small_report):
    for scen in (ScenarioId.P1, ScenarioId.P6, ScenarioId.P9):
        sums = {r.outcome_checksum for r in small_report.rows
                if r.scenario is scen and not r.excluded}
        assert len(sums) == 1


def test_timings_are_positive(small_report):
    for row in small_report.rows:
        if not row.excluded:
            assert row.ns_per_line > 0.0


def test_msf1_is_excluded_from_axis_parallel_scenarios(small_report):
    for row in small_report.rows:
        if row.algorithm is Algorithm.MSF1 and row.scenario is ScenarioId.P9:
            assert row.excluded
            assert row.ns_per_line is None and row.v is None


def test_forcing_msf1_onto_axis_input_raises():
    cfg = BenchConfig(scenarios=(ScenarioId.P9,),
                      algorithms=(Algorithm.MSF1,),
                      force_msf1=True, **SMALL)
    with pytest.raises(AxisParallelNotSupported):
        run_bench(cfg)


def test_report_checksums_and_ops_are_stable_across_reruns():
    cfg = BenchConfig(scenarios=(ScenarioId.P3, ScenarioId.P12), **SMALL)
    a = run_bench(cfg)
    b = run_bench(cfg)
    for ra, rb in zip(a.rows, b.rows):
        assert ra.scenario is rb.scenario and ra.algorithm is rb.algorithm
        assert ra.excluded == rb.excluded
        assert ra.outcome_checksum == rb.outcome_checksum
        assert ra.ops_mean == rb.ops_mean


def test_csv_header_is_the_documented_contract(small_report):
    text = render_report(small_report, "csv")
    assert text.splitlines()[0] == ("scenario,algorithm,ns_per_line,v,"
                                    "divisions,multiplications,sign_tests,"
                                    "intersections")
    # full matrix: excluded pairs still get a row, rendered as n/a
    lines = text.splitlines()
    assert len(lines) == 1 + len(small_report.rows)
    assert "P9,msf1,n/a,n/a,n/a,n/a,n/a,n/a" in lines


def test_markdown_table_shape(small_report):
    lines = render_report(small_report, "md").splitlines()
    head = lines[0]
    assert head.startswith("| Case |")
    for name in ("LB", "SF", "MSF", "MSF-1", "LSA"):
        assert f"{name} ns/line" in head
    for name in ("v_SF", "v_MSF", "v_MSF-1", "v_LSA"):
        assert name in head
    p9 = next(l for l in lines if l.startswith("| P9 "))
    assert "n/a" in p9
    p1 = next(l for l in lines if l.startswith("| P1 "))
    assert "n/a" not in p1


def test_markdown_alias(small_report):
    assert render_report(small_report, "markdown") == \
           render_report(small_report, "md")


def test_render_rejects_unknown_format(small_report):
    with pytest.raises(ConfigError):
        render_report(small_report, "json")


@pytest.mark.parametrize("kwargs", [
    dict(scenarios=()),
    dict(algorithms=()),
    dict(scenarios=(ScenarioId.P1, ScenarioId.P1)),
    dict(algorithms=(Algorithm.SF, Algorithm.SF)),
    dict(n=0),
    dict(repetitions=2),
    dict(format="yaml"),
    dict(counted_sample=0),
])
def test_config_validation(kwargs):
    base = dict(n=100, repetitions=3)
    base.update(kwargs)
    with pytest.raises(ConfigError):
        BenchConfig(**base)


def test_outcome_checksum_ignores_endpoint_order():
    win = ClipWindow(0.0, 0.0, 10.0, 10.0)
    a = np.array([[1.0, 0.0, 1.0, 10.0, 9.0],
                  [0.0, 0.0, 0.0, 0.0, 0.0]])
    swapped = a.copy()
    swapped[0, 1:3], swapped[0, 3:5] = a[0, 3:5], a[0, 1:3]
    assert outcome_checksum(a, win) == outcome_checksum(swapped, win)


def test_outcome_checksum_sees_coordinate_changes():
    win = ClipWindow(0.0, 0.0, 10.0, 10.0)
    a = np.array([[1.0, 0.0, 1.0, 10.0, 9.0]])
    b = a.copy()
    b[0, 4] = 8.99  # past the quantization grid
    assert outcome_checksum(a, win) != outcome_checksum(b, win)


def test_default_config_covers_the_full_matrix():
    cfg = BenchConfig(n=1, repetitions=3)
    assert cfg.scenarios == SCENARIOS
    assert cfg.algorithms == tuple(Algorithm)
    assert cfg.window == ClipWindow(-1.0, -1.0, 1.0, 1.0)
