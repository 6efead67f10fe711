import json
import random
import warnings

import pytest
from scipy.stats import norm
from statsmodels.stats.proportion import proportion_confint

from frachyp.errors import InvalidParams, RegimeWarning
from frachyp.experiment import (ExperimentConfig, aggregate, cell_edge_count, run_experiment, run_trial,
                                wilson_interval)
from frachyp.hypergraph import gen_random_uniform
from frachyp.theorem1 import SolverParams, solve_theorem1

SMALL = ((6, 5, 2, 1.0),)


def test_wilson_matches_statsmodels():
    alpha = 2 * norm.sf(3)
    for k, t in [(0, 10), (3, 10), (27, 100), (2700, 10000), (50, 50)]:
        lo, hi = wilson_interval(k, t)
        ref = proportion_confint(k, t, alpha=alpha, method="wilson")
        assert lo == pytest.approx(ref[0], abs=1e-12) and hi == pytest.approx(ref[1], abs=1e-12)


def test_wilson_invalid():
    with pytest.raises(InvalidParams):
        wilson_interval(3, 0)
    with pytest.raises(InvalidParams):
        wilson_interval(4, 3)


def test_config_validation():
    with pytest.raises(InvalidParams):
        ExperimentConfig(SMALL, 30, trials=0)
    with pytest.raises(InvalidParams):
        ExperimentConfig(((6, 5, 2, 0.0),), 30)
    with pytest.raises(InvalidParams):
        ExperimentConfig(SMALL, 30, method="greedy")
    with pytest.raises(InvalidParams):
        ExperimentConfig(SMALL, 4)


def test_single_trial_single_cell():
    rep = run_experiment(ExperimentConfig(SMALL, 30, trials=1, base_seed=5))
    assert len(rep.cells) == 1 and len(rep.records[0]) == 1
    assert rep.records[0][0]["seed"] == 5
    assert rep.cells[0].trials == 1


def test_deterministic_reports():
    cfg = ExperimentConfig(SMALL + ((8, 6, 2, 0.5),), 30, trials=40, base_seed=3)
    assert run_experiment(cfg) == run_experiment(cfg)


def test_aggregation_order_independent():
    n, a, b, mult = SMALL[0]
    m = cell_edge_count("theorem1", n, a, b, mult)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        records = [run_trial("theorem1", n, a, b, 30, m, s) for s in range(60)]
    shuffled = records[:]
    random.Random(1).shuffle(shuffled)
    assert aggregate("theorem1", SMALL[0], m, records) == aggregate("theorem1", SMALL[0], m, shuffled)


def test_trials_replay_from_seed():
    rep = run_experiment(ExperimentConfig(SMALL, 30, trials=25, base_seed=100))
    m = rep.cells[0].edges
    for r in rep.records[0]:
        H = gen_random_uniform(30, 6, m, r["seed"])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            assert solve_theorem1(H, SolverParams(5, 2, r["seed"])).status == r["status"]


def test_summary_fields_and_ranges():
    rep = run_experiment(ExperimentConfig(SMALL, 30, trials=50))
    c = rep.cells[0]
    assert 0 <= c.success_rate <= 1
    assert set(c.frequencies) == {"B1", "B2", "B3", "B4", "B5"}
    for ev, f in c.frequencies.items():
        lo, hi = c.wilson[ev]
        assert 0 <= lo <= f <= hi <= 1
    assert c.unclassified_failures == 0
    assert c.seeds == (0, 49)
    json.dumps(rep.summary())


def test_alon_cells():
    rep = run_experiment(ExperimentConfig(((3, 9, 1, 1.0),), 30, trials=30, method="alon"))
    c = rep.cells[0]
    assert c.edges == 79 and c.success_rate == 1.0
    assert c.recolor_bound == pytest.approx(79 / 36)


def test_output_files(tmp_path):
    out = tmp_path / "run"
    run_experiment(ExperimentConfig(SMALL, 30, trials=5, out=str(out), export_csv=True))
    lines = (out / "trials.jsonl").read_text().splitlines()
    assert len(lines) == 5 and json.loads(lines[0])["n"] == 6
    assert json.loads((out / "summary.json").read_text())["cells"][0]["trials"] == 5
    assert (out / "grid.csv").read_text().startswith("n,a,b,multiplier")


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(OSError):
        run_experiment(ExperimentConfig(SMALL, 30, trials=2, out=str(blocker / "sub")))
