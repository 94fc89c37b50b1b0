import json

import pytest

from paperlab.cli import main
from paperlab.experiments import REGISTRY, ExperimentSpec, FeasibilityRefused, markdown_summary, run


def test_every_criterion_has_an_experiment():
    assert {e.criterion for e in REGISTRY.values()} >= set(range(1, 15))


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "collapse_quotient" in out and "envelope" in out


def test_run_writes_json_and_markdown(tmp_path):
    out = tmp_path / "report.json"
    assert main(["run", "collapse_quotient", "--n", "2", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert set(rep) >= {"check", "inputs", "left", "right", "verdict", "witness", "timing_s", "version"}
    assert rep["verdict"] == "mismatch"
    assert "collapse_quotient" in out.with_suffix(".md").read_text()


def test_exit_code_follows_claim(tmp_path):
    assert main(["run", "sd_product", "--out", str(tmp_path / "a.json")]) == 0


def test_feasibility_refused(capsys):
    assert main(["run", "collapse_quotient", "--n", "9"]) == 2
    assert "FeasibilityRefused" in capsys.readouterr().err
    with pytest.raises(FeasibilityRefused):
        run(ExperimentSpec("resolved_realization", trunc=3))
    with pytest.raises(FeasibilityRefused):
        run(ExperimentSpec("hexagon_pushout", bound=2))


def test_reports_are_reproducible():
    a = run(ExperimentSpec("cat_nerve_retraction", n=4, seed=7))
    b = run(ExperimentSpec("cat_nerve_retraction", n=4, seed=7))
    a.pop("timing_s"), b.pop("timing_s")
    assert a == b


def test_markdown_summary():
    md = markdown_summary([run(ExperimentSpec("hexagon_pushout"))])
    assert "| hexagon_pushout | 4 | mismatch | mismatch | yes |" in md
    assert "H2=Z" in md
