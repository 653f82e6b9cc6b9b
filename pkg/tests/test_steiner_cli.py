"""Tests for the steiner-kit CLI envelope and commands."""

from __future__ import annotations

import importlib.util
import json
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def _load_cli_module():
    root = Path(__file__).resolve().parents[1]
    cli_path = root / "scripts" / "steiner_cli.py"
    spec = importlib.util.spec_from_file_location("steiner_cli_local", cli_path)
    if spec is None or spec.loader is None:
        raise RuntimeError("Unable to load scripts/steiner_cli.py")
    module = importlib.util.module_from_spec(spec)
    sys.modules[spec.name] = module
    spec.loader.exec_module(module)
    return module


steiner_cli = _load_cli_module()


def _parse(argv: list[str]):
    parser = steiner_cli._build_parser()
    return steiner_cli._parse(parser, argv)


@pytest.fixture
def project(tmp_path: Path, monkeypatch) -> Path:
    (tmp_path / "pyproject.toml").write_text("[project]\nname='tmp'\n", encoding="utf-8")
    monkeypatch.setenv("STEINER_KIT_ROOT", str(tmp_path))
    monkeypatch.delenv("STEINER_KIT_LOG", raising=False)
    return tmp_path


def _run(project: Path, *argv: str):
    args = _parse([*argv, "--cwd", str(project)])
    return steiner_cli.execute_command(args)


def test_oriental_matches_golden_file(project: Path):
    code, response = _run(project, "oriental", "2")
    assert code == 0
    assert response["ok"] is True
    assert response["command"] == "oriental"
    assert response["errors"] == []
    golden = json.loads((FIXTURES / "oriental_2.json").read_text(encoding="utf-8"))
    assert response["data"] == golden
    assert (project / ".steiner-kit" / "config.md").exists()


def test_oriental_of_the_four_simplex(project: Path):
    code, response = _run(project, "oriental", "4")
    assert code == 0
    assert len(response["data"]["basis"]) == 31


def test_negative_oriental_is_an_input_error(project: Path):
    code, response = _run(project, "oriental", "-1")
    assert code == 2
    assert response["ok"] is False
    assert response["errors"][0]["code"] == "E_INPUT"
    assert response["errors"][0]["kind"] == "BadIndex"


def test_decompose_renders_the_golden_tree(project: Path):
    complex_file = project / "o4.json"
    code, _ = _run(project, "oriental", "4", "--out", str(complex_file))
    assert code == 0 and complex_file.exists()

    code, response = _run(project, "decompose", str(complex_file), '{"0234": 1, "0124": 1}')
    assert code == 0
    data = response["data"]
    assert data["render"] == "((234 *0 12 *0 01) *1 0124) *2 ((34 *0 23 *0 012) *1 0234)"
    assert data["comp_degree"] == 2
    assert data["dim"] == 3
    assert data["check"] is True


TRIANGLE_PATH = {"dim": 1, "minus": [{"0": 1}, {"01": 1, "12": 1}], "plus": [{"2": 1}, {"01": 1, "12": 1}]}


def test_decompose_accepts_a_steiner_table(project: Path):
    code, response = _run(project, "decompose", str(FIXTURES / "oriental_2.json"), json.dumps(TRIANGLE_PATH))
    assert code == 0
    data = response["data"]
    assert data["chain"] == {"01": 1, "12": 1}
    assert data["dim"] == 1
    assert data["render"] == "12 *0 01"
    assert data["table"] == TRIANGLE_PATH
    assert data["check"] is True


def test_decompose_rejects_an_incoherent_table(project: Path):
    table = {"dim": 1, "minus": [{"0": 1}, {"01": 1}], "plus": [{"2": 1}, {"01": 1}]}
    code, response = _run(project, "decompose", str(FIXTURES / "oriental_2.json"), json.dumps(table))
    assert code == 2
    assert response["errors"][0]["kind"] == "NotCoherentTable"


def test_decompose_rejects_incoherent_chains(project: Path):
    code, response = _run(project, "decompose", str(FIXTURES / "oriental_2.json"), '{"0": 1, "1": 1}')
    assert code == 2
    assert response["errors"][0]["kind"] == "NotCoherent"


def test_decompose_rejects_bad_json(project: Path):
    code, response = _run(project, "decompose", str(FIXTURES / "oriental_2.json"), "{not json")
    assert code == 2
    assert response["errors"][0]["kind"] == "MalformedInput"


def test_check_reports_a_broken_boundary(project: Path):
    code, response = _run(project, "check", str(FIXTURES / "broken_square.json"))
    assert code == 2
    assert response["errors"][0]["kind"] == "BoundarySquareNonzero"


def test_check_reports_a_loop(project: Path):
    code, response = _run(project, "check", str(FIXTURES / "looped.json"))
    assert code == 1
    assert response["errors"][0]["code"] == "E_CHECK"
    assert response["data"]["unitary"]["ok"] is True
    assert response["data"]["loop_free"]["witness"]["level"] == 0


def test_inline_complexes_get_a_default_name(project: Path):
    interval = {
        "basis": [{"id": "0", "dim": 0}, {"id": "1", "dim": 0}, {"id": "01", "dim": 1}],
        "d": {"01": {"1": 1, "0": -1}},
        "e": {"0": 1, "1": 1},
    }
    code, response = _run(project, "check", json.dumps(interval))
    assert code == 0
    assert response["data"]["complex"] == "K"


def test_check_accepts_an_oriental(project: Path):
    code, response = _run(project, "check", str(FIXTURES / "oriental_2.json"))
    assert code == 0
    assert response["data"]["complex"] == "Δ[2]"


def test_verify_a_corrupted_simplicial_set(project: Path):
    code, response = _run(project, "verify", "--complex", str(FIXTURES / "corrupted_triangle.json"))
    assert code == 1
    (suite,) = response["data"]["suites"]
    checks = {f["check"] for f in suite["failures"]}
    assert {"simplicial_identities", "chain_complex"} <= checks


def test_verify_small_run_passes(project: Path):
    code, response = _run(project, "verify", "--max-n", "3", "--suite", "all", "--samples", "50")
    assert code == 0, response["data"]
    data = response["data"]
    assert data["max_n"] == 3
    assert data["seed"] == 1729
    assert [s["name"] for s in data["suites"]] == ["faces", "coherence", "horns", "complicial", "bases", "morphisms"]
    assert all(s["checked"] > 0 for s in data["suites"])


def test_verify_reads_seed_from_config(project: Path):
    steiner_cli.ensure_project_layout(project)
    config = project / ".steiner-kit" / "config.md"
    config.write_text(config.read_text(encoding="utf-8").replace("verify.seed: 1729", "verify.seed: 7"), encoding="utf-8")
    code, response = _run(project, "verify", "--suite", "bases", "--max-n", "2")
    assert code == 0
    assert response["data"]["seed"] == 7
    code, response = _run(project, "verify", "--suite", "bases", "--max-n", "2", "--seed", "11")
    assert response["data"]["seed"] == 11


def test_horn_equation(project: Path):
    code, response = _run(project, "horn", "4", "2")
    assert code == 0
    data = response["data"]
    assert data["check"] is True
    assert data["x"] == "0134"
    assert data["alpha"] == "+"
    assert [lvl["k"] for lvl in data["levels"]] == [1, 2, 3]


def test_horn_rejects_bad_indices(project: Path):
    code, response = _run(project, "horn", "3", "5")
    assert code == 2
    assert response["errors"][0]["kind"] == "BadIndex"


def test_text_output(project: Path, capsys):
    code, _ = steiner_cli.run_cli(["horn", "2", "0", "--output", "text", "--cwd", str(project)])
    assert code == 0
    out = capsys.readouterr().out
    assert "command: horn  ok: True" in out
    assert "equation: y : 02 → 1_{2} *0 x *0 01" in out
