import json

import pytest

from soscascade import data as shipped
from soscascade.cli import main

TOPOLOGY = str(shipped.default_topology_path())
SCENARIO = str(shipped.collision_scenario_path())
BASELINE = str(shipped.baseline_strategy_path())
HABITATION = str(shipped.habitation_only_strategy_path())
CATALOG = str(shipped.default_catalog_path())


def write_json(path, doc):
    path.write_text(json.dumps(doc) + "\n", encoding="utf-8")
    return str(path)


class TestRun:
    def test_happy_path(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["run", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "-o", str(out)]
        )
        assert code == 0
        assert (out / "trace.csv").exists()
        summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
        assert summary["strategy"] == "uniform-baseline"
        assert summary["converged"] is True
        assert summary["affected"] == ["canadarm3", "halo", "i_hab", "ppe"]
        first_line = (out / "trace.csv").read_text(encoding="utf-8").splitlines()[0]
        assert first_line == "t,node_id,impact"

    def test_missing_topology_file_is_io_error(self, tmp_path, capsys):
        code = main(
            ["run", "--topology", "/nonexistent/gw.json", "--scenario", SCENARIO,
             "--strategy", BASELINE, "-o", str(tmp_path)]
        )
        assert code == 2
        assert "/nonexistent/gw.json" in capsys.readouterr().err

    def test_unknown_source_is_validation_error(self, tmp_path, capsys):
        scenario = write_json(tmp_path / "s.json", {"source": "mir", "initial_impact": 0.5})
        code = main(
            ["run", "--topology", TOPOLOGY, "--scenario", scenario,
             "--strategy", BASELINE, "-o", str(tmp_path / "out")]
        )
        assert code == 1
        assert "UnknownSource" in capsys.readouterr().err

    def test_inline_strategy_used_when_no_flag(self, tmp_path):
        scenario = write_json(
            tmp_path / "s.json",
            {
                "source": "canadarm3",
                "initial_impact": 0.33,
                "strategy": {"name": "inline", "rule": "uniform_baseline", "protected_alpha": 0.0},
            },
        )
        out = tmp_path / "out"
        assert main(["run", "--topology", TOPOLOGY, "--scenario", scenario, "-o", str(out)]) == 0
        summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
        assert summary["strategy"] == "inline"
        assert summary["affected"] == ["canadarm3"]

    def test_no_strategy_anywhere(self, tmp_path, capsys):
        code = main(
            ["run", "--topology", TOPOLOGY, "--scenario", SCENARIO, "-o", str(tmp_path / "out")]
        )
        assert code == 1
        assert "strategy" in capsys.readouterr().err


class TestCompare:
    def run_fixture(self, out):
        return main(
            ["compare", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "--strategy", HABITATION, "-o", str(out)]
        )

    def test_fixture_comparison(self, tmp_path):
        out = tmp_path / "cmp"
        assert self.run_fixture(out) == 0
        doc = json.loads((out / "comparison.json").read_text(encoding="utf-8"))
        assert doc["baseline"]["strategy"] == "uniform-baseline"
        assert doc["alternative"]["strategy"] == "habitation-only"
        assert doc["affected_increase_pct"] == 250.0
        assert doc["impact_reduction_pct"] == pytest.approx(92.698, abs=0.01)
        assert (out / "trace_baseline.csv").exists()
        assert (out / "trace_alternative.csv").exists()

    def test_identical_strategies_score_zero(self, tmp_path):
        out = tmp_path / "same"
        code = main(
            ["compare", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "--strategy", BASELINE, "-o", str(out)]
        )
        assert code == 0
        doc = json.loads((out / "comparison.json").read_text(encoding="utf-8"))
        assert doc["affected_increase_pct"] == 0.0
        assert doc["impact_reduction_pct"] == 0.0

    def test_single_strategy_is_usage_error(self, tmp_path, capsys):
        code = main(
            ["compare", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "-o", str(tmp_path)]
        )
        assert code == 1
        assert "two" in capsys.readouterr().err

    def test_sweep(self, tmp_path):
        out = tmp_path / "sweep"
        code = main(
            ["compare", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "--strategy", HABITATION,
             "--sweep-alpha", "0.1:0.5:0.1", "-o", str(out)]
        )
        assert code == 0
        doc = json.loads((out / "comparison.json").read_text(encoding="utf-8"))
        assert [row["alpha"] for row in doc["sweep"]] == [0.1, 0.2, 0.3, 0.4, 0.5]
        csv_lines = (out / "sweep.csv").read_text(encoding="utf-8").splitlines()
        assert len(csv_lines) == 6  # header + 5 rows
        # protecting less (higher alpha) never shrinks the affected set
        counts = [row["baseline_affected"] for row in doc["sweep"]]
        assert counts == sorted(counts)

    def test_bad_sweep_spec(self, tmp_path, capsys):
        code = main(
            ["compare", "--topology", TOPOLOGY, "--scenario", SCENARIO,
             "--strategy", BASELINE, "--strategy", HABITATION,
             "--sweep-alpha", "0.5:0.1:0.1", "-o", str(tmp_path)]
        )
        assert code == 1

    def test_byte_identical_reruns(self, tmp_path):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        assert self.run_fixture(out1) == 0
        assert self.run_fixture(out2) == 0
        for name in ("comparison.json", "trace_baseline.csv", "trace_alternative.csv"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


class TestAnalyze:
    def test_shipped_topology(self, tmp_path):
        out = tmp_path / "vuln"
        assert main(["analyze", "--topology", TOPOLOGY, "-o", str(out)]) == 0
        doc = json.loads((out / "vulnerability.json").read_text(encoding="utf-8"))
        assert doc["ranking"][0]["node"] == "halo"
        assert "halo" in doc["articulation_points"]
        assert doc["weighted_degree"]["halo"] == 7.5

    def test_path_topology(self, tmp_path):
        topo = write_json(
            tmp_path / "path.json",
            {
                "nodes": [
                    {"id": "A", "kind": "core"},
                    {"id": "B", "kind": "core"},
                    {"id": "C", "kind": "core"},
                ],
                "edges": [
                    {"a": "A", "b": "B", "weight": 1.0},
                    {"a": "B", "b": "C", "weight": 1.0},
                ],
            },
        )
        out = tmp_path / "out"
        assert main(["analyze", "--topology", topo, "-o", str(out)]) == 0
        doc = json.loads((out / "vulnerability.json").read_text(encoding="utf-8"))
        assert doc["articulation_points"] == ["B"]

    def test_empty_node_list_is_validation_error(self, tmp_path, capsys):
        topo = write_json(tmp_path / "empty.json", {"nodes": [], "edges": []})
        assert main(["analyze", "--topology", topo, "-o", str(tmp_path / "out")]) == 1
        assert "node" in capsys.readouterr().err


class TestRequirements:
    def test_onboard_computer_for_omcv(self, capsys):
        code = main(
            ["requirements", "--catalog", CATALOG,
             "--component", "Onboard Computer", "--system", "OMCV"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3
        assert any(
            "SHALL implement Error Detection and Correcting Memory (CM0045)" in line
            for line in lines
        )
        assert all(line.startswith("Onboard Computer SHALL implement ") for line in lines)

    def test_antennas_for_ppe(self, capsys):
        code = main(
            ["requirements", "--catalog", CATALOG, "--system", "PPE", "--component", "Antennas"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "SHALL implement TRANSEC (CM0029)" in out

    def test_explicit_control_pairing(self, capsys):
        # the PPE requirement names TRANSEC on the storage component even
        # though the catalog row for CM0029 sits under Antennas
        code = main(
            ["requirements", "--catalog", CATALOG,
             "--component", "Data processing/Storage", "--control", "CM0029"]
        )
        assert code == 0
        assert capsys.readouterr().out == (
            "Data processing/Storage SHALL implement TRANSEC (CM0029) to ensure the "
            "confidentiality and integrity of communication signals.\n"
        )

    def test_unknown_component(self, capsys):
        code = main(["requirements", "--catalog", CATALOG, "--component", "Thrusters"])
        assert code == 1
        assert "UnknownComponent" in capsys.readouterr().err

    def test_default_catalog_used_without_flag(self, capsys):
        assert main(["requirements", "--component", "Antennas", "--system", "PPE"]) == 0
        assert "CM0029" in capsys.readouterr().out


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert main(["conquer"]) == 1

    def test_missing_required_flag(self, capsys):
        assert main(["run", "--scenario", SCENARIO]) == 1

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
