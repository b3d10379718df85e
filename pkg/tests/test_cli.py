import json
import subprocess
import sys

import pytest

from vnum.cli import EXIT_GUARD, EXIT_OK, EXIT_PARSE, EXIT_SUITE, FAMILIES, main
from vnum.io import format_edges, format_facets
from vnum.families import nerve_counterexample, rp2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def rp2_file(tmp_path):
    path = tmp_path / "rp2.facets"
    path.write_text(format_facets(rp2()))
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text(format_edges(nerve_counterexample()))
    return str(path)


def test_v_on_rp2(capsys, rp2_file):
    code, out, _ = run(capsys, "v", "-i", rp2_file, "--json")
    assert code == EXIT_OK and json.loads(out)["v"] == 3


def test_betti_depends_on_char(capsys, rp2_file):
    _, out3, _ = run(capsys, "betti", "-i", rp2_file, "--char", "3", "--json")
    _, out2, _ = run(capsys, "betti", "-i", rp2_file, "--json")
    assert json.loads(out3)["reg"] == 2 and json.loads(out2)["reg"] == 3
    _, text, _ = run(capsys, "betti", "-i", rp2_file)
    assert "reg S/I = 3" in text


def test_depth_and_serre(capsys, rp2_file, tmp_path):
    _, out, _ = run(capsys, "depth", "-i", rp2_file, "--json")
    rep = json.loads(out)
    assert rep["depth"] == rep["depth_local_cohomology"] == 2
    path = tmp_path / "j.ideal"
    path.write_text("x2\nx1*x3\n")
    _, out, _ = run(capsys, "depth", "-i", str(path), "--ell", "2", "--json")
    assert json.loads(out)["depth"] == 1
    code, out, _ = run(capsys, "serre", "-i", str(path), "--json")
    assert code == EXIT_OK and json.loads(out)["serre_depth"] == 1


def test_serre_on_mixed_is_an_error(capsys, tmp_path):
    path = tmp_path / "m.facets"
    path.write_text("1 2 3\n4\n")
    code, _, err = run(capsys, "serre", "-i", str(path))
    assert code == EXIT_PARSE and "unmixed" in err


def test_dual_of_path(capsys, tmp_path):
    path = tmp_path / "p.facets"
    path.write_text("1 2\n2 3\n3 4\n")
    code, out, _ = run(capsys, "dual", "-i", str(path), "--json")
    assert code == EXIT_OK
    assert sorted(json.loads(out)["facets"]) == [["1", "3"], ["2", "3"], ["2", "4"]]


def test_graph_v_reports_domination(capsys, graph_file):
    _, out, _ = run(capsys, "v", "-i", graph_file, "--json")
    rep = json.loads(out)
    assert (rep["v"], rep["c_line"], rep["c_nerve"]) == (3, 2, 3)
    _, out, _ = run(capsys, "v", "-i", graph_file, "--cover", "--json")
    assert "c_nerve" not in json.loads(out)


def test_classify(capsys, rp2_file):
    _, out, _ = run(capsys, "classify", "-i", rp2_file, "--char", "3", "--json")
    rep = json.loads(out)
    assert rep["cohen_macaulay"] and rep["2_pure"] and rep["reg"] == 2
    _, out, _ = run(capsys, "classify", "-i", rp2_file, "--json")
    assert not json.loads(out)["cohen_macaulay"]


def test_json_is_byte_stable(capsys, rp2_file):
    outs = {run(capsys, "v", "-i", rp2_file, "--json")[1] for _ in range(3)}
    assert len(outs) == 1
    text = outs.pop()
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


@pytest.mark.parametrize("family, params", [
    ("rp2", []), ("range", ["4", "3", "2"]), ("bight-example", ["4", "1"]),
    ("example-8-4", []), ("example-5-12", []),
    ("multi-whisker", ["--base", "1-2,2-3", "1", "2", "1"]),
    ("vwc-expansion", ["--base", "2", "1", "2"]),
])
def test_generate_families(capsys, family, params):
    code, out, _ = run(capsys, "generate", family, *params, "--json")
    assert code == EXIT_OK and json.loads(out)["vertices"]


def test_every_family_is_covered():
    assert set(FAMILIES) == {"rp2", "range", "bight-example", "example-8-4", "example-5-12",
                             "multi-whisker", "vwc-expansion"}


def test_generated_range_feeds_back(capsys, tmp_path):
    _, out, _ = run(capsys, "generate", "range", "4", "3", "2")
    path = tmp_path / "r.facets"
    path.write_text(out)
    _, out, _ = run(capsys, "v", "-i", str(path), "--json")
    assert json.loads(out)["v"] == 3


@pytest.mark.parametrize("argv", [
    ["generate", "range", "1", "2", "3"],
    ["generate", "range", "1", "x", "1"],
    ["generate", "multi-whisker", "1"],
    ["generate", "multi-whisker", "--base", "1-2", "1"],
    ["generate", "vwc-expansion", "--base", "1-2-3", "1"],
])
def test_generate_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_PARSE and err.startswith("vnum: error:")


def test_parse_error_names_line(capsys, tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("1 2\n3\n")
    code, _, err = run(capsys, "v", "-i", str(path))
    assert code == EXIT_PARSE and "bad.edges:2:" in err


def test_missing_input(capsys):
    assert run(capsys, "v")[0] == EXIT_PARSE


def test_cap_n_guard(capsys, rp2_file):
    code, _, err = run(capsys, "v", "-i", rp2_file, "--cap-n", "5")
    assert code == EXIT_GUARD and "refused" in err


def test_usage_errors_are_parse_errors(capsys, rp2_file):
    with pytest.raises(SystemExit) as exc:
        main(["v", "--bogus"])
    assert exc.value.code == EXIT_PARSE
    with pytest.raises(SystemExit) as exc:
        main(["betti", "-i", rp2_file, "--char", "4"])
    assert exc.value.code == EXIT_PARSE
    with pytest.raises(SystemExit):
        main(["depth", "-i", rp2_file, "--ell", "0"])


def test_suite_list(capsys):
    code, out, _ = run(capsys, "suite", "--list")
    assert code == EXIT_OK and "projective-plane (1)" in out


def test_suite_only(capsys):
    code, out, _ = run(capsys, "suite", "--only", "projective-plane", "range-construction", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["ok"]
    assert [s["name"] for s in rep["suites"]] == ["projective-plane", "range-construction"]


def test_suite_unknown(capsys):
    assert run(capsys, "suite", "--only", "nope")[0] == EXIT_PARSE


def test_suite_failure_exit_code(capsys, monkeypatch):
    import vnum.cli as cli
    from vnum.suite import SuiteResult

    def fake(seed, names, scale, cap_n):
        res = SuiteResult("fake")
        res.check(False, "forced")
        return [res]

    monkeypatch.setattr(cli, "run_all", fake)
    code, out, _ = run(capsys, "suite")
    assert code == EXIT_SUITE and "FAILURES" in out


def test_module_entry_point(rp2_file):
    done = subprocess.run([sys.executable, "-m", "vnum", "v", "-i", rp2_file], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("v = 3")
