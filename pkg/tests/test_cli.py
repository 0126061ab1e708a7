import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from qdistinct import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_constants_text(capsys):
    code, out, _ = run(capsys, "constants", "--name", "trace-generic")
    assert code == 0
    assert out.strip() == "1/4 + 1/pi = 0.568309..."


def test_constants_csv(capsys):
    code, out, _ = run(capsys, "constants", "--format", "csv")
    rows = rows_of(out)
    assert code == 0 and len(rows) > 40
    assert {"name", "expression", "decimal", "note"} == set(rows[0])


def test_pdf_example(capsys):
    code, out, _ = run(capsys, "pdf", "--law", "mp", "--c", "1", "--grid", "0:4:0.01")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 401
    at2 = [r for r in rows if float(r["x"]) == 2.0][0]
    assert float(at2["density"]) == pytest.approx(0.159155, abs=1e-6)


def test_pdf_negative_grid(capsys):
    code, out, _ = run(capsys, "pdf", "--law", "smp", "--c", "1", "--grid=-2:2:0.5")
    assert code == 0 and len(rows_of(out)) == 9


def test_distance_fixed(capsys):
    code, out, _ = run(capsys, "distance", "--metric", "tr", "--n", "2", "--samples", "0",
                       "--fixed", "diag(1,0)|maximally-mixed")
    assert code == 0
    assert float(rows_of(out)[0]["mean"]) == pytest.approx(0.5)


def test_distance_fixed_bell(capsys):
    code, out, _ = run(capsys, "distance", "--metric", "tr", "--samples", "0",
                       "--fixed", "bell|maximally-mixed")
    assert code == 0
    assert float(rows_of(out)[0]["mean"]) == pytest.approx(0.75)


def test_missing_seed_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["distance", "--metric", "tr", "--n", "4"])
    assert exc.value.code == 2
    assert "--seed" in capsys.readouterr().err


def test_contract_errors_exit_2(capsys):
    code, _, err = run(capsys, "pdf", "--law", "mp", "--grid", "0:1:0.5")
    assert code == 2 and "--c" in err
    code, _, err = run(capsys, "distance", "--metric", "nope", "--n", "3", "--seed", "1")
    assert code == 2 and len(err.strip().splitlines()) == 1
    code, _, _ = run(capsys, "kicked-top", "relax", "--j1", "0.3")
    assert code == 2


def test_numerical_failure_exit_3(capsys, monkeypatch):
    from qdistinct import constants
    from qdistinct.errors import NumericalError

    def boom(name):
        raise NumericalError("did not converge", module="laws", achieved=1.0)

    monkeypatch.setattr(constants, "get", boom)
    code, _, err = run(capsys, "constants", "--name", "chernoff")
    assert code == 3 and "laws" in err


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["pdf", "--law", "mp", "--c", "1", "--grid", "0:1"])
    assert exc.value.code == 2


def test_byte_identical_csv(tmp_path):
    paths = []
    for threads in ("1", "3"):
        p = tmp_path / f"conv{threads}.csv"
        assert cli.main(["converge", "--n-list", "4,8", "--samples", "10", "--seed", "7",
                         "--threads", threads, "--out", str(p)]) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert (tmp_path / "conv1.csv.plot.py").exists()


def test_plot_script_reads_only_data(tmp_path):
    p = tmp_path / "pdf.csv"
    assert cli.main(["pdf", "--law", "fc", "--grid", "0:6:0.5", "--out", str(p)]) == 0
    script = (tmp_path / "pdf.csv.plot.py").read_text()
    assert "pdf.csv" in script
    assert "qdistinct" not in script
    compile(script, "plot", "exec")


def test_json_schema(tmp_path):
    schema = json.loads(open(cli.schema_path()).read())
    p = tmp_path / "t.json"
    assert cli.main(["tail", "--eps", "0.05", "--n-list", "4,8", "--samples", "5", "--seed", "2",
                     "--format", "json", "--out", str(p)]) == 0
    doc = json.loads(p.read_text())
    jsonschema.validate(doc, schema)
    assert doc["command"] == "tail" and doc["seed"] == 2
    assert len(doc["rows"]) == 2


def test_scientific_notation():
    assert cli.fmt_number(3.2e-5) == "3.200000e-05"
    assert cli.fmt_number(0.25) == "0.25"
    assert cli.fmt_number(0.0) == "0"
    assert cli.fmt_number(None) == ""


@pytest.mark.parametrize("argv", [
    ["sample", "--ensemble", "induced", "--n", "4", "--k", "8", "--samples", "2", "--seed", "1"],
    ["table1", "--n", "6", "--samples", "3", "--seed", "1"],
    ["cdep", "--n", "8", "--c-list", "1,2", "--samples", "3", "--seed", "1"],
    ["kicked-top", "spectrum", "--j1", "4.5", "--j2", "4.5", "--steps", "5",
     "--realizations", "3", "--seed", "1"],
    ["kicked-top", "relax", "--j1", "4.5", "--j2", "4.5", "--steps", "5"],
    ["coherence", "--kind", "offdiag", "--n", "8", "--samples", "3", "--seed", "1"],
    ["coherence", "--kind", "rel-ent", "--n", "8", "--samples", "3", "--seed", "1", "--field", "r"],
    ["entangle", "--kind", "negativity", "--na", "2", "--nb", "3", "--samples", "3", "--seed", "1"],
    ["entangle", "--kind", "gconc", "--na", "3", "--nb", "3", "--samples", "3", "--seed", "1"],
    ["ball", "--n-list", "1,2", "--samples", "50", "--seed", "1"],
    ["classical", "--n", "8", "--samples", "3", "--seed", "1", "--quantity", "bhatt"],
])
def test_subcommands_run(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert len(rows_of(out)) >= 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qdistinct", "constants", "--name", "kl-generic"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip() == "3/2 = 1.500000..."
