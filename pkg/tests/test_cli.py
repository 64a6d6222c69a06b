import csv
import io
import json
import subprocess
import sys

import pytest

from gdyck.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coeff_example(capsys):
    code, out, _ = run(capsys, "coeff", "--g", "2", "--comp", "2,1")
    assert code == 0
    assert json.loads(out) == {"c": "1", "gn_c": 6}


def test_mixed_coeff(capsys):
    code, out, _ = run(capsys, "coeff", "--g", "2", "--tilde", "0,0", "--parts", "2")
    assert code == 0 and json.loads(out) == {"c": "1/2", "N_c": 2}
    code, out, _ = run(capsys, "coeff", "--g", "2", "--tilde", "4")
    assert json.loads(out) == {"c": "1/4", "N_c": 1}


def test_composition_count_example(capsys):
    code, out, _ = run(capsys, "compositions", "--g", "3", "--n", "3", "--count")
    assert code == 0 and out.strip() == "9"


def test_composition_listing_formats(capsys):
    _, out, _ = run(capsys, "compositions", "--g", "2", "--N", "4")
    assert json.loads(out)[1] == {"tilde": [2, 0], "parts": [1]}
    _, out, _ = run(capsys, "compositions", "--g", "2", "--N", "4", "--format", "text")
    assert out.split() == ["(4)", "(2,0;1)", "(1,1;1)", "(0,2;1)", "(0,0;2)", "(0,0,0;1,1)"]
    _, out, _ = run(capsys, "compositions", "--g", "3", "--n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["parts"] and len(rows) == 10


def test_floor_counts(capsys):
    _, out, _ = run(capsys, "floor-counts", "--g", "2", "--comp", "2,1")
    data = json.loads(out)
    assert data["total"] == 6 and data["floors"][1] == {"i": 2, "up": 1, "down": 2, "any": 3}
    _, out, _ = run(capsys, "floor-counts", "--g", "2", "--comp", "2,1", "--floor", "1")
    assert json.loads(out) == {"i": 1, "up": 2, "down": 0, "any": 2}
    code, _, _ = run(capsys, "floor-counts", "--g", "2", "--comp", "2,1", "--floor", "9")
    assert code == 2


def test_paths(capsys):
    _, out, _ = run(capsys, "paths", "enumerate", "--g", "2", "--n", "3")
    assert len(json.loads(out)) == 20
    _, out, _ = run(capsys, "paths", "enumerate", "--g", "2", "--n", "3", "--first", "U")
    assert len(json.loads(out)) == 10
    _, out, _ = run(capsys, "paths", "tally", "--g", "2", "--n", "3")
    data = json.loads(out)
    assert [d["profile"] for d in data] == [[1, 1, 1], [1, 2], [2, 1], [3]]
    _, out, _ = run(capsys, "paths", "tally", "--g", "2", "--N", "4", "--format", "csv")
    assert out.splitlines()[0] == "profile,i,up,down,horizontal,any"


def test_exclusion_commands(capsys, tmp_path):
    data = tmp_path / "sd.json"
    data.write_text(json.dumps({"f": [1, 1, 1, 1, 1, 1], "g": ["1/2", 1, 2, 1, 1, 1]}))
    code, out, _ = run(capsys, "exclusion", "zn", "--data", str(data))
    z = json.loads(out)
    assert code == 0 and z["q"] == 7 and z["g"] == 2 and z["Z"][0] == 1
    _, out, _ = run(capsys, "exclusion", "det", "--data", str(data))
    det = json.loads(out)["det"]
    assert len(det) == 8 and det[1] == 0
    _, out, _ = run(capsys, "exclusion", "bn", "--random", "--q", "6", "--g", "3", "--order", "4")
    b = json.loads(out)
    assert b["seed"] is not None and len(b["b"]) == 4
    code, out, _ = run(capsys, "exclusion", "trace", "--preset", "hofstadter", "--q", "7", "--power", "4")
    assert code == 0 and json.loads(out)["agree"] is True
    code, _, err = run(capsys, "exclusion", "zn")
    assert code == 1 and "usage" in err


def test_hofstadter_area(capsys):
    for method in ("weyl", "walks", "trace"):
        code, out, _ = run(capsys, "hofstadter", "area", "--n", "4", "--method", method)
        assert code == 0 and json.loads(out) == {"-1": 4, "0": 28, "1": 4}
    code, out, _ = run(capsys, "hofstadter", "area", "--n", "8", "--check")
    assert code == 0 and sum(json.loads(out).values()) == 70 ** 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--g", "3", "--max-n", "3")
    report = json.loads(out)
    assert code == 0 and report["ok"] and len(report["checks"]) == 7
    assert all(c["ok"] for c in report["checks"])


def test_exit_codes(capsys):
    assert run(capsys, "coeff", "--g", "2", "--comp", "0,1")[0] == 2
    assert run(capsys, "paths", "enumerate", "--g", "2", "--n", "20")[0] == 2
    assert run(capsys, "coeff", "--g", "2")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["coeff", "--g", "2", "--comp", "a,b"])
    assert exc.value.code == 1


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "gdyck", "exclusion", "bn", "--random", "--q", "7", "--g", "2",
            "--mixed", "--seed", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["seed"] == 5


def test_verify_failure_names_the_identity(capsys, monkeypatch):
    from gdyck import cli
    from gdyck.verify import CheckResult

    def broken(g, max_n, seed):
        return [CheckResult("total-counts", False, 1, 0.0, ["g=2 n=3: sum gn c_g = 19, C(gn, n) = 20"])]

    monkeypatch.setattr(cli, "run_all", broken)
    code, out, err = run(capsys, "verify", "--g", "2", "--max-n", "3")
    assert code == 3
    assert json.loads(out)["ok"] is False
    assert "total-counts" in err and "g=2 n=3" in err
