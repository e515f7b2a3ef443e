import json
import subprocess
import sys

import pytest

from durfee.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, int_list, main, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_int_list():
    assert int_list("2,4-6") == [2, 4, 5, 6]
    assert int_list("3") == [3]
    with pytest.raises(UsageError):
        int_list("a")


def test_count_T_E(capsys):
    code, out, _ = run(capsys, "count", "--class", "T,E", "--r", "2", "--i", "2",
                       "--n", "4", "--json", "--check")
    assert code == EXIT_OK
    rep = json.loads(out)
    last = rep["params"]["table"][-1]
    assert (last["T"], last["E"]) == ("2", "2")


def test_count_zero_row(capsys):
    code, out, _ = run(capsys, "count", "--r", "3", "--i", "1", "--n", "0", "--csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "r,i,n,T,E,A,B,C,D"
    assert lines[1] == "3,1,0,1,1,1,1,1,1"


def test_count_all_equal(capsys):
    code, out, _ = run(capsys, "count", "--r", "3", "--i", "2", "--n", "20", "--check")
    assert code == EXIT_OK and "PASS r=3,i=2" in out


def test_verify_pass_and_fail(capsys):
    assert run(capsys, "verify", "--identity", "AGP", "--r", "4", "--i", "2")[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", "--identity", "BR33", "--r", "3", "--i", "1",
                       "--uncorrected", "--order", "40", "--json")
    assert code == EXIT_MISMATCH
    w = json.loads(out)["cases"][0]["witness"]
    assert set(w) == {"power", "sum_side", "product_side"}
    assert w["sum_side"] != w["product_side"]
    assert run(capsys, "verify", "--identity", "JTP", "--z", "2", "--step", "5",
               "--order", "40")[0] == EXIT_OK


def test_dissect(capsys):
    code, out, _ = run(capsys, "dissect", "--partition", "6,5,5,4,3", "--plan", "HH")
    assert code == EXIT_OK
    assert "H: 4 cols x 3 rows" in out and "H: 3 cols x 2 rows" in out
    code, out, _ = run(capsys, "dissect", "--partition", "-", "--plan", "S")
    assert code == EXIT_OK and "(empty)" in out


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "--r", "3", "--n", "12", "--check")
    assert code == EXIT_OK and out.count("PASS") == 13
    code, out, _ = run(capsys, "bijection", "--r", "3", "--partition", "3,3,1", "--json")
    data = json.loads(out)["cases"][0]["data"]
    assert data["image"] == "2,2,2,1" and data["branch"] == "first"


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--partition", "6,5,5,4,3", "--r", "3", "--i", "1", "--json")
    assert code == EXIT_OK
    dec = json.loads(out)["cases"][0]["data"]["decomposition"]
    assert dec == {"blocks": [[3], [4, 5], [5, 6]], "ell": 2, "f": [1, 2, 4]}


def test_bailey(capsys):
    assert run(capsys, "bailey", "--r", "3", "--order", "20")[0] == EXIT_OK
    assert run(capsys, "bailey", "--r", "3", "--derive", "--order", "20")[0] == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["count", "--class", "Z", "--r", "2", "--n", "3"],
    ["verify", "--identity", "AG", "--r", "3", "--i", "0"],
    ["verify", "--identity", "NOPE"],
    ["dissect", "--partition", "1,3", "--plan", "S"],
    ["dissect", "--partition", "3,1", "--plan", "Sb"],
    ["bijection", "--r", "5", "--i", "2", "--n", "3"],
    ["bailey", "--r", "3", "--i", "2", "--e", "0"],
    ["verify", "--identity", "AG", "--r", "2", "--csv"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_json_is_byte_identical(capsys):
    argv = ["verify", "--identity", "AG", "--r", "2-3", "--json", "--series", "--order", "20"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert all(isinstance(x, str) for x in json.loads(a)["cases"][0]["data"]["sum_side"])


def test_workers_do_not_change_output(capsys, monkeypatch):
    argv = ["count", "--r", "2-3", "--n", "8", "--json", "--check"]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("DURFEE_WORKERS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "durfee", "verify", "--identity", "RR1",
                           "--order", "10"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS RR1")
    assert "[verify]" in proc.stderr
