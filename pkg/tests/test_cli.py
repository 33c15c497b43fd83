import json

import pytest

from sl2hyper.algebra import AlgebraCtx, element_from_json
from sl2hyper.cli import main
from sl2hyper.idempotents import parse_label, tuple_idempotent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_idempotents_counts(capsys):
    for args, expected in [
        (("--p", "3", "--r", "1"), 6),
        (("--p", "2", "--r", "2"), 9),
        (("--p", "2", "--r", "1", "--rprime", "2"), 6),
    ]:
        code, out, _ = run(capsys, "idempotents", *args, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == expected == len(payload["idempotents"])


def test_idempotents_round_trip(capsys):
    code, out, _ = run(capsys, "idempotents", "--p", "2", "--r", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    ctx = AlgebraCtx(payload["p"], payload["r"], payload["rprime"])
    for item in payload["idempotents"]:
        e = element_from_json(item["element"])
        assert e == tuple_idempotent(parse_label(item["label"], ctx), ctx)


def test_byte_determinism(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        code, _, _ = run(
            capsys, "idempotents", "--p", "3", "--r", "1", "--format", "json", "--out", str(path)
        )
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    for path, name in [(tmp_path / "v1.json", "v1"), (tmp_path / "v2.json", "v2")]:
        code, _, _ = run(
            capsys, "verify", "--p", "2", "--r", "2", "--format", "json", "--out", str(path)
        )
        assert code == 0
    assert (tmp_path / "v1.json").read_bytes() == (tmp_path / "v2.json").read_bytes()


def test_verify_basic_pass(capsys):
    code, out, _ = run(capsys, "verify", "--p", "2", "--r", "3", "--suite", "basic")
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_reports_each_check(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--r", "1", "--format", "json", "--suite", "basic")
    assert code == 0
    payload = json.loads(out)
    names = [c["name"] for c in payload["checks"]]
    assert "idempotency" in names and "orthogonality" in names and "sum-to-one" in names
    assert payload["passed"] is True


def test_verify_full_depth2(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--r", "2", "--suite", "full")
    assert code == 0
    assert "FAIL" not in out
    assert "25/25 checks passed" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--p", "4", "--r", "1")
    assert code == 2 and "prime" in err
    code, _, err = run(capsys, "show", "--p", "5", "--r", "1", "--label", "9:0")
    assert code == 2 and "9:0" in err
    code, _, err = run(capsys, "idempotents", "--p", "3", "--r", "2", "--rprime", "1")
    assert code == 2


def test_show_text(capsys):
    code, out, _ = run(capsys, "show", "--p", "2", "--r", "1", "--label", "1:0")
    assert code == 0
    assert out == "label 1:0:\nY^(1) C(H,1) X^(1)\n"


def test_show_json_round_trip(capsys):
    code, out, _ = run(capsys, "show", "--p", "3", "--r", "1", "--label", "2:2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    ctx = AlgebraCtx(3, 1, 1)
    assert element_from_json(payload["element"]) == tuple_idempotent(
        parse_label("2:2", ctx), ctx
    )


def test_pim_table(capsys):
    code, out, _ = run(capsys, "pim-table", "--p", "2", "--r", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == [
        "label",
        "weight",
        "top_x",
        "lambda_prime",
        "lambda_double_prime",
        "predicted_dim",
        "computed_dim",
        "status",
    ]
    assert len(lines) == 5  # header + 3 rows + census
    assert lines[-1].startswith("census: 8")
    assert all("PASS" in ln for ln in lines[1:4])


def test_pim_table_json(capsys):
    code, out, _ = run(capsys, "pim-table", "--p", "2", "--r", "1", "--rprime", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["census"] == 16
    assert len(payload["rows"]) == 6


def test_out_file_and_note(capsys, tmp_path):
    path = tmp_path / "idem.txt"
    code, out, _ = run(capsys, "idempotents", "--p", "2", "--r", "1", "--out", str(path))
    assert code == 0
    assert "3 idempotents written" in out
    assert path.read_text().endswith("count: 3\n")


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["idempotents"])  # missing --p
    assert exc.value.code == 2
