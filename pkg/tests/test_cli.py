import json
import subprocess
import sys

import pytest

from got.cli import main
from got.parser import parse
from got.printing import expr_from_json
from got.engine import canonical_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize("target,expr,expected", [
    ("N", "a * ad", "{ad a}_1 + 1"),
    ("A", "{ad a}_N", "{ad a}_-1 - 1"),
    ("0", "{ad a}_0", "{ad a}_0"),
])
def test_order_examples(capsys, target, expr, expected):
    assert run(capsys, "order", "--target", target, expr) == (0, expected, "")


def test_order_negative_fraction_target(capsys):
    code, out, _ = run(capsys, "order", "--target", "-1/2", "{ad a}_{1/2}")
    assert code == 0 and out == "{ad a}_{-1/2} - 1/2"


def test_order_json(capsys):
    code, out, _ = run(capsys, "order", "--target", "N", "a * ad", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == "1"
    assert canonical_poly(expr_from_json(payload), 1) == canonical_poly(parse("ad a + 1"), 1)


def test_order_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "order", "--target", "N", "a * * ad")
    assert code == 2 and "position 4" in err
    assert run(capsys, "order", "--target", "Q", "a")[0] == 2


def test_equal_examples(capsys):
    assert run(capsys, "equal", "a*ad", "ad*a + 1", "--target", "1")[:2] == (0, "equal")
    assert run(capsys, "equal", "{ad a}_0", "{ad a}_1 + 1/2", "--target", "1")[:2] == (0, "equal")
    code, out, _ = run(capsys, "equal", "a", "ad", "--target", "W")
    assert code == 1
    assert "first difference" in out and "left:  {a}_0" in out and "right: {ad}_0" in out


def test_equal_json(capsys):
    code, out, _ = run(capsys, "equal", "a", "ad", "--format", "json")
    payload = json.loads(out)
    assert code == 1 and payload["equal"] is False
    assert payload["first_difference"] == {"ad": 1, "a": 0, "left": "0", "right": "1"}


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "glauber-normal", "--lambda", "3", "--max-k", "8")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--identity", "fan-hermite-general",
                       "--s", "1", "--t", "-1", "--n", "3", "--m", "2")
    assert code == 0 and "PASS" in out


def test_verify_audit_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "aneL-audit", "--s", "0", "--t", "1",
                       "--n", "1", "--max-order", "6", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["identity"] == "aneL-audit" and report["mode"] == "audit"
    assert [row["order"] for row in report["table"]] == list(range(7))
    assert "derived_form_holds" in report["findings"]


def test_verify_errors(capsys):
    code, _, err = run(capsys, "verify", "--identity", "nope")
    assert code == 2 and "unknown identity" in err
    assert run(capsys, "verify", "--identity", "glauber-normal", "--s", "0")[0] == 2
    assert run(capsys, "verify", "--identity", "exp-number-reorder", "--s", "1", "--t", "-1",
               "--lambda", "-1")[0] == 2


def test_hermite_and_laguerre(capsys):
    code, out, _ = run(capsys, "hermite", "--m", "1", "--n", "1")
    assert code == 0 and out == "H_{1,1}(x,y) = x y - 1"
    code, out, _ = run(capsys, "hermite", "--m", "1", "--n", "1", "--tau", "1/2")
    assert code == 0 and out.endswith("x y + 1/2")
    code, out, _ = run(capsys, "laguerre", "--n", "2")
    assert code == 0 and out == "L_2^0(x) = 1/2 x^2 - 2 x + 1"
    assert run(capsys, "laguerre", "--n", "2", "--alpha", "-3")[0] == 2


def test_list_identities(capsys):
    code, out, _ = run(capsys, "list-identities")
    assert code == 0 and "aneL-audit" in out and "glauber-normal" in out
    code, out, _ = run(capsys, "list-identities", "--format", "json")
    names = {e["name"] for e in json.loads(out)}
    assert "general-product-rule-audit" in names


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "got", "order", "--target", "N", "a * ad"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "{ad a}_1 + 1"
