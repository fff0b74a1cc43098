"""Smoke tests for the python bindings; run with PYTHONPATH set to the
build tree's python/ directory."""

import os
import subprocess

import qkp


def test_root_info():
    info = qkp.root_info("A2")
    assert info["rank"] == 2
    assert info["cartan_matrix"] == [[2, -1], [-1, 2]]
    assert info["theta"]["coroot"] == [1, 1]


def test_weyl():
    assert qkp.weyl_length("A2", "t[-1,-1]") == 4
    assert qkp.weyl_length("A2", "e") == 0
    assert qkp.weyl_project("A2", [2], "s2*t[0,1]") == "e * t[0,0]"


def test_product():
    prod = qkp.product("A2", [], "s1", "s2")
    assert prod["type"] == "A2"
    assert len(prod["terms"]) == 3
    assert prod["terms"][-1]["coeff"] == "-1"
    pretty = qkp.product("A2", [], "s1", "s2", pretty=True)
    assert pretty == "(1) [s1*s2] + (1) [s2*s1] + (-1) [s1*s2*s1]"
    collapsed = qkp.product("A2", [1, 2], "s1", "s2")
    assert collapsed["terms"] == [{"coeff": "1", "weyl": "e", "novikov": [0, 0]}]


def test_table():
    table = qkp.table("A2", [2])
    assert len(table["basis"]) == 3
    assert len(table["products"]) == 9


def test_verify():
    report = qkp.verify("golden")
    assert report["ok"]
    assert report["suites"][0]["failures"] == []


def test_peterson():
    image = qkp.peterson("A2", "s1*t[-1,-1]", "t[-1,-1]")
    assert image["terms"] == [{"coeff": "1", "weyl": "s1", "novikov": [0, 0]}]
    moved = qkp.translate("A2", "s1*t[-1,-1]", "t[-1,-1]")
    assert moved["terms"][0]["affine"] == "s1 * t[-2,-2]"


def test_cli():
    code, out, err = qkp.run_cli(["weyl", "length", "--type", "B2", "--element", "s0"])
    assert code == 0 and out.strip() == "1"
    code, _, _ = qkp.run_cli(["root", "info", "--type", "H3"])
    assert code == 2


def test_errors():
    try:
        qkp.product("B2", [], "s1", "s2")
    except NotImplementedError:
        pass
    else:
        raise AssertionError("expected NotImplementedError for B2")


def test_binary_determinism():
    binary = os.environ.get("QKP_BIN")
    if not binary:
        return  # binary location only known when run through ctest
    args = [binary, "qk", "table", "--type", "A2", "--J", "2", "--format", "doc"]
    first = subprocess.run(args, capture_output=True, check=True)
    second = subprocess.run(args, capture_output=True, check=True)
    assert first.stdout == second.stdout and first.stdout


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok    {name}")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"FAIL  {name}: {exc}")
    raise SystemExit(1 if failures else 0)
