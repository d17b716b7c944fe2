import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

import unitri

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = Path(os.environ.get("UNITRI_SCHEMAS", ROOT / "schemas"))
CLI = os.environ.get("UNITRI_CLI")


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def test_field_split():
    assert unitri.field_order_split(9) == (3, 2)
    assert unitri.field_order_split(2) == (2, 1)


def test_chain_dims_u6_example():
    d, l, s = unitri.chain_dims(6, 2, [[1, 3, 1], [2, 4, 1], [3, 5, 1], [4, 6, 1]])
    assert d == 3
    assert l == [0, 11, 12, 13]
    assert s == [15, 14, 13, 13]
    assert unitri.xi_exponents(6, 3, [[1, 3, 1], [2, 4, 1], [3, 5, 1], [4, 6, 1]]) == (2, 0)


def test_orbit_and_shape():
    assert unitri.orbit_size(3, 3, [[1, 3, 1]], "left") == 3
    assert unitri.orbit_size(3, 2, [[1, 2, 1]], "coadjoint") == 1
    assert unitri.shape(6, 3, [[1, 3, 1], [3, 5, 2], [2, 6, 1]]) == [[1, 3, 5], [2, 6], [4]]


def test_cap_exceeded_is_raised():
    with pytest.raises(unitri.CapExceeded):
        unitri.orbit_size(8, 2, [[1, 8, 1]], "left", cap=4)


def test_execute_job_dict():
    code, out = unitri.execute({"command": "kappa", "field": {"p": 3}, "n": 4})
    assert code == 0
    assert out["result"]["psi_exp"]["is_character"] is False
    jsonschema.validate(out, schema("kappa"))


def test_run_exotic_validates():
    code, out = unitri.run("exotic", "--r", 2, "--q", 2)
    assert code == 0
    r = out["result"]
    assert (r["degree_exponent"], r["norm_exponent"], r["conductor"]) == (16, 1, 4)
    jsonschema.validate(out, schema("exotic"))


def test_bad_input_exit_code():
    code, out = unitri.run("chain", "--n", 3, "--q", 6)
    assert code == 2 and out is None


@pytest.mark.parametrize(
    "name,args",
    [
        ("chain", ["chain", "--n", "6", "--q", "3", "--lambda", "[[1,3,1],[2,4,1],[3,5,1],[3,6,1]]"]),
        ("verify", ["verify", "--r", "2", "--q", "4"]),
        ("orbit", ["orbit", "--n", "4", "--q", "2", "--lambda", "[[1,4,1]]", "--which", "two-sided"]),
        ("table", ["table", "--n", "3", "--q", "3", "--lambda", "[[1,2,1]]", "--which", "theta"]),
        ("table", ["table", "--n", "4", "--q", "2", "--lambda", "[[1,3,1],[2,4,1]]", "--which", "xi"]),
    ],
)
def test_cli_binary_outputs_validate(name, args, tmp_path):
    if not CLI:
        pytest.skip("command-line binary not available")
    res = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    doc = json.loads(res.stdout)
    jsonschema.validate(doc, schema(name))
    jsonschema.validate(doc["job"], schema("jobspec"))
    # Same job through a job file gives byte-identical output.
    job = tmp_path / "job.json"
    job.write_text(json.dumps(doc["job"]))
    again = subprocess.run([CLI, "run", "--job", str(job)], capture_output=True, text=True, check=True)
    assert again.stdout == res.stdout


def test_cli_batch_and_errors(tmp_path):
    if not CLI:
        pytest.skip("command-line binary not available")
    jobs = [
        {"command": "verify", "field": {"p": 2}, "r": 2},
        {"command": "chain", "field": {"p": 2}, "n": 3, "lambda": [[1, 3, 1]]},
    ]
    f = tmp_path / "batch.json"
    f.write_text(json.dumps(jobs))
    jsonschema.validate(jobs, schema("jobspec"))
    res = subprocess.run([CLI, "run", "--job", str(f)], capture_output=True, text=True)
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert [d["command"] for d in out] == ["verify", "chain"]
    bad = subprocess.run([CLI, "table", "--n", "7", "--q", "2", "--cap", "10"], capture_output=True, text=True)
    assert bad.returncode == 3 and bad.stdout == ""
    jsonschema.validate(json.loads(bad.stderr), schema("error"))
    out_file = tmp_path / "o.json"
    subprocess.run([CLI, "chain", "--n", "3", "--out", str(out_file)], check=True)
    jsonschema.validate(json.loads(out_file.read_text()), schema("chain"))
