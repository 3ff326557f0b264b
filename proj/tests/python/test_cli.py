# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line behaviour: exit codes, reports and certificate round trips."""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("RESCERT_CLI", "rescert")
CORPUS = pathlib.Path(os.environ.get("RESCERT_CORPUS", "corpus"))

FILES = {
    "E1": "e1_generic3.json",
    "E2": "e2_pencil3.json",
    "E3": "e3_twin_triples.json",
    "E4": "e4_disjoint_triples.json",
    "E5": "e5_nonres_triple.json",
}


def run(*args):
  return subprocess.run([CLI, *map(str, args)], capture_output=True,
                        text=True, check=False)


def doc(name):
  return CORPUS / FILES[name]


def run_json(*args):
  proc = run("--format", "json", *args)
  return proc.returncode, json.loads(proc.stdout)


def test_check_all_on_e3_gives_two_certificates():
  code, report = run_json("check", "--criterion=all", doc("E3"))
  assert code == 0
  fired = [r["criterion"] for r in report["results"] if r["status"] == "fired"]
  assert fired == ["lambda", "point"]
  assert report["verdict"] == "nonresonant"
  assert report["results"][1]["certificate"]["values"] == [
      "-1", "-1", "4", "-1", "-1"]


def test_lambda_on_e4_is_inconclusive_with_witness():
  code, report = run_json("check", "--criterion=lambda", doc("E4"))
  assert code == 1
  (result,) = report["results"]
  assert result["witness"]["values"] == ["1", "1"]
  proc = run("check", "--criterion=lambda", doc("E4"))
  assert proc.returncode == 1
  assert "lambda" in proc.stdout


def test_cohomology_on_e2_reports_resonance():
  code, dims = run_json("cohomology", doc("E2"))
  assert code == 2
  assert dims["h"] == [0, 1, 0]
  assert dims["decone_at"] == "H1"
  code, dims = run_json("cohomology", "--decone", "H3", doc("E2"))
  assert code == 2
  assert dims["decone_at"] == "H3"


@pytest.mark.parametrize("name,expected", [
    ("E1", [0, 0, 0]), ("E3", [0, 0, 1]), ("E4", [0, 0, 4])])
def test_cohomology_of_nonresonant_entries(name, expected):
  code, dims = run_json("cohomology", doc(name))
  assert code == 0
  assert dims["h"] == expected


@pytest.mark.parametrize("name,code", [
    ("E1", 0), ("E2", 1), ("E3", 0), ("E4", 0), ("E5", 0)])
def test_check_exit_codes(name, code):
  assert run("check", doc(name)).returncode == code


def test_partition_and_flat_flags():
  code, report = run_json("check", "--criterion=bipartition",
                          "--partition", "H1,H2,H4|H3,H5,H6", doc("E4"))
  assert code == 1
  assert "meets both parts" in report["results"][0]["detail"]
  code, report = run_json("check", "--criterion=shelter", "--flat",
                          "H1,H2,H3", doc("E5"))
  assert code == 1
  assert report["best_level"] == 1
  assert report["verdict"] == "vanishing below level 1"


def test_input_errors_exit_3(tmp_path):
  assert run("check", "--bogus", doc("E2")).returncode == 3
  assert run("frobnicate", doc("E2")).returncode == 3
  assert run("check", tmp_path / "missing.json").returncode == 3
  bad = tmp_path / "bad.json"
  bad.write_text(json.dumps({
      "ambient_dim": 2,
      "hyperplanes": [["1", "0", "0"], ["0", "1", "0"]],
      "monodromy_exponents": ["1/3", "1/3"],
  }))
  proc = run("check", bad)
  assert proc.returncode == 3
  assert "exponent sum 2/3 not an integer" in proc.stderr
  assert run("check", "--criterion=nope", doc("E1")).returncode == 3
  assert run("check", "--flat", "H1,H2", doc("E3")).returncode == 3


@pytest.mark.parametrize("name", sorted(FILES))
def test_certify_then_verify(tmp_path, name):
  cert = tmp_path / "cert.json"
  assert run("certify", doc(name), "-o", cert).returncode in (0, 1)
  body = json.loads(cert.read_text())
  proc = run("verify-cert", doc(name), cert)
  assert proc.returncode == (0 if body["type"] == "delta" else 1)

  body["values"][0] = str(int(body["values"][0]) + 1)
  cert.write_text(json.dumps(body))
  assert run("verify-cert", doc(name), cert).returncode == 3


def test_certificate_for_another_arrangement_is_rejected(tmp_path):
  cert = tmp_path / "cert.json"
  run("certify", doc("E1"), "-o", cert)
  assert run("verify-cert", doc("E5"), cert).returncode == 3


def test_lift_and_section_write_documents(tmp_path):
  out = tmp_path / "lift.json"
  assert run("lift", "--partition", "H1,H2|H3", doc("E2"), "-o",
             out).returncode == 0
  lifted = json.loads(out.read_text())
  assert lifted["ambient_dim"] == 3
  assert lifted["provenance"]["construction"] == "lift"
  assert run("lattice", out).returncode == 0

  code, section = run_json("section", "--flat", "H1,H2,H3", doc("E3"))
  assert code == 0
  assert section["ambient_dim"] == 1
  assert section["provenance"]["flat"] == ["H1", "H2", "H3"]
  assert run("section", "--flat", "H1", doc("E1")).returncode == 3


def test_lattice_and_resonant_reports():
  code, lattice = run_json("lattice", doc("E1"))
  assert code == 0
  assert lattice["poincare"] == [1, 2, 1]
  proc = run("resonant", doc("E4"))
  assert proc.returncode == 0
  assert "{H1,H2,H3}" in proc.stdout


def test_reports_are_deterministic():
  first = run("--format", "json", "check", "--search-partitions", doc("E4"))
  second = run("--format", "json", "check", "--search-partitions", doc("E4"))
  assert first.stdout == second.stdout
