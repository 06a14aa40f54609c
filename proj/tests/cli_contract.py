# Copyright 2026 The wishart-reals Authors
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

"""Black-box checks of the wishart command line: exit codes, CSV layout,
determinism and JSON output validated against the bundled schemas."""

import csv
import io
import json
import os
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


registry = load_registry()


def validate(doc, name):
    schema = registry.contents(f"urn:wishart-reals:schema:{name}:v1")
    try:
        jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)
        return True
    except jsonschema.ValidationError as e:
        print("     " + e.message)
        return False


base = ["--n", "8", "--nu", "0", "--tau", "0.5", "--seed", "3"]

r = run("expected-number", *base, "--trials", "200")
expect(r.returncode == 0, "expected-number exits 0")
rows = list(csv.reader(io.StringIO(r.stdout)))
expect(rows[0] == ["n", "nu", "tau", "kernel", "kernel_err", "mc_mean", "mc_stderr", "asymptotic"],
       "expected-number header row")
expect(len(rows) == 2, "expected-number prints one data row")
kernel, mc, se = float(rows[1][3]), float(rows[1][5]), float(rows[1][6])
expect(abs(kernel - mc) <= 4 * se, "kernel and Monte Carlo columns agree")

again = run("expected-number", *base, "--trials", "200", env={"WISHART_THREADS": "1"})
expect(again.stdout == r.stdout, "expected-number output independent of thread count")

r = run("expected-number", *base, "--trials", "50", "--format", "json")
expect(r.returncode == 0 and validate(json.loads(r.stdout), "expected-number"),
       "expected-number JSON matches schema")

r = run("expected-number", "--n", "8", "--alpha", "1", "--regime", "weak", "--rho", "1", "--trials", "20",
        "--format", "json")
expect(r.returncode == 0 and validate(json.loads(r.stdout), "expected-number"),
       "weak expected-number JSON matches schema")

r = run("density", *base, "--grid", "9", "--trials", "20")
expect(r.returncode == 0, "density exits 0")
rows = list(csv.reader(io.StringIO(r.stdout)))
expect(rows[0] == ["x", "kernel", "limit", "mc"], "density header row")
expect(len(rows) == 10, "density prints one row per grid point")

r = run("density", *base, "--grid", "9", "--trials", "20", "--format", "json")
expect(r.returncode == 0 and validate(json.loads(r.stdout), "density"), "density JSON matches schema")

r = run("sample", *base, "--trials", "3")
lines = r.stdout.splitlines()
expect(r.returncode == 0 and lines[0] == "re,im,trial" and len(lines) == 25, "sample CSV layout")
one = run("sample", *base, "--trials", "3", env={"WISHART_THREADS": "1"})
expect(one.stdout == r.stdout, "sample output independent of thread count")
other = run("sample", "--n", "8", "--nu", "0", "--tau", "0.5", "--seed", "4", "--trials", "3")
expect(other.stdout != r.stdout, "different seeds give different samples")

r = run("sample", *base, "--trials", "2", "--format", "json")
expect(r.returncode == 0 and validate(json.loads(r.stdout), "sample"), "sample JSON matches schema")

r = run("verify", "--only", "pfaffian,tau0", "--json")
doc = json.loads(r.stdout)
expect(r.returncode == 0 and validate(doc, "verify"), "verify JSON matches schema")
expect([c["name"] for c in doc["checks"]] == ["pfaffian", "tau0"], "verify --only selects checks in order")

r = run("verify", "--only", "pfaffian", "--tol", "pfaffian.pf2_det=1e-30")
expect(r.returncode == 4, "tightened tolerance makes verify exit 4")

r = run("verify", "--only", "nonsense")
expect(r.returncode == 2, "unknown check name exits 2")

for args, what in [
    (["expected-number", "--n", "8", "--nu", "0", "--tau", "1"], "tau = 1"),
    (["expected-number", "--n", "7", "--nu", "0", "--tau", "0.5"], "odd N"),
    (["expected-number", "--n", "8", "--nu", "1", "--rho", "1", "--tau", "0.5"], "--nu with --rho"),
    (["sample", "--n", "8", "--nu", "0.5", "--tau", "0.5"], "non-integer nu when sampling"),
    (["expected-number", "--bogus"], "unknown flag"),
]:
    r = run(*args)
    expect(r.returncode == 2, f"{what} exits 2")

if failures:
    print(f"{len(failures)} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
