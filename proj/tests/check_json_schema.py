#!/usr/bin/env python3
# Copyright 2026 The qclean Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every qclean subcommand with --json and validates the output against the schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def main():
    binary, schema_path, fixtures = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    def fx(name):
        return os.path.join(fixtures, name)

    tmp = os.path.join(tempfile.mkdtemp(), "gen.css")
    cases = [
        (["info", fx("toric2.css")], 0),
        (["info", fx("repetition3.stab")], 0),
        (["info", fx("gauge_x1z1.gauge")], 0),
        (["region", fx("toric2.css"), "--qubits", "1,3-5"], 0),
        (["region", fx("repetition3.stab"), "--qubits", "1"], 0),
        (["region", fx("gauge_x1z1.gauge"), "--qubits", "2"], 0),
        (["clean", fx("repetition3.stab"), "--qubits", "1", "--op", "000100"], 0),
        (["clean", fx("repetition3.stab"), "--qubits", "1-3", "--op", "000100"], 4),
        (["distance", fx("toric2.css")], 0),
        (["distance", fx("toric3.css"), "--method", "certify"], 0),
        (["distance", fx("empty.css")], 0),
        (["tripartition", fx("toric2.css"), "--A", "1", "--B", "2", "--C", "3-8"], 0),
        (["tripartition", fx("repetition3.stab"), "--A", "1", "--B", "", "--C", "2,3"], 4),
        (["homology", fx("toric2.css"), "--alpha-qubits", "1,2"], 0),
        (["homology", fx("example42_k1.css")], 0),
        (["universal", fx("toric2.css")], 0),
        (["verify", "--suite", "all", "--trials", "3", "--seed", "7", "--oracle"], 0),
        (["gen", "toric", "2"], 0),
        (["gen", "random-css", "8", "3", "3", "5", "-o", tmp], 0),
        (["abelian", "--moduli", "4,4", "--subgroup-gens", "2,2", "--factors", "1"], 0),
        (["abelian", "--moduli", "4", "--subgroup-gens", "2", "--factors", "1"], 0),
        (["info", fx("bad_commutation.css")], 3),
        (["info", fx("no_such_file.css")], 2),
        (["region", fx("toric2.css"), "--qubits", "99"], 1),
        (["--budget", "10", "distance", fx("toric3.css")], 5),
    ]
    failures = 0
    for args, expected in cases:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}\n{proc.stderr}")
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
            validator.validate(report)
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {label}: {err}")
            failures += 1
            continue
        if expected != 0 and "error" in report and report["exit_code"] != expected:
            print(f"FAIL {label}: exit_code field {report['exit_code']}")
            failures += 1
            continue
        print(f"ok   {label}")
    print(f"{len(cases) - failures}/{len(cases)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
