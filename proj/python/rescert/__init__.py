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

"""Exact nonresonance criteria for rank-one local systems.

Reports and certificates are returned as plain dictionaries with the same
layout as the JSON output of the ``rescert`` command line tool.
"""

import json

from ._rescert import (
    DomainError,
    Error,
    InputError,
    Problem,
    RetryBudgetExhausted,
    resonant_flats,
)
from . import _rescert

__all__ = [
    "DomainError",
    "Error",
    "InputError",
    "Problem",
    "RetryBudgetExhausted",
    "certify",
    "check",
    "cohomology",
    "lattice",
    "lift",
    "load",
    "resonant_flats",
    "section",
    "verify_certificate",
]


def load(path):
  """Reads an arrangement document."""
  return Problem.load(str(path))


def lattice(problem):
  return json.loads(_rescert.lattice_json(problem))


def check(problem, criterion="all", partition=None, flat=None,
          search_partitions=False):
  """Runs one criterion or all of them; partitions read "H1,H2|H3"."""
  return json.loads(
      _rescert.check_json(problem, criterion, partition, flat,
                          search_partitions))


def certify(problem):
  return json.loads(_rescert.certify_json(problem))


def verify_certificate(problem, certificate):
  """Returns (accepted, reason) for a certificate dict or JSON string."""
  if not isinstance(certificate, str):
    certificate = json.dumps(certificate)
  return _rescert.verify_certificate(problem, certificate)


def cohomology(problem, decone=None):
  return json.loads(_rescert.cohomology_json(problem, decone))


def lift(problem, partition, seed=None):
  return json.loads(_rescert.lift_json(problem, partition, seed))


def section(problem, flat, seed=None):
  return json.loads(_rescert.section_json(problem, flat, seed))
