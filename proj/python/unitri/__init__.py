"""Exact supercharacter, Kirillov and xi computations for algebra groups over F_q."""

import json

from ._core import (
    CapExceeded,
    chain_dims,
    field_order_split,
    orbit_size,
    run_cli,
    shape,
    xi_exponents,
)
from . import _core

__all__ = [
    "CapExceeded",
    "chain_dims",
    "execute",
    "field_order_split",
    "orbit_size",
    "run",
    "run_cli",
    "shape",
    "xi_exponents",
]


def execute(job):
    """Run a job given as a dict; returns (exit_code, result dict or None)."""
    code, out, _ = _core.execute(json.dumps(job))
    return code, (json.loads(out) if out else None)


def run(*args):
    """Run a command line such as run("chain", "--n", "3", "--lambda", "[[1,3,1]]")."""
    code, out, _ = run_cli([str(a) for a in args])
    return code, (json.loads(out) if out else None)
