"""Exact computations and verification sweeps in the rank-n swapping algebra.

Thin wrapper over the C++ library: every function here goes through the same command
layer as the `swapalg` executable, so results match the CLI byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _core

__all__ = ["SwapalgError", "bracket", "reduce", "is_zero", "verify", "linking_number", "parallel_number", "run"]

SwapalgError = _core.SwapalgError


def run(*args: str) -> tuple[int, str, str]:
    """Run one command line; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def _flags(**kwargs) -> list[str]:
    out: list[str] = []
    for key, value in kwargs.items():
        if value is None:
            continue
        flag = "--" + key.replace("_", "-")
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        out += [flag, str(value)]
    return out


def _report(args: list[str]) -> dict:
    code, out, err = run(*args, "--format", "json")
    if code not in (0, 1):
        raise SwapalgError(err.strip() or f"swapalg exited with code {code}")
    return json.loads(out)


def bracket(f: str, g: str, *, points: int, alpha=1, beta=0, rank: int = 2) -> str:
    """{f, g}_{alpha, beta} for two expressions over a1..a<points>, rendered canonically."""
    rep = _report(["bracket", "--expr", f, "--expr", g] + _flags(points=points, alpha=alpha, beta=beta, rank=rank))
    return rep["items"][0]["detail"]


def reduce(expr: str, *, points: int, rank: int = 2) -> str:
    """Normal form of an expression modulo the (rank+1)-minor ideal."""
    rep = _report(["reduce", "--expr", expr] + _flags(points=points, rank=rank))
    return rep["items"][0]["detail"]


def is_zero(expr: str, *, points: int, rank: int = 2, seed: int | None = None, trials: int | None = None) -> dict:
    """Zero certificate of an expression in Q_n(P): verdict, method and trial count."""
    rep = _report(["iszero", "--expr", expr] + _flags(points=points, rank=rank, seed=seed, trials=trials))
    item = rep["items"][0]
    return {"verdict": item["verdict"], "method": item["method"], "trials": item["trials"], "zero": item["pass"]}


def verify(task: str, **options) -> dict:
    """Run a verification sweep (e.g. "jacobi", "main-theorem") and return its JSON report."""
    return _report(["verify", task] + _flags(**options))


def linking_number(r: str, x: str, s: str, y: str, *, points: int) -> Fraction:
    return Fraction(_core.linking_number(r, x, s, y, points))


def parallel_number(i: str, j: str, ip: str, jp: str, *, points: int) -> Fraction:
    return Fraction(_core.parallel_number(i, j, ip, jp, points))
