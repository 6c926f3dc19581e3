"""Exact Cotor / Hochschild cohomology computations.

Problems are plain dicts in the same JSON layout the ``cotorlab`` command line
tool reads; every function returns the report as a dict.
"""

import json
from typing import Any, Optional, Sequence, Tuple

from . import _core
from ._core import InvariantViolation, ReferenceError, SchemaError, TaskError, ValidationError

__all__ = [
    "InvariantViolation",
    "ReferenceError",
    "SchemaError",
    "TaskError",
    "ValidationError",
    "commands",
    "run",
    "validate",
    "cotensor",
    "cotor",
    "hochschild",
    "compare",
    "graded_compare",
    "dg_compare",
    "tower",
    "normalize",
    "rank",
    "kernel",
    "solve",
]

Field = dict
Rows = Sequence[Sequence[Any]]


def commands() -> list:
    return list(_core.commands())


def run(
    command: str,
    problem: dict,
    max_degree: Optional[int] = None,
    window: Optional[Tuple[int, int]] = None,
    emit_bases: bool = False,
) -> dict:
    """Run one task. The problem's own task section supplies the inputs."""
    text = _core.run(command, json.dumps(problem), max_degree, window, emit_bases)
    return json.loads(text)


def _with_command(command: str, problem: dict) -> dict:
    task = dict(problem.get("task", {}))
    task.setdefault("command", command)
    return {**problem, "task": task}


def validate(problem: dict) -> dict:
    return run("validate", _with_command("validate", problem))


def cotensor(problem: dict, **kw) -> dict:
    return run("cotensor", _with_command("cotensor", problem), **kw)


def cotor(problem: dict, **kw) -> dict:
    return run("cotor", _with_command("cotor", problem), **kw)


def hochschild(problem: dict, **kw) -> dict:
    return run("hochschild", _with_command("hochschild", problem), **kw)


def compare(problem: dict, **kw) -> dict:
    return run("compare", _with_command("compare", problem), **kw)


def graded_compare(problem: dict, **kw) -> dict:
    return run("graded-compare", _with_command("graded-compare", problem), **kw)


def dg_compare(problem: dict, **kw) -> dict:
    return run("dg-compare", _with_command("dg-compare", problem), **kw)


def tower(problem: dict, **kw) -> dict:
    return run("tower", _with_command("tower", problem), **kw)


def normalize(problem: dict) -> dict:
    """The problem with every object written out as explicit tensors."""
    return json.loads(_core.normalize(json.dumps(problem)))


def rank(field: Field, rows: Rows) -> int:
    return _core.rank(json.dumps(field), json.dumps(rows))


def kernel(field: Field, rows: Rows) -> list:
    """Basis of the null space, one vector per entry."""
    return json.loads(_core.kernel(json.dumps(field), json.dumps(rows)))


def solve(field: Field, rows: Rows, rhs: Sequence[Any]) -> Optional[list]:
    out = _core.solve(json.dumps(field), json.dumps(rows), json.dumps(list(rhs)))
    return None if out is None else json.loads(out)
