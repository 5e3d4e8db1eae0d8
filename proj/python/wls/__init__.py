"""Exact solvers for weakly linear systems of fuzzy relation inequalities.

Problems are dicts in the same JSON shape the ``wls`` command line reads, or
paths to such files.  Lattice values are exact fraction strings such as
``"9/10"``; results use the same form.
"""

from __future__ import annotations

import json
import os
from typing import Any, Mapping, Union

from ._core import WlsError
from . import _core

__all__ = [
    "WlsError",
    "load",
    "canonicalize",
    "solve_greatest",
    "solve_preorder",
    "solve_equivalence",
    "solution_degree",
    "aggregate",
    "oracle_sweep",
]

Problem = Union[Mapping[str, Any], str, os.PathLike]


def _text(problem: Problem) -> str:
    if isinstance(problem, Mapping):
        return json.dumps(problem)
    with open(problem, encoding="utf-8") as f:
        return f.read()


def load(path: Union[str, os.PathLike]) -> dict:
    """Read and validate a problem file, returning its canonical dict."""
    return canonicalize(path)


def canonicalize(problem: Problem) -> dict:
    return json.loads(_core.canonicalize(_text(problem)))


def _solve(algorithm: str, problem: Problem, degree: str, kind: str, x0, max_iter: int, trace: bool) -> dict:
    return json.loads(_core.solve(_text(problem), algorithm, str(degree), kind, x0 or "", max_iter, trace))


def solve_greatest(problem: Problem, degree: str, *, kind: str = "wls3", x0: str | None = None,
                   max_iter: int = 1000, trace: bool = False) -> dict:
    """Greatest relation below x0 whose solution degree reaches ``degree``."""
    return _solve("greatest", problem, degree, kind, x0, max_iter, trace)


def solve_preorder(problem: Problem, degree: str, *, kind: str = "wls3", x0: str | None = None,
                   max_iter: int = 1000, trace: bool = False) -> dict:
    """Fuzzy preorder reaching ``degree``; x0 must itself be a preorder."""
    return _solve("preorder", problem, degree, kind, x0, max_iter, trace)


def solve_equivalence(problem: Problem, degree: str, *, kind: str = "wls3", x0: str | None = None,
                      max_iter: int = 1000, trace: bool = False) -> dict:
    return _solve("equivalence", problem, degree, kind, x0, max_iter, trace)


def solution_degree(problem: Problem, relation: str, kind: int = 3) -> str:
    """Solution degree (kind 1..9) of a named relation, ``identity`` or ``universal``."""
    return _core.degree(_text(problem), relation, kind)


def aggregate(problem: Problem, degree: str, *, kind: str = "wls3", mode: str = "preorder",
              max_iter: int = 1000) -> dict:
    """Solve from the universal relation and factor the network.

    The result has a ``"factor"`` entry unless the iteration cap was reached.
    """
    return json.loads(_core.aggregate(_text(problem), str(degree), kind, mode, max_iter))


def oracle_sweep(chain: str = "godel", size: int = 3, nodes: int = 2, budget: int = 1_000_000) -> dict:
    """Compare the solver with brute-force enumeration on a finite chain."""
    return json.loads(_core.oracle_sweep(chain, size, nodes, budget))
