"""Resource budgets and error types shared by every module.

Budgets come from three layers, later ones winning:
built-in defaults, an optional ``key = value`` config file, and the
``FSGRAPH_BUDGET`` environment variable (same ``key=value`` syntax,
comma separated, or a bare integer meaning ``max_n``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


class FsError(Exception):
    """Base class for errors raised by fsgraph."""


class InputError(FsError, ValueError):
    """Malformed graph, configuration or sequence input."""


class BudgetExceeded(FsError, RuntimeError):
    """A search or generator ran past its configured resource limit."""

    def __init__(self, message, visited=None):
        super().__init__(message if visited is None else f"{message} (visited {visited})")
        self.visited = visited


@dataclass(frozen=True)
class Budget:
    max_n: int = 10                   # explorer: largest n for exhaustive BFS
    max_states: int = 4_000_000       # explorer: configurations visited per call
    max_cycle_vertices: int = 12      # graph_core: cycle/barbell/theta enumeration
    max_subgraphs: int = 200_000      # graph_core: enumerated cycle subgraphs
    dense_states: int = 5040          # markov: dense transition matrix size
    max_program: int = 10_000_000     # construction: stored swaps per program
    rng: str = "pcg64"                # markov: numpy bit generator name


_INT_FIELDS = {f.name for f in fields(Budget) if f.type == "int"}
_STR_FIELDS = {f.name for f in fields(Budget) if f.type == "str"}


def parse_assignments(text):
    """Parse ``key = value`` lines (``#`` comments allowed) into a dict."""
    out = {}
    for raw in text.replace(",", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"budget line without '=': {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in _STR_FIELDS:
            out[key] = value
            continue
        if key not in _INT_FIELDS:
            raise InputError(f"unknown budget key {key!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise InputError(f"budget value for {key!r} is not an integer: {value!r}") from None
    return out


def load_budget(path=None, env=None):
    """Build a Budget from defaults, an optional config file and the environment."""
    budget = Budget()
    if path is not None:
        with open(path) as fh:
            budget = replace(budget, **parse_assignments(fh.read()))
    env = os.environ if env is None else env
    raw = env.get("FSGRAPH_BUDGET")
    if raw:
        raw = raw.strip()
        if raw.isdigit():
            budget = replace(budget, max_n=int(raw))
        else:
            budget = replace(budget, **parse_assignments(raw))
    return budget


_current = None


def current_budget():
    global _current
    if _current is None:
        _current = load_budget()
    return _current


def set_budget(budget):
    """Install a process-wide budget (used by the CLI and by tests)."""
    global _current
    _current = budget
