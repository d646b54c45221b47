"""The FS(X, Y) adjacency oracle.

A configuration is a tuple ``sigma`` with ``sigma[x] = y``: the Y-vertex
standing on X-vertex x.  Two configurations are adjacent when they differ
by transposing the values on an X-edge {a, b} whose values are Y-adjacent
(a friendly swap).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .config import InputError
from .graph_core import SimpleGraph


class SwapError(InputError):
    """A swap that is not an X-edge or not friendly; ``index`` set when replaying."""

    def __init__(self, reason, edge=None, index=None):
        where = "" if index is None else f" at index {index}"
        super().__init__(f"invalid swap{where}: {reason}")
        self.reason = reason
        self.edge = edge
        self.index = index


# ---------------------------------------------------------------- configurations

def identity(n):
    return tuple(range(n))


def inverse(sigma):
    inv = [0] * len(sigma)
    for x, y in enumerate(sigma):
        inv[y] = x
    return tuple(inv)


def check_configuration(sigma, n=None):
    s = tuple(int(v) for v in sigma)
    if sorted(s) != list(range(len(s))) or (n is not None and len(s) != n):
        raise InputError(f"not a permutation of 0..{(n or len(s)) - 1}: {list(sigma)}")
    return s


def to_word(sigma):
    return " ".join(str(v) for v in sigma)


def from_word(text, n=None):
    try:
        vals = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"configuration word must be integers: {text!r}") from None
    return check_configuration(vals, n)


def parity_class(sigma):
    """'even' or 'odd' according to the sign of the permutation."""
    seen = [False] * len(sigma)
    transpositions = 0
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        transpositions += length - 1
    return "odd" if transpositions % 2 else "even"


# ---------------------------------------------------------------- context

class FsContext:
    """The pair (X, Y); immutable and shareable."""

    __slots__ = ("X", "Y", "n", "x_edges", "_yadj")

    def __init__(self, X: SimpleGraph, Y: SimpleGraph):
        if X.n != Y.n:
            raise InputError(f"X has {X.n} vertices but Y has {Y.n}")
        self.X, self.Y, self.n = X, Y, X.n
        self.x_edges = X.edge_list
        self._yadj = Y.adjacency_matrix()

    def friendly(self, sigma, a, b):
        return bool(self._yadj[sigma[a]][sigma[b]])

    def friendly_edges(self, sigma):
        """X-edges whose current occupants are friends, in sorted X-edge order."""
        yadj = self._yadj
        return [(a, b) for a, b in self.x_edges if yadj[sigma[a]][sigma[b]]]

    def __repr__(self):
        return f"FsContext(X={self.X!r}, Y={self.Y!r})"


def _swapped(sigma, a, b):
    s = list(sigma)
    s[a], s[b] = s[b], s[a]
    return tuple(s)


def apply_swap(ctx, sigma, edge):
    a, b = edge
    if not ctx.X.has_edge(a, b):
        raise SwapError(f"{(a, b)} is not an edge of X", edge)
    if not ctx.friendly(sigma, a, b):
        raise SwapError(f"Y-vertices {sigma[a]} and {sigma[b]} on {(a, b)} are not friends", edge)
    return _swapped(sigma, a, b)


def neighbors(ctx, sigma):
    """All configurations one friendly swap away, ordered by X-edge."""
    yadj = ctx._yadj
    out = []
    for a, b in ctx.x_edges:
        if yadj[sigma[a]][sigma[b]]:
            s = list(sigma)
            s[a], s[b] = s[b], s[a]
            out.append(tuple(s))
    return out


def fs_edge_count(ctx):
    """|E(X)| * |E(Y)| * (n-2)!  (exact Python integer)."""
    if ctx.n < 2:
        return 0
    return ctx.X.m * ctx.Y.m * math.factorial(ctx.n - 2)


# ---------------------------------------------------------------- swap sequences

@dataclass
class SwapSequence:
    start: tuple
    swaps: list = field(default_factory=list)

    def __len__(self):
        return len(self.swaps)

    def to_json(self):
        return json.dumps({"start": list(self.start), "swaps": [list(e) for e in self.swaps]})

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
            return cls(check_configuration(obj["start"]),
                       [tuple(int(v) for v in e) for e in obj["swaps"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad swap-sequence JSON: {exc}") from None


def replay(ctx, seq):
    """Yield every configuration along ``seq`` (start included), validating each swap."""
    sigma = check_configuration(seq.start, ctx.n)
    yield sigma
    for i, e in enumerate(seq.swaps):
        try:
            sigma = apply_swap(ctx, sigma, e)
        except SwapError as exc:
            raise SwapError(exc.reason, e, index=i) from None
        yield sigma


def validate_sequence(ctx, seq):
    """Replay ``seq`` and return its endpoint; raises SwapError at the first bad index."""
    last = None
    for last in replay(ctx, seq):
        pass
    return last
