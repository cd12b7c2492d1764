"""Exact longest simple directed paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import _kernels
from .digraph import Digraph

__all__ = [
    "PathCertificate",
    "bipartition",
    "bipartite_path_bound",
    "path_upper_bound",
    "longest_path_exact",
]

DEFAULT_BUDGET = 50_000_000


@dataclass(frozen=True)
class PathCertificate:
    """Longest path found, measured in arcs.

    ``exact`` means no longer simple path exists; otherwise ``upper_bound``
    is a sound structural bound on the true maximum.
    """

    length: int
    witness: tuple[int, ...]
    exact: bool
    upper_bound: int
    expansions: int = 0

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "exact": self.exact,
            "upper_bound": self.upper_bound,
            "witness": list(self.witness),
        }


def bipartition(D: Digraph) -> list[tuple[set[int], set[int]]] | None:
    """2-colouring of each weak component, or ``None`` if some component is odd."""
    n = D.vertex_count
    colour = [-1] * n
    parts = []
    for s in range(n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        sides: tuple[set[int], set[int]] = ({s}, set())
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in D.out_lists[v] + D.in_lists[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    sides[colour[w]].add(w)
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
        parts.append(sides)
    return parts


def bipartite_path_bound(D: Digraph) -> int | None:
    """Alternation bound on path length in arcs, ``None`` if ``D`` is not bipartite.

    A path inside a component with sides of sizes ``a <= b`` visits at most
    ``min(2a + 1, a + b)`` vertices.
    """
    parts = bipartition(D)
    if parts is None:
        return None
    best = 0
    for left, right in parts:
        a, b = sorted((len(left), len(right)))
        best = max(best, min(2 * a + 1, a + b) - 1)
    return best


def path_upper_bound(D: Digraph) -> int:
    trivial = max(D.vertex_count - 1, 0)
    alt = bipartite_path_bound(D)
    return trivial if alt is None else min(trivial, alt)


def longest_path_exact(D: Digraph, budget: int = DEFAULT_BUDGET) -> PathCertificate:
    """Longest simple path by exhaustive DFS with reachability pruning.

    Start vertices are tried in increasing order and neighbours in sorted
    order; the first maximum met is the witness. ``budget`` caps the number of
    path extensions.
    """
    n = D.vertex_count
    upper = path_upper_bound(D)
    if n == 0:
        return PathCertificate(0, (), True, 0)
    indptr, indices = D.csr()
    length, path, expansions, complete = _kernels.longest_path_search(
        indptr, indices, n, upper, budget
    )
    length = int(length)
    exact = bool(complete) or length >= upper
    return PathCertificate(
        length=length,
        witness=tuple(int(v) for v in path),
        exact=exact,
        upper_bound=length if exact else upper,
        expansions=int(expansions),
    )
