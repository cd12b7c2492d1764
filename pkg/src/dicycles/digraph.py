"""Immutable simple digraphs and their exact basic invariants.

Vertices are the integers ``0..n-1``. Loops and parallel arcs are rejected;
2-cycles are allowed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

__all__ = [
    "Digraph",
    "DigraphBuilder",
    "GirthCertificate",
    "min_outdegree",
    "girth",
    "strong_connectivity",
    "is_strongly_connected",
    "parse_edge_list",
    "read_edge_list",
    "write_edge_list",
    "format_edge_list",
    "format_dot",
]


class Digraph:
    """A sealed simple digraph.

    Build one with :meth:`from_arcs` or :class:`DigraphBuilder`. Instances are
    hashable and compare equal when vertex count and arc set agree.
    """

    __slots__ = ("_n", "_arcs", "_arcset", "_out", "_in", "_csr")

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]]):
        n = int(vertex_count)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"parallel arc ({u}, {v})")
            seen.add((u, v))
        ordered = tuple(sorted(seen))
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            out[u].append(v)
        for u, v in sorted(ordered, key=lambda a: (a[1], a[0])):
            inn[v].append(u)
        self._n = n
        self._arcs = ordered
        self._arcset = frozenset(ordered)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)
        self._csr = None

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(vertex_count, arcs)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Arcs in lexicographic order."""
        return self._arcs

    @property
    def out_lists(self) -> tuple[tuple[int, ...], ...]:
        return self._out

    @property
    def in_lists(self) -> tuple[tuple[int, ...], ...]:
        return self._in

    def vertices(self) -> range:
        return range(self._n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Out-adjacency as ``(indptr, indices)`` int64 arrays, neighbours sorted."""
        if self._csr is None:
            indptr = np.zeros(self._n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(x) for x in self._out], dtype=np.int64)
            indices = np.fromiter(
                (v for _, v in self._arcs), dtype=np.int64, count=len(self._arcs)
            )
            self._csr = (indptr, indices)
        return self._csr

    def transpose(self) -> "Digraph":
        return Digraph(self._n, ((v, u) for u, v in self._arcs))

    def without_arc(self, u: int, v: int) -> "Digraph":
        if (u, v) not in self._arcset:
            raise ValueError(f"({u}, {v}) is not an arc")
        return Digraph(self._n, (a for a in self._arcs if a != (u, v)))

    def with_arcs(self, extra: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self._n, list(self._arcs) + list(extra))

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Induced subdigraph, relabelled ``0..len-1`` in increasing vertex order.

        Returns the subdigraph and the tuple mapping new labels to old ones.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [
            (index[u], index[v])
            for u in keep
            for v in self._out[u]
            if v in index
        ]
        return Digraph(len(keep), arcs), keep

    def is_cycle(self, seq: Sequence[int]) -> bool:
        """True if ``seq`` lists a simple directed cycle of this digraph."""
        if len(seq) < 2 or len(set(seq)) != len(seq):
            return False
        return all(
            self.has_arc(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
        )

    def is_path(self, seq: Sequence[int]) -> bool:
        if len(seq) == 0 or len(set(seq)) != len(seq):
            return False
        if not all(0 <= v < self._n for v in seq):
            return False
        return all(self.has_arc(seq[i], seq[i + 1]) for i in range(len(seq) - 1))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._n, self._arcs))

    def __repr__(self):
        return f"Digraph(vertex_count={self._n}, arc_count={len(self._arcs)})"


class DigraphBuilder:
    """Collects arcs, validating as it goes, then seals into a :class:`Digraph`."""

    def __init__(self, vertex_count: int = 0):
        self._n = vertex_count
        self._arcs: set[tuple[int, int]] = set()

    @property
    def vertex_count(self) -> int:
        return self._n

    def add_vertices(self, count: int = 1) -> range:
        first = self._n
        self._n += count
        return range(first, self._n)

    def add_arc(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise ValueError(f"arc ({u}, {v}) out of range for {self._n} vertices")
        if (u, v) in self._arcs:
            raise ValueError(f"parallel arc ({u}, {v})")
        self._arcs.add((u, v))

    def build(self) -> Digraph:
        return Digraph(self._n, self._arcs)


@dataclass(frozen=True)
class GirthCertificate:
    """Shortest cycle length plus one shortest cycle.

    ``girth`` is ``None`` and ``witness`` empty for an acyclic digraph.
    """

    girth: int | None
    witness: tuple[int, ...] = ()

    @property
    def acyclic(self) -> bool:
        return self.girth is None

    def as_dict(self) -> dict:
        return {
            "girth": "acyclic" if self.girth is None else self.girth,
            "witness": list(self.witness),
        }


def min_outdegree(D: Digraph) -> int:
    if D.vertex_count == 0:
        return 0
    return min(len(x) for x in D.out_lists)


def min_indegree(D: Digraph) -> int:
    if D.vertex_count == 0:
        return 0
    return min(len(x) for x in D.in_lists)


def girth(D: Digraph) -> GirthCertificate:
    """Exact girth with the lexicographically smallest shortest cycle.

    The witness starts at its smallest vertex.
    """
    n = D.vertex_count
    if n == 0 or D.arc_count == 0:
        return GirthCertificate(None)
    indptr, indices = D.csr()
    length, start = _kernels.girth_sweep(indptr, indices, n)
    length, start = int(length), int(start)
    if start < 0:
        return GirthCertificate(None)
    return GirthCertificate(length, _smallest_cycle_from(D, start, length))


def _smallest_cycle_from(D: Digraph, s: int, length: int) -> tuple[int, ...]:
    # distances to s inside the subdigraph on vertices >= s
    to_s = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in D.in_lists[v]:
            if u >= s and u not in to_s:
                to_s[u] = to_s[v] + 1
                queue.append(u)
    cycle = [s]
    cur = s
    for step in range(1, length):
        need = length - step
        cur = next(w for w in D.out_lists[cur] if w > s and to_s.get(w) == need)
        cycle.append(cur)
    return tuple(cycle)


def _reach(D: Digraph, source: int, reverse: bool = False) -> set[int]:
    adj = D.in_lists if reverse else D.out_lists
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(D: Digraph) -> bool:
    n = D.vertex_count
    if n <= 1:
        return True
    return len(_reach(D, 0)) == n and len(_reach(D, 0, reverse=True)) == n


def _disjoint_paths(D: Digraph, s: int, t: int, cap: int) -> int:
    """Max number of internally vertex-disjoint s->t paths, stopping at ``cap``.

    Unit-capacity augmenting paths on the split digraph: vertex v becomes
    v_in = 2v, v_out = 2v + 1 joined by a unit arc (infinite for s and t).
    """
    n = D.vertex_count
    residual: dict[int, dict[int, int]] = {i: {} for i in range(2 * n)}

    def add(a, b, c):
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in D.arcs:
        add(2 * u + 1, 2 * v, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(residual[a]):
                if residual[a][b] > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def strong_connectivity(D: Digraph) -> int:
    """Vertex strong connectivity (Menger value).

    Minimum over ordered pairs ``(u, v)`` with no arc ``u -> v`` of the number
    of internally disjoint ``u -> v`` paths; ``n - 1`` for complete digraphs
    and 0 exactly when ``D`` is not strongly connected.
    """
    n = D.vertex_count
    if n < 2:
        raise ValueError("strong connectivity needs at least 2 vertices")
    if not is_strongly_connected(D):
        return 0
    best = n - 1
    for u in range(n):
        for v in range(n):
            if u == v or D.has_arc(u, v):
                continue
            cap = min(best, D.out_degree(u), D.in_degree(v))
            best = min(best, _disjoint_paths(D, u, v, cap))
            if best == 1:
                return 1
    return best


# -- edge-list and DOT I/O --------------------------------------------------


def parse_edge_list(text: str) -> Digraph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` arcs."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} arcs, found {len(body)}")
    arcs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad arc line: {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return Digraph(n, arcs)


def format_edge_list(D: Digraph) -> str:
    out = [f"{D.vertex_count} {D.arc_count}"]
    out.extend(f"{u} {v}" for u, v in D.arcs)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(D: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(D))


def format_dot(D: Digraph, name: str = "D") -> str:
    out = [f"digraph {name} {{"]
    out.extend(f"  {v};" for v in D.vertices())
    out.extend(f"  {u} -> {v};" for u, v in D.arcs)
    out.append("}")
    return "\n".join(out) + "\n"
