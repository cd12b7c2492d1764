"""Deterministic constructors for the counterexample families.

Vertex numbering is fixed so fixtures stay byte-stable:

* layered families (:func:`gen_even_girth`, :func:`gen_odd_girth`): the
  X-layer ``x_0..x_{n-1}`` is ``0..n-1``; block ``Y_i`` occupies
  ``n + i*h .. n + i*h + h - 1``.
* :func:`gen_bipartite_tournament`: ``X_i`` (``i = 1..h+1``) occupies
  ``(i-1)*h .. i*h - 1``, then ``y_i`` is ``h*(h+1) + i - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraph import Digraph, DigraphBuilder

__all__ = [
    "ConstructionParams",
    "even_params",
    "odd_params",
    "layer_sets",
    "gen_even_girth",
    "gen_odd_girth",
    "gen_bipartite_tournament",
    "bipartite_tournament_sets",
    "gen_circular",
    "gen_complete_symmetric",
    "gen_directed_cycle",
    "gen_directed_path",
    "pad_sources",
    "gen_random_min_outdegree",
]


def ceil_ratio_k(g: int, k: int) -> int:
    """``ceil(g*k / (g-1))`` in exact integer arithmetic."""
    return -(-g * k // (g - 1))


@dataclass(frozen=True)
class ConstructionParams:
    """Parameter bundle for the layered families.

    ``h`` is the out-degree of the construction and ``n`` the X-layer size;
    both are derived from ``g``, ``k`` and ``c``. ``t`` only feeds reports.
    """

    g: int
    k: int
    c: int = 0
    t: int = 0

    def __post_init__(self):
        if self.g < 3:
            raise ValueError(f"girth target must be >= 3, got {self.g}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.c < 0 or self.t < 0:
            raise ValueError("c and t must be non-negative")
        if self.g % 2 == 1 and self.c != 0:
            raise ValueError("the shift constant c applies to the even family only")

    @property
    def even(self) -> bool:
        return self.g % 2 == 0

    @property
    def r(self) -> int:
        return (self.g - 1) // 2

    @property
    def h(self) -> int:
        return ceil_ratio_k(self.g, self.k) + self.c

    @property
    def n(self) -> int:
        if self.even:
            return (self.g // 2 - 1) * self.h + 1
        return self.r * self.h + 1

    @property
    def vertex_count(self) -> int:
        return self.n * (self.h + 1)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "c": self.c,
            "t": self.t,
            "h": self.h,
            "n": self.n,
        }


def even_params(g: int, k: int, c: int = 0, t: int = 0) -> ConstructionParams:
    if g % 2 or g < 4:
        raise ValueError(f"even family needs an even girth >= 4, got {g}")
    return ConstructionParams(g, k, c, t)


def odd_params(g: int, k: int, t: int = 0) -> ConstructionParams:
    if g % 2 == 0 or g < 3:
        raise ValueError(f"odd family needs an odd girth >= 3, got {g}")
    return ConstructionParams(g, k, 0, t)


def layer_sets(params: ConstructionParams) -> tuple[range, range]:
    """``(X, Y)`` vertex ranges of a layered construction."""
    return range(params.n), range(params.n, params.vertex_count)


def _layered(n: int, h: int) -> DigraphBuilder:
    b = DigraphBuilder(n * (h + 1))
    for i in range(n):
        for j in range(h):
            y = n + i * h + j
            b.add_arc(i, y)
            for step in range(1, h + 1):
                b.add_arc(y, (i + step) % n)
    return b


def gen_even_girth(g: int, k: int, c: int = 0) -> Digraph:
    """Bipartite layered digraph with girth ``g`` and every out-degree ``h``.

    ``x_i`` points to all of ``Y_i``; every vertex of ``Y_i`` points to
    ``x_{i+1}, ..., x_{i+h}`` (indices mod ``n``).
    """
    p = even_params(g, k, c)
    return _layered(p.n, p.h).build()


def gen_odd_girth(g: int, k: int, variant: str = "with_chord") -> Digraph:
    """Odd-girth construction; ``with_chord`` adds the arc ``x_{rh} -> x_0``.

    The chord variant has girth ``g``; without it the digraph is bipartite
    with girth ``g + 1``.
    """
    if variant not in ("with_chord", "without_chord"):
        raise ValueError(f"unknown variant {variant!r}")
    p = odd_params(g, k)
    b = _layered(p.n, p.h)
    if variant == "with_chord":
        b.add_arc(p.r * p.h, 0)
    return b.build()


def bipartite_tournament_sets(h: int) -> tuple[range, range]:
    return range(h * (h + 1)), range(h * (h + 1), h * (h + 1) + h + 1)


def gen_bipartite_tournament(h: int) -> Digraph:
    """``X_i -> Y minus {y_i}`` and ``y_i -> X_i`` for ``i = 1..h+1``."""
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    xs, ys = bipartite_tournament_sets(h)
    b = DigraphBuilder(len(xs) + len(ys))
    for i in range(h + 1):
        block = range(i * h, (i + 1) * h)
        for x in block:
            for j, y in enumerate(ys):
                if j == i:
                    b.add_arc(y, x)
                else:
                    b.add_arc(x, y)
    return b.build()


def gen_circular(p: int, g: int) -> Digraph:
    """Circular digraph on ``p*(g-1) + 1`` vertices, ``i -> i+1, ..., i+p``."""
    if p < 1 or g < 2:
        raise ValueError(f"need p >= 1 and g >= 2, got p={p}, g={g}")
    n = p * (g - 1) + 1
    return Digraph(n, ((i, (i + s) % n) for i in range(n) for s in range(1, p + 1)))


def gen_complete_symmetric(m: int) -> Digraph:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return Digraph(m, ((u, v) for u in range(m) for v in range(m) if u != v))


def gen_directed_cycle(m: int) -> Digraph:
    if m < 2:
        raise ValueError(f"a directed cycle needs at least 2 vertices, got {m}")
    return Digraph(m, ((i, (i + 1) % m) for i in range(m)))


def gen_directed_path(m: int) -> Digraph:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return Digraph(m, ((i, i + 1) for i in range(m - 1)))


def pad_sources(D: Digraph, s: int, d: int, seed: int) -> Digraph:
    """Append ``s`` source vertices, each with ``d`` out-arcs into ``D``.

    New vertices get no in-arcs, so they lie on no cycle.
    """
    if s < 1 or d < 1:
        raise ValueError("s and d must be >= 1")
    n = D.vertex_count
    if d > n:
        raise ValueError(f"out-degree {d} exceeds the {n} vertices available")
    rng = random.Random(seed)
    arcs = list(D.arcs)
    for i in range(s):
        arcs.extend((n + i, v) for v in sorted(rng.sample(range(n), d)))
    return Digraph(n + s, arcs)


def gen_random_min_outdegree(m: int, delta: int, seed: int) -> Digraph:
    """Every vertex gets exactly ``delta`` out-neighbours, sampled uniformly."""
    if delta < 0 or delta >= m:
        raise ValueError(f"need 0 <= delta < m, got delta={delta}, m={m}")
    rng = random.Random(seed)
    arcs = []
    for v in range(m):
        others = [u for u in range(m) if u != v]
        arcs.extend((v, u) for u in rng.sample(others, delta))
    return Digraph(m, arcs)

