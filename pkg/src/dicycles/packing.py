"""Vertex-disjoint cycle packings: enumeration, exact maximum, counting bounds.

Cycles are tuples of vertices rotated so the smallest vertex comes first.
Vertex sets inside the solver are Python ints used as bitmasks.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .digraph import Digraph, girth

__all__ = [
    "Cycle",
    "CycleList",
    "Packing",
    "PremiseUnverified",
    "PackingClaimViolation",
    "canonical_cycle",
    "enumerate_cycles",
    "chordless_cycles",
    "max_disjoint_cycles",
    "counting_bound",
    "packing_delta_under_arc_removal",
    "verify_packing",
]

Cycle = tuple[int, ...]

DEFAULT_BUDGET = 200_000
DEFAULT_CYCLE_CAP = 200_000


class PremiseUnverified(ValueError):
    """The intersection premise of a counting bound could not be established."""


class PackingClaimViolation(AssertionError):
    """Deleting one arc changed an exact maximum packing by more than one."""


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    i = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[i:]) + tuple(seq[:i])


class CycleList(NamedTuple):
    cycles: list[Cycle]
    truncated: bool


@dataclass(frozen=True)
class Packing:
    """Pairwise vertex-disjoint cycles with a bracket on the maximum."""

    cycles: tuple[Cycle, ...]
    upper_bound: int
    optimal: bool
    expansions: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise ValueError(
                f"lower bound {self.lower_bound} exceeds upper bound {self.upper_bound}"
            )
        if self.optimal and self.lower_bound != self.upper_bound:
            raise ValueError("an optimal packing must have matching bounds")

    @property
    def lower_bound(self) -> int:
        return len(self.cycles)

    def as_dict(self) -> dict:
        return {
            "lower": self.lower_bound,
            "upper": self.upper_bound,
            "optimal": self.optimal,
            "cycles": [list(c) for c in self.cycles],
        }


def verify_packing(D: Digraph, cycles: Iterable[Sequence[int]]) -> None:
    """Raise ``ValueError`` unless ``cycles`` are disjoint cycles of ``D``."""
    used: set[int] = set()
    for c in cycles:
        if not D.is_cycle(c):
            raise ValueError(f"{tuple(c)} is not a cycle of the digraph")
        if used.intersection(c):
            raise ValueError(f"{tuple(c)} overlaps an earlier cycle")
        used.update(c)


# -- enumeration -------------------------------------------------------------


class _Stop(Exception):
    pass


def _scc_of(out_lists, s: int, allowed: set[int]) -> set[int]:
    fwd = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for w in out_lists[v]:
            if w in allowed and w not in fwd:
                fwd.add(w)
                stack.append(w)
    return fwd


def _strong_component(D: Digraph, s: int, allowed: set[int]) -> set[int]:
    fwd = _scc_of(D.out_lists, s, allowed)
    bwd = _scc_of(D.in_lists, s, allowed)
    return fwd & bwd


def _johnson_from(D: Digraph, s: int, comp: set[int], emit) -> None:
    blocked: set[int] = set()
    B: dict[int, set[int]] = {v: set() for v in comp}
    stack: list[int] = []
    adj = {v: [w for w in D.out_lists[v] if w in comp] for v in comp}

    def unblock(u):
        todo = [u]
        while todo:
            x = todo.pop()
            if x in blocked:
                blocked.discard(x)
                todo.extend(B[x])
                B[x].clear()

    def circuit(v):
        found = False
        stack.append(v)
        blocked.add(v)
        for w in adj[v]:
            if w == s:
                emit(tuple(stack))
                found = True
            elif w not in blocked and circuit(w):
                found = True
        if found:
            unblock(v)
        else:
            for w in adj[v]:
                B[w].add(v)
        stack.pop()
        return found

    circuit(s)


def _bounded_from(D: Digraph, s: int, comp: set[int], max_len: int, emit) -> None:
    # distance back to s inside comp, for pruning
    to_s = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for u in D.in_lists[v]:
                if u in comp and u not in to_s:
                    to_s[u] = to_s[v] + 1
                    nxt.append(u)
        frontier = nxt
    path = [s]
    on = {s}

    def extend(v):
        for w in D.out_lists[v]:
            if w == s:
                emit(tuple(path))
            elif w in comp and w not in on and len(path) + to_s[w] <= max_len:
                path.append(w)
                on.add(w)
                extend(w)
                on.discard(w)
                path.pop()

    extend(s)


def enumerate_cycles(
    D: Digraph, max_len: int | None = None, cap: int = DEFAULT_CYCLE_CAP
) -> CycleList:
    """All simple cycles of length at most ``max_len`` (all if ``None``).

    Cycles come back canonical and sorted. If more than ``cap`` exist the first
    ``cap`` found are returned with ``truncated`` set.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    found: list[Cycle] = []
    truncated = False

    def emit(c):
        nonlocal truncated
        if len(found) >= cap:
            truncated = True
            raise _Stop
        found.append(c)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * D.vertex_count + 100))
    try:
        for s in D.vertices():
            if max_len is not None and max_len < 2:
                break
            comp = _strong_component(D, s, set(range(s, D.vertex_count)))
            if len(comp) < 2:
                continue
            if max_len is None:
                _johnson_from(D, s, comp, emit)
            else:
                _bounded_from(D, s, comp, max_len, emit)
    except _Stop:
        pass
    finally:
        sys.setrecursionlimit(old_limit)
    found.sort()
    return CycleList(found, truncated)


# -- bitmask helpers -----------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _MaskGraph:
    """Out/in adjacency of a digraph as per-vertex bitmasks."""

    def __init__(self, D: Digraph):
        self.n = D.vertex_count
        self.out = [0] * self.n
        self.inn = [0] * self.n
        for u, v in D.arcs:
            self.out[u] |= 1 << v
            self.inn[v] |= 1 << u

    def reach(self, v: int, mask: int, adj) -> int:
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= adj[x]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def component(self, v: int, mask: int) -> int:
        return self.reach(v, mask, self.out) & self.reach(v, mask, self.inn)

    def cyclic_core(self, mask: int) -> int:
        """Vertices of ``mask`` lying on a cycle of the induced subdigraph."""
        core = 0
        todo = mask
        while todo:
            v = (todo & -todo).bit_length() - 1
            comp = self.component(v, mask)
            todo &= ~comp
            if comp != 1 << v:
                core |= comp
        return core

    def components(self, mask: int) -> list[int]:
        comps = []
        todo = mask
        while todo:
            v = (todo & -todo).bit_length() - 1
            comp = self.component(v, mask)
            todo &= ~comp
            if comp != 1 << v:
                comps.append(comp)
        return comps

    def chordless_through(self, v: int, mask: int, max_len: int | None = None) -> list[Cycle]:
        """Chordless cycles through ``v`` inside ``mask``, shortest first.

        Every vertex of ``mask`` other than ``v`` must exceed ``v`` for the
        cycles to come out canonical; callers pass ``v`` = lowest bit.
        """
        if max_len is not None and max_len < 2:
            return []
        comp = self.component(v, mask)
        out, inn = self.out, self.inn
        vbit = 1 << v
        found: list[Cycle] = []
        path = [v]

        def extend(last, on):
            # `on` holds the path; a new vertex may only touch the path via
            # the arc from `last` (and the closing arc to v)
            earlier = on & ~(1 << last)
            for w in _bits(out[last] & comp & ~on):
                if inn[w] & earlier:
                    continue
                if out[w] & (on & ~vbit):
                    continue
                if out[w] & vbit:
                    found.append(tuple(path) + (w,))
                    continue
                if max_len is not None and len(path) + 1 >= max_len:
                    continue
                path.append(w)
                extend(w, on | (1 << w))
                path.pop()

        extend(v, vbit)
        found.sort(key=lambda c: (len(c), c))
        return found


def _mask_of(seq: Iterable[int]) -> int:
    m = 0
    for v in seq:
        m |= 1 << v
    return m


def chordless_cycles(D: Digraph, vertices: Iterable[int] | None = None) -> list[Cycle]:
    """All chordless cycles of the subdigraph induced by ``vertices``."""
    mg = _MaskGraph(D)
    mask = _mask_of(range(D.vertex_count) if vertices is None else vertices)
    result: list[Cycle] = []
    rest = mg.cyclic_core(mask)
    while rest:
        v = (rest & -rest).bit_length() - 1
        result.extend(mg.chordless_through(v, rest))
        rest = mg.cyclic_core(rest & ~(1 << v))
    result.sort(key=lambda c: (len(c), c))
    return result


# -- upper bounds -----------------------------------------------------------


def _girth_of_mask(mg: _MaskGraph, mask: int) -> int | None:
    verts = list(_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    arcs = [(index[u], index[w]) for u in verts for w in _bits(mg.out[u] & mask)]
    return girth(Digraph(len(verts), arcs)).girth


def _relaxation_bound(mg: _MaskGraph, mask: int) -> int:
    """Sum over strong components of ``floor(size / girth)``."""
    total = 0
    for comp in mg.components(mask):
        total += _popcount(comp) // _girth_of_mask(mg, comp)
    return total


def _contraction_bound(mg: _MaskGraph, mask: int) -> int:
    """Upper bound after packing-preserving contractions.

    A vertex whose only in-neighbour (or only out-neighbour) is ``u`` lies on
    cycles only together with ``u``, so it can be merged into ``u`` without
    changing the maximum packing. A loop created by merging is a cycle that
    can always be taken.
    """
    out = {v: set() for v in _bits(mask)}
    inn = {v: set() for v in out}
    for v in out:
        for w in _bits(mg.out[v] & mask):
            out[v].add(w)
            inn[w].add(v)
    loops: set[int] = set()
    taken = 0

    def remove(v):
        for w in out.pop(v):
            inn[w].discard(v)
        for w in inn.pop(v):
            out[w].discard(v)
        loops.discard(v)

    changed = True
    while changed:
        changed = False
        for v in sorted(out):
            if v not in out:
                continue
            if v in loops:
                taken += 1
                remove(v)
                changed = True
            elif not out[v] or not inn[v]:
                remove(v)
                changed = True
            elif len(inn[v]) == 1 or len(out[v]) == 1:
                if len(inn[v]) == 1:
                    (u,) = inn[v]
                    for w in out[v]:
                        if w == u:
                            loops.add(u)
                        else:
                            out[u].add(w)
                            inn[w].add(u)
                else:
                    (u,) = out[v]
                    for w in inn[v]:
                        if w == u:
                            loops.add(u)
                        else:
                            inn[u].add(w)
                            out[w].add(u)
                remove(v)
                changed = True
    if not out:
        return taken
    verts = sorted(out)
    index = {v: i for i, v in enumerate(verts)}
    R = Digraph(len(verts), [(index[u], index[w]) for u in verts for w in out[u]])
    return taken + _relaxation_bound(_MaskGraph(R), (1 << len(verts)) - 1)


# -- exact search -------------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


class _Solver:
    def __init__(self, D: Digraph, budget: int, target: int | None, max_len: int | None):
        self.D = D
        self.max_len = max_len
        self.mg = _MaskGraph(D)
        self.budget = budget
        self.target = target
        self.expansions = 0
        self.memo: dict[int, tuple[Cycle, ...]] = {}
        self.bounds: dict[int, int] = {}
        self.incumbent: tuple[Cycle, ...] = ()

    def bound(self, mask: int) -> int:
        b = self.bounds.get(mask)
        if b is None:
            if mask == 0:
                b = 0
            else:
                b = min(
                    _relaxation_bound(self.mg, mask),
                    _contraction_bound(self.mg, mask),
                )
            self.bounds[mask] = b
        return b

    def offer(self, packing: tuple[Cycle, ...]) -> None:
        if len(packing) > len(self.incumbent):
            self.incumbent = packing
            if self.target is not None and len(packing) >= self.target:
                raise _TargetReached

    def greedy(self, mask: int) -> tuple[Cycle, ...]:
        cycles = []
        mask = self.mg.cyclic_core(mask)
        while mask:
            v = (mask & -mask).bit_length() - 1
            # shortest chordless cycle through the lowest vertex, else drop it
            through = self.mg.chordless_through(v, mask, self.max_len)
            if through:
                best = min(through, key=lambda c: (len(c), c))
                cycles.append(best)
                mask &= ~_mask_of(best)
            else:
                mask &= ~(1 << v)
            mask = self.mg.cyclic_core(mask)
        return tuple(cycles)

    def solve(self, mask: int, prefix: tuple[Cycle, ...]) -> tuple[Cycle, ...]:
        mask = self.mg.cyclic_core(mask)
        if mask == 0:
            return ()
        hit = self.memo.get(mask)
        if hit is not None:
            self.offer(prefix + hit)
            return hit
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetExhausted
        ub = self.bound(mask)
        best: tuple[Cycle, ...] = ()
        v = (mask & -mask).bit_length() - 1
        for cyc in self.mg.chordless_through(v, mask, self.max_len):
            if len(best) >= ub:
                break
            child = self.mg.cyclic_core(mask & ~_mask_of(cyc))
            if 1 + self.bound(child) <= len(best):
                continue
            res = (cyc,) + self.solve(child, prefix + (cyc,))
            if len(res) > len(best):
                best = res
                self.offer(prefix + best)
        if len(best) < ub:
            child = self.mg.cyclic_core(mask & ~(1 << v))
            if self.bound(child) > len(best):
                res = self.solve(child, prefix)
                if len(res) > len(best):
                    best = res
                    self.offer(prefix + best)
        self.memo[mask] = best
        return best


def max_disjoint_cycles(
    D: Digraph,
    budget: int = DEFAULT_BUDGET,
    *,
    target: int | None = None,
    upper_hint: int | None = None,
    max_len: int | None = None,
) -> Packing:
    """Maximum set of pairwise vertex-disjoint cycles.

    Branch and bound on the lowest usable vertex: each chordless cycle through
    it (shortest first, then lexicographic) versus dropping the vertex.
    Restricting to chordless cycles is exact, since a chord always yields a
    cycle on a strict subset of the vertices. Search states are memoised by
    vertex set; ``budget`` caps the number of distinct states expanded.

    With ``target`` the search stops as soon as that many cycles are found.
    ``upper_hint`` is an externally certified upper bound folded into the
    reported one. ``max_len`` restricts the packing to cycles of at most that
    length; chordless restriction stays exact because a chord only shortens.
    """
    solver = _Solver(D, budget, target, max_len)
    full = (1 << D.vertex_count) - 1
    root = solver.mg.cyclic_core(full)
    g = girth(D).girth
    upper = 0 if g is None else _popcount(root) // g
    if root:
        upper = min(upper, solver.bound(root))
    if upper_hint is not None:
        upper = min(upper, upper_hint)
    optimal = False
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 8 * D.vertex_count + 200))
    try:
        solver.offer(solver.greedy(full))
        if len(solver.incumbent) < upper:
            solver.solve(full, ())
        optimal = True
    except (_BudgetExhausted, _TargetReached):
        pass
    finally:
        sys.setrecursionlimit(old_limit)
    cycles = tuple(sorted(solver.incumbent))
    if optimal:
        upper = len(cycles)
    verify_packing(D, cycles)
    return Packing(
        cycles=cycles,
        upper_bound=upper,
        optimal=len(cycles) == upper,
        expansions=solver.expansions,
    )


# -- counting bound --------------------------------------------------------


def counting_bound(
    D: Digraph, S: Iterable[int], q: int, mode: str = "certified",
    cap: int = DEFAULT_CYCLE_CAP,
) -> int:
    """``floor(|S| / q)``, once every cycle is shown to meet ``S`` at least ``q`` times.

    ``certified`` proves the premise from bipartite alternation across ``S``
    plus ``girth >= 2q``; ``enumerative`` checks every cycle directly.
    """
    S = set(S)
    if q < 1:
        raise ValueError("q must be >= 1")
    if not S <= set(D.vertices()):
        raise ValueError("S must be a set of vertices of D")
    if mode == "certified":
        crossing = [(u, v) for u, v in D.arcs if (u in S) == (v in S)]
        if crossing:
            raise PremiseUnverified(
                f"arc {crossing[0]} does not alternate across S"
            )
        g = girth(D).girth
        if g is not None and g < 2 * q:
            raise PremiseUnverified(f"girth {g} < 2q = {2 * q}")
    elif mode == "enumerative":
        listing = enumerate_cycles(D, cap=cap)
        if listing.truncated:
            raise PremiseUnverified(f"more than {cap} cycles; enumeration incomplete")
        for c in listing.cycles:
            if len(S.intersection(c)) < q:
                raise PremiseUnverified(f"cycle {c} meets S fewer than {q} times")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return len(S) // q


def packing_delta_under_arc_removal(
    D: Digraph, arc: tuple[int, int], budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Maximum packings ``(with arc, without arc)``.

    Raises :class:`PackingClaimViolation` if both are exact and differ by
    anything other than 0 or 1; with an exhausted budget only the bracket
    consistency of the two results is checked.
    """
    u, v = arc
    with_arc = max_disjoint_cycles(D, budget)
    without = max_disjoint_cycles(D.without_arc(u, v), budget)
    if with_arc.optimal and without.optimal:
        delta = with_arc.lower_bound - without.lower_bound
        if delta not in (0, 1):
            raise PackingClaimViolation(
                f"removing {arc} changed the maximum packing by {delta}"
            )
    elif (
        with_arc.lower_bound > without.upper_bound + 1
        or without.lower_bound > with_arc.upper_bound
    ):
        raise PackingClaimViolation(
            f"bounds for {arc} are inconsistent: "
            f"[{with_arc.lower_bound}, {with_arc.upper_bound}] vs "
            f"[{without.lower_bound}, {without.upper_bound}]"
        )
    return with_arc.lower_bound, without.lower_bound
