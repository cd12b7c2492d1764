"""Structural predicates a minimal digraph without 3 disjoint cycles must satisfy.

Each probe is a total function on any digraph. Only
:func:`counterexample_filter` interprets them as necessary conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph, girth, min_outdegree, strong_connectivity
from .packing import Cycle, _MaskGraph, _mask_of, canonical_cycle, chordless_cycles, enumerate_cycles

__all__ = [
    "ProbeReport",
    "Condition",
    "find_digon",
    "find_triangle",
    "find_undominated_arc",
    "inneighborhood_induced_cycle",
    "outneighborhood_cycle",
    "build_dprime",
    "dprime_with_status",
    "counterexample_filter",
    "check_report",
]

CHORDLESS_CAP = 12


def find_digon(D: Digraph) -> tuple[int, int] | None:
    for u, v in D.arcs:
        if u < v and D.has_arc(v, u):
            return (u, v)
    return None


def find_triangle(D: Digraph) -> Cycle | None:
    cycles = enumerate_cycles(D, max_len=3).cycles
    triangles = [c for c in cycles if len(c) == 3]
    return triangles[0] if triangles else None


def find_undominated_arc(D: Digraph) -> tuple[int, int] | None:
    """First arc ``uv`` (lexicographic) with no vertex dominating both ends."""
    ins = [set(x) for x in D.in_lists]
    for u, v in D.arcs:
        if not ins[u] & ins[v]:
            return (u, v)
    return None


def _shortest_cycle_in(D: Digraph, vertices) -> Cycle | None:
    sub, labels = D.induced(vertices)
    cert = girth(sub)
    if cert.acyclic:
        return None
    return canonical_cycle([labels[i] for i in cert.witness])


def inneighborhood_induced_cycle(D: Digraph, v: int) -> Cycle | None:
    """A shortest (hence induced) cycle among the in-neighbours of ``v``."""
    return _shortest_cycle_in(D, D.in_lists[v])


def outneighborhood_cycle(D: Digraph, v: int) -> Cycle | None:
    return _shortest_cycle_in(D, D.out_lists[v])


def dprime_with_status(
    D: Digraph, cap: int = CHORDLESS_CAP
) -> tuple[Digraph, tuple[int, ...]]:
    """Auxiliary digraph plus the vertices whose in-neighbourhood exceeded ``cap``.

    For those vertices only the members of one shortest cycle are detected,
    so the in-arcs kept there are a subset of the true ones.
    """
    arcs = []
    incomplete = []
    for v in D.vertices():
        nbrs = D.in_lists[v]
        if len(nbrs) > cap:
            incomplete.append(v)
            cyc = inneighborhood_induced_cycle(D, v)
            members = set(cyc) if cyc else set()
        else:
            members = set()
            for c in chordless_cycles(D, nbrs):
                members.update(c)
        arcs.extend((u, v) for u in sorted(members))
    return Digraph(D.vertex_count, arcs), tuple(incomplete)


def build_dprime(D: Digraph, cap: int = CHORDLESS_CAP) -> Digraph:
    """Spanning subdigraph of arcs ``uv`` where ``u`` lies on a chordless cycle
    of the subdigraph induced by the in-neighbours of ``v``."""
    return dprime_with_status(D, cap)[0]


def _claim5_forward(D: Digraph, Dp: Digraph, skip: set[int]) -> tuple[int, int] | None:
    # every kept arc uv has an out-neighbour of u among the D'-in-neighbours of v
    for u, v in Dp.arcs:
        if v in skip:
            continue
        if not set(D.out_lists[u]) & set(Dp.in_lists[v]):
            return (u, v)
    return None


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    witness: object = None

    def as_dict(self) -> dict:
        w = self.witness
        if isinstance(w, tuple):
            w = list(w)
        return {"name": self.name, "passed": self.passed, "witness": w}


@dataclass(frozen=True)
class ProbeReport:
    """Verdicts of every necessary condition, each with its witness.

    ``possible_minimal_counterexample`` is True only when every condition
    passes; such a digraph should then be handed to the packing solver.
    """

    conditions: tuple[Condition, ...]
    min_outdegree: int
    strong_connectivity: int | None
    dprime_in_degrees: tuple[int, int] | None
    dprime_out_degrees: tuple[int, int] | None
    dprime_incomplete: tuple[int, ...] = ()
    advisory: bool = False
    consistency: dict = field(default_factory=dict)

    @property
    def possible_minimal_counterexample(self) -> bool:
        return all(c.passed for c in self.conditions)

    @property
    def failed(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.passed)

    def condition(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        def pair(x):
            return None if x is None else {"min": x[0], "max": x[1]}

        return {
            "advisory": self.advisory,
            "min_outdegree": self.min_outdegree,
            "possible_minimal_counterexample": self.possible_minimal_counterexample,
            "strong_connectivity": self.strong_connectivity,
            "dprime": {
                "in_degree": pair(self.dprime_in_degrees),
                "out_degree": pair(self.dprime_out_degrees),
                "incomplete": list(self.dprime_incomplete),
            },
            "conditions": [c.as_dict() for c in self.conditions],
            "consistency": dict(self.consistency),
        }


def _four_cycle(D: Digraph) -> Cycle | None:
    fours = [c for c in enumerate_cycles(D, max_len=4).cycles if len(c) == 4]
    return fours[0] if fours else None


def counterexample_filter(D: Digraph) -> ProbeReport:
    """Evaluate the necessary conditions for a minimal digraph with minimum
    out-degree 5 and no 3 disjoint cycles.

    Inputs with minimum out-degree below 5 are still evaluated, with
    ``advisory`` set.
    """
    conds = []
    digon = find_digon(D)
    conds.append(Condition("no_digon", digon is None, digon))
    tri = find_triangle(D)
    conds.append(Condition("no_triangle", tri is None, tri))
    arc = find_undominated_arc(D)
    conds.append(Condition("every_arc_dominated", arc is None, arc))

    acyclic_in = next(
        (v for v in D.vertices() if inneighborhood_induced_cycle(D, v) is None), None
    )
    conds.append(
        Condition("every_inneighborhood_cyclic", acyclic_in is None, acyclic_in)
    )
    cyclic_out = None
    for v in D.vertices():
        c = outneighborhood_cycle(D, v)
        if c is not None:
            cyclic_out = (v, c)
            break
    conds.append(
        Condition(
            "every_outneighborhood_acyclic",
            cyclic_out is None,
            None if cyclic_out is None else {"vertex": cyclic_out[0], "cycle": list(cyclic_out[1])},
        )
    )

    s = strong_connectivity(D) if D.vertex_count >= 2 else None
    conds.append(Condition("strong_connectivity_at_least_3", s is not None and s >= 3, s))

    Dp, incomplete = dprime_with_status(D)
    din = [Dp.in_degree(v) for v in Dp.vertices()]
    dout = [Dp.out_degree(v) for v in Dp.vertices()]
    in_rng = (min(din), max(din)) if din else None
    out_rng = (min(dout), max(dout)) if dout else None
    regular = bool(din) and in_rng == (4, 4) and out_rng == (4, 4)
    irregular_vertex = next(
        (v for v in Dp.vertices() if Dp.in_degree(v) != 4 or Dp.out_degree(v) != 4), None
    )
    conds.append(Condition("dprime_4_regular", regular and not incomplete, irregular_vertex))
    four = _four_cycle(Dp)
    conds.append(Condition("dprime_no_4cycle", four is None, four))

    violation = _claim5_forward(D, Dp, set(incomplete))
    if violation is not None:
        raise AssertionError(f"auxiliary digraph inconsistent at arc {violation}")

    return ProbeReport(
        conditions=tuple(conds),
        min_outdegree=min_outdegree(D),
        strong_connectivity=s,
        dprime_in_degrees=in_rng,
        dprime_out_degrees=out_rng,
        dprime_incomplete=incomplete,
        advisory=min_outdegree(D) < 5,
        consistency={"claim5_forward": True},
    )


def check_report(D: Digraph, report: ProbeReport) -> None:
    """Re-verify every failed condition's witness against ``D``.

    Raises ``AssertionError`` on the first witness that does not hold up.
    """
    for c in report.failed:
        w = c.witness
        if c.name == "no_digon":
            u, v = w
            assert D.has_arc(u, v) and D.has_arc(v, u), c
        elif c.name == "no_triangle":
            assert len(w) == 3 and D.is_cycle(w), c
        elif c.name == "every_arc_dominated":
            u, v = w
            assert D.has_arc(u, v), c
            assert not any(
                D.has_arc(x, u) and D.has_arc(x, v) for x in D.vertices()
            ), c
        elif c.name == "every_inneighborhood_cyclic":
            sub, _ = D.induced(D.in_lists[w])
            assert not enumerate_cycles(sub, cap=1).cycles, c
        elif c.name == "every_outneighborhood_acyclic":
            v, cyc = w["vertex"], tuple(w["cycle"])
            assert D.is_cycle(cyc) and set(cyc) <= set(D.out_lists[v]), c
        elif c.name == "strong_connectivity_at_least_3":
            assert w is None or w == strong_connectivity(D), c
            assert w is None or w < 3, c
        elif c.name == "dprime_4_regular":
            Dp, incomplete = dprime_with_status(D)
            if w is not None:
                assert Dp.in_degree(w) != 4 or Dp.out_degree(w) != 4, c
            else:
                assert incomplete, c
        elif c.name == "dprime_no_4cycle":
            Dp = build_dprime(D)
            assert len(w) == 4 and Dp.is_cycle(w), c
        else:  # pragma: no cover
            raise AssertionError(f"unknown condition {c.name}")
