"""Instance-by-instance checks of the cycle-packing and long-path conjectures.

Every check returns a :class:`VerificationReport`; its JSON form is
deterministic (sorted keys, fixed indentation) so identical runs produce
identical bytes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .digraph import Digraph, girth, min_outdegree, write_edge_list
from .generators import (
    bipartite_tournament_sets,
    ceil_ratio_k,
    even_params,
    gen_bipartite_tournament,
    gen_even_girth,
    gen_odd_girth,
    gen_random_min_outdegree,
    layer_sets,
    odd_params,
)
from .packing import (
    DEFAULT_BUDGET,
    counting_bound,
    enumerate_cycles,
    max_disjoint_cycles,
    packing_delta_under_arc_removal,
)
from .paths import bipartite_path_bound, longest_path_exact
from .probes import counterexample_filter

__all__ = [
    "SCHEMA_VERSION",
    "Claim",
    "VerificationReport",
    "REFUTED",
    "CONSISTENT",
    "INCONCLUSIVE",
    "exact_packing_allowed",
    "verify_theorem2_instance",
    "verify_corollary2_instance",
    "verify_conjecture3_instance",
    "verify_bt",
    "random_search",
]

SCHEMA_VERSION = 1
REFUTED = "refuted"
CONSISTENT = "consistent"
INCONCLUSIVE = "inconclusive"

EXACT_VERTEX_LIMIT = 40
EXACT_CYCLE_LIMIT = 5000


@dataclass
class Claim:
    conjecture: str
    predicted: object
    measured: object
    verdict: str
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "predicted": self.predicted,
            "measured": self.measured,
            "verdict": self.verdict,
            "note": self.note,
        }


@dataclass
class VerificationReport:
    instance: str
    params: dict
    measured: dict = field(default_factory=dict)
    claims: list[Claim] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    refutation_candidate: bool = False

    def claim(self, conjecture: str) -> Claim:
        for c in self.claims:
            if c.conjecture == conjecture:
                return c
        raise KeyError(conjecture)

    def verdict(self, conjecture: str) -> str:
        return self.claim(conjecture).verdict

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "instance": self.instance,
            "params": self.params,
            "measured": self.measured,
            "claims": [c.as_dict() for c in self.claims],
            "witnesses": self.witnesses,
            "refutation_candidate": self.refutation_candidate,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            instance=data["instance"],
            params=data["params"],
            measured=data["measured"],
            claims=[Claim(**c) for c in data["claims"]],
            witnesses=data["witnesses"],
            refutation_candidate=data["refutation_candidate"],
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def exact_packing_allowed(D: Digraph) -> bool:
    """Size gate for exact packing: few vertices or few cycles."""
    if D.vertex_count <= EXACT_VERTEX_LIMIT:
        return True
    return not enumerate_cycles(D, cap=EXACT_CYCLE_LIMIT).truncated


def _girth_value(D: Digraph) -> dict:
    cert = girth(D)
    return cert.as_dict()


def _packing_measure(D: Digraph, certified_upper: int | None, budget: int) -> dict:
    """Packing bracket: exact solver when the size gate allows, else the certificate."""
    if exact_packing_allowed(D):
        p = max_disjoint_cycles(D, budget, upper_hint=certified_upper)
        return {
            "lower": p.lower_bound,
            "upper": p.upper_bound,
            "optimal": p.optimal,
            "method": "exact" if p.optimal else "search",
            "certified_upper": certified_upper,
            "cycles": [list(c) for c in p.cycles],
        }
    return {
        "lower": None,
        "upper": certified_upper,
        "optimal": False,
        "method": "counting",
        "certified_upper": certified_upper,
        "cycles": [],
    }


def _decided_upper(pack: dict) -> tuple[int | None, bool]:
    """Smallest upper bound that counts as decisive, and whether it is exact."""
    if pack["optimal"]:
        return pack["upper"], True
    if pack["certified_upper"] is not None:
        return pack["certified_upper"], True
    return pack["upper"], False


def _conjecture2_claim(k: int, g: int, delta: int, girth_ok: bool, pack: dict) -> Claim:
    threshold = ceil_ratio_k(g, k)
    upper, decisive = _decided_upper(pack)
    if delta < threshold or not girth_ok:
        return Claim(
            "conjecture2", f">= {k} disjoint cycles", upper, INCONCLUSIVE,
            f"hypothesis not met: girth {g} and min out-degree {delta} vs {threshold}",
        )
    if upper is not None and upper < k and decisive:
        return Claim(
            "conjecture2", f">= {k} disjoint cycles", upper, REFUTED,
            f"girth {g}, min out-degree {delta} >= ceil(g*k/(g-1)) = {threshold}",
        )
    if pack["lower"] is not None and pack["lower"] >= k:
        return Claim("conjecture2", f">= {k} disjoint cycles", pack["lower"], CONSISTENT)
    return Claim("conjecture2", f">= {k} disjoint cycles", upper, INCONCLUSIVE)


def verify_theorem2_instance(
    g: int, k: int, t: int = 0, c: int = 0, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Build the layered family member and check girth, degree and packing bound."""
    if g % 2 == 0:
        return _verify_even(g, k, t, c, budget)
    if c:
        raise ValueError("the shift constant is only implemented for even girth")
    return _verify_odd(g, k, t, budget)


def _verify_even(g, k, t, c, budget):
    p = even_params(g, k, c, t)
    D = gen_even_girth(g, k, c)
    X, _ = layer_sets(p)
    gv = _girth_value(D)
    delta = min_outdegree(D)
    certified = counting_bound(D, X, g // 2, "certified")
    pack = _packing_measure(D, certified, budget)
    report = VerificationReport(
        instance=f"even-girth(g={g},k={k},c={c})",
        params=p.as_dict(),
        measured={
            "vertex_count": D.vertex_count,
            "arc_count": D.arc_count,
            "girth": gv["girth"],
            "min_outdegree": delta,
            "packing": {k2: v for k2, v in pack.items() if k2 != "cycles"},
        },
        witnesses={"girth_cycle": gv["witness"], "packing": pack["cycles"]},
    )
    girth_ok = gv["girth"] == g
    report.claims.append(
        Claim("theorem2.girth", g, gv["girth"], CONSISTENT if girth_ok else REFUTED)
    )
    report.claims.append(
        Claim(
            "theorem2.min_outdegree", p.h, delta,
            CONSISTENT if delta >= ceil_ratio_k(g, k) + c else REFUTED,
        )
    )
    upper, _ = _decided_upper(pack)
    applies = k >= (t + 1) * (g - 1)
    report.claims.append(
        Claim(
            "theorem2.packing",
            f"<= {k - t}",
            upper,
            (CONSISTENT if upper <= k - t else REFUTED) if applies else INCONCLUSIVE,
            f"k >= (t+1)(g-1) = {(t + 1) * (g - 1)}: {applies}",
        )
    )
    if c:
        bound = (g - 1) * (g * c + g - 2 * c) / g
        applies = k > bound
        report.claims.append(
            Claim(
                "corollary1",
                f"<= {k - 1}",
                upper,
                (CONSISTENT if upper <= k - 1 else REFUTED) if applies else INCONCLUSIVE,
                f"k > (g-1)(gc+g-2c)/g = {bound:g}: {applies}",
            )
        )
    report.claims.append(_conjecture2_claim(k, g, delta, girth_ok, pack))
    return report


def _verify_odd(g, k, t, budget):
    p = odd_params(g, k, t)
    D1 = gen_odd_girth(g, k, "with_chord")
    D2 = gen_odd_girth(g, k, "without_chord")
    X, _ = layer_sets(p)
    g1, g2 = _girth_value(D1), _girth_value(D2)
    chord = (p.r * p.h, 0)
    certified2 = counting_bound(D2, X, (g + 1) // 2, "certified")
    certified1 = certified2 + 1
    pack1 = _packing_measure(D1, certified1, budget)
    pack2 = _packing_measure(D2, certified2, budget)
    delta = min_outdegree(D1)
    measured = {
        "vertex_count": D1.vertex_count,
        "girth_with_chord": g1["girth"],
        "girth_without_chord": g2["girth"],
        "min_outdegree": delta,
        "packing_with_chord": {a: b for a, b in pack1.items() if a != "cycles"},
        "packing_without_chord": {a: b for a, b in pack2.items() if a != "cycles"},
        "arc_difference": [list(a) for a in sorted(set(D1.arcs) - set(D2.arcs))],
    }
    report = VerificationReport(
        instance=f"odd-girth(g={g},k={k})",
        params=p.as_dict(),
        measured=measured,
        witnesses={
            "girth_cycle_with_chord": g1["witness"],
            "girth_cycle_without_chord": g2["witness"],
            "packing_with_chord": pack1["cycles"],
            "packing_without_chord": pack2["cycles"],
        },
    )
    report.claims.append(
        Claim("theorem2.girth", g, g1["girth"], CONSISTENT if g1["girth"] == g else REFUTED)
    )
    report.claims.append(
        Claim(
            "theorem2.girth_without_chord", g + 1, g2["girth"],
            CONSISTENT if g2["girth"] == g + 1 else REFUTED,
        )
    )
    if pack1["optimal"] and pack2["optimal"]:
        diff = pack1["upper"] - pack2["upper"]
        packing_delta_under_arc_removal(D1, chord, budget)
        report.claims.append(
            Claim("theorem2.chord_delta", "in {0, 1}", diff,
                  CONSISTENT if diff in (0, 1) else REFUTED)
        )
    else:
        report.claims.append(
            Claim("theorem2.chord_delta", "in {0, 1}", None, INCONCLUSIVE,
                  "exact packings out of reach; counting chain only")
        )
    applies = k >= (t + 2) * (g + 1)
    report.claims.append(
        Claim(
            "theorem2.packing_without_chord", f"<= {k - t - 1}", certified2,
            (CONSISTENT if certified2 <= k - t - 1 else REFUTED) if applies else INCONCLUSIVE,
            f"k >= (t+2)(g+1) = {(t + 2) * (g + 1)}: {applies}",
        )
    )
    upper1, _ = _decided_upper(pack1)
    report.claims.append(
        Claim(
            "theorem2.packing",
            f"<= {k - t}",
            upper1,
            (CONSISTENT if upper1 <= k - t else REFUTED) if applies else INCONCLUSIVE,
            f"k >= (t+2)(g+1) = {(t + 2) * (g + 1)}: {applies}",
        )
    )
    report.claims.append(_conjecture2_claim(k, g, delta, g1["girth"] == g, pack1))
    return report


def verify_corollary2_instance(k: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Bipartite tournament with ``h = 2k - 2``: girth 4, no ``k`` disjoint cycles."""
    if k < 2:
        raise ValueError("k must be >= 2")
    h = 2 * k - 2
    D = gen_bipartite_tournament(h)
    X, Y = bipartite_tournament_sets(h)
    gv = _girth_value(D)
    delta = min_outdegree(D)
    certified = counting_bound(D, Y, 2, "certified")
    pack = _packing_measure(D, certified, budget)
    oriented_ok = all(D.has_arc(x, y) != D.has_arc(y, x) for x in X for y in Y)
    report = VerificationReport(
        instance=f"bipartite-tournament(h={h})",
        params={"k": k, "h": h},
        measured={
            "vertex_count": D.vertex_count,
            "girth": gv["girth"],
            "min_outdegree": delta,
            "complete_bipartite_orientation": oriented_ok,
            "packing": {a: b for a, b in pack.items() if a != "cycles"},
        },
        witnesses={"girth_cycle": gv["witness"], "packing": pack["cycles"]},
    )
    upper, _ = _decided_upper(pack)
    report.claims.append(
        Claim("corollary2.girth", 4, gv["girth"], CONSISTENT if gv["girth"] == 4 else REFUTED)
    )
    report.claims.append(
        Claim("corollary2.min_outdegree", h, delta, CONSISTENT if delta >= h else REFUTED)
    )
    report.claims.append(
        Claim("corollary2.packing", f"<= {k - 1}", upper,
              CONSISTENT if upper <= k - 1 else REFUTED)
    )
    report.claims.append(
        Claim(
            "remark1.sharpness",
            f"min out-degree 2k-2 = {h} with < {k} disjoint cycles",
            {"min_outdegree": delta, "packing_upper": upper},
            CONSISTENT if delta == h and upper < k and oriented_ok else INCONCLUSIVE,
        )
    )
    report.claims.append(_conjecture2_claim(k, 4, delta, gv["girth"] == 4, pack))
    return report


def verify_conjecture3_instance(
    g: int, k: int, budget: int = 50_000_000
) -> VerificationReport:
    """Longest path in the even-girth family against both path-length claims.

    ``conjecture3`` compares with the conjectured ``h(g-1)``;
    ``theorem4.closed_form_bound`` with the published ``2n - 1``.
    """
    p = even_params(g, k)
    D = gen_even_girth(g, k)
    digon_free = not any(D.has_arc(v, u) for u, v in D.arcs)
    alt = bipartite_path_bound(D)
    cert = longest_path_exact(D, budget)
    gv = _girth_value(D)
    conj = p.h * (g - 1)
    closed_form = 2 * p.n - 1
    report = VerificationReport(
        instance=f"even-girth(g={g},k={k},c=0)",
        params=p.as_dict(),
        measured={
            "vertex_count": D.vertex_count,
            "oriented": digon_free,
            "girth": gv["girth"],
            "min_outdegree": min_outdegree(D),
            "longest_path": cert.length,
            "longest_path_exact": cert.exact,
            "longest_path_upper": cert.upper_bound,
            "alternation_bound": alt,
        },
        witnesses={"longest_path": list(cert.witness)},
    )
    upper = cert.length if cert.exact else min(cert.upper_bound, alt if alt is not None else cert.upper_bound)
    if not digon_free or gv["girth"] != g:
        verdict = INCONCLUSIVE
    elif upper < conj:
        verdict = REFUTED
    elif cert.length >= conj:
        verdict = CONSISTENT
    else:
        verdict = INCONCLUSIVE
    report.claims.append(
        Claim(
            "conjecture3", f">= {conj}",
            cert.length if cert.exact else {"lower": cert.length, "upper": upper},
            verdict, f"h(g-1) = {p.h}*{g - 1}",
        )
    )
    if cert.length > closed_form:
        pverdict = REFUTED
    elif upper <= closed_form:
        pverdict = CONSISTENT
    else:
        pverdict = INCONCLUSIVE
    report.claims.append(
        Claim(
            "theorem4.closed_form_bound", f"<= {closed_form}",
            cert.length if cert.exact else {"lower": cert.length, "upper": upper},
            pverdict, f"2n - 1 with n = {p.n}",
        )
    )
    return report


def verify_bt(
    D: Digraph, k: int, budget: int = DEFAULT_BUDGET, instance: str = "input"
) -> VerificationReport:
    """Check ``k`` disjoint cycles exist when min out-degree is at least ``2k - 1``."""
    delta = min_outdegree(D)
    need = 2 * k - 1
    report = VerificationReport(
        instance=instance,
        params={"k": k, "vertex_count": D.vertex_count, "arc_count": D.arc_count},
    )
    if delta < need:
        p = max_disjoint_cycles(D, budget)
        report.measured = {"min_outdegree": delta, "packing": p.as_dict()}
        note = f"hypothesis not met: min out-degree {delta} < 2k-1 = {need}"
        if p.optimal and p.lower_bound < k:
            note += f"; witnesses f({k}) >= {delta + 1}"
        report.claims.append(
            Claim("conjecture1", f">= {k} disjoint cycles", p.lower_bound, INCONCLUSIVE, note)
        )
        report.witnesses = {"packing": [list(c) for c in p.cycles]}
        return report
    p = max_disjoint_cycles(D, budget, target=k)
    report.measured = {"min_outdegree": delta, "packing": p.as_dict()}
    report.witnesses = {"packing": [list(c) for c in p.cycles]}
    if p.lower_bound >= k:
        report.claims.append(
            Claim("conjecture1", f">= {k} disjoint cycles", p.lower_bound, CONSISTENT)
        )
    elif p.optimal:
        note = "REFUTATION CANDIDATE"
        if k <= 3:
            note += "; the statement is a theorem for k <= 3, so this indicates a solver defect"
        report.claims.append(
            Claim("conjecture1", f">= {k} disjoint cycles", p.upper_bound, REFUTED, note)
        )
        report.refutation_candidate = True
        report.witnesses["arcs"] = [list(a) for a in D.arcs]
    else:
        report.claims.append(
            Claim("conjecture1", f">= {k} disjoint cycles",
                  {"lower": p.lower_bound, "upper": p.upper_bound}, INCONCLUSIVE,
                  "search budget exhausted")
        )
    return report


def random_search(
    k: int,
    m: int,
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    out_dir: str | Path | None = None,
    delta: int | None = None,
) -> dict:
    """Seeded sweep over random digraphs of min out-degree ``2k - 1``.

    Each sample runs through the structural filter, then :func:`verify_bt`.
    Refutation candidates are written to ``out_dir`` as edge list plus report.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    delta = 2 * k - 1 if delta is None else delta
    rng = random.Random(seed)
    tally = {REFUTED: 0, CONSISTENT: 0, INCONCLUSIVE: 0}
    flagged = 0
    candidates = []
    for i in range(trials):
        sub_seed = rng.randrange(2**32)
        D = gen_random_min_outdegree(m, delta, sub_seed)
        probe = counterexample_filter(D)
        if probe.possible_minimal_counterexample:
            flagged += 1
        rep = verify_bt(D, k, budget, instance=f"random(m={m},delta={delta},seed={sub_seed})")
        tally[rep.verdict("conjecture1")] += 1
        if rep.refutation_candidate:
            candidates.append(rep.instance)
            if out_dir is not None:
                out = Path(out_dir)
                out.mkdir(parents=True, exist_ok=True)
                write_edge_list(D, out / f"candidate_{i:04d}.txt")
                (out / f"candidate_{i:04d}.json").write_text(rep.to_json())
    return {
        "schema": SCHEMA_VERSION,
        "params": {"k": k, "m": m, "delta": delta, "trials": trials, "seed": seed},
        "verdicts": tally,
        "filter_flagged": flagged,
        "candidates": candidates,
    }
