"""Constructive antimagic labelings for barbells, bistar coronas and cycle coronas.

Each labeler builds its graph with the matching generator from
:mod:`antimagic.families`, assigns labels window by window, then runs the
verifier and the proof's ordering chain before returning.  A labeling that
fails either check raises :class:`VerificationError`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .families import FamilySpec, check_regular_connected, edge_corona, make_barbell, make_bistar, make_cycle_zigzag
from .graph import EdgeLabeling, Graph, PartialLabeling, WeightReport, partial_vertex_weights, vertex_weights

log = logging.getLogger(__name__)


class VerificationError(RuntimeError):
    """A constructed labeling failed distinctness or its ordering chain."""


@dataclass(frozen=True)
class LabelingCertificate:
    graph: Graph
    labeling: EdgeLabeling
    report: WeightReport
    ordering_chain: tuple[tuple[int, ...], ...]
    algorithm: str
    group_names: tuple[str, ...] = ()
    notes: dict[str, Any] = field(default_factory=dict)

    def chain_holds(self) -> bool:
        return chain_holds(self.report.weights, self.ordering_chain)

    def weight_of(self, name: str) -> int:
        return self.report.weights[self.graph.index(name)]

    def to_json(self) -> dict[str, Any]:
        out = {
            "algorithm": self.algorithm,
            "labeling": list(self.labeling.labels),
            "weights": list(self.report.weights),
            "ordering_chain": [list(group) for group in self.ordering_chain],
            "verified": self.report.distinct and self.chain_holds(),
            "graph": self.graph.to_json(),
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def chain_holds(weights: Sequence[int], chain: Sequence[Sequence[int]]) -> bool:
    """True iff weights strictly increase along the concatenated groups."""
    flat = [weights[v] for group in chain for v in group]
    return all(a < b for a, b in zip(flat, flat[1:]))


def _certify(
    g: Graph,
    labels: Sequence[Optional[int]],
    chain: Sequence[Sequence[int]],
    algorithm: str,
    group_names: Sequence[str],
    notes: Optional[dict[str, Any]] = None,
) -> LabelingCertificate:
    labeling = PartialLabeling(tuple(labels)).complete()
    report = vertex_weights(g, labeling)
    chain_t = tuple(tuple(group) for group in chain)
    if not report.distinct:
        raise VerificationError(f"{algorithm}: vertex sums are not distinct")
    if not chain_holds(report.weights, chain_t):
        raise VerificationError(f"{algorithm}: ordering chain does not hold")
    return LabelingCertificate(g, labeling, report, chain_t, algorithm, tuple(group_names), notes or {})


def _rank(vertices: Sequence[int], partial: Sequence[int]) -> list[int]:
    # stable: ties go to the lower vertex index
    return sorted(vertices, key=lambda v: (partial[v], v))


def label_cycle_zigzag(n: int, offset: int = 0) -> EdgeLabeling:
    """Labels offset+1..offset+n in zigzag edge order on ``make_cycle_zigzag(n)``.

    With a nonzero offset the result is a shifted labeling, not a bijection
    onto 1..n; sum it with :func:`partial_vertex_weights`.
    """
    make_cycle_zigzag(n)  # parameter check
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    return EdgeLabeling(tuple(range(offset + 1, offset + n + 1)))


def label_cycle(n: int) -> LabelingCertificate:
    g = make_cycle_zigzag(n)
    return _certify(g, label_cycle_zigzag(n).labels, [range(n)], "cycle-zigzag", ["v"])


def barbell_clique_partial(n: int) -> PartialLabeling:
    """Barbell state after both cliques minus the bridge vertices are labeled."""
    g = make_barbell(n)
    labels: list[Optional[int]] = [None] * g.edge_count
    u, v = n - 1, 2 * n - 1
    nxt = 1
    for pos, (a, b) in enumerate(g.edges):
        if u in (a, b) or v in (a, b):
            continue
        labels[pos] = nxt
        nxt += 1
    return PartialLabeling(tuple(labels))


def label_barbell(n: int) -> LabelingCertificate:
    g = make_barbell(n)
    u, v = n - 1, 2 * n - 1
    labels = list(barbell_clique_partial(n).labels)
    partial = partial_vertex_weights(g, PartialLabeling(tuple(labels)))
    pos_of = {frozenset(e): pos for pos, e in enumerate(g.edges)}

    base = (n - 1) * (n - 2)
    a_order = _rank(range(n - 1), partial)
    b_order = _rank(range(n, 2 * n - 1), partial)
    for i, a in enumerate(a_order, start=1):
        labels[pos_of[frozenset((u, a))]] = base + i
    for j, b in enumerate(b_order, start=1):
        labels[pos_of[frozenset((v, b))]] = base + (n - 1) + j
    labels[pos_of[frozenset((u, v))]] = n * (n - 1) + 1

    return _certify(g, labels, [a_order, b_order, [u], [v]], "barbell", ["a", "b", "u", "v"])


def label_bistar_corona(x: int, n: int, h: Graph) -> LabelingCertificate:
    """Antimagic labeling of B_{x,n} ⋄ H for connected k-regular H.

    For x > n the instance is built as B_{n,x} ⋄ H, which is isomorphic;
    the swap is recorded in ``notes``.
    """
    if x < 2 or n < 2:
        raise ValueError(f"bistar corona needs x, n >= 2, got ({x}, {n})")
    k, m = check_regular_connected(h)
    notes: dict[str, Any] = {"k": k, "m": m}
    if x > n:
        notes.update(
            swapped=True,
            requested=[x, n],
            built=[n, x],
            apex_correspondence={"u": "v", "v": "u"},
        )
        x, n = n, x

    base = make_bistar(x, n)
    g, cmap = edge_corona(base, h)
    z = g.edge_count
    half = h.edge_count  # mk/2
    u, v = x, x + 1
    labels: list[Optional[int]] = [None] * z

    for i, rng in enumerate(cmap.copy_edge_ranges):
        for t, pos in enumerate(rng):
            labels[pos] = i * half + t + 1
    top = (x + n + 1) * half
    # leaf fans: every pendant base edge is (apex, leaf), so the leaf fan is second
    for i in range(x + n):
        for t, pos in enumerate(cmap.second_fan(i)):
            labels[pos] = top + i * m + t + 1
    for t, pos in enumerate(cmap.first_fan(x + n)):
        labels[pos] = top + (x + n) * m + t + 1
    h_top = top + (x + n + 1) * m
    labels[cmap.base_edge_range[x + n]] = z

    partial = partial_vertex_weights(g, PartialLabeling(tuple(labels)))
    others = [w for w in range(g.vertex_count) if w not in (u, v)]
    order = _rank(others, partial)
    unlabeled = {}
    for w, inc in enumerate(g.incident_edges()):
        if w in (u, v):
            continue
        free = [pos for pos in inc if labels[pos] is None]
        if len(free) != 1:
            raise VerificationError(f"vertex {g.name(w)} has {len(free)} unlabeled edges")
        unlabeled[w] = free[0]
    for i, w in enumerate(order, start=1):
        labels[unlabeled[w]] = h_top + i

    def group(w: int) -> int:
        if w < base.vertex_count:
            return 3  # leaf
        copy = (w - base.vertex_count) // m
        if copy < x:
            return 0
        return 1 if copy < x + n else 2

    groups = [group(w) for w in order]
    stacked = all(a <= b for a, b in zip(groups, groups[1:]))
    notes["stacking_held"] = stacked
    if not stacked:
        log.info("bistar corona (%d, %d, k=%d, m=%d): partial sums do not stack by group", x, n, k, m)
    return _certify(g, labels, [order, [u], [v]], "bistar-corona", ["a", "u", "v"], notes)


def label_cycle_corona(m: int, n: int) -> LabelingCertificate:
    base = make_cycle_zigzag(m)
    g, cmap = edge_corona(base, make_cycle_zigzag(n), "u")
    mn = m * n
    labels: list[Optional[int]] = [None] * g.edge_count

    for j, rng in enumerate(cmap.copy_edge_ranges):
        for pos, lab in zip(rng, label_cycle_zigzag(n, j * n).labels):
            labels[pos] = lab
    for pos, lab in zip(cmap.base_edge_range, label_cycle_zigzag(m, 3 * mn).labels):
        labels[pos] = lab

    # v_t touches two copies; its fan into the lower copy takes window 2t,
    # the fan into the higher copy window 2t+1 (t 0-based)
    touching: list[list[int]] = [[] for _ in range(m)]
    for j, (a, b) in enumerate(base.edges):
        touching[a].append(j)
        touching[b].append(j)
    for t in range(m):
        for w_idx, j in enumerate(sorted(touching[t]), start=2 * t):
            fan = cmap.first_fan(j) if base.edges[j][0] == t else cmap.second_fan(j)
            for i, pos in enumerate(fan, start=1):
                labels[pos] = mn + w_idx * n + i

    chain = [list(c) for c in cmap.base_edge_to_copy] + [list(range(m))]
    names = [f"copy {j}" for j in range(1, m + 1)] + ["base"]
    return _certify(g, labels, chain, "cycle-corona", names)


LABELABLE = ("barbell", "bistar_corona", "cycle_corona", "cycle")


def label_spec(spec: FamilySpec) -> LabelingCertificate:
    """Run the labeler matching ``spec.kind``."""
    p = spec.params
    if spec.kind == "barbell":
        return label_barbell(p["n"])
    if spec.kind == "bistar_corona":
        return label_bistar_corona(p["x"], p["n"], spec.h)  # type: ignore[arg-type]
    if spec.kind == "cycle_corona":
        return label_cycle_corona(p["m"], p["n"])
    if spec.kind == "cycle":
        return label_cycle(p["n"])
    raise ValueError(f"no labeler for family {spec.kind!r}")
