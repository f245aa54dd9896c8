"""Exhaustive antimagic search for tiny graphs.

Used as ground truth for the verifier and the constructive labelers; keep
|E| around 12 or below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Any, Optional

from .graph import EdgeLabeling, Graph, is_antimagic_labeling


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    witness: Optional[EdgeLabeling]
    explored: int
    inconclusive: bool = False

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"exists": self.exists, "explored": self.explored}
        if self.witness is not None:
            out["witness"] = list(self.witness.labels)
        if self.inconclusive:
            out["inconclusive"] = True
        return out


class _BudgetExhausted(Exception):
    pass


def brute_force_antimagic(g: Graph, budget: Optional[int] = None) -> OracleResult:
    """Backtracking search over labelings, edges filled in position order.

    ``explored`` counts label placements.  A branch is cut as soon as a
    vertex whose incident edges are all labeled repeats a finished weight.
    When ``budget`` placements are spent without an answer the result is
    marked inconclusive (``exists`` is then False but meaningless).
    """
    q = g.edge_count
    inc = g.incident_edges()
    # vertices finished by placing edge pos
    closes: list[list[int]] = [[] for _ in range(q)]
    done: set[int] = set()
    for v, edges in enumerate(inc):
        if edges:
            closes[max(edges)].append(v)
        elif 0 in done:
            return OracleResult(False, None, 0)
        else:
            done.add(0)

    weight = [0] * g.vertex_count
    used = [False] * (q + 1)
    labels = [0] * q
    explored = 0

    def place(pos: int) -> bool:
        nonlocal explored
        if pos == q:
            return True
        a, b = g.edges[pos]
        for lab in range(1, q + 1):
            if used[lab]:
                continue
            if budget is not None and explored >= budget:
                raise _BudgetExhausted
            explored += 1
            weight[a] += lab
            weight[b] += lab
            finished = [weight[v] for v in closes[pos]]
            ok = len(set(finished)) == len(finished) and not done.intersection(finished)
            if ok:
                used[lab] = True
                labels[pos] = lab
                done.update(finished)
                if place(pos + 1):
                    return True
                done.difference_update(finished)
                used[lab] = False
            weight[a] -= lab
            weight[b] -= lab
        return False

    try:
        found = place(0)
    except _BudgetExhausted:
        return OracleResult(False, None, explored, inconclusive=True)
    return OracleResult(found, EdgeLabeling(tuple(labels)) if found else None, explored)


def enumerate_antimagic(g: Graph) -> OracleResult:
    """Unpruned search: try every permutation of 1..q in lexicographic order."""
    q = g.edge_count
    explored = 0
    for perm in permutations(range(1, q + 1)):
        explored += 1
        if naive_is_antimagic(g, perm):
            return OracleResult(True, EdgeLabeling(perm), explored)
    return OracleResult(False, None, explored)


def naive_is_antimagic(g: Graph, labels) -> bool:
    """Distinctness by per-vertex incidence scan and a pairwise loop."""
    labels = list(labels)
    q = len(g.edges)
    if len(labels) != q or sorted(labels) != list(range(1, q + 1)):
        raise ValueError("labels are not a bijection onto 1..q")
    sums = []
    for v in range(g.vertex_count):
        s = 0
        for i in range(q):
            if v in g.edges[i]:
                s += labels[i]
        sums.append(s)
    for i in range(len(sums)):
        for j in range(i + 1, len(sums)):
            if sums[i] == sums[j]:
                return False
    return True


def cross_check(g: Graph, labeling: EdgeLabeling) -> bool:
    """Whether the naive path agrees with :func:`is_antimagic_labeling`."""
    return naive_is_antimagic(g, labeling.labels) == is_antimagic_labeling(g, labeling)
