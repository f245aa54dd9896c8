"""Graph model, edge labelings and vertex-sum computation.

Edges are positional: a labeling is a sequence whose i-th entry is the label
of edge i.  All arithmetic is on Python ints, so weights are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs (loops, parallel edges, bad indices)."""


class LabelingError(ValueError):
    """Raised when a labeling does not fit its graph."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    vertex_names: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.vertex_names is not None:
            object.__setattr__(self, "vertex_names", tuple(str(s) for s in self.vertex_names))
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        seen = set()
        for pos, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"edge {pos} is a self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {pos} ({u}, {v}) has an endpoint out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"edge {pos} ({u}, {v}) is parallel to an earlier edge")
            seen.add(key)
        if self.vertex_names is not None and len(self.vertex_names) != self.vertex_count:
            raise GraphError("vertex_names length differs from vertex_count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def name(self, v: int) -> str:
        if self.vertex_names is None:
            return str(v)
        return self.vertex_names[v]

    def index(self, name: str) -> int:
        """Vertex index for a display name."""
        if self.vertex_names is None:
            return int(name)
        return self.vertex_names.index(name)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incident_edges(self) -> list[list[int]]:
        """Edge positions incident to each vertex, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for pos, (u, v) in enumerate(self.edges):
            inc[u].append(pos)
            inc[v].append(pos)
        return inc

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def relabel_vertices(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]; edge order is kept."""
        names = None
        if self.vertex_names is not None:
            names_list = [""] * self.vertex_count
            for v, p in enumerate(perm):
                names_list[p] = self.vertex_names[v]
            names = tuple(names_list)
        return Graph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges), names)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"vertex_count": self.vertex_count}
        if self.vertex_names is not None:
            out["vertex_names"] = list(self.vertex_names)
        out["edges"] = [[u, v] for u, v in self.edges]
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Graph:
        try:
            names = data.get("vertex_names")
            return cls(
                int(data["vertex_count"]),
                tuple((int(e[0]), int(e[1])) for e in data["edges"]),
                tuple(names) if names is not None else None,
            )
        except (KeyError, TypeError, IndexError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc


@dataclass(frozen=True)
class EdgeLabeling:
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    def check(self, g: Graph) -> None:
        """Raise LabelingError unless this is a bijection E(g) -> 1..q."""
        q = g.edge_count
        if len(self.labels) != q:
            raise LabelingError(f"labeling has {len(self.labels)} labels for {q} edges")
        if sorted(self.labels) != list(range(1, q + 1)):
            raise LabelingError(f"labels are not a permutation of 1..{q}")

    def to_json(self) -> dict[str, Any]:
        return {"labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> EdgeLabeling:
        try:
            return cls(tuple(data["labels"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise LabelingError(f"malformed labeling JSON: {exc}") from exc


@dataclass(frozen=True)
class PartialLabeling:
    """Per-edge labels where ``None`` marks an edge not yet labeled.

    Labels need only be distinct positive integers; they may exceed the
    edge count, as intermediate windows in the constructions do.
    """

    labels: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        present = [x for x in self.labels if x is not None]
        if len(set(present)) != len(present):
            raise LabelingError("partial labeling repeats a label")
        if any(x <= 0 for x in present):
            raise LabelingError("labels must be positive")

    @classmethod
    def empty(cls, q: int) -> PartialLabeling:
        return cls((None,) * q)

    @classmethod
    def from_mapping(cls, q: int, assigned: dict[int, int]) -> PartialLabeling:
        labels: list[Optional[int]] = [None] * q
        for pos, lab in assigned.items():
            labels[pos] = lab
        return cls(tuple(labels))

    def is_complete(self) -> bool:
        return all(x is not None for x in self.labels)

    def complete(self) -> EdgeLabeling:
        if not self.is_complete():
            raise LabelingError("partial labeling still has unlabeled edges")
        return EdgeLabeling(tuple(self.labels))  # type: ignore[arg-type]


@dataclass(frozen=True)
class WeightReport:
    weights: tuple[int, ...]
    distinct: bool
    sorted_vertices: tuple[int, ...] = field(default=())

    def to_json(self) -> dict[str, Any]:
        return {
            "weights": list(self.weights),
            "distinct": self.distinct,
            "sorted_vertices": list(self.sorted_vertices),
        }


def _sums(g: Graph, labels: Iterable[Optional[int]]) -> list[int]:
    w = [0] * g.vertex_count
    for (u, v), lab in zip(g.edges, labels):
        if lab is not None:
            w[u] += lab
            w[v] += lab
    return w


def vertex_weights(g: Graph, labeling: EdgeLabeling) -> WeightReport:
    labeling.check(g)
    w = _sums(g, labeling.labels)
    order = sorted(range(g.vertex_count), key=lambda v: (w[v], v))
    distinct = all(w[a] != w[b] for a, b in zip(order, order[1:]))
    return WeightReport(tuple(w), distinct, tuple(order))


def partial_vertex_weights(g: Graph, partial: PartialLabeling) -> list[int]:
    if len(partial.labels) != g.edge_count:
        raise LabelingError(
            f"partial labeling has {len(partial.labels)} entries for {g.edge_count} edges"
        )
    return _sums(g, partial.labels)


def is_antimagic_labeling(g: Graph, labeling: EdgeLabeling) -> bool:
    return vertex_weights(g, labeling).distinct


def to_dot(g: Graph, labeling: Optional[EdgeLabeling] = None, name: str = "G") -> str:
    """Graphviz source; edges carry f(e) and vertices carry w(v) as xlabel."""
    weights = vertex_weights(g, labeling).weights if labeling is not None else None
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        attrs = [f'label="{g.name(v)}"']
        if weights is not None:
            attrs.append(f'xlabel="{weights[v]}"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for pos, (u, v) in enumerate(g.edges):
        if labeling is not None:
            lines.append(f'  {u} -- {v} [label="{labeling.labels[pos]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
