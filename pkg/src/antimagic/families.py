"""Generators for the graph families that the labelers handle.

Edge order is part of each generator's contract, because the labelers hand
out consecutive label windows by edge position.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .graph import Graph


class FamilyError(ValueError):
    """Raised for out-of-range family parameters or unusable H graphs."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def make_cycle_zigzag(n: int) -> Graph:
    """n-cycle on v_1..v_n with edges v1v2, v1v3, v2v4, ..., v_{n-2}v_n, v_{n-1}v_n."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    edges = [(0, 1), (0, 2)]
    edges += [(i - 1, i + 1) for i in range(2, n - 1)]
    # n = 3: (v1, v3) already doubles as the closing zigzag step
    edges.append((n - 2, n - 1))
    return Graph(n, tuple(edges), tuple(f"v_{i}" for i in range(1, n + 1)))


def make_complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Graph(n, edges)


def make_star(n: int) -> Graph:
    """K_{1,n}: apex 0, leaves 1..n."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)))


def make_bistar(x: int, n: int) -> Graph:
    """B_{x,n} with vertex order l_1..l_x, u, v, l_{x+1}..l_{x+n}.

    Edges: (u, l_1)..(u, l_x), (v, l_{x+1})..(v, l_{x+n}), (u, v).
    """
    _require(x >= 1 and n >= 1, f"bistar needs x, n >= 1, got ({x}, {n})")
    u, v = x, x + 1
    edges = [(u, i) for i in range(x)]
    edges += [(v, x + 2 + i) for i in range(n)]
    edges.append((u, v))
    names = [f"l_{i}" for i in range(1, x + 1)] + ["u", "v"]
    names += [f"l_{i}" for i in range(x + 1, x + n + 1)]
    return Graph(x + n + 2, tuple(edges), tuple(names))


def make_barbell(n: int) -> Graph:
    """Two K_n on u_1..u_n and v_1..v_n joined by the bridge (u_n, v_n)."""
    _require(n >= 3, f"barbell needs n >= 3, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += [(n + i, n + j) for i in range(n) for j in range(i + 1, n)]
    edges.append((n - 1, 2 * n - 1))
    names = [f"u_{i}" for i in range(1, n + 1)] + [f"v_{i}" for i in range(1, n + 1)]
    return Graph(2 * n, tuple(edges), tuple(names))


@dataclass(frozen=True)
class CoronaMap:
    """Where each piece of an edge corona lives in the product graph.

    ``cross_edges[i]`` lists the first endpoint's fan (in H-vertex order)
    followed by the second endpoint's fan.
    """

    base_edge_to_copy: tuple[range, ...]
    cross_edges: tuple[tuple[int, ...], ...]
    copy_edge_ranges: tuple[range, ...]
    base_edge_range: range
    copy_order: int

    def first_fan(self, i: int) -> tuple[int, ...]:
        return self.cross_edges[i][: self.copy_order]

    def second_fan(self, i: int) -> tuple[int, ...]:
        return self.cross_edges[i][self.copy_order :]


def edge_corona(g: Graph, h: Graph, prefix: str = "h") -> tuple[Graph, CoronaMap]:
    """G ⋄ H: copy i of H is joined to both ends of the i-th edge of G.

    Vertices: base vertices, then copies in base-edge order.  Edges: copy
    internals, then cross edges per base edge, then the base edges.
    Copy vertices are named ``{prefix}^{i}_{j}`` (both 1-based).
    """
    _require(g.edge_count >= 1, "edge corona needs at least one base edge")
    _require(h.vertex_count >= 1, "edge corona needs a nonempty H")
    nb, q, mh = g.vertex_count, g.edge_count, h.vertex_count

    copies = tuple(range(nb + i * mh, nb + (i + 1) * mh) for i in range(q))
    edges: list[tuple[int, int]] = []
    copy_ranges = []
    for c in copies:
        start = len(edges)
        edges.extend((c[a], c[b]) for a, b in h.edges)
        copy_ranges.append(range(start, len(edges)))
    cross = []
    for (a, b), c in zip(g.edges, copies):
        start = len(edges)
        edges.extend((a, w) for w in c)
        edges.extend((b, w) for w in c)
        cross.append(tuple(range(start, len(edges))))
    base_start = len(edges)
    edges.extend(g.edges)

    names = [g.name(v) for v in range(nb)]
    names += [f"{prefix}^{i}_{j}" for i in range(1, q + 1) for j in range(1, mh + 1)]
    cmap = CoronaMap(
        base_edge_to_copy=copies,
        cross_edges=tuple(cross),
        copy_edge_ranges=tuple(copy_ranges),
        base_edge_range=range(base_start, len(edges)),
        copy_order=mh,
    )
    return Graph(nb + q * mh, tuple(edges), tuple(names)), cmap


def check_regular_connected(h: Graph) -> tuple[int, int]:
    """Return (k, m) for a connected k-regular graph on m >= 2 vertices."""
    m = h.vertex_count
    _require(m >= 2, f"H must have at least 2 vertices, got {m}")
    deg = h.degrees()
    _require(len(set(deg)) == 1, f"H is not regular (degrees {sorted(set(deg))})")
    _require(h.is_connected(), "H is not connected")
    return deg[0], m


def parse_h_spec(text: str) -> Graph:
    """Parse ``cycle:n``, ``complete:n`` or ``file:<path>`` into a Graph."""
    kind, sep, arg = text.partition(":")
    _require(bool(sep), f"bad H spec {text!r}; expected cycle:n, complete:n or file:<path>")
    if kind == "cycle":
        return make_cycle_zigzag(int(arg))
    if kind == "complete":
        return make_complete(int(arg))
    if kind == "file":
        return Graph.from_json(json.loads(Path(arg).read_text()))
    raise FamilyError(f"unknown H kind {kind!r}")


KINDS = ("barbell", "bistar_corona", "cycle_corona", "cycle", "complete", "star", "bistar")

_PARAMS = {
    "barbell": ("n",),
    "bistar_corona": ("x", "n"),
    "cycle_corona": ("m", "n"),
    "cycle": ("n",),
    "complete": ("n",),
    "star": ("n",),
    "bistar": ("x", "n"),
}


def normalize_kind(kind: str) -> str:
    k = kind.replace("-", "_")
    _require(k in KINDS, f"unknown family {kind!r}")
    return k


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: dict[str, int] = field(default_factory=dict)
    h: Optional[Graph] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        missing = [p for p in _PARAMS[self.kind] if p not in self.params]
        _require(not missing, f"{self.kind} needs parameters {missing}")
        object.__setattr__(
            self, "params", {p: int(self.params[p]) for p in _PARAMS[self.kind]}
        )
        p = self.params
        if self.kind == "barbell":
            _require(p["n"] >= 3, "barbell needs n >= 3")
        elif self.kind == "bistar_corona":
            _require(p["x"] >= 2 and p["n"] >= 2, "bistar_corona needs x, n >= 2")
            _require(self.h is not None, "bistar_corona needs an H graph")
            check_regular_connected(self.h)  # type: ignore[arg-type]
        elif self.kind == "cycle_corona":
            _require(p["m"] >= 3 and p["n"] >= 3, "cycle_corona needs m, n >= 3")
        elif self.kind == "cycle":
            _require(p["n"] >= 3, "cycle needs n >= 3")
        elif self.kind == "bistar":
            _require(p["x"] >= 1 and p["n"] >= 1, "bistar needs x, n >= 1")
        else:
            _require(p["n"] >= 1, f"{self.kind} needs n >= 1")

    def build(self) -> Graph:
        p = self.params
        if self.kind == "barbell":
            return make_barbell(p["n"])
        if self.kind == "bistar_corona":
            return edge_corona(make_bistar(p["x"], p["n"]), self.h)[0]  # type: ignore[arg-type]
        if self.kind == "cycle_corona":
            return edge_corona(make_cycle_zigzag(p["m"]), make_cycle_zigzag(p["n"]), "u")[0]
        if self.kind == "cycle":
            return make_cycle_zigzag(p["n"])
        if self.kind == "complete":
            return make_complete(p["n"])
        if self.kind == "star":
            return make_star(p["n"])
        return make_bistar(p["x"], p["n"])

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind, "params": dict(self.params)}
        if self.h is not None:
            out["h"] = self.h.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> FamilySpec:
        h = data.get("h")
        return cls(data["kind"], dict(data.get("params", {})), Graph.from_json(h) if h else None)
