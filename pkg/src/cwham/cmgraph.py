"""Two-edge-colored multigraphs on k slot-vertices and red-blue Eulerian trails.

Slots are numbered ``1..k``.  Edges may be loops and may be parallel; each
edge carries a dense integer id assigned at insertion.  In directed mode an
edge ``(u, v)`` is an arc from ``u`` to ``v``.

A red-blue trail alternates colors, including across the wrap-around of a
closed trail.  Undirected existence is decided by degree balance plus
connectivity of the edge-carrying part.  For digraphs the balance condition
alone is not enough: after entering a slot by a red arc the trail must leave
by a blue arc and vice versa, so every slot ``v`` behaves like two nodes,
``v.a`` (red in, blue out) and ``v.b`` (blue in, red out).  A directed
red-blue Eulerian trail is exactly an Eulerian circuit of that split digraph.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Color", "RED", "BLUE", "CEdge", "ColoredMultigraph", "Trail",
    "ColorDegree", "DirectedColorDegree", "MismatchedK", "NoTrail",
    "color_degrees", "components", "merge", "trail_exists", "find_trail",
    "is_eulerian_trail", "parse_edge_list", "format_edge_list",
]


class Color(str, enum.Enum):
    RED = "red"
    BLUE = "blue"

    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


RED = Color.RED
BLUE = Color.BLUE


class MismatchedK(ValueError):
    pass


class NoTrail(ValueError):
    pass


@dataclass(frozen=True)
class CEdge:
    id: int
    u: int
    v: int
    color: Color

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class ColoredMultigraph:
    k: int
    edges: tuple[CEdge, ...] = ()
    directed: bool = False

    def __post_init__(self):
        for e in self.edges:
            if not (1 <= e.u <= self.k and 1 <= e.v <= self.k):
                raise ValueError(f"edge {e} outside slots 1..{self.k}")

    @classmethod
    def build(cls, k: int, red: Iterable[tuple[int, int]] = (),
              blue: Iterable[tuple[int, int]] = (), directed: bool = False):
        edges = [(u, v, RED) for u, v in red] + [(u, v, BLUE) for u, v in blue]
        return cls(k, tuple(CEdge(i, u, v, c) for i, (u, v, c) in enumerate(edges)),
                   directed)

    def add(self, u: int, v: int, color: Color) -> "ColoredMultigraph":
        return ColoredMultigraph(self.k, self.edges + (CEdge(len(self.edges), u, v, color),),
                                 self.directed)

    def __len__(self) -> int:
        return len(self.edges)

    def edge(self, eid: int) -> CEdge:
        e = self.edges[eid]
        assert e.id == eid
        return e

    def of_color(self, color: Color) -> list[CEdge]:
        return [e for e in self.edges if e.color is color]

    def recolor(self, color: Color) -> "ColoredMultigraph":
        return ColoredMultigraph(
            self.k, tuple(CEdge(e.id, e.u, e.v, color) for e in self.edges), self.directed)

    def reversed(self) -> "ColoredMultigraph":
        return ColoredMultigraph(
            self.k, tuple(CEdge(e.id, e.v, e.u, e.color) for e in self.edges), self.directed)


class ColorDegree(NamedTuple):
    red: int
    blue: int


class DirectedColorDegree(NamedTuple):
    red_out: int
    red_in: int
    blue_out: int
    blue_in: int


def color_degrees(g: ColoredMultigraph) -> dict[int, ColorDegree | DirectedColorDegree]:
    """Per-slot color degrees; an undirected loop counts twice."""
    if g.directed:
        cnt = {v: [0, 0, 0, 0] for v in range(1, g.k + 1)}
        for e in g.edges:
            off = 0 if e.color is RED else 2
            cnt[e.u][off] += 1
            cnt[e.v][off + 1] += 1
        return {v: DirectedColorDegree(*c) for v, c in cnt.items()}
    cnt = {v: [0, 0] for v in range(1, g.k + 1)}
    for e in g.edges:
        off = 0 if e.color is RED else 1
        cnt[e.u][off] += 1
        cnt[e.v][off] += 1
    return {v: ColorDegree(*c) for v, c in cnt.items()}


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _partition(size: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(size))
    for a, b in pairs:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [_find(parent, x) for x in range(size)]


def components(g: ColoredMultigraph) -> list[frozenset[int]]:
    """Connected components over all k slots (weak components for digraphs)."""
    roots = _partition(g.k + 1, ((e.u, e.v) for e in g.edges))
    groups: dict[int, set[int]] = {}
    for v in range(1, g.k + 1):
        groups.setdefault(roots[v], set()).add(v)
    return [frozenset(s) for _, s in sorted(groups.items())]


def merge(a: ColoredMultigraph, b: ColoredMultigraph) -> ColoredMultigraph:
    """Disjoint union of edge sets; b's edges are re-identified after a's."""
    if a.k != b.k:
        raise MismatchedK(f"cannot merge multigraphs on {a.k} and {b.k} slots")
    if a.directed != b.directed:
        raise ValueError("cannot merge directed with undirected multigraph")
    off = len(a.edges)
    return ColoredMultigraph(
        a.k, a.edges + tuple(CEdge(e.id + off, e.u, e.v, e.color) for e in b.edges),
        a.directed)


# split-node ids for the directed case
def _node_a(v: int) -> int:  # red in, blue out
    return 2 * v


def _node_b(v: int) -> int:  # blue in, red out
    return 2 * v + 1


def _split_arc(e: CEdge) -> tuple[int, int]:
    if e.color is RED:
        return _node_b(e.u), _node_a(e.v)
    return _node_a(e.u), _node_b(e.v)


def _balanced(g: ColoredMultigraph) -> bool:
    degs = color_degrees(g)
    if g.directed:
        return all(d.blue_out == d.red_in and d.blue_in == d.red_out for d in degs.values())
    return all(d.red == d.blue for d in degs.values())


def _single_nontrivial_component(size: int, pairs: list[tuple[int, int]]) -> bool:
    if not pairs:
        return True
    roots = _partition(size, pairs)
    return len({roots[a] for a, _ in pairs}) == 1


def trail_exists(g: ColoredMultigraph) -> bool:
    """Whether ``g`` has a closed red-blue trail through every edge.

    Slots without incident edges are ignored; an edgeless multigraph has the
    trivial trail.
    """
    if not _balanced(g):
        return False
    if g.directed:
        return _single_nontrivial_component(2 * g.k + 2, [_split_arc(e) for e in g.edges])
    return _single_nontrivial_component(g.k + 1, [(e.u, e.v) for e in g.edges])


@dataclass(frozen=True)
class Trail:
    """Closed trail ``vertices[0], edges[0], vertices[1], ..., vertices[0]``.

    ``vertices`` lists the slot before each edge, so the trail visits
    ``vertices[t] --edges[t]--> vertices[t + 1]`` cyclically.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


def is_eulerian_trail(g: ColoredMultigraph, trail: Trail) -> bool:
    """Check the trail invariants against ``g``."""
    m = len(trail.edges)
    if m != len(g.edges) or len(trail.vertices) != m:
        return False
    if sorted(trail.edges) != list(range(m)):
        return False
    for t, eid in enumerate(trail.edges):
        e = g.edges[eid]
        x, y = trail.vertices[t], trail.vertices[(t + 1) % m]
        if g.directed:
            if (e.u, e.v) != (x, y):
                return False
        elif {e.u, e.v} != {x, y}:
            return False
        if e.color is g.edges[trail.edges[(t + 1) % m]].color:
            return False
    return True


def find_trail(g: ColoredMultigraph) -> Trail:
    """Construct a red-blue Eulerian trail starting with a red edge.

    Starts at the lowest slot carrying a red edge.  Raises :class:`NoTrail`
    when none exists.
    """
    if not g.edges:
        return Trail((), ())
    if not trail_exists(g):
        raise NoTrail("multigraph has no red-blue Eulerian trail")
    if g.directed:
        return _find_trail_directed(g)
    return _find_trail_undirected(g)


def _find_trail_undirected(g: ColoredMultigraph) -> Trail:
    # Grow the trail one edge at a time, only taking an edge when the unused
    # edges afterwards still form one component touching both the start and
    # the new endpoint.  Balance guarantees such an edge always exists.
    incident: dict[int, list[CEdge]] = {v: [] for v in range(1, g.k + 1)}
    for e in g.edges:
        incident[e.u].append(e)
        if not e.is_loop:
            incident[e.v].append(e)
    start = min(e.u if e.u < e.v else e.v for e in g.edges if e.color is RED)
    remaining = set(range(len(g.edges)))

    def still_fine(eid: int, end: int) -> bool:
        rest = remaining - {eid}
        if not rest:
            return end == start
        pairs = [(g.edges[r].u, g.edges[r].v) for r in rest]
        roots = _partition(g.k + 1, pairs)
        comp = {roots[a] for a, _ in pairs}
        return len(comp) == 1 and roots[start] in comp and roots[end] in comp

    cur, need = start, RED
    verts: list[int] = []
    used: list[int] = []
    while remaining:
        for e in incident[cur]:
            if e.id in remaining and e.color is need and still_fine(e.id, e.other(cur)):
                break
        else:
            raise NoTrail(f"stuck at slot {cur} after {len(used)} edges")
        verts.append(cur)
        used.append(e.id)
        remaining.discard(e.id)
        cur, need = e.other(cur), need.other()
    return Trail(tuple(verts), tuple(used))


def _find_trail_directed(g: ColoredMultigraph) -> Trail:
    # Hierholzer on the split digraph: every circuit there alternates colors.
    out: dict[int, list[CEdge]] = {}
    for e in g.edges:
        out.setdefault(_split_arc(e)[0], []).append(e)
    for lst in out.values():
        lst.reverse()  # pop() yields lowest id first
    first = min((e for e in g.edges if e.color is RED), key=lambda e: (e.u, e.id))
    start = _node_b(first.u)
    stack: list[tuple[int, CEdge | None]] = [(start, None)]
    circuit: list[CEdge] = []
    while stack:
        node, via = stack[-1]
        if out.get(node):
            e = out[node].pop()
            stack.append((_split_arc(e)[1], e))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return Trail(tuple(e.u for e in circuit), tuple(e.id for e in circuit))


# --------------------------------------------------------------------------
# Edge-list text format:  "red 1 2", "blue 3 3", directed "red 1 -> 2"
# --------------------------------------------------------------------------

def parse_edge_list(text: str, directed: bool = False, k: int | None = None) -> ColoredMultigraph:
    edges: list[tuple[int, int, Color]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            color = Color(parts[0].lower())
            if directed:
                if len(parts) != 4 or parts[2] != "->":
                    raise ValueError
                u, v = int(parts[1]), int(parts[3])
            else:
                if len(parts) != 3:
                    raise ValueError
                u, v = int(parts[1]), int(parts[2])
        except (ValueError, IndexError):
            form = "COLOR u -> v" if directed else "COLOR u v"
            raise ValueError(f"line {lineno}: expected '{form}', got {raw!r}") from None
        if u < 1 or v < 1:
            raise ValueError(f"line {lineno}: slots are numbered from 1")
        edges.append((u, v, color))
    kk = k if k is not None else max((max(u, v) for u, v, _ in edges), default=1)
    return ColoredMultigraph(
        kk, tuple(CEdge(i, u, v, c) for i, (u, v, c) in enumerate(edges)), directed)


def format_edge_list(g: ColoredMultigraph) -> str:
    sep = " -> " if g.directed else " "
    return "".join(f"{e.color.value} {e.u}{sep}{e.v}\n" for e in g.edges)
