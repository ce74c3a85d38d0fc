"""Clique-width k-expressions: parsing, printing, evaluation and irredundancy.

An expression is stored as a flat table of nodes in post-order: every node
refers to its children by index, and the root is the last entry.  This keeps
all traversals iterative, which matters because the path and cycle families
produce expressions whose depth grows linearly with the number of vertices.

Concrete syntax (``.cwx`` files)::

    expr := '(' 'v' INT IDENT ')'
          | '(' 'rho' INT INT expr ')'
          | '(' 'eta' INT INT expr ')'      ; undirected only
          | '(' 'arc' INT INT expr ')'      ; directed only
          | '(' 'union' expr expr ')'
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

__all__ = [
    "Leaf", "Rho", "Eta", "Arc", "Union_", "CwExpr", "LabeledGraph",
    "ExprError", "CwSyntaxError", "DuplicateVertexName", "WrongModeOperator",
    "EqualLabels", "PartiallyRedundant", "RedundantNode",
    "parse", "unparse", "evaluate", "check_irredundant", "normalize", "width",
    "walk",
]


class ExprError(ValueError):
    """Base class for malformed or unsupported expressions."""


class CwSyntaxError(ExprError):
    def __init__(self, message: str, line: int, col: int, expected: str):
        super().__init__(f"{line}:{col}: {message} (expected {expected})")
        self.line = line
        self.col = col
        self.expected = expected


class DuplicateVertexName(ExprError):
    pass


class WrongModeOperator(ExprError):
    pass


class EqualLabels(ExprError):
    pass


class PartiallyRedundant(ExprError):
    pass


@dataclass(frozen=True)
class Leaf:
    label: int
    name: str


@dataclass(frozen=True)
class Rho:
    src: int
    dst: int
    child: int


@dataclass(frozen=True)
class Eta:
    i: int
    j: int
    child: int


@dataclass(frozen=True)
class Arc:
    i: int
    j: int
    child: int


@dataclass(frozen=True)
class Union_:
    left: int
    right: int


Node = Union[Leaf, Rho, Eta, Arc, Union_]


@dataclass(frozen=True)
class CwExpr:
    """A k-expression as a post-order node table (root last)."""

    nodes: tuple[Node, ...]
    directed: bool = False

    def __post_init__(self):
        if not self.nodes:
            raise ExprError("empty expression")

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    def __len__(self) -> int:
        return len(self.nodes)

    def leaves(self) -> list[Leaf]:
        return [nd for nd in self.nodes if isinstance(nd, Leaf)]

    @property
    def n(self) -> int:
        return sum(1 for nd in self.nodes if isinstance(nd, Leaf))

    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """A k-labeled (di)graph.

    Vertices are dense integers assigned in left-to-right leaf order; ``names``
    is indexed by them.  ``labels`` holds only the vertices of this graph, so a
    subgraph arising at an inner node shares ``names`` with the whole graph.
    Undirected edges are stored as ``(u, v)`` with ``u < v``.
    """

    names: tuple[str, ...]
    labels: dict[int, int]
    edges: frozenset[tuple[int, int]]
    directed: bool = False

    @property
    def vertices(self) -> list[int]:
        return sorted(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def has_edge(self, u: int, v: int) -> bool:
        if not self.directed and u > v:
            u, v = v, u
        return (u, v) in self.edges

    def label_class(self, label: int) -> list[int]:
        return sorted(v for v, lab in self.labels.items() if lab == label)

    def named_edges(self) -> set[tuple[str, str]]:
        return {(self.names[u], self.names[v]) for u, v in self.edges}

    def neighbours(self) -> dict[int, set[int]]:
        """Adjacency over the underlying undirected graph."""
        adj: dict[int, set[int]] = {v: set() for v in self.labels}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        if not self.labels:
            return True
        adj = self.neighbours()
        start = next(iter(self.labels))
        seen = {start}
        todo = [start]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.labels)


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")
_IDENT = re.compile(r"[A-Za-z0-9_]+\Z")
_INT = re.compile(r"[0-9]+\Z")

# operator -> argument schema; "e" is a subexpression
_SCHEMA = {
    "v": ("int", "ident"),
    "rho": ("int", "int", "e"),
    "eta": ("int", "int", "e"),
    "arc": ("int", "int", "e"),
    "union": ("e", "e"),
}


def _tokenize(text: str) -> Iterator[tuple[str, int]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        assert m is not None  # the pattern matches any character
        tok = m.group()
        if not tok[0].isspace() and tok[0] != ";":
            yield tok, pos
        pos = m.end()


class _Frame:
    __slots__ = ("op", "args", "pos")

    def __init__(self, op: str, pos: int):
        self.op = op
        self.args: list = []
        self.pos = pos

    def expects(self) -> str | None:
        schema = _SCHEMA[self.op]
        return schema[len(self.args)] if len(self.args) < len(schema) else None


def parse(text: str, mode: str = "undirected") -> CwExpr:
    """Parse ``.cwx`` text into a :class:`CwExpr`.

    ``mode`` is ``"undirected"`` (``eta`` allowed) or ``"directed"``
    (``arc`` allowed).
    """
    if mode not in ("undirected", "directed"):
        raise ValueError(f"unknown mode {mode!r}")
    directed = mode == "directed"

    def where(pos: int) -> tuple[int, int]:
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(msg: str, pos: int, expected: str):
        line, col = where(pos)
        raise CwSyntaxError(msg, line, col, expected)

    nodes: list[Node] = []
    names: set[str] = set()
    stack: list[_Frame] = []
    root: int | None = None
    tokens = _tokenize(text)
    for tok, pos in tokens:
        if root is not None:
            fail(f"unexpected {tok!r} after complete expression", pos, "end of input")
        if tok == "(":
            if stack and stack[-1].expects() != "e":
                fail("unexpected '('", pos, stack[-1].expects() or "')'")
            op_tok = next(tokens, None)
            if op_tok is None:
                fail("unexpected end of input", len(text), "operator")
            op, op_pos = op_tok
            if op not in _SCHEMA:
                fail(f"unknown operator {op!r}", op_pos, "v, rho, eta, arc or union")
            if op == "eta" and directed:
                raise WrongModeOperator(f"{where(op_pos)[0]}:{where(op_pos)[1]}: "
                                        "'eta' is not allowed in directed mode")
            if op == "arc" and not directed:
                raise WrongModeOperator(f"{where(op_pos)[0]}:{where(op_pos)[1]}: "
                                        "'arc' is not allowed in undirected mode")
            stack.append(_Frame(op, op_pos))
        elif tok == ")":
            if not stack:
                fail("unbalanced ')'", pos, "'('")
            frame = stack.pop()
            if frame.expects() is not None:
                fail("premature ')'", pos, frame.expects())
            idx = _build(frame, nodes, names, where)
            if stack:
                stack[-1].args.append(idx)
            else:
                root = idx
        else:
            if not stack:
                fail(f"unexpected {tok!r}", pos, "'('")
            want = stack[-1].expects()
            if want == "int":
                if not _INT.match(tok) or int(tok) < 1:
                    fail(f"bad label {tok!r}", pos, "integer >= 1")
                stack[-1].args.append(int(tok))
            elif want == "ident":
                if not _IDENT.match(tok):
                    fail(f"bad vertex name {tok!r}", pos, "identifier [A-Za-z0-9_]+")
                stack[-1].args.append(tok)
            else:
                fail(f"unexpected {tok!r}", pos, "'('" if want == "e" else "')'")
    if stack:
        fail("unexpected end of input", len(text), stack[-1].expects() or "')'")
    if root is None:
        fail("empty input", 0, "'('")
    return CwExpr(tuple(nodes), directed)


def _build(frame: _Frame, nodes: list[Node], names: set[str], where) -> int:
    op, a = frame.op, frame.args
    if op == "v":
        if a[1] in names:
            line, col = where(frame.pos)
            raise DuplicateVertexName(f"{line}:{col}: vertex {a[1]!r} defined twice")
        names.add(a[1])
        node: Node = Leaf(a[0], a[1])
    elif op == "union":
        node = Union_(a[0], a[1])
    else:
        if a[0] == a[1]:
            line, col = where(frame.pos)
            raise EqualLabels(f"{line}:{col}: {op} needs distinct labels, got {a[0]} {a[1]}")
        node = {"rho": Rho, "eta": Eta, "arc": Arc}[op](a[0], a[1], a[2])
    nodes.append(node)
    return len(nodes) - 1


def unparse(expr: CwExpr) -> str:
    """Canonical single-line printer; ``parse(unparse(e))`` reproduces ``e``."""
    out: list[str] = []
    todo: list[int | str] = [expr.root]
    while todo:
        item = todo.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        nd = expr.nodes[item]
        if isinstance(nd, Leaf):
            out.append(f"(v {nd.label} {nd.name})")
        elif isinstance(nd, Union_):
            out.append("(union ")
            todo.extend([")", nd.right, " ", nd.left])
        else:
            op = {Rho: "rho", Eta: "eta", Arc: "arc"}[type(nd)]
            a, b = (nd.src, nd.dst) if isinstance(nd, Rho) else (nd.i, nd.j)
            out.append(f"({op} {a} {b} ")
            todo.extend([")", nd.child])
    return "".join(out)


def width(expr: CwExpr) -> int:
    """Largest label used anywhere in the expression."""
    best = 0
    for nd in expr.nodes:
        if isinstance(nd, Leaf):
            best = max(best, nd.label)
        elif isinstance(nd, Rho):
            best = max(best, nd.src, nd.dst)
        elif isinstance(nd, (Eta, Arc)):
            best = max(best, nd.i, nd.j)
    return best


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

@dataclass
class _Sub:
    """Value of a subexpression: label classes of its vertices."""

    classes: dict[int, list[int]] = field(default_factory=dict)
    size: int = 0


@dataclass(frozen=True)
class RedundantNode:
    node: int
    kind: str  # "fully" or "partially"
    i: int
    j: int
    existing: int
    total: int


def walk(expr: CwExpr, on_node=None):
    """Evaluate ``expr`` bottom-up.

    ``on_node(idx, classes, edges, new_edges)`` is called after each node with
    the label classes of that node's value, the global edge set so far, and
    (for eta/arc nodes) the number of pre-existing cross edges.  Returns the
    final ``(classes, edges)``.
    """
    subs: list[_Sub | None] = [None] * len(expr.nodes)
    edges: set[tuple[int, int]] = set()
    next_vertex = 0
    for idx, nd in enumerate(expr.nodes):
        existing = None
        if isinstance(nd, Leaf):
            sub = _Sub({nd.label: [next_vertex]}, 1)
            next_vertex += 1
        elif isinstance(nd, Union_):
            left, right = subs[nd.left], subs[nd.right]
            subs[nd.left] = subs[nd.right] = None
            if len(left.classes) < len(right.classes):
                left, right = right, left
            for lab, vs in right.classes.items():
                left.classes.setdefault(lab, []).extend(vs)
            left.size += right.size
            sub = left
        elif isinstance(nd, Rho):
            sub = subs[nd.child]
            subs[nd.child] = None
            moved = sub.classes.pop(nd.src, None)
            if moved:
                sub.classes.setdefault(nd.dst, []).extend(moved)
        else:
            sub = subs[nd.child]
            subs[nd.child] = None
            existing = 0
            directed = isinstance(nd, Arc)
            for u in sub.classes.get(nd.i, ()):
                for v in sub.classes.get(nd.j, ()):
                    e = (u, v) if directed or u < v else (v, u)
                    if e in edges:
                        existing += 1
                    else:
                        edges.add(e)
        subs[idx] = sub
        if on_node is not None:
            on_node(idx, sub.classes, edges, existing)
    final = subs[expr.root]
    return final.classes, edges


def evaluate(expr: CwExpr) -> LabeledGraph:
    """The labeled graph denoted by ``expr``."""
    classes, edges = walk(expr)
    labels = {v: lab for lab, vs in classes.items() for v in vs}
    names = tuple(leaf.name for leaf in expr.leaves())
    return LabeledGraph(names, labels, frozenset(edges), expr.directed)


def subgraphs(expr: CwExpr) -> Iterator[tuple[int, LabeledGraph]]:
    """Yield ``(idx, value of node idx)`` for every node, in post-order.

    Materializes every intermediate graph, so meant for small expressions.
    """
    names = tuple(leaf.name for leaf in expr.leaves())
    subs: list = [None] * len(expr.nodes)
    next_vertex = 0
    for idx, nd in enumerate(expr.nodes):
        if isinstance(nd, Leaf):
            labels, edges = {next_vertex: nd.label}, frozenset()
            next_vertex += 1
        elif isinstance(nd, Union_):
            (l1, e1), (l2, e2) = subs[nd.left], subs[nd.right]
            labels, edges = {**l1, **l2}, e1 | e2
        elif isinstance(nd, Rho):
            l1, edges = subs[nd.child]
            labels = {v: (nd.dst if lab == nd.src else lab) for v, lab in l1.items()}
        else:
            labels, e1 = subs[nd.child]
            directed = isinstance(nd, Arc)
            new = set()
            for u, lu in labels.items():
                if lu != nd.i:
                    continue
                for v, lv in labels.items():
                    if lv == nd.j:
                        new.add((u, v) if directed or u < v else (v, u))
            edges = e1 | new
        subs[idx] = (labels, edges)
        yield idx, LabeledGraph(names, labels, edges, expr.directed)


def check_irredundant(expr: CwExpr) -> list[RedundantNode]:
    """Classify every eta/arc node; return the ones that are not clean.

    A node is fully redundant when it adds no edge although both label
    classes are non-empty, and partially redundant when only some of the
    cross pairs were already adjacent.
    """
    issues: list[RedundantNode] = []

    def on_node(idx, classes, edges, existing):
        if existing:
            nd = expr.nodes[idx]
            total = len(classes.get(nd.i, ())) * len(classes.get(nd.j, ()))
            kind = "fully" if existing == total else "partially"
            issues.append(RedundantNode(idx, kind, nd.i, nd.j, existing, total))

    walk(expr, on_node)
    return issues


def normalize(expr: CwExpr) -> CwExpr:
    """Drop fully redundant eta/arc nodes.

    Raises :class:`PartiallyRedundant` when some node is only partially
    redundant; such expressions need a full irredundancy transformation,
    which is not provided.
    """
    issues = check_irredundant(expr)
    partial = [r for r in issues if r.kind == "partially"]
    if partial:
        r = partial[0]
        raise PartiallyRedundant(
            f"node {r.node} ({r.i},{r.j}) is partially redundant: "
            f"{r.existing} of {r.total} cross pairs already adjacent")
    if not issues:
        return expr
    drop = {r.node for r in issues}
    remap: dict[int, int] = {}
    nodes: list[Node] = []
    for idx, nd in enumerate(expr.nodes):
        if idx in drop:
            remap[idx] = remap[nd.child]
            continue
        if isinstance(nd, Union_):
            nd = Union_(remap[nd.left], remap[nd.right])
        elif isinstance(nd, Rho):
            nd = Rho(nd.src, nd.dst, remap[nd.child])
        elif isinstance(nd, Eta):
            nd = Eta(nd.i, nd.j, remap[nd.child])
        elif isinstance(nd, Arc):
            nd = Arc(nd.i, nd.j, remap[nd.child])
        nodes.append(nd)
        remap[idx] = len(nodes) - 1
    return CwExpr(tuple(nodes), expr.directed)
