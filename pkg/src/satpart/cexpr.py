"""Clique-width expressions: model, parser, evaluation, irredundancy.

Text grammar (whitespace-separated s-expressions, ``;`` starts a comment)::

    E := (o i)          one new vertex with label i
       | (u E E)        disjoint union
       | (p i j E)      relabel every i-vertex to j
       | (n i j E)      join every i-vertex to every j-vertex

Labels are positive integers.  Vertex ids are assigned in left-to-right
leaf order, starting at 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union as TUnion

from .graph import Graph, InputError


@dataclass(frozen=True, eq=False)
class Leaf:
    label: int


@dataclass(frozen=True, eq=False)
class Union:
    left: "Node"
    right: "Node"


@dataclass(frozen=True, eq=False)
class Relabel:
    src: int
    dst: int
    child: "Node"


@dataclass(frozen=True, eq=False)
class Join:
    a: int
    b: int
    child: "Node"


Node = TUnion[Leaf, Union, Relabel, Join]


def children(node: Node) -> tuple[Node, ...]:
    if isinstance(node, Leaf):
        return ()
    if isinstance(node, Union):
        return (node.left, node.right)
    return (node.child,)


def postorder(root: Node) -> Iterator[Node]:
    """Children before parents, left subtree before right (no recursion)."""
    stack: list[tuple[Node, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        stack.append((node, True))
        for ch in reversed(children(node)):
            stack.append((ch, False))


def to_sexpr(node: Node) -> str:
    out: dict[int, str] = {}
    for nd in postorder(node):
        if isinstance(nd, Leaf):
            s = f"(o {nd.label})"
        elif isinstance(nd, Union):
            s = f"(u {out.pop(id(nd.left))} {out.pop(id(nd.right))})"
        elif isinstance(nd, Relabel):
            s = f"(p {nd.src} {nd.dst} {out.pop(id(nd.child))})"
        else:
            s = f"(n {nd.a} {nd.b} {out.pop(id(nd.child))})"
        out[id(nd)] = s
    return out[id(node)]


@dataclass(frozen=True)
class CExpr:
    root: Node
    c: int

    def __post_init__(self):
        for nd in postorder(self.root):
            labels = ()
            if isinstance(nd, Leaf):
                labels = (nd.label,)
            elif isinstance(nd, (Relabel, Join)):
                first, second = (nd.src, nd.dst) if isinstance(nd, Relabel) else (nd.a, nd.b)
                if first == second:
                    raise InputError(f"relabel/join needs two distinct labels, got {first}")
                labels = (first, second)
            for lab in labels:
                if not 1 <= lab <= self.c:
                    raise InputError(f"label {lab} outside 1..{self.c}")

    def __str__(self) -> str:
        return to_sexpr(self.root)

    def nodes(self) -> list[Node]:
        return list(postorder(self.root))

    @property
    def n(self) -> int:
        return sum(1 for nd in postorder(self.root) if isinstance(nd, Leaf))


class ParseError(InputError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


_TOKEN = re.compile(r"\s+|;[^\n]*|(?P<tok>\(|\)|[^\s();]+)")


def _tokenize(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group("tok"):
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            yield m.group("tok"), line, col
        pos = m.end()


def parse_cexpr(text: str, c: Optional[int] = None) -> CExpr:
    """Parse the s-expression grammar; ``c`` defaults to the largest label used."""
    tokens = list(_tokenize(text))
    end_line = text.count("\n") + 1
    pos = 0

    def peek():
        if pos >= len(tokens):
            raise ParseError("unexpected end of input", end_line, 1)
        return tokens[pos]

    def take(expected: Optional[str] = None):
        nonlocal pos
        tok = peek()
        if expected is not None and tok[0] != expected:
            raise ParseError(f"expected {expected!r}, found {tok[0]!r}", tok[1], tok[2])
        pos += 1
        return tok

    def label():
        tok, line, col = take()
        if not tok.isdigit() or int(tok) < 1:
            raise ParseError(f"expected a positive label, found {tok!r}", line, col)
        return int(tok), line, col

    # explicit stack of partially built nodes so deep expressions do not recurse
    def expr() -> Node:
        frames: list[list] = []
        result: Optional[Node] = None
        while True:
            if result is None:
                take("(")
                op, line, col = take()
                if op == "o":
                    lab, _, _ = label()
                    take(")")
                    result = Leaf(lab)
                elif op == "u":
                    frames.append(["u", line, col])
                elif op in ("p", "n"):
                    (i, _, _), (j, jl, jc) = label(), label()
                    if i == j:
                        raise ParseError(f"{op} needs distinct labels, got {i} {j}", jl, jc)
                    frames.append([op, i, j])
                else:
                    raise ParseError(f"unknown operator {op!r}", line, col)
                continue
            if not frames:
                return result
            frame = frames[-1]
            if frame[0] == "u" and len(frame) == 3:
                frame.append(result)
                result = None
                continue
            frames.pop()
            take(")")
            if frame[0] == "u":
                result = Union(frame[3], result)
            elif frame[0] == "p":
                result = Relabel(frame[1], frame[2], result)
            else:
                result = Join(frame[1], frame[2], result)

    root = expr()
    if pos != len(tokens):
        tok, line, col = tokens[pos]
        raise ParseError(f"trailing input {tok!r}", line, col)
    used = max(nd.label for nd in postorder(root) if isinstance(nd, Leaf))
    for nd in postorder(root):
        if isinstance(nd, Relabel):
            used = max(used, nd.src, nd.dst)
        elif isinstance(nd, Join):
            used = max(used, nd.a, nd.b)
    if c is None:
        c = used
    elif used > c:
        raise InputError(f"label {used} exceeds declared label count {c}")
    return CExpr(root, c)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]


def _evaluate(root: Node):
    """Yield ``(node, labels, edges, added)`` bottom-up.

    ``labels`` maps vertex id -> label for the node's vertices and ``edges``
    is the node's edge set; both are reused by the parent, so copy before
    keeping them.  ``added`` counts the edges a join node newly created.
    """
    state: dict[int, tuple[dict[int, int], set]] = {}
    next_id = 0
    for nd in postorder(root):
        added = 0
        if isinstance(nd, Leaf):
            lab, edges = {next_id: nd.label}, set()
            next_id += 1
        elif isinstance(nd, Union):
            lab, edges = state.pop(id(nd.left))
            lab2, e2 = state.pop(id(nd.right))
            lab.update(lab2)
            edges |= e2
        elif isinstance(nd, Relabel):
            lab, edges = state.pop(id(nd.child))
            for v, lv in lab.items():
                if lv == nd.src:
                    lab[v] = nd.dst
        else:
            lab, edges = state.pop(id(nd.child))
            xs = [v for v, lv in lab.items() if lv == nd.a]
            ys = [v for v, lv in lab.items() if lv == nd.b]
            before = len(edges)
            edges |= {(min(x, y), max(x, y)) for x in xs for y in ys}
            added = len(edges) - before
        state[id(nd)] = (lab, edges)
        yield nd, lab, edges, added


def eval_cexpr(e: CExpr | Node) -> LabeledGraph:
    root = e.root if isinstance(e, CExpr) else e
    for _, lab, edges, _ in _evaluate(root):
        pass
    n = len(lab)
    return LabeledGraph(Graph.from_edges(n, sorted(edges)), tuple(lab[v] for v in range(n)))


def _rebuild(node: Node, replace) -> Node:
    """Rebuild bottom-up; ``replace(old, new_children)`` returns the new node."""
    built: dict[int, Node] = {}
    for nd in postorder(node):
        built[id(nd)] = replace(nd, [built.pop(id(ch)) for ch in children(nd)])
    return built[id(node)]


def _with_children(nd: Node, kids: list[Node]) -> Node:
    if isinstance(nd, Leaf):
        return nd
    if isinstance(nd, Union):
        return Union(*kids)
    if isinstance(nd, Relabel):
        return Relabel(nd.src, nd.dst, kids[0])
    return Join(nd.a, nd.b, kids[0])


def _drop_joins(root: Node, drop: set[int]) -> Node:
    def replace(nd, kids):
        if isinstance(nd, Join) and id(nd) in drop:
            return kids[0]
        return _with_children(nd, kids)
    return _rebuild(root, replace)


def make_irredundant(e: CExpr) -> CExpr:
    """Equivalent expression in which every edge is added by exactly one join.

    First, bottom-up, a join that adds no new edge is replaced by its child
    (removing it does not change any later state).  A surviving join can
    only repeat edges of a lower join whose two vertex groups carry exactly
    its own two labels by the time it runs; all edges of such a lower join
    are re-created, so the lower join is dropped.
    """
    root = _drop_joins(e.root, {id(nd) for nd, _, _, added in _evaluate(e.root)
                                if isinstance(nd, Join) and added == 0})

    groups: dict[int, tuple[int, int]] = {}
    labels_at: dict[int, dict[int, int]] = {}
    strictly_below: dict[int, list[Join]] = {}
    subtree_joins: dict[int, list[Join]] = {}
    for nd, lab, _, _ in _evaluate(root):
        acc = [j for ch in children(nd) for j in subtree_joins.pop(id(ch))]
        if isinstance(nd, Join):
            # one representative per group: relabelling never splits a same-label group
            groups[id(nd)] = (next(v for v, lv in lab.items() if lv == nd.a),
                              next(v for v, lv in lab.items() if lv == nd.b))
            labels_at[id(nd)] = dict(lab)
            strictly_below[id(nd)] = list(acc)
            acc.append(nd)
        subtree_joins[id(nd)] = acc
    drop = set()
    for t in subtree_joins[id(root)]:
        lab = labels_at[id(t)]
        for s in strictly_below[id(t)]:
            x, y = groups[id(s)]
            if {lab[x], lab[y]} == {t.a, t.b}:
                drop.add(id(s))
    root = _drop_joins(root, drop)
    return CExpr(root, e.c)


# bundled generators; leaf order matches graph.generate_family numbering

def _chain_union(nodes: list[Node]) -> Node:
    acc = nodes[0]
    for nd in nodes[1:]:
        acc = Union(acc, nd)
    return acc


def complete_multipartite_expr(sizes: list[int]) -> CExpr:
    """Two labels: finished parts carry label 1, the incoming part label 2."""
    acc = _chain_union([Leaf(1) for _ in range(sizes[0])])
    for size in sizes[1:]:
        part = _chain_union([Leaf(2) for _ in range(size)])
        acc = Relabel(2, 1, Join(1, 2, Union(acc, part)))
    return CExpr(acc, 2)


def clique_expr(n: int) -> CExpr:
    return complete_multipartite_expr([1] * n)


def complete_bipartite_expr(a: int, b: int) -> CExpr:
    left = _chain_union([Leaf(1) for _ in range(a)])
    right = _chain_union([Leaf(2) for _ in range(b)])
    return CExpr(Join(1, 2, Union(left, right)), 2)


def star_expr(m: int) -> CExpr:
    return complete_bipartite_expr(1, m)


def _extend_path(acc: Node) -> Node:
    # label 1: current end, 2: interior, 3: incoming vertex
    return Relabel(3, 1, Relabel(1, 2, Join(1, 3, Union(acc, Leaf(3)))))


def path_expr(n: int) -> CExpr:
    """Three labels; P_4 is not a cograph, so two labels cannot express paths."""
    acc: Node = Leaf(1)
    for _ in range(n - 1):
        acc = _extend_path(acc)
    return CExpr(acc, 3)


def cycle_expr(n: int) -> CExpr:
    """Four labels: vertex 0 keeps label 4 until the closing join."""
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    acc: Node = Join(4, 1, Union(Leaf(4), Leaf(1)))
    for _ in range(n - 2):
        acc = _extend_path(acc)
    return CExpr(Join(1, 4, acc), 4)


def family_expr(family: str, params: list[int]) -> CExpr:
    from .graph import Family

    family = Family(family)
    if family is Family.COMPLETE:
        return clique_expr(params[0])
    if family is Family.STAR:
        return star_expr(params[0])
    if family is Family.PATH:
        return path_expr(params[0])
    if family is Family.CYCLE:
        return cycle_expr(params[0])
    if family is Family.COMPLETE_BIPARTITE:
        return complete_bipartite_expr(*params)
    return complete_multipartite_expr(list(params))
