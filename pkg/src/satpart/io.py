"""Text formats for graphs, constrained instances, MMO instances,
orientations and witnesses.

Graph / instance format (one directive per line, ``c`` lines and blank
lines ignored, ids 0-based)::

    p <n> <m>          header, exactly once, before anything else
    e <u> <v>          edge (exactly m of them)
    tri <v>            v forced into V1
    sq <v>             v forced into V2
    pair <a> <b>       exactly one of a, b in V1

MMO format: the same header, ``e <u> <v> <w>`` weighted edges and one
``r <threshold>`` line.  Orientation format: one ``a <tail> <head>`` line
per edge.
"""
from __future__ import annotations

import json
from typing import Optional

from .graph import FscInstance, Graph, InputError, Partition
from .reductions import MmoInstance, Orientation

SCHEMA = 1


class FormatError(InputError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line, self.col = line, col


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("c ") or stripped == "c":
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        yield lineno, col, stripped.split()


def _ints(fields: list[str], count: int, lineno: int, col: int) -> list[int]:
    if len(fields) - 1 != count:
        raise FormatError(f"{fields[0]!r} takes {count} integer argument(s), got {len(fields) - 1}", lineno, col)
    try:
        return [int(f) for f in fields[1:]]
    except ValueError:
        raise FormatError(f"non-integer argument in {' '.join(fields)!r}", lineno, col) from None


def _check_vertex(v: int, n: int, lineno: int, col: int) -> None:
    if not 0 <= v < n:
        raise FormatError(f"vertex {v} out of range 0..{n - 1}", lineno, col)


def parse_graph_file(text: str) -> FscInstance:
    """Parse the graph/instance format; plain graphs come back with no constraints."""
    n: Optional[int] = None
    m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    tri, sq, pairs = set(), set(), set()
    for lineno, col, fields in _directives(text):
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise FormatError("duplicate header", lineno, col)
            n, m = _ints(fields, 2, lineno, col)
            if n < 0 or m < 0:
                raise FormatError("negative size in header", lineno, col)
            continue
        if n is None:
            raise FormatError("missing 'p <n> <m>' header before first directive", lineno, col)
        if kind == "e":
            u, v = _ints(fields, 2, lineno, col)
            for x in (u, v):
                _check_vertex(x, n, lineno, col)
            if u == v:
                raise FormatError(f"self-loop at {u}", lineno, col)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"duplicate edge {u} {v}", lineno, col)
            seen.add(key)
            edges.append((u, v))
        elif kind in ("tri", "sq"):
            (v,) = _ints(fields, 1, lineno, col)
            _check_vertex(v, n, lineno, col)
            (tri if kind == "tri" else sq).add(v)
        elif kind == "pair":
            a, b = _ints(fields, 2, lineno, col)
            for x in (a, b):
                _check_vertex(x, n, lineno, col)
            if a == b:
                raise FormatError(f"pair endpoints must differ, got {a} {b}", lineno, col)
            pairs.add((min(a, b), max(a, b)))
        else:
            raise FormatError(f"unknown directive {kind!r}", lineno, col)
    if n is None:
        raise FormatError("missing 'p <n> <m>' header", 1)
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}", 1)
    if tri & sq:
        raise InputError(f"vertices forced to both sides: {sorted(tri & sq)}")
    return FscInstance(Graph.from_edges(n, edges), frozenset(tri), frozenset(sq), frozenset(pairs))


def serialize_instance(inst: FscInstance | Graph) -> str:
    """Canonical text: header, sorted edges, then sorted tri/sq/pair lines."""
    if isinstance(inst, Graph):
        inst = FscInstance(inst)
    g = inst.graph
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    lines += [f"tri {v}" for v in sorted(inst.forced_one)]
    lines += [f"sq {v}" for v in sorted(inst.forced_two)]
    lines += [f"pair {a} {b}" for a, b in sorted(inst.pairs)]
    return "\n".join(lines) + "\n"


def parse_mmo_file(text: str) -> MmoInstance:
    n: Optional[int] = None
    m = 0
    r: Optional[int] = None
    edges = []
    for lineno, col, fields in _directives(text):
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise FormatError("duplicate header", lineno, col)
            n, m = _ints(fields, 2, lineno, col)
        elif n is None:
            raise FormatError("missing 'p <n> <m>' header before first directive", lineno, col)
        elif kind == "e":
            u, v, w = _ints(fields, 3, lineno, col)
            for x in (u, v):
                _check_vertex(x, n, lineno, col)
            edges.append((u, v, w))
        elif kind == "r":
            if r is not None:
                raise FormatError("duplicate threshold line", lineno, col)
            (r,) = _ints(fields, 1, lineno, col)
        else:
            raise FormatError(f"unknown directive {kind!r}", lineno, col)
    if n is None or r is None:
        raise FormatError("MMO file needs a 'p' header and an 'r' line", 1)
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}", 1)
    return MmoInstance(n, tuple(edges), r)


def serialize_mmo(mmo: MmoInstance) -> str:
    lines = [f"p {mmo.n} {len(mmo.edges)}", f"r {mmo.r}"]
    lines += [f"e {u} {v} {w}" for u, v, w in mmo.edges]
    return "\n".join(lines) + "\n"


def parse_orientation(text: str) -> Orientation:
    arcs = []
    for lineno, col, fields in _directives(text):
        if fields[0] != "a":
            raise FormatError(f"unknown directive {fields[0]!r}", lineno, col)
        tail, head = _ints(fields, 2, lineno, col)
        arcs.append((tail, head))
    return Orientation(tuple(arcs))


def serialize_orientation(o: Orientation) -> str:
    return "".join(f"a {t} {h}\n" for t, h in o.arcs)


def witness_dict(p: Partition) -> dict:
    return {"V1": sorted(p.v1), "V2": sorted(p.v2)}


def partition_from_json(text: str, n: int) -> Partition:
    """Accept ``{"V1": [...], "V2": [...]}`` or a solve report carrying a ``witness``."""
    data = json.loads(text)
    if "witness" in data:
        data = data["witness"]
    if data is None:
        raise InputError("report carries no witness")
    return Partition.from_sides(n, data["V1"], data["V2"])
