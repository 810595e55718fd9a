"""Gadget reductions: Minimum Maximum Outdegree -> SP with forced sides and
complementary pairs (FSC) -> SP with forced sides only (FS).

Gadget vertices get structured names.  For an MMO edge ``(u, v)`` of
weight ``w`` and ``1 <= i <= w``:

* ``("h", v, i)``            pendant ``h_i`` of original vertex ``v`` (``i <= 2r``)
* ``("x", a, b, i)``         ``a_i^b``, attached to ``a``
* ``("xp", a, b, i)``        ``a'_i^b``, matched to ``a_i^b``
* ``("xs", a, b, i)``        boxed copy of ``a_i^b`` (forced to V2)
* ``("xps", a, b, i)``       boxed copy of ``a'_i^b`` (forced to V2)

where ``(a, b)`` is ``(u, v)`` or ``(v, u)``.  The pair gadget adds
``("tri", a, b)`` and ``("sq", a, b)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .graph import FscInstance, Graph, InputError, Partition, Side, is_valid_fsc_solution

MAX_WEIGHT = 64
Name = tuple


@dataclass(frozen=True)
class MmoInstance:
    """Edge-weighted graph plus outdegree threshold ``r``.

    ``edges`` keeps the caller's order ``(u, v, weight)``; it fixes gadget numbering.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"threshold r must be a positive integer, got {self.r}")
        for u, v, w in self.edges:
            if not 1 <= w <= MAX_WEIGHT:
                raise InputError(f"weight {w} on ({u}, {v}) outside 1..{MAX_WEIGHT}")
        # validates range, loops and duplicates
        Graph.from_edges(self.n, [(u, v) for u, v, _ in self.edges])

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, [(u, v) for u, v, _ in self.edges])

    def weight(self, u: int, v: int) -> int:
        for a, b, w in self.edges:
            if {a, b} == {u, v}:
                return w
        raise KeyError((u, v))


@dataclass(frozen=True)
class Orientation:
    """One ``(tail, head)`` arc per edge."""

    arcs: tuple[tuple[int, int], ...]

    def out_weights(self, m: MmoInstance) -> list[int]:
        out = [0] * m.n
        for tail, head in self.arcs:
            out[tail] += m.weight(tail, head)
        return out


@dataclass
class ReductionMap:
    """Gadget names <-> vertex ids; ids below ``n_original`` are untouched originals."""

    n_original: int
    names: dict[Name, int] = field(default_factory=dict)

    def add(self, name: Name, vid: int) -> int:
        if name in self.names:
            raise AssertionError(f"duplicate gadget name {name}")
        self.names[name] = vid
        return vid

    def __getitem__(self, name: Name) -> int:
        return self.names[name]

    @property
    def inverse(self) -> dict[int, Name]:
        return {v: k for k, v in self.names.items()}

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "n_original": self.n_original,
            "names": {":".join(map(str, k)): v for k, v in sorted(self.names.items(), key=lambda kv: kv[1])},
        }, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "ReductionMap":
        data = json.loads(text)
        if data.get("schema") != 1:
            raise InputError("unsupported name-table schema")

        def parse(key: str) -> Name:
            kind, *idx = key.split(":")
            return (kind, *map(int, idx))

        return cls(data["n_original"], {parse(k): int(v) for k, v in data["names"].items()})


def check_orientation(m: MmoInstance, o: Orientation) -> bool:
    """True iff every vertex has weighted outdegree at most ``m.r``."""
    want = sorted((min(u, v), max(u, v)) for u, v, _ in m.edges)
    got = sorted((min(t, h), max(t, h)) for t, h in o.arcs)
    if want != got:
        raise InputError("orientation must orient every instance edge exactly once")
    return all(w <= m.r for w in o.out_weights(m))


def enumerate_orientations(m: MmoInstance) -> Iterator[Orientation]:
    """All 2^|E| orientations; bit ``k`` set reverses the ``k``-th edge to ``v -> u``."""
    for mask in range(1 << len(m.edges)):
        yield Orientation(tuple((v, u) if mask >> k & 1 else (u, v)
                                for k, (u, v, _) in enumerate(m.edges)))


def find_orientation(m: MmoInstance):
    return next((o for o in enumerate_orientations(m) if check_orientation(m, o)), None)


_GADGET_KINDS = ("x", "xp", "xs", "xps")


def reduce_mmo_to_fsc(m: MmoInstance) -> tuple[FscInstance, ReductionMap]:
    rmap = ReductionMap(m.n)
    next_id = m.n
    edges: list[tuple[int, int]] = []
    pairs: list[tuple[int, int]] = []
    forced_one = set(range(m.n))
    forced_two = set()

    for v in range(m.n):
        for i in range(1, 2 * m.r + 1):
            h = rmap.add(("h", v, i), next_id)
            next_id += 1
            edges.append((v, h))
            forced_one.add(h)

    for u, v, w in m.edges:
        for a, b in ((u, v), (v, u)):
            for kind in _GADGET_KINDS:
                for i in range(1, w + 1):
                    rmap.add((kind, a, b, i), next_id)
                    next_id += 1
        for a, b in ((u, v), (v, u)):
            for i in range(1, w + 1):
                x, xp = rmap["x", a, b, i], rmap["xp", a, b, i]
                xs, xps = rmap["xs", a, b, i], rmap["xps", a, b, i]
                edges += [(a, x), (a, xs), (x, xp), (xs, xps)]
                forced_two.update((xs, xps))

        for i in range(1, w + 1):
            pairs.append((rmap["xp", u, v, i], rmap["xp", v, u, i]))
            if i < w:
                # the (i+1, i) family stops at w-1: index w+1 does not exist
                pairs.append((rmap["xp", u, v, i + 1], rmap["xp", v, u, i]))
            pairs.append((rmap["x", u, v, i], rmap["xp", v, u, i]))
            pairs.append((rmap["xp", u, v, i], rmap["x", v, u, i]))

    inst = FscInstance(Graph.from_edges(next_id, edges), frozenset(forced_one),
                       frozenset(forced_two), frozenset(pairs))
    return inst, rmap


def orientation_to_partition(m: MmoInstance, o: Orientation, rmap: ReductionMap,
                             reduced: FscInstance | None = None) -> Partition:
    """V1 = forced-V1 vertices plus, for each arc ``tail -> head``, the head's unboxed gadget copies."""
    if not check_orientation(m, o):
        raise InputError("orientation exceeds the outdegree threshold")
    if reduced is None:
        reduced, _ = reduce_mmo_to_fsc(m)
    ones = set(range(m.n))
    ones.update(vid for name, vid in rmap.names.items() if name[0] == "h")
    for tail, head in o.arcs:
        for i in range(1, m.weight(tail, head) + 1):
            ones.add(rmap["x", head, tail, i])
            ones.add(rmap["xp", head, tail, i])
    p = Partition.from_sets(reduced.graph.n, ones)
    assert is_valid_fsc_solution(reduced, p), "constructed partition is not a valid FSC solution"
    return p


def partition_to_orientation(m: MmoInstance, rmap: ReductionMap, p: Partition,
                             reduced: FscInstance | None = None) -> Orientation:
    """Orient ``u -> v`` exactly when ``v``'s unboxed copies for the edge lie in V1."""
    if reduced is None:
        reduced, _ = reduce_mmo_to_fsc(m)
    if not is_valid_fsc_solution(reduced, p):
        raise InputError("partition is not a valid solution of the reduced instance")

    def in_v1(a, b, w):
        return all(p.side[rmap[kind, a, b, i]] is Side.ONE
                   for kind in ("x", "xp") for i in range(1, w + 1))

    arcs = []
    for u, v, w in m.edges:
        if in_v1(v, u, w):
            arcs.append((u, v))
        elif in_v1(u, v, w):
            arcs.append((v, u))
        else:
            raise AssertionError(f"edge ({u}, {v}) has no gadget side fully in V1")
    o = Orientation(tuple(arcs))
    assert check_orientation(m, o), "extracted orientation exceeds the threshold"
    return o


def reduce_fsc_to_fs(inst: FscInstance) -> tuple[FscInstance, ReductionMap]:
    """Replace each pair ``(a, b)`` by a forced-V1 and a forced-V2 vertex both adjacent to a and b."""
    n = inst.graph.n
    rmap = ReductionMap(n)
    edges = list(inst.graph.edges())
    forced_one, forced_two = set(inst.forced_one), set(inst.forced_two)
    next_id = n
    for a, b in sorted(inst.pairs):
        tri = rmap.add(("tri", a, b), next_id)
        sq = rmap.add(("sq", a, b), next_id + 1)
        next_id += 2
        edges += [(a, tri), (b, tri), (a, sq), (b, sq)]
        forced_one.add(tri)
        forced_two.add(sq)
    fs = FscInstance(Graph.from_edges(next_id, edges), frozenset(forced_one), frozenset(forced_two))
    return fs, rmap


def project_fsc_solution(fsc: FscInstance, fs: FscInstance, p_fs: Partition) -> Partition:
    """Restrict an FS solution to the original vertices, giving an FSC solution."""
    if not is_valid_fsc_solution(fs, p_fs):
        raise InputError("partition is not a valid FS solution")
    p = p_fs.restrict(fsc.graph.n)
    assert is_valid_fsc_solution(fsc, p)
    return p


def lift_fs_solution(fsc: FscInstance, fs: FscInstance, rmap: ReductionMap, p: Partition) -> Partition:
    """Extend an FSC solution with every triangle vertex in V1 and every square vertex in V2."""
    if not is_valid_fsc_solution(fsc, p):
        raise InputError("partition is not a valid FSC solution")
    ones = set(p.v1) | {vid for name, vid in rmap.names.items() if name[0] == "tri"}
    lifted = Partition.from_sets(fs.graph.n, ones)
    assert is_valid_fsc_solution(fs, lifted)
    return lifted


def weighted_triangle_instance() -> MmoInstance:
    """Triangle a=0, b=1, c=2 with w(a,b)=1, w(b,c)=2, w(c,a)=2 and r=2."""
    return MmoInstance(3, ((0, 1, 1), (1, 2, 2), (2, 0, 2)), 2)


def weighted_triangle_orientation() -> Orientation:
    """a -> b, b -> c, c -> a: weighted outdegrees 1, 2, 2."""
    return Orientation(((0, 1), (1, 2), (2, 0)))


def primal_edges(inst: FscInstance) -> set[tuple[int, int]]:
    return set(inst.graph.edges()) | set(inst.pairs)

