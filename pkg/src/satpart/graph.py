"""Graph model, satisfaction checks and named graph families."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed or inconsistent user input."""


class CapacityError(RuntimeError):
    """Instance exceeds a configured solver capacity."""


class Side(enum.IntEnum):
    ONE = 1
    TWO = 2

    @property
    def other(self) -> "Side":
        return Side.TWO if self is Side.ONE else Side.ONE


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adjacency) != self.n:
            raise InputError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InputError(f"neighbours of {v} not sorted/unique")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self._nbr_sets[u]:
                    raise InputError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = True) -> "Graph":
        """Build a graph; with ``strict`` duplicate edges raise instead of merging."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            if v in nbrs[u]:
                if strict:
                    raise InputError(f"duplicate edge ({u}, {v})")
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def _nbr_sets(self) -> tuple[frozenset[int], ...]:
        cached = self.__dict__.get("_sets")
        if cached is None:
            cached = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_sets", cached)
        return cached

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def neighbours(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degree_into(self, v: int, subset) -> int:
        """Number of neighbours of ``v`` inside ``subset``."""
        self._check_vertex(v)
        return sum(1 for u in self.adjacency[v] if u in subset)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class Partition:
    """Two-sided vertex assignment; ``side[v]`` is ``Side.ONE`` or ``Side.TWO``."""

    side: tuple[Side, ...]

    @classmethod
    def from_sets(cls, n: int, v1: Iterable[int]) -> "Partition":
        ones = set(v1)
        if any(not 0 <= v < n for v in ones):
            raise InputError("partition vertex out of range")
        return cls(tuple(Side.ONE if v in ones else Side.TWO for v in range(n)))

    @classmethod
    def from_sides(cls, n: int, v1: Iterable[int], v2: Iterable[int]) -> "Partition":
        """Build from explicit side lists; both lists together must cover ``0..n-1`` once."""
        v1, v2 = list(v1), list(v2)
        if sorted(v1 + v2) != list(range(n)):
            raise InputError("V1 and V2 must partition the vertex set exactly")
        return cls.from_sets(n, v1)

    @property
    def n(self) -> int:
        return len(self.side)

    @property
    def v1(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s is Side.ONE]

    @property
    def v2(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s is Side.TWO]

    def is_nontrivial(self) -> bool:
        return Side.ONE in self.side and Side.TWO in self.side

    def swapped(self) -> "Partition":
        return Partition(tuple(s.other for s in self.side))

    def restrict(self, n: int) -> "Partition":
        return Partition(self.side[:n])


@dataclass(frozen=True)
class FscInstance:
    """Satisfactory partition with forced sides and complementary pairs.

    With ``pairs`` empty this is the forced-side (FS) variant; with
    everything empty it is plain satisfactory partition.
    """

    graph: Graph
    forced_one: frozenset[int] = field(default_factory=frozenset)
    forced_two: frozenset[int] = field(default_factory=frozenset)
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.graph.n
        object.__setattr__(self, "forced_one", frozenset(self.forced_one))
        object.__setattr__(self, "forced_two", frozenset(self.forced_two))
        normalized = set()
        for a, b in self.pairs:
            if a == b:
                raise InputError(f"complementary pair ({a}, {b}) has equal endpoints")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "pairs", frozenset(normalized))
        for v in (*self.forced_one, *self.forced_two, *(x for p in self.pairs for x in p)):
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range for n={n}")
        if self.forced_one & self.forced_two:
            raise InputError("forced_one and forced_two overlap")

    @property
    def is_plain(self) -> bool:
        return not (self.forced_one or self.forced_two or self.pairs)

    def primal_graph(self) -> Graph:
        """The instance graph with every complementary pair added as an edge."""
        return Graph.from_edges(self.graph.n, [*self.graph.edges(), *self.pairs], strict=False)


def _check_partition(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise InputError(f"partition covers {p.n} vertices, graph has {g.n}")


def satisfied(g: Graph, p: Partition, v: int) -> bool:
    """True iff ``v`` has at least as many neighbours on its own side as on the other."""
    _check_partition(g, p)
    g._check_vertex(v)
    own = p.side[v]
    same = sum(1 for u in g.adjacency[v] if p.side[u] is own)
    return same >= len(g.adjacency[v]) - same


def is_satisfactory(g: Graph, p: Partition, require_nontrivial: bool = True) -> bool:
    _check_partition(g, p)
    if require_nontrivial and not p.is_nontrivial():
        return False
    return all(satisfied(g, p, v) for v in range(g.n))


def is_valid_fsc_solution(inst: FscInstance, p: Partition) -> bool:
    if not is_satisfactory(inst.graph, p, require_nontrivial=True):
        return False
    if any(p.side[v] is not Side.ONE for v in inst.forced_one):
        return False
    if any(p.side[v] is not Side.TWO for v in inst.forced_two):
        return False
    return all((p.side[a] is Side.ONE) != (p.side[b] is Side.ONE) for a, b in inst.pairs)


def is_balanced(p: Partition) -> bool:
    return len(p.v1) == len(p.v2)


class Family(str, enum.Enum):
    COMPLETE = "complete"
    STAR = "star"
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"


def generate_family(family: Family | str, params: Sequence[int]) -> Graph:
    """Build a named graph family.

    Numbering:
      * COMPLETE [n]: vertices 0..n-1.
      * STAR [m]: centre 0, leaves 1..m (K_{1,m}).
      * CYCLE [n] / PATH [n]: consecutive vertices adjacent, cycle closes n-1 to 0.
      * COMPLETE_BIPARTITE [a, b] and COMPLETE_MULTIPARTITE [a, b, ...]:
        parts are consecutive id blocks in the given order.
    """
    family = Family(family)
    if not params:
        raise InputError("family parameters must be non-empty")
    if any(int(s) < 1 for s in params):
        raise InputError("family sizes must be positive")
    params = [int(s) for s in params]
    if family in (Family.COMPLETE, Family.STAR, Family.CYCLE, Family.PATH) and len(params) != 1:
        raise InputError(f"{family.value} takes exactly one size")
    if family is Family.COMPLETE_BIPARTITE and len(params) != 2:
        raise InputError("complete_bipartite takes exactly two sizes")

    if family is Family.COMPLETE:
        return _multipartite([1] * params[0])
    if family is Family.STAR:
        return _multipartite([1, params[0]])
    if family is Family.PATH:
        n = params[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family is Family.CYCLE:
        n = params[0]
        if n < 3:
            raise InputError("cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return _multipartite(params)


def _multipartite(sizes: Sequence[int]) -> Graph:
    blocks, start = [], 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = [(u, v) for i, a in enumerate(blocks) for b in blocks[i + 1:] for u in a for v in b]
    return Graph.from_edges(start, edges)

