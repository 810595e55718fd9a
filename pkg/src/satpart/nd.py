"""Satisfactory partition parameterized by neighbourhood diversity.

Vertices are grouped into type classes (same neighbourhood up to each
other).  For every guess of which classes lie wholly in V1 (I1), wholly in
V2 (I2) or are split (I3), the satisfaction conditions become a linear
system over ``x_i = |V1 ∩ C_i|``; a feasible integer point yields a witness.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, Partition, is_balanced, is_satisfactory
from .ilp import EQ, GE, Constraint, IlpSystem, solve_ilp_feasibility


class ClassKind(enum.Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"
    SINGLETON = "singleton"


class Place(enum.IntEnum):
    I1 = 1
    I2 = 2
    I3 = 3


@dataclass(frozen=True)
class NdDecomposition:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[ClassKind, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def is_clique_kind(self, i: int) -> bool:
        # singletons cannot be split and use the closed-neighbourhood rows
        return self.kinds[i] is not ClassKind.INDEPENDENT


@dataclass(frozen=True)
class TypeGraph:
    k: int
    adjacency: tuple[frozenset[int], ...]
    is_clique: tuple[bool, ...]

    def open_nbhd(self, j: int) -> frozenset[int]:
        return self.adjacency[j]

    def closed_nbhd(self, j: int) -> frozenset[int]:
        return self.adjacency[j] | {j}


Guess = tuple[Place, ...]


def same_type(g: Graph, u: int, v: int) -> bool:
    return g._nbr_sets[u] - {v} == g._nbr_sets[v] - {u}


def compute_type_classes(g: Graph) -> NdDecomposition:
    """Exact type partition; classes ordered by their smallest vertex."""
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            if same_type(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    kinds = []
    for cls in classes:
        if len(cls) == 1:
            kinds.append(ClassKind.SINGLETON)
        elif g.has_edge(cls[0], cls[1]):
            kinds.append(ClassKind.CLIQUE)
        else:
            kinds.append(ClassKind.INDEPENDENT)
    return NdDecomposition(tuple(tuple(c) for c in classes), tuple(kinds))


def build_type_graph(g: Graph, d: NdDecomposition) -> TypeGraph:
    adj: list[set[int]] = [set() for _ in range(d.k)]
    for i, j in itertools.combinations(range(d.k), 2):
        links = {g.has_edge(u, v) for u in d.classes[i] for v in d.classes[j]}
        if len(links) != 1:
            raise AssertionError(f"type classes {i} and {j} are partially joined")
        if links.pop():
            adj[i].add(j)
            adj[j].add(i)
    for i, cls in enumerate(d.classes):
        want = d.kinds[i] is ClassKind.CLIQUE
        if any(g.has_edge(u, v) != want for u, v in itertools.combinations(cls, 2)):
            raise AssertionError(f"type class {i} is neither a clique nor independent")
    return TypeGraph(d.k, tuple(frozenset(a) for a in adj),
                     tuple(kind is ClassKind.CLIQUE for kind in d.kinds))


def enumerate_guesses(d: NdDecomposition) -> Iterator[Guess]:
    """All admissible placements in mixed-radix order, class 0 varying fastest.

    The all-I1 and all-I2 placements are dropped since they only describe
    the trivial partition.
    """
    options = [(Place.I1, Place.I2) if d.is_clique_kind(i) else (Place.I1, Place.I2, Place.I3)
               for i in range(d.k)]
    # itertools.product varies the last factor fastest, so feed it reversed
    for combo in itertools.product(*reversed(options)):
        guess = tuple(reversed(combo))
        if all(p is Place.I1 for p in guess) or all(p is Place.I2 for p in guess):
            continue
        yield guess


def build_ilp(d: NdDecomposition, h: TypeGraph, guess: Guess, balanced: bool = False) -> IlpSystem:
    k, n = d.k, d.sizes
    lower = tuple(n[i] if p is Place.I1 else (1 if p is Place.I3 else 0) for i, p in enumerate(guess))
    upper = tuple(n[i] if p is Place.I1 else (n[i] - 1 if p is Place.I3 else 0) for i, p in enumerate(guess))

    def total(classes, place):
        return sum(n[i] for i in classes if guess[i] is place)

    def x_terms(classes, coef):
        row = [0] * k
        for i in classes:
            if guess[i] is Place.I3:
                row[i] = coef
        return tuple(row)

    rows = []
    for j in range(k):
        place = guess[j]
        opn = h.open_nbhd(j)
        if d.is_clique_kind(j):
            cls = h.closed_nbhd(j)
            if place is Place.I1:
                rhs = 1 + total(opn, Place.I2) + total(cls, Place.I3) - total(cls, Place.I1)
                rows.append(Constraint(x_terms(cls, 2), GE, rhs, f"clique-in-V1:{j}"))
            elif place is Place.I2:
                rhs = 1 + total(opn, Place.I1) - total(cls, Place.I2) - total(cls, Place.I3)
                rows.append(Constraint(x_terms(cls, -2), GE, rhs, f"clique-in-V2:{j}"))
            else:
                raise ValueError(f"clique-kind class {j} cannot be split")
        else:
            balance = total(opn, Place.I2) + total(opn, Place.I3) - total(opn, Place.I1)
            if place is Place.I1:
                rows.append(Constraint(x_terms(opn, 2), GE, balance, f"independent-in-V1:{j}"))
            elif place is Place.I2:
                rows.append(Constraint(x_terms(opn, -2), GE, -balance, f"independent-in-V2:{j}"))
            else:
                rows.append(Constraint(x_terms(opn, 2), EQ, balance, f"independent-split:{j}"))

    everything = range(k)
    rows.append(Constraint(x_terms(everything, 1), GE, 1 - total(everything, Place.I1), "nonempty-V1"))
    rows.append(Constraint(x_terms(everything, -1), GE,
                           1 - total(everything, Place.I2) - total(everything, Place.I3), "nonempty-V2"))
    if balanced:
        rhs = total(everything, Place.I3) + total(everything, Place.I2) - total(everything, Place.I1)
        rows.append(Constraint(x_terms(everything, 2), EQ, rhs, "balanced"))
    return IlpSystem(lower, upper, tuple(rows))


def materialize(d: NdDecomposition, x: list[int]) -> Partition:
    """V1 takes the ``x[i]`` lowest-numbered vertices of every class."""
    n = sum(d.sizes)
    return Partition.from_sets(n, (v for cls, xi in zip(d.classes, x) for v in cls[:xi]))


def solve_nd(g: Graph, balanced: bool = False, stats: Optional[dict] = None) -> Optional[Partition]:
    stats = {} if stats is None else stats
    stats.update(guesses_tried=0, ilp_nodes=0)
    if g.n < 2 or (balanced and g.n % 2):
        return None
    if not balanced:
        comps = g.components()
        if len(comps) >= 2:
            stats["shortcut"] = "disconnected"
            witness = Partition.from_sets(g.n, comps[0])
            assert is_satisfactory(g, witness)
            return witness

    d = compute_type_classes(g)
    h = build_type_graph(g, d)
    stats["nd"] = d.k
    for guess in enumerate_guesses(d):
        stats["guesses_tried"] += 1
        x = solve_ilp_feasibility(build_ilp(d, h, guess, balanced), stats)
        if x is None:
            continue
        witness = materialize(d, x)
        assert is_satisfactory(g, witness), "feasible system produced an unsatisfactory partition"
        assert not balanced or is_balanced(witness)
        return witness
    return None
