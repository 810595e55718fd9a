"""Exhaustive solver used as ground truth for every other engine."""
from __future__ import annotations

import os
from typing import Optional

from .graph import CapacityError, FscInstance, Graph, Partition, Side, is_valid_fsc_solution

DEFAULT_CAP = 26
CAP_ENV = "SATPART_BRUTE_CAP"


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def brute_force(
    inst: FscInstance | Graph,
    balanced: bool = False,
    cap: Optional[int] = None,
    stats: Optional[dict] = None,
) -> Optional[Partition]:
    """Return the first valid partition in enumeration order, or ``None``.

    Forced vertices are placed directly.  The remaining ("free") vertices
    are driven by a binary counter whose bit ``i`` belongs to the ``i``-th
    smallest free vertex; a set bit puts the vertex on side TWO.  When the
    instance has no forced vertices and no pairs, vertex 0 is pinned to
    side ONE, which is harmless because the problem is side-symmetric.
    """
    if isinstance(inst, Graph):
        inst = FscInstance(inst)
    g = inst.graph
    n = g.n
    cap = default_cap() if cap is None else cap
    if n > cap:
        raise CapacityError(f"brute force capped at n={cap}, instance has n={n}")
    if stats is not None:
        stats["assignments_checked"] = 0
    if n < 2 or (balanced and n % 2):
        return None

    nbr = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    pairs = [(1 << a) | (1 << b) for a, b in inst.pairs]
    forced_two = sum(1 << v for v in inst.forced_two)
    forced = inst.forced_one | inst.forced_two
    if inst.is_plain:
        forced = frozenset({0})
    free = [v for v in range(n) if v not in forced]
    full = (1 << n) - 1

    checked = 0
    for counter in range(1 << len(free)):
        checked += 1
        two = 0
        c, i = counter, 0
        while c:
            if c & 1:
                two |= 1 << free[i]
            c >>= 1
            i += 1
        ones = full & ~(two | forced_two)
        if ones == 0 or ones == full:
            continue
        if balanced and 2 * ones.bit_count() != n:
            continue
        if any((ones & pm).bit_count() != 1 for pm in pairs):
            continue
        if _all_satisfied(nbr, ones, full):
            if stats is not None:
                stats["assignments_checked"] = checked
            witness = Partition(tuple(Side.ONE if ones >> v & 1 else Side.TWO for v in range(n)))
            assert is_valid_fsc_solution(inst, witness)
            return witness
    if stats is not None:
        stats["assignments_checked"] = checked
    return None


def _all_satisfied(nbr: list[int], ones: int, full: int) -> bool:
    twos = full & ~ones
    for v, nb in enumerate(nbr):
        own = ones if ones >> v & 1 else twos
        if 2 * (nb & own).bit_count() < nb.bit_count():
            return False
    return True
