"""Exact feasibility for small integer linear systems with box bounds.

Depth-first search over the variables in index order (lower value first),
with bound propagation at every node.  Exact: returns ``None`` only when
no integer point exists.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

GE = ">="
EQ = "=="


@dataclass(frozen=True)
class Constraint:
    """``sum(coeffs[i] * x[i]) REL rhs`` with ``REL`` one of ``>=``, ``==``."""

    coeffs: tuple[int, ...]
    rel: str
    rhs: int
    tag: str = ""

    def holds(self, x: Sequence[int]) -> bool:
        lhs = sum(a * v for a, v in zip(self.coeffs, x))
        return lhs >= self.rhs if self.rel == GE else lhs == self.rhs


@dataclass(frozen=True)
class IlpSystem:
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    constraints: tuple[Constraint, ...] = field(default_factory=tuple)

    @property
    def nvars(self) -> int:
        return len(self.lower)

    def is_feasible_point(self, x: Sequence[int]) -> bool:
        if any(not lo <= v <= hi for lo, v, hi in zip(self.lower, x, self.upper)):
            return False
        return all(c.holds(x) for c in self.constraints)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _as_ge_rows(constraints):
    rows = []
    for c in constraints:
        terms = tuple((i, a) for i, a in enumerate(c.coeffs) if a)
        rows.append((terms, c.rhs))
        if c.rel == EQ:
            rows.append((tuple((i, -a) for i, a in terms), -c.rhs))
        elif c.rel != GE:
            raise ValueError(f"unknown relation {c.rel!r}")
    return rows


def _propagate(rows, lo: list[int], hi: list[int]) -> bool:
    """Tighten ``lo``/``hi`` in place; False when some row became unsatisfiable."""
    changed = True
    while changed:
        changed = False
        for terms, rhs in rows:
            max_lhs = sum(a * (hi[i] if a > 0 else lo[i]) for i, a in terms)
            if max_lhs < rhs:
                return False
            for i, a in terms:
                rest = max_lhs - a * (hi[i] if a > 0 else lo[i])
                need = rhs - rest
                if a > 0:
                    bound = _ceil_div(need, a)
                    if bound > lo[i]:
                        lo[i] = bound
                        changed = True
                else:
                    bound = need // a
                    if bound < hi[i]:
                        hi[i] = bound
                        changed = True
                if lo[i] > hi[i]:
                    return False
    return True


def solve_ilp_feasibility(sys: IlpSystem, stats: Optional[dict] = None) -> Optional[list[int]]:
    """Return an integer point satisfying ``sys`` or ``None``."""
    rows = _as_ge_rows(sys.constraints)
    nodes = 0

    def search(lo: list[int], hi: list[int], depth: int) -> Optional[list[int]]:
        nonlocal nodes
        nodes += 1
        if not _propagate(rows, lo, hi):
            return None
        while depth < len(lo) and lo[depth] == hi[depth]:
            depth += 1
        if depth == len(lo):
            return list(lo)
        for value in range(lo[depth], hi[depth] + 1):
            child_lo, child_hi = list(lo), list(hi)
            child_lo[depth] = child_hi[depth] = value
            found = search(child_lo, child_hi, depth + 1)
            if found is not None:
                return found
        return None

    lo, hi = list(sys.lower), list(sys.upper)
    result = None
    if all(a <= b for a, b in zip(lo, hi)):
        result = search(lo, hi, 0)
    if stats is not None:
        stats["ilp_nodes"] = stats.get("ilp_nodes", 0) + nodes
    if result is not None:
        assert sys.is_feasible_point(result)
    return result
