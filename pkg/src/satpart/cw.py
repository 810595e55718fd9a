"""Dynamic program over an irredundant c-expression.

For a node ``t`` and a split ``(S, S̄)`` of its vertices, a key records per
label ``i``: how many i-vertices lie in S (``r``) and in S̄ (``rbar``), and
the smallest surplus (own-side minus other-side neighbours) over the
i-vertices of S (``s``) and of S̄ (``sbar``).  An empty group has surplus
``TOP``.  Tables are sparse: a dict from every realizable key to one
provenance record used for witness reconstruction.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .cexpr import CExpr, Leaf, Relabel, Union, eval_cexpr, make_irredundant, postorder
from .graph import Partition, Side, is_balanced, is_satisfactory

TOP = math.inf


class DpKey(NamedTuple):
    r: tuple[int, ...]
    rbar: tuple[int, ...]
    s: tuple[float, ...]
    sbar: tuple[float, ...]

    def mirrored(self) -> "DpKey":
        return DpKey(self.rbar, self.r, self.sbar, self.s)

    def check(self, size: int) -> None:
        for cnt, sur in ((self.r, self.s), (self.rbar, self.sbar)):
            for ri, si in zip(cnt, sur):
                assert (ri == 0) == (si == TOP), self
        assert sum(self.r) + sum(self.rbar) == size, self


DpTable = dict  # DpKey -> provenance


def _replace(t: tuple, idx: int, value) -> tuple:
    return t[:idx] + (value,) + t[idx + 1:]


def dp_leaf(i: int, c: int) -> DpTable:
    """Both keys of a single ``i``-vertex: it sits in S, or it sits in S̄."""
    zeros, tops = (0,) * c, (TOP,) * c
    k = i - 1
    in_s = DpKey(_replace(zeros, k, 1), zeros, _replace(tops, k, 0), tops)
    return {in_s: Side.ONE, in_s.mirrored(): Side.TWO}


def dp_union(tbl1: DpTable, tbl2: DpTable) -> DpTable:
    out: DpTable = {}
    for k1 in tbl1:
        for k2 in tbl2:
            key = DpKey(
                tuple(a + b for a, b in zip(k1.r, k2.r)),
                tuple(a + b for a, b in zip(k1.rbar, k2.rbar)),
                tuple(min(a, b) for a, b in zip(k1.s, k2.s)),
                tuple(min(a, b) for a, b in zip(k1.sbar, k2.sbar)),
            )
            if key not in out:
                out[key] = (k1, k2)
    return out


def dp_join(tbl: DpTable, i: int, j: int, size_i: int, size_j: int) -> DpTable:
    """Shift surpluses for the new complete i-j connection.

    Requires that no i-j edge exists yet (irredundant expression).
    """
    a, b = i - 1, j - 1
    out: DpTable = {}
    for key in tbl:
        if key.r[a] + key.rbar[a] != size_i or key.r[b] + key.rbar[b] != size_j:
            raise ValueError("label sizes inconsistent with the table")
        s, sbar = list(key.s), list(key.sbar)
        s[a] += 2 * key.r[b] - size_j
        s[b] += 2 * key.r[a] - size_i
        sbar[a] += 2 * key.rbar[b] - size_j
        sbar[b] += 2 * key.rbar[a] - size_i
        bound = sum(key.r) + sum(key.rbar) - 1
        for v in (s[a], s[b], sbar[a], sbar[b]):
            if v != TOP and not -bound <= v <= bound:
                raise AssertionError(f"surplus {v} outside ±{bound}; expression not irredundant?")
        new = DpKey(key.r, key.rbar, tuple(s), tuple(sbar))
        out.setdefault(new, key)
    return out


def dp_relabel(tbl: DpTable, i: int, j: int) -> DpTable:
    a, b = i - 1, j - 1
    out: DpTable = {}
    for key in tbl:
        r = _replace(_replace(key.r, b, key.r[a] + key.r[b]), a, 0)
        rbar = _replace(_replace(key.rbar, b, key.rbar[a] + key.rbar[b]), a, 0)
        s = _replace(_replace(key.s, b, min(key.s[a], key.s[b])), a, TOP)
        sbar = _replace(_replace(key.sbar, b, min(key.sbar[a], key.sbar[b])), a, TOP)
        out.setdefault(DpKey(r, rbar, s, sbar), key)
    return out


def run_dp(e: CExpr) -> dict[int, DpTable]:
    """Tables for every node of ``e`` (keyed by ``id(node)``); ``e`` must be irredundant."""
    tables: dict[int, DpTable] = {}
    label_sizes: dict[int, list[int]] = {}
    for nd in postorder(e.root):
        if isinstance(nd, Leaf):
            sizes = [0] * e.c
            sizes[nd.label - 1] = 1
            tbl = dp_leaf(nd.label, e.c)
        elif isinstance(nd, Union):
            sizes = [x + y for x, y in zip(label_sizes[id(nd.left)], label_sizes[id(nd.right)])]
            tbl = dp_union(tables[id(nd.left)], tables[id(nd.right)])
        elif isinstance(nd, Relabel):
            sizes = list(label_sizes[id(nd.child)])
            sizes[nd.dst - 1] += sizes[nd.src - 1]
            sizes[nd.src - 1] = 0
            tbl = dp_relabel(tables[id(nd.child)], nd.src, nd.dst)
        else:
            sizes = label_sizes[id(nd.child)]
            tbl = dp_join(tables[id(nd.child)], nd.a, nd.b, sizes[nd.a - 1], sizes[nd.b - 1])
        label_sizes[id(nd)] = sizes
        tables[id(nd)] = tbl
    return tables


def accepts(key: DpKey, balanced: bool = False) -> bool:
    """Root test: every finite surplus non-negative and both sides non-empty."""
    if any(v < 0 for v in key.s + key.sbar):
        return False
    if sum(key.r) < 1 or sum(key.rbar) < 1:
        return False
    return not balanced or sum(key.r) == sum(key.rbar)


def reconstruct(e: CExpr, tables: dict[int, DpTable], key: DpKey) -> Partition:
    leaf_ids = {id(nd): v for v, nd in enumerate(nd for nd in postorder(e.root) if isinstance(nd, Leaf))}
    side: dict[int, Side] = {}
    stack = [(e.root, key)]
    while stack:
        nd, k = stack.pop()
        prov = tables[id(nd)][k]
        if isinstance(nd, Leaf):
            side[leaf_ids[id(nd)]] = prov
        elif isinstance(nd, Union):
            stack.append((nd.left, prov[0]))
            stack.append((nd.right, prov[1]))
        else:
            stack.append((nd.child, prov))
    return Partition(tuple(side[v] for v in range(len(side))))


def solve_cw(e: CExpr, balanced: bool = False, stats: Optional[dict] = None) -> Optional[Partition]:
    e = make_irredundant(e)
    n = e.n
    stats = {} if stats is None else stats
    if n < 2 or (balanced and n % 2):
        stats.update(max_table=0, total_keys=0)
        return None
    tables = run_dp(e)
    stats.update(max_table=max(len(t) for t in tables.values()),
                 total_keys=sum(len(t) for t in tables.values()))
    for key in tables[id(e.root)]:
        if accepts(key, balanced):
            witness = reconstruct(e, tables, key)
            g = eval_cexpr(e).graph
            assert is_satisfactory(g, witness), "accepted key produced an unsatisfactory partition"
            assert not balanced or is_balanced(witness)
            return witness
    return None
