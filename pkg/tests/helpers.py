"""Independent oracles shared by the test modules."""
from __future__ import annotations

import random

from satpart.cexpr import CExpr, Join, Leaf, Relabel, Union, eval_cexpr, family_expr
from satpart.cw import DpKey, TOP


def enumerated_signatures(node, c: int) -> set[DpKey]:
    """All (r, rbar, s, sbar) signatures of every split of the node's vertices, by brute force."""
    lg = eval_cexpr(node)
    g, labels = lg.graph, lg.labels
    out = set()
    for mask in range(1 << g.n):
        in_s = [bool(mask >> v & 1) for v in range(g.n)]
        r, rbar = [0] * c, [0] * c
        s, sbar = [TOP] * c, [TOP] * c
        for v in range(g.n):
            own = sum(1 for u in g.adjacency[v] if in_s[u] == in_s[v])
            surplus = own - (g.degree(v) - own)
            k = labels[v] - 1
            if in_s[v]:
                r[k] += 1
                s[k] = min(s[k], surplus)
            else:
                rbar[k] += 1
                sbar[k] = min(sbar[k], surplus)
        out.add(DpKey(tuple(r), tuple(rbar), tuple(s), tuple(sbar)))
    return out


def key_count_bound(n: int, c: int) -> int:
    return (n + 1) ** (2 * c) * (2 * n + 1) ** (2 * c)


BUNDLED = (
    [("complete", [n]) for n in range(2, 9)]
    + [("star", [m]) for m in range(1, 8)]
    + [("cycle", [n]) for n in range(3, 11)]
    + [("path", [n]) for n in range(2, 11)]
    + [("complete_bipartite", [a, b]) for a in range(1, 6) for b in range(a, 11 - a)]
    + [("complete_multipartite", s) for s in ([1, 2, 3], [2, 2, 2], [1, 1, 2, 2], [3, 3, 3])]
)


def bundled_expressions(max_n: int = 10):
    for fam, params in BUNDLED:
        e = family_expr(fam, params)
        if e.n <= max_n:
            yield f"{fam}{params}", e


def random_cexpr(rng: random.Random, n: int, c: int, op_rate: float = 0.6) -> CExpr:
    """Random expression over ``n`` leaves; joins/relabels sprinkled in, repeats allowed."""
    pool = [Leaf(rng.randint(1, c)) for _ in range(n)]

    def decorate(nd):
        while rng.random() < op_rate:
            i, j = rng.sample(range(1, c + 1), 2)
            nd = Join(i, j, nd) if rng.random() < 0.6 else Relabel(i, j, nd)
        return nd

    pool = [decorate(nd) for nd in pool]
    while len(pool) > 1:
        a = pool.pop(rng.randrange(len(pool)))
        b = pool.pop(rng.randrange(len(pool)))
        pool.append(decorate(Union(a, b)))
    return CExpr(pool[0], c)



def consistent_partitions(inst):
    """Every partition honouring the forced sets and the exactly-one pair rule.

    Pairs are 2-coloured component by component; each free component
    contributes two colourings, each unconstrained free vertex two sides.
    """
    from itertools import product

    from satpart.graph import Partition, Side

    n = inst.graph.n
    adj = {v: [] for v in range(n)}
    for a, b in inst.pairs:
        adj[a].append(b)
        adj[b].append(a)
    fixed = {v: Side.ONE for v in inst.forced_one} | {v: Side.TWO for v in inst.forced_two}
    seen: dict[int, int] = {}
    comps = []
    for root in range(n):
        if root in seen:
            continue
        seen[root] = 0
        comp, stack = [root], [root]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen[u] = 1 - seen[v]
                    comp.append(u)
                    stack.append(u)
                elif seen[u] == seen[v]:
                    return []
        comps.append(comp)
    options = []
    for comp in comps:
        opts = []
        for flip in (0, 1):
            sides = {v: Side.ONE if seen[v] ^ flip == 0 else Side.TWO for v in comp}
            if all(fixed.get(v, s) is s for v, s in sides.items()):
                opts.append(sides)
        if not opts:
            return []
        options.append(opts)
    out = []
    for choice in product(*options):
        side = {}
        for part in choice:
            side.update(part)
        out.append(Partition(tuple(side[v] for v in range(n))))
    return out
