"""Runtime of the type-class solver as n grows with the number of classes fixed.

Each vertex of a small base graph is blown up into a clique or an
independent set of size ``scale``; the number of type classes stays at the
base size while n grows linearly.

    python3 scripts/nd_scaling.py --base path --scales 1 2 5 10 25 50
"""
import argparse
import itertools
import time
from dataclasses import dataclass, field

from satpart.graph import CapacityError, Graph, generate_family, is_satisfactory
from satpart.nd import compute_type_classes, solve_nd
from satpart.oracle import brute_force


@dataclass
class ScalingConfig:
    base: str = "path"
    base_size: int = 4
    scales: list[int] = field(default_factory=lambda: [1, 2, 5, 10, 25, 50])
    clique_blocks: bool = False   # independent blocks keep the classes splittable
    balanced: bool = False
    brute_cap: int = 20


def blow_up(base: Graph, scale: int, clique_blocks: bool) -> Graph:
    blocks = [list(range(v * scale, (v + 1) * scale)) for v in range(base.n)]
    edges = []
    if clique_blocks:
        for block in blocks:
            edges += itertools.combinations(block, 2)
    for u, v in base.edges():
        edges += itertools.product(blocks[u], blocks[v])
    return Graph.from_edges(base.n * scale, edges)


def run(cfg: ScalingConfig) -> list[dict]:
    base = generate_family(cfg.base, [cfg.base_size])
    rows = []
    for scale in cfg.scales:
        g = blow_up(base, scale, cfg.clique_blocks)
        stats: dict = {}
        t0 = time.perf_counter()
        w = solve_nd(g, cfg.balanced, stats)
        nd_time = time.perf_counter() - t0
        assert w is None or is_satisfactory(g, w)
        brute_time = None
        try:
            t0 = time.perf_counter()
            b = brute_force(g, cfg.balanced, cap=cfg.brute_cap)
            brute_time = time.perf_counter() - t0
            assert (b is None) == (w is None)
        except CapacityError:
            pass
        rows.append(dict(n=g.n, nd=compute_type_classes(g).k, answer="YES" if w else "NO",
                         nd_s=nd_time, ilp_nodes=stats["ilp_nodes"], brute_s=brute_time))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base", default="path", choices=["path", "cycle", "star", "complete"])
    ap.add_argument("--base-size", type=int, default=4)
    ap.add_argument("--scales", type=int, nargs="+", default=[1, 2, 5, 10, 25, 50])
    ap.add_argument("--clique-blocks", action="store_true")
    ap.add_argument("--balanced", action="store_true")
    ap.add_argument("--brute-cap", type=int, default=20)
    args = ap.parse_args()
    cfg = ScalingConfig(args.base, args.base_size, args.scales, args.clique_blocks,
                        args.balanced, args.brute_cap)
    print(f"{'n':>5} {'nd':>3} {'answer':>6} {'nd solver':>11} {'ilp nodes':>9} {'brute force':>12}")
    for row in run(cfg):
        brute = f"{row['brute_s'] * 1e3:10.1f}ms" if row["brute_s"] is not None else f"{'over cap':>12}"
        print(f"{row['n']:>5} {row['nd']:>3} {row['answer']:>6} {row['nd_s'] * 1e3:9.1f}ms "
              f"{row['ilp_nodes']:>9} {brute}")


if __name__ == "__main__":
    main()
