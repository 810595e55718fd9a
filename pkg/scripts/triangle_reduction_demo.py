"""Walk the weighted-triangle outdegree instance through both gadget reductions.

    python3 scripts/triangle_reduction_demo.py
"""
from satpart.graph import is_valid_fsc_solution
from satpart.reductions import (check_orientation, enumerate_orientations, weighted_triangle_instance,
                                weighted_triangle_orientation, lift_fs_solution, orientation_to_partition,
                                partition_to_orientation, reduce_fsc_to_fs, reduce_mmo_to_fsc)


def main():
    m = weighted_triangle_instance()
    o = weighted_triangle_orientation()
    print(f"MMO instance: n={m.n}, edges={list(m.edges)}, r={m.r}")
    print(f"orientation {list(o.arcs)} -> weighted outdegrees {o.out_weights(m)}")
    valid = [x for x in enumerate_orientations(m) if check_orientation(m, x)]
    print(f"valid orientations: {len(valid)} of {2 ** len(m.edges)}")

    fsc, rmap = reduce_mmo_to_fsc(m)
    g = fsc.graph
    print(f"\nconstrained instance: {g.n} vertices, {g.m} edges, {len(fsc.pairs)} pairs, "
          f"{len(fsc.forced_one)} forced to V1, {len(fsc.forced_two)} forced to V2")
    p = orientation_to_partition(m, o, rmap, fsc)
    print(f"mapped partition: |V1|={len(p.v1)}, |V2|={len(p.v2)}, valid={is_valid_fsc_solution(fsc, p)}")
    inv = rmap.inverse
    red = sorted(inv[v] for v in p.v1 if v >= m.n and inv[v][0] != "h")
    print("gadget vertices in V1:", ", ".join(":".join(map(str, name)) for name in red))
    print("mapped back:", list(partition_to_orientation(m, rmap, p, fsc).arcs))

    fs, fs_map = reduce_fsc_to_fs(fsc)
    lifted = lift_fs_solution(fsc, fs, fs_map, p)
    print(f"\nforced-sides instance: {fs.graph.n} vertices, {fs.graph.m} edges; "
          f"lifted partition valid={is_valid_fsc_solution(fs, lifted)}")


if __name__ == "__main__":
    main()
