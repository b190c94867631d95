"""Compare the compiled and pure-Python group kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times subgroup enumeration, conjugacy classes of subgroups and the
associativity check on a few groups; prints one row per (group, task).
"""

import argparse
import statistics
import time

from equilef.groups import FiniteGroup
from equilef.kernels import compiled_available, make_kernel
from equilef.library import direct_product, elementary_abelian, symmetric, dihedral


def cases():
    yield "C2^5", elementary_abelian(2, 5)
    yield "C2^6", elementary_abelian(2, 6)
    yield "S4", symmetric(4)
    yield "D16", dihedral(16)
    yield "S4xC2", direct_product(symmetric(4), elementary_abelian(2, 1))


def tasks(G, backend):
    def subgroups():
        make_kernel(G.table, G.inverse, G.identity, backend).subgroup_masks()

    def classes():
        H = FiniteGroup(G.table, G.names, G.identity, backend=backend)
        H.subgroup_classes()

    def assoc():
        make_kernel(G.table, G.inverse, G.identity, backend).find_nonassociative()

    return {"subgroups": subgroups, "classes": classes, "associativity": assoc}


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if compiled_available() else [])
    if len(backends) == 1:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'group':8} {'task':14} " + " ".join(f"{b:>10}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    for name, G in cases():
        per = {b: tasks(G, b) for b in backends}
        for task in per["python"]:
            t = [best(per[b][task], args.repeat)[0] for b in backends]
            row = f"{name:8} {task:14} " + " ".join(f"{x:10.4f}" for x in t)
            if len(t) == 2 and t[1] > 0:
                row += f" {t[0] / t[1]:10.1f}x"
            print(row)


if __name__ == "__main__":
    main()
