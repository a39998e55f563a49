"""Compare the compiled and pure-Python reduction kernels.

Each backend runs in its own interpreter (the backend is chosen at import
time) on the same seeded workloads; runs of the two backends are
interleaved and the best time per workload is reported:

* ``sat-sweep``: decide + model extraction on random 3-CNF instances,
* ``division``: normal forms of random polynomials by random divisor lists,
* ``katsura``: the reduced Gröbner basis of the katsura-5 ideal.

Usage::

    python benchmarks/bench_kernels.py [--repeat 3] [--instances 300]
"""

import argparse
import json
import os
import subprocess
import sys
import textwrap

WORKER = textwrap.dedent(
    """
    import gc, json, random, sys, time
    from groebner_sat import kernel
    from groebner_sat.buchberger import groebner
    from groebner_sat.cnf import random_3cnf
    from groebner_sat.polyring import PolyRing, normal_form
    from groebner_sat.satdecide import DecideConfig, decide

    instances, repeat = int(sys.argv[1]), int(sys.argv[2])

    def sat_sweep():
        rng = random.Random(1)
        cfg = DecideConfig(use_precheck=False)
        for _ in range(instances):
            decide(random_3cnf(rng.randint(4, 7), rng.randint(8, 24), rng), cfg)

    def division():
        rng = random.Random(2)
        ring = PolyRing(3, "grevlex")
        def rand_poly(nterms, deg):
            return ring.from_terms(
                (rng.randint(-5, 5), tuple(rng.randint(0, deg) for _ in range(3))) for _ in range(nterms)
            )
        for _ in range(instances):
            G = [g for g in (rand_poly(3, 2) for _ in range(3)) if g]
            normal_form(rand_poly(12, 6), G)

    def katsura():
        n = 5
        ring = PolyRing(n + 1, "grevlex")
        z = ring.gens()
        u = lambda i: z[abs(i)] if abs(i) <= n else ring.zero()
        polys = [sum((u(i) for i in range(-n, n + 1)), ring.zero()) - 1]
        for m in range(n):
            polys.append(sum((u(i) * u(m - i) for i in range(-n, n + 1)), ring.zero()) - u(m))
        groebner(polys)

    out = {"backend": kernel.BACKEND}
    for name, fn in [("sat-sweep", sat_sweep), ("division", division), ("katsura", katsura)]:
        best = float("inf")
        for _ in range(repeat):
            gc.collect()
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    print(json.dumps(out))
    """
)


def run_backend(force_python: bool, instances: int, repeat: int) -> dict:
    env = dict(os.environ)
    if force_python:
        env["GROEBNER_SAT_KERNEL"] = "python"
    else:
        env.pop("GROEBNER_SAT_KERNEL", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(instances), str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--instances", type=int, default=300)
    args = parser.parse_args()

    # alternate the two backends so drift in machine speed hits both alike
    compiled, fallback = {}, {}
    for _ in range(args.repeat):
        for force, acc in ((False, compiled), (True, fallback)):
            res = run_backend(force, args.instances, 1)
            for key, val in res.items():
                acc[key] = val if key == "backend" else min(val, acc.get(key, float("inf")))
    if compiled["backend"] != "cython":
        print("compiled kernel not available; only the pure-Python backend was measured")
    print(f"{'workload':<12} {'python [s]':>11} {compiled['backend'] + ' [s]':>11} {'speedup':>8}")
    for name in ("sat-sweep", "division", "katsura"):
        py, cy = fallback[name], compiled[name]
        print(f"{name:<12} {py:>11.3f} {cy:>11.3f} {py / cy:>7.2f}x")


if __name__ == "__main__":
    main()
