"""Compare the compiled kernel against its pure Python twin.

Runs a seeded Groebner workload in the current interpreter, then once more
in a subprocess with MWB_PURE_KERNEL=1, and reports both timings.

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --count 30 --repeat 5
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from mwb import kernel
from mwb.groebner import groebner_basis, member, normal_form
from mwb.poly import ORDINARY, LogAmbient, PolyIdeal, Polynomial


def seeded_ideals(count):
    rng = random.Random(20260822)
    amb = LogAmbient([("x", ORDINARY), ("y", ORDINARY), ("z", ORDINARY)])
    out = []
    for _ in range(count):
        gens = []
        for _ in range(rng.randint(2, 3)):
            terms = {}
            for _ in range(rng.randint(2, 4)):
                e = tuple(rng.randint(0, 3) for _ in range(3))
                terms[e] = Fraction(rng.randint(-4, 4) or 1)
            gens.append(Polynomial(amb, terms))
        out.append(PolyIdeal(amb, gens))
    return amb, out


def bench_groebner(count):
    amb, ideals = seeded_ideals(count)
    bases = []
    t0 = time.perf_counter()
    for i in ideals:
        bases.append(groebner_basis(i))
    elapsed = time.perf_counter() - t0
    return elapsed, (amb, ideals, bases)


def bench_reduction(state, rounds=200):
    amb, ideals, bases = state
    probes = []
    for i in ideals[: len(ideals) // 2]:
        g = i.generators[0]
        probes.append(g * g + i.generators[-1])
    t0 = time.perf_counter()
    for _ in range(rounds):
        for basis, probe in zip(bases, probes):
            normal_form(probe, basis)
    return time.perf_counter() - t0


def bench_monomial_ops(rounds=40000):
    rng = random.Random(6)
    es = [tuple(rng.randint(0, 6) for _ in range(5)) for _ in range(64)]
    t0 = time.perf_counter()
    for _ in range(rounds // len(es)):
        sorted(es, key=lambda e: kernel.order_key(e, 0))
        for a in es:
            kernel.mono_mul(a, a)
            kernel.mono_lcm(a, es[0])
            kernel.mono_divides(es[0], a)
    return time.perf_counter() - t0


def measure(count, repeat):
    rows = {}
    for _ in range(repeat):
        g, state = bench_groebner(count)
        r = bench_reduction(state)
        m = bench_monomial_ops()
        rows["groebner"] = min(rows.get("groebner", g), g)
        rows["normal-form"] = min(rows.get("normal-form", r), r)
        rows["monomial-ops"] = min(rows.get("monomial-ops", m), m)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=20, help="ideals in the family")
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    ap.add_argument("--json", action="store_true", help="print one lane as JSON")
    args = ap.parse_args()

    rows = measure(args.count, args.repeat)
    lane = "compiled" if kernel.COMPILED else "pure"
    if args.json:
        print(json.dumps({"lane": lane, "rows": rows}))
        return

    if not kernel.COMPILED:
        print("note: compiled kernel unavailable; both lanes are pure Python")
    env = dict(os.environ, MWB_PURE_KERNEL="1")
    other = json.loads(
        subprocess.run(
            [sys.executable, __file__, "--count", str(args.count),
             "--repeat", str(args.repeat), "--json"],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        ).stdout
    )
    print(f"{'workload':<14} {lane:>10} {'pure':>10} {'ratio':>7}")
    for name, here in rows.items():
        there = other["rows"][name]
        ratio = there / here if here else float("inf")
        print(f"{name:<14} {here:>9.3f}s {there:>9.3f}s {ratio:>6.2f}x")


if __name__ == "__main__":
    main()
