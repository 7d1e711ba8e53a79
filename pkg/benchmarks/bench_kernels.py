#!/usr/bin/env python3
"""Compare the compiled and pure-Python arithmetic kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times one multiplication, one power with a 256-bit exponent, and the
full-exponent distinct-powers run over every primitive-root instance with
p in {2, 3, 5, 7}, n <= 26.  Results from both kernels are checked for
equality before any timing is printed.
"""
import argparse
import random
import time
import timeit

from gaussperiods.fftower import kernel, make_base_field
from gaussperiods.fftower.field import CycloCtx
from gaussperiods.numtheory import classify_instance
from gaussperiods.proofcheck import distinct_powers_count

CONTEXTS = [(2, 1, 11), (2, 1, 53), (7, 1, 53), (2, 1, 101), (3, 2, 29)]


def time_ops(ctx, repeat):
    rng = random.Random(0)
    a, b = ctx.random_element(rng), ctx.random_element(rng)
    e = rng.getrandbits(256)
    mul_t = min(timeit.repeat(lambda: a * b, number=20, repeat=repeat)) / 20
    pow_t = min(timeit.repeat(lambda: a ** e, number=1, repeat=repeat))
    return mul_t, pow_t, ((a * b).digits, (a ** e).digits)


def sweep(method):
    start = time.perf_counter()
    for p in (2, 3, 5, 7):
        for n in range(1, 27):
            if classify_instance(p, 1, n).is_case_one:
                res = distinct_powers_count(p, 1, n, method=method)
                assert res.passed and not res.truncated
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-sweep", action="store_true")
    args = ap.parse_args()

    backends = kernel.available_backends()
    if len(backends) < 2:
        print(f"only {backends} available; build the extension to compare")
    previous = kernel.backend()
    rows = []
    for p, k, r in CONTEXTS:
        ctx = CycloCtx(make_base_field(p, k), r)
        timings, outputs = {}, set()
        for name in backends:
            kernel.set_backend(name)
            mul_t, pow_t, out = time_ops(ctx, args.repeat)
            timings[name] = (mul_t, pow_t)
            outputs.add(out)
        assert len(outputs) == 1, f"kernels disagree on q={p}^{k}, r={r}"
        rows.append((f"q={p}^{k} r={r}", timings))

    print(f"{'context':<16}" + "".join(f"{b + ' mul':>16}{b + ' pow256':>16}" for b in backends)
          + ("   speedup(mul/pow)" if len(backends) > 1 else ""))
    for label, timings in rows:
        line = f"{label:<16}"
        for b in backends:
            m, pw = timings[b]
            line += f"{m * 1e6:>13.1f} us{pw * 1e3:>13.2f} ms"
        if len(backends) > 1:
            (cm, cp), (pm, pp) = timings["cython"], timings["python"]
            line += f"   {pm / cm:6.1f}x / {pp / cp:6.1f}x"
        print(line)

    if not args.skip_sweep:
        print()
        for name in backends:
            kernel.set_backend(name)
            for method in ("conjugates", "full"):
                print(f"distinct-powers sweep [{name}, {method}]: {sweep(method):.2f} s")
    kernel.set_backend(previous)


if __name__ == "__main__":
    main()
