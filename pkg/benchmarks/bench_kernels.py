"""Compare the compiled and pure-Python unit-group kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from ancprim import _kernels_py

try:
    from ancprim import _kernels
except ImportError:
    _kernels = None

MODULI = (840, 5040, 9240, 30030)


def workloads(mod, rng):
    cases = []
    for f in MODULI:
        units = mod.unit_group(f)
        gens = rng.sample(units, 2)
        sub = mod.subgroup_closure(gens, f)
        g = f // 7 if f % 7 == 0 else f // 5
        cases.append(
            (
                f"f={f}",
                [
                    ("unit_group", lambda f=f: mod.unit_group(f)),
                    ("subgroup_closure", lambda f=f, gens=gens: mod.subgroup_closure(gens, f)),
                    ("conductor", lambda f=f, sub=sub: mod.conductor(sub, f)),
                    ("image", lambda f=f, sub=sub, g=g: mod.image(sub, f, g)),
                    (
                        "preimage_meet",
                        lambda f=f, sub=sub, g=g: mod.preimage_meet(
                            mod.image(sub, f, g), g, sub, f, f
                        ),
                    ),
                ],
            )
        )
    return cases


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return
    backends = {"python": _kernels_py, "cython": _kernels}
    timings = {}
    for name, mod in backends.items():
        for label, ops in workloads(mod, random.Random(7)):
            for op, fn in ops:
                best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                timings[(label, op, name)] = best
    print(f"{'case':<12}{'kernel':<18}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, ops in workloads(_kernels_py, random.Random(7)):
        for op, _ in ops:
            py, cy = timings[(label, op, "python")], timings[(label, op, "cython")]
            print(f"{label:<12}{op:<18}{py * 1e3:>12.3f}{cy * 1e3:>12.3f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
