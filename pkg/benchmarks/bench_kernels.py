"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

import argparse
import json
import random
import timeit

from conelab import _kernels_py as pure
from conelab import kernels
from conelab.groups import hinf_from_word, pl_from_word


def _f_pairs(rng, count, length):
    pairs = []
    for _ in range(count):
        u = "".join(rng.choice("aAbB") for _ in range(length))
        v = "".join(rng.choice("aAbB") for _ in range(length))
        g, h = pl_from_word(u), pl_from_word(v)
        pairs.append((g.T, g.xs, g.ys, h.T, h.xs, h.ys))
    return pairs


def _hinf_pairs(rng, count, length):
    def word():
        return [rng.choice((1, -1)) * rng.randint(1, 6) for _ in range(length)]
    return [(hinf_from_word(word()).exponents, hinf_from_word(word()).exponents) for _ in range(count)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    if kernels.compiled is None:
        raise SystemExit("compiled extension not built; nothing to compare")
    rng = random.Random(args.seed)
    f_pairs = _f_pairs(rng, 2000, 8)
    h_pairs = _hinf_pairs(rng, 5000, 10)
    cases = [
        ("pl_compose", f_pairs, kernels.compiled.pl_compose, pure.pl_compose),
        ("hinf_mul", h_pairs, kernels.compiled.hinf_mul, pure.hinf_mul),
        ("hinf_inv", [(a,) for a, _ in h_pairs], kernels.compiled.hinf_inv, pure.hinf_inv),
    ]
    rows = []
    for name, data, fast, slow in cases:
        for args_ in data[:200]:
            a, b = fast(*args_), slow(*args_)
            if a is not None and tuple(a) != tuple(b):
                raise SystemExit(f"{name}: backends disagree on {args_}")
        t_fast = min(timeit.repeat(lambda: [fast(*x) for x in data], number=1, repeat=args.repeat))
        t_slow = min(timeit.repeat(lambda: [slow(*x) for x in data], number=1, repeat=args.repeat))
        rows.append({"kernel": name, "calls": len(data), "cython_s": round(t_fast, 5),
                     "python_s": round(t_slow, 5), "speedup": round(t_slow / t_fast, 1)})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':<12}{'calls':>7}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for r in rows:
        print(f"{r['kernel']:<12}{r['calls']:>7}{r['cython_s']:>11.4f}{r['python_s']:>11.4f}{r['speedup']:>8.1f}x")


if __name__ == "__main__":
    main()
