"""Compare the compiled kernels with the numpy fallback on end-to-end searches.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from apcqc import _kernels_py, kernels
from apcqc.apc import apc_distance
from apcqc.codec import CodeSpec, build_betas
from apcqc.klverify import kl_distance
from apcqc.logicfn import parse_poly

try:
    from apcqc import _kernels as _compiled
except ImportError:
    _compiled = None

HEXA = "x1*x4+x1*x5+x1*x6+x2*x3+x2*x4+x2*x6+x3*x4+x3*x5+x4*x5+x4*x6"
AME34 = "x1*x3+x1*x4+x2*x3+2*x2*x4"
PENTAGON = "x1*x2+x2*x3+x3*x4+x4*x5+x5*x1"


def cases():
    hexa = parse_poly(HEXA, 2, 6)
    ame = parse_poly(AME34, 3, 4)
    pent5 = parse_poly("x1*x2+x2*x3+x3*x4+x4*x5+x5*x1", 5, 5)
    pent = parse_poly(PENTAGON, 2, 5)
    code = CodeSpec(2, 5, pent, tuple(build_betas(5, 1, 2)[1]), 3, 2)
    code0 = CodeSpec(3, 4, ame, tuple(build_betas(4, 0, 3)[1]), 3, 3)
    return [
        ("apc  p=2 n=6 (d'=4)", lambda: apc_distance(hexa, workers=1)),
        ("apc  p=3 n=4 (d'=3)", lambda: apc_distance(ame, workers=1)),
        ("apc  p=5 n=5 pentagon", lambda: apc_distance(pent5, workers=1)),
        ("kl   p=3 n=4 K=1", lambda: kl_distance(code0, workers=1)),
        ("kl   p=2 n=5 K=2", lambda: kl_distance(code, workers=1)),
    ]


def use(mod):
    kernels.char_counts = mod.char_counts
    kernels.first_nonvanishing = mod.first_nonvanishing
    kernels.first_kl_failure = mod.first_kl_failure


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _compiled is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'case':26} {'cython (s)':>11} {'python (s)':>11} {'speedup':>8}")
    for name, fn in cases():
        fn()  # warm the shell tables so both backends time only the search
        use(_kernels_py)
        tp, rp = timed(fn, args.repeat)
        if _compiled is not None:
            use(_compiled)
            tc, rc = timed(fn, args.repeat)
            assert repr(rc) == repr(rp), name
            print(f"{name:26} {tc:11.4f} {tp:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:26} {'-':>11} {tp:11.4f} {'-':>8}")


if __name__ == "__main__":
    main()
