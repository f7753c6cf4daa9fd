"""Strategy and prime benchmark: the shape of the timing tables.

Every repetition starts from an empty differential cache so that all
strategies pay for the same closure work.  Repetitions are interleaved
across strategies and timed with the cyclic garbage collector paused (as
timeit does), so load drift and collection pauses hit every strategy alike.
"""

import gc
import statistics
import time

from .cochain import complex_of
from .engine import EngineConfig, compute_cohomology

__all__ = ["run_benchmark"]


def run_benchmark(alg, k, g, strategies=("top", "bottom"), primes=(65537,),
                  repetitions=5, seed=0, field="Fp"):
    """One row per (prime, strategy) with median wall time and operation counts."""
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    rows = []
    cx = complex_of(alg)
    for p in primes:
        fallback = 65521 if p != 65521 else 65537
        times = {st: [] for st in strategies}
        last = {}
        for _ in range(repetitions):
            for st in strategies:
                cx._d_cache.clear()
                cfg = EngineConfig(prime=p, fallback_prime=fallback, strategy=st,
                                   seed=seed, field=field)
                gc.collect()
                enabled = gc.isenabled()
                gc.disable()
                try:
                    t = time.perf_counter()
                    last[st] = compute_cohomology(alg, k, g, cfg)
                    times[st].append(time.perf_counter() - t)
                finally:
                    if enabled:
                        gc.enable()
        for st in strategies:
            res = last[st]
            rows.append(dict(
                algebra=alg.name, k=k, g=g, prime=p, strategy=st,
                dim_lower=len(cx.enumerate(k - 1, g)) if k else 0,
                dim=res.dim, dim_upper=len(cx.enumerate(k + 1, g)),
                n_subcomplexes=res.n_subcomplexes, max_dim=res.max_dim,
                dim_p=res.dim_p, betti=res.betti,
                median_time=statistics.median(times[st]), times=times[st],
                modp_ops=res.stats["modp_ops"],
            ))
    return rows
