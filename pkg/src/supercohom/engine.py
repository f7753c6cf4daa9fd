"""End-to-end cohomology computation in one bidegree (k, g).

Pipeline: enumerate C^k_g, split it into minimal subcomplexes, get the
F_p dimension of each one from the reduction done during closure, and run
exact work only where that dimension is positive (dim over F_p bounds the
rational dimension from above, so a zero certifies a zero).
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cochain import Cochain, complex_of
from .errors import NotCocycleError, PrimeSkip
from .linalg import (
    QQ,
    ZZ,
    SparseMatrix,
    canonical_classes,
    cohomology_decomposition,
    crt_classes,
    is_prime,
    primitive,
    solve,
)
from .linalg.elimination import to_fp_rows
from .subcomplex import STRATEGIES, construct_subcomplex, partition_complex
from . import _kernels

__all__ = [
    "EngineConfig",
    "SubcomplexRecord",
    "CohomologyResult",
    "EXACT_MODES",
    "compute_cohomology",
    "modular_prefilter",
    "betti_table",
    "cup_product",
    "is_coboundary",
    "required_grade_max",
    "modular_dimension",
]

EXACT_MODES = ("rational", "integer_snf", "crt")
DEFAULT_CRT_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579)


@dataclass(frozen=True)
class EngineConfig:
    prime: int = 65537
    fallback_prime: int = 65521
    strategy: str = "top"
    seed: int = 0
    field: str = "Q"  # "Q": exact betti numbers, "Fp": dimensions over F_prime only
    exact_mode: str = "rational"
    crt_primes: tuple = DEFAULT_CRT_PRIMES
    emit_representatives: bool = False
    jobs: int = 1

    def __post_init__(self):
        for q in (self.prime, self.fallback_prime):
            if q < 3 or not is_prime(q) or q >= 2**31:
                raise ValueError(f"{q} is not an odd prime below 2^31")
        if self.prime == self.fallback_prime:
            raise ValueError("fallback prime must differ from the prime")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.field not in ("Q", "Fp"):
            raise ValueError("field must be Q or Fp")
        if self.exact_mode not in EXACT_MODES:
            raise ValueError(f"exact_mode must be one of {EXACT_MODES}")
        crt = tuple(self.crt_primes)
        if len(set(crt)) != len(crt) or not crt:
            raise ValueError("crt primes must be non-empty and pairwise distinct")
        for q in crt:
            if q < 3 or not is_prime(q) or q >= 2**31:
                raise ValueError(f"crt prime {q} is not an odd prime below 2^31")
        object.__setattr__(self, "crt_primes", crt)
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass
class SubcomplexRecord:
    id: int
    dims: tuple
    dim_p: int
    dim_q: int = None  # None when the prefilter ruled the block out
    torsion: list = field(default_factory=list)


@dataclass
class CohomologyResult:
    algebra: str
    k: int
    g: int
    dim: int
    n_subcomplexes: int
    max_dim: int
    betti: int  # over Q; None when only F_p was requested
    dim_p: int
    prime: int
    torsion: list = field(default_factory=list)
    subcomplexes: list = field(default_factory=list)
    representatives: list = field(default_factory=list)
    events: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)


def required_grade_max(lowest_grade, k, g):
    """Top element grade needed to compute H^k_g (it involves C^{k+1}_g)."""
    return max(g - k * lowest_grade, lowest_grade)


def modular_prefilter(sub, p):
    """dim H over F_p of one subcomplex; raises PrimeSkip on a bad denominator."""
    r = _kernels.rank_mod_p(to_fp_rows(sub.D, p), p)
    rp = _kernels.rank_mod_p(to_fp_rows(sub.D_prime, p), p)
    return len(sub.middle) - r - rp


def _exact(job):
    # one subcomplex; runs in worker processes when jobs > 1
    sid, D_prime, D, mode, crt_primes, want_classes = job
    events = []
    if mode == "crt":
        classes, info = crt_classes(D_prime, D, crt_primes)
        if classes is not None:
            return sid, len(classes), [], classes, events
        events.append({"kind": "crt_fallback", "subcomplex": sid,
                       "reason": info.get("reason", "no usable prime")})
        mode = "rational"
    if mode == "integer_snf":
        res = cohomology_decomposition(D_prime, D, ring=ZZ)
        classes = []
        if want_classes and res.betti:
            # same canonical representatives as the rational mode
            classes = canonical_classes(D_prime.map_to(QQ), D.map_to(QQ))
        return sid, res.betti, res.torsion, classes, events
    res = cohomology_decomposition(D_prime, D, ring=QQ, classes=want_classes)
    return sid, res.betti, [], res.basis_classes, events


def _representative(alg, middle, vec):
    return Cochain(alg, {middle[j]: c for j, c in primitive(vec).items()})


def compute_cohomology(alg, k, g, config=None):
    config = config or EngineConfig()
    cx = complex_of(alg)
    cx.check_window(k + 1, g)
    t0 = time.perf_counter()
    subs = partition_complex(alg, k, g, config.strategy, config.seed, prime=config.prime)
    t1 = time.perf_counter()
    events = []
    records = []
    ops = 0
    survivors = []
    for sub in subs:
        dim_p = sub.modp_dimension()
        if dim_p is None:
            events.append({"kind": "unlucky_prime", "subcomplex": sub.id, "prime": config.prime,
                           "reason": "denominator vanishes; refiltered with fallback prime"})
            dim_p = modular_prefilter(sub, config.fallback_prime)
        else:
            ops += sub.modp["ops"]
        records.append(SubcomplexRecord(sub.id, sub.dims, dim_p))
        # torsion can hide in blocks with no free cohomology, so the SNF mode sees all
        if dim_p > 0 or config.exact_mode == "integer_snf":
            survivors.append(sub)
    betti = None
    torsion = []
    reps = []
    if config.field == "Q":
        betti = 0
        want = config.emit_representatives
        jobs = [(s.id, s.D_prime, s.D, config.exact_mode, config.crt_primes, want)
                for s in survivors]
        if config.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                outcomes = list(pool.map(_exact, jobs))
        else:
            outcomes = [_exact(j) for j in jobs]
        by_id = {s.id: s for s in subs}
        for sid, b, tors, classes, evs in sorted(outcomes, key=lambda o: o[0]):
            rec = records[sid]
            rec.dim_q = b
            rec.torsion = list(tors)
            betti += b
            torsion.extend(tors)
            events.extend(evs)
            if b > rec.dim_p:
                raise AssertionError("rational dimension exceeds the modular one")
            if rec.dim_p > b:
                events.append({"kind": "unlucky_prime", "subcomplex": sid, "prime": config.prime,
                               "reason": f"dim over F_p {rec.dim_p} exceeds betti {b}"})
            reps.extend(_representative(alg, by_id[sid].middle, v) for v in classes)
    t2 = time.perf_counter()
    stats = {
        "backend": _kernels.BACKEND,
        "survivors": len(survivors),
        "modp_ops": ops,
        "time_partition": t1 - t0,
        "time_exact": t2 - t1,
    }
    return CohomologyResult(
        algebra=alg.name, k=k, g=g,
        dim=sum(len(s.middle) for s in subs),
        n_subcomplexes=len(subs),
        max_dim=max((len(s.middle) for s in subs), default=0),
        betti=betti,
        dim_p=sum(r.dim_p for r in records),
        prime=config.prime,
        torsion=sorted(torsion),
        subcomplexes=records,
        representatives=reps,
        events=events,
        stats=stats,
    )


def betti_table(alg, k_range, g_range, config=None):
    """Results for every (k, g) in the product of the two ranges, k-major."""
    return [compute_cohomology(alg, k, g, config) for k in k_range for g in g_range]


def cup_product(c1, c2):
    return c1.wedge(c2)


def is_coboundary(c, ring=QQ):
    """``(True, witness)`` if ``c = d(witness)``, else ``(False, None)``."""
    alg = c.alg
    if not c:
        return True, Cochain(alg)
    if c.d():
        raise NotCocycleError("cochain is not closed")
    k, g = c.degree, c.grade
    if k is None or g is None:
        raise ValueError("cochain is not homogeneous")
    # union of the subcomplexes that meet the support of c
    middle, lower = {}, {}
    todo = sorted(c.terms)
    while todo:
        m = todo.pop()
        if m in middle:
            continue
        sub = construct_subcomplex(alg, m, k, g)
        for x in sub.middle:
            middle.setdefault(x, len(middle))
        for x in sub.lower:
            lower.setdefault(x, len(lower))
    mids = sorted(middle, key=middle.get)
    lows = sorted(lower, key=lower.get)
    d = complex_of(alg).differential
    rows = [{} for _ in mids]
    for j, w in enumerate(lows):
        for v, coef in d(w).items():
            rows[middle[v]][j] = coef
    A = SparseMatrix(rows, len(lows), QQ)
    if ring != QQ:
        A = A.map_to(ring)
    rhs = {middle[m]: ring.convert(v) for m, v in c.terms.items()}
    x = solve(A, rhs)
    if x is None:
        return False, None
    return True, Cochain(alg, {lows[j]: v for j, v in x.items()})


def modular_dimension(alg, k, g, p, strategy="top"):
    """dim H^k_g over F_p, computed block by block (raises PrimeSkip)."""
    total = 0
    for sub in partition_complex(alg, k, g, strategy, prime=p):
        dim = sub.modp_dimension()
        if dim is None:
            raise PrimeSkip(p)
        total += dim
    return total
