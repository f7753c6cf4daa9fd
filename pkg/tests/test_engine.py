from fractions import Fraction

import pytest

from supercohom import (
    Cochain,
    EngineConfig,
    betti_table,
    compute_cohomology,
    cup_product,
    is_coboundary,
    modular_dimension,
)
from supercohom.algebra import BasisElement, StructureTable, Superalgebra
from supercohom.errors import NotCocycleError, WindowError


def mono(alg, *labels):
    return tuple(sorted(alg.index_of(x) for x in labels))


def only_rep(res):
    assert len(res.representatives) == 1
    return res.representatives[0]


REP = EngineConfig(emit_representatives=True)


def test_config_validation():
    with pytest.raises(ValueError):
        EngineConfig(prime=15)
    with pytest.raises(ValueError):
        EngineConfig(prime=2)
    with pytest.raises(ValueError):
        EngineConfig(crt_primes=(65537, 65537))
    with pytest.raises(ValueError):
        EngineConfig(strategy="middle")
    with pytest.raises(ValueError):
        EngineConfig(prime=65521)


def test_table_examples(sle2, h2):
    assert compute_cohomology(h2, 2, -2).betti == 1
    assert compute_cohomology(h2, 1, 0).betti == 0
    res = compute_cohomology(sle2, 2, 0)
    assert (res.dim, res.n_subcomplexes, res.max_dim, res.betti) == (23, 13, 4, 1)


def test_alpha_representative(sle2):
    rep = only_rep(compute_cohomology(sle2, 1, -2, REP))
    assert rep == Cochain.monomial(sle2, mono(sle2, "O_1"))


def test_beta_representative(sle2):
    rep = only_rep(compute_cohomology(sle2, 2, 0, REP))
    beta = Cochain(sle2, {mono(sle2, "E_2", "O_8"): 1, mono(sle2, "E_3", "O_7"): 1})
    assert rep == beta
    assert not rep.d()
    assert is_coboundary(rep) == (False, None)


@pytest.mark.parametrize("mode", ["rational", "integer_snf", "crt"])
def test_exact_modes_agree(sle2, h2, mode):
    cfg = EngineConfig(exact_mode=mode, emit_representatives=True)
    for alg, cells in ((sle2, [(2, 0), (3, -6), (1, -2)]), (h2, [(2, -2), (5, -2), (7, 0)])):
        for k, g in cells:
            ref = compute_cohomology(alg, k, g, REP)
            res = compute_cohomology(alg, k, g, cfg)
            assert res.betti == ref.betti == 1
            assert res.representatives == ref.representatives
            assert not [e for e in res.events if e["kind"] == "crt_fallback"]


def test_representatives_reduced(h2):
    for k, g in ((2, -2), (5, -2), (7, 0)):
        res = compute_cohomology(h2, k, g, REP)
        for rep in res.representatives:
            assert not rep.d()
            assert all(Fraction(c).denominator == 1 for c in rep.terms.values())
            assert is_coboundary(rep)[0] is False


def test_prefilter_soundness(h2):
    for p in (3, 5, 7, 17):
        for k in range(1, 6):
            for g in range(-2, 2):
                res = compute_cohomology(h2, k, g, EngineConfig(prime=p))
                for rec in res.subcomplexes:
                    if rec.dim_q is not None:
                        assert rec.dim_p >= rec.dim_q
                    else:
                        assert rec.dim_p == 0
                assert sum(r.dim_q or 0 for r in res.subcomplexes) == res.betti


def test_universal_coefficients_end_to_end(h2):
    # dim over F_p - betti = p-torsion in H^k plus p-torsion in H^{k+1}
    snf = EngineConfig(exact_mode="integer_snf")
    for p in (3, 5):
        for k in range(1, 5):
            for g in range(-2, 2):
                dp = modular_dimension(h2, k, g, p)
                here = compute_cohomology(h2, k, g, snf)
                up = compute_cohomology(h2, k + 1, g, snf)
                count = sum(1 for t in here.torsion + up.torsion if t % p == 0)
                assert dp - here.betti == count, (p, k, g)


def test_modular_dimensions(h2):
    assert modular_dimension(h2, 2, -1, 3) == 2
    assert modular_dimension(h2, 3, 0, 3) == 1
    assert modular_dimension(h2, 2, 1, 5) == 2


def test_fp_mode(h2):
    res = compute_cohomology(h2, 2, -1, EngineConfig(prime=3, field="Fp"))
    assert res.betti is None and res.dim_p == 2


def test_unlucky_prime_event(h2):
    res = compute_cohomology(h2, 2, -1, EngineConfig(prime=3))
    assert res.betti == 0
    assert any(e["kind"] == "unlucky_prime" for e in res.events)


def test_prime_skip_falls_back():
    # [e1, e2] = e2 / 3: the denominator vanishes mod 3
    els = [BasisElement(0, 0, 0, "E_1"), BasisElement(1, 0, -1, "E_2")]
    alg = Superalgebra("toy", els, StructureTable({(0, 1): [(1, Fraction(1, 3))]}, (0, -1)), -1, 0)
    res = compute_cohomology(alg, 1, -1, EngineConfig(prime=3))
    assert res.betti == 0
    assert [e["kind"] for e in res.events] == ["unlucky_prime"]


def test_window_error(sle2):
    with pytest.raises(WindowError):
        compute_cohomology(sle2, 4, 4)


def test_jobs_do_not_change_results(h2):
    a = compute_cohomology(h2, 7, 0, EngineConfig(emit_representatives=True))
    b = compute_cohomology(h2, 7, 0, EngineConfig(emit_representatives=True, jobs=2))
    assert (a.betti, a.representatives, a.subcomplexes) == (b.betti, b.representatives, b.subcomplexes)


def test_betti_table(sle2):
    assert betti_table(sle2, range(1, 1), range(0, 3)) == []
    cells = betti_table(sle2, range(1, 4), [1 - 2 * k for k in range(1, 4)])
    row1 = [c for c in cells if c.g + 2 * c.k == 1]
    assert [c.dim for c in row1] == [2, 2, 2]


def test_ring_relations(sle2):
    alpha = Cochain.monomial(sle2, mono(sle2, "O_1"))
    a2 = cup_product(alpha, alpha)
    assert a2 == Cochain.monomial(sle2, mono(sle2, "O_1", "O_1"), 2)
    power = alpha
    for k in range(2, 5):
        power = cup_product(power, alpha)
        assert not power.d()
        assert is_coboundary(power)[0] is False
    beta = only_rep(compute_cohomology(sle2, 2, 0, REP))
    ba = cup_product(beta, alpha)
    ok, witness = is_coboundary(ba)
    assert ok and witness.d() == ba
    assert cup_product(alpha, Cochain.one(sle2)) == alpha


def test_is_coboundary_guards(sle2):
    assert is_coboundary(Cochain(sle2)) == (True, Cochain(sle2))
    with pytest.raises(NotCocycleError):
        is_coboundary(Cochain.monomial(sle2, mono(sle2, "E_4")))
