from collections import Counter
from fractions import Fraction

import pytest

from supercohom import build_algebra, validate_structure
from supercohom.algebra import StructureTable, Superalgebra, parse_family
from supercohom.errors import CapacityError, InvalidFamily, RangeError
from supercohom.superpoly import SuperPolynomial, buttin_bracket, odd_laplacian

P = lambda s: SuperPolynomial.parse(s, 2)  # noqa: E731


def test_parse_family():
    assert parse_family("SLe2") == ("SLe", 2)
    assert parse_family("SLe(2)") == ("SLe", 2)
    assert parse_family("h(2)") == ("H", 2)
    with pytest.raises(InvalidFamily):
        parse_family("Vect3")


def test_sle2_basis_up_to_grade_one(sle2_small):
    a = build_algebra("SLe2", grade_max=1)
    assert len(a) == 12
    assert Counter(a.grades) == {-2: 1, -1: 2, 0: 3, 1: 6}
    assert [e.label for e in a.elements] == [
        "O_1", "E_2", "E_3", "E_4", "E_5", "E_6", "O_7", "O_8", "E_9", "E_10", "E_11", "E_12"]
    fns = {e.label: e.gen_fn for e in a.elements}
    assert fns["O_1"] == P("theta*psi")
    assert fns["E_4"] == P("y*theta")
    assert fns["E_5"] == P("y*psi - x*theta")
    assert fns["E_10"] == P("y^2*psi - 2*x*y*theta")
    assert fns["E_11"] == P("x*y*psi - 1/2*x^2*theta")


def test_grade_zero_component():
    a = build_algebra("SLe2", grade_min=0, grade_max=0)
    assert {e.gen_fn for e in a.elements} == {P("y*theta"), P("y*psi - x*theta"), P("x*psi")}


def test_h2_lowest_component():
    a = build_algebra("H2", grade_min=-1, grade_max=-1)
    assert len(a) == 2
    assert all(e.parity == 0 for e in a.elements)


def test_parity_shift(sle2_small):
    for e in sle2_small.elements:
        assert e.parity != e.gen_fn.parity
        assert e.gen_fn.grade == e.grade


def test_bracket_examples(sle2_small):
    a = sle2_small
    assert a.bracket("E_5", "E_4") == {a.index_of("E_4"): -2}
    assert a.bracket("E_2", "E_3") == {}
    assert a.bracket("E_4", "E_6") == {a.index_of("E_5"): -1}
    assert a.bracket("E_6", "E_4") == {a.index_of("E_5"): 1}
    assert a.bracket("O_1", "O_7") == {a.index_of("E_2"): -1}


def test_bracket_out_of_range(sle2_small):
    with pytest.raises(RangeError):
        sle2_small.bracket(0, len(sle2_small))
    with pytest.raises(RangeError):
        sle2_small.index_of("E_999")


def test_capacity():
    with pytest.raises(CapacityError):
        build_algebra("SLe", grade_max=1, n=9)


@pytest.mark.parametrize("family,gmax", [("SLe2", 3), ("Le2", 2), ("B2", 2), ("SB2", 2), ("H2", 4)])
def test_builtins_validate(family, gmax):
    assert validate_structure(build_algebra(family, grade_max=gmax)) == []


def test_sle2_divergence_free(sle2_small):
    for e in sle2_small.elements:
        assert not odd_laplacian(e.gen_fn)


def test_structure_matches_generating_functions(sle2_small):
    a = sle2_small
    fns = [e.gen_fn for e in a.elements]
    for i in range(len(a)):
        for j in range(len(a)):
            if a.grades[i] + a.grades[j] > a.grade_max:
                continue
            h = buttin_bracket(fns[i], fns[j])
            got = SuperPolynomial.zero(2)
            for k, c in a.bracket(i, j).items():
                got = got + c * fns[k]
            assert got == h.without_constant()  # SLe(2) is taken modulo constants


def test_inner_grading_element():
    # with this bracket {G, f} = -gr(f) f, so -G (or right action) is the grading derivation
    a = build_algebra("B2", grade_max=3)
    G = P("x*theta + y*psi")
    for e in a.elements:
        assert buttin_bracket(e.gen_fn, G) == e.grade * e.gen_fn
        assert buttin_bracket(-G, e.gen_fn) == e.grade * e.gen_fn


def test_inverse_is_transpose(sle2_small):
    fw = sle2_small.table.forward
    back = {(i, j, c) for (i, j), ts in fw.items() for _, c in ts}
    inv = {(i, j, c) for rows in sle2_small.table.inverse.values() for i, j, c in rows}
    assert back == inv


def _toy(forward, grades=(0, 0), parities=(0, 0)):
    from supercohom.algebra import BasisElement
    els = [BasisElement(i, p, g, f"E_{i + 1}") for i, (p, g) in enumerate(zip(parities, grades))]
    return Superalgebra("toy", els, StructureTable(forward, grades), min(grades), max(grades))


def test_validate_flags_even_square():
    bad = _toy({(0, 0): [(1, Fraction(1))]})
    assert any("anti-symmetry" in v for v in validate_structure(bad))


def test_validate_flags_grading():
    bad = _toy({(0, 1): [(0, Fraction(1))]}, grades=(0, 1))
    assert any("grading" in v for v in validate_structure(bad))


def test_validate_flags_jacobi():
    # [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=e3: [e1,[e2,e3]] = e1 but the right side is 0
    from supercohom.algebra import BasisElement
    els = [BasisElement(i, 0, 0, f"E_{i + 1}") for i in range(3)]
    fw = {(0, 1): [(0, 1)], (1, 2): [(1, 1)], (0, 2): [(2, 1)]}
    alg = Superalgebra("so3?", els, StructureTable(fw, (0, 0, 0)), 0, 0)
    assert any("Jacobi" in v for v in validate_structure(alg))
