"""Law auditor behavior on algebras whose properties are known in advance.

The "known" side is established independently: fields satisfy every law by
definition, the twisted-multiplication tables were checked by hand against the
twist formula in test_algebra, and the relabeled-addition table below is a
worked example whose distributivity failure is verified by direct arithmetic
inside the test.
"""
import pytest

from quasicode import (
    CayleyTableAlgebra,
    UnsupportedError,
    axiom_audit,
    make_isotope,
    resolve_preset,
)
from quasicode.algebra.audit import LAW_NAMES


@pytest.mark.parametrize("name", ["f2", "f3", "f5", "gf4", "gf9"])
def test_fields_pass_every_law(name):
    rep = axiom_audit(resolve_preset(name))
    assert rep.mode == "exhaustive"
    for law in LAW_NAMES:
        assert rep.law(law).holds is True, law


def test_isotope_audit_flags(gf9_isotope):
    rep = axiom_audit(gf9_isotope)
    holds = {law for law in LAW_NAMES if rep.law(law).holds}
    assert holds == {
        "left_distributive",
        "right_distributive",
        "left_solvable",
        "right_solvable",
        "right_unit",
    }
    one, t = gf9_isotope.parse("1"), gf9_isotope.parse("t")
    assert rep.law("associative").witness == (one, one, t)
    assert rep.law("left_unit").witness == (one, t)
    assert rep.law("alternative").witness == (one, t)


def test_witness_is_lexicographically_smallest(gf9_isotope):
    rep = axiom_audit(gf9_isotope)
    elems = sorted(gf9_isotope.elements())
    first = next(
        (x, y) for x in elems for y in elems if x * y != y * x
    )
    assert rep.law("commutative").witness == first


def test_quasigroup_flags_positive_for_any_isotope():
    gf4 = resolve_preset("gf4")
    rep = axiom_audit(make_isotope(gf4, gf4.parse("t")))
    assert rep.law("left_solvable").holds is True
    assert rep.law("right_solvable").holds is True
    assert rep.law("right_unit").holds is True
    assert rep.law("left_unit").holds is False


def test_sampled_rationals_all_hold(rationals):
    rep = axiom_audit(rationals, mode="sampled", trials=200, seed=1)
    assert rep.mode == "sampled"
    for law in LAW_NAMES:
        assert rep.law(law).holds is True, law


def test_sampled_quaternions(quaternions):
    rep = axiom_audit(quaternions, mode="sampled", trials=300, seed=0)
    i, j = quaternions.parse("i"), quaternions.parse("j")
    comm = rep.law("commutative")
    assert comm.holds is False
    assert comm.witness == (i, j)
    for law in ("left_distributive", "right_distributive", "associative",
                "alternative", "two_sided_unit"):
        assert rep.law(law).holds is True, law


def test_sampled_octonions(octonions):
    rep = axiom_audit(octonions, mode="sampled", trials=300, seed=0)
    assoc = rep.law("associative")
    assert assoc.holds is False
    e1, e2, e4 = (octonions.parse(s) for s in ("e1", "e2", "e4"))
    assert assoc.witness == (e1, e2, e4)
    assert rep.law("alternative").holds is True
    assert rep.law("commutative").holds is False


def test_exhaustive_on_infinite_rejected(rationals, quaternions):
    with pytest.raises(UnsupportedError):
        axiom_audit(rationals, mode="exhaustive")
    with pytest.raises(UnsupportedError):
        axiom_audit(quaternions)


def _relabeled_add_table():
    # nonzero product = shifted index addition: x*y = ((x-1)+(y-1) mod 4)+1.
    # Multiplication alone is a commutative group, but it ignores the additive
    # structure, so both distributive laws fail: (1+1)*2 = 3 yet 1*2+1*2 = 4.
    add = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    mul = [[0] * 5 for _ in range(5)]
    for i in range(1, 5):
        for j in range(1, 5):
            mul[i][j] = ((i - 1) + (j - 1)) % 4 + 1
    return add, mul


def test_nondistributive_table_audit():
    add, mul = _relabeled_add_table()
    alg = CayleyTableAlgebra(add, mul, label="z5-shift")
    two = alg.parse("2")
    one = alg.parse("1")
    assert (one + one) * two != one * two + one * two
    rep = axiom_audit(alg)
    assert rep.law("left_distributive").holds is False
    assert rep.law("right_distributive").holds is False
    assert rep.law("left_solvable").holds is True
    assert rep.law("right_solvable").holds is True
    assert rep.law("associative").holds is True
    assert rep.law("two_sided_unit").holds is True


def test_report_lines_shape(f3):
    lines = axiom_audit(f3).lines()
    assert lines[0].startswith("algebra: f3 (digest ")
    assert lines[1] == "mode: exhaustive"
    law_lines = lines[2:]
    assert len(law_lines) == len(LAW_NAMES)
    for name, line in zip(LAW_NAMES, law_lines):
        assert line.startswith(f"law {name}: ")


def test_sampled_reports_are_deterministic(octonions):
    a = axiom_audit(octonions, mode="sampled", trials=120, seed=7)
    b = axiom_audit(octonions, mode="sampled", trials=120, seed=7)
    assert a.lines() == b.lines()
