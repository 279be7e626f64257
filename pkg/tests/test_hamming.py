"""Code construction, syndromes, decoding, and perfectness verification.

Expected counts come from the sphere-packing identity |C|*(1+n(q-1)) = q^n
computed by hand for each preset; expected normalize outputs were derived by
solving y*b = z_beta and y*x = z_gamma directly.
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasicode import (
    Column,
    DenseVec,
    DomainError,
    FinVec,
    HammingCode,
    InconsistencyError,
    InvalidParameterError,
    Scalar,
    UnsupportedError,
    resolve_preset,
)

F3 = resolve_preset("f3")


def col(text, alg):
    return Column.parse(text, alg)


def vec(text, alg, m):
    return FinVec.parse(text, alg, m)


# -- columns -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "preset,m,count",
    [
        ("f2", 2, 3),
        ("f2", 3, 7),
        ("f3", 2, 4),
        ("f5", 2, 6),
        ("gf4", 2, 5),
        ("gf8", 2, 9),
        ("gf9", 2, 10),
        ("f2", 4, 15),
    ],
)
def test_column_counts(preset, m, count):
    code = HammingCode(resolve_preset(preset), m)
    assert code.column_count() == count
    cols = code.enumerate_columns()
    assert len(cols) == count
    assert len(set(cols)) == count


def test_infinite_column_set(rationals):
    code = HammingCode(rationals, 2)
    assert code.column_count() is None
    with pytest.raises(UnsupportedError):
        code.enumerate_columns()


def test_enumeration_is_pivot_major(code_f3_m2):
    assert [str(c) for c in code_f3_m2.enumerate_columns()] == [
        "(1,0)",
        "(1,1)",
        "(1,2)",
        "(0,1)",
    ]


def test_identity_columns(code_f2_m3, rationals):
    assert [str(c) for c in code_f2_m3.identity_columns()] == [
        "(1,0,0)",
        "(0,1,0)",
        "(0,0,1)",
    ]
    # identity columns exist even when the full column set is infinite
    assert len(HammingCode(rationals, 3).identity_columns()) == 3


def test_is_canonical_column(code_f3_m2, f3):
    assert code_f3_m2.is_canonical_column(col("(1,2)", f3))
    assert code_f3_m2.is_canonical_column(col("(0,1)", f3))
    assert not code_f3_m2.is_canonical_column(col("(2,1)", f3))
    assert not code_f3_m2.is_canonical_column(col("(0,0)", f3))
    assert not code_f3_m2.is_canonical_column(col("(1,2,0)", f3))


def test_custom_pivots(f3):
    code = HammingCode(f3, 2, pivots=[f3.parse("2"), f3.parse("1")])
    assert [str(c) for c in code.enumerate_columns()] == ["(2,0)", "(2,1)", "(2,2)", "(0,1)"]
    y, c = code.normalize(DenseVec.parse("(2,1)", f3))
    assert (y.value, str(c)) == (1, "(2,1)")
    rep = code.verify_perfect()
    assert rep.mode == "exhaustive" and rep.verdict


def test_construction_errors(f3, f5):
    with pytest.raises(InvalidParameterError):
        HammingCode(f3, 1)
    with pytest.raises(InvalidParameterError):
        HammingCode(f3, 2, pivots=[f3.parse("1")])
    with pytest.raises(InvalidParameterError):
        HammingCode(f3, 2, pivots=[f3.parse("1"), f3.parse("0")])
    with pytest.raises(DomainError):
        HammingCode(f3, 2, pivots=[f5.parse("1"), f5.parse("1")])


# -- normalize ---------------------------------------------------------------------------


def test_normalize_frozen_field_case(code_f3_m2, f3):
    y, c = code_f3_m2.normalize(DenseVec.parse("(2,1)", f3))
    assert y == f3.parse("2")
    assert str(c) == "(1,2)"


def test_normalize_frozen_quaternion_case(quaternions):
    code = HammingCode(quaternions, 2)
    i, j, k = (quaternions.parse(s) for s in ("i", "j", "k"))
    y, c = code.normalize(DenseVec([i, j]))
    assert y == i
    assert c == Column([quaternions.unit(), -k])


def test_normalize_zero_rejected(code_f3_m2, f3):
    with pytest.raises(DomainError):
        code_f3_m2.normalize(DenseVec.parse("(0,0)", f3))


@settings(max_examples=150)
@given(
    y=st.sampled_from([F3.parse("1"), F3.parse("2")]),
    idx=st.integers(min_value=0, max_value=3),
)
def test_normalize_round_trip_f3(y, idx):
    code = HammingCode(F3, 2)
    a = code.enumerate_columns()[idx]
    z = a.to_dense().scalar_mul_left(y)
    assert code.normalize(z) == (y, a)


def test_normalize_round_trip_quaternions(quaternions):
    code = HammingCode(quaternions, 2)
    rng = random.Random(11)
    for _ in range(100):
        a = code.random_column(rng)
        y = quaternions.random_scalar(rng)
        if y.is_zero():
            continue
        z = a.to_dense().scalar_mul_left(y)
        assert code.normalize(z) == (y, a)


# -- syndromes and membership ------------------------------------------------------------


def test_syndrome_and_contains(code_f2_m3, f2):
    w = vec("(1,0,0) := 1\n(0,1,0) := 1\n(1,1,0) := 1", f2, 3)
    assert code_f2_m3.syndrome(w).is_zero()
    assert code_f2_m3.contains(w)
    bad = vec("(1,0,0) := 1", f2, 3)
    assert not code_f2_m3.contains(bad)
    assert code_f2_m3.contains(FinVec.zero(f2, 3))


def test_left_right_syndromes_agree_over_fields(code_f3_m2, f3):
    for w in code_f3_m2.enumerate_codewords():
        assert code_f3_m2.contains_right(w)
    probe = vec("(1,2) := 2\n(0,1) := 1", f3, 2)
    assert code_f3_m2.syndrome(probe).entries == code_f3_m2.syndrome_right(probe).entries


def test_left_right_syndromes_differ_over_quaternions(code_quat_m2, quaternions):
    x = FinVec.single(col("(1,1i)", quaternions), quaternions.parse("j"))
    left = code_quat_m2.syndrome(x)
    right = code_quat_m2.syndrome_right(x)
    assert left.entries != right.entries
    # j*(1,i) = (j,-k) on the left, (1,i)*j = (j,k) on the right
    assert left.entries[1] == -right.entries[1]


def test_non_canonical_key_rejected(code_f3_m2, f3):
    x = FinVec.single(col("(2,1)", f3), f3.parse("1"))
    with pytest.raises(DomainError):
        code_f3_m2.syndrome(x)
    with pytest.raises(DomainError):
        code_f3_m2.decode(x)


def test_wrong_algebra_vector_rejected(code_f3_m2, f5):
    with pytest.raises(DomainError):
        code_f3_m2.syndrome(vec("(1,0) := 1", f5, 2))


# -- decoding ----------------------------------------------------------------------------


@pytest.mark.parametrize("preset,m", [("f2", 2), ("f2", 3), ("f3", 2), ("gf4", 2)])
def test_decoder_corrects_every_single_error(preset, m):
    alg = resolve_preset(preset)
    code = HammingCode(alg, m)
    words = code.enumerate_codewords()
    for c in words:
        assert code.decode(c) == c
        for a in code.enumerate_columns():
            current = c.get(a)
            for v in alg.elements():
                if v == current:
                    continue
                corrupted = c - FinVec.single(a, current) + FinVec.single(a, v)
                assert code.decode(corrupted) == c


def test_decoder_round_trip_quaternions(code_quat_m2, quaternions):
    rng = random.Random(5)
    for _ in range(200):
        c = code_quat_m2.random_codeword(rng)
        a = code_quat_m2.random_column(rng)
        v = quaternions.random_scalar(rng)
        if v == c.get(a):
            continue
        corrupted = c - FinVec.single(a, c.get(a)) + FinVec.single(a, v)
        assert code_quat_m2.decode(corrupted) == c


def test_decoder_round_trip_octonions(octonions):
    code = HammingCode(octonions, 2)
    rng = random.Random(6)
    for _ in range(100):
        c = code.random_codeword(rng)
        a = code.random_column(rng)
        v = octonions.random_scalar(rng)
        if v == c.get(a):
            continue
        corrupted = c - FinVec.single(a, c.get(a)) + FinVec.single(a, v)
        assert code.decode(corrupted) == c


# -- weight-3 codewords ------------------------------------------------------------------


def test_weight3_codeword_f2(code_f2_m3, f2):
    one = f2.parse("1")
    c = code_f2_m3.weight3_codeword(col("(1,0,0)", f2), col("(0,1,0)", f2), one, one)
    assert c == vec("(1,0,0) := 1\n(0,1,0) := 1\n(1,1,0) := 1", f2, 3)


def test_weight3_codeword_f3(code_f3_m2, f3):
    one = f3.parse("1")
    c = code_f3_m2.weight3_codeword(col("(1,0)", f3), col("(0,1)", f3), one, one)
    assert c.norm() == 3
    assert code_f3_m2.contains(c)
    assert c.get(col("(1,1)", f3)) == f3.parse("2")


def test_weight3_codeword_quaternions(code_quat_m2, quaternions):
    i, j = quaternions.parse("i"), quaternions.parse("j")
    c = code_quat_m2.weight3_codeword(
        col("(1,0)", quaternions), col("(0,1)", quaternions), i, j
    )
    assert c.norm() == 3
    assert code_quat_m2.contains(c)


def test_weight3_guard_detects_broken_decoder(f2):
    class BrokenDecode(HammingCode):
        def decode(self, y):
            return y

    code = BrokenDecode(f2, 3)
    one = f2.parse("1")
    with pytest.raises(InconsistencyError):
        code.weight3_codeword(col("(1,0,0)", f2), col("(0,1,0)", f2), one, one)


def test_weight3_generators_counts(code_f2_m3, code_f3_m2):
    gens2 = code_f2_m3.weight3_generators()
    gens3 = code_f3_m2.weight3_generators()
    assert len(gens2) == 7
    assert len(gens3) == 8
    for g in gens2 + gens3:
        assert g.norm() == 3
    assert all(code_f2_m3.contains(g) for g in gens2)
    assert all(code_f3_m2.contains(g) for g in gens3)


def test_weight3_generators_infinite_needs_explicit_sets(code_quat_m2, quaternions):
    with pytest.raises(UnsupportedError):
        code_quat_m2.weight3_generators()
    cols = code_quat_m2.identity_columns()
    scalars = [quaternions.parse(s) for s in ("1", "i")]
    gens = code_quat_m2.weight3_generators(columns=cols, scalars=scalars)
    assert gens
    assert all(g.norm() == 3 and code_quat_m2.contains(g) for g in gens)


# -- ambient enumeration -----------------------------------------------------------------


def test_ambient_sizes(f2, rationals):
    assert HammingCode(f2, 2).ambient_size() == 8
    assert HammingCode(f2, 3).ambient_size() == 128
    assert HammingCode(rationals, 2).ambient_size() is None


def test_all_ambient_vectors(f2, rationals):
    vecs = list(HammingCode(f2, 2).all_ambient_vectors())
    assert len(vecs) == 8
    assert len(set(vecs)) == 8
    with pytest.raises(UnsupportedError):
        list(HammingCode(f2, 3).all_ambient_vectors(budget=10))
    with pytest.raises(UnsupportedError):
        list(HammingCode(rationals, 2).all_ambient_vectors())


@pytest.mark.parametrize(
    "preset,m,size",
    [("f2", 2, 2), ("f2", 3, 16), ("f3", 2, 9), ("gf4", 2, 64)],
)
def test_codeword_counts(preset, m, size):
    code = HammingCode(resolve_preset(preset), m)
    words = code.enumerate_codewords()
    assert len(words) == size
    assert len(set(words)) == size
    assert all(code.contains(w) for w in words)


def test_random_codeword_lands_in_code(code_quat_m2, octonions, code_f3_m2):
    rng = random.Random(9)
    for _ in range(50):
        assert code_quat_m2.contains(code_quat_m2.random_codeword(rng))
    oc = HammingCode(octonions, 2)
    for _ in range(25):
        assert oc.contains(oc.random_codeword(rng))
    for _ in range(25):
        assert code_f3_m2.contains(code_f3_m2.random_codeword(rng))


# -- perfectness verification ------------------------------------------------------------


def test_verify_modes_agree_on_finite_codes(code_f2_m3, code_f3_m2):
    for code in (code_f2_m3, code_f3_m2):
        ex = code.verify_perfect(mode="exhaustive")
        stru = code.verify_perfect(mode="structural")
        assert ex.mode == "exhaustive" and ex.verdict
        assert stru.mode == "structural" and stru.verdict


def test_verify_structural_gf9(gf9):
    rep = HammingCode(gf9, 2).verify_perfect(mode="auto")
    assert rep.mode == "structural"
    assert rep.verdict


def test_verify_exhaustive_fallback_notice(gf9):
    rep = HammingCode(gf9, 2).verify_perfect(mode="exhaustive", budget=100)
    assert rep.mode == "structural"
    assert "fell back" in rep.notice
    assert rep.verdict


def test_verify_sampled_infinite(rationals, octonions):
    rep = HammingCode(rationals, 2).verify_perfect(trials=100, seed=2)
    assert rep.mode == "structural"
    assert rep.trials == 100
    assert rep.verdict
    rep8 = HammingCode(octonions, 2).verify_perfect(trials=50, seed=2)
    assert rep8.verdict


def test_verify_rejects_unknown_mode(code_f3_m2):
    with pytest.raises(UnsupportedError):
        code_f3_m2.verify_perfect(mode="fast")


def test_report_lines_frozen(code_f3_m2):
    lines = code_f3_m2.verify_perfect(mode="exhaustive").lines()
    assert lines == [
        "algebra: f3 (digest 938c09fb6877)",
        "mode: exhaustive",
        "m: 2",
        "q: 3",
        "n: 4",
        "budget: 1048576",
        "code size: 9",
        "covering identity: ok",
        "min distance >= 3: ok",
        "verdict: perfect",
    ]
