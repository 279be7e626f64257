"""Law auditing for coefficient algebras.

Exhaustive mode proves or refutes each law over a finite algebra and returns
lexicographically smallest witnesses.  Sampled mode first probes a small
deterministic family (basis elements for the hypercomplex algebras), then
draws seeded random trials; positive flags then mean "no counterexample".
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..errors import InconsistencyError, UnsupportedError
from .base import Algebra

LAW_NAMES = (
    "left_distributive",
    "right_distributive",
    "left_solvable",
    "right_solvable",
    "associative",
    "commutative",
    "left_unit",
    "right_unit",
    "two_sided_unit",
    "alternative",
)


@dataclass
class LawCheck:
    holds: bool | None
    witness: tuple | None = None
    note: str = ""


@dataclass
class AxiomReport:
    algebra_label: str
    algebra_digest: str
    mode: str
    trials: int | None
    seed: int | None
    laws: dict[str, LawCheck] = field(default_factory=dict)

    def law(self, name: str) -> LawCheck:
        return self.laws[name]

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"mode: {self.mode}"
            + (f" (trials {self.trials}, seed {self.seed})" if self.mode == "sampled" else ""),
        ]
        for name in LAW_NAMES:
            check = self.laws[name]
            if check.holds is True:
                line = f"law {name}: holds"
            elif check.holds is False:
                line = f"law {name}: fails"
                if check.witness is not None:
                    line += f" witness={_format_witness(check.witness)}"
            else:
                line = f"law {name}: undetermined"
            if check.note:
                line += f"  [{check.note}]"
            out.append(line)
        return out


def _format_witness(w) -> str:
    if isinstance(w, tuple):
        parts = []
        for item in w:
            if isinstance(item, tuple):
                parts.append("(" + ",".join(str(x) for x in item) + ")")
            else:
                parts.append(str(item))
        if len(parts) > 4:
            return "(" + ",".join(parts[:4]) + f",... {len(parts)} items)"
        return "(" + ",".join(parts) + ")"
    return str(w)


def _scalarize(alg: Algebra, payload_tuple):
    from .base import Scalar

    return tuple(Scalar(alg, v) for v in payload_tuple)


def _exhaustive(alg: Algebra, report: AxiomReport) -> None:
    els = sorted(alg._elements(), key=alg.sort_key)
    nonzero = [x for x in els if not alg._is_zero(x)]
    mul, addf = alg._mul, alg._add

    def first_triple_fail(pred):
        for a in els:
            for b in els:
                for c in els:
                    if not pred(a, b, c):
                        return (a, b, c)
        return None

    w = first_triple_fail(lambda a, b, c: mul(a, addf(b, c)) == addf(mul(a, b), mul(a, c)))
    report.laws["left_distributive"] = LawCheck(w is None, _scalarize(alg, w) if w else None)
    w = first_triple_fail(lambda a, b, c: mul(addf(a, b), c) == addf(mul(a, c), mul(b, c)))
    report.laws["right_distributive"] = LawCheck(w is None, _scalarize(alg, w) if w else None)
    w = first_triple_fail(lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)))
    report.laws["associative"] = LawCheck(w is None, _scalarize(alg, w) if w else None)

    w = None
    for a in els:
        for b in els:
            if mul(a, b) != mul(b, a):
                w = (a, b)
                break
        if w:
            break
    report.laws["commutative"] = LawCheck(w is None, _scalarize(alg, w) if w else None)

    w = None
    for a in els:
        for b in els:
            if mul(a, mul(a, b)) != mul(mul(a, a), b) or mul(mul(a, b), b) != mul(a, mul(b, b)):
                w = (a, b)
                break
        if w:
            break
    report.laws["alternative"] = LawCheck(w is None, _scalarize(alg, w) if w else None)

    # unique solvability: each nonzero left/right multiplication is a bijection
    def solvable(side: str):
        for a in nonzero:
            seen = {}
            for x in els:
                prod = mul(a, x) if side == "left" else mul(x, a)
                if prod in seen:
                    return (a, seen[prod], x)
                seen[prod] = x
        return None

    w = solvable("left")
    report.laws["left_solvable"] = LawCheck(
        w is None, _scalarize(alg, w) if w else None,
        "" if w is None else "a*x1 = a*x2 with x1 != x2",
    )
    w = solvable("right")
    report.laws["right_solvable"] = LawCheck(
        w is None, _scalarize(alg, w) if w else None,
        "" if w is None else "x1*b = x2*b with x1 != x2",
    )

    left_units = [e for e in els if all(mul(e, x) == x for x in els)]
    right_units = [e for e in els if all(mul(x, e) == x for x in els)]

    def unit_refutation(units_of_other_side, is_left: bool):
        # a right unit is the only possible left unit (and vice versa), so one
        # failing pair refutes existence; otherwise refute every candidate
        if units_of_other_side:
            e = units_of_other_side[0]
            for x in els:
                bad = mul(e, x) != x if is_left else mul(x, e) != x
                if bad:
                    return _scalarize(alg, (e, x))
        pairs = []
        for e in els:
            for x in els:
                bad = mul(e, x) != x if is_left else mul(x, e) != x
                if bad:
                    pairs.append(_scalarize(alg, (e, x)))
                    break
        return tuple(pairs)

    if left_units:
        report.laws["left_unit"] = LawCheck(True, note=f"left unit = {alg.format_value(left_units[0])}")
    else:
        report.laws["left_unit"] = LawCheck(False, unit_refutation(right_units, True))
    if right_units:
        report.laws["right_unit"] = LawCheck(True, note=f"right unit = {alg.format_value(right_units[0])}")
    else:
        report.laws["right_unit"] = LawCheck(False, unit_refutation(left_units, False))
    two_sided = [e for e in left_units if e in right_units]
    if two_sided:
        report.laws["two_sided_unit"] = LawCheck(True, note=f"unit = {alg.format_value(two_sided[0])}")
    else:
        side = "left_unit" if not left_units else "right_unit"
        report.laws["two_sided_unit"] = LawCheck(False, report.laws[side].witness)

    # a finite associative quasifield with unit must be commutative
    core = ("left_distributive", "right_distributive", "left_solvable", "right_solvable")
    if (
        all(report.laws[n].holds for n in core)
        and report.laws["associative"].holds
        and report.laws["two_sided_unit"].holds
        and not report.laws["commutative"].holds
    ):
        raise InconsistencyError(
            f"{alg.label}: audit found an associative unital finite quasifield that is not "
            "commutative; the audit itself is inconsistent"
        )


def _sampled(alg: Algebra, report: AxiomReport, trials: int, seed: int) -> None:
    rng = random.Random(seed)
    probes = alg.probe_values()[:8]
    mul, addf = alg._mul, alg._add

    def stream_triples():
        for a in probes:
            for b in probes:
                for c in probes:
                    yield (a, b, c)
        for _ in range(trials):
            yield (alg._random(rng), alg._random(rng), alg._random(rng))

    def stream_pairs():
        for a in probes:
            for b in probes:
                yield (a, b)
        for _ in range(trials):
            yield (alg._random(rng), alg._random(rng))

    positive = f"no counterexample in {trials} trials"

    def check_triples(pred):
        for a, b, c in stream_triples():
            if not pred(a, b, c):
                return (a, b, c)
        return None

    w = check_triples(lambda a, b, c: mul(a, addf(b, c)) == addf(mul(a, b), mul(a, c)))
    report.laws["left_distributive"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else positive)
    w = check_triples(lambda a, b, c: mul(addf(a, b), c) == addf(mul(a, c), mul(b, c)))
    report.laws["right_distributive"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else positive)
    w = check_triples(lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)))
    report.laws["associative"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else positive)

    w = None
    for a, b in stream_pairs():
        if mul(a, b) != mul(b, a):
            w = (a, b)
            break
    report.laws["commutative"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else positive)

    w = None
    for a, b in stream_pairs():
        if mul(a, mul(a, b)) != mul(mul(a, a), b) or mul(mul(a, b), b) != mul(a, mul(b, b)):
            w = (a, b)
            break
    report.laws["alternative"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else positive)

    def check_solvable(side: str):
        for a, c in stream_pairs():
            if alg._is_zero(a):
                continue
            x = alg._solve_left(a, c) if side == "left" else alg._solve_right(a, c)
            prod = mul(a, x) if side == "left" else mul(x, a)
            if prod != c:
                return (a, c)
        return None

    note_s = positive + "; uniqueness not sampled"
    w = check_solvable("left")
    report.laws["left_solvable"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else note_s)
    w = check_solvable("right")
    report.laws["right_solvable"] = LawCheck(w is None, _scalarize(alg, w) if w else None, "" if w else note_s)

    undecidable = "existence not decidable by sampling"
    for name, unit, is_left in (
        ("left_unit", alg._left_unit(), True),
        ("right_unit", alg._right_unit(), False),
    ):
        if unit is None:
            report.laws[name] = LawCheck(None, note=undecidable)
            continue
        w = None
        for _ in range(trials):
            x = alg._random(rng)
            bad = mul(unit, x) != x if is_left else mul(x, unit) != x
            if bad:
                w = (unit, x)
                break
        report.laws[name] = LawCheck(
            w is None, _scalarize(alg, w) if w else None,
            f"checked declared unit {alg.format_value(unit)}; {positive}" if w is None else "",
        )
    lu, ru = report.laws["left_unit"], report.laws["right_unit"]
    if lu.holds and ru.holds and alg._left_unit() == alg._right_unit():
        report.laws["two_sided_unit"] = LawCheck(True, note=f"unit = {alg.format_value(alg._left_unit())}")
    elif lu.holds is False or ru.holds is False:
        bad = lu if lu.holds is False else ru
        report.laws["two_sided_unit"] = LawCheck(False, bad.witness)
    else:
        report.laws["two_sided_unit"] = LawCheck(None, note=undecidable)


def axiom_audit(alg: Algebra, mode: str = "exhaustive", trials: int = 2000, seed: int = 0) -> AxiomReport:
    if mode == "exhaustive":
        if not alg.is_finite:
            raise UnsupportedError(
                f"{alg.label}: exhaustive audit requires a finite algebra; use sampled mode"
            )
        report = AxiomReport(alg.label, alg.digest(), "exhaustive", None, None)
        _exhaustive(alg, report)
    elif mode == "sampled":
        report = AxiomReport(alg.label, alg.digest(), "sampled", trials, seed)
        _sampled(alg, report, trials, seed)
    else:
        raise UnsupportedError(f"unknown audit mode {mode!r}; expected exhaustive or sampled")
    return report


def is_associative(alg: Algebra) -> bool:
    """Known structural flag, or an exhaustive check for finite table algebras."""
    if alg.associative is not None:
        return alg.associative
    cached = getattr(alg, "_assoc_cache", None)
    if cached is None:
        els = list(alg._elements())
        mul = alg._mul
        cached = all(
            mul(mul(a, b), c) == mul(a, mul(b, c)) for a in els for b in els for c in els
        )
        alg._assoc_cache = cached
    return cached


def is_commutative(alg: Algebra) -> bool:
    if alg.commutative is not None:
        return alg.commutative
    cached = getattr(alg, "_comm_cache", None)
    if cached is None:
        els = list(alg._elements())
        mul = alg._mul
        cached = all(mul(a, b) == mul(b, a) for a in els for b in els)
        alg._comm_cache = cached
    return cached
