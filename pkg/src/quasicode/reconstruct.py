"""Rebuilding the coefficient module from a decoder.

Any perfect group code determines scalar arithmetic on pairs (value, column):
the sum of two pairs on distinct columns is read off the unique weight-3
codeword through them, which only needs the code's decode map.  This module
defines that pair arithmetic, checks the module axioms it satisfies, and
re-derives code membership by weight-3 reduction, using decode as the sole
oracle so externally supplied codes work too.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import Scalar, is_associative
from .algebra.audit import LawCheck
from .errors import DomainError, InconsistencyError, UnsupportedError
from .finvec import Column, FinVec


class PairElement:
    """Zero, or a nonzero scalar sitting at one canonical column."""

    __slots__ = ("value", "column")

    def __init__(self, value: Scalar | None = None, column: Column | None = None):
        if value is None or value.is_zero():
            self.value = None
            self.column = None
        else:
            if column is None:
                raise DomainError("a nonzero pair element needs a column")
            if column.algebra != value.algebra:
                raise DomainError("pair value and column live in different algebras")
            self.value = value
            self.column = column

    @classmethod
    def zero(cls) -> "PairElement":
        return cls()

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, PairElement):
            return NotImplemented
        return self.value == other.value and self.column == other.column

    def __hash__(self):
        return hash((PairElement, self.value, self.column))

    def __repr__(self):
        if self.is_zero:
            return "Zero"
        return f"({self.value}, {self.column})"


def _weight3_through(code, u: PairElement, v: PairElement) -> FinVec:
    """The unique weight-3 codeword through two pairs on distinct columns."""
    w2 = FinVec(code.algebra, code.m, [(u.column, u.value), (v.column, v.value)])
    c = code.decode(w2)
    if c.norm() != 3 or (w2 - c).norm() != 1:
        raise InconsistencyError(
            f"decoding {w2!r} produced a correction of the wrong shape; "
            "the supplied code is not a perfect group code"
        )
    return c


def pair_add(code, u: PairElement, v: PairElement) -> PairElement:
    if u.is_zero:
        return v
    if v.is_zero:
        return u
    if u.column == v.column:
        return PairElement(u.value + v.value, u.column)
    c = _weight3_through(code, u, v)
    corr = FinVec(code.algebra, code.m, [(u.column, u.value), (v.column, v.value)]) - c
    ((k, y),) = corr.items()
    return PairElement(y, k)


def pair_scalar_mul(code, alpha: Scalar, u: PairElement) -> PairElement:
    if u.is_zero or alpha.is_zero():
        return PairElement.zero()
    return PairElement(alpha * u.value, u.column)


def enumerate_pairs(code) -> list[PairElement]:
    """Zero plus every (nonzero value, column) pair; finite algebras only."""
    if not code.algebra.is_finite:
        raise UnsupportedError(
            f"{code.algebra.label}: pair elements of an infinite algebra cannot be enumerated"
        )
    out = [PairElement.zero()]
    for col in code.enumerate_columns():
        for val in code.algebra.nonzero_elements():
            out.append(PairElement(val, col))
    return out


def random_pair(code, rng, height: int = 10) -> PairElement:
    return PairElement(
        code.algebra.random_scalar(rng, nonzero=True, height=height),
        code.random_column(rng, height),
    )


_AXIOMS = (
    "add_commutative",
    "add_associative",
    "scalar_distributes_over_pairs",
    "pairs_distribute_over_scalars",
    "scalar_action_associative",
)


@dataclass
class ModuleAxiomReport:
    algebra_label: str
    algebra_digest: str
    code_label: str
    mode: str
    trials: int | None
    seed: int | None
    axioms: dict[str, LawCheck] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(c.holds is not False for c in self.axioms.values())

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"code: {self.code_label}",
            f"mode: {self.mode}",
        ]
        if self.trials is not None:
            out.append(f"trials: {self.trials}")
            out.append(f"seed: {self.seed}")
        for name in _AXIOMS:
            check = self.axioms.get(name)
            if check is None:
                continue
            status = {True: "ok", False: "VIOLATED", None: "skipped"}[check.holds]
            line = f"{name}: {status} ({self.counts.get(name, 0)} cases)"
            if check.witness is not None:
                line += f" witness {check.witness}"
            if check.note:
                line += f" [{check.note}]"
            out.append(line)
        out.append(f"verdict: {'module axioms hold' if self.verdict else 'AXIOM VIOLATED'}")
        return out


def module_axiom_check(
    code,
    mode: str = "auto",
    trials: int = 1000,
    seed: int = 0,
    budget: int = 2**20,
) -> ModuleAxiomReport:
    """Check the module axioms of pair arithmetic over a decode oracle."""
    if mode not in ("auto", "exhaustive", "sampled"):
        raise UnsupportedError(f"unknown axiom-check mode {mode!r}")
    alg = code.algebra
    if mode == "auto":
        q = alg.order
        if q is not None and (q**code.m) ** 3 <= budget:
            mode = "exhaustive"
        else:
            mode = "sampled"
    if mode == "exhaustive" and not alg.is_finite:
        raise UnsupportedError(f"{alg.label}: exhaustive axiom check needs a finite algebra")
    report = ModuleAxiomReport(
        algebra_label=alg.label,
        algebra_digest=alg.digest(),
        code_label=getattr(code, "label", "external code"),
        mode=mode,
        trials=trials if mode == "sampled" else None,
        seed=seed if mode == "sampled" else None,
    )
    if mode == "exhaustive":
        _axioms_exhaustive(code, report)
    else:
        _axioms_sampled(code, report, trials, seed)
    return report


def _record(report, name, failures, count):
    if failures:
        report.axioms[name] = LawCheck(False, failures[0])
    else:
        report.axioms[name] = LawCheck(True)
    report.counts[name] = count


def _axioms_exhaustive(code, report: ModuleAxiomReport) -> None:
    alg = code.algebra
    pairs = enumerate_pairs(code)
    scalars = sorted(alg.elements(), key=Scalar.sort_key)
    table = {}
    for u in pairs:
        for v in pairs:
            table[(u, v)] = pair_add(code, u, v)

    def smul(a, u):
        return pair_scalar_mul(code, a, u)

    fails, count = [], 0
    for u in pairs:
        for v in pairs:
            count += 1
            if table[(u, v)] != table[(v, u)]:
                fails.append(f"{u!r} + {v!r} != {v!r} + {u!r}")
    _record(report, "add_commutative", fails, count)

    fails, count = [], 0
    for u in pairs:
        for v in pairs:
            uv = table[(u, v)]
            for w in pairs:
                count += 1
                if table[(uv, w)] != table[(u, table[(v, w)])]:
                    fails.append(f"({u!r} + {v!r}) + {w!r} != {u!r} + ({v!r} + {w!r})")
    _record(report, "add_associative", fails, count)

    fails, count = [], 0
    for a in scalars:
        for u in pairs:
            for v in pairs:
                count += 1
                lhs = smul(a, table[(u, v)])
                rhs = table[(smul(a, u), smul(a, v))]
                if lhs != rhs:
                    fails.append(f"{a}*({u!r} + {v!r}) != {a}*{u!r} + {a}*{v!r}")
    _record(report, "scalar_distributes_over_pairs", fails, count)

    fails, count = [], 0
    for a in scalars:
        for b in scalars:
            ab = a + b
            for u in pairs:
                count += 1
                if smul(ab, u) != table[(smul(a, u), smul(b, u))]:
                    fails.append(f"({a}+{b})*{u!r} != {a}*{u!r} + {b}*{u!r}")
    _record(report, "pairs_distribute_over_scalars", fails, count)

    if is_associative(alg):
        fails, count = [], 0
        for a in scalars:
            for b in scalars:
                ab = a * b
                for u in pairs:
                    count += 1
                    if smul(a, smul(b, u)) != smul(ab, u):
                        fails.append(f"{a}*({b}*{u!r}) != ({a}*{b})*{u!r}")
        _record(report, "scalar_action_associative", fails, count)
    else:
        report.axioms["scalar_action_associative"] = LawCheck(
            None, note="skipped: scalar multiplication is not associative"
        )
        report.counts["scalar_action_associative"] = 0


def _axioms_sampled(code, report: ModuleAxiomReport, trials: int, seed: int) -> None:
    alg = code.algebra
    rng = random.Random(seed)

    def padd(u, v):
        return pair_add(code, u, v)

    def smul(a, u):
        return pair_scalar_mul(code, a, u)

    fails, count = [], 0
    for _ in range(trials):
        u, v = random_pair(code, rng), random_pair(code, rng)
        count += 1
        if padd(u, v) != padd(v, u):
            fails.append(f"{u!r} + {v!r} != {v!r} + {u!r}")
            break
    _record(report, "add_commutative", fails, count)

    fails, count = [], 0
    for _ in range(trials):
        u, v, w = random_pair(code, rng), random_pair(code, rng), random_pair(code, rng)
        count += 1
        if padd(padd(u, v), w) != padd(u, padd(v, w)):
            fails.append(f"({u!r} + {v!r}) + {w!r} != {u!r} + ({v!r} + {w!r})")
            break
    _record(report, "add_associative", fails, count)

    fails, count = [], 0
    for _ in range(trials):
        a = alg.random_scalar(rng)
        u, v = random_pair(code, rng), random_pair(code, rng)
        count += 1
        if smul(a, padd(u, v)) != padd(smul(a, u), smul(a, v)):
            fails.append(f"{a}*({u!r} + {v!r}) != {a}*{u!r} + {a}*{v!r}")
            break
    _record(report, "scalar_distributes_over_pairs", fails, count)

    fails, count = [], 0
    for _ in range(trials):
        a, b = alg.random_scalar(rng), alg.random_scalar(rng)
        u = random_pair(code, rng)
        count += 1
        if smul(a + b, u) != padd(smul(a, u), smul(b, u)):
            fails.append(f"({a}+{b})*{u!r} != {a}*{u!r} + {b}*{u!r}")
            break
    _record(report, "pairs_distribute_over_scalars", fails, count)

    if is_associative(alg):
        fails, count = [], 0
        for _ in range(trials):
            a, b = alg.random_scalar(rng), alg.random_scalar(rng)
            u = random_pair(code, rng)
            count += 1
            if smul(a, smul(b, u)) != smul(a * b, u):
                fails.append(f"{a}*({b}*{u!r}) != ({a}*{b})*{u!r}")
                break
        _record(report, "scalar_action_associative", fails, count)
    else:
        report.axioms["scalar_action_associative"] = LawCheck(
            None, note="skipped: scalar multiplication is not associative"
        )
        report.counts["scalar_action_associative"] = 0


def membership_by_reduction(code, x: FinVec) -> bool:
    """Decide membership by repeatedly subtracting weight-3 codewords.

    Each step takes the two smallest support columns and subtracts the unique
    weight-3 codeword agreeing with the vector there, shrinking the support.
    The vector was in the code iff the residue reaches zero.
    """
    if x.algebra != code.algebra or x.m != code.m:
        raise DomainError("vector does not match the code's ambient")
    cur = x
    while cur.norm() >= 2:
        (a1, v1), (a2, v2) = cur.items()[:2]
        u = pair_add(code, PairElement(v1, a1), PairElement(v2, a2))
        rest = cur - FinVec(code.algebra, code.m, [(a1, v1), (a2, v2)])
        if u.is_zero:
            nxt = rest
        else:
            nxt = rest + FinVec.single(u.column, u.value)
        if nxt.norm() >= cur.norm():
            raise InconsistencyError(
                "weight-3 reduction failed to shrink the support; "
                "the supplied code is not a perfect group code"
            )
        cur = nxt
    return cur.is_zero()
