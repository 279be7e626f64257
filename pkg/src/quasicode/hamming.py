"""Single-error-correcting codes over a coefficient algebra.

A code handle fixes the algebra, the number of check coordinates m, and one
pivot value per position (the right unit unless overridden).  Coordinates are
the canonical columns: leading zeros, the pivot at the leading position, an
arbitrary tail.  A vector belongs to the code when its syndrome
sum_a x_a * a vanishes; every nonzero dense vector factors uniquely as
y * a with a canonical, which is what normalize computes and what makes the
code perfect.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import Algebra, Scalar, solve_left, solve_right
from .errors import (
    DomainError,
    InconsistencyError,
    InvalidParameterError,
    UnsupportedError,
)
from .finvec import Column, DenseVec, FinVec


class HammingCode:
    def __init__(self, algebra: Algebra, m: int, pivots=None):
        if m < 2:
            raise InvalidParameterError(f"a code needs m >= 2 check coordinates, got {m}")
        self.algebra = algebra
        self.m = m
        if pivots is None:
            unit = algebra.right_unit()
            if unit is None:
                raise InvalidParameterError(
                    f"{algebra.label} has no right unit; pass explicit pivots"
                )
            pivots = (unit,) * m
        else:
            pivots = tuple(pivots)
            if len(pivots) != m:
                raise InvalidParameterError(f"expected {m} pivots, got {len(pivots)}")
            for i, b in enumerate(pivots):
                if b.algebra != algebra:
                    raise DomainError(f"pivot {i} does not belong to {algebra.label}")
                if b.is_zero():
                    raise InvalidParameterError(f"pivot {i} must be nonzero")
        self.pivots = pivots
        self._columns: list[Column] | None = None

    @property
    def label(self) -> str:
        return f"hamming({self.algebra.label}, m={self.m})"

    def column_count(self) -> int | None:
        q = self.algebra.order
        if q is None:
            return None
        return (q**self.m - 1) // (q - 1)

    # -- columns -----------------------------------------------------------------

    def enumerate_columns(self) -> list[Column]:
        """All canonical columns, leading position ascending, tails in scalar order."""
        if not self.algebra.is_finite:
            raise UnsupportedError(
                f"{self.algebra.label}: cannot enumerate columns of an infinite algebra; "
                "use is_canonical_column / normalize"
            )
        if self._columns is None:
            zero = self.algebra.zero()
            els = sorted(self.algebra.elements(), key=Scalar.sort_key)
            cols = []
            for beta in range(self.m):
                head = (zero,) * beta + (self.pivots[beta],)
                for tail in itertools.product(els, repeat=self.m - beta - 1):
                    cols.append(Column(head + tail))
            self._columns = cols
        return list(self._columns)

    def identity_columns(self) -> list[Column]:
        """The m canonical columns with an all-zero tail."""
        zero = self.algebra.zero()
        out = []
        for beta in range(self.m):
            entries = [zero] * self.m
            entries[beta] = self.pivots[beta]
            out.append(Column(entries))
        return out

    def is_canonical_column(self, col: Column) -> bool:
        if col.algebra != self.algebra or col.m != self.m:
            return False
        beta = col.pivot_index()
        return beta is not None and col.entries[beta] == self.pivots[beta]

    def random_column(self, rng, height: int = 10) -> Column:
        beta = rng.randrange(self.m)
        entries = [self.algebra.zero()] * beta + [self.pivots[beta]]
        entries += [self.algebra.random_scalar(rng, height=height) for _ in range(self.m - beta - 1)]
        return Column(entries)

    # -- factorization ------------------------------------------------------------

    def normalize(self, z) -> tuple[Scalar, Column]:
        """Factor a nonzero dense vector uniquely as z = y * a with a canonical."""
        if isinstance(z, Column):
            z = z.to_dense()
        if not isinstance(z, DenseVec):
            raise DomainError("normalize expects a DenseVec or Column")
        if z.algebra != self.algebra or z.m != self.m:
            raise DomainError("vector does not match the code's ambient")
        beta = None
        for i, e in enumerate(z.entries):
            if not e.is_zero():
                beta = i
                break
        if beta is None:
            raise DomainError("normalize: the zero vector has no factorization")
        y = solve_right(self.pivots[beta], z.entries[beta])
        entries = [self.algebra.zero()] * beta + [self.pivots[beta]]
        for i in range(beta + 1, self.m):
            entries.append(solve_left(y, z.entries[i]))
        return y, Column(entries)

    # -- membership and decoding ----------------------------------------------------

    def _check_vector(self, x: FinVec) -> None:
        if x.algebra != self.algebra or x.m != self.m:
            raise DomainError("vector does not match the code's ambient")
        for col in x.support():
            if not self.is_canonical_column(col):
                raise DomainError(f"column {col} is not canonical for this code")

    def syndrome(self, x: FinVec) -> DenseVec:
        """sum over the support of x_a * a (left scalar action)."""
        self._check_vector(x)
        acc = DenseVec.zero(self.algebra, self.m)
        for col, val in x.items():
            acc = acc + col.to_dense().scalar_mul_left(val)
        return acc

    def contains(self, x: FinVec) -> bool:
        return self.syndrome(x).is_zero()

    def syndrome_right(self, x: FinVec) -> DenseVec:
        """sum over the support of a * x_a (right scalar action)."""
        self._check_vector(x)
        acc = DenseVec.zero(self.algebra, self.m)
        for col, val in x.items():
            acc = acc + col.to_dense().scalar_mul_right(val)
        return acc

    def contains_right(self, x: FinVec) -> bool:
        return self.syndrome_right(x).is_zero()

    def decode(self, y: FinVec) -> FinVec:
        """The unique codeword within Hamming distance one of y."""
        z = self.syndrome(y)
        if z.is_zero():
            return y
        alpha0, a0 = self.normalize(z)
        return y - FinVec.single(a0, alpha0)

    # -- weight-3 structure -----------------------------------------------------------

    def weight3_codeword(self, a1: Column, a2: Column, alpha: Scalar, beta: Scalar) -> FinVec:
        """The codeword through alpha at a1 and beta at a2 (third entry decoded)."""
        if a1 == a2:
            raise DomainError("weight3_codeword needs two distinct columns")
        if alpha.is_zero() or beta.is_zero():
            raise DomainError("weight3_codeword needs nonzero entries")
        w2 = FinVec(self.algebra, self.m, [(a1, alpha), (a2, beta)])
        c = self.decode(w2)
        if c.norm() != 3 or (c - w2).norm() != 1:
            raise InconsistencyError(
                "decoding a weight-2 vector did not produce a weight-3 codeword; "
                "the code is not a perfect group code"
            )
        return c

    def weight3_generators(self, columns=None, scalars=None) -> list[FinVec]:
        """Distinct weight-3 codewords over column pairs and nonzero scalar pairs."""
        if columns is None:
            columns = self.enumerate_columns()
        else:
            columns = list(columns)
        if scalars is None:
            if not self.algebra.is_finite:
                raise UnsupportedError(
                    f"{self.algebra.label}: pass an explicit finite scalar set for generator "
                    "enumeration over an infinite algebra"
                )
            scalars = list(self.algebra.nonzero_elements())
        else:
            scalars = list(scalars)
            if any(s.is_zero() for s in scalars):
                raise DomainError("generator scalars must be nonzero")
        seen = set()
        out = []
        for a1, a2 in itertools.combinations(columns, 2):
            for alpha in scalars:
                for beta in scalars:
                    c = self.weight3_codeword(a1, a2, alpha, beta)
                    if c not in seen:
                        seen.add(c)
                        out.append(c)
        return out

    # -- enumeration -------------------------------------------------------------------

    def ambient_size(self) -> int | None:
        q, n = self.algebra.order, self.column_count()
        if q is None:
            return None
        return q**n

    def all_ambient_vectors(self, budget: int = 2**20):
        size = self.ambient_size()
        if size is None:
            raise UnsupportedError(f"{self.algebra.label}: infinite ambient cannot be enumerated")
        if size > budget:
            raise UnsupportedError(
                f"ambient has {size} vectors, over the budget of {budget}"
            )
        cols = self.enumerate_columns()
        els = sorted(self.algebra.elements(), key=Scalar.sort_key)
        for values in itertools.product(els, repeat=len(cols)):
            yield FinVec(self.algebra, self.m, list(zip(cols, values)))

    def enumerate_codewords(self, budget: int = 2**20) -> list[FinVec]:
        return [x for x in self.all_ambient_vectors(budget) if self.contains(x)]

    def random_codeword(self, rng, pieces: int | None = None, height: int = 10) -> FinVec:
        """A random codeword: a sum of random weight-3 codewords."""
        if pieces is None:
            pieces = rng.randint(1, 3)
        acc = FinVec.zero(self.algebra, self.m)
        for _ in range(pieces):
            a1 = self.random_column(rng, height)
            a2 = self.random_column(rng, height)
            while a2 == a1:
                a2 = self.random_column(rng, height)
            alpha = self.algebra.random_scalar(rng, nonzero=True, height=height)
            beta = self.algebra.random_scalar(rng, nonzero=True, height=height)
            acc = acc + self.weight3_codeword(a1, a2, alpha, beta)
        return acc

    # -- perfectness ----------------------------------------------------------------------

    def verify_perfect(
        self,
        mode: str = "auto",
        budget: int = 2**20,
        trials: int = 10000,
        seed: int = 0,
    ) -> "PerfectnessReport":
        if mode not in ("auto", "exhaustive", "structural"):
            raise UnsupportedError(f"unknown verify mode {mode!r}")
        report = PerfectnessReport(
            mode=mode,
            algebra_label=self.algebra.label,
            algebra_digest=self.algebra.digest(),
            m=self.m,
            q=self.algebra.order,
            n=self.column_count(),
            budget=budget,
            trials=None,
            seed=None,
        )
        size = self.ambient_size()
        want_exhaustive = mode == "exhaustive" or (mode == "auto" and size is not None and size <= budget)
        if want_exhaustive and (size is None or size > budget):
            report.notice = (
                "exhaustive enumeration infeasible "
                + ("(infinite algebra)" if size is None else f"({size} vectors > budget {budget})")
                + "; fell back to structural mode"
            )
            want_exhaustive = False
        if want_exhaustive:
            report.mode = "exhaustive"
            self._verify_exhaustive(report, budget)
        else:
            report.mode = "structural"
            if self.algebra.is_finite:
                self._verify_structural_finite(report)
            else:
                report.trials = trials
                report.seed = seed
                self._verify_structural_sampled(report, trials, seed)
        return report

    def _verify_exhaustive(self, report: "PerfectnessReport", budget: int) -> None:
        words = self.enumerate_codewords(budget)
        q, n = self.algebra.order, self.column_count()
        report.code_size = len(words)
        report.covering_identity_ok = len(words) * (1 + n * (q - 1)) == q**n
        report.min_distance_ok = True
        for x, y in itertools.combinations(words, 2):
            if (x - y).norm() < 3:
                report.min_distance_ok = False
                report.witnesses.append(f"codewords at distance < 3: {x!r} vs {y!r}")
                break

    def _verify_structural_finite(self, report: "PerfectnessReport") -> None:
        cols = self.enumerate_columns()
        q = self.algebra.order
        seen: dict[tuple, tuple] = {}
        ok_a = ok_b = True
        for y in self.algebra.nonzero_elements():
            for a in cols:
                z = a.to_dense().scalar_mul_left(y)
                key = z.entries
                if key in seen:
                    ok_a = False
                    report.witnesses.append(
                        f"two factorizations of {z}: ({seen[key][0]},{seen[key][1]}) and ({y},{a})"
                    )
                else:
                    seen[key] = (y, a)
                y2, a2 = self.normalize(z)
                if y2 != y or a2 != a:
                    ok_b = False
                    report.witnesses.append(f"normalize({z}) returned ({y2},{a2}), expected ({y},{a})")
        if len(seen) != q**self.m - 1:
            ok_b = False
            report.witnesses.append(
                f"products cover {len(seen)} of {q ** self.m - 1} nonzero dense vectors"
            )
        report.property_a_ok = ok_a
        report.property_b_ok = ok_b
        report.lines_checked = len(seen)

    def _verify_structural_sampled(self, report: "PerfectnessReport", trials: int, seed: int) -> None:
        import random

        rng = random.Random(seed)
        ok_a = ok_b = True
        for _ in range(trials):
            # (a) a random point of a random line re-derives its own line
            a1 = self.random_column(rng)
            y = self.algebra.random_scalar(rng, nonzero=True)
            z = a1.to_dense().scalar_mul_left(y)
            y2, a2 = self.normalize(z)
            if y2 != y or a2 != a1:
                ok_a = False
                report.witnesses.append(f"normalize({z}) returned ({y2},{a2}), expected ({y},{a1})")
                break
        for _ in range(trials):
            # (b) every nonzero dense vector factors, and the factorization is consistent
            entries = [self.algebra.random_scalar(rng) for _ in range(self.m)]
            z = DenseVec(entries)
            if z.is_zero():
                continue
            y, a = self.normalize(z)
            if y.is_zero() or not self.is_canonical_column(a):
                ok_b = False
                report.witnesses.append(f"normalize({z}) returned a non-canonical factorization")
                break
            if a.to_dense().scalar_mul_left(y) != z:
                ok_b = False
                report.witnesses.append(f"normalize({z}) does not reproduce the vector")
                break
        report.property_a_ok = ok_a
        report.property_b_ok = ok_b


@dataclass
class PerfectnessReport:
    mode: str
    algebra_label: str
    algebra_digest: str
    m: int
    q: int | None
    n: int | None
    budget: int
    trials: int | None
    seed: int | None
    code_size: int | None = None
    covering_identity_ok: bool | None = None
    min_distance_ok: bool | None = None
    property_a_ok: bool | None = None
    property_b_ok: bool | None = None
    lines_checked: int | None = None
    notice: str = ""
    witnesses: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        flags = [
            self.covering_identity_ok,
            self.min_distance_ok,
            self.property_a_ok,
            self.property_b_ok,
        ]
        stated = [f for f in flags if f is not None]
        return bool(stated) and all(stated)

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"mode: {self.mode}",
            f"m: {self.m}",
            f"q: {self.q if self.q is not None else 'infinite'}",
            f"n: {self.n if self.n is not None else 'unbounded'}",
            f"budget: {self.budget}",
        ]
        if self.trials is not None:
            out.append(f"trials: {self.trials}")
            out.append(f"seed: {self.seed}")
        if self.code_size is not None:
            out.append(f"code size: {self.code_size}")
        if self.covering_identity_ok is not None:
            out.append(f"covering identity: {'ok' if self.covering_identity_ok else 'VIOLATED'}")
        if self.min_distance_ok is not None:
            out.append(f"min distance >= 3: {'ok' if self.min_distance_ok else 'VIOLATED'}")
        if self.property_a_ok is not None:
            out.append(f"line disjointness: {'ok' if self.property_a_ok else 'VIOLATED'}")
        if self.property_b_ok is not None:
            out.append(f"factorization totality: {'ok' if self.property_b_ok else 'VIOLATED'}")
        if self.lines_checked is not None:
            out.append(f"nonzero vectors checked: {self.lines_checked}")
        if self.notice:
            out.append(f"notice: {self.notice}")
        for w in self.witnesses[:5]:
            out.append(f"witness: {w}")
        out.append(f"verdict: {'perfect' if self.verdict else 'NOT VERIFIED'}")
        return out
