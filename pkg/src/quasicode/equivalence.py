"""Isometries between codes and the certificates that classify them.

The pieces here either construct an explicit distance-preserving map between
two codes (different line representatives, changed check basis) or certify
that no such map exists / no stronger linearity holds (column-dependence
invariants, associativity and commutativity escape witnesses, conjugation
onto the right-handed code).
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import (
    Scalar,
    conjugate,
    is_associative,
    is_commutative,
    solve_left,
    solve_right,
    subfield_structure,
)
from .errors import (
    DomainError,
    InconsistencyError,
    InvalidIsometryError,
    InvalidParameterError,
    UnsupportedError,
)
from .finvec import Column, DenseVec, FinVec
from .linalg import nullspace_vector


# -- isometries ------------------------------------------------------------------


class LinearIsometry:
    """Coordinate permutation plus right multipliers, identity off a finite set.

    pi maps columns to columns, alpha gives the multiplier applied on the
    right of each entry.  A rule callback may supply (target, multiplier)
    lazily for columns outside the explicit maps.  value_map, when set,
    replaces the entry value wholesale before the multiplier; it carries the
    per-coordinate scalar bijections of non-linear isometries.
    """

    def __init__(self, algebra, m, pi=None, alpha=None, rule=None, value_map=None):
        self.algebra = algebra
        self.m = m
        self.pi = dict(pi or {})
        self.alpha = dict(alpha or {})
        self.rule = rule
        self.value_map = value_map
        for col, target in self.pi.items():
            if col.algebra != algebra or target.algebra != algebra:
                raise DomainError("isometry columns must belong to the stated algebra")
            if col.m != m or target.m != m:
                raise DomainError("isometry columns must match the stated ambient")
        if len(set(self.pi.values())) != len(self.pi):
            raise InvalidIsometryError("pi maps two columns to the same column")
        for col, mult in self.alpha.items():
            if mult.is_zero():
                raise InvalidIsometryError(f"multiplier at {col} is zero")

    def _resolve(self, col: Column) -> tuple[Column, Scalar | None]:
        if self.rule is not None and col not in self.pi and col not in self.alpha:
            return self.rule(col)
        return self.pi.get(col, col), self.alpha.get(col)

    def apply(self, x: FinVec) -> FinVec:
        if x.algebra != self.algebra or x.m != self.m:
            raise DomainError("vector does not match the isometry's ambient")
        out = []
        seen = {}
        for col, val in x.items():
            target, mult = self._resolve(col)
            if target in seen:
                raise InvalidIsometryError(
                    f"pi sends both {seen[target]} and {col} to {target}"
                )
            seen[target] = col
            if self.value_map is not None:
                val = self.value_map(col, val)
            if mult is not None:
                val = val * mult
            if val.is_zero():
                raise InvalidIsometryError(f"image entry at {target} vanished")
            out.append((target, val))
        return FinVec(x.algebra, x.m, out)


def apply_isometry(isometry: LinearIsometry, x: FinVec) -> FinVec:
    return isometry.apply(x)


# -- choice functions (line representatives) ------------------------------------------


class ChoiceFunction:
    """One nonzero representative scalar per canonical column; default 1."""

    def __init__(self, algebra, mapping=None, default=None):
        self.algebra = algebra
        if default is None:
            default = algebra.right_unit()
            if default is None:
                raise InvalidParameterError(
                    f"{algebra.label} has no right unit; pass an explicit default representative"
                )
        if default.algebra != algebra or default.is_zero():
            raise InvalidParameterError("default representative must be a nonzero scalar")
        self.default = default
        self.mapping = dict(mapping or {})
        for col, c in self.mapping.items():
            if col.algebra != algebra:
                raise DomainError(f"column {col} does not belong to {algebra.label}")
            if c.algebra != algebra or c.is_zero():
                raise InvalidParameterError(f"representative at {col} must be a nonzero scalar")

    def __call__(self, col: Column) -> Scalar:
        return self.mapping.get(col, self.default)

    def representative(self, col: Column) -> DenseVec:
        return col.to_dense().scalar_mul_left(self(col))


def choice_syndrome(code, choice: ChoiceFunction, x: FinVec) -> DenseVec:
    """sum of x_a * (c_a * a) over the support of x."""
    code._check_vector(x)
    acc = DenseVec.zero(code.algebra, code.m)
    for col, val in x.items():
        acc = acc + choice.representative(col).scalar_mul_left(val)
    return acc


def choice_contains(code, choice: ChoiceFunction, x: FinVec) -> bool:
    return choice_syndrome(code, choice, x).is_zero()


def enumerate_choice_codewords(code, choice: ChoiceFunction, budget: int = 2**20) -> list[FinVec]:
    return [x for x in code.all_ambient_vectors(budget) if choice_contains(code, choice, x)]


def _choice_weight3(code, choice, a1, a2, alpha, beta) -> FinVec:
    """Weight-3 codeword of the chosen-representative code through two entries."""
    z = choice.representative(a1).scalar_mul_left(alpha) + choice.representative(a2).scalar_mul_left(beta)
    y0, k = code.normalize(z)
    # the representative at k absorbs part of the scalar: value * c_k = y0
    val = solve_right(choice(k), y0)
    c = FinVec(code.algebra, code.m, [(a1, alpha), (a2, beta)]) - FinVec.single(k, val)
    if c.norm() != 3 or not choice_contains(code, choice, c):
        raise InconsistencyError("failed to build a weight-3 codeword for the chosen representatives")
    return c


def choice_isomorphism(code, e1: ChoiceFunction, e2: ChoiceFunction) -> LinearIsometry:
    """The isometry carrying the code with representatives e1 onto the one with e2.

    Keeps every column in place; the multiplier at column a solves
    alpha * c2_a = c1_a, so syndromes match term by term.
    """
    if not is_associative(code.algebra):
        raise UnsupportedError(
            f"{code.algebra.label}: representative-change isomorphisms need associative scalars"
        )
    if e1.algebra != code.algebra or e2.algebra != code.algebra:
        raise DomainError("choice functions must live over the code's algebra")
    alpha = {}
    default_mult = solve_right(e2.default, e1.default)
    cols = set(e1.mapping) | set(e2.mapping)
    for col in cols:
        alpha[col] = solve_right(e2(col), e1(col))
    rule = None
    unit = code.algebra.right_unit()
    if not (unit is not None and default_mult == unit):
        rule = lambda col, _m=default_mult: (col, _m)  # noqa: E731
    iso = LinearIsometry(code.algebra, code.m, pi={}, alpha=alpha, rule=rule)
    _verify_choice_isometry(code, e1, e2, iso)
    return iso


def _verify_choice_isometry(code, e1, e2, iso, trials: int = 20, seed: int = 0) -> None:
    """Map a batch of weight-3 codewords and insist the images land in the target."""
    alg = code.algebra
    if alg.is_finite:
        cols = code.enumerate_columns()
        pairs = itertools.combinations(cols, 2)
        scalars = list(alg.nonzero_elements())
        batch = ((a1, a2, s1, s2) for a1, a2 in pairs for s1 in scalars for s2 in scalars)
    else:
        rng = random.Random(seed)
        batch = (
            (code.random_column(rng), code.random_column(rng),
             alg.random_scalar(rng, nonzero=True), alg.random_scalar(rng, nonzero=True))
            for _ in range(trials)
        )
    for a1, a2, s1, s2 in batch:
        if a1 == a2:
            continue
        g = _choice_weight3(code, e1, a1, a2, s1, s2)
        if not choice_contains(code, e2, iso.apply(g)):
            raise InconsistencyError(
                f"representative-change isometry does not carry {g!r} into the target code"
            )


# -- basis changes ------------------------------------------------------------------


class BasisChange:
    """Invertible check-basis substitution, built from elementary operations.

    The matrix acts on row vectors from the right: (vM)_j = sum_i v_i * M[i][j].
    """

    def __init__(self, algebra, rows, provenance=()):
        self.algebra = algebra
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(self.rows)
        for r in self.rows:
            if len(r) != self.m:
                raise InvalidParameterError("basis change matrix must be square")
            for e in r:
                if e.algebra != algebra:
                    raise DomainError("matrix entries must belong to the stated algebra")
        self.provenance = tuple(provenance)

    @classmethod
    def identity(cls, algebra, m) -> "BasisChange":
        unit = algebra.right_unit()
        if unit is None:
            raise UnsupportedError(f"{algebra.label} has no unit to build matrices from")
        zero = algebra.zero()
        rows = [[unit if i == j else zero for j in range(m)] for i in range(m)]
        return cls(algebra, rows, ("identity",))

    @classmethod
    def swap(cls, algebra, m, i, j) -> "BasisChange":
        _check_index(m, i)
        _check_index(m, j)
        if i == j:
            raise InvalidParameterError("swap needs two distinct coordinates")
        base = cls.identity(algebra, m)
        rows = [list(r) for r in base.rows]
        rows[i], rows[j] = rows[j], rows[i]
        return cls(algebra, rows, (f"swap({i},{j})",))

    @classmethod
    def scale(cls, algebra, m, i, alpha: Scalar) -> "BasisChange":
        _check_index(m, i)
        if alpha.algebra != algebra or alpha.is_zero():
            raise InvalidParameterError("scale factor must be a nonzero scalar of the algebra")
        base = cls.identity(algebra, m)
        rows = [list(r) for r in base.rows]
        rows[i][i] = alpha
        return cls(algebra, rows, (f"scale({i},{alpha})",))

    @classmethod
    def shear(cls, algebra, m, i, j, alpha: Scalar) -> "BasisChange":
        """Adds alpha times coordinate i into coordinate j."""
        _check_index(m, i)
        _check_index(m, j)
        if i == j:
            raise InvalidParameterError("shear needs two distinct coordinates")
        if alpha.algebra != algebra:
            raise DomainError("shear factor must belong to the stated algebra")
        base = cls.identity(algebra, m)
        rows = [list(r) for r in base.rows]
        rows[i][j] = alpha
        return cls(algebra, rows, (f"shear({i},{j},{alpha})",))

    @classmethod
    def from_ops(cls, algebra, m, ops) -> "BasisChange":
        """Compose ("swap", i, j) / ("scale", i, alpha) / ("shear", i, j, alpha) steps."""
        acc = cls.identity(algebra, m)
        for op in ops:
            name, *args = op
            if name == "swap":
                step = cls.swap(algebra, m, *args)
            elif name == "scale":
                step = cls.scale(algebra, m, *args)
            elif name == "shear":
                step = cls.shear(algebra, m, *args)
            else:
                raise InvalidParameterError(f"unknown basis operation {name!r}")
            acc = acc.compose(step)
        return acc

    def compose(self, other: "BasisChange") -> "BasisChange":
        """First apply self, then other: the product matrix self.rows * other.rows."""
        if other.algebra != self.algebra or other.m != self.m:
            raise DomainError("cannot compose basis changes over different ambients")
        zero = self.algebra.zero()
        rows = []
        for i in range(self.m):
            row = []
            for j in range(self.m):
                acc = zero
                for k in range(self.m):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        prov = tuple(p for p in self.provenance + other.provenance if p != "identity")
        return BasisChange(self.algebra, rows, prov or ("identity",))

    def apply_row(self, entries) -> tuple[Scalar, ...]:
        entries = tuple(entries)
        if len(entries) != self.m:
            raise DomainError("row vector length does not match the matrix")
        out = []
        for j in range(self.m):
            acc = self.algebra.zero()
            for i in range(self.m):
                if not entries[i].is_zero():
                    acc = acc + entries[i] * self.rows[i][j]
            out.append(acc)
        return tuple(out)

    def __str__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows)
        return f"[{body}]"


def _check_index(m: int, i: int) -> None:
    if not 0 <= i < m:
        raise InvalidParameterError(f"coordinate {i} out of range for m={m}")


def basis_change_isomorphism(code, change: BasisChange) -> LinearIsometry:
    """The isometry induced on coordinates by substituting the check basis.

    Each column's row vector is pushed through the matrix and re-normalized:
    aM = alpha_a * pi(a).  The code is carried onto itself.
    """
    if not is_associative(code.algebra):
        raise UnsupportedError(
            f"{code.algebra.label}: basis-change isomorphisms need associative scalars"
        )
    if change.algebra != code.algebra or change.m != code.m:
        raise DomainError("basis change does not match the code's ambient")

    def image(col: Column) -> tuple[Column, Scalar]:
        dense = DenseVec(change.apply_row(col.entries))
        if dense.is_zero():
            raise InvalidIsometryError(f"basis change annihilates column {col}; matrix is singular")
        y, target = code.normalize(dense)
        return target, y

    if code.algebra.is_finite:
        pi, alpha = {}, {}
        cols = code.enumerate_columns()
        for col in cols:
            target, y = image(col)
            pi[col] = target
            alpha[col] = y
        if len(set(pi.values())) != len(cols):
            raise InvalidIsometryError("basis change does not permute the columns; matrix is singular")
        return LinearIsometry(code.algebra, code.m, pi=pi, alpha=alpha)
    return LinearIsometry(code.algebra, code.m, rule=image)


# -- column dependence over the base subfield ----------------------------------------


def support_witness(code, columns, budget: int = 2**20) -> FinVec | None:
    """A nonzero codeword supported inside the given columns, or None.

    Left-coefficient dependence is rewritten as a linear system over the
    algebra's base subfield through its structure constants; algebras without
    that structure fall back to bounded brute force.
    """
    cols = sorted(set(columns))
    if not cols:
        return None
    for col in cols:
        if not code.is_canonical_column(col):
            raise DomainError(f"column {col} is not canonical for this code")
    st = subfield_structure(code.algebra)
    if st is not None:
        witness = _witness_linearized(code, cols, st)
    else:
        witness = _witness_brute(code, cols, budget)
    if witness is not None and not code.contains(witness):
        raise InconsistencyError("computed dependence witness fails the syndrome check")
    return witness


def _witness_linearized(code, cols, st) -> FinVec | None:
    ops = st.field_ops()
    s = st.dimension
    ncols = s * len(cols)
    rows = []
    expanded = [
        [st.expand_raw(entry.value) for entry in col.entries]
        for col in cols
    ]
    for l in range(code.m):
        for w in range(s):
            row = [ops.zero] * ncols
            for n in range(len(cols)):
                entry = expanded[n][l]
                for r in range(s):
                    acc = ops.zero
                    for q in range(s):
                        if not ops.is_zero(entry[q]):
                            c = st.constants_raw[r][q][w]
                            if not ops.is_zero(c):
                                acc = ops.add(acc, ops.mul(entry[q], c))
                    row[s * n + r] = acc
            rows.append(row)
    sol = nullspace_vector(rows, ncols, ops)
    if sol is None:
        return None
    entries = []
    for n, col in enumerate(cols):
        val = st.recombine(sol[s * n : s * n + s])
        if not val.is_zero():
            entries.append((col, val))
    return FinVec(code.algebra, code.m, entries)


def _witness_brute(code, cols, budget: int) -> FinVec | None:
    alg = code.algebra
    q = alg.order
    if q is None:
        raise UnsupportedError(
            f"{alg.label}: no subfield structure and the algebra is infinite; "
            "dependence search is not possible"
        )
    if q ** len(cols) > budget:
        raise UnsupportedError(
            f"brute-force dependence search over {q ** len(cols)} tuples exceeds the budget {budget}"
        )
    els = sorted(alg.elements(), key=Scalar.sort_key)
    for values in itertools.product(els, repeat=len(cols)):
        if all(v.is_zero() for v in values):
            continue
        x = FinVec(alg, code.m, [(c, v) for c, v in zip(cols, values) if not v.is_zero()])
        if code.contains(x):
            return x
    return None


@dataclass
class DistinguishReport:
    algebra_label: str
    algebra_digest: str
    m1: int
    m2: int
    mode: str
    samples: int | None
    seed: int | None
    independent_ok: bool = False
    dependent_checked: int = 0
    dependent_failures: list[str] = field(default_factory=list)
    example_witness: str = ""

    @property
    def verdict(self) -> bool:
        return self.independent_ok and self.dependent_checked > 0 and not self.dependent_failures

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"codes: m={self.m1} vs m={self.m2}",
            f"mode: {self.mode}",
        ]
        if self.samples is not None:
            out.append(f"samples: {self.samples}")
            out.append(f"seed: {self.seed}")
        out.append(
            "identity columns of the larger code support no nonzero codeword: "
            + ("ok" if self.independent_ok else "VIOLATED")
        )
        out.append(
            f"size-{self.m2} column sets of the smaller code all support a codeword: "
            + ("ok" if not self.dependent_failures else "VIOLATED")
            + f" ({self.dependent_checked} sets)"
        )
        if self.example_witness:
            out.append(f"example dependence: {self.example_witness}")
        for f in self.dependent_failures[:5]:
            out.append(f"failure: {f}")
        out.append(f"verdict: {'codes distinguished' if self.verdict else 'NOT DISTINGUISHED'}")
        return out


def distinguish_invariant(code_a, code_b, samples: int = 100, seed: int = 0, budget: int = 2**20) -> DistinguishReport:
    """Separate two codes over one algebra by maximal-independent-set size.

    The larger code's identity columns admit no dependence; every size-m2
    column set of the smaller code does.  Both halves go through
    support_witness, so an equivalence could not flip the outcome.
    """
    if code_a.algebra != code_b.algebra:
        raise DomainError("distinguishing codes requires a common algebra")
    m1, m2 = code_a.m, code_b.m
    if m1 >= m2:
        raise InvalidParameterError(f"expected m1 < m2, got {m1} and {m2}")
    alg = code_a.algebra
    finite = alg.is_finite
    report = DistinguishReport(
        algebra_label=alg.label,
        algebra_digest=alg.digest(),
        m1=m1,
        m2=m2,
        mode="exhaustive" if finite else "sampled",
        samples=None if finite else samples,
        seed=None if finite else seed,
    )
    report.independent_ok = support_witness(code_b, code_b.identity_columns(), budget) is None

    if finite:
        sets = itertools.combinations(code_a.enumerate_columns(), m2)
    else:
        rng = random.Random(seed)

        def sample_sets():
            for _ in range(samples):
                chosen = []
                while len(chosen) < m2:
                    col = code_a.random_column(rng)
                    if col not in chosen:
                        chosen.append(col)
                yield tuple(chosen)

        sets = sample_sets()
    for cols in sets:
        report.dependent_checked += 1
        w = support_witness(code_a, cols, budget)
        if w is None:
            report.dependent_failures.append(f"independent set found: {', '.join(map(str, cols))}")
        elif not report.example_witness:
            report.example_witness = str(w)
    return report


# -- linearity escape witnesses ------------------------------------------------------


@dataclass
class NonassocWitnessReport:
    algebra_label: str
    algebra_digest: str
    associative: bool
    triple: tuple[Scalar, Scalar, Scalar] | None = None
    codeword: FinVec | None = None
    violation: FinVec | None = None
    in_code: bool | None = None
    scan: str = ""

    @property
    def verdict(self) -> bool:
        if self.associative:
            return self.triple is None
        return (
            self.violation is not None
            and not self.violation.is_zero()
            and self.violation.norm() <= 2
            and self.in_code is False
        )

    def lines(self) -> list[str]:
        out = [f"algebra: {self.algebra_label} (digest {self.algebra_digest})"]
        if self.scan:
            out.append(f"scan: {self.scan}")
        if self.associative:
            out.append("associative: no witness")
            out.append(f"verdict: {'claim holds' if self.verdict else 'INCONSISTENT'}")
            return out
        a, b, c = self.triple
        out.append(f"triple: a={a} b={b} c={c}")
        out.append(f"a(bc)={a * (b * c)} (ab)c={(a * b) * c}")
        out.append(f"codeword y: {self.codeword!r}")
        out.append(f"a(by) - (ab)y: {self.violation!r}")
        out.append(f"violation weight: {self.violation.norm()}")
        out.append(f"violation in code: {self.in_code}")
        out.append(
            "verdict: "
            + ("left scaling escapes the code" if self.verdict else "WITNESS NOT VERIFIED")
        )
        return out


def _first_nonassoc_triple(alg):
    """Deterministic scan for a(bc) != (ab)c; exhaustive when finite."""
    if alg.is_finite:
        pool = sorted(alg.elements(), key=Scalar.sort_key)
        scan = f"exhaustive over {len(pool)}^3 triples"
    else:
        pool = alg.probe_scalars()
        scan = f"probe scan over {len(pool)}^3 triples"
    for a in pool:
        for b in pool:
            for c in pool:
                if a * (b * c) != (a * b) * c:
                    return (a, b, c), scan
    return None, scan


def nonassoc_witness(code) -> NonassocWitnessReport:
    """Certify that a nonassociative quasifield's code admits no left scaling.

    From a triple with a(bc) != (ab)c and a weight-3 codeword y starting with
    the right unit, the vector a(by) - (ab)y is nonzero of weight at most 2,
    so it cannot be a codeword even though left-closedness would force it.
    """
    alg = code.algebra
    unit = alg.right_unit()
    if unit is None:
        raise UnsupportedError(f"{alg.label}: the witness construction needs a right unit")
    report = NonassocWitnessReport(
        algebra_label=alg.label,
        algebra_digest=alg.digest(),
        associative=bool(is_associative(alg)),
    )
    if report.associative:
        report.scan = "skipped (algebra is associative)"
        return report
    triple, report.scan = _first_nonassoc_triple(alg)
    if triple is None:
        raise InconsistencyError(
            f"{alg.label} is flagged nonassociative but no violating triple was found"
        )
    a, b, c = triple
    report.triple = triple
    i1, i2 = code.identity_columns()[:2]
    y = code.weight3_codeword(i1, i2, unit, c)
    report.codeword = y
    report.violation = y.scalar_mul_left(b).scalar_mul_left(a) - y.scalar_mul_left(a * b)
    report.in_code = code.contains(report.violation)
    if not report.verdict:
        raise InconsistencyError("nonassociativity witness failed verification")
    return report


@dataclass
class RightLinearityReport:
    algebra_label: str
    algebra_digest: str
    commutative: bool
    mode: str
    checked: int = 0
    trials: int | None = None
    seed: int | None = None
    witness_codeword: FinVec | None = None
    witness_scalar: Scalar | None = None
    disagreement: str = ""

    @property
    def verdict(self) -> bool:
        if self.commutative:
            return not self.disagreement and self.checked > 0
        return self.witness_codeword is not None

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"commutative: {self.commutative}",
            f"mode: {self.mode}",
        ]
        if self.trials is not None:
            out.append(f"trials: {self.trials}")
            out.append(f"seed: {self.seed}")
        if self.commutative:
            out.append(f"generators checked against right membership: {self.checked}")
            if self.disagreement:
                out.append(f"disagreement: {self.disagreement}")
            out.append(
                "verdict: "
                + ("left and right linearity agree" if self.verdict else "AGREEMENT VIOLATED")
            )
        else:
            out.append(f"codeword: {self.witness_codeword!r}")
            out.append(f"right multiplier: {self.witness_scalar}")
            out.append(
                "verdict: "
                + ("right scaling escapes the code" if self.verdict else "NO WITNESS FOUND")
            )
        return out


def _first_noncommuting_pair(alg):
    if alg.is_finite:
        pool = sorted(alg.elements(), key=Scalar.sort_key)
    else:
        pool = alg.probe_scalars()
    for a in pool:
        for b in pool:
            if a * b != b * a:
                return a, b
    return None


def right_linearity_witness(code, trials: int = 200, seed: int = 0) -> RightLinearityReport:
    """Confirm right linearity over commutative scalars, refute it otherwise."""
    alg = code.algebra
    if not is_associative(alg):
        raise UnsupportedError(f"{alg.label}: right-linearity analysis needs associative scalars")
    commutative = bool(is_commutative(alg))
    report = RightLinearityReport(
        algebra_label=alg.label,
        algebra_digest=alg.digest(),
        commutative=commutative,
        mode="exhaustive" if alg.is_finite else "sampled",
        trials=None if alg.is_finite else trials,
        seed=None if alg.is_finite else seed,
    )
    if commutative:
        if alg.is_finite:
            gens = code.weight3_generators()
        else:
            rng = random.Random(seed)
            gens = []
            for _ in range(trials):
                a1 = code.random_column(rng)
                a2 = code.random_column(rng)
                while a2 == a1:
                    a2 = code.random_column(rng)
                gens.append(
                    code.weight3_codeword(
                        a1,
                        a2,
                        alg.random_scalar(rng, nonzero=True),
                        alg.random_scalar(rng, nonzero=True),
                    )
                )
        for g in gens:
            report.checked += 1
            if not code.contains_right(g):
                report.disagreement = f"{g!r} fails right membership"
                break
        return report
    pair = _first_noncommuting_pair(alg)
    if pair is None:
        raise InconsistencyError(
            f"{alg.label} is flagged noncommutative but no violating pair was found"
        )
    a, b = pair
    i1, i2 = code.identity_columns()[:2]
    g = code.weight3_codeword(i1, i2, a, b)
    candidates = [s for s in alg.probe_scalars() if not s.is_zero()]
    if alg.is_finite:
        candidates = list(alg.nonzero_elements())
    for gamma in candidates:
        if not code.contains(g.scalar_mul_right(gamma)):
            report.witness_codeword = g
            report.witness_scalar = gamma
            return report
    raise InconsistencyError(
        "right multiples of the probe codeword all stayed in the code; "
        "expected an escape over a noncommutative algebra"
    )


# -- conjugation onto the right-handed code ---------------------------------------------


@dataclass
class ConjugateCodeReport:
    algebra_label: str
    algebra_digest: str
    samples: int
    seed: int
    passes: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.passes > 0 and not self.failures

    def lines(self) -> list[str]:
        out = [
            f"algebra: {self.algebra_label} (digest {self.algebra_digest})",
            f"samples: {self.samples}",
            f"seed: {self.seed}",
            f"conjugate images in the right code: {self.passes}/{self.passes + len(self.failures)}",
        ]
        for f in self.failures[:5]:
            out.append(f"failure: {f}")
        out.append(f"verdict: {'conjugation lands in the right code' if self.verdict else 'VIOLATED'}")
        return out


def _normalize_right(code, z: DenseVec) -> tuple[Scalar, Column]:
    """Mirror of normalize for the right action: z = a * y with a canonical."""
    beta = None
    for i, e in enumerate(z.entries):
        if not e.is_zero():
            beta = i
            break
    if beta is None:
        raise DomainError("cannot right-normalize the zero vector")
    y = solve_left(code.pivots[beta], z.entries[beta])
    entries = [code.algebra.zero()] * beta + [code.pivots[beta]]
    for i in range(beta + 1, code.m):
        entries.append(solve_right(y, z.entries[i]))
    return y, Column(entries)


def conjugate_image(code, x: FinVec) -> FinVec:
    """Conjugate every entry and re-index columns right-canonically."""
    out = {}
    for col, val in x.items():
        dense = DenseVec(tuple(conjugate(e) for e in col.entries))
        y, target = _normalize_right(code, dense)
        if target in out:
            raise InvalidIsometryError(f"two columns re-index to {target} under conjugation")
        out[target] = y * conjugate(val)
    return FinVec(code.algebra, code.m, list(out.items()))


def conjugate_code_check(code, samples: int = 1000, seed: int = 0) -> ConjugateCodeReport:
    """Push random codewords through conjugation and test right membership."""
    alg = code.algebra
    if alg.kind != "quaternions":
        raise UnsupportedError(
            f"{alg.label}: the conjugation isomorphism is implemented for quaternions only"
        )
    report = ConjugateCodeReport(
        algebra_label=alg.label,
        algebra_digest=alg.digest(),
        samples=samples,
        seed=seed,
    )
    rng = random.Random(seed)
    for _ in range(samples):
        x = code.random_codeword(rng)
        image = conjugate_image(code, x)
        if code.contains_right(image):
            report.passes += 1
        else:
            report.failures.append(f"conjugate of {x!r} fails right membership")
    return report
