"""Scalar values and the common interface of the coefficient algebras.

An Algebra implements exact arithmetic on raw payloads; Scalar is the thin
public wrapper that carries the algebra reference and supports operators.
Division is deliberately absent from Scalar: in a noncommutative or
nonassociative algebra the two one-sided quotients differ, so callers must
pick solve_left (a*x = c) or solve_right (x*b = c) explicitly.
"""
from __future__ import annotations

import hashlib
import json
from abc import ABC, abstractmethod
from typing import Iterator

from ..errors import DomainError, UnsupportedError


class Algebra(ABC):
    kind: str = "?"
    # Structural facts known from the construction; None means "determine by audit".
    associative: bool | None = None
    commutative: bool | None = None
    alternative: bool | None = None

    def __init__(self, label: str):
        self.label = label
        self._digest: str | None = None

    # -- payload-level arithmetic -------------------------------------------------

    @abstractmethod
    def _add(self, x, y): ...

    @abstractmethod
    def _neg(self, x): ...

    @abstractmethod
    def _mul(self, x, y): ...

    @abstractmethod
    def _solve_left(self, a, c):
        """Unique x with a*x = c, a nonzero."""

    @abstractmethod
    def _solve_right(self, b, c):
        """Unique x with x*b = c, b nonzero."""

    @abstractmethod
    def _zero(self): ...

    @abstractmethod
    def _is_zero(self, x) -> bool: ...

    @abstractmethod
    def _canonical(self, x):
        """Validate and canonicalize a raw payload."""

    # -- structure ----------------------------------------------------------------

    @property
    @abstractmethod
    def is_finite(self) -> bool: ...

    @property
    def order(self) -> int | None:
        return None

    def _elements(self) -> Iterator:
        raise UnsupportedError(f"{self.label}: cannot enumerate an infinite algebra")

    def _right_unit(self):
        """Payload of the right unit, or None."""
        return None

    def _left_unit(self):
        return None

    @abstractmethod
    def _random(self, rng, height: int = 10): ...

    @abstractmethod
    def sort_key(self, x): ...

    @abstractmethod
    def format_value(self, x) -> str: ...

    @abstractmethod
    def parse_value(self, text: str): ...

    @abstractmethod
    def spec_dict(self) -> dict:
        """Canonical JSON-able description; the digest and equality are derived from it."""

    def probe_values(self) -> list:
        """Small deterministic payload list probed first by sampled searches."""
        if self.is_finite:
            return [x for x in self._elements() if not self._is_zero(x)]
        return []

    # -- public Scalar-level API ----------------------------------------------------

    def scalar(self, value) -> "Scalar":
        return Scalar(self, self._canonical(value))

    def zero(self) -> "Scalar":
        return Scalar(self, self._zero())

    def right_unit(self) -> "Scalar | None":
        u = self._right_unit()
        return None if u is None else Scalar(self, u)

    def left_unit(self) -> "Scalar | None":
        u = self._left_unit()
        return None if u is None else Scalar(self, u)

    def unit(self) -> "Scalar | None":
        r, l = self._right_unit(), self._left_unit()
        if r is not None and l is not None and r == l:
            return Scalar(self, r)
        return None

    def elements(self) -> Iterator["Scalar"]:
        for x in self._elements():
            yield Scalar(self, x)

    def nonzero_elements(self) -> Iterator["Scalar"]:
        for x in self._elements():
            if not self._is_zero(x):
                yield Scalar(self, x)

    def random_scalar(self, rng, nonzero: bool = False, height: int = 10) -> "Scalar":
        while True:
            x = self._random(rng, height)
            if not nonzero or not self._is_zero(x):
                return Scalar(self, x)

    def parse(self, text: str) -> "Scalar":
        return Scalar(self, self._canonical(self.parse_value(text)))

    def probe_scalars(self) -> list["Scalar"]:
        return [Scalar(self, x) for x in self.probe_values()]

    def digest(self) -> str:
        if self._digest is None:
            blob = json.dumps(self.spec_dict(), sort_keys=True, separators=(",", ":"))
            self._digest = hashlib.sha256(blob.encode()).hexdigest()[:12]
        return self._digest

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.kind == other.kind and self.digest() == other.digest()

    def __hash__(self) -> int:
        return hash((self.kind, self.digest()))

    def __repr__(self) -> str:
        return f"<algebra {self.label}>"


def same_algebra(a: Algebra, b: Algebra, what: str = "operands") -> None:
    if a != b:
        raise DomainError(f"mixed algebras: {what} live in {a.label} and {b.label}")


class Scalar:
    __slots__ = ("algebra", "value")

    def __init__(self, algebra: Algebra, value):
        self.algebra = algebra
        self.value = value

    def is_zero(self) -> bool:
        return self.algebra._is_zero(self.value)

    def sort_key(self):
        return self.algebra.sort_key(self.value)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        same_algebra(self.algebra, other.algebra)
        return Scalar(self.algebra, self.algebra._add(self.value, other.value))

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        same_algebra(self.algebra, other.algebra)
        return Scalar(self.algebra, self.algebra._add(self.value, self.algebra._neg(other.value)))

    def __neg__(self):
        return Scalar(self.algebra, self.algebra._neg(self.value))

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        same_algebra(self.algebra, other.algebra)
        return Scalar(self.algebra, self.algebra._mul(self.value, other.value))

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.algebra == other.algebra and self.value == other.value

    def __hash__(self):
        return hash((self.algebra, self.value))

    def __lt__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        same_algebra(self.algebra, other.algebra, "compared scalars")
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.algebra.format_value(self.value)

    def __repr__(self):
        return f"Scalar({self.algebra.label}, {self})"


# Module-level operation names mirroring the scalar op surface.

def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def neg(a: Scalar) -> Scalar:
    return -a


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def solve_left(a: Scalar, c: Scalar) -> Scalar:
    """The unique x with a*x = c."""
    same_algebra(a.algebra, c.algebra)
    if a.is_zero():
        raise DomainError("solve_left: left factor must be nonzero")
    return Scalar(a.algebra, a.algebra._solve_left(a.value, c.value))


def solve_right(b: Scalar, c: Scalar) -> Scalar:
    """The unique x with x*b = c."""
    same_algebra(b.algebra, c.algebra)
    if b.is_zero():
        raise DomainError("solve_right: right factor must be nonzero")
    return Scalar(b.algebra, b.algebra._solve_right(b.value, c.value))
