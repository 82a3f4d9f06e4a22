"""Symmetric bilinear forms over Z: evaluation, parity, classification,
isomorphism decisions, and exact solving of v.v = c on rank-2 forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .intlin import (
    IntMatrix,
    congruence_transform,
    determinant,
    inertia,
    matrix_from_json,
    matrix_to_json,
)

EVEN = "even"
ODD = "odd"

DEFAULT_ISO_SEARCH_BOUND = 10


@dataclass(frozen=True)
class QuadraticForm:
    """Integral symmetric bilinear form with optional basis labels."""

    gram: IntMatrix
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if not self.gram.is_symmetric:
            raise ValueError("Gram matrix must be symmetric")
        if self.labels is not None and len(self.labels) != self.gram.rows:
            raise ValueError("label count must match the rank")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> "QuadraticForm":
        return cls(IntMatrix.from_rows(rows), tuple(labels) if labels is not None else None)

    @property
    def rank(self) -> int:
        return self.gram.rows

    def to_json_obj(self) -> dict:
        return {
            "gram": matrix_to_json(self.gram),
            "labels": list(self.labels) if self.labels is not None else None,
        }

    @classmethod
    def from_json_obj(cls, obj) -> "QuadraticForm":
        if not isinstance(obj, dict) or "gram" not in obj:
            raise ValueError("form JSON must be an object with a 'gram' key")
        labels = obj.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
                raise ValueError("form labels must be an array of strings")
            labels = tuple(labels)
        return cls(matrix_from_json(obj["gram"]), labels)


@dataclass(frozen=True)
class FormClass:
    """Classification data of an integral symmetric form."""

    rank: int
    signature: int
    parity: str
    definiteness: str
    unimodular: bool

    def to_json_obj(self) -> dict:
        return {
            "rank": self.rank,
            "signature": self.signature,
            "parity": self.parity,
            "definiteness": self.definiteness,
            "unimodular": self.unimodular,
        }

    def describe(self) -> str:
        uni = "unimodular" if self.unimodular else "non-unimodular"
        return "rank %d, signature %d, %s, %s, %s" % (
            self.rank,
            self.signature,
            self.parity,
            self.definiteness,
            uni,
        )


def parity(F: QuadraticForm) -> str:
    """Even iff v.v is even for every v, i.e. every diagonal entry is even."""
    diag_even = all(F.gram.entries[i][i] % 2 == 0 for i in range(F.rank))
    return EVEN if diag_even else ODD


def classify(F: QuadraticForm) -> FormClass:
    pos, neg, zero = inertia(F.gram)
    rank = F.rank
    if zero > 0:
        definiteness = "degenerate"
    elif pos == rank:
        definiteness = "positive"
    elif neg == rank:
        definiteness = "negative"
    else:
        definiteness = "indefinite"
    return FormClass(
        rank=rank,
        signature=pos - neg,
        parity=parity(F),
        definiteness=definiteness,
        unimodular=abs(determinant(F.gram)) == 1,
    )


def pairing(F: QuadraticForm, u: Sequence[int], v: Sequence[int]) -> int:
    """The bilinear pairing u.v = u^T gram v."""
    if len(u) != F.rank or len(v) != F.rank:
        raise ValueError("vector length does not match the rank of the form")
    g = F.gram.entries
    return sum(u[i] * g[i][j] * v[j] for i in range(F.rank) for j in range(F.rank))


def is_isomorphic(F: QuadraticForm, G: QuadraticForm, bound: int = DEFAULT_ISO_SEARCH_BOUND) -> str:
    """Decide integral equivalence; one of "yes", "no", "undecided".

    Rank, determinant, signature, and parity are congruence invariants, so
    any mismatch is a definitive "no".  When the invariants agree and both
    forms are unimodular and indefinite, the classification of indefinite
    unimodular forms by (rank, signature, parity) gives a definitive "yes".
    Otherwise rank <= 2 forms get a bounded search over basis changes, and
    anything that remains is reported as undecided rather than guessed.
    """
    if F.gram.entries == G.gram.entries:
        return "yes"
    cf, cg = classify(F), classify(G)
    if cf.rank != cg.rank or cf.signature != cg.signature or cf.parity != cg.parity:
        return "no"
    if determinant(F.gram) != determinant(G.gram):
        return "no"
    if cf.unimodular and cf.definiteness == "indefinite":
        return "yes"
    if cf.rank <= 2 and _bounded_basis_search(F.gram, G.gram, bound):
        return "yes"
    return "undecided"


def _bounded_basis_search(f: IntMatrix, g: IntMatrix, bound: int) -> bool:
    n = f.rows
    if n == 0:
        return True
    span = range(-bound, bound + 1)
    for flat in itertools.product(span, repeat=n * n):
        B = IntMatrix.from_rows([flat[i * n:(i + 1) * n] for i in range(n)])
        if determinant(B) in (1, -1) and congruence_transform(f, B).entries == g.entries:
            return True
    return False


@dataclass(frozen=True)
class SquareSolutions:
    """Solutions of v.v = c on a rank-2 form.

    ``complete`` marks whether ``vectors`` is the full solution set or only
    its restriction to the enumeration box.
    """

    vectors: tuple[tuple[int, int], ...]
    complete: bool

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.vectors)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def solve_square(F: QuadraticForm, c: int, bound: int = 100) -> SquareSolutions:
    """All integer solutions of v.v = c on a rank-2 form.

    When a basis vector is isotropic (Gram [[0, e], [e, d]] or its mirror
    with e != 0) and c != 0, the equation factors as b(2ea + db) = c, so the
    complete solution set comes from the divisors of c.  In every other case
    (including c = 0, where the isotropic axis gives infinitely many
    solutions) only the box |a|, |b| <= bound is enumerated and the result
    is flagged as incomplete.
    """
    if F.rank != 2:
        raise ValueError("solve_square requires a rank-2 form")
    g = F.gram.entries
    e = g[0][1]

    if c != 0 and e != 0 and g[0][0] == 0:
        d = g[1][1]
        sols = []
        for b in _divisors(c):
            for b_signed in (b, -b):
                # v.v = 2e*a*b + d*b^2 = c  =>  a = (c/b - d*b) / (2e)
                num = c // b_signed - d * b_signed
                if num % (2 * e) == 0:
                    sols.append((num // (2 * e), b_signed))
        return SquareSolutions(tuple(sorted(set(sols))), complete=True)

    if c != 0 and e != 0 and g[1][1] == 0:
        d = g[0][0]
        sols = []
        for a in _divisors(c):
            for a_signed in (a, -a):
                num = c // a_signed - d * a_signed
                if num % (2 * e) == 0:
                    sols.append((a_signed, num // (2 * e)))
        return SquareSolutions(tuple(sorted(set(sols))), complete=True)

    sols = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            v = (a, b)
            if pairing(F, v, v) == c:
                sols.append(v)
    return SquareSolutions(tuple(sorted(sols)), complete=False)
