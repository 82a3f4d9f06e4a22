"""The parametric families: log-transform 4-manifolds X_p with their
distinguished square -2 / -1 classes, torus mapping classes f_p with the
Eliashberg-Polterovich summand criterion, and the rank-1-plus-torsion
homology family V_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .handle import AlgebraicFourManifold
from .intlin import (
    AbelianGroup,
    IntMatrix,
    cokernel,
    congruence_transform,
    determinant,
    matrix_from_json,
    vector_to_json,
)
from .quadform import QuadraticForm


@dataclass(frozen=True)
class LogTransformFamilyMember:
    """One member X_p of the log-transform family.

    The manifold carries the intersection form [[0,1],[1,-2p^2+p-3]] in the
    basis (T_p, R_p) and c1 = (0, -1-p); ``s_class`` holds the coordinates
    of the distinguished class S_p = R_p + k T_p with k = p^2 - q + 1.  The
    label p = 0 denotes the untransformed manifold X with form
    [[0,1],[1,-2]] in the basis (T, S) and S itself as distinguished class.

    x_family() is the validated constructor; the dataclass itself accepts
    arbitrary data so that degenerate examples can be probed.
    """

    p: int
    manifold: AlgebraicFourManifold
    s_class: tuple[int, int]

    @property
    def k(self) -> int:
        return self.s_class[0]

    @property
    def q(self) -> Optional[int]:
        if self.p < 1:
            return None
        return (self.p + 1) // 2 if self.p % 2 == 1 else self.p // 2

    def to_json_obj(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "k": self.k,
            "manifold": self.manifold.to_json_obj(),
            "s_class": vector_to_json(self.s_class),
        }


def x_family(p: int) -> LogTransformFamilyMember:
    """The family member with log-transform parameter p >= 1, or the
    untransformed manifold under the p = 0 convention."""
    if p < 0:
        raise ValueError("family parameter must be >= 1 (0 denotes the untransformed manifold)")
    if p == 0:
        form = QuadraticForm.from_rows([[0, 1], [1, -2]], labels=("T", "S"))
        c1 = (0, 0)
        s_class = (0, 1)
        name = "X"
    else:
        form = QuadraticForm.from_rows(
            [[0, 1], [1, -2 * p * p + p - 3]],
            labels=("T_%d" % p, "R_%d" % p),
        )
        c1 = (0, -1 - p)
        q = (p + 1) // 2 if p % 2 == 1 else p // 2
        s_class = (p * p - q + 1, 1)
        name = "X_%d" % p
    manifold = AlgebraicFourManifold(
        form=form,
        c1=c1,
        euler=2,  # one 0-handle, two 1-handles, three 2-handles
        sig=0,
        simply_connected=True,
        boundary_homology_sphere=True,
        name=name,
        stein=True,
    )
    return LogTransformFamilyMember(p=p, manifold=manifold, s_class=s_class)


def normalized_form(member: LogTransformFamilyMember) -> QuadraticForm:
    """The member's form rewritten in the basis (T_p, S_p).

    The basis change is B = [[1, k], [0, 1]]; the result is [[0,1],[1,-2]]
    for odd p (and for p = 0) and [[0,1],[1,-1]] for even p >= 2.
    """
    k = member.k
    B = IntMatrix.from_rows([[1, k], [0, 1]])
    gram = congruence_transform(member.manifold.form.gram, B)
    if member.p == 0:
        labels = ("T", "S")
    else:
        labels = ("T_%d" % member.p, "S_%d" % member.p)
    return QuadraticForm(gram, labels)


@dataclass(frozen=True)
class TorusMappingClass:
    """Isotopy class of an orientation-preserving self-diffeomorphism of the
    3-torus, recorded by its action on H1 = Z^3.

    Vectors act on the right (v -> v M), so the subspace spanned by the
    first two coordinates is stabilized exactly when the third column has
    zero entries in the first two rows.
    """

    matrix: IntMatrix

    def __post_init__(self):
        if not (self.matrix.rows == 3 and self.matrix.cols == 3):
            raise ValueError("torus mapping class must be a 3x3 matrix")
        if determinant(self.matrix) != 1:
            raise ValueError("torus mapping class must have determinant 1")

    def to_json_obj(self) -> list[list[int]]:
        return self.matrix.to_lists()

    @classmethod
    def from_json_obj(cls, obj) -> "TorusMappingClass":
        return cls(matrix_from_json(obj))


def fp_matrix(p: int) -> TorusMappingClass:
    """The torus mapping class acting on H1 by the unitriangular matrix with
    (3,2) entry p; p = 0 gives the identity."""
    if p < 0:
        raise ValueError("mapping-class parameter must be a nonnegative integer")
    return TorusMappingClass(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, p, 1]]))


def compose(f: TorusMappingClass, g: TorusMappingClass) -> TorusMappingClass:
    return TorusMappingClass(f.matrix @ g.matrix)


def stabilizes_summand(f: TorusMappingClass | IntMatrix) -> bool:
    """Whether the action maps the sublattice {(x, y, 0)} into itself.

    Under the right action v -> v M this asks that rows 1 and 2 have zero
    third coordinate.  A mapping class with this property is isotopic to a
    contactomorphism of the standard tight 3-torus (Eliashberg-Polterovich).
    A raw 3x3 matrix is also accepted, so the criterion can be probed on
    H1 actions that are not orientation-preserving.
    """
    m = f.matrix if isinstance(f, TorusMappingClass) else f
    if not (m.rows == 3 and m.cols == 3):
        raise ValueError("summand check requires a 3x3 matrix")
    e = m.entries
    return e[0][2] == 0 and e[1][2] == 0


def v_family_homology(p: int) -> AbelianGroup:
    """H1 of the p-th reglued member of the one-2-handle family: the
    cokernel of the single relator (0, p) on Z^2, i.e. Z + Z/p."""
    if p < 1:
        raise ValueError("family parameter must be a positive integer")
    presentation = IntMatrix.from_rows([[0], [p]])
    return cokernel(presentation)
