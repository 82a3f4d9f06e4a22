"""Topological conclusions: adjunction genus lower bounds, homeomorphism
decisions via intersection-form classification, distinguished-class
rigidity, and machine-checked certificates that a family realizes
infinitely many smooth structures in one homeomorphism type."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .handle import AlgebraicFourManifold, chern_eval
from .quadform import classify, is_isomorphic, pairing, solve_square
from .surgery import LogTransformFamilyMember, x_family

CLASS_RIGIDITY_NOTE = (
    "The distinguished class is, up to sign, the only class of its square, "
    "so any diffeomorphism between members carries one distinguished class "
    "to plus or minus the other and therefore preserves its minimal embedded "
    "genus."
)


@dataclass(frozen=True)
class GenusBound:
    """Adjunction lower bound for the genus of embedded surfaces in a class.

    lower_bound = max(0, ceil((|c1.v| + v.v + 2) / 2)), from the adjunction
    inequality 2g - 2 >= v.v + |c1.v| for Stein domains.
    """

    class_coords: tuple[int, ...]
    self_intersection: int
    c1_pairing: int
    lower_bound: int

    def to_json_obj(self) -> dict:
        return {
            "class": [str(x) for x in self.class_coords],
            "self_intersection": str(self.self_intersection),
            "c1_pairing": str(self.c1_pairing),
            "lower_bound": self.lower_bound,
        }


@dataclass(frozen=True)
class InfinitudeCertificate:
    """Machine-checked record that a family contains infinitely many
    pairwise homeomorphic but mutually distinct smooth structures.

    The conclusion is true only when the family has at least two members,
    all members are pairwise homeomorphic, every member passes the
    class-rigidity check, and the genus lower bounds strictly increase
    along the parameters.
    """

    family_label: str
    parity: str
    parameters: tuple[int, ...]
    bounds: tuple[int, ...]
    rigidity: tuple[bool, ...]
    all_homeomorphic: bool
    class_rigidity_note: str
    conclusion: bool

    def to_json_obj(self) -> dict:
        return {
            "family_label": self.family_label,
            "parity": self.parity,
            "parameters": list(self.parameters),
            "bounds": list(self.bounds),
            "rigidity": list(self.rigidity),
            "all_homeomorphic": self.all_homeomorphic,
            "class_rigidity_note": self.class_rigidity_note,
            "conclusion": self.conclusion,
        }


def adjunction_lower_bound(M: AlgebraicFourManifold, v: Sequence[int]) -> GenusBound:
    """Genus lower bound for smoothly embedded closed surfaces representing
    the nonzero class v in a Stein-flagged manifold."""
    if all(x == 0 for x in v):
        raise ValueError("adjunction requires a homologically essential class")
    if not M.stein:
        raise ValueError("adjunction bound requires a manifold flagged as Stein")
    vv = pairing(M.form, v, v)
    c1v = chern_eval(M, v)
    num = abs(c1v) + vv + 2
    return GenusBound(
        class_coords=tuple(v),
        self_intersection=vv,
        c1_pairing=c1v,
        lower_bound=max(0, (num + 1) // 2),
    )


def homeo_decide(M: AlgebraicFourManifold, N: AlgebraicFourManifold) -> str:
    """Homeomorphism decision for simply connected 4-manifolds whose
    boundaries are homology spheres, by the topological classification via
    intersection forms (Freedman); one of "homeomorphic",
    "not_homeomorphic", "inapplicable"."""
    applicable = (
        M.simply_connected
        and N.simply_connected
        and M.boundary_homology_sphere
        and N.boundary_homology_sphere
    )
    if not applicable:
        return "inapplicable"
    verdict = is_isomorphic(M.form, N.form)
    if verdict == "yes":
        return "homeomorphic"
    if verdict == "no":
        return "not_homeomorphic"
    return "inapplicable"


def class_rigidity(member: LogTransformFamilyMember) -> bool:
    """Whether the distinguished class is, up to sign, the unique class of
    its square.  True only when the solution set is provably complete and
    equals {s, -s}."""
    s = member.s_class
    c = pairing(member.manifold.form, s, s)
    sols = solve_square(member.manifold.form, c)
    neg = (-s[0], -s[1])
    return sols.complete and sols.as_set() == {s, neg}


def _member_for(parity: str, q: int) -> LogTransformFamilyMember:
    return x_family(2 * q - 1 if parity == "odd" else 2 * q)


def infinitude_report(parity: str, q_range: Sequence[int]) -> InfinitudeCertificate:
    """Build and check the infinitude certificate for one parity family.

    For each q the member has parameter p = 2q - 1 (odd family) or 2q (even
    family).  The checks are exactly the ingredients of the finiteness
    argument: pairwise homeomorphism, class rigidity, and strictly
    increasing genus lower bounds on the distinguished classes.
    """
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    qs = list(q_range)
    if not qs:
        raise ValueError("q_range must be nonempty")
    if any(q < 1 for q in qs):
        raise ValueError("q_range entries must be positive integers")
    if any(qs[i] >= qs[i + 1] for i in range(len(qs) - 1)):
        raise ValueError("q_range must be strictly increasing")

    members = [_member_for(parity, q) for q in qs]
    bounds = [adjunction_lower_bound(m.manifold, m.s_class).lower_bound for m in members]
    rigidity = [class_rigidity(m) for m in members]
    all_homeo = all(
        homeo_decide(members[i].manifold, members[j].manifold) == "homeomorphic"
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )
    increasing = all(bounds[i] < bounds[i + 1] for i in range(len(bounds) - 1))
    conclusion = len(members) >= 2 and all_homeo and all(rigidity) and increasing

    return InfinitudeCertificate(
        family_label="log-transform family, %s parameters (p = %s)"
        % (parity, "2q-1" if parity == "odd" else "2q"),
        parity=parity,
        parameters=tuple(m.p for m in members),
        bounds=tuple(bounds),
        rigidity=tuple(rigidity),
        all_homeomorphic=all_homeo,
        class_rigidity_note=CLASS_RIGIDITY_NOTE,
        conclusion=conclusion,
    )


def certificate_text(cert: InfinitudeCertificate) -> str:
    """Human-readable report with the inference spelled out step by step."""
    lines = []
    lines.append("Infinitude certificate: %s" % cert.family_label)
    lines.append("  parameters p : %s" % ", ".join(str(p) for p in cert.parameters))
    lines.append(
        "  [1] pairwise homeomorphic (same rank, signature, parity, unimodular "
        "indefinite): %s" % ("PASS" if cert.all_homeomorphic else "FAIL")
    )
    lines.append(
        "  [2] class rigidity for every member: %s (%d/%d)"
        % ("PASS" if all(cert.rigidity) else "FAIL", sum(cert.rigidity), len(cert.rigidity))
    )
    increasing = all(
        cert.bounds[i] < cert.bounds[i + 1] for i in range(len(cert.bounds) - 1)
    )
    lines.append(
        "  [3] adjunction genus lower bounds strictly increasing: %s (%s)"
        % ("PASS" if increasing else "FAIL", ", ".join(str(b) for b in cert.bounds))
    )
    lines.append("  note: %s" % cert.class_rigidity_note)
    lines.append(
        "  inference: by [2] a diffeomorphism between two members forces their "
        "distinguished-class genera to agree, while [3] bounds those genera by "
        "strictly increasing values; hence each diffeomorphism class contains "
        "only finitely many members, and by [1] the whole family lives in a "
        "single homeomorphism type."
    )
    lines.append("  conclusion: %s" % ("TRUE" if cert.conclusion else "FALSE"))
    return "\n".join(lines)


def certificate_csv_rows(cert: InfinitudeCertificate) -> list[list[str]]:
    """Rows (p, parity, form-class, bound, rigidity) for spreadsheet export."""
    rows = [["p", "parity", "form_class", "bound", "rigidity"]]
    for p, bound, rigid in zip(cert.parameters, cert.bounds, cert.rigidity):
        fc = classify(x_family(p).manifold.form)
        rows.append([str(p), cert.parity, fc.describe(), str(bound), str(rigid).lower()])
    return rows
