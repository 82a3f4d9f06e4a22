#!/usr/bin/env python3
"""Regenerate everything under fixtures/.

The framed-link files are inputs for the d3 / homology subcommands; the
family files are the manifold fixtures (chi and sigma are fixture data
derived from handle counts, see the meta notes).
"""

import dataclasses
import json
from pathlib import Path

from steincheck.cli import FIXTURE_NOTES, _member_json
from steincheck.handle import FramedLinkPresentation
from steincheck.intlin import IntMatrix
from steincheck.surgery import x_family

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def write(name: str, obj) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    print("wrote", path)


def link(rows, rot, tb):
    return FramedLinkPresentation(IntMatrix.from_rows(rows), tuple(rot), tuple(tb) if tb is not None else None)


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)

    write("empty_link.json", link([], [], []).to_json_obj())
    write("unknot_fr-2.json", link([[-2]], [0], [-1]).to_json_obj())
    write("unknot_fr-3.json", link([[-3]], [1], [-2]).to_json_obj())
    # rank-2 Legendrian presentation whose linking matrix is the form of the
    # untransformed family member; its boundary is a homology 3-sphere
    write("x_shadow_link.json", link([[0, 1], [1, -2]], [0, 0], [1, -1]).to_json_obj())

    write("x.json", x_family(0).manifold.to_json_obj())
    write("x_form.json", x_family(0).manifold.form.to_json_obj())
    write("x2_form.json", x_family(2).manifold.form.to_json_obj())

    members = [_member_json(x_family(p)) for p in range(0, 11)]
    write("x_family.json", {"meta": FIXTURE_NOTES, "members": members})

    y_meta = dict(FIXTURE_NOTES)
    y_meta["identification"] = (
        "the reglued-torus members carry the same framed-link data as the "
        "log-transform members of equal parameter; the files duplicate that "
        "data under Y labels, and the identification is an input assumption "
        "of the fixtures, not a computed fact"
    )
    y_members = []
    for p in range(1, 11):
        member = x_family(p)
        renamed = dataclasses.replace(member, manifold=dataclasses.replace(member.manifold, name="Y_%d" % p))
        y_members.append(_member_json(renamed))
    write("y_family.json", {"meta": y_meta, "members": y_members})


if __name__ == "__main__":
    main()
