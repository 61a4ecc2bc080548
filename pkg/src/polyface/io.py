"""Reading and writing lattices and simplicial complexes as JSON.

Lattice files look like::

    {"rank": 3,
     "elements": [{"id": 0, "rank": 0, "label": "{}"}, ...],
     "covers": [[0, 1], ...]}

Ids are written as the canonical integer ids of the lattice; on reading,
any JSON scalar is accepted as an id.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import MalformedLattice
from .lattice import GradedLattice, build_from_covers
from .simplicial import SimplicialComplex


def lattice_to_json(L: GradedLattice) -> dict:
    return {
        "rank": L.height,
        "elements": [{"id": x, "rank": L.rank(x), "label": L.label(x)} for x in range(len(L))],
        "covers": [[x, y] for x, y in L.covers()],
    }


def lattice_from_json(data) -> GradedLattice:
    """Validate and build a lattice from its JSON form.

    Raises :class:`MalformedLattice` (or a subclass) for structural problems.
    """
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise MalformedLattice("lattice JSON needs 'elements' and 'covers'")
    ranks = {}
    labels = {}
    for e in data["elements"]:
        if not isinstance(e, dict) or "id" not in e or "rank" not in e:
            raise MalformedLattice(f"element entry {e!r} needs 'id' and 'rank'")
        key = e["id"]
        if isinstance(key, (list, dict)):
            raise MalformedLattice(f"element id {key!r} must be a scalar")
        if key in ranks:
            raise MalformedLattice(f"duplicate element id {key!r}")
        ranks[key] = e["rank"]
        labels[key] = str(e.get("label", key))
    covers = data["covers"]
    if not isinstance(covers, list):
        raise MalformedLattice("'covers' must be a list of pairs")
    if len(ranks) == 1 and not covers:
        (key,) = ranks
        return GradedLattice([0], [[]], keys=[key], labels=[labels[key]])
    for c in covers:
        if not isinstance(c, list) or len(c) != 2:
            raise MalformedLattice(f"cover {c!r} is not a [lower, upper] pair")
    covers = [tuple(c) for c in covers]
    isolated = set(ranks) - {k for c in covers for k in c}
    if isolated:
        raise MalformedLattice(f"elements {sorted(map(str, isolated))[:5]} are in no cover relation")
    L = build_from_covers(covers, ranks=ranks, labels=labels)
    if "rank" in data and data["rank"] != L.height:
        raise MalformedLattice(f"declared rank {data['rank']} but the lattice has rank {L.height}")
    return L


def write_lattice(L: GradedLattice, path) -> None:
    Path(path).write_text(json.dumps(lattice_to_json(L), indent=1) + "\n")


def read_lattice(path) -> GradedLattice:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedLattice(f"{path}: invalid JSON ({exc})") from None
    return lattice_from_json(data)


def write_complex(C: SimplicialComplex, path) -> None:
    Path(path).write_text(json.dumps(C.to_json(), indent=1) + "\n")


def read_complex(path) -> SimplicialComplex:
    return SimplicialComplex.from_json(json.loads(Path(path).read_text()))
