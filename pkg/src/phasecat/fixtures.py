"""Bundled desk-scale fixtures: groups, G-complexes, representations,
stratified complexes and rate profiles, in the same JSON schemas the CLI
reads.  ``write_fixtures`` materializes them for experimentation."""

from __future__ import annotations

import json
import os

from .germs import parse_germ
from .gspace import GComplex
from .linrep import LinearAction
from .permgroup import FiniteGroup, closure
from .phase import StratifiedComplex

GROUPS: dict[str, dict] = {
    "trivial": {"degree": 1, "generators": []},
    "c2": {"degree": 2, "generators": [[1, 0]]},
    "c4": {"degree": 4, "generators": [[1, 2, 3, 0]]},
    "s3": {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]},
    "d4": {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 3, 2]]},
    "a4": {"degree": 4, "generators": [[1, 2, 0, 3], [0, 2, 3, 1]]},
    "s4": {"degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]]},
}

SQUARE_SIMPLICES = [[0, 1], [1, 2], [2, 3], [3, 0]]

COMPLEXES: dict[str, dict] = {
    # one-point space, usable with any group below via identity action
    "point_trivial": {"group": "trivial", "vertices": 1,
                      "simplices": [[0]], "action": []},
    "point_s3": {"group": "s3", "vertices": 1, "simplices": [[0]],
                 "action": [[0], [0]]},
    # square boundary, C2 by the reflection fixing vertices 0 and 2
    "square_reflection": {"group": "c2", "vertices": 4,
                          "simplices": SQUARE_SIMPLICES,
                          "action": [[0, 3, 2, 1]]},
    # square boundary, C2 by the free half-turn
    "square_halfturn": {"group": "c2", "vertices": 4,
                        "simplices": SQUARE_SIMPLICES,
                        "action": [[2, 3, 0, 1]]},
    # square boundary with the full dihedral symmetry
    "square_d4": {"group": "d4", "vertices": 4,
                  "simplices": SQUARE_SIMPLICES,
                  "action": [[1, 2, 3, 0], [1, 0, 3, 2]]},
}

REPRESENTATIONS: dict[str, dict] = {
    # C2 on the plane by diag(1, -1)
    "c2_plane": {"group": "c2", "dim": 2,
                 "generators": [[["1", "0"], ["0", "-1"]]]},
    # standard 2-dimensional representation of S3, basis e0-e1, e1-e2
    "s3_standard": {"group": "s3", "dim": 2,
                    "generators": [[["-1", "1"], ["0", "1"]],
                                   [["0", "-1"], ["1", "-1"]]]},
}

STRATIFIED: dict[str, dict] = {
    # segment with a marked midpoint: {midpoint} < {the two open edges}
    "segment_midpoint": {
        "vertices": 3,
        "simplices": [[0], [1], [2], [0, 1], [1, 2]],
        "assignment": [1, 0, 1, 1, 1],
        "poset": [[0, 1]],
        "codim": {"0": 1, "1": 0},
    },
    # linear chain of heights: full simplex stratified by max vertex,
    # one component per height, category a linear poset
    "nchain4": {
        "vertices": 4,
        "simplices": [[0], [1], [2], [3],
                      [0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3],
                      [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3],
                      [0, 1, 2, 3]],
        "assignment": [0, 1, 2, 3, 1, 2, 3, 2, 3, 3, 2, 3, 3, 3, 3],
        "poset": [[0, 1], [1, 2], [2, 3]],
    },
}

GERMS: dict[str, dict] = {
    "a2": {"germ": "x^3", "weights": "1/3"},
    "e6": {"germ": "x^3 + y^4", "weights": "1/3,1/4"},
    "nonisolated": {"germ": "x^2*y"},
}

BERNOULLI_PS = (0.1, 0.3, 0.5, 0.7)


def load_group(name: str) -> FiniteGroup:
    spec = GROUPS[name]
    return closure(spec["degree"], spec["generators"])


def load_complex(name: str, group: FiniteGroup | None = None) -> GComplex:
    spec = COMPLEXES[name]
    if group is None:
        group = load_group(spec["group"])
    return GComplex(group, spec["vertices"], spec["simplices"],
                    spec["action"])


def load_representation(name: str,
                        group: FiniteGroup | None = None) -> LinearAction:
    spec = REPRESENTATIONS[name]
    if group is None:
        group = load_group(spec["group"])
    return LinearAction(group, spec["dim"], spec["generators"])


def load_stratified(name: str) -> StratifiedComplex:
    spec = STRATIFIED[name]
    codim = {int(k): v for k, v in spec.get("codim", {}).items()} or None
    return StratifiedComplex(spec["vertices"], spec["simplices"],
                             spec["assignment"], spec["poset"], codim)


def write_fixtures(directory: str) -> list[str]:
    """Materialize every bundled fixture as a JSON file; returns paths."""
    os.makedirs(directory, exist_ok=True)
    written = []

    def dump(name, payload):
        path = os.path.join(directory, name)
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)

    for name, spec in GROUPS.items():
        dump(f"group_{name}.json", spec)
    for name, spec in COMPLEXES.items():
        payload = {k: v for k, v in spec.items() if k != "group"}
        payload["comment"] = f"use with group_{spec['group']}.json"
        dump(f"complex_{name}.json", payload)
    for name, spec in REPRESENTATIONS.items():
        payload = {k: v for k, v in spec.items() if k != "group"}
        payload["comment"] = f"use with group_{spec['group']}.json"
        dump(f"rep_{name}.json", payload)
    for name, spec in STRATIFIED.items():
        dump(f"strata_{name}.json", spec)
    for name, spec in GERMS.items():
        dump(f"germ_{name}.json", spec)
    dump("bernoulli.json", {"p": list(BERNOULLI_PS)})
    return written
