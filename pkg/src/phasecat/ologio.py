"""Deterministic exporters: DOT graphs and olog-style database schemas.

The olog schema stores objects, non-identity arrows and explicit
composition triples, so a downstream database needs no category engine:
the category IS the data.  Identity arrows and automorphism counts are
metadata (``autOrder``), keeping the DOT diagrams readable.

Both exporters are byte-stable: identical inputs give identical output.
"""

from __future__ import annotations

import json
import os
import tempfile

from .category import FiniteCategory, Morphism
from .errors import ValidationError
from .phase import PhaseCategory


def _object_meta(category, phase: PhaseCategory | None):
    meta = []
    for o in range(len(category.objects)):
        entry = {"id": f"o{o}", "label": category.objects[o],
                 "autOrder": category.aut_order(o)}
        if phase is not None:
            entry["subgroupClass"] = phase.objects[o].subgroup_class
            entry["componentId"] = phase.objects[o].component_id
        meta.append(entry)
    return meta


def export_dot(category: FiniteCategory,
               phase: PhaseCategory | None = None) -> str:
    """Render a finite category as a DOT digraph.

    One node per object annotated with its automorphism count; one edge
    per non-identity, non-automorphism arrow.  Output is sorted and
    byte-deterministic.
    """
    nodes = []
    for o in range(len(category.objects)):
        label = f"{category.objects[o]} |Aut|={category.aut_order(o)}"
        nodes.append(f'  "o{o}" [label="{label}"];')
    edges = []
    for m, mor in enumerate(category.morphisms):
        if mor.src == mor.dst:
            continue
        edges.append((mor.src, mor.dst, mor.label))
    edge_lines = [f'  "o{s}" -> "o{d}" [label="{lab}"];'
                  for s, d, lab in sorted(edges)]
    if not nodes:
        return "digraph phi0 { }\n"
    return "digraph phi0 {\n" + "\n".join(nodes + edge_lines) + "\n}\n"


def export_olog(category: FiniteCategory,
                phase: PhaseCategory | None = None) -> dict:
    """Olog schema: objects, non-identity arrows, and all composition
    triples over composable non-identity pairs."""
    arrow_id = {}
    arrows = []
    for m, mor in enumerate(category.morphisms):
        if category.is_identity(m):
            continue
        arrow_id[m] = f"m{len(arrows)}"
        arrows.append({"id": f"m{len(arrows)}", "src": f"o{mor.src}",
                       "dst": f"o{mor.dst}", "label": mor.label})
    compositions = []
    for (m2, m1), r in sorted(category.compose_table.items()):
        if category.is_identity(m1) or category.is_identity(m2):
            continue
        rid = (f"id:o{category.morphisms[r].src}"
               if category.is_identity(r) else arrow_id[r])
        compositions.append({"left": arrow_id[m2], "right": arrow_id[m1],
                             "result": rid})
    return {"objects": _object_meta(category, phase),
            "arrows": arrows,
            "compositions": compositions}


def import_olog(data: dict) -> FiniteCategory:
    """Rebuild a finite category from an olog export.

    Objects keep their exported order; identities are re-synthesized.
    Dangling arrow endpoints and inconsistent composition triples are
    rejected with the offending ids.
    """
    obj_ids = [o["id"] for o in data.get("objects", [])]
    obj_index = {oid: i for i, oid in enumerate(obj_ids)}
    if len(obj_index) != len(obj_ids):
        raise ValidationError("duplicate object ids")
    labels = [o.get("label", o["id"]) for o in data.get("objects", [])]

    morphisms: list[Morphism] = []
    identity: list[int] = []
    for i, oid in enumerate(obj_ids):
        identity.append(len(morphisms))
        morphisms.append(Morphism(i, i, f"id:{oid}", None))
    arrow_index: dict[str, int] = {}
    for a in data.get("arrows", []):
        if a["src"] not in obj_index or a["dst"] not in obj_index:
            raise ValidationError(
                f"arrow {a['id']} has dangling endpoint "
                f"{a['src']}->{a['dst']}")
        if a["id"] in arrow_index:
            raise ValidationError(f"duplicate arrow id {a['id']}")
        arrow_index[a["id"]] = len(morphisms)
        morphisms.append(Morphism(obj_index[a["src"]], obj_index[a["dst"]],
                                  a.get("label", a["id"]), a["id"]))

    def resolve(mid: str) -> int:
        if mid.startswith("id:"):
            oid = mid[3:]
            if oid not in obj_index:
                raise ValidationError(f"identity of unknown object {oid}")
            return identity[obj_index[oid]]
        if mid not in arrow_index:
            raise ValidationError(f"composition names unknown arrow {mid}")
        return arrow_index[mid]

    table: dict[tuple[int, int], int] = {}
    for c in data.get("compositions", []):
        m2, m1, r = resolve(c["left"]), resolve(c["right"]), \
            resolve(c["result"])
        a, b, res = morphisms[m1], morphisms[m2], morphisms[r]
        if a.dst != b.src or res.src != a.src or res.dst != b.dst:
            raise ValidationError(
                f"inconsistent composition triple "
                f"({c['left']},{c['right']})->{c['result']}")
        if table.get((m2, m1), r) != r:
            raise ValidationError(
                f"conflicting composition triple for "
                f"({c['left']},{c['right']})")
        table[(m2, m1)] = r
    # unit laws fill in all pairs involving identities
    for m, mor in enumerate(morphisms):
        table[(m, identity[mor.src])] = m
        table[(identity[mor.dst], m)] = m
    cat = FiniteCategory(labels, morphisms, identity, table)
    cat.check_category_laws()
    return cat


def olog_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def atomic_write(path: str, text: str):
    """Write-temp-then-rename so partial output is never observed."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".phasecat-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
