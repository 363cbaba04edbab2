"""JSON geometry files.

A link file looks like::

    {"components": [{"vertices": [[x, y, z], ...], "closed": true},
                    {"vertices": [[x, y, z], ...], "closed": false}]}

Floats are written with ``repr`` precision, so a write/read round trip is
exact.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .geom import PolyLink

__all__ = ["LinkFileError", "link_to_dict", "link_from_dict", "read_link", "write_link"]


class LinkFileError(ValueError):
    pass


def link_to_dict(link: PolyLink) -> dict:
    comps = []
    for verts, closed in link.components:
        comps.append({"vertices": verts.tolist(), "closed": closed})
    out = {"components": comps}
    if link.name:
        out["name"] = link.name
    return out


def _component(obj, idx):
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise LinkFileError(f"component {idx}: expected an object with 'vertices'")
    verts = obj["vertices"]
    closed = obj.get("closed", True)
    if not isinstance(closed, bool):
        raise LinkFileError(f"component {idx}: 'closed' must be true or false")
    if not isinstance(verts, list) or len(verts) < 2:
        raise LinkFileError(f"component {idx}: need at least 2 vertices")
    for v in verts:
        if (
            not isinstance(v, list)
            or len(v) != 3
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)
            or not all(math.isfinite(x) for x in v)
        ):
            raise LinkFileError(f"component {idx}: bad vertex {v!r}")
    return verts, closed


def link_from_dict(doc) -> PolyLink:
    if not isinstance(doc, dict) or not isinstance(doc.get("components"), list):
        raise LinkFileError("expected an object with a 'components' list")
    comps = doc["components"]
    if len(comps) != 2:
        raise LinkFileError(f"expected exactly 2 components, got {len(comps)}")
    (v1, c1), (v2, c2) = (_component(c, i) for i, c in enumerate(comps))
    return PolyLink(v1, v2, c1, c2, name=str(doc.get("name", "")))


def read_link(path) -> PolyLink:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise LinkFileError(f"{path}: invalid JSON ({exc})") from exc
    return link_from_dict(doc)


def write_link(link: PolyLink, path) -> None:
    Path(path).write_text(json.dumps(link_to_dict(link), indent=1) + "\n")
