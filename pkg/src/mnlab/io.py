"""File formats: groups as generator lists, algebras as operation tables.

Both formats are JSON with a version tag:

  group:   {"format": 1, "degree": d, "generators": [[images], ...],
            "name": optional}
  algebra: {"format": 1, "size": n, "ops": [[table], ...], "name": optional}

Permutations are serialized as 0-based image arrays only.  A file written by
any command re-parses to an identical canonical object.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .congruence import UnaryAlgebra
from .perm import Perm, PermGroup, group_closure

FORMAT_VERSION = 1

Pathish = Union[str, Path]


class FormatError(ValueError):
    pass


def _check_format(data: dict, path: Pathish) -> None:
    version = data.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise FormatError(f"{path}: unsupported format version {version!r}")


def group_to_dict(G: PermGroup, name: Optional[str] = None) -> dict:
    out = {
        "format": FORMAT_VERSION,
        "degree": G.degree,
        "generators": [list(g.images) for g in G.generators],
    }
    if name is not None:
        out["name"] = name
    return out


def group_from_dict(data: dict, path: Pathish = "<group>") -> PermGroup:
    _check_format(data, path)
    try:
        degree = int(data["degree"])
        gens = [Perm(img) for img in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad group file: {exc}") from exc
    try:
        return group_closure(degree, gens)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def save_group(G: PermGroup, path: Pathish, name: Optional[str] = None) -> None:
    Path(path).write_text(json.dumps(group_to_dict(G, name), indent=2) + "\n")


def load_group(path: Pathish) -> PermGroup:
    return group_from_dict(json.loads(Path(path).read_text()), path)


def algebra_to_dict(A: UnaryAlgebra) -> dict:
    out = {
        "format": FORMAT_VERSION,
        "size": A.size,
        "ops": [list(op) for op in A.ops],
    }
    if A.name is not None:
        out["name"] = A.name
    return out


def algebra_from_dict(data: dict, path: Pathish = "<algebra>") -> UnaryAlgebra:
    _check_format(data, path)
    try:
        return UnaryAlgebra(int(data["size"]),
                            tuple(tuple(op) for op in data["ops"]),
                            data.get("name"))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad algebra file: {exc}") from exc


def save_algebra(A: UnaryAlgebra, path: Pathish) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(A), indent=2) + "\n")


def load_algebra(path: Pathish) -> UnaryAlgebra:
    return algebra_from_dict(json.loads(Path(path).read_text()), path)
