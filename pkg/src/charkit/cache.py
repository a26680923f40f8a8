"""Disk cache for computed character tables.

One JSON file per (toolkit version, group spec, class data digest) triple.
A cache hit is never trusted blindly: the stored values are rebuilt into a
table whose orthogonality is re-verified exactly, and any mismatch, parse
problem or stale digest silently falls back to recomputation. Files are
written atomically so a crashed run cannot leave a truncated entry behind.
"""

import hashlib
import json
import os
import tempfile
from typing import Optional

from .chartable import (
    CharacterTable,
    ClassFunction,
    TableProvenance,
    compute_table,
    verify_table,
)
from .cyclotomic import cycnum_from_obj
from .errors import CharkitError
from .groups import Group
from .version import VERSION

ENV_CACHE_DIR = "CHARKIT_CACHE_DIR"
FORMAT = 1


def class_digest(G: Group) -> str:
    """Digest of the class structure the table depends on."""
    cls = G.classes
    h = hashlib.sha256()
    for chunk in (
        str(G.order),
        str(cls.exponent),
        ",".join(str(s) for s in cls.sizes),
        ",".join(str(i) for i in cls.inverse_class),
        cls.power_class.tobytes(),
    ):
        h.update(chunk.encode() if isinstance(chunk, str) else chunk)
        h.update(b"|")
    return h.hexdigest()[:32]


def cache_path(cache_dir: str, G: Group) -> str:
    key = hashlib.sha256(f"{VERSION}\0{G.spec}".encode()).hexdigest()[:24]
    return os.path.join(cache_dir, f"table-{key}.json")


def store(G: Group, table: CharacterTable, cache_dir: str) -> str:
    payload = {
        "format": FORMAT,
        "version": VERSION,
        "spec": G.spec,
        "digest": class_digest(G),
        "order": G.order,
        "num_classes": G.classes.num_classes,
        "conductor": table.conductor,
        "degrees": list(table.degrees),
        "provenance": {
            "prime": table.provenance.prime,
            "zeta_image": table.provenance.zeta_image,
            "version": table.provenance.version,
        },
        "values": [[v.to_obj() for v in chi.values] for chi in table.irreducibles],
    }
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, G)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def load(G: Group, cache_dir: str) -> Optional[CharacterTable]:
    """The cached table for G, or None when absent, stale or corrupt."""
    path = cache_path(cache_dir, G)
    try:
        with open(path) as fh:
            payload = json.load(fh)
        if payload["format"] != FORMAT or payload["version"] != VERSION:
            return None
        if payload["spec"] != G.spec or payload["digest"] != class_digest(G):
            return None
        if payload["order"] != G.order:
            return None
        if payload["num_classes"] != G.classes.num_classes:
            return None
        conductor = payload["conductor"]
        if conductor != G.exponent:
            return None
        irreducibles = []
        for row in payload["values"]:
            values = [cycnum_from_obj(obj) for obj in row]
            if any(v.ctx.n != conductor for v in values):
                return None
            irreducibles.append(ClassFunction(G, values))
        prov = payload["provenance"]
        table = CharacterTable(
            G,
            irreducibles,
            payload["degrees"],
            conductor,
            TableProvenance(
                prime=prov["prime"],
                zeta_image=prov["zeta_image"],
                version=prov["version"],
            ),
        )
        verify_table(table)
        return table
    except (OSError, ValueError, KeyError, TypeError, CharkitError):
        return None


def resolve_cache_dir(cache_dir: Optional[str], use_cache: bool) -> Optional[str]:
    if not use_cache:
        return None
    if cache_dir is not None:
        return cache_dir
    return os.environ.get(ENV_CACHE_DIR) or None


def cached_table(
    G: Group, cache_dir: Optional[str] = None, use_cache: bool = True
) -> CharacterTable:
    """compute_table with a read through the disk cache when one is set."""
    directory = resolve_cache_dir(cache_dir, use_cache)
    if directory is None:
        return compute_table(G)
    hit = load(G, directory)
    if hit is not None:
        return hit
    table = compute_table(G)
    store(G, table, directory)
    return table
