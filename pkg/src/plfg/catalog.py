"""Group descriptors: Weyl-group data, subgroup classes, derived class Weyl groups.

A descriptor records one piece of rank-two p-local data: the prime, whether
the top p-group is extraspecial (sylow "E") or elementary abelian (sylow
"A"), the outer Weyl group as a matrix group, and for sylow "E" the
partition of the p+1 index-p rank-two subgroups into conjugacy classes, each
flagged radical or not and carrying a rule for its Weyl group:

* ``derived``   -- U extended by diag(det g, multiplier_i(g)) for every g in
  the Weyl group stabilizing the class representative;
* ``det_ext``   -- the full preimage in GL2(F_p) of a determinant subgroup T
  (these all contain SL2 and are the radical rules);
* ``explicit``  -- a named subgroup or literal generator list.

Descriptors are data (JSON, one document per group, loadable from a
directory given by ``PLFG_CATALOG_DIR``) so users can add systems that ship
without expectation records.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .gf import (GFError, Mat, MatrixGroup, check_prime, det_extension,
                 group_closure, inv_mod, mat_det, named_subgroup, u_matrix)

INF = "inf"


class CatalogError(ValueError):
    pass


def mobius_image(g: Mat, index, p: int):
    """Index of the image subgroup: i -> (c + i d) / (a + i b), fractions to INF."""
    a, b, c, d = g
    if index == INF:
        num, den = d % p, b % p
    else:
        i = int(index)
        num, den = (c + i * d) % p, (a + i * b) % p
    if den == 0:
        return INF
    return num * inv_mod(den, p) % p


def orbit_partition(group: MatrixGroup) -> tuple[tuple, ...]:
    """Orbits of the index set F_p + {INF} under the whole group."""
    p = group.p
    leftover = set(range(p)) | {INF}
    orbits = []
    while leftover:
        seed = min((x for x in leftover if x != INF), default=INF)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g in group.generators:
                y = mobius_image(g, x, p)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        leftover -= orbit
        orbits.append(_sorted_indices(orbit))
    return tuple(sorted(orbits, key=_index_sort_key))


def _sorted_indices(members) -> tuple:
    members = list(members)
    ints = sorted(m for m in members if m != INF)
    return tuple(ints) + ((INF,) if INF in members else ())


def _index_sort_key(cls: tuple):
    return tuple((1, 0) if m == INF else (0, m) for m in cls)


@dataclass(frozen=True)
class AClass:
    members: tuple
    radical: bool
    rule_kind: str                 # "derived" | "det_ext" | "explicit"
    rule_data: tuple = ()

    @property
    def representative(self):
        return self.members[0]


@dataclass(frozen=True)
class FusionDescriptor:
    gid: str
    p: int
    sylow: str                     # "E" | "A"
    weyl: MatrixGroup
    classes: tuple[AClass, ...] = ()
    expectations: dict | None = None
    notes: str = ""
    exotic: bool = False

    def __hash__(self):
        return hash((self.gid, self.p, self.sylow))

    @property
    def radical_classes(self) -> tuple[AClass, ...]:
        return tuple(c for c in self.classes if c.radical)

    def validate(self) -> None:
        check_prime(self.p)
        if self.sylow not in ("E", "A"):
            raise CatalogError(f"{self.gid}: bad sylow kind {self.sylow!r}")
        if self.sylow == "A":
            if self.classes:
                raise CatalogError(f"{self.gid}: sylow A carries no subgroup classes")
            return
        if self.weyl.order % self.p == 0:
            raise CatalogError(f"{self.gid}: Weyl group order divisible by p")
        declared = sorted((c.members for c in self.classes), key=_index_sort_key)
        if _flatten(declared) != _sorted_indices(set(range(self.p)) | {INF}):
            raise CatalogError(f"{self.gid}: classes do not partition the index set")
        orbits = orbit_partition(self.weyl)
        for cls in self.classes:
            covered = set()
            for orb in orbits:
                if set(orb) & set(cls.members):
                    covered |= set(orb)
            if covered != set(cls.members):
                raise CatalogError(
                    f"{self.gid}: class {cls.members} is not a union of Weyl orbits")
        for cls in self.radical_classes:
            w = weyl_of_class(self, cls)
            if u_matrix(self.p) not in w or (1, 0, 1, 1) not in w:
                raise CatalogError(f"{self.gid}: radical class {cls.members} "
                                   "has Weyl group not containing SL2")


def _flatten(classes) -> tuple:
    out = []
    for c in classes:
        out.extend(c)
    return _sorted_indices(out)


def a_classes(desc: FusionDescriptor) -> tuple[tuple, ...]:
    """Recompute the class partition from Weyl orbits and cross-validate."""
    desc.validate()
    return tuple(sorted((c.members for c in desc.classes), key=_index_sort_key))


def stabilizer_multipliers(desc: FusionDescriptor, index) -> list[Mat]:
    """diag(det g, multiplier) for every Weyl element stabilizing the index."""
    p = desc.p
    out = []
    for g in desc.weyl.elements:
        if mobius_image(g, index, p) != index:
            continue
        a, b, _, d = g
        lam = d % p if index == INF else (a + int(index) * b) % p
        out.append((mat_det(g, p), 0, 0, lam))
    return sorted(set(out))


def class_weyl_generators(desc: FusionDescriptor, cls: AClass) -> tuple[Mat, ...]:
    """Generator list of the class Weyl group (no closure)."""
    p = desc.p
    if cls.rule_kind == "derived":
        return (u_matrix(p),) + tuple(stabilizer_multipliers(desc, cls.representative))
    if cls.rule_kind == "det_ext":
        return det_extension(p, tuple(sorted(cls.rule_data))).generators
    if cls.rule_kind == "explicit":
        data = cls.rule_data
        if len(data) == 1 and isinstance(data[0], str):
            return named_subgroup(data[0], p).generators
        return tuple(tuple(int(x) % p for x in m) for m in data)
    raise CatalogError(f"unknown Weyl rule {cls.rule_kind!r}")


@lru_cache(maxsize=None)
def _closure(p: int, gens: tuple[Mat, ...]) -> MatrixGroup:
    return group_closure(p, gens)


def weyl_of_class(desc: FusionDescriptor, cls: AClass) -> MatrixGroup:
    """The class Weyl group, fully enumerated."""
    if cls.rule_kind == "det_ext":
        return det_extension(desc.p, tuple(sorted(cls.rule_data)))
    return _closure(desc.p, class_weyl_generators(desc, cls))


# ---------------------------------------------------------------------------
# Loading


def _parse_matrix(raw, p: int) -> Mat:
    (a, b), (c, d) = raw
    return (a % p, b % p, c % p, d % p)


def _parse_members(raw) -> tuple:
    return _sorted_indices(INF if m == INF else int(m) for m in raw)


def descriptor_from_dict(doc: dict) -> FusionDescriptor:
    gid = doc["id"]
    p = int(doc["prime"])
    sylow = doc["sylow"]
    key = "weyl_E" if sylow == "E" else "weyl_A"
    gens = tuple(_parse_matrix(m, p) for m in doc.get(key, doc.get("weyl", ())))
    weyl = group_closure(p, gens, name=f"W({gid})")
    classes = []
    for cdoc in doc.get("classes", ()):
        rule = cdoc.get("weyl_rule", {"kind": "derived"})
        kind = rule["kind"]
        if kind == "det_ext":
            data = tuple(sorted(int(t) % p for t in rule["data"]))
        elif kind == "explicit":
            data = tuple(rule["data"]) if isinstance(rule["data"][0], str) \
                else tuple(tuple(x for row in m for x in row) for m in rule["data"])
        else:
            data = ()
        classes.append(AClass(members=_parse_members(cdoc["members"]),
                              radical=bool(cdoc.get("radical", False)),
                              rule_kind=kind, rule_data=data))
    desc = FusionDescriptor(
        gid=gid, p=p, sylow=sylow, weyl=weyl,
        classes=tuple(sorted(classes, key=lambda c: _index_sort_key(c.members))),
        expectations=doc.get("expectations"),
        notes=doc.get("notes", ""),
        exotic=bool(doc.get("exotic", False)),
    )
    desc.validate()
    return desc


def default_catalog_dir() -> Path:
    env = os.environ.get("PLFG_CATALOG_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def _load_dir(path: str) -> tuple[FusionDescriptor, ...]:
    docs = []
    for f in sorted(Path(path).glob("*.json")):
        if f.name.startswith("_"):
            continue
        with open(f, "r", encoding="utf-8") as fh:
            docs.append(descriptor_from_dict(json.load(fh)))
    if not docs:
        raise CatalogError(f"no descriptors found under {path}")
    return tuple(docs)


def load_catalog(path: str | Path | None = None) -> dict[str, FusionDescriptor]:
    directory = Path(path) if path is not None else default_catalog_dir()
    return {d.gid: d for d in _load_dir(str(directory))}
