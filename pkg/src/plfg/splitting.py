"""Complete stable splitting multiplicity tables.

The wedge summands are indexed by the simple modules M(q, k) of GL2(F_p):
dominant pieces X(q, k) (or Xt(q, k) over an abelian top group), the rank-one
family L(1, k), and for the extraspecial case the middle family L(2, k) with
M(2) denoting the linked pair L(2, 0) v L(1, 0).

Multiplicities:

* dominant: fixed-subspace dimension of M(q, k) under the Weyl group
  (averaging-operator rank when the Weyl group order is divisible by p);
* L(2, k): sum over subgroup classes of the rank of the class-Weyl averaging
  operator on M(p-1, k); radical classes are summed too and asserted to
  contribute zero, and the k = 0 count is recomputed independently as
  (number of classes) - (number of radical classes);
* L(1, k): the rank of the even cohomology in degree 2k for 1 <= k <= p-2;
  the L(1, 0) slot is tied to L(2, 0) and cross-checked against the rank in
  degree 2(p-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import FusionDescriptor, weyl_of_class
from .cohomology import Engine, OutOfScopeError
from .invariants import averaging_rank, module_fixed_dim


@dataclass
class SplittingTable:
    gid: str
    p: int
    sylow: str
    dominant: dict[tuple[int, int], int] = field(default_factory=dict)
    l2: dict[int, int] = field(default_factory=dict)
    l1: dict[int, int] = field(default_factory=dict)  # key 0 is the L(1,0) slot

    def as_lists(self) -> dict:
        return {
            "dominant": [[q, k, n] for (q, k), n in sorted(self.dominant.items())],
            "l2": [[k, m] for k, m in sorted(self.l2.items())],
            "l1": [[k, m] for k, m in sorted(self.l1.items())],
        }

    def wedge_string(self) -> str:
        x = "X" if self.sylow == "E" else "Xt"
        parts = []
        for (q, k), n in sorted(self.dominant.items()):
            parts.append(_times(n, f"{x}({q},{k})"))
        if self.sylow == "E":
            m2 = self.l2.get(0, 0)
            if m2:
                parts.append(_times(m2, "M(2)"))
            for k, m in sorted(self.l2.items()):
                if k and m:
                    parts.append(_times(m, f"L(2,{k})"))
            for k, m in sorted(self.l1.items()):
                if k and m:
                    parts.append(_times(m, f"L(1,{k})"))
        else:
            slot = self.l1.get(0, 0)
            for k, m in sorted(self.l1.items()):
                if k and m:
                    parts.append(_times(m, f"L(1,{k})"))
            if slot:
                parts.append(_times(slot, "L(1,0)"))
        return " v ".join(parts) if parts else "(trivial)"


def _times(n: int, label: str) -> str:
    return label if n == 1 else f"{n} {label}"


def dominant_multiplicities(desc: FusionDescriptor) -> dict[tuple[int, int], int]:
    p = desc.p
    out = {}
    for q in range(p):
        for k in range(p - 1):
            if desc.sylow == "E":
                n = module_fixed_dim(desc.weyl, q, k)
            else:
                n = averaging_rank(desc.weyl, q, k)
            if n:
                out[(q, k)] = n
    return out


def l2_multiplicities(desc: FusionDescriptor) -> dict[int, int]:
    if desc.sylow != "E":
        return {}
    p = desc.p
    out = {k: 0 for k in range(p - 1)}
    for cls in desc.classes:
        w = weyl_of_class(desc, cls)
        for k in range(p - 1):
            r = averaging_rank(w, p - 1, k)
            if cls.radical and r != 0:
                raise RuntimeError(
                    f"{desc.gid}: radical class {cls.members} has nonzero "
                    f"averaging rank {r} at k={k}")
            out[k] += r
    independent = len(desc.classes) - len(desc.radical_classes)
    if out[0] != independent:
        raise RuntimeError(
            f"{desc.gid}: rank-sum m(2)_0 = {out[0]} disagrees with class "
            f"count {independent}")
    return {k: m for k, m in out.items() if m}


def l1_multiplicities(engine: Engine, desc: FusionDescriptor) -> dict[int, int]:
    p = desc.p
    out = {}
    for k in range(1, p - 1):
        m = engine.even_dim(desc, 2 * k)
        if m:
            out[k] = m
    top = engine.even_dim(desc, 2 * (p - 1))
    if desc.sylow == "E":
        slot = l2_multiplicities(desc).get(0, 0)
        if slot != top:
            raise RuntimeError(
                f"{desc.gid}: L(1,0) slot {slot} disagrees with rank {top} "
                f"in degree {2 * (p - 1)}")
    else:
        slot = top
    if slot:
        out[0] = slot
    return out


def full_splitting(engine: Engine, desc: FusionDescriptor) -> SplittingTable:
    if desc.sylow == "A" and desc.weyl.order % desc.p == 0:
        raise OutOfScopeError(
            f"{desc.gid}: rank-one multiplicities need a Weyl group of order "
            "coprime to p")
    return SplittingTable(
        gid=desc.gid, p=desc.p, sylow=desc.sylow,
        dominant=dominant_multiplicities(desc),
        l2=l2_multiplicities(desc),
        l1=l1_multiplicities(engine, desc),
    )
