"""Degree-wise cohomology of the catalogued groups, plus odd and nilpotent parts.

For an E-sylow descriptor the even part in degree d is the subspace of the
Weyl-fixed part of BE whose restriction at the representative of every
radical class lands in the class-Weyl invariants of F_p[y, u].  The
membership test never materializes the invariant subspace: a restricted
vector lies in it exactly when the (few) class-Weyl generators fix it, which
is a small linear system over the coefficients of the fixed basis.

The odd part is reported through the degree-(2p-1) operation that identifies
odd classes with even ideal members: at odd degree o the dimension equals
dim(H^(o+2p-1) intersect J) where J is the ideal generated by y1 v and y2 v
(E-sylow) or by y1^p y2 - y1 y2^p (A-sylow).

The nilpotent complement is the span of classes n_i v^j (i = 1..p-3, degree
2i+2+2pj) on which a Weyl element acts by det^(i+1+j); only the determinant
image of the Weyl group matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import (BA, BE, POLY2, GradedElement, basis_index, degree_basis,
                      from_vector)
from .actions import INF, v_restriction_power
from .catalog import FusionDescriptor, class_weyl_generators
from .gf import subgroup_generator
from .invariants import SubspaceBasis, be_fixed_blocks, fixed_subspace, weight_basis

DEFAULT_DMAX = {3: 96, 5: 96, 7: 400, 13: 912}


class UnknownGroupError(KeyError):
    pass


class OutOfScopeError(ValueError):
    pass


def default_dmax(p: int) -> int:
    return DEFAULT_DMAX.get(p, 96)


@dataclass
class CohomologyTable:
    gid: str
    max_degree: int
    even: list[int]
    odd: dict[int, int] = field(default_factory=dict)
    nilpotent: dict[int, int] = field(default_factory=dict)
    note: str = ""


class Engine:
    """Computes and caches per-degree bases for a fixed catalog."""

    def __init__(self, catalog: dict[str, FusionDescriptor]):
        self.catalog = catalog
        self._stable: dict[tuple[str, int], np.ndarray] = {}

    def descriptor(self, gid: str) -> FusionDescriptor:
        try:
            return self.catalog[gid]
        except KeyError:
            raise UnknownGroupError(gid) from None

    # -- even part ---------------------------------------------------------

    def stable_basis(self, desc: FusionDescriptor, d: int) -> np.ndarray:
        """Echelonized basis (rows, ambient-degree-basis coordinates)."""
        key = (desc.gid, d)
        cached = self._stable.get(key)
        if cached is None:
            cached = self._compute_stable(desc, d)
            cached.setflags(write=False)
            self._stable[key] = cached
        return cached

    def _compute_stable(self, desc: FusionDescriptor, d: int) -> np.ndarray:
        p = desc.p
        if desc.sylow == "A":
            if desc.weyl.order % p == 0:
                raise OutOfScopeError(
                    f"{desc.gid}: invariant-ring cohomology needs a Weyl group "
                    "of order coprime to p")
            basis = fixed_subspace(desc.weyl, POLY2(p), d)
            if not basis.vectors:
                return np.zeros((0, len(degree_basis(POLY2(p), d))), dtype=np.int64)
            rows = [_poly_vector(v, d) for v in basis.vectors]
            return linalg.row_basis(np.vstack(rows), p)
        alg = BE(p)
        idx = basis_index(alg, d)
        rows = []
        for b, w, blk in be_fixed_blocks(desc.weyl, d):
            wb = weight_basis(p, w)
            for blkrow in blk:
                full = np.zeros(len(idx), dtype=np.int64)
                for (a, i, j), c in zip(wb, blkrow):
                    if c:
                        full[idx[(a, b, i, j)]] = c
                rows.append(full)
        if not rows:
            return np.zeros((0, len(idx)), dtype=np.int64)
        fixed = np.vstack(rows)
        radical = desc.radical_classes
        if not radical:
            return linalg.row_basis(fixed, p)
        n = d // 2
        restricted: dict = {}
        constraints = []
        for cls in radical:
            rep = cls.representative
            rest = np.vstack([_restrict_vector(row, d, rep, p, idx)
                              for row in fixed])
            for m11, m12, m21, m22 in class_weyl_generators(desc, cls):
                moved = np.vstack([
                    linalg.substitute_binary_form(r, (m22, m21, m12, m11), p)
                    for r in rest])
                constraints.append((moved - rest) % p)
        system = np.hstack(constraints).T if constraints else None
        coeffs = linalg.nullspace(system, p)
        if coeffs.shape[0] == 0:
            return np.zeros((0, len(idx)), dtype=np.int64)
        return linalg.row_basis(coeffs @ fixed % p, p)

    def even_dim(self, desc: FusionDescriptor, d: int) -> int:
        return self.stable_basis(desc, d).shape[0]

    def stable_elements(self, desc: FusionDescriptor, d: int) -> SubspaceBasis:
        alg = BE(desc.p) if desc.sylow == "E" else POLY2(desc.p)
        rows = self.stable_basis(desc, d)
        return SubspaceBasis(d, tuple(from_vector(alg, d, r) for r in rows))

    def cohomology_poincare(self, desc: FusionDescriptor, d_max: int) -> list[int]:
        return [self.even_dim(desc, d) for d in range(0, d_max + 1, 2)]

    # -- odd part ----------------------------------------------------------

    def odd_dims(self, desc: FusionDescriptor, d_max: int) -> dict[int, int]:
        """Odd-degree dimensions up to d_max, via ideal membership in even degrees."""
        p = desc.p
        out = {}
        for o in range(1, d_max + 1, 2):
            e = o + 2 * p - 1
            h = self.stable_basis(desc, e)
            j = _ideal_rows(desc, e)
            if h.shape[0] == 0 or j.shape[0] == 0:
                continue
            dim = linalg.intersection_dim(h, j, p)
            if dim:
                out[o] = dim
        return out

    # -- nilpotent part ----------------------------------------------------

    def nilpotent_dims(self, desc: FusionDescriptor, d_max: int) -> dict[int, int]:
        """Dimensions of the determinant-fixed nilpotent complement per degree."""
        if desc.sylow != "E":
            raise OutOfScopeError(f"{desc.gid}: nilpotent table applies to sylow E only")
        p = desc.p
        dets = desc.weyl.det_image()
        subgroup_generator(p, tuple(dets))  # validates closure under products
        r = len(dets)
        out: dict[int, int] = {}
        for i in range(1, p - 2):
            j = 0
            while True:
                deg = 2 * i + 2 + 2 * p * j
                if deg > d_max:
                    break
                if (i + 1 + j) % r == 0:
                    out[deg] = out.get(deg, 0) + 1
                j += 1
        return out

    # -- assembled table ---------------------------------------------------

    def table(self, desc: FusionDescriptor, d_max: int,
              odd: bool = False, nilpotent: bool = False) -> CohomologyTable:
        note = ""
        if desc.exotic and (odd or nilpotent):
            note = "odd/nilpotent data extended by analogy: no underlying finite group"
        tab = CohomologyTable(
            gid=desc.gid, max_degree=d_max,
            even=self.cohomology_poincare(desc, d_max), note=note)
        if odd:
            tab.odd = self.odd_dims(desc, d_max)
        if nilpotent:
            tab.nilpotent = self.nilpotent_dims(desc, d_max)
        return tab


def _poly_vector(elem: GradedElement, d: int) -> np.ndarray:
    idx = basis_index(elem.alg, d)
    v = np.zeros(len(idx), dtype=np.int64)
    for m, c in elem.coeffs.items():
        v[idx[m]] = c
    return v


def _restrict_vector(row: np.ndarray, d: int, rep, p: int, idx) -> np.ndarray:
    """Restriction of a BE degree-d vector to F_p[y, u], indexed by y-exponent."""
    n = d // 2
    out = np.zeros(n + 1, dtype=np.int64)
    basis = degree_basis(BE(p), d)
    for pos in np.nonzero(row)[0]:
        a, b, i, j = basis[pos]
        c = int(row[pos])
        if rep == INF:
            if i:
                continue
            scal = c
            ydeg = j + (p - 1) * a
        else:
            scal = c * pow(int(rep), j, p) % p
            ydeg = i + j + (p - 1) * a
        for (dy, _du), cv in v_restriction_power(p, b):
            out[ydeg + dy] = (out[ydeg + dy] + scal * cv) % p
    return out


def _ideal_rows(desc: FusionDescriptor, e: int) -> np.ndarray:
    """Degree-e span of the ideal entering the odd-part identification."""
    p = desc.p
    if desc.sylow == "E":
        alg = BE(p)
        idx = basis_index(alg, e)
        gens = [GradedElement(alg, {(0, 1, 1, 0): 1}),
                GradedElement(alg, {(0, 1, 0, 1): 1})]
        shift = 2 * p + 2
    else:
        alg = POLY2(p)
        idx = basis_index(alg, e)
        gens = [GradedElement(alg, {(p, 1): 1, (1, p): p - 1})]
        shift = 2 * p + 2
    lower = degree_basis(alg, e - shift)
    rows = []
    for m in lower:
        x = GradedElement(alg, {m: 1})
        for g in gens:
            prod = g * x
            row = np.zeros(len(idx), dtype=np.int64)
            for mono, c in prod.coeffs.items():
                row[idx[mono]] = c
            rows.append(row)
    if not rows:
        return np.zeros((0, len(idx)), dtype=np.int64)
    return np.vstack(rows)
