"""Fixed subspaces, averaging operators and invariant dimension series.

The BE computations exploit the block structure of the monomial basis: the
module-convention action fixes the v-exponent b (up to a det scalar) and
preserves the weight w = i + j + (p-1)a, because both rewriting rules trade
p-1 units of y-degree for one power of C.  A degree-d component therefore
splits into blocks indexed by b with w = d/2 - p b, each of size O(p), and
the block kernels depend on b only through det(g)^b, i.e. through
b mod (p-1).  Kernels are cached on (generators, w, b mod (p-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .actions import _linear_power, _pair_expansion, _pair_expansion_be
from .algebra import (BA, BE, POLY2, Algebra, GradedElement, degree_basis,
                      from_vector, monomial)
from .gf import Mat, MatrixGroup, mat_det


@dataclass(frozen=True)
class SubspaceBasis:
    degree: int
    vectors: tuple[GradedElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


@lru_cache(maxsize=None)
def weight_basis(p: int, w: int) -> tuple[tuple[int, int, int], ...]:
    """Canonical (a, i, j) with (p-1)a + i + j = w; the C/y part of a block."""
    out = []
    for a in range(w // (p - 1) + 1):
        s = w - (p - 1) * a
        for i in range(max(0, s - (p - 1)), min(p - 1, s) + 1):
            j = s - i
            if i == p - 1 and j == p - 1:
                continue
            out.append((a, i, j))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _weight_index(p: int, w: int) -> dict:
    return {m: k for k, m in enumerate(weight_basis(p, w))}


@lru_cache(maxsize=None)
def weight_matrix(p: int, g: Mat, w: int) -> np.ndarray:
    """Matrix of the g-action on the weight-w block (v-scalar excluded)."""
    basis = weight_basis(p, w)
    idx = _weight_index(p, w)
    mat = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, (a, i, j) in enumerate(basis):
        for (da, i2, j2), c in _pair_expansion_be(p, g, i, j):
            mat[idx[(a + da, i2, j2)], col] = c
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def _fixed_block(p: int, gens: tuple[Mat, ...], w: int, bres: int) -> np.ndarray:
    """Echelon basis (rows) of the joint fixed space on one block."""
    basis = weight_basis(p, w)
    n = len(basis)
    if not gens:
        return np.eye(n, dtype=np.int64)
    stacked = []
    eye = np.eye(n, dtype=np.int64)
    for g in gens:
        scal = pow(mat_det(g, p), bres, p)
        stacked.append((scal * weight_matrix(p, g, w) - eye) % p)
    ker = linalg.nullspace(np.vstack(stacked), p)
    out = linalg.row_basis(ker, p)
    out.setflags(write=False)
    return out


def _be_block_layout(p: int, d: int) -> list[tuple[int, int]]:
    """The (b, w) blocks making up the degree-d component of BE."""
    if d < 0 or d % 2:
        return []
    return [(b, d // 2 - p * b) for b in range(d // (2 * p) + 1)]


def be_fixed_blocks(group: MatrixGroup, d: int):
    """Per-block fixed bases for the BE degree-d component."""
    p = group.p
    out = []
    for b, w in _be_block_layout(p, d):
        out.append((b, w, _fixed_block(p, group.generators, w, b % (p - 1))))
    return out


def _two_var_matrix(alg: Algebra, g: Mat, d: int, convention: str) -> np.ndarray:
    p = alg.p
    n = d // 2
    mat = np.zeros((n + 1, n + 1), dtype=np.int64)
    if convention == "module":
        for s in range(n + 1):
            for (i2, j2), c in _pair_expansion(p, g, s, n - s):
                mat[i2, s] = c
    else:
        m11, m12, m21, m22 = g
        for s in range(n + 1):
            col = np.zeros(n + 1, dtype=np.int64)
            col[s] = 1
            mat[:, s] = linalg.substitute_binary_form(col, (m22, m21, m12, m11), p)
    return mat


def _default_convention(alg: Algebra) -> str:
    return "restriction" if alg.tag == "BA" else "module"


def fixed_dims_only(group: MatrixGroup, alg: Algebra, d: int,
                    convention: str | None = None) -> int:
    """Dimension of the degree-d fixed subspace, skipping basis construction."""
    if alg.tag == "BE":
        return sum(blk.shape[0] for _, _, blk in be_fixed_blocks(group, d))
    return fixed_subspace(group, alg, d, convention).dimension


def fixed_subspace(group: MatrixGroup, alg: Algebra, d: int,
                   convention: str | None = None) -> SubspaceBasis:
    """Echelonized basis of the joint fixed space of the group in degree d."""
    p = alg.p
    assert p == group.p
    if d % 2 or d < 0:
        return SubspaceBasis(d, ())
    if alg.tag == "BE":
        vectors = []
        for b, w, blk in be_fixed_blocks(group, d):
            wb = weight_basis(p, w)
            for row in blk:
                coeffs = {(a, b, i, j): int(c) for (a, i, j), c in zip(wb, row) if c}
                vectors.append(GradedElement(alg, coeffs))
        return SubspaceBasis(d, tuple(vectors))
    conv = convention or _default_convention(alg)
    n = d // 2
    if not group.generators:
        basis = [monomial(alg, m) for m in degree_basis(alg, d)]
        return SubspaceBasis(d, tuple(basis))
    eye = np.eye(n + 1, dtype=np.int64)
    stacked = [(_two_var_matrix(alg, g, d, conv) - eye) % p for g in group.generators]
    ker = linalg.row_basis(linalg.nullspace(np.vstack(stacked), p), p)
    return SubspaceBasis(d, tuple(from_vector(alg, d, row) for row in ker))


def invariant_poincare(group: MatrixGroup, alg: Algebra, d_max: int,
                       convention: str | None = None) -> list[int]:
    """Fixed-subspace dimensions for d = 0, 2, ..., d_max."""
    return [fixed_dims_only(group, alg, d, convention) for d in range(0, d_max + 1, 2)]


# ---------------------------------------------------------------------------
# Averaging operators on the simple modules M(q, k) = S^q tensor det^k.


def _module_matrix(p: int, g: Mat, q: int) -> np.ndarray:
    """Action of g on S^q in the monomial basis y1^s y2^(q-s), s = 0..q.

    Deliberately uncached: averaging enumerates whole groups and per-element
    caching would hold on to one small matrix per group element.
    """
    a, b, c, d = g
    mat = np.zeros((q + 1, q + 1), dtype=np.int64)
    second = np.asarray(_linear_power(p, c, d, q), dtype=np.int64)
    for s in range(q + 1):
        if s:
            second = np.asarray(_linear_power(p, c, d, q - s), dtype=np.int64)
        first = np.asarray(_linear_power(p, a, b, s), dtype=np.int64)
        mat[:, s] = np.convolve(first, second) % p
    return mat


@lru_cache(maxsize=None)
def averaging_by_det(group: MatrixGroup, q: int) -> tuple[tuple[int, np.ndarray], ...]:
    """Sum of the S^q matrices of all elements, grouped by determinant value."""
    p = group.p
    sums: dict[int, np.ndarray] = {}
    for g in group.elements:
        det = mat_det(g, p)
        acc = sums.get(det)
        if acc is None:
            acc = np.zeros((q + 1, q + 1), dtype=np.int64)
            sums[det] = acc
        acc += _module_matrix(p, g, q)
    out = tuple((det, s % p) for det, s in sorted(sums.items()))
    for _, s in out:
        s.setflags(write=False)
    return out


def averaging_matrix(group: MatrixGroup, q: int, k: int) -> np.ndarray:
    """Sum over the group of det(g)^k * (action of g on S^q)."""
    p = group.p
    acc = np.zeros((q + 1, q + 1), dtype=np.int64)
    for det, s in averaging_by_det(group, q):
        acc += pow(det, k % (p - 1), p) * s
    return acc % p


def averaging_rank(group: MatrixGroup, q: int, k: int) -> int:
    """Rank of the averaging operator on S^q twisted by det^k."""
    return linalg.rank(averaging_matrix(group, q, k), group.p)


def module_fixed_dim(group: MatrixGroup, q: int, k: int) -> int:
    """dim of the fixed subspace of S^q tensor det^k under the group."""
    p = group.p
    if not group.generators:
        return q + 1
    eye = np.eye(q + 1, dtype=np.int64)
    stacked = []
    for g in group.generators:
        scal = pow(mat_det(g, p), k % (p - 1), p)
        stacked.append((scal * _module_matrix(p, g, q) - eye) % p)
    return linalg.nullspace(np.vstack(stacked), p).shape[0]


def module_fixed_equals_average(group: MatrixGroup, q: int, k: int) -> bool:
    """Image of the averaging operator == fixed subspace (needs order coprime to p)."""
    p = group.p
    avg = averaging_matrix(group, q, k)
    image = linalg.row_basis(avg.T, p)
    eye = np.eye(q + 1, dtype=np.int64)
    stacked = [(pow(mat_det(g, p), k % (p - 1), p) * _module_matrix(p, g, q) - eye) % p
               for g in group.generators] or [np.zeros((1, q + 1), dtype=np.int64)]
    fixed = linalg.row_basis(linalg.nullspace(np.vstack(stacked), p), p)
    return linalg.same_row_space(image, fixed, p)


# ---------------------------------------------------------------------------
# Closed-form rank-two invariants, kept as a cross-check oracle.


def dickson_top(p: int, alg: Algebra) -> GradedElement:
    """The degree 2(p^2-p) invariant: sum of y^((p-1)i) u^((p-1)(p-i))."""
    coeffs = {((p - 1) * i, (p - 1) * (p - i)): 1 for i in range(p + 1)}
    return GradedElement(alg, coeffs)


def dickson_bottom_root(p: int, alg: Algebra) -> GradedElement:
    """y u^p - y^p u, whose (p-1)-st power is the degree 2(p^2-1) invariant."""
    return GradedElement(alg, {(1, p): 1, (p, 1): (p - 1)})


def det_extension_invariant_dim(p: int, t_order: int, d: int) -> int:
    """Closed-form invariant dimension for det^-1(T) acting on F_p[y, u].

    Counts monomials in the top Dickson class (degree 2(p^2-p)) and powers of
    y u^p - y^p u (degree 2(p+1)) whose exponent is divisible by |T|.
    """
    if d % 2 or d < 0:
        return 0
    count = 0
    step1 = p * p - p
    step2 = p + 1
    half = d // 2
    for gamma in range(0, half // step2 + 1, t_order):
        rem = half - step2 * gamma
        if rem % step1 == 0:
            count += 1
    return count
