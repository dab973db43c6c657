import random

import numpy as np
import pytest

from plfg import linalg
from plfg.actions import act_be
from plfg.algebra import BA, BE, POLY2, degree_basis, monomial, to_vector
from plfg.gf import (det_extension, diag, group_closure, mat_mul, mat_inv,
                     named_subgroup)
from plfg.invariants import (averaging_matrix, averaging_rank,
                             det_extension_invariant_dim, dickson_bottom_root,
                             dickson_top, fixed_dims_only, fixed_subspace,
                             invariant_poincare, module_fixed_dim,
                             module_fixed_equals_average)


def test_small_fixed_spaces():
    # order-four group on the polynomial side at p=3: one line in degree 4
    G = named_subgroup("Z4k", 3)
    assert fixed_subspace(G, POLY2(3), 4).dimension == 1
    # degree 0 is always one-dimensional
    assert fixed_subspace(named_subgroup("3SD32", 7), BE(7), 0).dimension == 1


def test_degree_64_line_at_seven():
    G = named_subgroup("3SD32", 7)
    basis = fixed_subspace(G, BE(7), 64)
    assert basis.dimension == 1
    g = {"y1": monomial(BE(7), (0, 0, 1, 0)), "y2": monomial(BE(7), (0, 0, 0, 1)),
         "v": monomial(BE(7), (0, 1, 0, 0))}
    a2 = (g["y1"] ** 2 + g["y2"] ** 2) ** 2 * g["v"] ** 4
    vec = to_vector(a2, 64)
    mat = np.vstack([to_vector(x, 64) for x in basis.vectors] + [vec])
    assert linalg.rank(mat, 7) == 1


def test_block_decomposition_matches_full_computation():
    # brute-force kernel on the whole degree component vs the block route
    rng = random.Random(5)
    p = 7
    G = named_subgroup("3S3", p)
    for d in (24, 40, 52, 90):
        basis = degree_basis(BE(p), d)
        idx = {m: i for i, m in enumerate(basis)}
        stacked = []
        for gmat in G.generators:
            m = np.zeros((len(basis), len(basis)), dtype=np.int64)
            for col, mono in enumerate(basis):
                img = act_be(gmat, monomial(BE(p), mono))
                for mm, c in img.coeffs.items():
                    m[idx[mm], col] = c
            stacked.append((m - np.eye(len(basis), dtype=np.int64)) % p)
        brute = linalg.nullspace(np.vstack(stacked), p).shape[0]
        assert fixed_dims_only(G, BE(p), d) == brute


def test_monotone_under_subgroups():
    p = 7
    big = named_subgroup("3SD32", p)
    small = named_subgroup("3SD16", p)
    for d in range(0, 120, 2):
        assert fixed_dims_only(big, BE(p), d) <= fixed_dims_only(small, BE(p), d)


def test_averaging_operator_ranks():
    for p in (3, 7, 13):
        U = named_subgroup("U", p)
        for k in (0, 1, p - 2):
            assert averaging_rank(U, p - 1, k) == 1
            for q in range(1, p - 1):
                assert averaging_rank(U, q, k) == 0
    SL2 = named_subgroup("SL2", 7)
    for q in range(1, 7):
        for k in range(6):
            assert averaging_rank(SL2, q, k) == 0


def test_averaging_rank_with_diagonal_extension():
    G = group_closure(7, ((1, 1, 0, 1), diag(2, 2, 7)))
    table = [k for k in range(6) if averaging_rank(G, 6, k)]
    assert table == [0, 3]


def test_average_image_equals_fixed_space():
    rng = random.Random(9)
    for p in (3, 7):
        base = named_subgroup("SD16" if p == 3 else "3SD32", p)
        for _ in range(10):
            # a random conjugate of a random subgroup: still coprime order
            gens = [g for g in base.generators if rng.random() < 0.7] or \
                [base.generators[0]]
            while True:
                c = tuple(rng.randrange(p) for _ in range(4))
                if (c[0] * c[3] - c[1] * c[2]) % p:
                    break
            ci = mat_inv(c, p)
            conj = [mat_mul(mat_mul(c, g, p), ci, p) for g in gens]
            G = group_closure(p, conj)
            assert G.order % p
            for q in range(p):
                for k in (0, 1):
                    assert module_fixed_equals_average(G, q, k), (p, G.generators, q, k)


def test_dickson_invariants():
    for p in (3, 7, 13):
        alg = BA(p)
        top = dickson_top(p, alg)
        root = dickson_bottom_root(p, alg)
        assert top.degree() == 2 * (p * p - p)
        assert root.degree() == 2 * (p + 1)
        from plfg.actions import weyl_act_on_BA
        for m in ((1, 1, 0, 1), (1, 0, 1, 1)):
            assert weyl_act_on_BA(m, top) == top
            assert weyl_act_on_BA(m, root) == root
        # the bottom root scales by the determinant
        d = diag(2, 1, p)
        assert weyl_act_on_BA(d, root) == 2 * root


@pytest.mark.parametrize("p,t_order,dmax", [(3, 1, 96), (3, 2, 96),
                                            (7, 1, 200), (7, 2, 200),
                                            (7, 6, 200), (13, 4, 200)])
def test_closed_form_oracle_for_determinant_preimages(p, t_order, dmax):
    # generator-kernel dimensions match the closed-form monomial count
    dets = sorted({pow(primitive := _gen_of_order(p, t_order), i, p)
                   for i in range(t_order)})
    G = det_extension(p, tuple(dets))
    conv = "restriction"
    for d in range(0, dmax + 1, 2):
        want = det_extension_invariant_dim(p, t_order, d)
        got = fixed_dims_only(G, BA(p), d, conv)
        assert got == want, (p, t_order, d, got, want)


def _gen_of_order(p, t):
    from plfg.gf import primitive_root
    return pow(primitive_root(p), (p - 1) // t, p)


def test_special_linear_series_is_polynomial_on_two_classes():
    # free on degrees 2(p^2-p) and 2(p+1)
    for p, dmax in ((3, 96), (7, 240)):
        G = named_subgroup("SL2", p)
        got = invariant_poincare(G, BA(p), dmax)
        want = []
        for d in range(0, dmax + 1, 2):
            want.append(det_extension_invariant_dim(p, 1, d))
        assert got == want


def test_full_linear_series():
    # invariants of the whole group: free on 2(p^2-p), 2(p^2-1), nothing below
    for p in (3, 7):
        G = named_subgroup("GL2", p)
        d1, d2 = 2 * (p * p - p), 2 * (p * p - 1)
        dims = invariant_poincare(G, BA(p), d2)
        for d in range(2, d2 + 1, 2):
            expect = 1 if d in (d1, d2) else 0
            if d % d1 == 0 and d != d1 and d <= d2:
                expect = max(expect, 1)
            assert dims[d // 2] == expect, (p, d)


def test_module_fixed_dim_matches_averaging_for_coprime():
    for name, p in (("SD16", 3), ("3D8", 7), ("3x4S4", 13)):
        G = named_subgroup(name, p)
        for q in range(0, p, 2):
            for k in (0, p - 2):
                assert module_fixed_dim(G, q, k) == averaging_rank(G, q, k)
