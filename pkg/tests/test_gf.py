import pytest
from hypothesis import given, settings, strategies as st

from plfg.gf import (GFError, MatrixGroup, det_extension, diag, group_closure,
                     inv_mod, mat_det, mat_inv, mat_mul, mat_transpose,
                     named_subgroup, primitive_root, subgroup_generator)


def test_closure_of_order_eight_generator():
    g = group_closure(3, [(0, 1, 1, 2)])
    assert g.order == 8


def test_empty_closure_is_trivial():
    assert group_closure(5, []).order == 1


def test_unipotent_pair_generates_special_linear_group():
    g = group_closure(7, [(1, 1, 0, 1), (1, 0, 1, 1)])
    assert g.order == 7 * (49 - 1)


def test_singular_generator_rejected():
    with pytest.raises(GFError, match="singular"):
        group_closure(5, [(1, 2, 2, 4)])


def test_named_orders():
    expect = {
        ("SD16", 3): 16, ("Q8", 3): 8, ("D8", 3): 8, ("Z8", 3): 8,
        ("Z4k", 3): 4, ("Z4w", 3): 4, ("V4", 3): 4, ("Z2m", 3): 2,
        ("Z2w'", 3): 2, ("3D8", 7): 24, ("3SD16", 7): 48, ("3SD32", 7): 96,
        ("3S3", 7): 18, ("6S3", 7): 36, ("6sq2", 7): 72, ("3x4S4", 13): 288,
        ("U", 7): 7, ("U", 13): 13,
    }
    for (name, p), order in expect.items():
        assert named_subgroup(name, p).order == order


def test_name_prime_mismatch():
    with pytest.raises(GFError):
        named_subgroup("3x4S4", 7)
    with pytest.raises(GFError):
        named_subgroup("SD16", 7)
    with pytest.raises(GFError):
        named_subgroup("nonsense", 3)


def test_order_288_group_relations():
    p = 13
    g = named_subgroup("3x4S4", p)
    x, y, z = (3, 0, 0, 9), (5, 9, 11, 7), (2, 2, 1, 11)
    assert mat_mul(mat_mul(z, x, p), mat_inv(z, p), p) == y
    xy = mat_mul(x, y, p)
    assert mat_mul(xy, xy, p) == (12, 0, 0, 12)
    assert mat_mul(z, z, p) == diag(6, 6, p)
    assert all(m in g for m in (x, y, z))


def test_semidihedral_square_relation_at_seven():
    lp, kp = (6, 3, 4, 7 - 1), (6, 1, 6, 6)
    assert mat_mul(lp, lp, 7) == kp
    assert lp in named_subgroup("3SD32", 7)


def test_det_image_examples():
    assert named_subgroup("SL2", 7).det_image() == {1}
    assert named_subgroup("3S3", 7).det_image() == {1, 2, 3, 4, 5, 6}
    assert named_subgroup("diag(6,6)", 13).det_image() == {10, 9, 12, 3, 4, 1}


def test_det_image_is_a_subgroup():
    for name, p in [("3D8", 7), ("SD16", 3), ("3x4S4", 13)]:
        dets = named_subgroup(name, p).det_image()
        assert all((a * b) % p in dets for a in dets for b in dets)
        assert all(inv_mod(a, p) in dets for a in dets)


def test_lagrange_for_generators():
    for name, p in [("3SD16", 7), ("Q8", 3), ("3x4S4", 13)]:
        g = named_subgroup(name, p)
        for gen in g.generators:
            cyc = group_closure(p, [gen])
            assert g.order % cyc.order == 0


def test_det_extensions_transpose_closed():
    for p, dets in [(3, (1, 2)), (7, (1, 6)), (7, (1, 2, 3, 4, 5, 6)),
                    (13, (1, 5, 8, 12))]:
        g = det_extension(p, dets)
        assert g.is_transpose_closed()
        assert g.order == p * (p * p - 1) * len(dets)


def test_subgroup_generator_rejects_non_subgroups():
    with pytest.raises(GFError):
        subgroup_generator(7, (1, 2))  # {1,2} not closed: 4 missing


def test_primitive_root():
    for p in (3, 5, 7, 13, 31):
        r = primitive_root(p)
        assert len({pow(r, k, p) for k in range(p - 1)}) == p - 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_closure_group_axioms(a, b, c, d):
    p = 7
    m = (a, b, c, d)
    if mat_det(m, p) == 0:
        return
    g = group_closure(p, [m, (1, 1, 0, 1)])
    els = set(g.elements)
    assert (1, 0, 0, 1) in els
    sample = list(els)[:10]
    for x in sample:
        assert mat_inv(x, p) in els
        for y in sample[:4]:
            assert mat_mul(x, y, p) in els
