"""Matrix actions on the graded rings and restriction to rank-two subgroups.

Two action conventions coexist, on purpose:

* the *module convention* (``act_poly``, ``act_be``): ``g = (a b; c d)`` acts
  by row substitution ``y1 -> a y1 + b y2``, ``y2 -> c y1 + d y2``, with
  ``C -> C`` and ``v -> det(g) v`` on BE.  Composition satisfies
  ``act(g, act(h, x)) = act(h g, x)``.  All summand-multiplicity
  computations use this convention.
* the *restriction-consistent convention* (``weyl_act_on_BA``): on the
  restriction target F_p[y, u] a matrix ``M = (m11 m12; m21 m22)`` written in
  the basis (central generator, complement generator) acts by
  ``y -> m22 y + m21 u``, ``u -> m12 y + m11 u``.  With this choice the
  square restrict(act_be(g, x)) = weyl_act(induced(g), restrict(x)) commutes
  for every g stabilizing the subgroup, where induced(g) is the diagonal
  matrix diag(det g, multiplier of g at the subgroup).

The subgroups of index p are indexed by F_p together with ``INF``; the index
``i`` names the subgroup whose degree-two restriction sends ``y1 -> y``,
``y2 -> i*y`` (at ``INF``: ``y1 -> 0``, ``y2 -> y``), with ``C -> y^(p-1)``
and ``v -> u^p - y^(p-1) u`` at every index.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .algebra import BA, BE, POLY2, Algebra, GradedElement, be_reduce
from .gf import Mat, mat_det

INF = "inf"

SubgroupIndex = int | str


def subgroup_indices(p: int) -> tuple:
    return tuple(range(p)) + (INF,)


@lru_cache(maxsize=None)
def _linear_power(p: int, c1: int, c2: int, e: int) -> tuple[int, ...]:
    """Coefficients of (c1*x + c2*z)^e by x-exponent, mod p."""
    return tuple(comb(e, t) * pow(c1, t, p) * pow(c2, e - t, p) % p
                 for t in range(e + 1))


@lru_cache(maxsize=None)
def _pair_expansion(p: int, g: Mat, i: int, j: int) -> tuple:
    """(a y1 + b y2)^i (c y1 + d y2)^j as {(i', j'): coeff}, no rewriting."""
    a, b, c, d = g
    first = _linear_power(p, a, b, i)
    second = _linear_power(p, c, d, j)
    out: dict = {}
    for t1, c1 in enumerate(first):
        if not c1:
            continue
        for t2, c2 in enumerate(second):
            if not c2:
                continue
            key = (t1 + t2, i + j - t1 - t2)
            out[key] = (out.get(key, 0) + c1 * c2) % p
    return tuple(sorted((k, v) for k, v in out.items() if v))


@lru_cache(maxsize=None)
def _pair_expansion_be(p: int, g: Mat, i: int, j: int) -> tuple:
    """Same as _pair_expansion but rewritten into the BE basis, as (da, i', j')."""
    raw = {(0, 0, ii, jj): c for (ii, jj), c in _pair_expansion(p, g, i, j)}
    red = be_reduce(p, raw)
    return tuple(sorted(((a, ii, jj), c) for (a, b, ii, jj), c in red.items()))


def act_be(g: Mat, x: GradedElement) -> GradedElement:
    """Module-convention action on BE; v picks up det(g)."""
    alg = x.alg
    assert alg.tag == "BE"
    p = alg.p
    det = mat_det(g, p)
    out: dict = {}
    for (a, b, i, j), c in x.coeffs.items():
        scal = c * pow(det, b, p) % p
        for (da, i2, j2), cm in _pair_expansion_be(p, g, i, j):
            key = (a + da, b, i2, j2)
            v = (out.get(key, 0) + scal * cm) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return GradedElement(alg, out)


def act_poly(g: Mat, f: GradedElement, twist: int = 0) -> GradedElement:
    """Module-convention action on F_p[y1, y2], twisted by det(g)^twist."""
    alg = f.alg
    assert alg.tag == "POLY2"
    p = alg.p
    scal0 = pow(mat_det(g, p), twist % (p - 1), p)
    out: dict = {}
    for (i, j), c in f.coeffs.items():
        scal = c * scal0 % p
        for key, cm in _pair_expansion(p, g, i, j):
            v = (out.get(key, 0) + scal * cm) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return GradedElement(alg, out)


@lru_cache(maxsize=None)
def v_restriction_power(p: int, b: int) -> tuple:
    """(u^p - y^(p-1) u)^b as ((y-exp, u-exp), coeff) terms."""
    out = []
    for k in range(b + 1):
        c = comb(b, k) * (-1) ** k % p
        if c:
            out.append((((p - 1) * k, p * (b - k) + k), c))
    return tuple(out)


def restrict_to_A(x: GradedElement, index: SubgroupIndex) -> GradedElement:
    """Ring map to F_p[y, u] for the subgroup of the given index."""
    alg = x.alg
    assert alg.tag == "BE"
    p = alg.p
    out: dict = {}
    for (a, b, i, j), c in x.coeffs.items():
        if index == INF:
            if i:
                continue  # y1 restricts to 0
            scal = c
            ydeg = j + (p - 1) * a
        else:
            scal = c * pow(int(index), j, p) % p
            ydeg = i + j + (p - 1) * a
        if not scal:
            continue
        for (dy, du), cv in v_restriction_power(p, b):
            key = (ydeg + dy, du)
            v = (out.get(key, 0) + scal * cv) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return GradedElement(BA(p), out)


def weyl_act_on_BA(m: Mat, f: GradedElement) -> GradedElement:
    """Restriction-consistent action on F_p[y, u]; see the module docstring."""
    alg = f.alg
    assert alg.tag == "BA"
    p = alg.p
    m11, m12, m21, m22 = m
    out: dict = {}
    for (s, t), c in f.coeffs.items():
        ypart = _linear_power(p, m22, m21, s)   # y -> m22 y + m21 u
        upart = _linear_power(p, m12, m11, t)   # u -> m12 y + m11 u
        for t1, c1 in enumerate(ypart):
            if not c1:
                continue
            cc = c * c1 % p
            for t2, c2 in enumerate(upart):
                if not c2:
                    continue
                key = (t1 + t2, s + t - t1 - t2)
                v = (out.get(key, 0) + cc * c2) % p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return GradedElement(alg, out)


def induced_weyl_matrix(g: Mat, index: SubgroupIndex, p: int) -> Mat:
    """diag(det g, multiplier) induced on a stabilized subgroup, basis (center, other)."""
    a, b, c, d = g
    if index == INF:
        lam = d
    else:
        lam = (a + int(index) * b) % p
    if lam == 0:
        raise ValueError(f"{g} does not stabilize subgroup {index}")
    return (mat_det(g, p), 0, 0, lam)


def subgroup_multiplier(g: Mat, index: SubgroupIndex, p: int) -> int:
    return induced_weyl_matrix(g, index, p)[3]
