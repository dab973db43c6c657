"""Arithmetic in GL2 over a small prime field, and finite matrix subgroups.

Matrices are plain 4-tuples ``(a, b, c, d)`` for the row-major matrix
``(a b; c d)`` with entries reduced into ``[0, p)``.  Groups are stored as
the full element set obtained by closure from a generator list, sorted
lexicographically so that every downstream computation is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

Mat = tuple[int, int, int, int]

IDENTITY: Mat = (1, 0, 0, 1)

SUPPORTED_PRIMES = (3, 5, 7, 13)
PRIME_CAP = 31


class GFError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def check_prime(p: int) -> None:
    if not is_prime(p) or p == 2 or p > PRIME_CAP:
        raise GFError(f"unsupported prime {p}: need an odd prime <= {PRIME_CAP}")


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise GFError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def mat(a: int, b: int, c: int, d: int, p: int) -> Mat:
    return (a % p, b % p, c % p, d % p)


def diag(a: int, b: int, p: int) -> Mat:
    return (a % p, 0, 0, b % p)


def mat_mul(m: Mat, n: Mat, p: int) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def mat_det(m: Mat, p: int) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % p


def mat_inv(m: Mat, p: int) -> Mat:
    di = inv_mod(mat_det(m, p), p)
    a, b, c, d = m
    return ((d * di) % p, (-b * di) % p, (-c * di) % p, (a * di) % p)


def mat_transpose(m: Mat) -> Mat:
    return (m[0], m[2], m[1], m[3])


def gl2_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    for r in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * r % p
            seen.add(x)
        if len(seen) == p - 1:
            return r
    raise GFError(f"no primitive root mod {p}")


@dataclass(frozen=True)
class MatrixGroup:
    """A finite subgroup of GL2(F_p): generators plus the enumerated closure."""

    p: int
    generators: tuple[Mat, ...]
    elements: tuple[Mat, ...]
    name: str | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat) -> bool:
        return m in self._element_set()

    def _element_set(self) -> frozenset:
        # cached on the instance despite frozen dataclass
        s = self.__dict__.get("_eset")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_eset", s)
        return s

    def det_image(self) -> frozenset[int]:
        return frozenset(mat_det(m, self.p) for m in self.elements)

    def is_transpose_closed(self) -> bool:
        es = self._element_set()
        return all(mat_transpose(m) in es for m in self.elements)

    def conjugate(self, c: Mat) -> "MatrixGroup":
        ci = mat_inv(c, self.p)
        gens = tuple(mat_mul(mat_mul(c, g, self.p), ci, self.p) for g in self.generators)
        return group_closure(self.p, gens, name=None)


def group_closure(p: int, gens, name: str | None = None) -> MatrixGroup:
    """Close a generator list under multiplication; deterministic element order."""
    check_prime(p)
    gens = tuple(tuple(x % p for x in g) for g in gens)
    for g in gens:
        if mat_det(g, p) == 0:
            raise GFError(f"singular generator {g} mod {p}")
    seen = {IDENTITY}
    queue = deque([IDENTITY])
    cap = gl2_order(p)
    while queue:
        m = queue.popleft()
        for g in gens:
            n = mat_mul(m, g, p)
            if n not in seen:
                seen.add(n)
                queue.append(n)
        assert len(seen) <= cap
    return MatrixGroup(p=p, generators=gens, elements=tuple(sorted(seen)), name=name)


def det_image(group: MatrixGroup) -> frozenset[int]:
    return group.det_image()


def u_matrix(p: int) -> Mat:
    return (1, 1, 0, 1)


def u_prime_matrix(p: int) -> Mat:
    return (1, 0, 1, 1)


def sl2_generators(p: int) -> tuple[Mat, Mat]:
    return (u_matrix(p), u_prime_matrix(p))


def subgroup_generator(p: int, dets) -> int:
    """A single generator of a subgroup of F_p*, given as an element set."""
    dets = sorted({d % p for d in dets})
    if 0 in dets or not dets:
        raise GFError(f"not a subgroup of units mod {p}: {dets}")
    target = set(dets)
    for t in dets:
        cyc = set()
        x = 1
        while True:
            x = x * t % p
            if x in cyc:
                break
            cyc.add(x)
        if cyc == target:
            return t
    raise GFError(f"{dets} is not a cyclic subgroup of units mod {p}")


@lru_cache(maxsize=None)
def det_extension(p: int, dets: tuple[int, ...]) -> MatrixGroup:
    """The full preimage of a determinant subgroup T: all matrices with det in T."""
    t0 = subgroup_generator(p, dets)
    gens = [u_matrix(p), u_prime_matrix(p)]
    if t0 != 1:
        gens.append(diag(t0, 1, p))
    g = group_closure(p, gens, name=f"det^-1({sorted(set(d % p for d in dets))})")
    assert g.order == p * (p * p - 1) * len(set(d % p for d in dets))
    return g


# Generator matrices for the named groups.  The p=3 family lives inside
# GL2(F_3) = SD16 x scalars; the p=7 and p=13 families are the odd-order-index
# subgroups used for rank-two Weyl group data at those primes.
_P3 = {
    "l": (0, 1, 1, 2),
    "w": (0, 1, 2, 0),
    "k": (1, 2, 2, 2),
    "w'": (1, 2, 0, 2),
    "m": (2, 0, 0, 2),
}

_NAMED: dict[str, tuple[int | None, tuple, int | None]] = {
    # name: (required prime or None, generator names/matrices, expected order)
    "SD16": (3, ("l", "w'"), 16),
    "Q8": (3, ("w", "k"), 8),
    "D8": (3, ("w'", "k"), 8),
    "Z8": (3, ("l",), 8),
    "Z4k": (3, ("k",), 4),
    "Z4w": (3, ("w",), 4),
    "V4": (3, ("w'", "m"), 4),
    "Z2m": (3, ("m",), 2),
    "Z2w'": (3, ("w'",), 2),
    "3D8": (7, ((6, 0, 0, 1), (2, 0, 0, 2), (0, 1, 6, 0)), 24),
    "3SD16": (7, ((6, 0, 0, 1), (2, 0, 0, 2), (0, 1, 6, 0), (6, 1, 6, 6)), 48),
    "3SD32": (7, ((6, 0, 0, 1), (2, 0, 0, 2), (0, 1, 6, 0), (6, 1, 6, 6), (6, 3, 4, 6)), 96),
    "3S3": (7, ((2, 0, 0, 1), (0, 1, 1, 0)), 18),
    "6S3": (7, ((2, 0, 0, 1), (0, 1, 1, 0), (6, 0, 0, 6)), 36),
    "6sq2": (7, ((2, 0, 0, 1), (0, 1, 1, 0), (6, 0, 0, 6), (3, 0, 0, 1)), 72),
    "3x4S4": (13, ((3, 0, 0, 9), (5, 9, 11, 7), (2, 2, 1, 11)), 288),
}


def named_subgroup(name: str, p: int) -> MatrixGroup:
    """Named finite subgroups of GL2(F_p) used throughout the catalog."""
    check_prime(p)
    if name in ("TRIV", "1"):
        return group_closure(p, (), name="TRIV")
    if name == "U":
        g = group_closure(p, (u_matrix(p),), name="U")
        assert g.order == p
        return g
    if name == "SL2":
        g = group_closure(p, sl2_generators(p), name="SL2")
        assert g.order == p * (p * p - 1)
        return g
    if name == "GL2":
        gens = sl2_generators(p) + (diag(primitive_root(p), 1, p),)
        g = group_closure(p, gens, name="GL2")
        assert g.order == gl2_order(p)
        return g
    if name.startswith("diag(") and name.endswith(")"):
        try:
            a, b = (int(t) for t in name[5:-1].split(","))
        except ValueError as exc:
            raise GFError(f"bad diagonal literal {name!r}") from exc
        return group_closure(p, (diag(a, b, p),), name=name)
    if name not in _NAMED:
        raise GFError(f"unknown subgroup name {name!r}")
    want_p, gens, order = _NAMED[name]
    if want_p is not None and p != want_p:
        raise GFError(f"subgroup {name!r} is defined at p={want_p}, not p={p}")
    mats = tuple(_P3[g] if isinstance(g, str) else g for g in gens)
    grp = group_closure(p, mats, name=name)
    if order is not None:
        assert grp.order == order, (name, grp.order, order)
    return grp
