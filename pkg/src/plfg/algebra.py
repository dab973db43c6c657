"""Canonical-form arithmetic in the graded rings the engine computes in.

Three algebras over F_p, all graded by even topological degree:

* ``POLY2(p)`` -- F_p[y1, y2] with |y1| = |y2| = 2; monomial key ``(i, j)``.
* ``BA(p)``    -- F_p[y, u] with |y| = |u| = 2; monomial key ``(s, t)``.  This
  is the target of the restriction maps to rank-two elementary abelian
  subgroups and carries its own action convention (see ``plfg.actions``).
* ``BE(p)``    -- the nilpotent-free even cohomology ring of the extraspecial
  group of order p^3 and exponent p: a free F_p[C, v]-module on the monomials
  ``y1^i y2^j`` with ``0 <= i, j <= p-1`` and ``(i, j) != (p-1, p-1)``, where
  |y_i| = 2, |C| = 2p-2, |v| = 2p.  Monomial key ``(a, b, i, j)`` standing for
  ``C^a v^b y1^i y2^j``.

Multiplication in BE rewrites products into the free-module basis with

* R1: ``y_t^e -> C * y_t^(e-p+1)`` whenever ``e >= p``;
* R2: ``y1^(p-1) y2^(p-1) -> C*(y1^(p-1) + y2^(p-1)) - C^2``.

Both rules drop the total y-degree by p-1, so rewriting terminates, and the
normal forms are exactly the free-basis monomials; path independence is
exercised by the test suite.  The relations force ``y1^p y2 = y1 y2^p`` and
``C^2 = Y1^2 + Y2^2 - Y1 Y2`` (with ``Y_i = y_i^(p-1)``) as identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import check_prime


@dataclass(frozen=True)
class Algebra:
    tag: str  # "BE" | "BA" | "POLY2"
    p: int

    def __repr__(self):
        return f"{self.tag}({self.p})"


@lru_cache(maxsize=None)
def BE(p: int) -> Algebra:
    check_prime(p)
    return Algebra("BE", p)


@lru_cache(maxsize=None)
def BA(p: int) -> Algebra:
    check_prime(p)
    return Algebra("BA", p)


@lru_cache(maxsize=None)
def POLY2(p: int) -> Algebra:
    check_prime(p)
    return Algebra("POLY2", p)


def mono_degree(alg: Algebra, mono: tuple) -> int:
    p = alg.p
    if alg.tag == "BE":
        a, b, i, j = mono
        return (2 * p - 2) * a + 2 * p * b + 2 * (i + j)
    return 2 * (mono[0] + mono[1])


def _reduce_exponent(p: int, e: int) -> tuple[int, int]:
    """Apply R1 until the exponent is < p; returns (extra C power, exponent)."""
    k = 0
    while e >= p:
        e -= p - 1
        k += 1
    return k, e


def be_reduce(p: int, raw: dict) -> dict:
    """Rewrite a {(a, b, i, j): coeff} dict with unrestricted i, j to canonical form."""
    out: dict = {}
    work = list(raw.items())
    while work:
        (a, b, i, j), c = work.pop()
        c %= p
        if c == 0:
            continue
        ka, i = _reduce_exponent(p, i)
        kb, j = _reduce_exponent(p, j)
        a += ka + kb
        if i == p - 1 and j == p - 1:
            work.append(((a + 1, b, p - 1, 0), c))
            work.append(((a + 1, b, 0, p - 1), c))
            work.append(((a + 2, b, 0, 0), -c))
            continue
        key = (a, b, i, j)
        v = (out.get(key, 0) + c) % p
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


class GradedElement:
    """An exact F_p-linear combination of canonical monomials."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: Algebra, coeffs: dict | None = None):
        self.alg = alg
        self.coeffs = coeffs or {}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, GradedElement) and self.alg == other.alg
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.alg, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        self._check(other)
        p = self.alg.p
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return GradedElement(self.alg, out)

    def __neg__(self):
        p = self.alg.p
        return GradedElement(self.alg, {m: (-c) % p for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        p = self.alg.p
        scalar %= p
        if scalar == 0:
            return GradedElement(self.alg)
        return GradedElement(self.alg, {m: c * scalar % p for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        self._check(other)
        return multiply(self, other)

    def __pow__(self, e: int):
        out = one(self.alg)
        base = self
        while e:
            if e & 1:
                out = out * base
            base_needed = e >> 1
            if base_needed:
                base = base * base
            e >>= 1
        return out

    def _check(self, other):
        if self.alg != other.alg:
            raise ValueError(f"algebra mismatch: {self.alg} vs {other.alg}")

    def degrees(self) -> dict[int, "GradedElement"]:
        """Split into homogeneous components, keyed by topological degree."""
        parts: dict[int, dict] = {}
        for m, c in self.coeffs.items():
            parts.setdefault(mono_degree(self.alg, m), {})[m] = c
        return {d: GradedElement(self.alg, cs) for d, cs in sorted(parts.items())}

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = {mono_degree(self.alg, m) for m in self.coeffs}
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"element not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = {"BE": ("C", "v", "y1", "y2"), "BA": ("y", "u"), "POLY2": ("y1", "y2")}[self.alg.tag]
        terms = []
        for m, c in sorted(self.coeffs.items()):
            factors = [] if c == 1 else [str(c)]
            for name, e in zip(names, m if self.alg.tag == "BE" else m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            terms.append("*".join(factors) or str(c))
        return " + ".join(terms)


def zero(alg: Algebra) -> GradedElement:
    return GradedElement(alg)


def one(alg: Algebra) -> GradedElement:
    mono = (0, 0, 0, 0) if alg.tag == "BE" else (0, 0)
    return GradedElement(alg, {mono: 1})


def monomial(alg: Algebra, mono: tuple, coeff: int = 1) -> GradedElement:
    coeff %= alg.p
    if not coeff:
        return zero(alg)
    if alg.tag == "BE":
        return GradedElement(alg, be_reduce(alg.p, {tuple(mono): coeff}))
    return GradedElement(alg, {tuple(mono): coeff})


def be_generators(p: int) -> dict[str, GradedElement]:
    """y1, y2, C, v and the convenience power V = v^(p-1)."""
    alg = BE(p)
    return {
        "y1": monomial(alg, (0, 0, 1, 0)),
        "y2": monomial(alg, (0, 0, 0, 1)),
        "C": monomial(alg, (1, 0, 0, 0)),
        "v": monomial(alg, (0, 1, 0, 0)),
        "V": monomial(alg, (0, p - 1, 0, 0)),
    }


@lru_cache(maxsize=None)
def _be_mono_product(alg: Algebra, m1: tuple, m2: tuple) -> tuple:
    raw = {(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]): 1}
    return tuple(sorted(be_reduce(alg.p, raw).items()))


def multiply(x: GradedElement, y: GradedElement) -> GradedElement:
    if x.alg != y.alg:
        raise ValueError(f"algebra mismatch: {x.alg} vs {y.alg}")
    alg = x.alg
    p = alg.p
    out: dict = {}
    if alg.tag == "BE":
        for m1, c1 in x.coeffs.items():
            for m2, c2 in y.coeffs.items():
                c = c1 * c2 % p
                for m, cm in _be_mono_product(alg, m1, m2):
                    v = (out.get(m, 0) + c * cm) % p
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
    else:
        for (i1, j1), c1 in x.coeffs.items():
            for (i2, j2), c2 in y.coeffs.items():
                m = (i1 + i2, j1 + j2)
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return GradedElement(alg, out)


@lru_cache(maxsize=None)
def degree_basis(alg: Algebra, d: int) -> tuple[tuple, ...]:
    """Sorted canonical monomial basis of the degree-d component."""
    if d < 0 or d % 2:
        return ()
    p = alg.p
    if alg.tag != "BE":
        n = d // 2
        return tuple((s, n - s) for s in range(n + 1))
    monos = []
    for b in range(d // (2 * p) + 1):
        rem = d - 2 * p * b
        for a in range(rem // (2 * p - 2) + 1):
            s2 = rem - (2 * p - 2) * a
            if s2 % 2:
                continue
            s = s2 // 2
            lo, hi = max(0, s - (p - 1)), min(p - 1, s)
            for i in range(lo, hi + 1):
                j = s - i
                if i == p - 1 and j == p - 1:
                    continue
                monos.append((a, b, i, j))
    return tuple(sorted(monos))


@lru_cache(maxsize=None)
def basis_index(alg: Algebra, d: int) -> dict:
    return {m: k for k, m in enumerate(degree_basis(alg, d))}


def to_vector(x: GradedElement, d: int):
    import numpy as np

    idx = basis_index(x.alg, d)
    v = np.zeros(len(idx), dtype=np.int64)
    for m, c in x.coeffs.items():
        if mono_degree(x.alg, m) != d:
            raise ValueError(f"element has a term outside degree {d}")
        v[idx[m]] = c
    return v


def from_vector(alg: Algebra, d: int, vec) -> GradedElement:
    basis = degree_basis(alg, d)
    p = alg.p
    coeffs = {basis[k]: int(c) % p for k, c in enumerate(vec) if int(c) % p}
    return GradedElement(alg, coeffs)


def series_expand(numerator: dict[int, int], denominator_degrees, nmax: int) -> list[int]:
    """Coefficients of numerator / prod(1 - t^d) up to t^nmax, exact integers."""
    coeff = [0] * (nmax + 1)
    for e, c in numerator.items():
        if 0 <= e <= nmax:
            coeff[e] += c
    for d in denominator_degrees:
        # multiply by 1/(1 - t^d): running sums with stride d
        for n in range(d, nmax + 1):
            coeff[n] += coeff[n - d]
    return coeff


def be_poincare_closed(p: int, d_max: int) -> list[int]:
    """Dimensions of BE(p) in degrees 0, 2, ..., d_max from the closed form.

    In the half-degree variable t the series is
    ((1 + ... + t^(p-1))^2 - t^(2p-2)) / ((1 - t^(p-1)) (1 - t^p)).
    """
    nmax = d_max // 2
    num: dict[int, int] = {}
    for i in range(p):
        for j in range(p):
            num[i + j] = num.get(i + j, 0) + 1
    num[2 * p - 2] = num.get(2 * p - 2, 0) - 1
    return series_expand(num, (p - 1, p), nmax)


def be_dims(p: int, d_max: int) -> list[int]:
    """Dimensions of BE(p) per even degree, counted from the monomial basis."""
    return [len(degree_basis(BE(p), d)) for d in range(0, d_max + 1, 2)]
