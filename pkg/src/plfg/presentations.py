"""Expected-result records: module presentations, series expansion, closed forms.

A presentation is a list of summands, each a free module over a standard
graded polynomial ring on generators in stated degrees.  Ring names:

* ``DA``  -- two generators of degrees 2(p^2-p) and 2(p^2-1);
* ``CA``  -- degrees 2p-2 and 2p(p-1);
* ``Cv``  -- degrees 2p-2 and 2p;
* ``S``   -- degrees 8 and 16 (p = 3 only);
* ``M``   -- shorthand: a single summand {ring M, gens G} expands to ring DA
  with generators g + (2p-2)i for g in G and 0 <= i <= p-2, matching the
  splitting of CA off its top layer;
* a literal list of degrees for anything else.

Generators may carry closed forms as expression strings over the ambient
algebra (variables y1, y2, C, v, V on the extraspecial side; y1, y2 on the
polynomial side), which the verifier evaluates exactly.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field

from .algebra import (BA, BE, POLY2, Algebra, GradedElement, be_generators,
                      monomial, one, series_expand)


@dataclass(frozen=True)
class ModulePresentation:
    ring: object                 # name or tuple of degrees
    gens: tuple[int, ...]
    explicit: tuple[str, ...] = ()   # expression per generator, optional
    ring_explicit: tuple[str, ...] = ()

    @property
    def has_closed_forms(self) -> bool:
        return bool(self.explicit) and len(self.explicit) == len(self.gens)


def ring_degrees(ring, p: int) -> tuple[int, ...]:
    if isinstance(ring, (tuple, list)):
        return tuple(int(d) for d in ring)
    if ring == "DA":
        return (2 * (p * p - p), 2 * (p * p - 1))
    if ring == "CA":
        return (2 * p - 2, 2 * p * (p - 1))
    if ring == "Cv":
        return (2 * p - 2, 2 * p)
    if ring == "S":
        if p != 3:
            raise ValueError("ring S is specific to p = 3")
        return (8, 16)
    raise ValueError(f"unknown ring {ring!r}")


def presentation_from_doc(doc: dict) -> ModulePresentation:
    ring = doc["ring"]
    if isinstance(ring, list):
        ring = tuple(ring)
    return ModulePresentation(
        ring=ring,
        gens=tuple(int(g) for g in doc["gens"]),
        explicit=tuple(doc.get("explicit", ())),
        ring_explicit=tuple(doc.get("ring_explicit", ())),
    )


def expand_summand(pres: ModulePresentation, p: int, d_max: int) -> list[int]:
    """Coefficients per even degree 0..d_max of one free-module summand."""
    if pres.ring == "M":
        gens = tuple(g + (2 * p - 2) * i for g in pres.gens for i in range(p))
        rg = ring_degrees("DA", p)
    else:
        gens = pres.gens
        rg = ring_degrees(pres.ring, p)
    num: dict[int, int] = {}
    for g in gens:
        if g % 2:
            raise ValueError(f"odd generator degree {g} in an even presentation")
        num[g // 2] = num.get(g // 2, 0) + 1
    return series_expand(num, tuple(r // 2 for r in rg), d_max // 2)


def expand_presentation(summands, p: int, d_max: int) -> list[int]:
    total = [0] * (d_max // 2 + 1)
    for s in summands:
        for n, c in enumerate(expand_summand(s, p, d_max)):
            total[n] += c
    return total


def expand_odd_presentation(summands, p: int, d_max: int) -> dict[int, int]:
    """Odd-degree dimension map of summands whose generators sit in odd degrees."""
    out: dict[int, int] = {}
    for s in summands:
        rg = ring_degrees(s.ring if s.ring != "M" else "DA", p)
        coeff = [0] * (d_max + 1)
        for g in s.gens:
            if g <= d_max:
                coeff[g] += 1
        for r in rg:
            for n in range(r, d_max + 1):
                coeff[n] += coeff[n - r]
        for n in range(1, d_max + 1, 2):
            if coeff[n]:
                out[n] = out.get(n, 0) + coeff[n]
    return out


# ---------------------------------------------------------------------------
# Closed-form evaluation

_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub,
            ast.Mult, ast.Pow, ast.USub, ast.UAdd, ast.Constant, ast.Name,
            ast.Load)


def poly_names(alg: Algebra) -> dict[str, GradedElement]:
    p = alg.p
    if alg.tag == "BE":
        return be_generators(p)
    if alg.tag == "POLY2":
        return {"y1": monomial(alg, (1, 0)), "y2": monomial(alg, (0, 1))}
    return {"y": monomial(alg, (1, 0)), "u": monomial(alg, (0, 1))}


def parse_poly(expr: str, alg: Algebra) -> GradedElement:
    """Evaluate an exact polynomial expression in the given algebra."""
    tree = ast.parse(expr.replace("^", "**").strip(), mode="eval")
    names = poly_names(alg)

    def ev(node):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"disallowed syntax in {expr!r}: {type(node).__name__}")
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise ValueError(f"non-integer constant in {expr!r}")
            return node.value
        if isinstance(node, ast.Name):
            try:
                return names[node.id]
            except KeyError:
                raise ValueError(f"unknown variable {node.id!r} in {expr!r}") from None
        if isinstance(node, ast.UnaryOp):
            val = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -val if isinstance(val, int) else (-1) * val
            return val
        left, right = ev(node.left), ev(node.right)
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, int) or right < 0:
                raise ValueError(f"bad exponent in {expr!r}")
            return left ** right
        if isinstance(node.op, ast.Mult):
            if isinstance(left, int) and not isinstance(right, int):
                return right * left
            return left * right
        if isinstance(node.op, ast.Add):
            return _mixed_add(left, right, alg)
        if isinstance(node.op, ast.Sub):
            return _mixed_add(left, (-1) * right if not isinstance(right, int) else -right, alg)
        raise ValueError(f"unsupported operator in {expr!r}")

    val = ev(tree)
    if isinstance(val, int):
        return val * one(alg)
    return val


def _mixed_add(a, b, alg: Algebra):
    if isinstance(a, int):
        a = a * one(alg)
    if isinstance(b, int):
        b = b * one(alg)
    return a + b


def ring_elements(ring, alg: Algebra,
                  ring_explicit: tuple[str, ...] = ()) -> list[GradedElement] | None:
    """Closed forms of the ring generators, when available."""
    p = alg.p
    if ring_explicit:
        return [parse_poly(e, alg) for e in ring_explicit]
    if alg.tag == "BE":
        g = be_generators(p)
        C, v, V = g["C"], g["v"], g["V"]
        if ring in ("DA", "M"):
            return [C ** p + V, C * V]
        if ring == "CA":
            return [C, V]
        if ring == "Cv":
            return [C, v]
        return None
    if alg.tag == "POLY2":
        y1 = monomial(alg, (1, 0))
        y2 = monomial(alg, (0, 1))
        if ring in ("DA", "M"):
            top = GradedElement(alg, {((p - 1) * i, (p - 1) * (p - i)): 1
                                      for i in range(p + 1)})
            bottom = GradedElement(alg, {(p, 1): 1, (1, p): p - 1}) ** (p - 1)
            return [top, bottom]
        if ring == "S" and p == 3:
            a1 = y1 * y1 * (y1 * y1 + y2 * y2 + y1 * y2)
            a2 = y2 * y2 * (y1 * y1 + y2 * y2 - y1 * y2)
            return [a1 + a2, a1 * a2]
        return None
    return None
