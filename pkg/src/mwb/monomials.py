"""Monomial ideals in N^n: minimal generators, closure, membership.

A monomial ideal is stored by its minimal generating exponent vectors.  The
zero ideal has no generators; the unit ideal is generated by the origin.
Integral closure is the set of lattice points of the Newton polyhedron, and
its minimal generators all lie inside the coordinate box spanned by the
vertex-wise maxima, so a box walk suffices to enumerate them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyIdeal, MwbError, ZeroVector
from .polyhedra import NewtonPolyhedron, Vec, contains, newton_polyhedron


def divides(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens) -> tuple[Vec, ...]:
    """Drop every generator divisible by another; sort descending."""
    gens = sorted(set(tuple(g) for g in gens))
    out: list[Vec] = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out = [h for h in out if not divides(g, h)] + [g]
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple[Vec, ...]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)


def monomial_ideal(gens, n: int) -> MonomialIdeal:
    gens = [tuple(int(x) for x in g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise ZeroVector(f"exponent vector {g!r} does not have {n} entries")
        if any(x < 0 for x in g):
            raise ZeroVector(f"exponent vector {g!r} has a negative entry")
    return MonomialIdeal(n, minimalize(gens))


def member(a: Vec, ideal: MonomialIdeal) -> bool:
    """x^a lies in the ideal iff some generator divides it."""
    return any(divides(g, a) for g in ideal.gens)


def add(i1: MonomialIdeal, i2: MonomialIdeal) -> MonomialIdeal:
    if i1.dim != i2.dim:
        raise ZeroVector("monomial ideals in different ambient dimensions")
    return MonomialIdeal(i1.dim, minimalize(i1.gens + i2.gens))


def product(i1: MonomialIdeal, i2: MonomialIdeal) -> MonomialIdeal:
    if i1.dim != i2.dim:
        raise ZeroVector("monomial ideals in different ambient dimensions")
    sums = [
        tuple(a + b for a, b in zip(g, h)) for g in i1.gens for h in i2.gens
    ]
    return MonomialIdeal(i1.dim, minimalize(sums))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise MwbError("negative power of a monomial ideal")
    out = MonomialIdeal(ideal.dim, ((0,) * ideal.dim,))
    for _ in range(k):
        out = product(out, ideal)
    return out


def shift(ideal: MonomialIdeal, m: Vec) -> MonomialIdeal:
    """Multiply by the single monomial x^m."""
    if any(x < 0 for x in m):
        raise ZeroVector(f"shift {m!r} has a negative entry")
    return MonomialIdeal(
        ideal.dim, tuple(tuple(a + b for a, b in zip(g, m)) for g in ideal.gens)
    )


def newton(ideal: MonomialIdeal) -> NewtonPolyhedron:
    if ideal.is_zero():
        raise EmptyIdeal("the zero ideal has no Newton polyhedron")
    return newton_polyhedron(ideal.gens, ideal.dim)


def closure_member(a: Vec, ideal: MonomialIdeal) -> bool:
    """x^a lies in the integral closure iff a is in the Newton polyhedron."""
    return contains(newton(ideal), tuple(int(x) for x in a))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure.

    Any lattice point of P exceeding the vertex maxima in some coordinate
    stays in P after subtracting that coordinate's unit vector, so minimal
    generators live in the vertex box.  The walk is exponential in dim; the
    guard keeps accidental huge inputs from hanging (use the polyhedron
    directly for those).
    """
    p = newton(ideal)
    box = [max(v[i] for v in p.vertices) + 1 for i in range(ideal.dim)]
    size = 1
    for b in box:
        size *= b
    if size > 2_000_000:
        raise MwbError(f"closure box {box} too large to enumerate")
    import itertools

    pts = [a for a in itertools.product(*(range(b) for b in box)) if contains(p, a)]
    return MonomialIdeal(ideal.dim, minimalize(pts))
