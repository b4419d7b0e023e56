"""Newton polyhedra of monomial sets and their normal fans.

A finite set of exponent vectors G in N^n determines the unbounded polyhedron

    P = conv(G) + R^n_{>=0},

cut out by finitely many inequalities u . a >= N with inward normals u >= 0.
The recession cone is the whole orthant, so the coordinate hyperplanes always
contribute facets; the remaining ("exceptional") facet normals are recovered
from (n-1)-subsets of difference vectors of generators together with
coordinate directions, then validated against the support function.  The
normal fan subdivides the nonnegative orthant; its maximal cones biject with
vertices of P and a ray rho lies in the cone of a vertex v exactly when the
facet inequality of rho is tight at v.

All arithmetic is exact (integers and Fractions); nothing here is numeric.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import EmptyIdeal, ZeroVector

Vec = tuple[int, ...]


def dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Vec) -> Vec:
    """v divided by the gcd of its entries; rejects the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector(f"zero vector {v!r} has no primitive")
    return tuple(x // g for x in v)


def _unit(i: int, n: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def _rank(rows: list[Vec]) -> int:
    # plain Gaussian elimination over Q; sizes here are tiny
    mat = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    while mat and col < cols:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col] / prow[col]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        rank += 1
        col += 1
    return rank


def _det(rows: list[tuple[int, ...]]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        for i in range(col + 1, n):
            f = mat[i][col] / mat[col][col]
            mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    assert det.denominator == 1
    return int(det)


def _cross(vecs: list[Vec], n: int) -> Vec:
    # integer normal to n-1 row vectors, by cofactor expansion
    out = []
    for i in range(n):
        minor = [tuple(v[j] for j in range(n) if j != i) for v in vecs]
        out.append((-1) ** i * _det(minor))
    return tuple(out)


@dataclass(frozen=True)
class Facet:
    """Inward facet inequality  normal . a >= level  with primitive normal."""

    normal: Vec
    level: int

    def is_standard(self) -> bool:
        return sum(self.normal) == 1


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[Facet, ...]

    def __str__(self) -> str:
        ineqs = ", ".join(
            f"{f.normal}>= {f.level}".replace(">=", " . a >= ") for f in self.facets
        )
        return f"NewtonPolyhedron(n={self.dim}, vertices={list(self.vertices)}, {ineqs})"


def newton_polyhedron(gens, n: int) -> NewtonPolyhedron:
    """Hull of the given exponent vectors plus the nonnegative orthant.

    Facets are listed with the coordinate facets first (in coordinate order),
    then the exceptional ones in lexicographically descending order of their
    primitive normals.  Vertices are a subset of the generators, listed in
    lexicographically descending order.
    """
    gens = [tuple(int(x) for x in g) for g in gens]
    if not gens:
        raise EmptyIdeal("newton polyhedron of no generators")
    for g in gens:
        if len(g) != n:
            raise ZeroVector(f"generator {g!r} does not have {n} entries")
        if any(x < 0 for x in g):
            raise ZeroVector(f"generator {g!r} has a negative entry")
    gens = sorted(set(gens), reverse=True)

    # coordinate facets: always genuine, recession takes care of the dimension
    facets = [Facet(_unit(i, n), min(g[i] for g in gens)) for i in range(n)]

    if n > 1:
        diffs = set()
        for g, h in itertools.combinations(gens, 2):
            d = tuple(a - b for a, b in zip(g, h))
            diffs.add(max(d, tuple(-x for x in d)))
        pool = sorted(diffs) + [_unit(i, n) for i in range(n)]
        seen = set(f.normal for f in facets)
        cands = set()
        for rows in itertools.combinations(pool, n - 1):
            u = _cross(list(rows), n)
            if all(x == 0 for x in u):
                continue
            if any(x < 0 for x in u) and any(x > 0 for x in u):
                continue  # recession cone forces nonnegative normals
            if all(x <= 0 for x in u):
                u = tuple(-x for x in u)
            u = primitive(u)
            if u not in seen:
                cands.add(u)
        for u in sorted(cands, reverse=True):
            level = min(dot(u, g) for g in gens)
            on = [g for g in gens if dot(u, g) == level]
            span = [tuple(a - b for a, b in zip(g, on[0])) for g in on[1:]]
            span += [_unit(i, n) for i in range(n) if u[i] == 0]
            if span and _rank(span) == n - 1:
                facets.append(Facet(u, level))

    verts = []
    for g in gens:
        active = [f.normal for f in facets if dot(f.normal, g) == f.level]
        if active and _rank(active) == n:
            verts.append(g)
    if n == 1:
        verts = [min(gens)]
    return NewtonPolyhedron(n, tuple(sorted(verts, reverse=True)), tuple(facets))


def contains(p: NewtonPolyhedron, a: Vec) -> bool:
    """Lattice membership a in P, by the facet inequalities."""
    return all(dot(f.normal, a) >= f.level for f in p.facets)


def facet_level(p: NewtonPolyhedron, u: Vec) -> int:
    """min_{a in P} u . a for u >= 0, attained at a vertex."""
    if any(x < 0 for x in u) or not any(x > 0 for x in u):
        raise ZeroVector(f"support direction {u!r} must be nonnegative and nonzero")
    return min(dot(u, v) for v in p.vertices)


@dataclass(frozen=True)
class Face:
    """A face of P: tight facets, the vertices on it, free coordinate
    directions in its recession cone, and its dimension."""

    defining: tuple[int, ...]
    vertices: tuple[Vec, ...]
    free: tuple[int, ...]
    dim: int


def faces(p: NewtonPolyhedron) -> list[Face]:
    """All nonempty faces of P, the full polyhedron included, by decreasing
    dimension.  A lattice point a of P lies on the face iff every defining
    facet inequality is tight at a."""
    n = p.dim
    out = {}
    for r in range(len(p.facets) + 1):
        for sel in itertools.combinations(range(len(p.facets)), r):
            on = [
                v
                for v in p.vertices
                if all(dot(p.facets[i].normal, v) == p.facets[i].level for i in sel)
            ]
            if not on:
                continue
            free = [i for i in range(n) if all(p.facets[j].normal[i] == 0 for j in sel)]
            key = (tuple(on), tuple(free))
            if key in out:
                continue
            # canonical defining set: every facet tight on the whole face
            defining = tuple(
                j
                for j, f in enumerate(p.facets)
                if all(dot(f.normal, v) == f.level for v in on)
                and all(f.normal[i] == 0 for i in free)
            )
            span = [tuple(a - b for a, b in zip(v, on[0])) for v in on[1:]]
            span += [_unit(i, n) for i in free]
            dim = _rank(span) if span else 0
            out[key] = Face(defining, tuple(on), tuple(free), dim)
    return sorted(out.values(), key=lambda f: (-f.dim, f.defining))


@dataclass(frozen=True)
class Ray:
    """A ray of the normal fan: a facet normal with its level."""

    direction: Vec
    level: int
    standard: bool


@dataclass(frozen=True)
class Cone:
    """A maximal cone, recorded by its vertex and the tight ray indices."""

    vertex: Vec
    rays: tuple[int, ...]


@dataclass(frozen=True)
class NormalFan:
    dim: int
    rays: tuple[Ray, ...]
    maximal_cones: tuple[Cone, ...]

    def exceptional(self) -> list[int]:
        return [i for i, r in enumerate(self.rays) if not r.standard]

    def positive_level(self) -> list[int]:
        return [i for i, r in enumerate(self.rays) if r.level > 0]


def normal_fan(p: NewtonPolyhedron) -> NormalFan:
    """Normal fan of P as a subdivision of the orthant.

    Rays are the facet normals, standard rays e_1..e_n first, exceptional rays
    in lexicographically descending order (inherited from the facet list).
    Maximal cones biject with vertices and are listed by lexicographically
    descending vertex; a ray belongs to a cone iff its inequality is tight at
    the cone's vertex.
    """
    rays = tuple(Ray(f.normal, f.level, f.is_standard()) for f in p.facets)
    cones = []
    for v in p.vertices:
        tight = tuple(
            i for i, r in enumerate(rays) if dot(r.direction, v) == r.level
        )
        cones.append(Cone(v, tight))
    cones.sort(key=lambda c: c.vertex, reverse=True)
    return NormalFan(p.dim, rays, tuple(cones))
