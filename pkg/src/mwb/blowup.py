"""Multi-weighted blow-ups of monomial ideals and transforms of ideals.

The blow-up of a monomial ideal a (with a positive integer weight on each
exceptional ray, all 1 by default) is presented through its Cox data:

  * rays of the normal fan of P_a, standard rays first;
  * one Cox variable per ray: the proper transform x' of each coordinate
    (renamed with a prime exactly when its pullback is nontrivial) and a
    fresh exceptional variable per exceptional ray;
  * the pullback x_i -> prod_rho var_rho^{w_rho * u_rho[i]}, the grading of
    the Cox variables by Z^(exceptional rays), and one chart per maximal
    cone with irrelevant monomial prod of the variables of rays not in the
    cone.

Rays whose facet level is positive form E+; they all acquire exceptional
multiplicities under transforms, including "declared exceptional" standard
rays (levels N_i > 0 happen exactly when a sits inside (x_i)).  The weak
transform divides the total transform by the E+ multiplicities of the term
ideal; the proper transform saturates them away.

Root data: a fractional ideal a^{1/l} is blown up with the ray weights
w_rho = l / gcd(l, N_rho) (gcd(l, 0) read as l), which depends only on the
equivalence class of a^{1/l} under (a, l) ~ (closure(a^c), c*l).  Centers
combine coordinate powers with a monomial part and use the same rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    EmptyCenter,
    HypothesisViolated,
    MwbError,
    ZeroIdeal,
    ZeroVector,
)
from .monomials import MonomialIdeal, minimalize, monomial_ideal, newton
from .poly import (
    EXCEPTIONAL,
    ORDINARY,
    LogAmbient,
    PolyIdeal,
    Polynomial,
    monomial_saturation,
    substitute,
)
from .polyhedra import NewtonPolyhedron, NormalFan, Vec, dot, facet_level, normal_fan
from . import groebner

# -- fractional ideals ------------------------------------------------------


@dataclass(frozen=True)
class FractionalIdeal:
    """A formal root a^{1/root} of a monomial ideal."""

    base: MonomialIdeal
    root: int

    def __post_init__(self):
        if self.root < 1:
            raise MwbError(f"root {self.root} must be positive")
        if self.base.is_zero():
            raise ZeroIdeal("fractional power of the zero ideal")

    def canonical(self) -> tuple[tuple[Vec, ...], int]:
        """Vertices of the Newton polyhedron and the root, divided by their
        common gcd.  Two fractional ideals generate the same Rees algebra
        iff their canonical forms agree, closure passing included; no
        closure generators are ever enumerated."""
        verts = newton(self.base).vertices
        g = self.root
        for v in verts:
            for x in v:
                g = gcd(g, x)
        return tuple(tuple(x // g for x in v) for v in verts), self.root // g


def equivalent(f1: FractionalIdeal, f2: FractionalIdeal) -> bool:
    return f1.canonical() == f2.canonical()


# -- centers ----------------------------------------------------------------


@dataclass(frozen=True)
class CenterIdeal:
    """j = (x_1^{e_1}, ..., x_k^{e_k}) + a with Rees root lcm(e_i).

    ordinary: (variable name, positive exponent e_i) pairs;
    monomial: the monomial part, exponent vectors at full ambient arity;
    root: the Rees root l (1 when there is no ordinary part)."""

    ordinary: tuple[tuple[str, int], ...]
    monomial: MonomialIdeal
    root: int


def make_center(ordinary, monomial: MonomialIdeal, root: int | None = None) -> CenterIdeal:
    ordinary = tuple((str(n), int(e)) for n, e in ordinary)
    for n, e in ordinary:
        if e < 1:
            raise MwbError(f"center exponent {e} on {n} must be positive")
    if root is None:
        root = lcm(*[e for _, e in ordinary]) if ordinary else 1
    if not ordinary and monomial.is_zero():
        raise EmptyCenter("center with no ordinary part and zero monomial part")
    return CenterIdeal(ordinary, monomial, root)


def assemble_center(c: CenterIdeal, ambient: LogAmbient) -> MonomialIdeal:
    """The plain monomial ideal j behind the center."""
    n = ambient.n
    if c.monomial.dim != n:
        raise MwbError("center monomial part has the wrong arity")
    gens = []
    for name, e in c.ordinary:
        v = [0] * n
        v[ambient.index(name)] = e
        gens.append(tuple(v))
    gens.extend(c.monomial.gens)
    if not gens:
        raise EmptyCenter("center assembles to the zero ideal")
    return MonomialIdeal(n, minimalize(gens))


# -- the blow-up record -----------------------------------------------------


@dataclass(frozen=True)
class Chart:
    """One chart per maximal cone: its vertex and the chart's irrelevant
    (inverted) variables, i.e. the variables of the rays not in the cone."""

    cone: int
    vertex: Vec
    inverted: tuple[str, ...]


@dataclass(frozen=True)
class MultiWeightedBlowup:
    source: LogAmbient
    ideal: MonomialIdeal
    fan: NormalFan
    weights: tuple[int, ...]  # per ray, fan order
    root: int | None  # Rees root when built from one
    cox: LogAmbient
    ray_vars: tuple[str, ...]  # Cox variable per ray, fan order
    name_map: dict  # source variable -> Cox variable
    beta_rows: tuple[Vec, ...]  # w_rho * u_rho per ray
    grading: dict  # Cox variable -> tuple over exceptional rays
    pullback: dict  # source variable -> Polynomial over cox
    charts: tuple[Chart, ...]
    irrelevant: tuple[tuple[str, ...], ...]

    def levels(self) -> tuple[int, ...]:
        return tuple(r.level for r in self.fan.rays)

    def eplus(self) -> list[int]:
        return self.fan.positive_level()

    def declared_exceptional(self) -> list[str]:
        """Standard rays with positive level: no Cox variable of their own,
        but they carry exceptional multiplicities all the same."""
        return [
            self.ray_vars[i]
            for i, r in enumerate(self.fan.rays)
            if r.standard and r.level > 0
        ]

    def exceptional_vars(self) -> list[str]:
        return [self.ray_vars[i] for i in self.fan.exceptional()]

    def chart_ambient(self, chart: Chart) -> LogAmbient:
        return self.cox.with_inverted(chart.inverted)


_FRESH_LETTERS = "uvwst"


def _fresh_names(source: LogAmbient, count: int) -> list[str]:
    taken_initials = {n[0] for n in source.names()}
    letter = next(
        (c for c in _FRESH_LETTERS if c not in taken_initials), None
    )
    if letter is None:
        letter = "E"
    if count == 1:
        return [letter]
    return [f"{letter}{i + 1}" for i in range(count)]


def _assemble(
    ambient: LogAmbient,
    ideal: MonomialIdeal,
    weights: list[int],
    root: int | None,
) -> MultiWeightedBlowup:
    n = ambient.n
    fan = normal_fan(newton(ideal))
    rays = fan.rays
    exc = fan.exceptional()

    # Cox variables: prime a source name iff its pullback is nontrivial
    name_map = {}
    cox_vars = []
    for i, (name, flag) in enumerate(ambient.variables):
        nontrivial = weights[i] > 1 or any(rays[j].direction[i] for j in exc)
        new = name + "'" if nontrivial else name
        name_map[name] = new
        cox_vars.append((new, flag))
    fresh = _fresh_names(ambient, len(exc))
    for name in fresh:
        cox_vars.append((name, EXCEPTIONAL))
    carried = {name_map[v] for v in ambient.inverted}
    cox = LogAmbient(cox_vars, carried)

    ray_vars = tuple(
        name_map[ambient.names()[i]] if i < n else fresh[i - n]
        for i in range(len(rays))
    )
    beta_rows = tuple(
        tuple(weights[j] * rays[j].direction[i] for i in range(n))
        for j in range(len(rays))
    )

    pullback = {}
    for i, name in enumerate(ambient.names()):
        e = [0] * cox.n
        for j in range(len(rays)):
            k = weights[j] * rays[j].direction[i]
            if k:
                e[cox.index(ray_vars[j])] += k
        pullback[name] = Polynomial(cox, {tuple(e): Fraction(1)})

    grading = {}
    for i, name in enumerate(ambient.names()):
        grading[name_map[name]] = tuple(
            weights[j] * rays[j].direction[i] for j in exc
        )
    for pos, j in enumerate(exc):
        grading[ray_vars[j]] = tuple(
            -1 if q == pos else 0 for q in range(len(exc))
        )

    charts = []
    irrelevant = []
    for ci, cone in enumerate(fan.maximal_cones):
        inv = tuple(
            ray_vars[j]
            for j in range(len(rays))
            if dot(rays[j].direction, cone.vertex) > rays[j].level
        )
        charts.append(Chart(ci, cone.vertex, inv))
        irrelevant.append(inv)

    return MultiWeightedBlowup(
        source=ambient,
        ideal=ideal,
        fan=fan,
        weights=tuple(weights),
        root=root,
        cox=cox,
        ray_vars=ray_vars,
        name_map=name_map,
        beta_rows=beta_rows,
        grading=grading,
        pullback=pullback,
        charts=tuple(charts),
        irrelevant=tuple(irrelevant),
    )


def build_blowup(
    ideal: MonomialIdeal, ambient: LogAmbient, weights: dict | None = None
) -> MultiWeightedBlowup:
    """Blow-up with weight 1 on every ray unless overridden; overrides are
    keyed by exceptional ray direction."""
    if ideal.is_zero():
        raise ZeroIdeal("blow-up of the zero ideal")
    if ideal.dim != ambient.n:
        raise MwbError("ideal arity does not match the ambient")
    fan = normal_fan(newton(ideal))
    w = [1] * len(fan.rays)
    if weights:
        bydir = {fan.rays[j].direction: j for j in fan.exceptional()}
        for direction, b in weights.items():
            direction = tuple(int(x) for x in direction)
            if direction not in bydir:
                raise MwbError(f"{direction} is not an exceptional ray")
            if int(b) < 1:
                raise MwbError(f"weight {b} on {direction} must be positive")
            w[bydir[direction]] = int(b)
    return _assemble(ambient, ideal, w, None)


def rees_weights(fan: NormalFan, root: int) -> list[int]:
    # gcd(root, 0) is root, so zero-level rays get weight 1
    return [root // gcd(root, r.level) for r in fan.rays]


def rees_blowup(frac: FractionalIdeal, ambient: LogAmbient) -> MultiWeightedBlowup:
    """Blow-up of a^{1/l}: ray weights l/gcd(l, N_rho) on every ray.

    Depends only on the canonical form of a^{1/l}: replacing (a, l) by
    (closure(a^c), c*l) scales every level by c and leaves the weights and
    the fan unchanged."""
    if frac.base.dim != ambient.n:
        raise MwbError("ideal arity does not match the ambient")
    fan = normal_fan(newton(frac.base))
    return _assemble(ambient, frac.base, rees_weights(fan, frac.root), frac.root)


def center_to_blowup(c: CenterIdeal, ambient: LogAmbient) -> MultiWeightedBlowup:
    j = assemble_center(c, ambient)
    return rees_blowup(FractionalIdeal(j, c.root), ambient)


def restrict_blowup(c: CenterIdeal, ambient: LogAmbient) -> MultiWeightedBlowup:
    """Blow-up of the center restricted to the vanishing of its first
    ordinary element, on the smaller ambient.

    Needs e_1 | lcm(e_2, ..., e_k) (the lcm of nothing being 1); otherwise
    the restricted root would change the Rees algebra and we refuse."""
    if not c.ordinary:
        raise MwbError("restriction needs an ordinary center element")
    (name, e1), rest = c.ordinary[0], c.ordinary[1:]
    rest_root = lcm(*[e for _, e in rest]) if rest else 1
    if rest_root % e1 != 0:
        raise HypothesisViolated(
            f"first exponent {e1} does not divide lcm of the rest ({rest_root})"
        )
    i = ambient.index(name)
    for g in c.monomial.gens:
        if g[i]:
            raise MwbError(
                f"monomial part of the center involves the dropped variable {name}"
            )
    sub = ambient.drop(name)
    mono = monomial_ideal(
        [g[:i] + g[i + 1 :] for g in c.monomial.gens], c.monomial.dim - 1
    )
    restricted = make_center(rest, mono, rest_root)
    return center_to_blowup(restricted, sub)


# -- transforms -------------------------------------------------------------


def _divide_monomial(p: Polynomial, e: Vec) -> Polynomial:
    if not any(e):
        return p
    t = {}
    for exp, c in p.terms.items():
        q = tuple(a - b for a, b in zip(exp, e))
        if any(x < 0 for x in q):
            raise ZeroVector(f"term {exp} not divisible by {e}")
        t[q] = c
    return Polynomial(p.ambient, t)


def total_transform(b: MultiWeightedBlowup, ideal: PolyIdeal) -> PolyIdeal:
    if ideal.ambient.variables != b.source.variables:
        raise MwbError("ideal does not live on the blow-up's source")
    gens = [substitute(g, b.pullback, b.cox) for g in ideal.generators]
    return PolyIdeal(b.cox, gens)


def exceptional_multiplicities(b: MultiWeightedBlowup, ideal: PolyIdeal) -> dict:
    """w_rho * N_rho(term ideal of I) on every positive-level ray: the
    exceptional multiplicities of the total transform."""
    if ideal.is_zero():
        raise ZeroIdeal("multiplicities of the zero ideal")
    p = newton(monomial_saturation(ideal))
    out = {}
    for j in b.eplus():
        out[b.ray_vars[j]] = b.weights[j] * facet_level(p, b.fan.rays[j].direction)
    return out


def weak_transform(
    b: MultiWeightedBlowup, ideal: PolyIdeal
) -> tuple[PolyIdeal, dict]:
    """Total transform divided by the exceptional multiplicities of the term
    ideal.  Returns (transform, multiplicities keyed by Cox variable)."""
    if ideal.is_zero():
        raise ZeroIdeal("weak transform of the zero ideal")
    mult = exceptional_multiplicities(b, ideal)
    e = [0] * b.cox.n
    for var, k in mult.items():
        e[b.cox.index(var)] += k
    e = tuple(e)
    total = total_transform(b, ideal)
    gens = [_divide_monomial(g, e) for g in total.generators]
    return PolyIdeal(b.cox, gens), mult


def proper_transform(b: MultiWeightedBlowup, ideal: PolyIdeal) -> PolyIdeal:
    """Total transform saturated at every positive-level ray variable."""
    total = total_transform(b, ideal)
    names = [b.ray_vars[j] for j in b.eplus()]
    return groebner.saturate_at_variables(total, names)


def monomial_valuation(b: MultiWeightedBlowup, ray: int, p: Polynomial) -> int:
    """min over terms of sum_i e_i * w_rho * u_rho[i], the order of the
    pullback along the ray's divisor."""
    if p.is_zero():
        raise ZeroIdeal("valuation of the zero polynomial")
    if p.ambient.variables != b.source.variables:
        raise MwbError("polynomial does not live on the blow-up's source")
    row = b.beta_rows[ray]
    return min(dot(row, e) for e in p.terms)


def k_rho(b: MultiWeightedBlowup, ray: int, ideal: PolyIdeal) -> int:
    if ideal.is_zero():
        raise ZeroIdeal("valuation of the zero ideal")
    return min(monomial_valuation(b, ray, g) for g in ideal.generators)


# -- root bookkeeping -------------------------------------------------------


def factored_morphism(b: MultiWeightedBlowup) -> dict:
    """The two-stage description of a root-l blow-up: the pullback of the
    coordinates plus the image of t^{-1}, the product over positive-level
    rays of var_rho^{N_rho / gcd(l, N_rho)}."""
    if b.root is None:
        raise MwbError("factored morphism needs a Rees root")
    t_inv = {}
    for j in b.eplus():
        g = gcd(b.root, b.fan.rays[j].level)
        t_inv[b.ray_vars[j]] = b.fan.rays[j].level // g
    return {"pullback": dict(b.pullback), "t_inverse": t_inv}


def canonical_stack_rays(ideal: MonomialIdeal, root: int) -> frozenset:
    """Rays of the stack-theoretic fan in Z^(n+1): the coordinate rays
    (padded by 0) plus ((l/g) u_rho, N_rho/g) for each positive-level ray,
    g = gcd(l, N_rho)."""
    fan = normal_fan(newton(ideal))
    n = ideal.dim
    out = set()
    for i in range(n):
        out.add(tuple(1 if j == i else 0 for j in range(n)) + (0,))
    for j in fan.positive_level():
        r = fan.rays[j]
        g = gcd(root, r.level)
        out.add(tuple((root // g) * x for x in r.direction) + (r.level // g,))
    return frozenset(out)


# -- consistency checks -----------------------------------------------------


def center_consistency(b: MultiWeightedBlowup, c: CenterIdeal, ambient: LogAmbient) -> list[str]:
    """Structural identities of a center blow-up; returns violations.

    For a center with ordinary part: every exceptional ray level is divisible
    by the root, the level equals e_i * u_rho[i] on each ordinary center
    variable, and u_rho[i] = 0 on ordinary non-center variables.  With a
    nonzero monomial part, every positive-level ray is exceptional."""
    bad = []
    exc = b.fan.exceptional()
    center_idx = {ambient.index(n): e for n, e in c.ordinary}
    for j in exc:
        r = b.fan.rays[j]
        if c.ordinary:
            if r.level % c.root:
                bad.append(f"root {c.root} does not divide level {r.level} of {r.direction}")
            for i, e in center_idx.items():
                if e * r.direction[i] != r.level:
                    bad.append(
                        f"ray {r.direction}: {e} * u[{i}] != level {r.level}"
                    )
        for i, (name, flag) in enumerate(ambient.variables):
            if flag == ORDINARY and i not in center_idx and r.direction[i]:
                bad.append(f"ray {r.direction} meets ordinary non-center {name}")
    if c.ordinary and not c.monomial.is_zero():
        if sorted(b.eplus()) != sorted(exc):
            bad.append("positive-level rays differ from exceptional rays")
    return bad
