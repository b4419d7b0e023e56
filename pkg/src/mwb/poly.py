"""Polynomials over Q on a logarithmic ambient space.

An ambient A^{n;r} is an ordered list of named variables, each flagged
ordinary, monomial, or exceptional.  The two non-ordinary flags carry the
same log structure (exceptional just remembers blow-up provenance); they
change which derivations exist: d/dx for ordinary x, the Euler operator
x*d/dx for log variables.

Chart-local rings appear as an ambient plus a set of formally inverted
variable names (the chart's irrelevant monomial); inversion never changes
arithmetic here, it only licenses unit-stripping and saturation upstream.

Coefficients are exact Fractions; exponent vectors are int tuples aligned
with the variable order.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel
from .errors import (
    AmbientMismatch,
    IncompleteSubstitution,
    MwbError,
    ZeroVector,
)
from .monomials import MonomialIdeal, minimalize
from .polyhedra import Vec

ORDINARY = "ordinary"
MONOMIAL = "monomial"
EXCEPTIONAL = "exceptional"
_FLAGS = (ORDINARY, MONOMIAL, EXCEPTIONAL)


class LogAmbient:
    """Ordered named variables with log flags and chart inversions."""

    __slots__ = ("variables", "inverted", "_index")

    def __init__(self, variables, inverted=()):
        variables = tuple((str(n), str(f)) for n, f in variables)
        names = [n for n, _ in variables]
        if len(set(names)) != len(names):
            raise MwbError(f"duplicate variable names in {names}")
        for n, f in variables:
            if f not in _FLAGS:
                raise MwbError(f"unknown flag {f!r} for variable {n}")
        inverted = frozenset(str(v) for v in inverted)
        if not inverted <= set(names):
            raise MwbError(f"inverted variables {sorted(inverted)} not in ambient")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "inverted", inverted)
        object.__setattr__(self, "_index", {n: i for i, (n, _) in enumerate(variables)})

    def __setattr__(self, *a):
        raise AttributeError("LogAmbient is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LogAmbient)
            and self.variables == other.variables
            and self.inverted == other.inverted
        )

    def __hash__(self):
        return hash((self.variables, self.inverted))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return sum(1 for _, f in self.variables if f != ORDINARY)

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise MwbError(f"no variable {name!r} in ambient") from None

    def flag(self, name: str) -> str:
        return self.variables[self.index(name)][1]

    def is_log(self, name: str) -> bool:
        return self.flag(name) != ORDINARY

    def drop(self, name: str) -> "LogAmbient":
        i = self.index(name)
        return LogAmbient(
            self.variables[:i] + self.variables[i + 1 :],
            self.inverted - {name},
        )

    def with_inverted(self, names) -> "LogAmbient":
        return LogAmbient(self.variables, self.inverted | set(names))

    def describe(self) -> str:
        tags = ", ".join(
            f"{n} {f}" + ("*" if n in self.inverted else "")
            for n, f in self.variables
        )
        return f"A^{{{self.n};{self.r}}}({tags})"

    def __repr__(self):
        return f"LogAmbient({self.describe()})"


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise MwbError(f"coefficient {c!r} is not rational")


class Polynomial:
    """Term dict {exponent tuple: nonzero Fraction} over a LogAmbient."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: LogAmbient, terms):
        clean = {}
        n = ambient.n
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ZeroVector(f"exponent {e!r} does not have {n} entries")
            if any(x < 0 for x in e):
                raise ZeroVector(f"exponent {e!r} has a negative entry")
            c = _coeff(c)
            if c:
                clean[e] = c
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ambient.n}

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ambient.n, Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ambient != other.ambient:
            raise AmbientMismatch(
                f"{self.ambient.describe()} vs {other.ambient.describe()}"
            )

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            nc = t.get(e, Fraction(0)) + c
            if nc:
                t[e] = nc
            else:
                t.pop(e, None)
        return Polynomial(self.ambient, t)

    def __neg__(self):
        return Polynomial(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _coeff(other)
            return Polynomial(
                self.ambient, {e: c * c0 for e, c in self.terms.items()}
            )
        self._check(other)
        t: dict[Vec, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                m = kernel.mono_mul(e1, e2)
                nc = t.get(m, Fraction(0)) + c1 * c2
                if nc:
                    t[m] = nc
                else:
                    t.pop(m, None)
        return Polynomial(self.ambient, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise MwbError("negative polynomial power")
        out = constant(self.ambient, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.terms.items()))))

    # -- queries ------------------------------------------------------------

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ambient.index(name)
        return max(e[i] for e in self.terms)

    def evaluate(self, point) -> Fraction:
        point = [_coeff(x) for x in point]
        if len(point) != self.ambient.n:
            raise MwbError("point arity does not match ambient")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda t: kernel.grevlex_key(t[0]), reverse=True
        )

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


# -- constructors -----------------------------------------------------------


def constant(ambient: LogAmbient, c) -> Polynomial:
    return Polynomial(ambient, {(0,) * ambient.n: _coeff(c)})


def monomial(ambient: LogAmbient, e: Vec, c=1) -> Polynomial:
    return Polynomial(ambient, {tuple(e): _coeff(c)})


def variable(ambient: LogAmbient, name: str) -> Polynomial:
    e = [0] * ambient.n
    e[ambient.index(name)] = 1
    return Polynomial(ambient, {tuple(e): Fraction(1)})


# -- derivations ------------------------------------------------------------


def derivative(p: Polynomial, name: str) -> Polynomial:
    """Plain partial derivative d/dx, regardless of flag."""
    i = p.ambient.index(name)
    t = {}
    for e, c in p.terms.items():
        if e[i]:
            e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
            t[e2] = t.get(e2, Fraction(0)) + c * e[i]
    return Polynomial(p.ambient, t)


def log_derivation(p: Polynomial, name: str) -> Polynomial:
    """The derivation attached to the variable: d/dx when ordinary,
    the Euler operator x*d/dx when monomial or exceptional."""
    if p.ambient.is_log(name):
        i = p.ambient.index(name)
        return Polynomial(
            p.ambient, {e: c * e[i] for e, c in p.terms.items() if e[i]}
        )
    return derivative(p, name)


# -- substitution and reindexing --------------------------------------------


def substitute(p: Polynomial, images: dict, target: LogAmbient) -> Polynomial:
    """Ring map determined by variable images; every source variable needs one."""
    missing = [n for n in p.ambient.names() if n not in images]
    if missing:
        raise IncompleteSubstitution(f"no image for {missing}")
    cache: list[dict[int, Polynomial]] = [dict() for _ in range(p.ambient.n)]

    def pw(i: int, k: int) -> Polynomial:
        if k not in cache[i]:
            cache[i][k] = images[p.ambient.names()[i]] ** k
        return cache[i][k]

    out = Polynomial(target, {})
    for e, c in p.terms.items():
        t = constant(target, c)
        for i, k in enumerate(e):
            if k:
                t = t * pw(i, k)
        out = out + t
    return out


def rename(p: Polynomial, mapping: dict, target: LogAmbient) -> Polynomial:
    """Variable-for-variable relabeling into the target ambient."""
    perm = []
    for n in p.ambient.names():
        perm.append(target.index(mapping.get(n, n)))
    t = {}
    for e, c in p.terms.items():
        e2 = [0] * target.n
        for i, k in enumerate(e):
            e2[perm[i]] = k
        t[tuple(e2)] = c
    return Polynomial(target, t)


def restrict(p: Polynomial, name: str, value: Polynomial | None = None) -> Polynomial:
    """Substitute value (default 0) for the named variable and drop it.

    The value must live on the reduced ambient (free of the variable)."""
    sub = p.ambient.drop(name)
    if value is None:
        value = Polynomial(sub, {})
    if value.ambient != sub:
        raise AmbientMismatch("restriction value must live on the reduced ambient")
    images = {}
    for n in p.ambient.names():
        images[n] = value if n == name else variable(sub, n)
    return substitute(p, images, sub)


def strip_inverted_units(p: Polynomial) -> tuple[Polynomial, Vec]:
    """Divide out the largest inverted-variable monomial dividing every term.

    On a chart the inverted variables are units, so this changes the
    polynomial only by a unit factor.  Returns (quotient, removed exponent)."""
    if p.is_zero():
        return p, (0,) * p.ambient.n
    idx = [p.ambient.index(v) for v in sorted(p.ambient.inverted)]
    rem = [0] * p.ambient.n
    for i in idx:
        rem[i] = min(e[i] for e in p.terms)
    if not any(rem):
        return p, tuple(rem)
    t = {
        tuple(x - r for x, r in zip(e, rem)): c for e, c in p.terms.items()
    }
    return Polynomial(p.ambient, t), tuple(rem)


# -- ideals -----------------------------------------------------------------


class PolyIdeal:
    """Finitely generated ideal; zero generators are dropped, order kept."""

    __slots__ = ("ambient", "generators")

    def __init__(self, ambient: LogAmbient, generators):
        gens = []
        for g in generators:
            if g.ambient != ambient:
                raise AmbientMismatch("generator over a different ambient")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "generators", tuple(gens))

    def __setattr__(self, *a):
        raise AttributeError("PolyIdeal is immutable")

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        return (
            isinstance(other, PolyIdeal)
            and self.ambient == other.ambient
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ambient, self.generators))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"PolyIdeal{self}"


def monomial_saturation(ideal: PolyIdeal) -> MonomialIdeal:
    """Smallest monomial ideal containing the ideal: the ideal of all terms
    of any generating set (a monomial ideal contains a polynomial iff it
    contains each of its terms)."""
    exps = []
    for g in ideal.generators:
        exps.extend(g.terms)
    return MonomialIdeal(ideal.ambient.n, minimalize(exps))


# -- printing ---------------------------------------------------------------


def format_monomial(ambient: LogAmbient, e: Vec) -> str:
    parts = []
    for name, k in zip(ambient.names(), e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        mono = format_monomial(p.ambient, e)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
