"""Groebner bases over Q: Buchberger's algorithm, membership, saturation.

Everything runs through the kernel's normal-form loop; orders are grevlex
(block == 0) or a block elimination order putting the first k variables in
front (block == k).  Bases are reduced and monic, so they are unique for a
given order and the determinism of every downstream consumer rests on the
sorted pair selection here.

Saturation (I : f^inf) uses the usual trick: adjoin w, add w*f - 1, and
eliminate w with a block order.  Products are saturated factor by factor.
Dimension of R/I is read off the leading-term ideal by maximal independent
variable sets, which is exact for a degree-compatible order like grevlex.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import kernel
from .errors import AmbientMismatch, MwbError
from .poly import (
    ORDINARY,
    LogAmbient,
    PolyIdeal,
    Polynomial,
    rename,
    variable,
)


def leading_term(p: Polynomial, block: int = 0):
    if p.is_zero():
        raise MwbError("the zero polynomial has no leading term")
    lm = max(p.terms, key=lambda e: kernel.order_key(e, block))
    return lm, p.terms[lm]


def monic(p: Polynomial, block: int = 0) -> Polynomial:
    lm, lc = leading_term(p, block)
    if lc == 1:
        return p
    inv = Fraction(1) / lc
    return Polynomial(p.ambient, {e: c * inv for e, c in p.terms.items()})


def _nf(p: Polynomial, basis, block: int) -> Polynomial:
    # basis: list of (lm, terms dict) with monic entries
    return Polynomial(p.ambient, kernel.normal_form(p.terms, basis, block))


def groebner_basis(ideal: PolyIdeal, block: int = 0) -> list[Polynomial]:
    """Reduced monic basis, sorted by increasing leading monomial."""
    gens = [monic(g, block) for g in ideal.generators if not g.is_zero()]
    if not gens:
        return []
    G = list(gens)
    lms = [leading_term(g, block)[0] for g in G]

    def pairdata(i, j):
        return kernel.order_key(kernel.mono_lcm(lms[i], lms[j]), block)

    pairs = {(i, j): pairdata(i, j) for i, j in itertools.combinations(range(len(G)), 2)}
    while pairs:
        (i, j) = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[(i, j)]
        L = kernel.mono_lcm(lms[i], lms[j])
        # Buchberger's coprimality criterion
        if L == kernel.mono_mul(lms[i], lms[j]):
            continue
        qi = kernel.mono_div(L, lms[i])
        qj = kernel.mono_div(L, lms[j])
        s: dict = {}
        for e, c in G[i].terms.items():
            m = kernel.mono_mul(qi, e)
            s[m] = s.get(m, Fraction(0)) + c
        for e, c in G[j].terms.items():
            m = kernel.mono_mul(qj, e)
            nc = s.get(m, Fraction(0)) - c
            if nc:
                s[m] = nc
            else:
                s.pop(m, None)
        r = _nf(
            Polynomial(ideal.ambient, s), list(zip(lms, (g.terms for g in G))), block
        )
        if not r.is_zero():
            r = monic(r, block)
            G.append(r)
            lms.append(leading_term(r, block)[0])
            k = len(G) - 1
            for i2 in range(k):
                pairs[(i2, k)] = pairdata(i2, k)

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, g in enumerate(G):
        if not any(
            j != i
            and kernel.mono_divides(lms[j], lms[i])
            and (not kernel.mono_divides(lms[i], lms[j]) or j < i)
            for j in range(len(G))
        ):
            keep.append(i)
    reduced = []
    for i in keep:
        others = [(lms[j], G[j].terms) for j in keep if j != i]
        r = _nf(G[i], others, block)
        if not r.is_zero():
            reduced.append(monic(r, block))
    reduced.sort(key=lambda g: kernel.order_key(leading_term(g, block)[0], block))
    return reduced


def normal_form(p: Polynomial, basis, block: int = 0) -> Polynomial:
    pairs = [(leading_term(g, block)[0], g.terms) for g in basis if not g.is_zero()]
    return _nf(p, pairs, block)


def member(p: Polynomial, ideal: PolyIdeal | list, block: int = 0) -> bool:
    basis = ideal if isinstance(ideal, list) else groebner_basis(ideal, block)
    if p.is_zero():
        return True
    return normal_form(p, basis, block).is_zero()


def is_unit_ideal(ideal: PolyIdeal) -> bool:
    basis = groebner_basis(ideal)
    return len(basis) == 1 and basis[0].is_constant()


def ideal_equal(i1: PolyIdeal, i2: PolyIdeal) -> bool:
    if i1.ambient != i2.ambient:
        raise AmbientMismatch("comparing ideals over different ambients")
    return groebner_basis(i1) == groebner_basis(i2)


def _fresh_name(taken, base="w") -> str:
    name = base
    while name in taken:
        name = name + "_"
    return name


def saturate(ideal: PolyIdeal, f: Polynomial) -> PolyIdeal:
    """(I : f^inf) by Rabinowitsch elimination of an auxiliary variable."""
    if f.ambient != ideal.ambient:
        raise AmbientMismatch("saturation element over a different ambient")
    if f.is_zero():
        raise MwbError("saturation at zero")
    amb = ideal.ambient
    w = _fresh_name(amb.names())
    scratch = LogAmbient(((w, ORDINARY),) + amb.variables)
    lifted = [rename(g, {}, scratch) for g in ideal.generators]
    flift = rename(f, {}, scratch)
    one = Polynomial(scratch, {(0,) * scratch.n: Fraction(1)})
    lifted.append(variable(scratch, w) * flift - one)
    basis = groebner_basis(PolyIdeal(scratch, lifted), block=1)
    kept = [g for g in basis if g.degree_in(w) == 0]
    back = []
    for g in kept:
        back.append(Polynomial(amb, {e[1:]: c for e, c in g.terms.items()}))
    return PolyIdeal(amb, back)


def saturate_at_variables(ideal: PolyIdeal, names) -> PolyIdeal:
    """Saturation at a product of variables, taken one variable at a time."""
    out = ideal
    for n in names:
        out = saturate(out, variable(ideal.ambient, n))
    return out


def dimension(ideal: PolyIdeal) -> int:
    """Krull dimension of the quotient ring; -1 for the unit ideal."""
    n = ideal.ambient.n
    basis = groebner_basis(ideal)
    if not basis:
        return n
    if len(basis) == 1 and basis[0].is_constant():
        return -1
    leads = [leading_term(g)[0] for g in basis]
    best = 0
    for size in range(n, 0, -1):
        for sel in itertools.combinations(range(n), size):
            selset = set(sel)
            if all(any(e[i] for i in range(n) if i not in selset) for e in leads):
                best = size
                break
        if best:
            break
    return best


def codimension(ideal: PolyIdeal) -> int:
    return ideal.ambient.n - dimension(ideal)
