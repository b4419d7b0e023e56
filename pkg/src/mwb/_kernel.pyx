# cython: boundscheck=False, wraparound=False
"""Compiled kernel: monomial arithmetic, orders, normal-form reduction.

Twin of _kernel_py.py with the same signatures.  Exponents stay Python int
tuples (they are dict keys upstream); the win comes from typed loops and
avoiding per-comparison Python callables in the leading-term scan.
"""

from .errors import BadOrder

COMPILED = True


def grevlex_key(e):
    cdef Py_ssize_t i, n = len(e)
    cdef long total = 0
    rev = []
    for i in range(n - 1, -1, -1):
        rev.append(-e[i])
        total += e[i]
    return (total, tuple(rev))


def order_key(e, Py_ssize_t block):
    if block == 0:
        return grevlex_key(e)
    if block < 0 or block > len(e):
        raise BadOrder(f"block size {block} out of range")
    return (grevlex_key(e[:block]), grevlex_key(e[block:]))


def mono_mul(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = []
    for i in range(n):
        out.append(a[i] + b[i])
    return tuple(out)


def mono_divides(a, b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def mono_div(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = []
    for i in range(n):
        if b[i] > a[i]:
            return None
        out.append(a[i] - b[i])
    return tuple(out)


def mono_lcm(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = []
    for i in range(n):
        out.append(a[i] if a[i] > b[i] else b[i])
    return tuple(out)


cdef _max_key(dict work, Py_ssize_t block):
    cdef bint first = True
    best = None
    bestkey = None
    for e in work:
        k = order_key(e, block)
        if first or k > bestkey:
            best, bestkey, first = e, k, False
    return best


def normal_form(f, basis, Py_ssize_t block):
    """Full reduction of the term dict f by a list of (lm, terms) pairs.

    Basis elements are monic: terms[lm] == 1.  Returns the irreducible
    remainder as a new dict; f itself is not modified.
    """
    cdef dict work = dict(f)
    cdef dict out = {}
    while work:
        t = _max_key(work, block)
        c = work.pop(t)
        if not c:
            continue
        hit_terms = None
        q = None
        for lm, terms in basis:
            q = mono_div(t, lm)
            if q is not None:
                hit_terms = terms
                break
        if hit_terms is None:
            out[t] = c
            continue
        for e2, c2 in hit_terms.items():
            m = mono_mul(q, e2)
            if m == t:
                continue  # cancels against the popped leading term
            nc = work.get(m, 0) - c * c2
            if nc:
                work[m] = nc
            else:
                work.pop(m, None)
    return out
