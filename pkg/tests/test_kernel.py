"""The compiled kernel and its pure twin must be indistinguishable."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from mwb import _kernel_py, kernel
from mwb.errors import BadOrder


def random_exp(rng, n):
    return tuple(rng.randrange(0, 5) for _ in range(n))


def test_compiled_kernel_is_active_by_default():
    if os.environ.get("MWB_PURE_KERNEL"):
        pytest.skip("pure kernel forced via MWB_PURE_KERNEL")
    assert kernel.COMPILED


def test_monomial_ops_agree():
    rng = random.Random(5001)
    for _ in range(300):
        n = rng.randrange(1, 5)
        a, b = random_exp(rng, n), random_exp(rng, n)
        assert kernel.mono_mul(a, b) == _kernel_py.mono_mul(a, b)
        assert kernel.mono_divides(a, b) == _kernel_py.mono_divides(a, b)
        assert kernel.mono_div(a, b) == _kernel_py.mono_div(a, b)
        assert kernel.mono_lcm(a, b) == _kernel_py.mono_lcm(a, b)


def test_order_keys_agree_as_orders():
    # keys need not be identical objects, but must sort identically
    rng = random.Random(5002)
    for block in (0, 1, 2):
        exps = [random_exp(rng, 4) for _ in range(60)]
        mine = sorted(exps, key=lambda e: kernel.order_key(e, block))
        ref = sorted(exps, key=lambda e: _kernel_py.order_key(e, block))
        assert mine == ref


def test_grevlex_key_known_order():
    # degree first, then reversed-last-variable tie break
    exps = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    ranked = sorted(exps, key=kernel.grevlex_key, reverse=True)
    assert ranked == exps


def test_block_order_eliminates_prefix():
    # x beats any power of y once the first variable is its own block
    kx = kernel.order_key((1, 0), 1)
    ky = kernel.order_key((0, 7), 1)
    assert kx > ky
    assert kernel.order_key((0, 7), 0) > kernel.order_key((1, 0), 0)


def test_bad_block_raises():
    with pytest.raises(BadOrder):
        kernel.order_key((1, 2), 5)
    with pytest.raises(BadOrder):
        _kernel_py.order_key((1, 2), -1)


def random_terms(rng, n, size):
    f = {}
    for _ in range(size):
        e = random_exp(rng, n)
        c = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
        if c:
            f[e] = c
    return f


def test_normal_form_agrees():
    rng = random.Random(5003)
    for _ in range(60):
        n = rng.randrange(1, 4)
        block = rng.randrange(0, n + 1)
        basis = []
        for _ in range(rng.randrange(1, 3)):
            terms = random_terms(rng, n, 3)
            if not terms:
                continue
            lm = max(terms, key=lambda e: _kernel_py.order_key(e, block))
            terms = {e: c / terms[lm] for e, c in terms.items()}
            basis.append((lm, terms))
        f = random_terms(rng, n, 4)
        got = kernel.normal_form(f, basis, block)
        ref = _kernel_py.normal_form(f, basis, block)
        assert got == ref
        # reducing a reduced form is the identity
        assert kernel.normal_form(got, basis, block) == got


def test_pure_kernel_env_switch():
    code = (
        "from mwb import kernel\n"
        "from mwb.engine import resolve\n"
        "from mwb.cli import build_ambient, parse_ideal\n"
        "import argparse\n"
        "assert not kernel.COMPILED\n"
        "amb = build_ambient(argparse.Namespace(ordinary='x,y,z', monomial=None, inverted=None), 'x^2 + y^2 z + z^3')\n"
        "tree = resolve(parse_ideal('x^2 + y^2 z + z^3', amb))\n"
        "print(len(tree.root.children))\n"
    )
    env = dict(os.environ, MWB_PURE_KERNEL="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "3"
