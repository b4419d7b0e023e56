"""Kernel selection: compiled extension when available, pure Python otherwise.

MWB_PURE_KERNEL=1 forces the pure twin (used by the benchmark and by tests
that pin down behavioural equality of the two implementations).
"""

import os

if os.environ.get("MWB_PURE_KERNEL") == "1":
    from . import _kernel_py as impl
else:
    try:
        from . import _kernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as impl

COMPILED = impl.COMPILED
grevlex_key = impl.grevlex_key
order_key = impl.order_key
mono_mul = impl.mono_mul
mono_div = impl.mono_div
mono_divides = impl.mono_divides
mono_lcm = impl.mono_lcm
normal_form = impl.normal_form
