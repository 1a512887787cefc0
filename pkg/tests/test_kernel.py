import os
import subprocess
import sys

import pytest
from hypothesis import given, settings

from affinetl import _kernel_py, kernel
from affinetl.diagram import realize
from helpers import diagram_pairs

try:
    from affinetl import _kernel_c
except ImportError:  # pragma: no cover - depends on the build
    _kernel_c = None

needs_c = pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")


def _args(A, B):
    a, b = realize(A), realize(B)
    return (A.n, a.top_row, a.top_pos, a.bot_row, a.bot_pos,
            b.top_row, b.top_pos, b.bot_row, b.bot_pos)


@needs_c
@settings(max_examples=400, deadline=None)
@given(diagram_pairs(ns=(3, 4, 5, 6), wmax=3, kmax=1))
def test_backends_agree(pair):
    args = _args(*pair)
    assert _kernel_c.compose_trace(*args) == _kernel_py.compose_trace(*args)


@needs_c
def test_compiled_backend_selected_by_default():
    assert kernel.BACKEND == "cython"


@pytest.mark.parametrize("backend", ["python"] + (["cython"] if _kernel_c else []))
def test_trace_errors_on_invalid_input(backend):
    mod = _kernel_py if backend == "python" else _kernel_c
    # top arcs pair middle nodes 1-2 but the lower diagram sends them to the bottom and top
    with pytest.raises(RuntimeError):
        mod.compose_trace(2, (1, 1), (2, 1), (0, 0), (2, 1),
                          (0, 0), (2, 1), (0, 0), (2, 1))


def test_environment_forces_fallback():
    env = dict(os.environ, AFFINETL_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import affinetl; print(affinetl.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
