import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from hikeforge import _kernels_py as py
from hikeforge import kernels

try:
    from hikeforge import _kernels as ext
except ImportError:  # extension not built
    ext = None

needs_ext = pytest.mark.skipif(ext is None, reason="compiled extension not built")


def brute_ideals(pred):
    n = len(pred)
    return sorted(s for s in range(1 << n) if all(not (s >> i & 1) or pred[i] & ~s == 0 for i in range(n)))


def brute_levels(masks):
    levels = []
    for i, m in enumerate(masks):
        levels.append(1 + max((levels[j] for j in range(i) if masks[j] & m), default=0))
    return levels


masks_st = st.lists(st.integers(1, 255), max_size=12)


@st.composite
def posets(draw):
    n = draw(st.integers(0, 10))
    return [draw(st.integers(0, (1 << i) - 1)) if i else 0 for i in range(n)]


@given(masks_st)
def test_stack_levels_python(masks):
    assert py.stack_levels(masks) == brute_levels(masks)


@given(posets())
def test_order_ideals_python(pred):
    assert sorted(py.order_ideals(pred)) == brute_ideals(pred)


@needs_ext
@given(masks_st)
def test_stack_levels_agree(masks):
    assert ext.stack_levels(masks) == py.stack_levels(masks)


@needs_ext
@given(posets())
def test_order_ideals_agree(pred):
    assert sorted(ext.order_ideals(pred)) == sorted(py.order_ideals(pred))


@needs_ext
@given(st.integers(1, 7), st.integers(0, 2**49 - 1))
def test_ryser_agree(n, bits):
    rows = [(bits >> (i * n)) & ((1 << n) - 1) for i in range(n)]
    assert list(ext.ryser_perm_poly(rows, n)) == list(py.ryser_perm_poly(rows, n))


def test_dispatch_falls_back_for_wide_masks():
    assert kernels.stack_levels([1 << 70, 1 << 70 | 1, 1]) == [1, 2, 3]


def test_backend_name():
    assert kernels.BACKEND == ("cython" if ext is not None else "python")


def test_pure_python_switch():
    env = dict(os.environ, HIKEFORGE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import hikeforge; print(hikeforge.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
