"""Backend parity tests for the subset-enumeration kernels."""

import os
import random
import subprocess
import sys

import pytest

from chainsaw import _kernels
from chainsaw.graphs import Graph, make_cycle
from chainsaw.sequences import lucas_V
from helpers import random_graph, reference_count, reference_strata


def _masks(g: Graph) -> tuple[list[int], int, int]:
    adj = [sum(1 << u for u in g.adjacency[v]) for v in range(g.order)]
    loop_mask = sum(1 << v for v in g.loops)
    chain_mask = sum(1 << v for v in g.chain_vertices())
    return adj, loop_mask, chain_mask


def test_numba_is_a_hard_dependency_here():
    assert _kernels.available_backends() == ("jit", "numpy")


def test_active_backend_is_among_available():
    assert _kernels.active_backend() in _kernels.available_backends()


@pytest.mark.parametrize("seed", range(12))
def test_count_matches_reference_on_both_backends(seed):
    g = random_graph(random.Random(seed), max_order=12)
    adj, loop_mask, _ = _masks(g)
    want = reference_count(g)
    for backend in _kernels.available_backends():
        assert _kernels.count_independent(adj, loop_mask, g.order, backend) == want


@pytest.mark.parametrize("seed", range(12))
def test_strata_match_reference_on_both_backends(seed):
    g = random_graph(random.Random(100 + seed), max_order=12)
    adj, loop_mask, chain_mask = _masks(g)
    want = reference_strata(g)
    for backend in _kernels.available_backends():
        counts = _kernels.strata_by_chain_count(adj, loop_mask, chain_mask, g.order, backend)
        assert {t: c for t, c in enumerate(counts) if c} == want


def test_empty_graph_has_one_independent_set():
    for backend in _kernels.available_backends():
        assert _kernels.count_independent([], 0, 0, backend) == 1
        assert _kernels.strata_by_chain_count([], 0, 0, 0, backend) == [1]


def test_all_loops_leave_only_the_empty_set():
    for backend in _kernels.available_backends():
        assert _kernels.count_independent([0, 0, 0], 0b111, 3, backend) == 1


def test_zero_chain_mask_puts_everything_in_stratum_zero():
    g = make_cycle(6)
    adj, loop_mask, _ = _masks(g)
    counts = _kernels.strata_by_chain_count(adj, loop_mask, 0, g.order, "numpy")
    assert counts[0] == lucas_V(6, 1, -1)
    assert sum(counts[1:]) == 0


def test_cycle_smoke_crosses_the_chunk_boundary():
    # order 21 exceeds the numpy chunk width, exercising the chunked path
    g = make_cycle(21)
    adj, loop_mask, _ = _masks(g)
    want = lucas_V(21, 1, -1)
    for backend in _kernels.available_backends():
        assert _kernels.count_independent(adj, loop_mask, g.order, backend) == want


def test_unknown_backend_rejected():
    with pytest.raises(ValueError, match="backend"):
        _kernels.count_independent([0], 0, 1, "gpu")


def test_order_above_mask_limit_rejected():
    with pytest.raises(ValueError, match="at most"):
        _kernels.count_independent([0] * 49, 0, 49)


def test_env_flag_switches_the_default_backend(monkeypatch):
    monkeypatch.setenv(_kernels.PURE_NUMPY_ENV, "1")
    assert _kernels.active_backend() == "numpy"
    monkeypatch.setenv(_kernels.PURE_NUMPY_ENV, "0")
    assert _kernels.active_backend() == "jit"
    monkeypatch.delenv(_kernels.PURE_NUMPY_ENV)
    assert _kernels.active_backend() == "jit"


def test_env_flag_survives_a_fresh_interpreter():
    code = "import chainsaw._kernels as k; print(k.active_backend())"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={**os.environ, _kernels.PURE_NUMPY_ENV: "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_explicit_backend_overrides_the_env_flag(monkeypatch):
    monkeypatch.setenv(_kernels.PURE_NUMPY_ENV, "1")
    g = make_cycle(8)
    adj, loop_mask, _ = _masks(g)
    assert _kernels.count_independent(adj, loop_mask, g.order, "jit") == lucas_V(8, 1, -1)
