import time

import pytest
from rich.table import Table

from jsjcube.opening.decomposition import DecompositionGraph, DecompositionVertex, VertexKind
from jsjcube.utils.console_utils import complex_summary, decomposition_table
from jsjcube.utils.parallel import run_in_thread_pool


def _slow_square(x):
    time.sleep(0.01 * (5 - x))
    return x * x


def _fail(x):
    if x == 2:
        raise ValueError("two")
    return x


@pytest.mark.parametrize("threads", [1, 4])
def test_thread_pool_keeps_submission_order(threads):
    params = [{"x": x} for x in range(5)]
    assert run_in_thread_pool(_slow_square, params, threads=threads) == [0, 1, 4, 9, 16]


@pytest.mark.parametrize("threads", [1, 3])
def test_thread_pool_propagates_errors(threads):
    with pytest.raises(ValueError, match="two"):
        run_in_thread_pool(_fail, [{"x": x} for x in range(4)], threads=threads)


def test_tables(dcomm):
    summary = complex_summary(dcomm)
    assert isinstance(summary, Table)
    assert summary.row_count == 2
    dg = DecompositionGraph(
        vertices=[DecompositionVertex(id="R", kind=VertexKind.RIGID, rank=2)]
    )
    assert decomposition_table(dg).row_count == 1
