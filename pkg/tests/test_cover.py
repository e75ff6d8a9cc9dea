import networkx as nx
import pytest

from jsjcube.cover.ball import ball_components_without_line, develop_ball
from jsjcube.cover.lifts import lifts_through
from jsjcube.cycles.enumeration import enumerate_cycles
from jsjcube.cycles.records import normalize_cycle
from jsjcube.errors import PreconditionError, ResourceLimitError
from jsjcube.separation.halfspace import halfspace_labels


@pytest.mark.parametrize("radius, vertices, squares", [(0, 1, 0), (1, 9, 4), (2, 16, 9)])
def test_grid_balls(grid33, radius, vertices, squares):
    ball = develop_ball(grid33, ("grid", "1,1"), radius)
    assert len(ball.vertices) == vertices
    assert len(ball.squares) == squares
    assert ball.proj[ball.base] == ("grid", "1,1")


def test_ball_link_matches_complex_link(dcomm):
    for v in (("A", "o"), ("B", "a/m1")):
        ball = develop_ball(dcomm, v, 1)
        assert nx.is_isomorphic(ball.link(ball.base), dcomm.squares.link(v))


def test_ball_projects_onto_the_complex(dcomm):
    ball = develop_ball(dcomm, ("A", "o"), 2)
    assert set(ball.proj.values()) <= set(dcomm.squares.vertices)
    assert nx.is_connected(ball.to_networkx())
    assert all(ball.level[x] <= 2 for x in ball.vertices)


def test_line_separates_the_grid(grid33):
    ball = develop_ball(grid33, ("grid", "1,1"), 2)
    row = [x for x in ball.vertices if ball.proj[x][1].startswith("1,")]
    assert len(row) == 4
    parts = ball_components_without_line(ball, row)
    assert sorted(len(p) for p in parts) == [4, 8]


def test_lifts_of_tube_cycle(dcomm):
    cycle = normalize_cycle(dcomm.tube("T").end_a.word, graph="A")
    ball = develop_ball(dcomm, ("A", "o"), 2)
    lines = lifts_through(ball, cycle, ball.base)
    assert len(lines) == 4
    for line in lines:
        assert line.vertices[line.anchor_index] == ball.base


def test_ball_arguments(grid33):
    with pytest.raises(PreconditionError):
        develop_ball(grid33, ("grid", "9,9"), 1)
    with pytest.raises(PreconditionError):
        develop_ball(grid33, ("grid", "1,1"), -1)
    with pytest.raises(ResourceLimitError):
        develop_ball(grid33, ("grid", "1,1"), 2, max_cells=5)


def _largest_ball(X, v, radius, max_cells=100_000):
    """the widest ball at ``v`` up to ``radius`` that stays under ``max_cells``"""
    ball = None
    for r in range(1, radius + 1):
        try:
            ball = develop_ball(X, v, r, max_cells=max_cells)
        except ResourceLimitError:
            break
    return ball


def _sides_at_base(ball, cycle):
    """components of the ball minus a lift that hold a square on the lift's first edge"""
    line = lifts_through(ball, cycle, ball.base)[0]
    here, there = line.vertices[line.anchor_index], line.vertices[line.anchor_index + 1]
    label = {x: i for i, part in enumerate(ball_components_without_line(ball, line)) for x in part}
    return {
        label[c]
        for _, corners in ball.squares
        if here in corners and there in corners
        for c in corners
        if c not in line.vertices
    }


@pytest.mark.slow
@pytest.mark.parametrize("name", ["dcomm", "d33"])
def test_halfspaces_match_ball_components(request, name):
    X = request.getfixturevalue(name)
    radius = 8 * 2**X.max_thickness
    balls = {}
    for cycle in enumerate_cycles(X, "A", 8):
        K = halfspace_labels(X, cycle).K
        v = ("A", X.graph("A").tail(cycle.root[0]))
        if v not in balls:
            balls[v] = _largest_ball(X, v, radius)
        ball = balls[v]
        assert ball.radius >= 3
        sides = _sides_at_base(ball, cycle)
        # every half-space holds a square on each edge of the lift
        assert K <= len(sides) <= X.squares.thickness(("V", "A", cycle.root[0][0]))
        if name == "dcomm" or len(cycle.root) <= 4:
            assert len(sides) == K, cycle
