import itertools

from hypothesis import given, strategies as st

from satpart.ilp import EQ, GE, Constraint, IlpSystem, solve_ilp_feasibility


def test_empty_box_intersection():
    assert solve_ilp_feasibility(IlpSystem((0,), (3,), (Constraint((1,), GE, 5),))) is None


def test_fixed_variable():
    assert solve_ilp_feasibility(IlpSystem((1,), (1,))) == [1]


def test_inverted_box():
    assert solve_ilp_feasibility(IlpSystem((2,), (1,))) is None


def test_c4_split_system():
    sys = IlpSystem((1, 1), (1, 1), (Constraint((0, 2), EQ, 2), Constraint((2, 0), EQ, 2)))
    assert solve_ilp_feasibility(sys) == [1, 1]


def test_stats_accumulate():
    stats = {"ilp_nodes": 5}
    solve_ilp_feasibility(IlpSystem((0, 0), (3, 3), (Constraint((1, 1), EQ, 3),)), stats)
    assert stats["ilp_nodes"] > 5


small_rows = st.lists(
    st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
              st.sampled_from([GE, EQ]), st.integers(-6, 6)),
    max_size=4)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=3, max_size=3), small_rows)
def test_matches_exhaustive_search(box, rows):
    lower = tuple(min(a, b) for a, b in box)
    upper = tuple(max(a, b) for a, b in box)
    sys = IlpSystem(lower, upper, tuple(Constraint(tuple(c), rel, rhs) for c, rel, rhs in rows))
    points = [x for x in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))
              if sys.is_feasible_point(x)]
    got = solve_ilp_feasibility(sys)
    if points:
        # first feasible point in lexicographic order (lower values first)
        assert got == list(points[0])
    else:
        assert got is None
