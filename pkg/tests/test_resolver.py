import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dombi_fre.oracle import corpus, full_enumeration, generate
from dombi_fre.resolver import (
    NO_CHOICE,
    CandidateCapExceeded,
    InfeasibleError,
    Instance,
    admissible_sets,
    check_feasible,
    enumerate_candidates,
    max_solution,
    minimal_solutions,
    resolve,
    simplify,
)
from dombi_fre.tnorm import residual_v
from dombi_fre.verify import same_vectors

from conftest import EX1_ABAR_KEPT, EX1_CANDIDATES, EX1_MINIMALS, EX1_XMAX


def one_based(index_sets):
    return [{j + 1 for j in s} for s in index_sets.sets]


def test_instance_validation():
    with pytest.raises(ValueError, match=r"out of \[0,1\]"):
        Instance([[1.2, 0.5]], [0.3], 2)
    with pytest.raises(ValueError, match="lambda"):
        Instance([[0.2, 0.5]], [0.3], 0)
    with pytest.raises(ValueError, match="length"):
        Instance([[0.2, 0.5]], [0.3, 0.1], 2)
    with pytest.raises(ValueError, match="non-empty"):
        Instance(np.zeros((0, 2)), [], 2)
    with pytest.raises(ValueError, match="epsilon"):
        Instance([[0.2]], [0.1], 2, epsilon=0)


def test_instance_is_immutable(example1):
    with pytest.raises(ValueError):
        example1.A[0, 0] = 0.5
    with pytest.raises(AttributeError):
        example1.lam = 3


def test_admissible_sets_example(example1):
    J = admissible_sets(example1)
    assert one_based(J) == [{1, 3, 6}, {1, 5}, {2, 5}, {1, 4, 5}]
    assert not J.simplified
    Jbar = admissible_sets(example1, simplify(example1), simplified=True)
    assert one_based(Jbar) == [{1, 3, 6}, {5}, {2, 5}, {4, 5}]
    assert Jbar.simplified


def test_admissible_zero_row_takes_everything():
    inst = Instance([[0.0, 0.4, 1.0]], [0.0], 2)
    assert admissible_sets(inst).sets == ((0, 1, 2),)


def test_max_solution_example(example1):
    np.testing.assert_allclose(max_solution(example1), EX1_XMAX, atol=5e-4)


def test_max_solution_trivia():
    np.testing.assert_array_equal(max_solution(Instance([[1.0, 1.0, 1.0]], [0.35], 3)), [0.35] * 3)
    inst = Instance([[0.0, 0.3, 0.0], [0.0, 0.0, 0.7]], [0.0, 0.0], 2)
    np.testing.assert_array_equal(max_solution(inst), [1.0, 0.0, 0.0])


def test_check_feasible_example(example1):
    assert check_feasible(example1, max_solution(example1))
    assert not check_feasible(example1, np.zeros(6))
    x10 = [residual_v(0.7243, 0.9452, 2), 0, 0, 0, 1, 0]
    assert check_feasible(example1, x10)
    with pytest.raises(ValueError, match="length"):
        check_feasible(example1, [0.5] * 5)


def test_simplify_example(example1):
    Abar = simplify(example1)
    for i, j in itertools.product(range(4), range(6)):
        if (i + 1, j + 1) in EX1_ABAR_KEPT:
            assert Abar[i, j] == example1.A[i, j]
        else:
            assert Abar[i, j] == 0.0


def test_simplify_single_row_untouched():
    inst = Instance([[0.6, 0.9, 1.0]], [0.5], 2)
    np.testing.assert_array_equal(simplify(inst), inst.A)


def test_simplify_keeps_ties():
    A = [[0.8, 0.6, 0.3], [0.8, 0.6, 0.3]]
    inst = Instance(A, [0.5, 0.5], 2)
    np.testing.assert_array_equal(simplify(inst), [[0.8, 0.6, 0.0], [0.8, 0.6, 0.0]])
    assert same_vectors(resolve(inst).minimals, full_enumeration(inst), inst.epsilon)


def test_simplify_zero_row_rule():
    # column 0 is pinned to 0 by the b = 0 row, so row 0 must use column 1
    inst = Instance([[0.9, 0.7], [0.4, 0.0]], [0.6, 0.0], 2)
    np.testing.assert_array_equal(simplify(inst), [[0.0, 0.7], [0.4, 0.0]])
    sol = resolve(inst)
    assert len(sol.minimals) == 1
    assert sol.minimals[0][0] == 0.0


def test_enumerate_candidates_example(example1):
    cands = enumerate_candidates(example1)
    assert len(cands) == 12
    by_origin = {tuple(j + 1 for j in c.origin): c.x for c in cands}
    assert set(by_origin) == set(EX1_CANDIDATES)
    for e, expected in EX1_CANDIDATES.items():
        np.testing.assert_allclose(by_origin[e], expected, atol=5e-4)


def test_enumerate_single_row():
    inst = Instance([[0.3, 0.8, 0.1]], [0.6], 2)
    (c,) = enumerate_candidates(inst)
    np.testing.assert_array_equal(c.x, [0.0, residual_v(0.6, 0.8, 2), 0.0])
    assert c.origin == (1,)


def test_enumerate_marks_zero_rows():
    inst = Instance([[0.3, 0.8], [0.0, 0.0]], [0.6, 0.0], 2)
    assert [c.origin for c in enumerate_candidates(inst)] == [(1, NO_CHOICE)]


def test_enumerate_cap():
    inst = Instance(np.ones((6, 4)), [0.5] * 6, 2)
    with pytest.raises(CandidateCapExceeded) as info:
        enumerate_candidates(inst, max_candidates=100)
    assert info.value.count == 4**6


def test_enumerate_empty_row_is_infeasible():
    inst = Instance([[0.3, 0.2]], [0.6], 2)
    with pytest.raises(InfeasibleError):
        enumerate_candidates(inst)


def test_minimal_solutions_example(example1):
    mins = minimal_solutions(enumerate_candidates(example1))
    assert same_vectors(mins, EX1_MINIMALS, 5e-4)


def test_minimal_solutions_trivia():
    x = np.array([0.2, 0.4])
    np.testing.assert_array_equal(minimal_solutions([x])[0], x)
    out = minimal_solutions([[0.5, 0.2], [0.5, 0.0]])
    assert len(out) == 1
    np.testing.assert_array_equal(out[0], [0.5, 0.0])
    assert minimal_solutions([]) == []


def test_minimal_solutions_sorted():
    out = minimal_solutions([[0.0, 0.3], [0.3, 0.0], [0.1, 0.1], [0.3, 0.3]])
    assert [list(x) for x in out] == [[0.0, 0.3], [0.1, 0.1], [0.3, 0.0]]


def test_resolve_example(example1):
    sol = resolve(example1)
    assert sol.feasible
    assert sol.candidate_count == 12
    assert len(sol.minimals) == 3 and len(sol.boxes) == 3
    assert not sol.discarded
    for lo, hi in sol.boxes:
        assert hi is sol.x_max


def test_resolve_infeasible():
    sol = resolve(Instance([[0.3, 0.6, 0.2], [0.9, 0.4, 0.8]], [0.7, 0.5], 2))
    assert not sol.feasible
    assert sol.minimals == () and sol.boxes == []


def test_resolve_infeasible_by_conflict():
    # every column reaching row 0 is capped too low by row 1
    inst = Instance([[0.9, 0.9], [0.95, 0.95]], [0.8, 0.3], 2)
    assert not resolve(inst).feasible


def test_resolve_all_zero_b():
    inst = Instance([[0.2, 0.0], [0.0, 0.0]], [0.0, 0.0], 2)
    sol = resolve(inst)
    assert sol.feasible
    np.testing.assert_array_equal(sol.x_max, [0.0, 1.0])
    np.testing.assert_array_equal(sol.minimals[0], [0.0, 0.0])


def test_resolve_deterministic(example1):
    a, b = resolve(example1), resolve(example1)
    assert [x.tobytes() for x in a.minimals] == [x.tobytes() for x in b.minimals]
    assert a.x_max.tobytes() == b.x_max.tobytes()


# properties over generated instances -------------------------------------------

seeds = st.integers(0, 10**6)
sizes = st.integers(1, 4)
lams = st.sampled_from([0.5, 1.0, 2.0, 5.0, 20.0])


@st.composite
def generated(draw):
    m = draw(sizes)
    return generate(draw(seeds), m, draw(sizes), draw(lams), draw(st.integers(0, m)))


def full_candidates(inst):
    """Every X(e) over the unsimplified index sets, feasible or not."""
    J = admissible_sets(inst)
    zero = inst.zero_rows()
    out = []
    for e in itertools.product(*[J[i] if not zero[i] else [None] for i in range(inst.m)]):
        x = np.zeros(inst.n)
        for i, j in enumerate(e):
            if j is not None:
                x[j] = max(x[j], residual_v(inst.b[i], inst.A[i, j], inst.lam, inst.epsilon))
        out.append(x)
    return out


@settings(max_examples=150, deadline=None)
@given(generated())
def test_generated_instances_are_feasible(g):
    sol = resolve(g.inst)
    assert sol.feasible
    assert sol.contains(g.witness, g.inst.epsilon)
    assert np.all(g.witness <= sol.x_max + g.inst.epsilon)


@settings(max_examples=150, deadline=None)
@given(generated())
def test_minimals_come_from_full_candidate_list(g):
    inst = g.inst
    sol = resolve(inst)
    full = full_candidates(inst)
    for x in sol.minimals:
        assert any(np.max(np.abs(x - y)) <= inst.epsilon for y in full)
    # every feasible full candidate sits above some minimal: no solution is lost
    for y in full:
        if check_feasible(inst, y):
            assert any(np.all(x <= y + inst.epsilon) for x in sol.minimals)


@settings(max_examples=100, deadline=None)
@given(generated(), st.integers(0, 2**32 - 1))
def test_simplified_system_has_same_solutions(g, seed):
    inst = g.inst
    reduced = Instance(simplify(inst), inst.b, inst.lam, inst.epsilon)
    sol = resolve(inst)
    rng = np.random.default_rng(seed)
    points = [g.witness, sol.x_max, *sol.minimals]
    for lo, hi in sol.boxes:
        points.extend(rng.uniform(lo, hi, size=(10, inst.n)))
    points.extend(rng.uniform(0, 1, size=(20, inst.n)))
    points.extend(np.clip(p + rng.normal(0, 0.05, inst.n), 0, 1) for p in list(points))
    for x in points:
        assert check_feasible(inst, x) == check_feasible(reduced, x)


@settings(max_examples=100, deadline=None)
@given(generated(), st.integers(0, 2**32 - 1))
def test_boxes_are_sound(g, seed):
    sol = resolve(g.inst)
    rng = np.random.default_rng(seed)
    for lo, hi in sol.boxes:
        for x in rng.uniform(lo, hi, size=(100, g.inst.n)):
            assert check_feasible(g.inst, x)


@settings(max_examples=150, deadline=None)
@given(generated())
def test_minimals_incomparable_and_below_max(g):
    eps = g.inst.epsilon
    sol = resolve(g.inst)
    for x in sol.minimals:
        assert np.all(x <= sol.x_max)
    for x, y in itertools.permutations(sol.minimals, 2):
        assert not (np.all(x <= y + eps) and np.any(x < y - eps))


def test_oracle_agreement_smoke():
    for g in corpus(200, base_seed=5000):
        assert same_vectors(resolve(g.inst).minimals, full_enumeration(g.inst), g.inst.epsilon), g.seed
