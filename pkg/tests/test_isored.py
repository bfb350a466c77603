import json
import random

import pytest

from isoreduce.exactnum import Polynomial, RatFun, ratfun_from_str
from isoreduce.isored import SingularMatrixError, invert_over_field, reduce, reduce_sequence
from isoreduce.netmat import RfMatrix

X = RatFun.X


def P(*ascending):
    return Polynomial(ascending)


def _identity(n):
    return [[RatFun.ONE if i == j else RatFun.ZERO for j in range(n)] for i in range(n)]


def _matmul(a, b):
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), RatFun.ZERO) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def path3():
    return RfMatrix(("1", "2", "3"), [[0, 1, 0], [1, 0, 1], [0, 1, 0]])


def random_symmetric(rng, n, values=(0, 1)):
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            grid[i][j] = grid[j][i] = rng.choice(values)
    return RfMatrix(tuple(str(i) for i in range(n)), grid)


# -- inversion -----------------------------------------------------------------


def test_invert_1x1():
    inv = invert_over_field([[-X]])
    assert inv == [[RatFun(-1, Polynomial.X)]]


def test_invert_diagonal():
    inv = invert_over_field([[-X, RatFun.ZERO], [RatFun.ZERO, -X]])
    minus = RatFun(-1, Polynomial.X)
    assert inv == [[minus, RatFun.ZERO], [RatFun.ZERO, minus]]


def test_invert_2x2_adjugate_oracle():
    b = [[-X, RatFun.ONE], [RatFun.ONE, -X]]
    det = b[0][0] * b[1][1] - b[0][1] * b[1][0]
    oracle = [
        [b[1][1] / det, -b[0][1] / det],
        [-b[1][0] / det, b[0][0] / det],
    ]
    inv = invert_over_field(b)
    assert inv == oracle
    den = P(-1, 0, 1)
    assert inv[0][0] == RatFun(P(0, -1), den)
    assert inv[0][1] == RatFun(P(-1), den)
    assert _matmul(b, inv) == _identity(2)


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        invert_over_field([[RatFun.ZERO]])


def test_invert_times_original_is_identity():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 4)
        block = [
            [RatFun(rng.randint(-2, 2)) - (X if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        inv = invert_over_field(block)
        assert _matmul(block, inv) == _identity(n)


# -- single reductions -----------------------------------------------------------


def test_reduce_over_all_labels_is_identity_operation():
    m = path3()
    out = reduce(m, m.labels)
    assert out.reduced == m
    assert out.removed == ()
    assert out.shifted_block == ()


def test_reduce_edge_to_self_loop():
    m = RfMatrix(("1", "2"), [[0, 1], [1, 0]])
    out = reduce(m, ("1",))
    assert out.reduced.labels == ("1",)
    assert out.reduced.entries[0][0] == RatFun(1, Polynomial.X)
    assert out.removed == ("2",)


def test_reduce_path_endpoints_hand_derivation():
    # keep the endpoints of 1-2-3: the middle contributes 1/x on every entry
    out = reduce(path3(), ("1", "3"))
    w = RatFun(1, Polynomial.X)
    assert out.reduced.labels == ("1", "3")
    assert list(map(list, out.reduced.entries)) == [[w, w], [w, w]]
    assert out.shifted_block == ((-X,),)


def test_reduce_keeps_original_label_order():
    m = RfMatrix(("a", "b", "c", "d"), [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]])
    out = reduce(m, ("d", "a", "c"))  # scrambled request, ordered result
    assert out.reduced.labels == ("a", "c", "d")
    assert out.removed == ("b",)


def test_reduce_errors():
    m = path3()
    with pytest.raises(ValueError):
        reduce(m, ())
    with pytest.raises(ValueError):
        reduce(m, ("1", "nope"))


def test_reduce_singular_shifted_block():
    # a diagonal entry equal to x makes the shifted block vanish identically
    m = RfMatrix(("a", "b"), [[X, RatFun.ONE], [RatFun.ONE, X]])
    with pytest.raises(SingularMatrixError):
        reduce(m, ("b",))


# -- sequences ---------------------------------------------------------------------


def test_reduce_sequence_empty():
    assert reduce_sequence(path3(), []) == []


def test_reduce_sequence_path_two_steps():
    steps = reduce_sequence(path3(), [("1", "3"), ("1",)])
    assert len(steps) == 2
    w = RatFun(1, Polynomial.X)
    expected = w + w * (RatFun(Polynomial.X, P(-1, 0, 1))) * w
    final = steps[1].reduced
    assert final.labels == ("1",)
    assert final.entries[0][0] == expected
    # same thing in one shot: sequential reduction is unique
    assert final == reduce(path3(), ("1",)).reduced


def test_sequence_validates_against_previous_stage():
    with pytest.raises(ValueError):
        reduce_sequence(path3(), [("1", "3"), ("2",)])


# -- structural properties ----------------------------------------------------------


def test_symmetry_preserved():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(2, 6)
        m = random_symmetric(rng, n, values=(-2, -1, 0, 1, 2))
        size = rng.randint(1, n - 1)
        keep = tuple(str(i) for i in sorted(rng.sample(range(n), size)))
        out = reduce(m, keep)
        assert out.reduced.is_symmetric()


def test_composition_matches_direct_reduction():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(3, 6)
        m = random_symmetric(rng, n, values=(-3, -1, 0, 1, 2, 3))
        s1_size = rng.randint(2, n - 1)
        s1 = sorted(rng.sample(range(n), s1_size))
        s2 = sorted(rng.sample(s1, rng.randint(1, s1_size - 1)))
        keep1 = tuple(str(i) for i in s1)
        keep2 = tuple(str(i) for i in s2)
        two_step = reduce(reduce(m, keep1).reduced, keep2).reduced
        direct = reduce(m, keep2).reduced
        assert two_step == direct


def test_new_edges_only_between_former_neighbors():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(3, 7)
        m = random_symmetric(rng, n)
        victim = str(rng.randrange(n))
        keep = tuple(lab for lab in m.labels if lab != victim)
        out = reduce(m, keep).reduced
        neighbors = {
            lab
            for lab in keep
            if not m.entry(lab, victim).is_zero or not m.entry(victim, lab).is_zero
        }
        for i, a in enumerate(keep):
            for j, b in enumerate(keep):
                if out.entries[i][j] != m.entry(a, b):
                    assert a in neighbors and b in neighbors


def test_dgg_core_membership(dgg_matrix, dgg_hierarchy):
    # the seven degree-driven keep sets land on the nine-node core
    keeps = []
    labels = set(dgg_matrix.labels)
    for level in reversed(dgg_hierarchy.levels):
        labels -= set(level)
        keeps.append(tuple(sorted(labels)))
    steps = reduce_sequence(dgg_matrix, keeps)
    assert steps[-1].reduced.labels == (
        "W_1", "W_2", "W_3", "W_4", "E_3", "E_5", "E_6", "E_7", "E_8",
    )


# -- serialization -------------------------------------------------------------------


def test_reduction_result_json_round_trips():
    out = reduce(path3(), ("1", "3"))
    doc = json.loads(json.dumps(out.to_json_dict()))
    assert doc["labels"] == ["1", "3"]
    assert doc["removed"] == ["2"]
    grid = [[ratfun_from_str(cell) for cell in row] for row in doc["entries"]]
    assert grid == [list(r) for r in out.reduced.entries]
