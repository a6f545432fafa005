from itertools import combinations

import pytest

from vacillating.core import Partition, partitions_of
from vacillating.crystal import (
    CrystalElement,
    TwoColumnSkew,
    _mask_closure,
    apply_e,
    apply_f,
    content,
    crystal_graph,
    export_dot,
    generate_Td,
    highest_weights,
    in_Bd,
    is_highest_weight,
    is_lr_element,
    lr_crystal,
    lr_crystal_bfs,
    one_column_e,
    one_column_eps,
    one_column_f,
    one_column_phi,
    one_column_validate,
    residuum,
    tensor_e,
    tensor_eps,
    tensor_f,
    tensor_phi,
)
from vacillating.errors import RejectShapeTooLong, VacillatingError
from vacillating.lr import enumerate_lr, lr_to_crystal


def columns(max_entry: int):
    return [c for k in range(max_entry + 1) for c in combinations(range(1, max_entry + 1), k)]


def P(*parts):
    return Partition(tuple(parts))


def E(left, right, offset, col):
    return CrystalElement(TwoColumnSkew(tuple(left), tuple(right), offset), tuple(col))


# ---------------------------------------------------------------- one column

def test_one_column_examples():
    assert one_column_f((1, 2), 2) == (1, 3)
    assert one_column_f((3, 4), 0) == (1, 2, 3, 4)
    assert one_column_f((1, 2), 1) is None
    assert one_column_e((1, 3), 2) == (1, 2)
    assert one_column_phi((3, 4), 0) == 1
    assert one_column_eps((1, 2, 3, 4), 0) == 1
    assert one_column_phi((1, 2), 1) == 0


def test_one_column_validate():
    assert one_column_validate([1, 4]) == (1, 4)
    with pytest.raises(VacillatingError):
        one_column_validate([2, 2])
    with pytest.raises(VacillatingError):
        one_column_validate([0, 1])


@pytest.mark.parametrize("i", range(0, 7))
def test_one_column_e_inverts_f(i):
    for col in columns(6):
        f = one_column_f(col, i)
        if f is not None:
            assert one_column_e(f, i) == col
        e = one_column_e(col, i)
        if e is not None:
            assert one_column_f(e, i) == col
        assert one_column_phi(col, i) + one_column_eps(col, i) <= 1


# ---------------------------------------------------------------- tensor products

def test_tensor_single_factor_is_one_column():
    for col in columns(5):
        for i in range(5):
            res = tensor_f([col], i)
            one = one_column_f(col, i)
            assert (res is None and one is None) or res == (0, (one,))


def test_tensor_example_all_plus():
    assert tensor_f([(1,), (1,), (1,)], 1) == (2, ((1,), (1,), (2,)))


@pytest.mark.parametrize("i", range(0, 5))
def test_tensor_phi_eps_two_factors(i):
    # phi and eps of b1 (x) b2, written out in closed form
    for b1 in columns(5):
        for b2 in columns(5):
            p1, e1 = one_column_phi(b1, i), one_column_eps(b1, i)
            p2, e2 = one_column_phi(b2, i), one_column_eps(b2, i)
            assert tensor_phi([b1, b2], i) == p1 + max(0, p2 - e1)
            assert tensor_eps([b1, b2], i) == e2 + max(0, e1 - p2)


@pytest.mark.parametrize("i", range(0, 4))
def test_tensor_e_inverts_f(i):
    cols = columns(4)
    for b1 in cols:
        for b2 in cols:
            for b3 in ((), (1,), (2, 3)):
                res = tensor_f([b1, b2, b3], i)
                if res is None:
                    continue
                k, new = res
                back = tensor_e(new, i)
                assert back == (k, (b1, b2, b3))


def test_fig2_zero_edges():
    assert tensor_f([(5, 6), (1, 2), (3, 4)], 0) == (0, ((1, 2, 5, 6), (1, 2), (3, 4)))
    assert tensor_f([(5, 6), (), (1, 2, 3, 4)], 0) == (1, ((5, 6), (1, 2), (1, 2, 3, 4)))
    assert tensor_f([(1, 2), (), (1, 2)], 0) is None
    assert tensor_f([(1,), (), (1,)], 0) == (1, ((1,), (1, 2), (1,)))


# ---------------------------------------------------------------- skew tableaux and B^d

def test_residuum():
    assert residuum(TwoColumnSkew((1, 2, 3), (), 3)) == 0
    assert residuum(TwoColumnSkew((1, 2), (1, 2), 1)) == 1
    assert residuum(TwoColumnSkew((1, 2), (1, 2), 0)) == 0
    assert residuum(TwoColumnSkew((1, 2), (1, 2), 2)) == 2


def test_residuum_one_exactly_in_case_3():
    for n in range(1, 9):
        for lam in partitions_of(n, 3):
            for m in range(0, 6):
                for t in enumerate_lr(lam, P(m) if m else P()):
                    r = residuum(lr_to_crystal(t).skew)
                    assert r <= 1
                    if t.case == 3:
                        assert r == 1


def test_highest_weights():
    assert highest_weights(P()) == [E((), (), 0, ()), E((1,), (1,), 0, (1,))]
    assert highest_weights(P(2)) == [E((1, 2), (), 2, ()), E((1, 2), (), 2, (1,))]
    with pytest.raises(RejectShapeTooLong):
        highest_weights(P(1, 1))


def test_generate_td_seeds():
    td = generate_Td(P(1), 3)
    for s in highest_weights(P(1)):
        assert s in td
    assert generate_Td(P(), 1) == set(highest_weights(P()))
    assert all(in_Bd(e, 1) for e in td)


def test_fig4_no_zero_edge_for_residuum_two():
    e = E((1, 2), (), 2, (1, 2))
    assert e in generate_Td(P(2), 3)
    assert apply_f(e, 0) is None
    assert apply_f(e, 2) == E((1, 2), (), 2, (1, 3))
    assert apply_e(e, 0) == highest_weights(P(2))[0]
    assert not in_Bd(E((1, 2), (1, 2), 2, ()), 2)


@pytest.mark.parametrize("m", range(0, 4))
@pytest.mark.parametrize("cap", range(1, 5))
def test_highest_weights_are_the_seeds(m, cap):
    mu = P(m) if m else P()
    td = generate_Td(mu, cap)
    tops = {e for e in td if is_highest_weight(e, cap)}
    assert tops == {s for s in highest_weights(mu) if s in td}


@pytest.mark.parametrize("m", range(0, 5))
@pytest.mark.parametrize("cap", range(1, 6))
def test_mask_closure_matches_crystal_graph(m, cap):
    mu = P(m) if m else P()
    for cells in (None, 6):
        ref = {e.key() for e in crystal_graph(mu, cap, cells)[0]}
        masks = _mask_closure(m, cap, cells if cells is not None else 3 * cap)
        to_col = lambda x: tuple(v + 1 for v in range(x.bit_length()) if x >> v & 1)  # noqa: E731
        got = {(to_col(l), to_col(r), m, to_col(c)) for l, r, c in masks}
        assert got == ref


def test_crystal_graph_edges_are_f_moves():
    order, edges = crystal_graph(P(1), 3)
    for s, d, i in edges:
        assert apply_f(order[s], i) == order[d]
        assert apply_e(order[d], i) == order[s]


def test_content():
    assert content(E((1, 2), (1,), 1, (1, 2, 3))) == P(3, 2, 1)


# ---------------------------------------------------------------- LR elements

def test_lr_crystal_examples():
    assert len(lr_crystal(P(8, 5, 3), P(3))) == 2
    assert lr_crystal(P(2), P()) == {E((), (), 0, (1, 2))}
    assert lr_crystal(P(1), P()) == set()
    with pytest.raises(RejectShapeTooLong):
        lr_crystal(P(1, 1, 1, 1), P())


@pytest.mark.parametrize("n", range(0, 9))
def test_lr_crystal_matches_filtered_closure(n):
    for lam in partitions_of(n, 3):
        for m in range(0, n + 1):
            mu = P(m) if m else P()
            fast = lr_crystal(lam, mu)
            assert fast == lr_crystal_bfs(lam, mu)
            assert all(is_lr_element(e, lam) for e in fast)


def test_export_dot():
    dot = export_dot(P(1), 2, P(1))
    assert dot.startswith("digraph")
    assert "->" in dot
