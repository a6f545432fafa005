import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import LR_853, RUNNING_LR, SMALL_TABLE
from vacillating.core import Partition, partitions_of
from vacillating.crystal import CrystalElement, TwoColumnSkew, lr_crystal
from vacillating.errors import (
    RejectCaseConstraint,
    RejectGapRule,
    RejectNotLR,
    RejectSemistandard,
    VacillatingError,
)
from vacillating.lr import (
    OrthLRTableau,
    classify_case,
    crystal_to_lr,
    enumerate_lr,
    is_valid_lr,
    lr_from_json,
    lr_to_crystal,
    lr_to_json,
    render_lr,
    validate_lr,
)


def P(*parts):
    return Partition(tuple(parts))


def mu_of(m):
    return P(m) if m else P()


def all_lr(max_n, max_m):
    return [t for n in range(max_n + 1) for lam in partitions_of(n, 3) for m in range(max_m + 1) for t in enumerate_lr(lam, mu_of(m))]


ALL_SMALL = all_lr(9, 9)


def test_validate_examples():
    assert validate_lr(OrthLRTableau(*RUNNING_LR)) == (P(4, 3, 2), P(2))
    assert classify_case(OrthLRTableau(*RUNNING_LR)) == 2
    case3 = OrthLRTableau((1, 5), (1, 4), (1, 2, 3), 2)
    assert validate_lr(case3) == (P(5, 1, 1), P(2))
    assert classify_case(case3) == 3
    empty = OrthLRTableau((), (), (), 0)
    assert validate_lr(empty) == (P(), P())
    assert classify_case(empty) == 1


def test_classify_examples():
    assert classify_case(OrthLRTableau((), (), (1, 2), 0)) == 1
    assert classify_case(OrthLRTableau((1, 2, 3), (), (), 3)) == 1
    cases = sorted(t.case for t in enumerate_lr(P(8, 5, 3), P(3)))
    assert cases == [2, 3]


def test_rejections():
    with pytest.raises(RejectSemistandard):
        validate_lr(OrthLRTableau((2, 1), (), (), 2))
    with pytest.raises(RejectSemistandard):
        validate_lr(OrthLRTableau((1, 3), (), (), 2))
    with pytest.raises(RejectGapRule):
        validate_lr(OrthLRTableau((), (1, 2), (1, 3), 0))
    with pytest.raises(VacillatingError):
        validate_lr(OrthLRTableau((1,), (), (), 0))  # lines of odd parity
    with pytest.raises(RejectCaseConstraint):
        classify_case(OrthLRTableau((), (1, 2, 3), (1,), 0))
    assert not is_valid_lr(OrthLRTableau((1, 3), (), (), 2))


def test_case_4_needs_b_at_most_c():
    # parities and gap rules alone would accept this one
    t = OrthLRTableau((1,), (1, 2, 3), (1,), 0)
    assert not is_valid_lr(t)
    assert t not in enumerate_lr(P(3, 1, 1), P())
    assert len(enumerate_lr(P(3, 1, 1), P())) == len(lr_crystal(P(3, 1, 1), P())) == 1


def test_enumerate_examples():
    assert [t.case for t in enumerate_lr(P(8, 5, 3), P(1))] == [3]
    assert [t.case for t in enumerate_lr(P(8, 5, 3), P(5))] == [2]
    assert len(enumerate_lr(P(2, 1), P(1))) == 1
    assert len(enumerate_lr(P(2, 1), P(2))) == 1


@pytest.mark.parametrize("m", sorted(LR_853))
def test_enumerate_853(m):
    got = [(t.case, t.left, t.middle, t.right) for t in enumerate_lr(P(8, 5, 3), mu_of(m))]
    assert got == LR_853[m]


def test_small_table_lr():
    for lam, mu, cols, *_ in SMALL_TABLE:
        assert OrthLRTableau(*cols) in enumerate_lr(Partition(lam), Partition(mu))


def test_every_enumerated_tableau_is_valid():
    for t in ALL_SMALL:
        lam, mu = validate_lr(t)
        assert mu.part(0) == t.mu1
        assert classify_case(t) == t.case


def test_no_gap_in_rightmost_column():
    for t in ALL_SMALL:
        assert t.right == tuple(range(1, t.c + 1))


def test_case_3_tail():
    seen = 0
    for t in ALL_SMALL:
        if t.case == 3:
            seen += 1
            assert t.a >= 2
            assert t.tail == (t.b - t.a + 1,) + tuple(range(t.c + 2, t.c + t.mu1 + 1))
            assert max(t.middle) == t.c + 1
    assert seen > 0


def test_case_2_tail_starts_at_most_c():
    for t in ALL_SMALL:
        if t.case == 2:
            assert t.tail[0] <= t.c


def test_middle_gaps_only_in_case_3():
    for t in ALL_SMALL:
        gaps = [j for j in t.middle if j > 1 and j - 1 not in t.middle]
        if t.case == 3:
            assert gaps in ([], [max(t.middle)])
        else:
            assert gaps == []


def test_left_gaps_point_to_a_column_maximum():
    for t in ALL_SMALL:
        if t.case in (1, 2):
            body = t.left[: len(t.left) - t.mu1]
            assert body == tuple(range(1, len(body) + 1))
            for j in t.left:
                if j > 1 and j - 1 not in t.left:
                    assert j in t.tail
                    assert j - 1 in (max(t.middle, default=0), max(t.right, default=0))


@pytest.mark.parametrize("n", range(0, 9))
def test_crystal_and_explicit_agree(n):
    for lam in partitions_of(n, 3):
        for m in range(0, 9):
            explicit = {lr_to_crystal(t).key() for t in enumerate_lr(lam, mu_of(m))}
            assert explicit == {e.key() for e in lr_crystal(lam, mu_of(m))}


def test_crystal_encoding():
    e = lr_to_crystal(OrthLRTableau(*RUNNING_LR))
    assert e == CrystalElement(TwoColumnSkew((1, 2, 3, 4), (1, 2), 2), (1, 2, 3))
    assert lr_to_crystal(OrthLRTableau((), (), (), 0)) == CrystalElement(TwoColumnSkew((), (), 0), ())
    for t in ALL_SMALL:
        assert crystal_to_lr(lr_to_crystal(t)) == t
    with pytest.raises(RejectNotLR):
        crystal_to_lr(CrystalElement(TwoColumnSkew((1,), (), 0), ()))


def test_json_round_trip():
    for t in ALL_SMALL:
        data = lr_to_json(t)
        assert data["case"] == t.case and (data["a"], data["b"], data["c"], data["mu1"]) == (t.a, t.b, t.c, t.mu1)
        assert lr_from_json(json.loads(json.dumps(data))) == t
    short = {"left": [1, 2, 3, 4], "middle": [1, 2], "right": [1, 2, 3], "mu1": 2}
    assert lr_from_json(short) == OrthLRTableau(*RUNNING_LR)


def test_render_marks_the_tail():
    text = render_lr(OrthLRTableau(*RUNNING_LR))
    assert text.count("*") == 2
    assert "4" in text


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ALL_SMALL))
def test_lines_cover_every_cell_once(t):
    lines = t.lines()
    cells = sorted(cell for line in lines for cell in line)
    assert cells == sorted((k, i) for k, col in enumerate(t.columns) for i in range(len(col)))
    lam, _ = validate_lr(t)
    assert [len(line) for line in lines if line] == list(lam.parts)
