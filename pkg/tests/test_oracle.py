import pytest

from projforce.errors import TooLarge
from projforce.forcing import Status, decide
from projforce.gf import field_new
from projforce.oracle import (
    ab_characterization,
    ab_multiset,
    abc_characterization,
    abc_multiset,
    decide_bruteforce,
    exhaustive_map_check,
)

F2 = field_new(2)


def test_bruteforce_examples():
    v = decide_bruteforce(F2, 3, (2, 2, 2, 2, 4, 4, 4))
    assert v.status is Status.NOT_FORCING and v.witness.verify()
    assert decide_bruteforce(F2, 3, (2, 2, 2, 3, 5, 5, 5)).status is Status.FORCING
    assert decide_bruteforce(F2, 2, (1, 1, 2)).status is Status.FORCING
    assert decide_bruteforce(F2, 3, (1,) * 7).status is Status.FORCING_VACUOUS


def test_bruteforce_cap():
    with pytest.raises(TooLarge):
        decide_bruteforce(F2, 4, (0,) * 15)


def test_bruteforce_other_fields():
    f3 = field_new(3)
    for s in [(0, 0, 0, 0), (1, 2, 3, 3), (3, 3, 3, 6), (0, 3, 3, 3)]:
        assert decide_bruteforce(f3, 2, s).status is decide(f3, 2, s, use_split_difference=False).status


def test_ab_examples():
    assert ab_characterization(3, 2, 4) == (True, True)
    assert ab_characterization(3, 2, 8) == (True, False)
    assert ab_characterization(3, 1, 2) == (False, None)


def test_abc_examples():
    assert abc_characterization(3, 2, 2, 4)[0]
    assert abc_characterization(3, 4, 4, 4) == (True, True)
    r, forcing = abc_characterization(3, 2, 6, 12)
    assert forcing in (None, False)
    assert abc_characterization(2, 1, 1, 2) == (True, None)


def test_multiset_builders():
    assert ab_multiset(3, 2, 4) == (2, 2, 2, 2, 2, 2, 4)
    assert abc_multiset(3, 2, 2, 4) == (2, 2, 2, 2, 2, 2, 4)


@pytest.mark.parametrize("k", [2, 3])
def test_ab_agrees_small(k):
    for a in range(2**k + 1):
        for b in range(2**k + 1):
            r, forcing = ab_characterization(k, a, b)
            v = decide(F2, k, ab_multiset(k, a, b), use_split_difference=False)
            assert (v.status is not Status.FORCING_VACUOUS) == r
            if r:
                assert v.is_forcing == forcing


def test_map_check_examples():
    assert exhaustive_map_check(F2, 2, (0, 0, 0)).status is Status.FORCING
    assert exhaustive_map_check(F2, 2, (1, 1, 2)).status is Status.FORCING
    assert exhaustive_map_check(F2, 2, (2, 2, 4)).is_forcing == decide_bruteforce(F2, 2, (2, 2, 4)).is_forcing
    v = exhaustive_map_check(F2, 2, (-1, -1, -2))
    assert v.status is Status.NOT_FORCING and v.witness.verify()


def test_map_check_scope():
    with pytest.raises(TooLarge):
        exhaustive_map_check(F2, 3, (0,) * 7)
    with pytest.raises(TooLarge):
        exhaustive_map_check(F2, 2, (0, 0, 0), max_cols=9)
