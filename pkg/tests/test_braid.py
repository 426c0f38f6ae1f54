import io

import pytest

from adoknot.braid import (
    BraidError,
    BraidWord,
    NotAKnotError,
    closure_component_count,
    conjugate,
    markov_moves,
    parse_braid,
    random_knot_braids,
    read_knot_table,
    require_knot,
    stabilize,
    writhe,
)


def test_parse_examples():
    assert parse_braid("1 1 1", 2) == BraidWord(2, (1, 1, 1))
    assert parse_braid("1 -2 1 -2", 3).letters == (1, -2, 1, -2)
    assert parse_braid("", 1) == BraidWord(1, ())


@pytest.mark.parametrize("text,n", [("3", 2), ("0", 3), ("1 x", 3), ("-3", 3)])
def test_parse_rejects(text, n):
    with pytest.raises(BraidError):
        parse_braid(text, n)


def test_writhe():
    assert writhe(BraidWord(2, (1, 1, 1))) == 3
    assert writhe(BraidWord(3, (1, -2, 1, -2))) == 0
    assert writhe(BraidWord(4)) == 0


def test_component_count():
    assert closure_component_count(BraidWord(2, (1,))) == 1
    assert closure_component_count(BraidWord(2)) == 2
    assert closure_component_count(BraidWord(2, (1, 1, 1))) == 1
    assert closure_component_count(BraidWord(3, (1, 2))) == 1
    assert closure_component_count(BraidWord(3, (1,))) == 2
    with pytest.raises(NotAKnotError, match="closure has 2 components"):
        require_knot(BraidWord(3, (1,)))


def test_markov_examples():
    assert stabilize(BraidWord(2, (1, 1, 1))) == BraidWord(3, (1, 1, 1, 2))
    assert stabilize(BraidWord(1)) == BraidWord(2, (1,))
    b = BraidWord(2, (1, 1, 1))
    assert conjugate(b, BraidWord(2, (1,))).letters == (1, 1, 1, 1, -1)


def test_markov_moves_are_deterministic():
    b = BraidWord(3, (1, -2, 1, -2))
    assert markov_moves(b, seed=5) == markov_moves(b, seed=5)
    moves = markov_moves(b, seed=5)
    assert moves[-2] == stabilize(b, 1) and moves[-1] == stabilize(b, -1)


@pytest.mark.parametrize("b", random_knot_braids(25, seed=11, max_strands=4))
def test_moves_preserve_components_and_track_writhe(b):
    moves = markov_moves(b, seed=3)
    for moved in moves:
        assert closure_component_count(moved) == closure_component_count(b)
    for moved in moves[:-2]:
        assert writhe(moved) == writhe(b)
    assert writhe(moves[-2]) == writhe(b) + 1
    assert writhe(moves[-1]) == writhe(b) - 1


def test_random_knot_braids_are_knots():
    braids = random_knot_braids(40, seed=1)
    assert len(set(braids)) == 40
    assert all(closure_component_count(b) == 1 for b in braids)
    assert braids == random_knot_braids(40, seed=1)


def test_knot_table_reader():
    text = 'name,strands,braid_word,notes\n3_1,2,"1 1 1",trefoil\n4_1,3,"1 -2 1 -2",\n'
    rows = list(read_knot_table(io.StringIO(text)))
    assert rows == [("3_1", BraidWord(2, (1, 1, 1))), ("4_1", BraidWord(3, (1, -2, 1, -2)))]
    with pytest.raises(BraidError):
        list(read_knot_table(io.StringIO("name,braid\nx,1\n")))
