import pytest

from qpartition.moves import (
    IMMOBILE,
    MOVEABLE,
    Pair,
    Singleton,
    backward_move,
    compose,
    decompose,
    enumerate_bases,
    forward_move,
    is_base,
    make_decomposition,
    parse_structure,
    tag,
)
from qpartition.partitions import check_at_most_twice, iter_partitions


def test_tag_examples():
    assert str(tag((1, 4, 4, 5, 6, 6, 9, 10, 11, 12, 12, 14))) == (
        "1,[4,4],[5,6],6,[9,10],[11,12],12,14"
    )
    assert str(tag((1, 2))) == "[1,2]"
    assert str(tag((1, 3, 5))) == "1,3,5"


def test_tag_rejects_triples():
    with pytest.raises(ValueError):
        tag((2, 2, 2))


def test_parse_structure_round_trip():
    text = "[1,2],[3,4],4,[6,6],[7,8],8,10,12"
    tp = parse_structure(text)
    assert str(tp) == text
    assert parse_structure("1,2,2,3") == tag((1, 2, 2, 3))
    with pytest.raises(ValueError):
        parse_structure("[1,3]")  # not a pair
    with pytest.raises(ValueError):
        parse_structure("[2,3],1")  # not the greedy tagging


def test_backward_trace_of_the_worked_example():
    tp = tag((1, 4, 4, 5, 6, 6, 9, 10, 11, 12, 12, 14))
    steps = [
        (0, "[1,2],3,[5,6],6,[9,10],[11,12],12,14"),
        (1, "[1,2],[3,4],4,6,[9,10],[11,12],12,14"),
        (2, "[1,2],[3,4],4,6,[8,8],[11,12],12,14"),
        (2, "[1,2],[3,4],4,[6,6],7,[11,12],12,14"),
        (3, "[1,2],[3,4],4,[6,6],7,[10,10],12,14"),
        (3, "[1,2],[3,4],4,[6,6],[7,8],9,12,14"),
    ]
    for pair_index, expected in steps:
        tp = backward_move(tp, pair_index)
        assert str(tp) == expected
    # every pair is now stuck
    assert all(backward_move(tp, i) is None for i in range(4))


def test_backward_move_weight_drop_and_trace_events():
    trace = []
    tp = tag((1, 4, 4))
    out = backward_move(tp, 0, trace)
    assert out.weight == tp.weight - 3
    assert trace == [{"op": "backward", "pair": [4, 4], "result": [2, 3], "regroup": True}]


def test_backward_blocked_cases():
    assert backward_move(tag((1, 2)), 0) is None  # parts must stay >= 1
    assert backward_move(tag((1, 1, 2, 3)), 1) is None  # multiplicity 3
    assert backward_move(tag((1, 2, 3, 3)), 1) is None  # crossing the pair below
    with pytest.raises(ValueError):
        backward_move(tag((1, 2)), 1)


# backward case diagrams, anchored at k = 10
BACKWARD_CASES = [
    # (name, parts, pair_index, expected structure)
    ("Ia", (7, 10, 11), 1, "7,[9,9]"),
    ("Ib", (8, 10, 11), 1, "[8,9],9"),
    ("IIa", (6, 10, 10), 1, "6,[8,9]"),
    ("IIb", (8, 10, 10), 1, "[8,8],9"),
    ("IIc", (7, 10, 10), 1, "[7,8],9"),
]


@pytest.mark.parametrize("name,parts,pair_index,expected", BACKWARD_CASES)
def test_backward_case_diagrams(name, parts, pair_index, expected):
    tp = tag(parts)
    # pair_index counts pairs only; the leading singleton is not one
    out = backward_move(tp, 0)
    assert str(out) == expected


def test_case_three_chain():
    # [7,8], 8, [10,11], [12,13]: the locked-streak scenario, local window
    tp = tag((7, 8, 8, 10, 11, 12, 13))
    assert str(tp) == "[7,8],8,[10,11],[12,13]"
    tp = backward_move(tp, 1)
    assert str(tp) == "[7,8],[8,9],9,[12,13]"
    assert backward_move(tp, 1) is None  # 7 would appear thrice
    tp = backward_move(tp, 2)
    assert str(tp) == "[7,8],[8,9],9,[11,11]"
    # one more backward move would make 9 appear thrice
    assert backward_move(tp, 2) is None


def test_case_three_anchored_decomposition():
    # same scenario anchored at the bottom, so the streak really is stuck:
    # [1,2], 2, [4,5], [6,7] drives to the block [2,3],3,[5,5] with an
    # immobile singleton wedged inside
    d = decompose((1, 2, 2, 4, 5, 6, 7))
    assert str(d.base) == "[1,2],[2,3],3,[5,5]"
    assert d.mu == (0, 3, 3)
    assert d.n11 == 1 and d.n12 == 0


# small-pair interleavings: one backward move on the smaller pair allows one
# on the larger pair (cases i-vi, anchored at k = 10)
CHAIN_CASES = [
    ("i", (10, 11, 11, 12), "[9,9],[11,12]", "[9,9],[10,10]"),
    ("ii", (10, 11, 12, 12), "[9,9],[12,12]", "[9,9],[10,11]"),
    ("iii", (10, 11, 12, 13), "[9,9],[12,13]", "[9,9],[11,11]"),
    ("iv", (10, 10, 11, 11), "[8,9],[11,11]", "[8,9],[9,10]"),
    ("v", (10, 10, 11, 12), "[8,9],[11,12]", "[8,9],[10,10]"),
    ("vi", (10, 10, 12, 12), "[8,9],[12,12]", "[8,9],[10,11]"),
]


@pytest.mark.parametrize("name,parts,mid,end", CHAIN_CASES)
def test_backward_chain_cases(name, parts, mid, end):
    tp = tag(parts)
    tp = backward_move(tp, 0)
    assert str(tp) == mid
    tp = backward_move(tp, 1)
    assert str(tp) == end


# forward case diagrams
def test_forward_case_diagrams():
    # I'a: [k-1,k-1] -> [k,k+1]
    assert str(forward_move(tag((7, 9, 9)), 0)) == "7,[10,11]"
    # II'a: [k-2,k-1] -> [k,k]
    assert str(forward_move(tag((6, 8, 9)), 0)) == "6,[10,10]"
    # I'b: [k-2,k-1],k-1 regroups to k-2,[k-1,k-1] then moves to [k,k+1]
    assert str(forward_move(tag((8, 9, 9)), 0)) == "8,[10,11]"
    # II'b: [k-2,k-2],k-1 regroups then moves to [k,k]
    assert str(forward_move(tag((8, 8, 9)), 0)) == "8,[10,10]"
    # II'c: [k-3,k-2],k-1 regroups then moves to [k,k]
    assert str(forward_move(tag((7, 8, 9)), 0)) == "7,[10,10]"


def test_forward_case_three_chain():
    # inverse of the locked-streak scenario
    tp = tag((7, 8, 8, 9, 9, 11, 11))
    assert str(tp) == "[7,8],[8,9],9,[11,11]"
    tp = forward_move(tp, 2)
    assert str(tp) == "[7,8],[8,9],9,[12,13]"
    tp = forward_move(tp, 1)
    assert str(tp) == "[7,8],8,[10,11],[12,13]"


def test_forward_inverts_backward_everywhere():
    for n in range(19):
        for parts in iter_partitions(n):
            if not check_at_most_twice(parts):
                continue
            tp = tag(parts)
            for i in range(len(tp.pairs())):
                moved = backward_move(tp, i)
                if moved is not None:
                    assert forward_move(moved, i) == tp, (parts, i)


def test_forward_move_rejects_multiplicity_violation():
    # [5,6] moving onto an existing pair of 7s
    with pytest.raises(ValueError):
        forward_move(tag((5, 6, 7, 7)), 0)


def test_decompose_worked_example():
    d = decompose((1, 4, 4, 5, 6, 6, 9, 10, 11, 12, 12, 14))
    assert str(d.base) == "[1,2],[3,4],4,[6,6],[7,8],8,10,12"
    assert d.mu == (3, 3, 6, 6)
    assert d.theta == (0, 1, 2, 2)
    assert (d.n2, d.n11, d.n12) == (4, 1, 3)
    assert (d.total_weight, d.base_weight, d.mu_weight, d.theta_weight) == (94, 71, 18, 5)


def test_decompose_second_worked_example():
    d = decompose((2, 4, 4, 5, 6, 6, 8, 8, 9, 12, 12, 14, 14, 16, 20))
    assert str(d.base) == "[2,2],[3,4],4,[6,6],[7,8],8,[10,10],11,13,15"
    assert d.mu == (3, 3, 3, 6, 6)
    assert d.theta == (0, 0, 2, 3, 5)
    assert (d.total_weight, d.base_weight, d.mu_weight, d.theta_weight) == (
        140, 109, 21, 10,
    )


def test_compose_worked_example():
    base = parse_structure("[2,2],[3,4],4,[6,6],[7,8],8,[10,10],11,13,15")
    d = make_decomposition(base, (3, 3, 3, 6, 6), (0, 0, 2, 3, 5))
    assert compose(d) == (2, 4, 4, 5, 6, 6, 8, 8, 9, 12, 12, 14, 14, 16, 20)


def test_compose_of_a_base_is_its_flattening():
    base = parse_structure("[1,2],[3,4],4,[6,6],[7,8],8,10,12")
    d = make_decomposition(base, (0, 0, 0, 0), (0, 0, 0, 0))
    assert compose(d) == tuple(sorted(base.parts))


def test_decompose_fixed_point_of_a_base():
    # the block: no pair moves, and its wedged singleton is a forced theta zero
    d = decompose((1, 2, 2, 4, 4))
    assert d.mu == (0, 0) and d.theta == (0,)
    assert d.n11 == 1 and d.n12 == 0


def test_round_trip_small_sweep():
    for n in range(17):
        for parts in iter_partitions(n):
            if not check_at_most_twice(parts):
                continue
            d = decompose(parts)
            assert d.total_weight == n
            assert compose(d) == parts


def test_singleton_classification_roles():
    d = decompose((1, 4, 4, 5, 6, 6, 9, 10, 11, 12, 12, 14))
    roles = [s.role for s in d.base.singletons()]
    assert roles == [IMMOBILE, MOVEABLE, MOVEABLE, MOVEABLE]


def test_observed_immobile_singletons_sit_in_blocks():
    # every immobile singleton observed in the sweep is wedged between a
    # consecutive pair ending at its value and a repeating pair two above
    for n in range(23):
        for parts in iter_partitions(n):
            if not check_at_most_twice(parts):
                continue
            base = decompose(parts).base
            items = base.items
            for i, it in enumerate(items):
                if isinstance(it, Singleton) and it.role == IMMOBILE:
                    before, after = items[i - 1], items[i + 1]
                    assert isinstance(before, Pair) and not before.repeating
                    assert before.hi == it.value
                    assert isinstance(after, Pair) and after.repeating
                    assert after.lo == it.value + 2


def test_make_decomposition_validation():
    base = parse_structure("[1,2],[3,4],4,[6,6],[7,8],8,10,12")
    with pytest.raises(ValueError):
        make_decomposition(base, (3, 3, 6), (0, 1, 2, 2))  # mu too short
    with pytest.raises(ValueError):
        make_decomposition(base, (3, 3, 6, 5), (0, 1, 2, 2))  # not a multiple of 3
    with pytest.raises(ValueError):
        make_decomposition(base, (3, 6, 3, 6), (0, 1, 2, 2))  # not sorted
    with pytest.raises(ValueError):
        make_decomposition(base, (3, 3, 6, 6), (1, 1, 2, 2))  # immobile zero missing
    with pytest.raises(ValueError):
        make_decomposition((1, 4, 4), (3,), (0,))  # not a base
    with pytest.raises(ValueError):
        make_decomposition((2, 13), (), (0, 5))  # moveables off the staircase


def test_is_base():
    assert is_base((1, 2, 3, 3))
    assert is_base(())
    assert not is_base((1, 4, 4))


def test_enumerate_bases_examples():
    blocks = enumerate_bases(0, 0, 1, 40)
    assert [str(r.structure) for r in blocks] == ["[1,2],2,[4,4]"]
    assert blocks[0].weight == 13
    assert blocks[0].largest_pair_index == 4 and blocks[0].parity == 0

    singles = enumerate_bases(1, 0, 0, 40)
    assert [(str(r.structure), r.weight, r.largest_pair_index) for r in singles] == [
        ("[1,1]", 2, 1),
        ("[2,2]", 4, 2),
    ]

    assert [r.largest_pair_index for r in enumerate_bases(0, 0, 0, 10)] == [0]


def test_enumerate_bases_reproduces_the_two_pair_table():
    # the ten possible configurations of the two smallest stowed pairs
    found = set()
    for counts in ((2, 0, 0), (1, 1, 0), (0, 2, 0)):
        for rec in enumerate_bases(*counts, 40):
            found.add(str(rec.structure))
    found.update(str(r.structure) for r in enumerate_bases(0, 0, 1, 40))
    assert found == {
        "[1,1],[2,2]", "[1,2],2,[4,4]", "[2,2],[3,3]",
        "[1,1],[2,3]", "[1,2],[2,3]", "[2,2],[3,4]",
        "[1,1],[3,3]", "[1,2],[3,3]", "[2,2],[4,4]",
        "[1,2],[3,4]",
    }


def test_enumerate_bases_weight_cap():
    assert enumerate_bases(1, 0, 0, 3) == enumerate_bases(1, 0, 0, 2)
    assert [r.weight for r in enumerate_bases(1, 0, 0, 2)] == [2]


def test_all_enumerated_bases_decompose_trivially():
    for counts in ((2, 1, 0), (1, 1, 1), (0, 0, 2)):
        for rec in enumerate_bases(*counts, 60):
            parts = tuple(sorted(rec.structure.parts))
            assert is_base(parts), parts
