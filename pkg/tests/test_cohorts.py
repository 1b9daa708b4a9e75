import pytest

from app.cohorts import (
    AtomicForm,
    MalformedKeyError,
    Move,
    MoveError,
    apply_move,
    atom_singleton_counts,
    canonical_atom,
    closure_classes,
    cohort_census,
    cohort_count,
    cohort_count_series,
    cohort_key,
    is_main_cohort,
    is_singleton_cohort,
    largest_cohort,
    main_cohort_size,
    motzkin_number,
    neighbors,
    nonplane_code,
    parse_key,
    representative,
    singleton_counts,
)
from app.cohorts.counting import atomic_form_series
from app.cohorts.rewrite import BACKWARD, ROTATE, SWAP
from app.series import TruncatedSeries, mset_ge2, mset_ge3
from app.structures import catalan_number, enumerate_all, nest

CENSUS_COUNTS = [1, 1, 2, 4, 8, 16, 32, 67, 142, 307]
LARGE_CENSUS_COUNTS = {11: 669, 12: 1478, 13: 3290}


def test_small_keys():
    assert str(cohort_key("")) == "(A 1)"
    assert str(cohort_key("(())")) == "(A 3)"
    assert cohort_key("(())") == cohort_key("()()")
    assert str(cohort_key("()()()")) == "(A 0 (B (A 1) (A 1) (A 1)))"
    assert cohort_key("()()()").size == 3


def test_rotations_and_swaps_stay_in_the_cohort():
    assert cohort_key("()(())") == cohort_key("(()())") == cohort_key("(())()")
    assert cohort_key("(()(()))") == cohort_key("((())())")


def test_main_cohort():
    assert is_main_cohort(nest(5))
    assert is_main_cohort("()(()())")
    assert not is_main_cohort("()()()")


def test_canonical_atom():
    assert canonical_atom("(()())") == cohort_key("()()").form
    assert isinstance(canonical_atom("(()())"), AtomicForm)
    with pytest.raises(ValueError, match="not an atom"):
        canonical_atom("()()")


def test_keys_parse_back_and_have_representatives():
    for n in range(0, 8):
        for system in enumerate_all(n):
            key = cohort_key(system)
            assert parse_key(str(key)) == key
            assert cohort_key(representative(key)) == key
            assert representative(key).size == n


@pytest.mark.parametrize(
    "text",
    [
        "(A 0)",
        "(A x)",
        "(A 1",
        "(B (A 1) (A 1) (A 1))",
        "(A 0 (B (A 1) (A 1)))",
        "(A 0 (B (A 2) (A 1) (A 1)))",
        "(A 1) (A 1)",
    ],
)
def test_malformed_keys(text):
    with pytest.raises(MalformedKeyError):
        parse_key(text)


@pytest.mark.parametrize(
    "n,expected",
    list(enumerate(CENSUS_COUNTS, start=1))
    + [pytest.param(n, count, marks=pytest.mark.slow) for n, count in LARGE_CENSUS_COUNTS.items()],
)
def test_census_counts(n, expected):
    census = cohort_census(n)

    assert len(census) == expected
    assert census.total == catalan_number(n)
    assert cohort_count(n) == expected


def test_census_members_share_keys():
    census = cohort_census(5, keep_members=True)

    for key, entry in census.items():
        assert len(entry.members) == entry.count
        assert all(cohort_key(member) == key for member in entry.members)
        assert entry.representative == entry.members[0]


def test_parallel_census_matches_serial():
    serial = cohort_census(7, chunk_size=50)
    parallel = cohort_census(7, workers=2, chunk_size=50)

    assert serial.sorted_keys() == parallel.sorted_keys()
    for key in serial:
        assert serial[key].count == parallel[key].count
        assert serial[key].representative == parallel[key].representative


def test_largest_cohort_is_main():
    for n in range(1, 8):
        census = cohort_census(n)
        key = largest_cohort(census)
        assert key.is_main
        assert census[key].count == main_cohort_size(n)


def test_cohort_count_series():
    series = cohort_count_series(21)

    assert series.coeffs[2:17] == (1, 1, 2, 4, 8, 16, 32, 67, 142, 307, 669, 1478, 3290, 7390, 16709)
    assert series.coeffs[17:22] == (38027, 86993, 200018, 461847, 1070675)


def test_atomic_forms_agree_with_whole_series_multisets():
    a, b = atomic_form_series(14)
    leaves = TruncatedSeries((0,) + b.coeffs)

    assert mset_ge3(a).coeffs[:14] == b.coeffs[1:]
    pairs = mset_ge2(leaves)
    for n in range(1, 15):
        assert a[n] == (1 if n == 1 else 0) + a[n - 1] + pairs[n + 1] + b[n]


def test_main_cohort_sizes():
    assert [main_cohort_size(n) for n in range(1, 7)] == [1, 2, 4, 9, 21, 51]
    assert [motzkin_number(n) for n in range(0, 7)] == [1, 1, 2, 4, 9, 21, 51]
    with pytest.raises(ValueError):
        main_cohort_size(0)


def test_singleton_counts():
    assert [singleton_counts(n).total for n in range(1, 5)] == [1, 0, 1, 2]
    assert singleton_counts(4) == (1, 0, 1)
    with pytest.raises(ValueError):
        singleton_counts(0)


def test_singleton_recurrences_agree():
    assert atom_singleton_counts(20, from_many_atoms=True) == atom_singleton_counts(20)


def test_singletons_match_census():
    for n in range(1, 9):
        census = cohort_census(n)
        lonely = [entry for entry in census.entries.values() if entry.count == 1]
        assert len(lonely) == singleton_counts(n).total
        for entry in census.entries.values():
            assert is_singleton_cohort(entry.representative) == (entry.count == 1), entry.representative


def test_moves():
    assert apply_move("(())()", Move(SWAP, (), position=0)).word == "()(())"
    assert apply_move("()(())", Move(ROTATE, (), present=(True, True, False))).word == "(()())"
    assert apply_move(
        "(()())", Move(ROTATE, (), direction=BACKWARD, present=(True, True, False))
    ).word == "()(())"
    assert apply_move("((())())", Move(SWAP, (0,), position=0)).word == "(()(()))"


def test_bad_moves():
    with pytest.raises(MoveError, match="adjacent"):
        apply_move("()", Move(SWAP, (), position=0))
    with pytest.raises(MoveError, match="leaves the system"):
        apply_move("()", Move(SWAP, (3,), position=0))
    with pytest.raises(MoveError):
        Move.from_json({"kind": "twist"})


def test_move_json():
    move = Move(ROTATE, (1, 0), direction=BACKWARD, present=(False, True, True))

    assert move.to_json() == {"kind": "rotate", "path": [1, 0], "direction": "backward", "present": "-bc"}
    assert Move.from_json(move.to_json()) == move


def test_neighbors():
    assert neighbors("()") == frozenset()
    assert "()()" in {system.word for system in neighbors("(())")}


@pytest.mark.parametrize("n", [*range(1, 7), *(pytest.param(n, marks=pytest.mark.slow) for n in (7, 8, 9))])
def test_closure_classes_are_cohorts(n):
    classes = closure_classes(n)
    by_key = {}
    for system in enumerate_all(n):
        by_key.setdefault(cohort_key(system), set()).add(system.word)

    assert len(classes) == cohort_count(n)
    assert set(classes) == {frozenset(words) for words in by_key.values()}


def test_nonplane_forests_share_cohorts():
    for n in range(1, 7):
        codes = {}
        for system in enumerate_all(n):
            codes.setdefault(nonplane_code(system), set()).add(cohort_key(system))
        assert all(len(keys) == 1 for keys in codes.values())


@pytest.mark.slow
@pytest.mark.parametrize("n", range(8, 13))
def test_census_keys_parse_back_and_have_representatives(n):
    for key in cohort_census(n):
        assert parse_key(str(key)) == key
        assert cohort_key(representative(key)) == key
        assert representative(key).size == n


@pytest.mark.slow
def test_largest_cohort_is_main_up_to_thirteen():
    for n in range(8, 14):
        census = cohort_census(n)
        key = largest_cohort(census)
        counts = sorted((entry.count for entry in census.entries.values()), reverse=True)
        assert key.is_main
        assert counts[0] > counts[1]
        assert census[key].count == main_cohort_size(n)


@pytest.mark.slow
def test_singletons_match_census_up_to_thirteen():
    for n in range(9, 14):
        census = cohort_census(n)
        lonely = [entry for entry in census.entries.values() if entry.count == 1]
        assert len(lonely) == singleton_counts(n).total
