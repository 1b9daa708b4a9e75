import pytest

from app.bijections import (
    BijectionPath,
    Case1Lift,
    Case2Context,
    Case3Commute,
    Case4Special,
    Composite,
    FullRotationError,
    IdentityMap,
    apply_case4_special,
    apply_path,
    bijection_for_move,
    find_path,
    split_gap,
    verify_path,
)
from app.bijections.maps import join_gap
from app.cohorts import Move, apply_move, cohort_key, moves_from
from app.cohorts.rewrite import ROTATE
from app.containment import contains_word, count_avoiders
from app.structures import NotAvoidingError, enumerate_all, iter_words, nest


def _assert_bijective(bijection, max_size):
    for m in range(max_size + 1):
        domain = [w for w in iter_words(m) if not contains_word(w, bijection.source)]
        images = [bijection.forward(w) for w in domain]
        assert all(len(image) == 2 * m for image in images)
        assert not any(contains_word(image, bijection.target) for image in images), bijection
        assert len(set(images)) == len(images), bijection
        assert len(images) == count_avoiders(bijection.target, m), bijection
        assert [bijection.inverse(image) for image in images] == domain, bijection


def test_split_gap():
    assert split_gap(")()(") == (["", "()", ""], [")", "("])
    assert split_gap("(())") == (["(())"], [])
    assert join_gap(*split_gap(")(()))((")) == ")(()))(("


@pytest.mark.parametrize("a,b", [("()", ""), ("()", "()"), ("(())", "()"), ("()", "(())"), ("(())", "(())")])
def test_case4_special_is_bijective(a, b):
    _assert_bijective(Case4Special(a, b), 8)


def test_case4_special_without_b_unwinds_nests():
    special = Case4Special("()")

    assert special.source == "()()"
    assert special.target == "(())"
    assert special.forward(nest(4).word) == "()()()()"
    assert apply_case4_special("()", None, "(())").word == "()()"


@pytest.mark.parametrize(
    "prefix,suffix,a,b",
    [("", "", "(())", "()"), ("", "", "()", "(())"), ("()", "()", "(())", "()"), ("()", "", "()", "(())")],
)
def test_case3_commute_is_bijective(prefix, suffix, a, b):
    _assert_bijective(Case3Commute(prefix, suffix, a, b), 8)


def test_case3_commute_of_equal_atoms_fixes_nests():
    commute = Case3Commute("", "", "()", "()")

    for n in range(6):
        assert commute.forward(nest(n).word) == nest(n).word


def test_case2_context_is_bijective():
    inner = Case1Lift(Case4Special("()"))

    _assert_bijective(Case2Context("()", "()", inner), 8)


def test_case2_context_needs_an_atom_to_atom_map():
    with pytest.raises(ValueError, match="single atom"):
        Case2Context("()", "()", Case4Special("()").inverted())
    with pytest.raises(ValueError, match="single atom"):
        Case2Context("", "()", Case4Special("()"))


def test_case1_lift_is_bijective():
    _assert_bijective(Case1Lift(Case4Special("()")), 8)


def test_composites_check_their_links():
    first = Case4Special("()", "()")
    with pytest.raises(ValueError, match="compose"):
        Composite([first, first])
    assert Composite([], "(())").source == "(())"
    assert Composite([first, first.inverted()]).forward("(()())") == "(()())"


def test_calling_a_map_checks_avoidance():
    with pytest.raises(NotAvoidingError):
        Case4Special("()")("()()")
    assert IdentityMap("()()")("(())").word == "(())"


def test_every_small_move_has_a_bijection():
    for n in range(1, 4):
        for system in enumerate_all(n):
            for move, result in moves_from(system):
                if move.is_full_rotation:
                    continue
                bijection = bijection_for_move(system, move)
                assert bijection.source == system.word
                assert bijection.target == result.word
                _assert_bijective(bijection, n + 4)


@pytest.mark.slow
def test_every_size_four_move_has_a_bijection():
    for system in enumerate_all(4):
        for move, result in moves_from(system):
            if not move.is_full_rotation:
                _assert_bijective(bijection_for_move(system, move), 8)


def test_full_rotation_has_no_bijection():
    move = Move(ROTATE, (), present=(True, True, True))

    assert apply_move("()(()())", move).word == "(()())()"
    with pytest.raises(FullRotationError):
        bijection_for_move("()(()())", move)


def test_find_path_single_move():
    path = find_path("(())", "()()")

    assert path is not None
    assert len(path.steps) == 1
    assert verify_path(path, 10).passed


def test_find_path_empty_and_unreachable():
    path = find_path("(()())", "(()())")

    assert path.steps == ()
    assert apply_path(path, "((()))").word == "((()))"
    assert verify_path(path, 6).passed
    assert find_path("()()()", "((()))") is None
    assert find_path("(())", "((()))") is None


def test_paths_within_the_main_cohort_verify():
    start = nest(4)
    targets = [s for s in enumerate_all(4) if cohort_key(s) == cohort_key(start)]

    assert len(targets) == 9
    for target in targets:
        path = find_path(start, target)
        assert path is not None, target
        report = verify_path(path, 8)
        assert report.passed, report.witnesses


def _main_members(n):
    key = cohort_key(nest(n))
    return [s for s in enumerate_all(n) if cohort_key(s) == key]


def _assert_all_pairs_verify(n, margin):
    members = _main_members(n)
    for start in members:
        for end in members:
            path = find_path(start, end)
            assert path is not None, (start, end)
            report = verify_path(path, n + margin)
            assert report.passed, report.witnesses


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_main_cohort_pair_has_a_bijection(n):
    _assert_all_pairs_verify(n, 3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7])
def test_every_main_cohort_pair_verifies_at_full_margin(n):
    _assert_all_pairs_verify(n, 5)


def test_apply_path_rejects_containing_systems():
    path = find_path("(())", "()()")

    with pytest.raises(NotAvoidingError):
        apply_path(path, "((()))")
    assert apply_path(path, "()()()").word == "((()))"


def test_path_json_round_trip():
    path = find_path(nest(4), "()(()())")
    data = path.to_json()

    restored = BijectionPath.from_json(data)

    assert restored == path
    assert data["steps"][0]["constructors"]


# a(bc) and (ab)c over rigid atoms: only a full rotation joins them
_RIGID_START = "(()()())((()()())(()()()()))"
_RIGID_END = "((()()())(()()()))(()()()())"


def test_full_rotations_are_searched_only_when_asked():
    assert cohort_key(_RIGID_START) == cohort_key(_RIGID_END)
    assert find_path(_RIGID_START, _RIGID_END) is None

    path = find_path(_RIGID_START, _RIGID_END, bijective_only=False)

    assert path is not None
    assert len(path.steps) == 1
    assert path.steps[0].move.is_full_rotation
    assert not path.is_bijective
    assert path.to_json()["steps"][0]["constructors"] is None
    with pytest.raises(FullRotationError):
        path.bijection()


def test_bijective_paths_ignore_the_flag():
    path = find_path("(())", "()()", bijective_only=False)

    assert path.is_bijective
    assert verify_path(path, 8).passed
