import itertools

import pytest

from app.containment import contains
from app.structures import (
    ArchSystem,
    NotAvoidingError,
    ParseError,
    Perm231,
    arch_over,
    catalan_number,
    enumerate_all,
    forest_from_json,
    forest_to_json,
    from_atoms,
    from_dyck,
    from_forest,
    from_perm,
    iter_words,
    mirror,
    nest,
    parse,
    parse_perm,
    perm_contains,
    rank,
    render,
    render_perm,
    to_dyck,
    to_forest,
    to_perm,
    unrank,
)

FIGURE_WORD = "(()(()))((()))()"


def test_figure_system_maps_to_its_permutation():
    system = parse(FIGURE_WORD)

    assert system.size == 8
    assert str(to_perm(system)) == "41327658"
    assert from_perm(parse_perm("41327658")) == system


@pytest.mark.parametrize(
    "word,perm",
    [("", ()), ("()", (1,)), ("(())", (2, 1)), ("()()", (1, 2)), ("()()()", (1, 2, 3))],
)
def test_small_permutations(word, perm):
    assert to_perm(parse(word)).values == perm
    assert from_perm(Perm231(perm)).word == word


def test_from_perm_rejects_231():
    with pytest.raises(NotAvoidingError, match="231"):
        from_perm(Perm231((2, 3, 1)))


def test_from_perm_rejects_non_permutations():
    with pytest.raises(ValueError, match="not a permutation"):
        from_perm(Perm231((1, 1, 2)))


@pytest.mark.parametrize("text,offset", [("(()", 3), ("())", 2), ("(a)", 1), (")(", 0)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as err:
        parse(text)

    assert err.value.offset == offset


def test_atom_decomposition():
    system = parse("(())()((()))")

    assert [atom.word for atom in system.atoms] == ["(())", "()", "((()))"]
    assert [atom.contents.word for atom in system.atoms] == ["()", "", "(())"]
    assert not system.is_atom
    assert parse("(()())").is_atom
    assert from_atoms(system.atoms) == system


def test_constructors():
    assert nest(3).word == "((()))"
    assert nest(0) == ArchSystem()
    assert arch_over("()()").word == "(()())"
    assert (parse("()") + parse("(())")).word == "()(())"
    assert mirror("(())()").word == "()(())"
    assert mirror(mirror(FIGURE_WORD)).word == FIGURE_WORD


def test_dyck_view():
    assert str(to_dyck(parse("(())()"))) == "uuddud"
    assert from_dyck("uuddud").word == "(())()"
    assert to_dyck(parse("(())()")).semilength == 3


@pytest.mark.parametrize("steps", ["udd", "duud", "uxd"])
def test_from_dyck_rejects_bad_paths(steps):
    with pytest.raises(ParseError):
        from_dyck(steps)


def test_forest_view():
    forest = to_forest(parse("(())()"))

    assert forest_to_json(forest) == [[[]], []]
    assert forest.size == 3
    assert from_forest(forest_from_json([[[]], []])).word == "(())()"


def test_forest_json_rejects_non_lists():
    with pytest.raises(ValueError, match="list"):
        forest_from_json([[], "x"])


def test_enumeration_order_size_three():
    assert list(iter_words(3)) == ["((()))", "(()())", "(())()", "()(())", "()()()"]


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_counts_catalan(n):
    words = list(iter_words(n))

    assert len(words) == catalan_number(n)
    assert len(set(words)) == len(words)
    assert words == sorted(words)


def test_rank_and_unrank_agree_with_enumeration():
    for n in range(1, 8):
        for r, system in enumerate(enumerate_all(n)):
            assert rank(system) == r
            assert unrank(n, r) == system


def test_enumeration_restarts_at_any_rank():
    full = list(iter_words(7))

    assert list(iter_words(7, 100, 150)) == full[100:150]
    assert list(iter_words(7, 420)) == full[420:]
    assert list(iter_words(7, 50, 50)) == []


def test_unrank_rejects_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        unrank(3, 5)


def test_views_round_trip():
    for n in range(0, 9):
        for system in enumerate_all(n):
            assert from_dyck(to_dyck(system)) == system
            assert from_forest(to_forest(system)) == system
            assert from_perm(to_perm(system)) == system
            assert parse(render(system)) == system
    assert render(nest(2)) == "(())"
    assert render(parse(FIGURE_WORD)) == FIGURE_WORD


def test_permutation_rendering():
    assert render_perm((4, 1, 3, 2)) == "4132"
    assert render_perm(tuple(range(10, 0, -1))) == "10,9,8,7,6,5,4,3,2,1"
    assert parse_perm("10,9,8,7,6,5,4,3,2,1").values == tuple(range(10, 0, -1))


def test_perm_contains():
    assert perm_contains(Perm231((4, 1, 3, 2)), Perm231((2, 1)))
    assert not perm_contains(Perm231((1, 2, 3)), Perm231((2, 1)))


def _containment_agrees_with_permutations(max_size):
    systems = [s for n in range(max_size + 1) for s in enumerate_all(n)]
    perms = {s: to_perm(s) for s in systems}
    for host, pattern in itertools.product(systems, repeat=2):
        if pattern.size > host.size:
            continue
        assert contains(host, pattern) == perm_contains(perms[host], perms[pattern]), (host, pattern)


def test_containment_matches_permutation_patterns():
    _containment_agrees_with_permutations(5)


@pytest.mark.slow
def test_containment_matches_permutation_patterns_exhaustive():
    _containment_agrees_with_permutations(7)
