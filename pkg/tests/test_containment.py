import pytest

from app.containment import (
    Occurrence,
    brute_force_contains,
    clear_caches,
    contains,
    count_avoiders,
    leftmost_end,
    leftmost_occurrence,
    realize,
    rightmost_occurrence,
    rightmost_start,
)
from app.structures import catalan_number, enumerate_all, nest


@pytest.mark.parametrize(
    "host,pattern,expected",
    [
        ("(()())()", "()()()", True),
        ("(()())", "()()", True),
        ("((()))", "()()", False),
        ("()()()", "(())", False),
        ("(())()", "", True),
        ("()", "()()", False),
        ("(()(()))", "(()())", True),
        ("((())())", "(()())", True),
        ("(()())", "((()))", False),
    ],
)
def test_contains(host, pattern, expected):
    assert contains(host, pattern) is expected


def test_leftmost_and_rightmost_occurrences():
    assert leftmost_occurrence("(())()", "()") == Occurrence(frozenset({1}))
    assert rightmost_occurrence("(())()", "()") == Occurrence(frozenset({2}))
    assert leftmost_occurrence("((()))", "(())") == Occurrence(frozenset({1, 2}))
    assert rightmost_occurrence("((()))", "(())") == Occurrence(frozenset({1, 2}))
    assert leftmost_occurrence("((()))", "()()") is None


def test_occurrences_realize_the_pattern():
    for host in enumerate_all(5):
        for pattern in ("()()", "(())", "(()())", "()(())"):
            left = leftmost_occurrence(host, pattern)
            right = rightmost_occurrence(host, pattern)
            if left is None:
                assert right is None
                continue
            assert realize(host, left).word == pattern
            assert realize(host, right).word == pattern


def test_occurrence_endpoints():
    assert leftmost_end("(())()", "()") == 2
    assert rightmost_start("(())()", "()") == 4
    assert leftmost_end("(())()", "()()") == 5
    assert rightmost_start("(())()", "()()") == 1


def test_occurrence_endpoints_of_empty_and_missing_patterns():
    assert leftmost_end("(())()", "") == -1
    assert rightmost_start("(())()", "") == 6
    assert leftmost_end("((()))", "()()") is None
    assert rightmost_start("((()))", "()()") is None


def test_containment_matches_brute_force():
    clear_caches()
    patterns = [p for n in range(1, 4) for p in enumerate_all(n)]
    for n in range(0, 6):
        for host in enumerate_all(n):
            for pattern in patterns:
                assert contains(host, pattern) == brute_force_contains(host, pattern), (host, pattern)


def test_count_avoiders():
    assert [count_avoiders("()()", n) for n in range(6)] == [1, 1, 1, 1, 1, 1]
    assert [count_avoiders(nest(2), n) for n in range(6)] == [1, 1, 1, 1, 1, 1]
    assert [count_avoiders(nest(3), n) for n in range(7)] == [1, 1, 2, 4, 8, 16, 32]
    assert count_avoiders("()", 4) == 0
    assert count_avoiders(nest(6), 5) == catalan_number(5)
