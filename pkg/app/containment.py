"""
Substructure containment between arch systems.

A system P occurs in X when some arches of X, with the rest removed, form P.
The decision procedure places the atoms of P left to right: each atom takes
the arch of X with the earliest right endpoint, starting after the previous
placement, whose contents contain the atom's contents.  The same greedy
placement gives the leftmost occurrence; mirroring both systems gives the
rightmost one.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .structures.arches import (
    CLOSE,
    OPEN,
    ArchSystem,
    Structure,
    iter_words,
    match_positions,
    mirror,
    split_atoms,
    word_of,
)
from .utils.logging import get_logger

logger = get_logger(__name__)

Placement = Tuple[int, int]


@dataclass(frozen=True)
class Occurrence:
    """Arches of the host (by left-endpoint order) forming one copy of the pattern."""

    arch_indices: FrozenSet[int]

    def sorted_indices(self) -> List[int]:
        return sorted(self.arch_indices)


@lru_cache(maxsize=1 << 16)
def _partners(word: str) -> Tuple[int, ...]:
    return tuple(match_positions(word))


def _place_atoms(host: str, pattern: str) -> Optional[List[Placement]]:
    """Greedy outer-arch placement of each atom of ``pattern`` in ``host``."""
    partner = _partners(host)
    pos = 0
    placed: List[Placement] = []
    atoms = split_atoms(pattern)
    needed = len(pattern)
    for atom in atoms:
        inner = atom[1:-1]
        if len(host) - pos < needed:
            return None
        found = None
        for t in range(pos, len(host)):
            if host[t] != CLOSE:
                continue
            s = partner[t]
            if s >= pos and t - s - 1 >= len(inner) and contains_word(host[s + 1:t], inner):
                found = (s, t)
                break
        if found is None:
            return None
        placed.append(found)
        pos = found[1] + 1
        needed -= len(atom)
    return placed


@lru_cache(maxsize=1 << 20)
def contains_word(host: str, pattern: str) -> bool:
    """Word-level containment test; memoized on the pair of words."""
    if not pattern:
        return True
    if len(pattern) > len(host):
        return False
    return _place_atoms(host, pattern) is not None


def contains(host: Structure, pattern: Structure) -> bool:
    return contains_word(word_of(host), word_of(pattern))


def _leftmost_points(host: str, pattern: str, offset: int, out: List[int]) -> bool:
    placed = _place_atoms(host, pattern)
    if placed is None:
        return False
    for (s, t), atom in zip(placed, split_atoms(pattern)):
        out.append(offset + s)
        _leftmost_points(host[s + 1:t], atom[1:-1], offset + s + 1, out)
    return True


def _to_indices(word: str, left_points: Iterable[int]) -> FrozenSet[int]:
    index_of = {}
    for i, ch in enumerate(word):
        if ch == OPEN:
            index_of[i] = len(index_of)
    return frozenset(index_of[p] for p in left_points)


def leftmost_occurrence(host: Structure, pattern: Structure) -> Optional[Occurrence]:
    host_word, pattern_word = word_of(host), word_of(pattern)
    points: List[int] = []
    if not _leftmost_points(host_word, pattern_word, 0, points):
        return None
    return Occurrence(_to_indices(host_word, points))


def rightmost_occurrence(host: Structure, pattern: Structure) -> Optional[Occurrence]:
    host_word, pattern_word = word_of(host), word_of(pattern)
    mirrored = mirror(host_word).word
    points: List[int] = []
    if not _leftmost_points(mirrored, mirror(pattern_word).word, 0, points):
        return None
    partner = _partners(host_word)
    last = len(host_word) - 1
    return Occurrence(_to_indices(host_word, (partner[last - p] for p in points)))


def leftmost_end(host: Structure, pattern: Structure) -> Optional[int]:
    """Rightmost point of the leftmost occurrence; -1 for the empty pattern, None if absent."""
    host_word, pattern_word = word_of(host), word_of(pattern)
    if not pattern_word:
        return -1
    placed = _place_atoms(host_word, pattern_word) if len(pattern_word) <= len(host_word) else None
    if placed is None:
        return None
    return placed[-1][1]


def rightmost_start(host: Structure, pattern: Structure) -> Optional[int]:
    """Leftmost point of the rightmost occurrence; len(host) for the empty pattern, None if absent."""
    host_word, pattern_word = word_of(host), word_of(pattern)
    if not pattern_word:
        return len(host_word)
    end = leftmost_end(mirror(host_word).word, mirror(pattern_word).word)
    if end is None:
        return None
    return len(host_word) - 1 - end


def realize(host: Structure, occurrence: Occurrence) -> ArchSystem:
    """The subsystem formed by the chosen arches."""
    word = word_of(host)
    partner = _partners(word)
    keep = set()
    index = 0
    for i, ch in enumerate(word):
        if ch == OPEN:
            if index in occurrence.arch_indices:
                keep.add(i)
                keep.add(partner[i])
            index += 1
    return ArchSystem("".join(ch for i, ch in enumerate(word) if i in keep))


def brute_force_contains(host: Structure, pattern: Structure) -> bool:
    """Reference containment test over every set of arches of the right size."""
    host_word, pattern_word = word_of(host), word_of(pattern)
    arches = len(host_word) // 2
    wanted = len(pattern_word) // 2
    return any(
        realize(host_word, Occurrence(frozenset(chosen))).word == pattern_word
        for chosen in combinations(range(arches), wanted)
    )


def count_avoiders(pattern: Structure, n: int) -> int:
    """Number of size-``n`` systems avoiding ``pattern``."""
    pattern_word = word_of(pattern)
    return sum(1 for word in iter_words(n) if not contains_word(word, pattern_word))


def clear_caches() -> None:
    contains_word.cache_clear()
    _partners.cache_clear()
    logger.debug("Cleared containment caches")
