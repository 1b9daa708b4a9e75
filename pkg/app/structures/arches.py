"""Arch systems, the working Catalan representation.

An arch system is kept as its balanced parenthesis word.  The atom
decomposition (a sequence of atoms, each an arch over a smaller system) is
derived on demand; Dyck paths, plane forests and 231-avoiding permutations all
convert through it.

Enumeration walks the balanced words of a size in lexicographic order with
``(`` before ``)`` and can start at any rank, so a scan can be cut into
independent rank ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Optional, Sequence, Union

OPEN = "("
CLOSE = ")"
_MIRROR = str.maketrans({OPEN: CLOSE, CLOSE: OPEN})


class ParseError(ValueError):
    """Raised for text that is not a balanced parenthesis word."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NotAvoidingError(ValueError):
    """Raised when a structure contains a pattern it is required to avoid."""

    def __init__(self, message: str, word: str = ""):
        super().__init__(message)
        self.word = word


@dataclass(frozen=True)
class ArchSystem:
    """A sequence of atoms, stored as its parenthesis word."""

    word: str = ""

    @cached_property
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(Atom(ArchSystem(piece[1:-1])) for piece in split_atoms(self.word))

    @property
    def size(self) -> int:
        return len(self.word) // 2

    @property
    def is_atom(self) -> bool:
        return len(self.atoms) == 1

    def __add__(self, other: ArchSystem) -> ArchSystem:
        return concat(self, other)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class Atom:
    """An arch over a (possibly empty) system."""

    contents: ArchSystem = ArchSystem()

    @property
    def word(self) -> str:
        return OPEN + self.contents.word + CLOSE

    @property
    def size(self) -> int:
        return 1 + self.contents.size

    def as_system(self) -> ArchSystem:
        return ArchSystem(self.word)


Structure = Union[ArchSystem, Atom, str]


def word_of(value: Structure) -> str:
    """Parenthesis word of a system, an atom or an already rendered word."""
    if isinstance(value, str):
        return value
    return value.word


def split_atoms(word: str) -> list[str]:
    """Cut a balanced word into the words of its top-level atoms."""
    atoms = []
    depth = 0
    start = 0
    for i, ch in enumerate(word):
        if ch == OPEN:
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                atoms.append(word[start:i + 1])
                start = i + 1
    return atoms


def match_positions(word: str) -> list[int]:
    """For every point, the position of the other endpoint of its arch."""
    partner = [0] * len(word)
    stack = []
    for i, ch in enumerate(word):
        if ch == OPEN:
            stack.append(i)
        else:
            j = stack.pop()
            partner[i] = j
            partner[j] = i
    return partner


def parse(text: str) -> ArchSystem:
    depth = 0
    for offset, ch in enumerate(text):
        if ch == OPEN:
            depth += 1
        elif ch == CLOSE:
            depth -= 1
            if depth < 0:
                raise ParseError("unmatched ')'", offset)
        else:
            raise ParseError(f"unexpected character {ch!r}", offset)
    if depth:
        raise ParseError(f"{depth} unclosed '('", len(text))
    return ArchSystem(text)


def render(system: ArchSystem) -> str:
    return system.word


def nest(n: int) -> ArchSystem:
    if n < 0:
        raise ValueError("nest size must be non-negative")
    return ArchSystem(OPEN * n + CLOSE * n)


def concat(first: Structure, second: Structure) -> ArchSystem:
    return ArchSystem(word_of(first) + word_of(second))


def arch_over(system: Structure) -> ArchSystem:
    """The atom with the given contents, as a one-atom system."""
    return ArchSystem(OPEN + word_of(system) + CLOSE)


def atoms_of(system: Structure) -> tuple[Atom, ...]:
    if isinstance(system, ArchSystem):
        return system.atoms
    return ArchSystem(word_of(system)).atoms


def from_atoms(atoms: Sequence[Structure]) -> ArchSystem:
    return ArchSystem("".join(word_of(atom) for atom in atoms))


def mirror(system: Structure) -> ArchSystem:
    """Left-right reflection of a system."""
    return ArchSystem(word_of(system)[::-1].translate(_MIRROR))


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _completions(length: int, depth: int) -> int:
    """Number of ways to close a prefix at ``depth`` using ``length`` more points."""
    if depth < 0 or depth > length or (length - depth) % 2:
        return 0
    closes_over = (length - depth) // 2
    if closes_over == 0:
        return 1
    return comb(length, closes_over) - comb(length, closes_over - 1)


def unrank(n: int, rank: int) -> ArchSystem:
    """The size-``n`` system at ``rank`` in enumeration order."""
    if not 0 <= rank < catalan_number(n):
        raise ValueError(f"rank {rank} out of range for size {n}")
    chars = []
    depth = 0
    for position in range(2 * n):
        remaining = 2 * n - position - 1
        with_open = _completions(remaining, depth + 1)
        if rank < with_open:
            chars.append(OPEN)
            depth += 1
        else:
            rank -= with_open
            chars.append(CLOSE)
            depth -= 1
    return ArchSystem("".join(chars))


def rank(system: Structure) -> int:
    """Position of a system in the enumeration order of its size."""
    word = word_of(system)
    result = 0
    depth = 0
    for position, ch in enumerate(word):
        remaining = len(word) - position - 1
        if ch == OPEN:
            depth += 1
        else:
            result += _completions(remaining, depth + 1)
            depth -= 1
    return result


def _advance(chars: list[str]) -> bool:
    """Step a balanced word to its lexicographic successor in place."""
    length = len(chars)
    half = length // 2
    depth_before = [0] * length
    depth = 0
    for i, ch in enumerate(chars):
        depth_before[i] = depth
        depth += 1 if ch == OPEN else -1
    for i in range(length - 1, -1, -1):
        if chars[i] == OPEN and depth_before[i] >= 1:
            opens_left = half - (i + depth_before[i]) // 2
            tail = length - i - 1
            chars[i] = CLOSE
            chars[i + 1:] = [OPEN] * opens_left + [CLOSE] * (tail - opens_left)
            return True
    return False


def iter_words(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[str]:
    """Words of size ``n`` with rank in ``[start, stop)``, in order."""
    total = catalan_number(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    chars = list(unrank(n, start).word)
    yield "".join(chars)
    for _ in range(start + 1, stop):
        _advance(chars)
        yield "".join(chars)


def enumerate_all(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[ArchSystem]:
    if n < 0:
        raise ValueError("size must be non-negative")
    for word in iter_words(n, start, stop):
        yield ArchSystem(word)
