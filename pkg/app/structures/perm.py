"""
231-avoiding permutations.

The atoms of a system are labeled left to right by increasing blocks of
values.  An atom occupying the values ``lo+1 .. lo+k`` writes its largest
value first and then the labels of its contents over ``lo+1 .. lo+k-1``.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .arches import ArchSystem, NotAvoidingError, split_atoms


@dataclass(frozen=True)
class Perm231:
    values: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return render_perm(self.values)


def _label(word: str, offset: int, out: List[int]) -> None:
    for atom in split_atoms(word):
        size = len(atom) // 2
        out.append(offset + size)
        _label(atom[1:-1], offset, out)
        offset += size


def to_perm(system: ArchSystem) -> Perm231:
    values: List[int] = []
    _label(system.word, 0, values)
    return Perm231(tuple(values))


def _decode(values: Sequence[int], lo: int) -> str:
    parts = []
    i = 0
    while i < len(values):
        top = values[i]
        size = top - lo
        block = values[i + 1:i + size]
        if size < 1 or len(block) != size - 1 or not all(lo < v < top for v in block):
            raise NotAvoidingError("permutation contains the pattern 231")
        parts.append("(" + _decode(block, lo) + ")")
        lo = top
        i += size
    return "".join(parts)


def from_perm(perm: Perm231) -> ArchSystem:
    values = tuple(perm.values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
    return ArchSystem(_decode(values, 0))


def _standardize(values: Sequence[int]) -> Tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def perm_contains(perm: Perm231, pattern: Perm231) -> bool:
    """Classical pattern containment, checked over every subsequence."""
    target = tuple(pattern.values)
    if len(target) > len(perm.values):
        return False
    return any(
        _standardize(sub) == target
        for sub in combinations(perm.values, len(target))
    )


def render_perm(values: Sequence[int]) -> str:
    if len(values) <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def parse_perm(text: str) -> Perm231:
    text = text.strip()
    if not text:
        return Perm231(())
    try:
        if "," in text:
            values = tuple(int(part) for part in text.split(","))
        else:
            values = tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"cannot read permutation {text!r}") from None
    return Perm231(values)
