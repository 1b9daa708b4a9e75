"""Dyck path view of arch systems: an opening point is an up step, a closing point a down step."""

from dataclasses import dataclass
from typing import Union

from .arches import ArchSystem, ParseError, parse

UP = "u"
DOWN = "d"
_TO_STEPS = str.maketrans({"(": UP, ")": DOWN})
_FROM_STEPS = str.maketrans({UP: "(", DOWN: ")"})


@dataclass(frozen=True)
class DyckPath:
    steps: str = ""

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def to_dyck(system: ArchSystem) -> DyckPath:
    return DyckPath(system.word.translate(_TO_STEPS))


def from_dyck(path: Union[DyckPath, str]) -> ArchSystem:
    steps = path.steps if isinstance(path, DyckPath) else path
    for offset, step in enumerate(steps):
        if step not in (UP, DOWN):
            raise ParseError(f"unexpected step {step!r}", offset)
    try:
        return parse(steps.translate(_FROM_STEPS))
    except ParseError as e:
        raise ParseError("path leaves the upper half-plane or does not return", e.offset) from None
