"""
Bijections for single cohort moves.

A move at a nested host forest is a move at the top level lifted through the
atoms on its path (Case1Lift inside Case2Context at every level).  At the
top level a swap is Case3Commute; a rotation with at least one absent slot is
a short composition of Case4Special maps and swaps.  Rotations with all three
slots present have no bijection here.
"""

from typing import Callable, List, Tuple

from ..cohorts.rewrite import BACKWARD, ROTATE, SWAP, Move, MoveError, apply_move
from ..structures.arches import Structure, split_atoms, word_of
from .maps import (
    Case1Lift,
    Case2Context,
    Case3Commute,
    Case4Special,
    Composite,
    IdentityMap,
    SizePreservingMap,
)


class FullRotationError(ValueError):
    """Raised for a rotation with a, b and c all present."""


def _lifted(word: str, path: Tuple[int, ...], base: Callable[[str], SizePreservingMap]) -> SizePreservingMap:
    if not path:
        return base(word)
    atoms = split_atoms(word)
    i = path[0]
    if i >= len(atoms):
        raise MoveError(f"no atom {i} in {word!r}")
    inner = _lifted(atoms[i][1:-1], path[1:], base)
    return Case2Context("".join(atoms[:i]), "".join(atoms[i + 1:]), Case1Lift(inner))


def _commute_at(position: int) -> Callable[[str], SizePreservingMap]:
    def build(forest: str) -> SizePreservingMap:
        atoms = split_atoms(forest)
        if position + 1 >= len(atoms):
            raise MoveError(f"no adjacent pair at position {position}")
        return Case3Commute(
            "".join(atoms[:position]), "".join(atoms[position + 2:]), atoms[position], atoms[position + 1]
        )
    return build


def _special(forest: str) -> SizePreservingMap:
    # [a, ⌢(b?)] -> [⌢(b? a)]
    atoms = split_atoms(forest)
    if len(atoms) != 2 or len(split_atoms(atoms[1][1:-1])) > 1:
        raise MoveError(f"{forest!r} is not of the form a⌢(b)")
    return Case4Special(atoms[0], atoms[1][1:-1])


def _special_inverse(forest: str) -> SizePreservingMap:
    # [⌢(b? a)] -> [a, ⌢(b?)]
    atoms = split_atoms(forest)
    inner = split_atoms(atoms[0][1:-1]) if len(atoms) == 1 else []
    if len(inner) not in (1, 2):
        raise MoveError(f"{forest!r} is not of the form ⌢(ba)")
    b = inner[0] if len(inner) == 2 else ""
    return Case4Special(inner[-1], b).inverted()


# Top-level steps realizing a forward rotation, by which slot is absent.
_ROTATION_STEPS = {
    "c-absent": [("special", ()), ("swap", (0,))],
    "c-absent-no-b": [("special", ())],
    "a-absent": [("special-inverse", ()), ("swap", ())],
    "b-absent": [("special", ()), ("swap", (0,)), ("special-inverse", ()), ("swap", ())],
}


def _rotation_plan(present: Tuple[bool, bool, bool]) -> List[Tuple[str, Tuple[int, ...]]]:
    has_a, has_b, has_c = present
    if has_a and has_b and has_c:
        raise FullRotationError("rotation with a, b and c all present has no bijective construction")
    if not has_c:
        return _ROTATION_STEPS["c-absent" if has_b else "c-absent-no-b"]
    if not has_a:
        return _ROTATION_STEPS["a-absent"]
    return _ROTATION_STEPS["b-absent"]


def _forward_rotation(word: str, move: Move) -> SizePreservingMap:
    has_a, _, has_c = move.present
    if not has_a and not has_c:
        return IdentityMap(word)
    maps: List[SizePreservingMap] = []
    current = word
    for kind, sub_path in _rotation_plan(move.present):
        if kind == "swap":
            base = _commute_at(0)
        elif kind == "special":
            base = _special
        else:
            base = _special_inverse
        step = _lifted(current, move.path + sub_path, base)
        maps.append(step)
        current = step.target
    return Composite(maps)


def bijection_for_move(source: Structure, move: Move) -> SizePreservingMap:
    """Bijection Av(source) -> Av(apply_move(source, move))."""
    word = word_of(source)
    if move.kind == SWAP:
        return _lifted(word, move.path, _commute_at(move.position))
    if move.kind != ROTATE:
        raise MoveError(f"unknown move kind {move.kind!r}")
    if move.is_full_rotation:
        raise FullRotationError("rotation with a, b and c all present has no bijective construction")
    if move.direction == BACKWARD:
        target = apply_move(word, move).word
        return _forward_rotation(target, Move(ROTATE, move.path, present=move.present)).inverted()
    return _forward_rotation(word, move)


def is_bijective_move(move: Move) -> bool:
    return not move.is_full_rotation
