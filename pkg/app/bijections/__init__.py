from .maps import (
    Case1Lift,
    Case2Context,
    Case3Commute,
    Case4Special,
    Composite,
    IdentityMap,
    Inverted,
    SizePreservingMap,
    split_gap,
)
from .moves import FullRotationError, bijection_for_move, is_bijective_move
from .paths import BijectionPath, PathStep, apply_path, find_path, verify_path
from ..structures.arches import ArchSystem, Structure, word_of


def lift_case1(inner: SizePreservingMap, system: Structure) -> ArchSystem:
    """Apply ``inner`` inside every atom of ``system``."""
    return Case1Lift(inner)(system)


def apply_case2(prefix: Structure, suffix: Structure, inner: SizePreservingMap, system: Structure) -> ArchSystem:
    return Case2Context(word_of(prefix), word_of(suffix), inner)(system)


def apply_case3(prefix: Structure, suffix: Structure, a: Structure, b: Structure, system: Structure) -> ArchSystem:
    return Case3Commute(word_of(prefix), word_of(suffix), word_of(a), word_of(b))(system)


def apply_case4_special(a: Structure, b, system: Structure) -> ArchSystem:
    """Av(a⌢(b)) -> Av(⌢(ba)); ``b`` may be None or empty."""
    return Case4Special(word_of(a), word_of(b) if b else "")(system)


__all__ = [
    "BijectionPath",
    "Case1Lift",
    "Case2Context",
    "Case3Commute",
    "Case4Special",
    "Composite",
    "FullRotationError",
    "IdentityMap",
    "Inverted",
    "PathStep",
    "SizePreservingMap",
    "apply_case2",
    "apply_case3",
    "apply_case4_special",
    "apply_path",
    "bijection_for_move",
    "find_path",
    "is_bijective_move",
    "lift_case1",
    "split_gap",
    "verify_path",
]
