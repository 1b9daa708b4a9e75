"""
Rewrite paths and the bijections they induce.

A path is a sequence of moves from a start system to an end system of the
same cohort.  When no step is a full rotation, composing the bijection of
every move gives an explicit size-preserving bijection Av(start) -> Av(end).
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..analysis.reports import VerificationReport, Witness
from ..cohorts.rewrite import Move, moves_from
from ..containment import contains_word, count_avoiders
from ..structures.arches import ArchSystem, NotAvoidingError, Structure, iter_words, parse, word_of
from ..utils.logging import get_logger
from .maps import Composite, SizePreservingMap
from .moves import bijection_for_move

logger = get_logger(__name__)

MAX_WITNESSES = 5


@dataclass(frozen=True)
class PathStep:
    move: Move
    source: ArchSystem
    target: ArchSystem

    def bijection(self) -> SizePreservingMap:
        return bijection_for_move(self.source, self.move)

    def to_json(self) -> Dict[str, Any]:
        return {
            "move": self.move.to_json(),
            "source": self.source.word,
            "target": self.target.word,
            "constructors": None if self.move.is_full_rotation else self.bijection().constructors(),
        }


@dataclass(frozen=True)
class BijectionPath:
    start: ArchSystem
    end: ArchSystem
    steps: Tuple[PathStep, ...] = ()

    @property
    def is_bijective(self) -> bool:
        return not any(step.move.is_full_rotation for step in self.steps)

    def bijection(self) -> SizePreservingMap:
        """Composed map along the path; raises FullRotationError if a step is a full rotation."""
        return Composite([step.bijection() for step in self.steps], self.start.word)

    def to_json(self) -> Dict[str, Any]:
        return {
            "start": self.start.word,
            "end": self.end.word,
            "steps": [step.to_json() for step in self.steps],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "BijectionPath":
        steps = tuple(
            PathStep(Move.from_json(s["move"]), parse(s["source"]), parse(s["target"]))
            for s in data.get("steps", [])
        )
        return cls(parse(data["start"]), parse(data["end"]), steps)


def find_path(
    start: Structure,
    end: Structure,
    bijective_only: bool = True,
    max_states: Optional[int] = None,
) -> Optional[BijectionPath]:
    """
    Shortest path of moves from ``start`` to ``end``.

    With ``bijective_only`` (the default) full rotations are never taken, so
    the path always induces a bijection; None then also covers cohorts only
    joined through full rotations.  Without it every move is searched and the
    path may contain full rotation steps, whose bijection raises
    FullRotationError.  Systems of different cohorts always give None.
    """
    source, target = word_of(start), word_of(end)
    if len(source) != len(target):
        return None
    parents: Dict[str, Optional[Tuple[str, Move]]] = {source: None}
    queue = deque([source])
    while queue and target not in parents:
        current = queue.popleft()
        for move, result in moves_from(current):
            if (bijective_only and move.is_full_rotation) or result.word in parents:
                continue
            parents[result.word] = (current, move)
            queue.append(result.word)
        if max_states is not None and len(parents) > max_states:
            logger.warning(f"Path search from {source} gave up after {len(parents)} states")
            return None
    if target not in parents:
        return None

    steps: List[PathStep] = []
    node = target
    while parents[node] is not None:
        previous, move = parents[node]
        steps.append(PathStep(move, ArchSystem(previous), ArchSystem(node)))
        node = previous
    steps.reverse()
    return BijectionPath(ArchSystem(source), ArchSystem(target), tuple(steps))


def apply_path(path: BijectionPath, system: Structure) -> ArchSystem:
    word = word_of(system)
    if contains_word(word, path.start.word):
        raise NotAvoidingError(f"{word!r} contains {path.start.word!r}", word)
    return ArchSystem(path.bijection().forward(word))


def verify_path(path: BijectionPath, max_host_size: int) -> VerificationReport:
    """
    Check the induced bijection on every avoider of the start pattern up to ``max_host_size``.

    Each image must be a system of the same size that avoids the end pattern
    and maps back to its preimage; images must be distinct and, per size, as
    many as the avoiders of the end pattern.
    """
    report = VerificationReport(
        check="bijection",
        scope={"max_host_size": max_host_size, "steps": len(path.steps)},
    )
    bijection = path.bijection()
    start, end = path.start.word, path.end.word
    for m in range(max_host_size + 1):
        seen: Dict[str, str] = {}
        domain = 0
        for word in iter_words(m):
            if contains_word(word, start):
                continue
            domain += 1
            report.checks_run += 1
            try:
                image = bijection.forward(word)
                parse(image)
            except Exception as e:
                report.fail(Witness(first=word, degree=m, note=f"map failed: {e}"))
                continue
            if len(image) != len(word):
                report.fail(Witness(first=word, second=image, degree=m, note="size changed"))
            elif contains_word(image, end):
                report.fail(Witness(first=word, second=image, degree=m, note="image contains the end pattern"))
            elif image in seen:
                report.fail(Witness(first=seen[image], second=word, degree=m, note="two systems share an image"))
            elif bijection.inverse(image) != word:
                report.fail(Witness(first=word, second=image, degree=m, note="inverse does not return the system"))
            seen[image] = word
            if len(report.witnesses) >= MAX_WITNESSES:
                break
        expected = count_avoiders(end, m)
        if report.passed and domain != expected:
            report.fail(Witness(first=start, second=end, degree=m, note=f"{domain} avoiders map onto {expected}"))
        if not report.passed:
            break
    logger.info(f"Verified path {start} -> {end} up to size {max_host_size}: {'pass' if report.passed else 'FAIL'}")
    return report.finalize()
