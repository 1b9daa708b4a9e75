"""
Local moves between systems of one cohort.

Moves act on a host forest: the top-level atoms of a system, or the contents
of any atom (addressed by a path of atom indices).  A swap exchanges two
adjacent atoms.  A rotation rewrites a⌢(bc) into ⌢(ab)c, where each of a, b, c
is an atom or absent; forward rotations go in that direction, backward ones
undo it.  The cohorts are the connected components of this move graph.
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterator, List, Tuple

from ..structures.arches import ArchSystem, Structure, iter_words, match_positions, split_atoms, word_of

SWAP = "swap"
ROTATE = "rotate"
FORWARD = "forward"
BACKWARD = "backward"


class MoveError(ValueError):
    """Raised when a move does not fit the shape of its host forest."""


@dataclass(frozen=True)
class Move:
    kind: str
    path: Tuple[int, ...] = ()
    position: int = 0
    direction: str = FORWARD
    present: Tuple[bool, bool, bool] = (True, True, True)

    @property
    def is_full_rotation(self) -> bool:
        return self.kind == ROTATE and all(self.present)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind, "path": list(self.path)}
        if self.kind == SWAP:
            data["position"] = self.position
        else:
            data["direction"] = self.direction
            data["present"] = "".join(name if flag else "-" for name, flag in zip("abc", self.present))
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Move":
        kind = data.get("kind")
        path = tuple(int(i) for i in data.get("path", []))
        if kind == SWAP:
            return cls(SWAP, path, position=int(data["position"]))
        if kind == ROTATE:
            flags = data.get("present", "abc")
            if len(flags) != 3:
                raise MoveError(f"bad presence flags {flags!r}")
            present = tuple(ch != "-" for ch in flags)
            direction = data.get("direction", FORWARD)
            if direction not in (FORWARD, BACKWARD):
                raise MoveError(f"bad rotation direction {direction!r}")
            return cls(ROTATE, path, direction=direction, present=present)  # type: ignore[arg-type]
        raise MoveError(f"unknown move kind {kind!r}")


def host_span(word: str, path: Tuple[int, ...]) -> Tuple[int, int]:
    """Slice bounds of the host forest addressed by ``path``."""
    partner = match_positions(word)
    lo, hi = 0, len(word)
    for index in path:
        start = lo
        for _ in range(index):
            if start >= hi:
                break
            start = partner[start] + 1
        if start >= hi:
            raise MoveError(f"path {list(path)} leaves the system")
        lo, hi = start + 1, partner[start]
    return lo, hi


def _hosts(word: str) -> Iterator[Tuple[Tuple[int, ...], int, int]]:
    partner = match_positions(word)
    stack = [((), 0, len(word))]
    while stack:
        path, lo, hi = stack.pop()
        yield path, lo, hi
        start, index = lo, 0
        while start < hi:
            end = partner[start]
            stack.append((path + (index,), start + 1, end))
            start, index = end + 1, index + 1


def _splits(count: int) -> List[Tuple[bool, bool]]:
    return {0: [(False, False)], 1: [(True, False), (False, True)], 2: [(True, True)]}.get(count, [])


def _forest_moves(forest: List[str], path: Tuple[int, ...]) -> Iterator[Move]:
    for j in range(len(forest) - 1):
        if forest[j] != forest[j + 1]:
            yield Move(SWAP, path, position=j)
    if not forest or len(forest) > 2:
        return
    outer = split_atoms(forest[-1][1:-1])
    for has_b, has_c in _splits(len(outer)):
        yield Move(ROTATE, path, direction=FORWARD, present=(len(forest) == 2, has_b, has_c))
    inner = split_atoms(forest[0][1:-1])
    for has_a, has_b in _splits(len(inner)):
        yield Move(ROTATE, path, direction=BACKWARD, present=(has_a, has_b, len(forest) == 2))


def _rotate(forest: List[str], move: Move) -> List[str]:
    has_a, has_b, has_c = move.present
    if move.direction == FORWARD:
        if len(forest) != 1 + has_a:
            raise MoveError("forward rotation needs [a] followed by one atom")
        outer = split_atoms(forest[-1][1:-1])
        if len(outer) != has_b + has_c:
            raise MoveError("rotated atom has the wrong number of children")
        a = forest[0] if has_a else ""
        b = outer[0] if has_b else ""
        c = outer[-1] if has_c else ""
        return ["(" + a + b + ")"] + ([c] if has_c else [])
    if len(forest) != 1 + has_c:
        raise MoveError("backward rotation needs one atom followed by [c]")
    inner = split_atoms(forest[0][1:-1])
    if len(inner) != has_a + has_b:
        raise MoveError("rotated atom has the wrong number of children")
    a = inner[0] if has_a else ""
    b = inner[-1] if has_b else ""
    c = forest[1] if has_c else ""
    return ([a] if has_a else []) + ["(" + b + c + ")"]


def _apply_to_forest(forest: List[str], move: Move) -> List[str]:
    if move.kind == SWAP:
        j = move.position
        if not 0 <= j < len(forest) - 1:
            raise MoveError(f"no adjacent pair at position {j}")
        return forest[:j] + [forest[j + 1], forest[j]] + forest[j + 2:]
    if move.kind == ROTATE:
        return _rotate(forest, move)
    raise MoveError(f"unknown move kind {move.kind!r}")


def apply_move(system: Structure, move: Move) -> ArchSystem:
    word = word_of(system)
    lo, hi = host_span(word, move.path)
    forest = _apply_to_forest(split_atoms(word[lo:hi]), move)
    return ArchSystem(word[:lo] + "".join(forest) + word[hi:])


def moves_from(system: Structure) -> Iterator[Tuple[Move, ArchSystem]]:
    """Every move that changes ``system``, with its result."""
    word = word_of(system)
    for path, lo, hi in _hosts(word):
        forest = split_atoms(word[lo:hi])
        for move in _forest_moves(forest, path):
            result = word[:lo] + "".join(_apply_to_forest(forest, move)) + word[hi:]
            if result != word:
                yield move, ArchSystem(result)


def neighbors(system: Structure) -> FrozenSet[ArchSystem]:
    return frozenset(result for _, result in moves_from(system))


def closure_classes(n: int) -> List[FrozenSet[str]]:
    """Connected components of the move graph on systems of size ``n``."""
    seen: set = set()
    classes = []
    for word in iter_words(n):
        if word in seen:
            continue
        component = {word}
        queue = deque([word])
        while queue:
            current = queue.popleft()
            for _, result in moves_from(current):
                if result.word not in component:
                    component.add(result.word)
                    queue.append(result.word)
        seen |= component
        classes.append(frozenset(component))
    return classes
