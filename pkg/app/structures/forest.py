"""
Plane forest view of arch systems.

Each atom is a tree whose root is the atom's arch and whose subtrees are the
atoms of its contents.  The JSON form is nested lists: a tree is the list of
its children, a forest is the list of its trees.
"""
from dataclasses import dataclass
from typing import Any, List, Tuple

from .arches import ArchSystem, split_atoms


@dataclass(frozen=True)
class PlaneTree:
    children: Tuple["PlaneTree", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)


@dataclass(frozen=True)
class PlaneForest:
    trees: Tuple[PlaneTree, ...] = ()

    @property
    def size(self) -> int:
        return sum(tree.size for tree in self.trees)


def _tree_of(atom_word: str) -> PlaneTree:
    return PlaneTree(tuple(_tree_of(child) for child in split_atoms(atom_word[1:-1])))


def _word_of(tree: PlaneTree) -> str:
    return "(" + "".join(_word_of(child) for child in tree.children) + ")"


def to_forest(system: ArchSystem) -> PlaneForest:
    return PlaneForest(tuple(_tree_of(atom) for atom in split_atoms(system.word)))


def from_forest(forest: PlaneForest) -> ArchSystem:
    return ArchSystem("".join(_word_of(tree) for tree in forest.trees))


def _tree_to_json(tree: PlaneTree) -> List[Any]:
    return [_tree_to_json(child) for child in tree.children]


def _tree_from_json(data: Any) -> PlaneTree:
    if not isinstance(data, list):
        raise ValueError(f"tree must be a list of subtrees, got {type(data).__name__}")
    return PlaneTree(tuple(_tree_from_json(child) for child in data))


def forest_to_json(forest: PlaneForest) -> List[Any]:
    return [_tree_to_json(tree) for tree in forest.trees]


def forest_from_json(data: Any) -> PlaneForest:
    if not isinstance(data, list):
        raise ValueError("forest must be a list of trees")
    return PlaneForest(tuple(_tree_from_json(tree) for tree in data))
