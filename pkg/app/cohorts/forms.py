"""
Cohort keys.

Two systems lie in the same cohort exactly when the atoms over them reduce to
the same canonical atomic form.  An atomic form is a chain of ``u`` atoms
carrying a multiset of large forms as leaves; a large form is an arch over at
least three atomic forms, in any order.  Forms are kept sorted by a total
order on their sort keys, so equal cohorts get equal (and equally printed)
keys.

Serialization is an s-expression: ``(A u leaf...)`` for atomic forms and
``(B child...)`` for large ones.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Tuple

from ..structures.arches import ArchSystem, Structure, split_atoms, word_of

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


class MalformedKeyError(ValueError):
    """Raised for a cohort key that does not parse or breaks a form invariant."""


@dataclass(frozen=True)
class LargeForm:
    children: Tuple[AtomicForm, ...]

    @cached_property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.size, tuple(child.sort_key for child in self.children))

    @cached_property
    def _hash(self) -> int:
        return hash(self.children)

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def build(cls, children) -> LargeForm:
        return cls(tuple(sorted(children, key=_sort_key)))

    def __str__(self) -> str:
        return "(B" + "".join(" " + str(child) for child in self.children) + ")"


@dataclass(frozen=True)
class AtomicForm:
    u: int
    leaves: Tuple[LargeForm, ...] = ()

    @cached_property
    def size(self) -> int:
        return self.u + max(len(self.leaves) - 1, 0) + sum(leaf.size for leaf in self.leaves)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.size, self.u, tuple(leaf.sort_key for leaf in self.leaves))

    @cached_property
    def _hash(self) -> int:
        return hash((self.u, self.leaves))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return f"(A {self.u}" + "".join(" " + str(leaf) for leaf in self.leaves) + ")"


def _sort_key(form) -> tuple:
    return form.sort_key


@dataclass(frozen=True)
class CohortKey:
    """Key of the cohort of a system X: the canonical form of the atom over X."""

    form: AtomicForm

    @property
    def size(self) -> int:
        return self.form.size - 1

    @property
    def is_main(self) -> bool:
        return not self.form.leaves

    def __lt__(self, other: CohortKey) -> bool:
        return self.form.sort_key < other.form.sort_key

    def __str__(self) -> str:
        return str(self.form)


UNIT = AtomicForm(1)


@lru_cache(maxsize=1 << 18)
def _form_of_contents(contents: str) -> AtomicForm:
    atoms = split_atoms(contents)
    if not atoms:
        return UNIT
    if len(atoms) >= 3:
        return AtomicForm(0, (LargeForm.build(_form_of_contents(a[1:-1]) for a in atoms),))
    if len(atoms) == 1:
        inner = _form_of_contents(atoms[0][1:-1])
        return AtomicForm(inner.u + 1, inner.leaves)
    first = _form_of_contents(atoms[0][1:-1])
    second = _form_of_contents(atoms[1][1:-1])
    leaves = tuple(heapq.merge(first.leaves, second.leaves, key=_sort_key))
    size = 1 + first.size + second.size
    u = size - max(len(leaves) - 1, 0) - sum(leaf.size for leaf in leaves)
    return AtomicForm(u, leaves)


def canonical_atom(atom: Structure) -> AtomicForm:
    """Canonical form of an atom given as a word, an Atom or a one-atom system."""
    word = word_of(atom)
    if len(split_atoms(word)) != 1:
        raise ValueError(f"not an atom: {word!r}")
    return _form_of_contents(word[1:-1])


def cohort_key(system: Structure) -> CohortKey:
    return CohortKey(_form_of_contents(word_of(system)))


def is_main_cohort(system: Structure) -> bool:
    return cohort_key(system).is_main


def _large_word(form: LargeForm) -> str:
    return "(" + "".join(_atom_word(child) for child in form.children) + ")"


def _atom_word(form: AtomicForm) -> str:
    leaves = [_large_word(leaf) for leaf in form.leaves]
    if not leaves:
        core, chain = "()", form.u - 1
    else:
        core, chain = leaves[0], form.u
        for leaf in leaves[1:]:
            core = "(" + core + leaf + ")"
    return "(" * chain + core + ")" * chain


def representative(key: CohortKey) -> ArchSystem:
    """A system whose cohort key is ``key``."""
    return ArchSystem(_atom_word(key.form)[1:-1])


def serialize_key(key: CohortKey) -> str:
    return str(key)


class _KeyReader:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _TOKEN.findall(text)
        self.pos = 0

    def fail(self, message: str) -> MalformedKeyError:
        return MalformedKeyError(f"{message} in key {self.text!r} (token {self.pos})")

    def take(self) -> str:
        if self.pos >= len(self.tokens):
            raise self.fail("unexpected end")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, token: str) -> None:
        if self.take() != token:
            raise self.fail(f"expected {token!r}")

    def peek(self) -> str:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ""

    def atomic(self) -> AtomicForm:
        self.expect("(")
        if self.take() != "A":
            raise self.fail("expected an atomic form")
        raw = self.take()
        if not raw.isdigit():
            raise self.fail(f"chain length {raw!r} is not a non-negative integer")
        leaves: List[LargeForm] = []
        while self.peek() == "(":
            leaves.append(self.large())
        self.expect(")")
        if not leaves and int(raw) < 1:
            raise self.fail("an atomic form without leaves needs a chain of length 1 or more")
        _require_sorted(self, leaves)
        return AtomicForm(int(raw), tuple(leaves))

    def large(self) -> LargeForm:
        self.expect("(")
        if self.take() != "B":
            raise self.fail("expected a large form")
        children: List[AtomicForm] = []
        while self.peek() == "(":
            children.append(self.atomic())
        self.expect(")")
        if len(children) < 3:
            raise self.fail("a large form needs at least three children")
        _require_sorted(self, children)
        return LargeForm(tuple(children))


def _require_sorted(reader: _KeyReader, forms) -> None:
    keys = [form.sort_key for form in forms]
    if keys != sorted(keys):
        raise reader.fail("forms are not in canonical order")


def parse_key(text: str) -> CohortKey:
    reader = _KeyReader(text)
    form = reader.atomic()
    if reader.pos != len(reader.tokens):
        raise reader.fail("trailing tokens")
    return CohortKey(form)


def _is_lonely_power(word: str) -> bool:
    # b^k with k >= 3 copies of one atom whose contents are alone in their cohort
    atoms = split_atoms(word)
    return len(atoms) >= 3 and all(a == atoms[0] for a in atoms) and is_singleton_cohort(atoms[0][1:-1])


def is_singleton_cohort(system: Structure) -> bool:
    """Whether ``system`` is the only member of its cohort."""
    word = word_of(system)
    atoms = split_atoms(word)
    if len(atoms) == 0:
        return True
    if len(atoms) == 1:
        return atoms[0] == "()" or _is_lonely_power(atoms[0][1:-1])
    if len(atoms) == 2:
        return atoms[0] == atoms[1] and _is_lonely_power(atoms[0][1:-1])
    return _is_lonely_power(word)


def nonplane_code(system: Structure) -> str:
    """Canonical code of the non-plane forest underlying ``system``."""
    return "".join(sorted(_tree_code(atom) for atom in split_atoms(word_of(system))))


def _tree_code(atom: str) -> str:
    return "(" + "".join(sorted(_tree_code(child) for child in split_atoms(atom[1:-1]))) + ")"
