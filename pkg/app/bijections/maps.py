"""
Size-preserving bijections between avoider classes.

A map carries Av(source) onto Av(target) for every size.  ``forward`` and
``inverse`` work on parenthesis words and assume their argument already avoids
the right pattern; calling a map on an ArchSystem checks that first.

The constructors mirror the rules generating the cohort relation:

* Case1Lift: from Av(A) -> Av(B) to Av(⌢A) -> Av(⌢B), atom by atom;
* Case2Context: from Av(a) -> Av(b) (atoms) to Av(PaQ) -> Av(PbQ);
* Case3Commute: Av(PabQ) -> Av(PbaQ);
* Case4Special: Av(a⌢(b)) -> Av(⌢(ba)) with b an atom or empty.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from ..containment import contains_word, leftmost_end, rightmost_start
from ..structures.arches import (
    CLOSE,
    OPEN,
    ArchSystem,
    NotAvoidingError,
    Structure,
    match_positions,
    split_atoms,
    word_of,
)


class SizePreservingMap(ABC):
    """A bijection Av(source) -> Av(target) on words of every size."""

    source: str
    target: str
    tag: str = "map"

    @abstractmethod
    def forward(self, word: str) -> str:
        pass

    @abstractmethod
    def inverse(self, word: str) -> str:
        pass

    def inverted(self) -> "SizePreservingMap":
        return Inverted(self)

    def __call__(self, system: Structure) -> ArchSystem:
        word = word_of(system)
        if contains_word(word, self.source):
            raise NotAvoidingError(f"{word!r} contains {self.source!r}", word)
        return ArchSystem(self.forward(word))

    def apply_inverse(self, system: Structure) -> ArchSystem:
        word = word_of(system)
        if contains_word(word, self.target):
            raise NotAvoidingError(f"{word!r} contains {self.target!r}", word)
        return ArchSystem(self.inverse(word))

    def constructors(self) -> List[str]:
        return [self.tag]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.source!r} -> {self.target!r})"


def _require_atom(word: str, role: str) -> None:
    if len(split_atoms(word)) != 1:
        raise ValueError(f"{role} must be a single atom, got {word!r}")


class IdentityMap(SizePreservingMap):
    tag = "identity"

    def __init__(self, pattern: str):
        self.source = self.target = pattern

    def forward(self, word: str) -> str:
        return word

    def inverse(self, word: str) -> str:
        return word


class Inverted(SizePreservingMap):
    def __init__(self, inner: SizePreservingMap):
        self.inner = inner
        self.source = inner.target
        self.target = inner.source
        self.tag = f"inverse({inner.tag})"

    def forward(self, word: str) -> str:
        return self.inner.inverse(word)

    def inverse(self, word: str) -> str:
        return self.inner.forward(word)

    def inverted(self) -> SizePreservingMap:
        return self.inner

    def constructors(self) -> List[str]:
        return [f"inverse({name})" for name in self.inner.constructors()]


class Composite(SizePreservingMap):
    tag = "composite"

    def __init__(self, maps: Sequence[SizePreservingMap], pattern: str = ""):
        self.maps = list(maps)
        for left, right in zip(self.maps, self.maps[1:]):
            if left.target != right.source:
                raise ValueError(f"cannot compose {left!r} with {right!r}")
        self.source = self.maps[0].source if self.maps else pattern
        self.target = self.maps[-1].target if self.maps else pattern

    def forward(self, word: str) -> str:
        for m in self.maps:
            word = m.forward(word)
        return word

    def inverse(self, word: str) -> str:
        for m in reversed(self.maps):
            word = m.inverse(word)
        return word

    def constructors(self) -> List[str]:
        return [name for m in self.maps for name in m.constructors()]


class Case1Lift(SizePreservingMap):
    """Applies an inner map to the contents of every atom."""

    tag = "case1-lift"

    def __init__(self, inner: SizePreservingMap):
        self.inner = inner
        self.source = OPEN + inner.source + CLOSE
        self.target = OPEN + inner.target + CLOSE

    def forward(self, word: str) -> str:
        return "".join(OPEN + self.inner.forward(atom[1:-1]) + CLOSE for atom in split_atoms(word))

    def inverse(self, word: str) -> str:
        return "".join(OPEN + self.inner.inverse(atom[1:-1]) + CLOSE for atom in split_atoms(word))

    def constructors(self) -> List[str]:
        return [self.tag] + self.inner.constructors()


def split_gap(gap: str) -> Tuple[List[str], List[str]]:
    """
    Cut a gap between two occurrences at its crossing points.

    Points whose arch leaves the gap (closings first, then openings) split it
    into balanced intervals.  Returns the intervals and the crossing points
    between them.
    """
    stack: List[int] = []
    crossing: List[int] = []
    for i, ch in enumerate(gap):
        if ch == OPEN:
            stack.append(i)
        elif stack:
            stack.pop()
        else:
            crossing.append(i)
    crossing.extend(stack)
    intervals, prev = [], 0
    for c in crossing:
        intervals.append(gap[prev:c])
        prev = c + 1
    intervals.append(gap[prev:])
    return intervals, [gap[c] for c in crossing]


def join_gap(intervals: Sequence[str], separators: Sequence[str]) -> str:
    parts = [intervals[0]]
    for sep, interval in zip(separators, intervals[1:]):
        parts.append(sep)
        parts.append(interval)
    return "".join(parts)


def _gap_bounds(word: str, prefix: str, suffix: str) -> Tuple[int, int]:
    return leftmost_end(word, prefix) + 1, rightmost_start(word, suffix)


class Case2Context(SizePreservingMap):
    """Runs an atom-to-atom map on the gap between the leftmost P and the rightmost Q."""

    tag = "case2-context"

    def __init__(self, prefix: str, suffix: str, inner: SizePreservingMap):
        _require_atom(inner.source, "case-2 inner source")
        _require_atom(inner.target, "case-2 inner target")
        self.prefix = prefix
        self.suffix = suffix
        self.inner = inner
        self.source = prefix + inner.source + suffix
        self.target = prefix + inner.target + suffix

    def _map(self, word: str, forward: bool) -> str:
        if not contains_word(word, self.prefix + self.suffix):
            return word
        lo, hi = _gap_bounds(word, self.prefix, self.suffix)
        intervals, separators = split_gap(word[lo:hi])
        step = self.inner.forward if forward else self.inner.inverse
        return word[:lo] + join_gap([step(piece) for piece in intervals], separators) + word[hi:]

    def forward(self, word: str) -> str:
        return self._map(word, True)

    def inverse(self, word: str) -> str:
        return self._map(word, False)

    def constructors(self) -> List[str]:
        return [self.tag] + self.inner.constructors()


class Case3Commute(SizePreservingMap):
    """
    Av(PabQ) -> Av(PbaQ).

    Inside the gap between the leftmost P and the rightmost Q, pick the arch
    of the designated copy of ``a`` (earliest right endpoint going forward,
    latest left endpoint going back) together with its ancestors inside its
    interval.  Reading the gap as a list of slots (whole intervals, the
    pieces beside each ancestor, the contents of the chosen arch) and
    reversing that list swaps what can precede ``a`` with what can follow it.
    """

    tag = "case3-commute"

    def __init__(self, prefix: str, suffix: str, a: str, b: str):
        _require_atom(a, "a")
        _require_atom(b, "b")
        self.prefix, self.suffix, self.a, self.b = prefix, suffix, a, b
        self.source = prefix + a + b + suffix
        self.target = prefix + b + a + suffix

    def forward(self, word: str) -> str:
        return self._commute(word, from_right=False)

    def inverse(self, word: str) -> str:
        return self._commute(word, from_right=True)

    def _designated(self, word: str, partner: List[int], lo: int, hi: int, from_right: bool) -> Tuple[int, int]:
        inner = self.a[1:-1]
        if from_right:
            for s in range(hi - 1, lo - 1, -1):
                if word[s] == OPEN and partner[s] < hi and contains_word(word[s + 1:partner[s]], inner):
                    return s, partner[s]
        else:
            for t in range(lo, hi):
                if word[t] == CLOSE and partner[t] >= lo and contains_word(word[partner[t] + 1:t], inner):
                    return partner[t], t
        raise AssertionError("gap contains the pattern but no arch carries it")

    def _commute(self, word: str, from_right: bool) -> str:
        if not contains_word(word, self.prefix + self.a + self.suffix):
            return word
        lo, hi = _gap_bounds(word, self.prefix, self.suffix)
        partner = match_positions(word)
        s, t = self._designated(word, partner, lo, hi, from_right)

        crossings = [p for p in range(lo, hi) if not lo <= partner[p] < hi]
        bounds = [lo - 1] + crossings + [hi]
        q = next(r for r in range(len(bounds) - 1) if bounds[r] < s < bounds[r + 1])
        ilo, ihi = bounds[q] + 1, bounds[q + 1]

        nest = [(x, partner[x]) for x in range(ilo, s) if word[x] == OPEN and partner[x] > t]
        nest.append((s, t))
        k = len(nest)
        left = [word[ilo:nest[0][0]]] + [word[nest[i - 1][0] + 1:nest[i][0]] for i in range(1, k)]
        right = [word[nest[i][1] + 1:(nest[i - 1][1] if i else ihi)] for i in range(k)]

        intervals = [word[bounds[r] + 1:bounds[r + 1]] for r in range(len(bounds) - 1)]
        slots = intervals[:q] + left + [word[s + 1:t]] + right[::-1] + intervals[q + 1:]
        slots.reverse()

        q_new = len(intervals) - 1 - q
        rebuilt = slots[:q_new] + [_nest_word(slots[q_new:q_new + 2 * k + 1], k)] + slots[q_new + 2 * k + 1:]
        separators = [word[p] for p in crossings]
        return word[:lo] + join_gap(rebuilt, separators) + word[hi:]


def _nest_word(parts: Sequence[str], k: int) -> str:
    """Rebuild L_0 ( L_1 ( ... L_{k-1} (C) R_{k-1} ... ) R_1 ) R_0 from its slots."""
    left, centre, right = parts[:k], parts[k], parts[k + 1:][::-1]
    current = OPEN + centre + CLOSE
    for level in range(k - 1, -1, -1):
        current = left[level] + current + right[level]
        if level:
            current = OPEN + current + CLOSE
    return current


def _levels(word: str, s: int, partner: List[int]) -> Tuple[List[Tuple[str, str]], str]:
    """Siblings left and right of the ancestors of the arch opening at ``s``, outermost first."""
    levels = []
    lo, hi = 0, len(word)
    while True:
        x = lo
        while partner[x] < s:
            x = partner[x] + 1
        y = partner[x]
        levels.append((word[lo:x], word[y + 1:hi]))
        if x == s:
            return levels, word[s + 1:y]
        lo, hi = x + 1, y


class Case4Special(SizePreservingMap):
    """
    Av(a⌢(b)) -> Av(⌢(ba)), with ``a`` an atom and ``b`` an atom or empty.

    For empty b every nonempty system splits as A_1⌢(M) and maps to
    ⌢(A_1)τ(M).  Otherwise the arch of the rightmost copy of b is lifted out
    of its ancestors: the pieces left of each ancestor (which avoid a) move
    to the right of the rebuilt ancestors and the pieces right of it (which
    avoid b) move to the left, while the leftmost top-level piece M is
    mapped recursively.
    """

    tag = "case4-special"

    def __init__(self, a: str, b: Optional[str] = None):
        b = b or ""
        _require_atom(a, "a")
        if b:
            _require_atom(b, "b")
        self.a, self.b = a, b
        self.source = a + OPEN + b + CLOSE
        self.target = OPEN + b + a + CLOSE

    def forward(self, word: str) -> str:
        if not word:
            return word
        if not self.b:
            last = split_atoms(word)[-1]
            head = word[:len(word) - len(last)]
            return OPEN + head + CLOSE + self.forward(last[1:-1])
        if not contains_word(word, self.b):
            return word
        partner = match_positions(word)
        inner = self.b[1:-1]
        s = next(
            x for x in range(len(word) - 1, -1, -1)
            if word[x] == OPEN and contains_word(word[x + 1:partner[x]], inner)
        )
        levels, centre = _levels(word, s, partner)
        p = len(levels) - 1
        current = OPEN + centre + CLOSE
        for level in range(p, 0, -1):
            m = p - level + 1
            current = OPEN + levels[p - m][1] + current + levels[p - m][0] + CLOSE
        # innermost level: M to the left of the arch, B_0 to its right
        return levels[p][1] + current + self.forward(levels[p][0])

    def inverse(self, word: str) -> str:
        if not word:
            return word
        if not self.b:
            first = split_atoms(word)[0]
            return first[1:-1] + OPEN + self.inverse(word[len(first):]) + CLOSE
        if not contains_word(word, self.b):
            return word
        partner = match_positions(word)
        inner = self.b[1:-1]
        t = next(
            y for y in range(len(word))
            if word[y] == CLOSE and contains_word(word[partner[y] + 1:y], inner)
        )
        levels, centre = _levels(word, partner[t], partner)
        p = len(levels) - 1
        # level l > 0 of the image holds (B_{p-l+1}, A_{p-l+1})
        b_parts = {0: levels[0][0]}
        a_parts = {}
        for level in range(1, p + 1):
            b_parts[p - level + 1] = levels[level][0]
            a_parts[p - level + 1] = levels[level][1]
        current = self.inverse(levels[0][1]) + OPEN + centre + CLOSE + b_parts[0]
        for level in range(p - 1, -1, -1):
            current = a_parts[p - level] + OPEN + current + CLOSE + b_parts[p - level]
        return current
