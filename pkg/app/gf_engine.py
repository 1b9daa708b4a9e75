"""
Avoider generating functions.

For a pattern A, F_A = sum_n |Av_n(A)| t^n is computed from the atom
decomposition of A:

* a single atom ``(A')`` gives F = 1/(1 - t F_{A'});
* a sequence of atoms a_1 .. a_m (m >= 2) gives the linear equation
  F (1 - t F_{A_1} - t F_{a_m}) = 1 + t (F_{a_1} - F_{A_1}) F_{a_2..a_m}
    + t sum_{k=2}^{m-1} (F_{a_1..a_k} - F_{a_1..a_{k-1}}) F_{a_k..a_m}
    - t F_{a_1..a_{m-1}} F_{a_m},
  where A_1 is the contents of a_1.

Every right-hand side only involves strictly smaller patterns, so the engine
recurses with a memo keyed by pattern word.
"""

import threading
from typing import Dict, List, Optional

from .containment import count_avoiders
from .series import TruncatedSeries
from .structures.arches import Structure, split_atoms, word_of
from .utils.logging import get_logger

logger = get_logger(__name__)


class EmptyPatternError(ValueError):
    """Raised when asked for the avoiders of the empty pattern."""


def gf_atom_wrap(f: TruncatedSeries) -> TruncatedSeries:
    """F of the atom over a pattern with series ``f``."""
    return (1 - f.shift()).reciprocal()


def gf_atom_unwrap(f: TruncatedSeries) -> TruncatedSeries:
    """Inverse of :func:`gf_atom_wrap`: (F - 1)/(t F), exact to one degree less."""
    if f.cap < 1 or f[0] != 1:
        raise ValueError("expected the series of an atom pattern, exact to degree 1 or more")
    numerator = TruncatedSeries((f - 1).coeffs[1:])
    return numerator * f.truncate(f.cap - 1).reciprocal()


def gf_case4_closed_form(
    fa: TruncatedSeries, fb: TruncatedSeries, fc: TruncatedSeries, cap: int
) -> TruncatedSeries:
    """F of the pattern a b c from the series of three atoms."""
    fa, fb, fc = fa.truncate(cap), fb.truncate(cap), fc.truncate(cap)
    abc = fa * fb * fc
    numerator = 1 - (fa * fb + fb * fc + fc * fa - abc).shift()
    denominator = 1 - (fa + fb + fc).shift() + abc.shift(2)
    return numerator * denominator.reciprocal()


class GFEngine:
    """Memoizing solver for avoider series; safe to share between threads."""

    def __init__(self) -> None:
        self._memo: Dict[str, TruncatedSeries] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def gf_avoid(self, pattern: Structure, cap: int) -> TruncatedSeries:
        word = word_of(pattern)
        if not word:
            raise EmptyPatternError("every system contains the empty pattern")
        if cap < 0:
            raise ValueError("cap must be non-negative")
        result = self._series(word, cap)
        with self._lock:
            size, hits, misses = len(self._memo), self.hits, self.misses
        logger.debug(f"Memo holds {size} patterns ({hits} hits, {misses} misses)")
        return result

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()
            self.hits = self.misses = 0

    def _series(self, word: str, cap: int) -> TruncatedSeries:
        if not word:
            return TruncatedSeries.zero(cap)
        with self._lock:
            cached = self._memo.get(word)
            if cached is not None and cached.cap >= cap:
                self.hits += 1
            else:
                cached = None
                self.misses += 1
        if cached is not None:
            return cached if cached.cap == cap else cached.truncate(cap)
        atoms = split_atoms(word)
        if len(atoms) == 1:
            result = gf_atom_wrap(self._series(word[1:-1], cap))
        else:
            result = self._solve(atoms, cap)
        with self._lock:
            existing = self._memo.get(word)
            if existing is None or existing.cap < cap:
                self._memo[word] = result
        return result

    def _solve(self, atoms: List[str], cap: int) -> TruncatedSeries:
        m = len(atoms)

        def f(k_from: int, k_to: int) -> TruncatedSeries:
            # series of the atoms a_{k_from} .. a_{k_to}, 1-based inclusive
            return self._series("".join(atoms[k_from - 1:k_to]), cap)

        f_contents = self._series(atoms[0][1:-1], cap)
        f_last = f(m, m)
        rhs = 1 + ((f(1, 1) - f_contents) * f(2, m)).shift()
        for k in range(2, m):
            rhs = rhs + ((f(1, k) - f(1, k - 1)) * f(k, m)).shift()
        rhs = rhs - (f(1, m - 1) * f_last).shift()
        denominator = 1 - f_contents.shift() - f_last.shift()
        return rhs * denominator.reciprocal()


default_engine = GFEngine()


def gf_avoid(pattern: Structure, cap: int, engine: Optional[GFEngine] = None) -> TruncatedSeries:
    return (engine or default_engine).gf_avoid(pattern, cap)


def gf_brute(pattern: Structure, cap: int) -> TruncatedSeries:
    """Avoider series by counting enumerated systems; the reference for :func:`gf_avoid`."""
    word = word_of(pattern)
    if not word:
        raise EmptyPatternError("every system contains the empty pattern")
    logger.debug(f"Counting avoiders of {word} up to size {cap}")
    return TruncatedSeries(tuple(count_avoiders(word, n) for n in range(cap + 1)))
