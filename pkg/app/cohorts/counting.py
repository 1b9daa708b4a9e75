"""
Counting cohorts without enumerating systems.

Cohorts of size n correspond to atomic forms of size n + 1.  With A the
series of atomic forms and B = M>=3(A) the series of large forms by contents
size, an atomic form is a single atom, an atom over an atomic form, a multiset
of at least two leaves hung from a chain (a leaf being t B), or a lone large
form:

    A = t + t A + M>=2(t B) + B

where M is the multiset operator.  Both series are built degree by degree,
reading M>=2 and M>=3 off online Euler transforms (the whole-series versions
are series.mset_ge2 and series.mset_ge3).
"""

from math import comb
from typing import List, NamedTuple, Tuple

from ..series import EulerTransform, TruncatedSeries, motzkin_atom_series


def atomic_form_series(cap: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """The series A (atomic forms by size) and B (large forms by contents size) to ``cap``."""
    a = [0] * (cap + 1)
    b = [0] * (cap + 1)
    over_a = EulerTransform()
    over_leaves = EulerTransform()
    over_leaves.push(0)  # t B has no degree-1 term
    for n in range(1, cap + 1):
        b[n] = over_a.ge3(n - 1)
        over_leaves.push(b[n])
        a[n] = (1 if n == 1 else 0) + a[n - 1] + over_leaves.ge2(n + 1) + b[n]
        over_a.push(a[n])
    return TruncatedSeries(tuple(a)), TruncatedSeries(tuple(b))


def cohort_count_series(cap: int) -> TruncatedSeries:
    """Coefficient n counts atomic forms of size n, i.e. cohorts of size n - 1."""
    return atomic_form_series(cap)[0]


def cohort_count(n: int) -> int:
    return cohort_count_series(n + 1)[n + 1]


def motzkin_number(n: int) -> int:
    return sum(comb(n, 2 * k) * comb(2 * k, k) // (k + 1) for k in range(n // 2 + 1))


def main_cohort_size(n: int) -> int:
    """Members of the main cohort of size n (the cohort of nest(n))."""
    if n < 1:
        raise ValueError("main cohort is defined for n >= 1")
    return motzkin_atom_series(n + 1)[n + 1]


class SingletonCounts(NamedTuple):
    one_atom: int
    two_atoms: int
    many_atoms: int

    @property
    def total(self) -> int:
        return self.one_atom + self.two_atoms + self.many_atoms


def _singleton_tables(n: int) -> Tuple[List[int], List[int], List[int], List[int]]:
    s1 = [0] * (n + 1)
    s2 = [0] * (n + 1)
    s3 = [0] * (n + 1)
    lonely = [0] * (n + 1)  # atoms of size m alone in their cohort
    for m in range(1, n + 1):
        lonely[m] = 1 if m == 1 else s1[m - 1] + s2[m - 1] + s3[m - 1]
        s1[m] = 1 if m == 1 else s3[m - 1]
        s2[m] = s3[m // 2 - 1] if m % 2 == 0 and m >= 2 else 0
        s3[m] = sum(lonely[m // k] for k in range(3, m + 1) if m % k == 0)
    return s1, s2, s3, lonely


def singleton_counts(n: int) -> SingletonCounts:
    """Singleton cohorts of size n, split by the number of atoms."""
    if n < 1:
        raise ValueError("singleton counts are defined for n >= 1")
    s1, s2, s3, _ = _singleton_tables(n)
    return SingletonCounts(s1[n], s2[n], s3[n])


def atom_singleton_counts(n: int, from_many_atoms: bool = False) -> List[int]:
    """
    Atoms of sizes 0..n that are alone in their cohort.

    With ``from_many_atoms`` the counts for sizes 3 and up are derived from
    the many-atom singleton counts alone, which must give the same numbers.
    """
    s1, s2, s3, lonely = _singleton_tables(n)
    if not from_many_atoms:
        return lonely
    derived = lonely[:3]
    for m in range(3, n + 1):
        value = s3[m - 1] + s3[m - 2]
        if m % 2:
            value += s3[(m - 3) // 2]
        derived.append(value)
    return derived
