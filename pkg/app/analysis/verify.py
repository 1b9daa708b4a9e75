"""
Verification harnesses.

Each harness recomputes a claimed property over a census (or a sample) and
returns a VerificationReport.  Sizes and degrees are parameters so the same
harness serves quick tests and long exhaustive runs.
"""

import random
from typing import List, Optional, Tuple

from ..cohorts.census import Census, cohort_census, largest_cohort
from ..cohorts.counting import cohort_count_series, main_cohort_size, motzkin_number, singleton_counts
from ..cohorts.forms import cohort_key, is_main_cohort, is_singleton_cohort
from ..gf_engine import GFEngine, default_engine
from ..series import TruncatedSeries, dominated_by, first_difference, h_truncation, rooted_tree_series, wide_tree_series
from ..state.census_cache import CensusCache
from ..structures.arches import ArchSystem, arch_over, catalan_number, iter_words, nest, unrank
from ..utils.logging import get_logger
from .reports import VerificationReport, Witness

logger = get_logger(__name__)

DEFAULT_SEED = 20240611


def _census(n: int, cache: Optional[CensusCache], keep_members: bool = False) -> Census:
    return cohort_census(n, keep_members=keep_members, cache=cache)


def verify_refinement(n: int, cap: Optional[int] = None, engine: Optional[GFEngine] = None) -> VerificationReport:
    """All members of each size-``n`` cohort have the same avoider series to ``cap`` (default 2n)."""
    engine = engine or default_engine
    cap = 2 * n if cap is None else cap
    report = VerificationReport(check="refinement", scope={"n": n, "degree": cap})
    census = cohort_census(n, keep_members=True)
    for key in census.sorted_keys():
        members = census[key].members or []
        reference = engine.gf_avoid(members[0], cap)
        for member in members[1:]:
            report.checks_run += 1
            series = engine.gf_avoid(member, cap)
            if series != reference:
                report.fail(Witness(
                    first=members[0].word,
                    second=member.word,
                    degree=first_difference(reference, series),
                    note=f"cohort {key}",
                ))
    logger.info(f"Refinement at n={n}: {report.checks_run} members compared")
    return report.finalize()


def verify_strong_conjecture(
    n: int, cache: Optional[CensusCache] = None, engine: Optional[GFEngine] = None
) -> VerificationReport:
    """Distinct cohorts of size ``n`` already differ in their series by degree 2n-2."""
    engine = engine or default_engine
    cap = max(2 * n - 2, 0)
    report = VerificationReport(check="strong", scope={"n": n, "degree": cap})
    census = _census(n, cache)
    rows: List[Tuple[Tuple[int, ...], str]] = []
    for key in census.sorted_keys():
        rep = census[key].representative
        rows.append((engine.gf_avoid(rep, cap).coeffs, rep.word))
    rows.sort()
    deepest = -1
    for (left, left_rep), (right, right_rep) in zip(rows, rows[1:]):
        report.checks_run += 1
        degree = first_difference(TruncatedSeries(left), TruncatedSeries(right))
        if degree is None:
            report.fail(Witness(first=left_rep, second=right_rep, degree=cap, note="series agree to the cap"))
        else:
            deepest = max(deepest, degree)
    report.details["cohorts"] = len(rows)
    report.details["max_first_difference"] = deepest
    return report.finalize()


def counterexample_family(n: int) -> Tuple[ArchSystem, ArchSystem]:
    """
    Two systems of size ``n`` in different cohorts whose series agree below degree 2n-2.

    With C the atom over n-4 unit atoms: A = ⌢(C()()) and B = ()()⌢(C).
    """
    if n < 4:
        raise ValueError("family is defined for n >= 4")
    c = arch_over("()" * (n - 4)).word
    return arch_over(c + "()()"), ArchSystem("()()" + arch_over(c).word)


def verify_family(n: int, engine: Optional[GFEngine] = None) -> VerificationReport:
    engine = engine or default_engine
    a, b = counterexample_family(n)
    cap = 2 * n - 2
    report = VerificationReport(check="family", scope={"n": n, "degree": cap})
    fa, fb = engine.gf_avoid(a, cap), engine.gf_avoid(b, cap)
    degree = first_difference(fa, fb)
    report.checks_run = 3
    report.details.update({
        "A": a.word,
        "B": b.word,
        "first_difference": degree,
        "A_coefficient": str(fa[cap]),
        "B_coefficient": str(fb[cap]),
    })
    if cohort_key(a) == cohort_key(b):
        report.fail(Witness(first=a.word, second=b.word, note="family members share a cohort"))
    if degree != cap:
        report.fail(Witness(first=a.word, second=b.word, degree=degree, note=f"series first differ at {degree}"))
    elif fa[cap] <= fb[cap]:
        report.fail(Witness(first=a.word, second=b.word, degree=cap, note="A does not have more avoiders"))
    return report.finalize()


def _random_system(rng: random.Random, size: int) -> ArchSystem:
    return unrank(size, rng.randrange(catalan_number(size)))


def check_comparison_rules(
    n: int,
    cap: int,
    samples: int = 40,
    seed: int = DEFAULT_SEED,
    engine: Optional[GFEngine] = None,
) -> VerificationReport:
    """
    Spot-check the comparison rules on random patterns of size up to ``n``.

    * A⌢(b) <= ⌢(bA), strict unless A is an atom;
    * F_A <= F_B implies F_⌢A <= F_⌢B;
    * F_A <= F_b (b an atom) implies F_{PAQ} <= F_{PbQ}.

    Only weak violations fail the report; strictness is recorded.
    """
    if n < 2:
        raise ValueError("comparison rules need patterns of size 2 or more")
    engine = engine or default_engine
    rng = random.Random(seed)
    report = VerificationReport(
        check="comparison-rules", scope={"n": n, "degree": cap, "samples": samples, "seed": seed}
    )
    not_strict = 0
    for _ in range(samples):
        b_size = rng.randrange(0, n - 1)
        a = _random_system(rng, n - 1 - b_size)
        b = arch_over(_random_system(rng, b_size - 1)).word if b_size else ""
        low, high = a.word + "(" + b + ")", "(" + b + a.word + ")"
        report.checks_run += 1
        weak, strict = dominated_by(engine.gf_avoid(low, cap), engine.gf_avoid(high, cap))
        if not weak:
            report.fail(Witness(first=low, second=high, note="A⌢(b) has more avoiders than ⌢(bA)"))
        elif strict is None and not a.is_atom:
            not_strict += 1

    for _ in range(samples):
        size = rng.randrange(1, n)
        x, y = _random_system(rng, size), _random_system(rng, size)
        fx, fy = engine.gf_avoid(x, cap), engine.gf_avoid(y, cap)
        if not dominated_by(fx, fy)[0]:
            x, y, fx, fy = y, x, fy, fx
            if not dominated_by(fx, fy)[0]:
                continue
        report.checks_run += 1
        if not dominated_by(engine.gf_avoid(arch_over(x), cap), engine.gf_avoid(arch_over(y), cap))[0]:
            report.fail(Witness(first=arch_over(x).word, second=arch_over(y).word, note="arch-over broke the order"))

    for _ in range(samples):
        size = rng.randrange(1, max(n - 1, 2))
        b = arch_over(_random_system(rng, size - 1))
        x = _random_system(rng, size)
        fx, fb = engine.gf_avoid(x, cap), engine.gf_avoid(b, cap)
        if not dominated_by(fx, fb)[0]:
            continue
        rest = max(n - size, 0)
        split = rng.randrange(0, rest + 1)
        p, q = _random_system(rng, split).word, _random_system(rng, rest - split).word
        report.checks_run += 1
        if not dominated_by(engine.gf_avoid(p + x.word + q, cap), engine.gf_avoid(p + b.word + q, cap))[0]:
            report.fail(Witness(first=p + x.word + q, second=p + b.word + q, note="substitution broke the order"))

    report.details["non_strict_sequence_cases"] = not_strict
    return report.finalize()


def verify_dominance(
    n: int,
    cap: int = 24,
    samples: int = 40,
    seed: int = DEFAULT_SEED,
    cache: Optional[CensusCache] = None,
    engine: Optional[GFEngine] = None,
) -> VerificationReport:
    """
    H_n dominates every size-``n`` cohort: equal for the main cohort, strictly
    larger somewhere for every other one.  The comparison rules are sampled too.
    """
    engine = engine or default_engine
    report = VerificationReport(check="dominance", scope={"n": n, "degree": cap})
    h = h_truncation(n, cap)
    census = _census(n, cache)
    strict_degrees = {}
    for key in census.sorted_keys():
        rep = census[key].representative
        series = engine.gf_avoid(rep, cap)
        weak, strict = dominated_by(series, h)
        report.checks_run += 1
        if key.is_main:
            if series != h:
                report.fail(Witness(first=rep.word, degree=first_difference(series, h), note="main cohort differs from H_n"))
        elif not weak:
            report.fail(Witness(first=rep.word, note="series exceeds H_n"))
        elif strict is None:
            report.fail(Witness(first=rep.word, degree=cap, note="series equals H_n to the cap"))
        else:
            strict_degrees[rep.word] = strict
    report.details["latest_strict_degree"] = max(strict_degrees.values(), default=None)

    if n >= 2:
        rules = check_comparison_rules(n, cap, samples=samples, seed=seed, engine=engine)
        report.checks_run += rules.checks_run
        report.details["rules"] = rules.details
        for witness in rules.witnesses:
            report.fail(witness)
    return report.finalize()


def verify_main_largest(n: int, cache: Optional[CensusCache] = None) -> VerificationReport:
    """For each size 3..n the main cohort is the unique largest one."""
    report = VerificationReport(check="main-largest", scope={"n": n})
    for m in range(3, n + 1):
        census = _census(m, cache)
        report.checks_run += 1
        top_key = largest_cohort(census)
        top_count = census[top_key].count
        ties = sum(1 for entry in census.entries.values() if entry.count == top_count)
        if not top_key.is_main or ties > 1:
            report.fail(Witness(first=census[top_key].representative.word, degree=m, note="main cohort is not uniquely largest"))
    return report.finalize()


def verify_count_bounds(n: int) -> VerificationReport:
    """Wide trees <= cohorts <= rooted trees (on n + 1 nodes) for each size up to ``n``."""
    report = VerificationReport(check="bounds", scope={"n": n})
    cohorts = cohort_count_series(n + 1)
    lower, upper = wide_tree_series(n + 1), rooted_tree_series(n + 1)
    for m in range(1, n + 1):
        report.checks_run += 1
        if not lower[m + 1] <= cohorts[m + 1] <= upper[m + 1]:
            report.fail(Witness(
                first=str(cohorts[m + 1]),
                degree=m,
                note=f"outside [{lower[m + 1]}, {upper[m + 1]}]",
            ))
    return report.finalize()


def main_members(n: int):
    for word in iter_words(n):
        if is_main_cohort(word):
            yield ArchSystem(word)


def verify_main_cohort(
    n: int, check_series: bool = True, series_up_to: int = 9, engine: Optional[GFEngine] = None
) -> VerificationReport:
    """
    Main cohort sizes are Motzkin numbers, and (up to ``series_up_to``) every
    member's avoider series is H_m to degree 2m.
    """
    engine = engine or default_engine
    report = VerificationReport(check="motzkin", scope={"n": n})
    sizes = {}
    for m in range(1, n + 1):
        members = list(main_members(m))
        report.checks_run += 1
        sizes[m] = len(members)
        if len(members) != motzkin_number(m) or len(members) != main_cohort_size(m):
            report.fail(Witness(first=nest(m).word, degree=m, note=f"{len(members)} members, expected {motzkin_number(m)}"))
        if check_series and m <= series_up_to:
            h = h_truncation(m, 2 * m)
            for member in members:
                report.checks_run += 1
                series = engine.gf_avoid(member, 2 * m)
                if series != h:
                    report.fail(Witness(first=member.word, degree=first_difference(series, h), note="series differs from H_m"))
    report.details["sizes"] = {str(m): str(count) for m, count in sizes.items()}
    return report.finalize()


def verify_singletons(n: int, cache: Optional[CensusCache] = None) -> VerificationReport:
    """Singleton counts from the recurrences agree with the census, size by size."""
    report = VerificationReport(check="singletons", scope={"n": n})
    for m in range(1, n + 1):
        census = _census(m, cache)
        lonely = [key for key, entry in census.items() if entry.count == 1]
        expected = singleton_counts(m).total
        report.checks_run += 1
        if len(lonely) != expected:
            report.fail(Witness(first=nest(m).word, degree=m, note=f"census has {len(lonely)} singletons, recurrence {expected}"))
        for key, entry in census.items():
            if is_singleton_cohort(entry.representative) != (entry.count == 1):
                report.fail(Witness(first=entry.representative.word, degree=m, note="singleton test disagrees with census"))
    return report.finalize()
