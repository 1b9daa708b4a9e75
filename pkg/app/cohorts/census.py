"""
Cohort census: every system of one size, grouped by cohort key.

The rank range ``[0, Cat_n)`` is cut into chunks that are counted
independently, serially or in a process pool, and merged in rank order: counts
add up and each cohort keeps the representative of lowest rank.  With a cache,
finished chunks are recorded as they complete and the merged census is stored
once the whole range is done.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..gf_engine import GFEngine, default_engine
from ..series import TruncatedSeries
from ..state.census_cache import CensusCache, ChunkEntry, ChunkRecord, CohortRecord
from ..structures.arches import ArchSystem, catalan_number, iter_words
from ..utils.logging import get_logger
from .forms import CohortKey, cohort_key, parse_key

logger = get_logger(__name__)

DEFAULT_CHUNK_SIZE = 100_000


@dataclass
class CensusEntry:
    count: int
    representative: ArchSystem
    members: Optional[List[ArchSystem]] = None
    gf: Optional[TruncatedSeries] = None


@dataclass
class Census:
    n: int
    entries: Dict[CohortKey, CensusEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CohortKey]:
        return iter(self.entries)

    def __getitem__(self, key: CohortKey) -> CensusEntry:
        return self.entries[key]

    def items(self):
        return self.entries.items()

    @property
    def total(self) -> int:
        return sum(entry.count for entry in self.entries.values())

    def sorted_keys(self) -> List[CohortKey]:
        return sorted(self.entries)

    def main_entries(self) -> List[Tuple[CohortKey, CensusEntry]]:
        return [(key, entry) for key, entry in self.entries.items() if key.is_main]


def _chunks(n: int, chunk_size: int) -> List[Tuple[int, int]]:
    total = catalan_number(n)
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def census_chunk(n: int, start: int, stop: int, keep_members: bool = False) -> Dict[CohortKey, CensusEntry]:
    """Census of the systems with rank in ``[start, stop)``."""
    entries: Dict[CohortKey, CensusEntry] = {}
    for word in iter_words(n, start, stop):
        key = cohort_key(word)
        entry = entries.get(key)
        if entry is None:
            system = ArchSystem(word)
            entries[key] = CensusEntry(1, system, [system] if keep_members else None)
        else:
            entry.count += 1
            if keep_members:
                entry.members.append(ArchSystem(word))
    return entries


def _merge(into: Dict[CohortKey, CensusEntry], chunk: Dict[CohortKey, CensusEntry]) -> None:
    # chunks arrive in rank order, so the first representative seen is the lowest
    for key, entry in chunk.items():
        existing = into.get(key)
        if existing is None:
            into[key] = entry
        else:
            existing.count += entry.count
            if existing.members is not None and entry.members is not None:
                existing.members.extend(entry.members)


def _to_chunk_record(n: int, start: int, stop: int, chunk: Dict[CohortKey, CensusEntry]) -> ChunkRecord:
    return ChunkRecord(
        n=n,
        start=start,
        stop=stop,
        entries=[ChunkEntry(key=str(k), count=str(e.count), rep=e.representative.word) for k, e in chunk.items()],
    )


def _from_chunk_record(record: ChunkRecord) -> Dict[CohortKey, CensusEntry]:
    return {
        parse_key(entry.key): CensusEntry(int(entry.count), ArchSystem(entry.rep))
        for entry in record.entries
    }


def _from_records(n: int, records: List[CohortRecord]) -> Census:
    census = Census(n)
    for record in records:
        gf = TruncatedSeries.from_json(record.gf) if record.gf else None
        census.entries[parse_key(record.key)] = CensusEntry(int(record.count), ArchSystem(record.rep), gf=gf)
    return census


def _to_records(census: Census) -> List[CohortRecord]:
    return [
        CohortRecord(
            n=census.n,
            key=str(key),
            count=str(census[key].count),
            rep=census[key].representative.word,
            gf=census[key].gf.to_json() if census[key].gf is not None else None,
        )
        for key in census.sorted_keys()
    ]


def cohort_census(
    n: int,
    keep_members: bool = False,
    workers: int = 1,
    cache: Optional[CensusCache] = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> Census:
    """
    Group all size-``n`` systems by cohort.

    Args:
        n: System size
        keep_members: Keep every member of every cohort (bypasses the cache)
        workers: Worker processes; 1 counts in this process
        cache: Optional cache to read a finished census from and record progress to
        chunk_size: Ranks per chunk

    Returns:
        The census, whose counts add up to the Catalan number of ``n``
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    if keep_members:
        cache = None
    if cache is not None:
        records = cache.load(n)
        if records is not None:
            logger.info(f"Census of size {n} read from cache ({len(records)} cohorts)")
            return _from_records(n, records)

    chunks = _chunks(n, chunk_size)
    done = cache.completed_chunks(n) if cache is not None else {}
    pending = [c for c in chunks if c not in done]
    if done:
        logger.info(f"Resuming census of size {n}: {len(chunks) - len(pending)} of {len(chunks)} chunks done")

    results: Dict[Tuple[int, int], Dict[CohortKey, CensusEntry]] = {
        span: _from_chunk_record(record) for span, record in done.items() if span in chunks
    }

    def record(span: Tuple[int, int], chunk: Dict[CohortKey, CensusEntry]) -> None:
        results[span] = chunk
        if cache is not None:
            cache.append_chunk(_to_chunk_record(n, span[0], span[1], chunk))
        logger.debug(f"Census {n}: chunk {span[0]}..{span[1]} gave {len(chunk)} cohorts")

    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [(span, pool.submit(census_chunk, n, span[0], span[1], keep_members)) for span in pending]
            for span, future in futures:
                record(span, future.result())
    else:
        for span in pending:
            record(span, census_chunk(n, span[0], span[1], keep_members))

    census = Census(n)
    for span in chunks:
        _merge(census.entries, results[span])

    if census.total != catalan_number(n):
        raise RuntimeError(f"census of size {n} counted {census.total} systems")
    logger.info(f"Census of size {n}: {len(census)} cohorts over {census.total} systems")

    if cache is not None:
        cache.write_final(n, _to_records(census))
    return census


def largest_cohort(census: Census) -> CohortKey:
    """The cohort with the most members; ties go to the smaller key."""
    return min(census.entries, key=lambda k: (-census[k].count, k.form.sort_key))


def attach_series(
    census: Census,
    degree: int,
    cache: Optional[CensusCache] = None,
    engine: Optional[GFEngine] = None,
) -> Census:
    """
    Give every cohort the avoider series of its representative up to ``degree``.

    Members share that series, so one computation per cohort suffices.  With a
    cache the stored census is rewritten to carry the series.
    """
    engine = engine or default_engine
    computed = 0
    for entry in census.entries.values():
        if entry.gf is None or entry.gf.cap != degree:
            entry.gf = engine.gf_avoid(entry.representative, degree)
            computed += 1
    logger.info(f"Census {census.n}: {computed} of {len(census)} cohort series computed to degree {degree}")
    if cache is not None and computed:
        cache.write_final(census.n, _to_records(census))
    return census
