"""
On-disk cache for cohort censuses.

A finished census of size n lives in ``census-{n}.jsonl``: one JSON record per
cohort followed by a trailer that carries the cohort count, the total number
of systems (which must equal the Catalan number) and a digest of the record
lines.  While a census runs, finished rank chunks are appended to
``census-{n}.partial.jsonl`` so an interrupted run can resume.

Only one process writes a given file; the final file is written to a temporary
name and renamed into place.
"""
import os
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from ..structures.arches import catalan_number
from ..utils.hashing import hash_lines
from ..utils.logging import get_logger

logger = get_logger(__name__)


class CacheCorruptError(ValueError):
    """Raised when a finished census file fails its trailer checks."""


class CohortRecord(BaseModel):
    n: int
    key: str
    count: str
    rep: str
    gf: Optional[List[str]] = None


class CensusTrailer(BaseModel):
    n: int
    trailer: bool = True
    cohorts: int
    total: str
    digest: str


class ChunkEntry(BaseModel):
    key: str
    count: str
    rep: str


class ChunkRecord(BaseModel):
    n: int
    start: int
    stop: int
    entries: List[ChunkEntry] = Field(default_factory=list)


class CensusCache:
    """
    Census files under one cache directory.

    Args:
        directory: Cache directory; created on first write
    """

    def __init__(self, directory: str):
        self.directory = Path(directory)

    def final_path(self, n: int) -> Path:
        return self.directory / f"census-{n}.jsonl"

    def partial_path(self, n: int) -> Path:
        return self.directory / f"census-{n}.partial.jsonl"

    def load(self, n: int) -> Optional[List[CohortRecord]]:
        """
        Load a finished census.

        Returns:
            The cohort records, or None when no finished census is cached

        Raises:
            CacheCorruptError: If the trailer does not match the records
        """
        path = self.final_path(n)
        if not path.exists():
            return None
        lines = path.read_text(encoding="utf-8").splitlines()
        if not lines:
            logger.warning(f"Empty census file {path}, ignoring it")
            return None
        try:
            trailer = CensusTrailer.model_validate_json(lines[-1])
        except ValidationError:
            logger.warning(f"Census file {path} has no trailer, treating it as unfinished")
            return None

        body = lines[:-1]
        try:
            records = [CohortRecord.model_validate_json(line) for line in body]
        except ValidationError as e:
            raise CacheCorruptError(f"unreadable record in {path}: {e}") from e

        if trailer.n != n or trailer.total != str(catalan_number(n)):
            raise CacheCorruptError(f"trailer of {path} does not describe a size-{n} census")
        if trailer.cohorts != len(records):
            raise CacheCorruptError(f"{path} lists {len(records)} cohorts, trailer says {trailer.cohorts}")
        if sum(int(r.count) for r in records) != catalan_number(n):
            raise CacheCorruptError(f"cohort counts in {path} do not add up to the Catalan number")
        if hash_lines(body) != trailer.digest:
            raise CacheCorruptError(f"digest mismatch in {path}")
        logger.debug(f"Loaded {len(records)} cohorts of size {n} from {path}")
        return records

    def write_final(self, n: int, records: List[CohortRecord]) -> Path:
        """Write a finished census atomically and drop its partial file."""
        self.directory.mkdir(parents=True, exist_ok=True)
        body = [record.model_dump_json(exclude_none=True) for record in records]
        trailer = CensusTrailer(
            n=n,
            cohorts=len(records),
            total=str(sum(int(r.count) for r in records)),
            digest=hash_lines(body),
        )
        path = self.final_path(n)
        fd, tmp_name = tempfile.mkstemp(dir=self.directory, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                for line in body:
                    f.write(line + "\n")
                f.write(trailer.model_dump_json() + "\n")
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
        partial = self.partial_path(n)
        if partial.exists():
            partial.unlink()
        logger.info(f"Wrote census of size {n} ({len(records)} cohorts) to {path}")
        return path

    def completed_chunks(self, n: int) -> Dict[Tuple[int, int], ChunkRecord]:
        """Chunks already recorded for an unfinished census; a torn last line is skipped."""
        path = self.partial_path(n)
        chunks: Dict[Tuple[int, int], ChunkRecord] = {}
        if not path.exists():
            return chunks
        with open(path, encoding="utf-8") as f:
            for line in f:
                try:
                    record = ChunkRecord.model_validate_json(line)
                except ValidationError:
                    logger.warning(f"Skipping unreadable chunk record in {path}")
                    continue
                if record.n == n:
                    chunks[(record.start, record.stop)] = record
        return chunks

    def append_chunk(self, record: ChunkRecord) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        with open(self.partial_path(record.n), "a", encoding="utf-8") as f:
            f.write(record.model_dump_json() + "\n")
            f.flush()
            os.fsync(f.fileno())
