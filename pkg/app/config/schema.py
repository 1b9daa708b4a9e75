from pydantic import BaseModel, Field
from typing import List, Optional
from pathlib import Path
import os


class CacheConfig(BaseModel):
    dir: Optional[str] = None  # overridden by --cache and CATALAN_COHORTS_CACHE


class CensusConfig(BaseModel):
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=100_000, ge=1)
    long_running_from: int = 14


class VerificationConfig(BaseModel):
    """Defaults for the verification harnesses."""
    dominance_degree: int = 24
    host_margin: int = 5
    rule_samples: int = 40
    seed: int = 20240611


class AnalysisConfig(BaseModel):
    growth_window: int = 60
    radius_bracket: List[float] = Field(default_factory=lambda: [0.3, 0.5])


class LoggingConfig(BaseModel):
    level: str = "INFO"
    log_dir: Optional[str] = None


class GlobalConfig(BaseModel):
    cache: CacheConfig = Field(default_factory=CacheConfig)
    census: CensusConfig = Field(default_factory=CensusConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    def get_cache_dir(self, override: Optional[str] = None) -> str:
        """Get the census cache directory, with fallback logic."""
        if override:
            return override
        if os.getenv("CATALAN_COHORTS_CACHE"):
            return os.getenv("CATALAN_COHORTS_CACHE")
        if self.cache.dir:
            return self.cache.dir
        data_home = os.getenv("XDG_DATA_HOME") or str(Path.home() / ".local" / "share")
        return str(Path(data_home) / "catalan-cohorts")
