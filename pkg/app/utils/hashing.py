import hashlib
from typing import Iterable


def hash_lines(lines: Iterable[str]) -> str:
    """Computes SHA256 over lines, each terminated by a newline."""
    sha256 = hashlib.sha256()
    for line in lines:
        sha256.update(line.encode("utf-8"))
        sha256.update(b"\n")
    return sha256.hexdigest()
