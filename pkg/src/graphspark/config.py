"""Runtime settings from an optional ``key = value`` file and the environment.

Recognised keys (all optional)::

    threads = 4            # worker processes for verify suites
    seed = 0               # default seed for randomized suites
    fort_limit = 16        # largest order for exhaustive fort enumeration
    generic_limit = 6      # largest min-dimension for exhaustive minor checks
    spark_method = branch_and_bound   # or brute_force

Precedence: command-line flag, then ``GRAPHSPARK_THREADS``, then the file,
then the defaults above.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ParseError


@dataclass
class Settings:
    threads: int = 1
    seed: int = 0
    fort_limit: int = 16
    generic_limit: int = 6
    spark_method: str = "branch_and_bound"


def load_settings(path: str | Path | None = None) -> Settings:
    settings = Settings()
    types = {f.name: f.type for f in fields(Settings)}
    if path is not None:
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip().strip('"').strip("'")
            if not sep or key not in types:
                raise ParseError(f"{path}:{lineno}: unknown or malformed setting {raw.strip()!r}")
            try:
                setattr(settings, key, int(value) if types[key] in (int, "int") else value)
            except ValueError:
                raise ParseError(f"{path}:{lineno}: {key} expects an integer") from None
    env = os.environ.get("GRAPHSPARK_THREADS")
    if env:
        try:
            settings.threads = max(1, int(env))
        except ValueError:
            raise ParseError(f"GRAPHSPARK_THREADS must be an integer, got {env!r}") from None
    return settings
