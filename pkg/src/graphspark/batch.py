"""Per-line batch processing with error isolation."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .connectivity import vertex_connectivity
from .errors import GraphSparkError
from .families import generate, looks_like_family, parse_family
from .forts import fort_sequence, spark
from .graph import Graph, duplicate_vertices
from .graph6 import parse_graph6


def parse_graph_text(text: str) -> Graph:
    """A graph from either a family spec or a graph6 string."""
    if looks_like_family(text):
        return generate(parse_family(text))
    return parse_graph6(text)


def _spark(g: Graph, method: str = "branch_and_bound", **_) -> dict:
    return spark(g, method).to_dict()


def _forts(g: Graph, limit: int = 16, **_) -> dict:
    seq = fort_sequence(g, limit=limit)
    return {"n": g.n, "sequence": list(seq.counts)}


def _kappa(g: Graph, **_) -> dict:
    return {"n": g.n, "kappa": vertex_connectivity(g)}


def _duplicates(g: Graph, **_) -> dict:
    pair = duplicate_vertices(g)
    return {"duplicates": None if pair is None else list(pair)}


COMMANDS: dict[str, Callable[..., dict]] = {
    "spark": _spark,
    "forts": _forts,
    "kappa": _kappa,
    "duplicates": _duplicates,
}


def read_lines(path: str | Path) -> list[str]:
    return [line.strip() for line in Path(path).read_text().splitlines() if line.strip()]


def run_batch(command: str, lines: Iterable[str], **options) -> Iterator[dict]:
    """One record per input line, in input order; failures become
    ``{"line", "input", "error"}`` records and processing continues."""
    fn = COMMANDS[command]
    for i, text in enumerate(lines, 1):
        record = {"line": i, "input": text}
        try:
            record.update(fn(parse_graph_text(text), **options))
        except (GraphSparkError, ValueError) as exc:
            record["error"] = str(exc)
        yield record


def records_to_json_lines(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r) + "\n" for r in records)


def records_to_csv(records: list[dict]) -> str:
    """Flatten records; a ``sequence`` list becomes ``s2, s3, ...`` columns."""
    flat = []
    width = 0
    for r in records:
        row = {k: v for k, v in r.items() if k != "sequence"}
        if "sequence" in r:
            for i, c in enumerate(r["sequence"]):
                row[f"s{i + 2}"] = c
            width = max(width, len(r["sequence"]))
        if isinstance(row.get("fort"), list):
            row["fort"] = " ".join(map(str, row["fort"]))
        if isinstance(row.get("duplicates"), list):
            row["duplicates"] = " ".join(map(str, row["duplicates"]))
        flat.append(row)
    counts = [f"s{i + 2}" for i in range(width)]
    header: list[str] = []
    for row in flat:
        header += [k for k in row if k not in header and k not in counts]
    header += counts
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue()
