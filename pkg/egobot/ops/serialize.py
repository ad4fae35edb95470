from __future__ import annotations
import csv
import io
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from ..core.errors import EdgeListError
from ..core.graph import DirectedGraph, edge_list_lines
from ..core.undefined import format_value


def ensure_writable(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)


def _umask() -> int:
    mask = os.umask(0)
    os.umask(mask)
    return mask


def write_bytes_atomic(path: str | Path, payload: bytes) -> Path:
    """Write via a temp file in the target directory, then rename over."""

    path = Path(path)
    ensure_writable(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        # mkstemp creates 0600; give the result the mode open() would
        os.chmod(tmp, 0o666 & ~_umask())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(x) for x in row])
    return buf.getvalue()


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    return write_bytes_atomic(path, to_csv(header, rows).encode("utf-8"))


def write_text(path: str | Path, text: str) -> Path:
    return write_bytes_atomic(path, text.encode("utf-8"))


def read_csv(path: str | Path) -> tuple[list[str], list[list[str]]]:
    try:
        with Path(path).open(newline="", encoding="utf-8-sig") as fh:
            rows = [row for row in csv.reader(fh) if row]
    except UnicodeDecodeError as exc:
        raise EdgeListError(f"not UTF-8 text ({exc.reason} at byte {exc.start})", path=str(path)) from None
    if not rows:
        raise EdgeListError("empty CSV file", path=str(path))
    return rows[0], rows[1:]


def write_edge_list(g: DirectedGraph, path: str | Path) -> Path:
    lines = edge_list_lines(g)
    return write_csv(path, lines[0], lines[1:])


def write_labels(labels: Mapping[str, int], path: str | Path) -> Path:
    """``user_id,label`` rows in id order."""

    return write_csv(path, ("user_id", "label"), ((i, labels[i]) for i in sorted(labels)))
