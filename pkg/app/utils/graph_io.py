"""Edge-list text codec for max-cut instances (1-based vertex indices on disk)."""
import logging
import math
from pathlib import Path
from typing import Optional

from app.models import Graph

logger = logging.getLogger(__name__)


class GraphParseError(ValueError):
    """Malformed edge-list text; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((line_no, stripped.split()))
    return lines


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(line_no, f"expected an integer, got {token!r}") from None


def _parse_weight(token: str, line_no: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise GraphParseError(line_no, f"expected a weight, got {token!r}") from None
    if not math.isfinite(w):
        raise GraphParseError(line_no, f"weight must be finite, got {token!r}")
    return w


def _leading_ints(fields: list[str]) -> list[int]:
    out = []
    for tok in fields[:2]:
        try:
            out.append(int(tok))
        except ValueError:
            pass
    return out


def _is_header(lines: list[tuple[int, list[str]]]) -> bool:
    """A leading two-field line is a header iff its edge count matches the rest.

    A first line that can only be a header (every later index fits under its
    n) but announces the wrong edge count is an error.
    """
    if not lines or len(lines[0][1]) != 2:
        return False
    line_no, fields = lines[0]
    try:
        n, m = (int(tok) for tok in fields)
    except ValueError:
        return False
    rest = len(lines) - 1
    if m == rest:
        return True
    if rest == 0 or n < 1:
        return False
    if all(index <= n for _, later in lines[1:] for index in _leading_ints(later)):
        raise GraphParseError(line_no, f"header announces {m} edges but {rest} follow")
    return False


def parse_edge_list(text: str) -> Graph:
    """Parse "i j" / "i j w" lines with an optional "n m" header."""
    lines = _data_lines(text)
    n_header: Optional[int] = None
    if _is_header(lines):
        line_no, (n_tok, _) = lines[0]
        n_header = _parse_int(n_tok, line_no)
        if n_header < 1:
            raise GraphParseError(line_no, f"vertex count must be positive, got {n_header}")
        lines = lines[1:]

    edges = []
    seen: dict[tuple[int, int], int] = {}
    max_index = 0
    for line_no, fields in lines:
        if len(fields) not in (2, 3):
            raise GraphParseError(line_no, f"expected 'i j' or 'i j w', got {len(fields)} fields")
        i = _parse_int(fields[0], line_no)
        j = _parse_int(fields[1], line_no)
        w = _parse_weight(fields[2], line_no) if len(fields) == 3 else 1.0
        if i < 1 or j < 1:
            raise GraphParseError(line_no, "vertex indices start at 1")
        if i == j:
            raise GraphParseError(line_no, f"self-loop at vertex {i}")
        if n_header is not None and max(i, j) > n_header:
            raise GraphParseError(line_no, f"vertex {max(i, j)} exceeds header count {n_header}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphParseError(line_no, f"duplicate edge {key[0]} {key[1]} (first on line {seen[key]})")
        seen[key] = line_no
        max_index = max(max_index, i, j)
        edges.append((i - 1, j - 1, w))

    n = n_header if n_header is not None else max_index
    if n < 1:
        raise GraphParseError(0, "empty graph without a header")
    try:
        return Graph(n=n, edges=tuple(edges))
    except ValueError as e:
        raise GraphParseError(0, str(e)) from e


def format_weight(w: float) -> str:
    if float(w).is_integer():
        return str(int(w))
    return repr(float(w))


def write_edge_list(graph: Graph) -> str:
    """Serialize as "n m" then sorted 1-based "i j w" lines."""
    out = [f"{graph.n} {graph.num_edges}"]
    for i, j, w in graph.edges:
        out.append(f"{i + 1} {j + 1} {format_weight(w)}")
    return "\n".join(out)


def read_graph_file(file_path: Path) -> Graph:
    """Read an edge-list file."""
    try:
        text = Path(file_path).read_text(encoding="utf-8")
    except OSError:
        logger.exception(f"Failed to read {file_path}")
        raise
    graph = parse_edge_list(text)
    logger.info(f"Read graph from {file_path}: n={graph.n}, |E|={graph.num_edges}")
    return graph


def write_graph_file(graph: Graph, file_path: Path) -> Path:
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(write_edge_list(graph) + "\n", encoding="utf-8")
    logger.info(f"Wrote graph to {file_path}: n={graph.n}, |E|={graph.num_edges}")
    return file_path
