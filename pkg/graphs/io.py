"""DIMACS and SNAP edge-list readers, and a canonical DIMACS writer."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from graphs.graph import Graph

logger = logging.getLogger(__name__)

TextLike = Union[str, bytes]


class GraphFormatError(ValueError):
    """Malformed instance file; carries the offending 1-based line number.

    ``line_number`` is None for problems of the file as a whole.
    """

    def __init__(self, line_number: Optional[int], message: str):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number
        self.message = message


@dataclass
class ParsedGraph:
    """A parsed instance plus what normalisation dropped."""

    graph: Graph
    dropped: int = 0
    labels: List[int] = field(default_factory=list)


def _lines(text: TextLike):
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    for number, line in enumerate(text.splitlines(), start=1):
        yield number, line.strip()


def _to_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(line_number, f"non-integer token {token!r}") from None


def _build(n: int, raw_edges: List[Tuple[int, int]]) -> Tuple[Graph, int]:
    seen = set()
    edges = []
    dropped = 0
    for u, v in raw_edges:
        if u == v:
            dropped += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dropped += 1
            continue
        seen.add(key)
        edges.append(key)
    return Graph(n, edges), dropped


def parse_dimacs(text: TextLike) -> ParsedGraph:
    """Parse a DIMACS ``.col``/``.clq`` graph (``p edge n m`` + 1-based ``e u v``).

    Duplicate edges and self-loops are dropped and counted in ``dropped``.
    """
    n = None
    raw_edges: List[Tuple[int, int]] = []
    for number, line in _lines(text):
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(number, "duplicate problem line")
            if len(tokens) < 4:
                raise GraphFormatError(number, "problem line must read 'p edge <n> <m>'")
            n = _to_int(tokens[2], number)
            _to_int(tokens[3], number)
            if n < 0:
                raise GraphFormatError(number, "negative vertex count")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(number, "missing header: edge before 'p' line")
            if len(tokens) < 3:
                raise GraphFormatError(number, "edge line must read 'e <u> <v>'")
            u = _to_int(tokens[1], number)
            v = _to_int(tokens[2], number)
            for endpoint in (u, v):
                if not 1 <= endpoint <= n:
                    raise GraphFormatError(
                        number, f"vertex {endpoint} out of range 1..{n}"
                    )
            raw_edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(number, f"unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError(None, "missing header: no 'p edge' line")

    graph, dropped = _build(n, raw_edges)
    if dropped:
        logger.warning(f"DIMACS input: dropped {dropped} duplicate edges/self-loops")
    return ParsedGraph(graph=graph, dropped=dropped, labels=list(range(1, n + 1)))


def parse_edge_list(text: TextLike) -> ParsedGraph:
    """Parse a SNAP-style whitespace edge list with ``#`` comments.

    External ids are compacted to ``0..n-1`` in order of first appearance;
    ``labels[i]`` keeps the external id of vertex ``i``.
    """
    ids: Dict[int, int] = {}
    labels: List[int] = []
    raw_edges: List[Tuple[int, int]] = []

    def local(external: int) -> int:
        if external not in ids:
            ids[external] = len(labels)
            labels.append(external)
        return ids[external]

    for number, line in _lines(text):
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphFormatError(number, "edge line needs two vertex ids")
        u = _to_int(tokens[0], number)
        v = _to_int(tokens[1], number)
        if u < 0 or v < 0:
            raise GraphFormatError(number, "vertex ids must be nonnegative")
        raw_edges.append((local(u), local(v)))

    graph, dropped = _build(len(labels), raw_edges)
    if dropped:
        logger.warning(f"Edge list input: dropped {dropped} duplicate edges/self-loops")
    return ParsedGraph(graph=graph, dropped=dropped, labels=labels)


def write_dimacs(graph: Graph, comment: str = "") -> str:
    """Serialise ``graph`` as canonical DIMACS (sorted, 1-based, u < v)."""
    lines = [f"c {line}" for line in comment.splitlines()]
    lines.append(f"p edge {graph.n} {graph.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path], fmt: str = "dimacs") -> ParsedGraph:
    """Read an instance from disk; ``fmt`` is ``dimacs`` or ``edgelist``."""
    data = Path(path).read_bytes()
    if fmt == "dimacs":
        parsed = parse_dimacs(data)
    elif fmt == "edgelist":
        parsed = parse_edge_list(data)
    else:
        raise ValueError(f"unknown instance format {fmt!r}")
    logger.info(f"Loaded {path}: n={parsed.graph.n} m={parsed.graph.m}")
    return parsed
