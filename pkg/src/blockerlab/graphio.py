"""Text formats for graphs and reduction instances.

Graph files: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-based endpoints.  Lines starting with ``#`` and blank lines are ignored
anywhere.  Every CLI subcommand reads this format.

Satisfiability instances: ``p wp2sat <variables> <clauses> <k>`` followed by
one ``x y`` line per clause with 1-based variable numbers.

Sum-of-squares instances: ``<ell> <h> <J>`` followed by one line of ``ell``
positive integers.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph
from .reductions import MssInstance, SatInstance


def _payload_lines(text: str) -> list[list[str]]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line.split())
    return lines


def parse_graph(text: str) -> Graph:
    lines = _payload_lines(text)
    if not lines:
        raise GraphFormatError("empty graph file")
    header = lines[0]
    if len(header) != 2:
        raise GraphFormatError(f"expected header 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    seen = set()
    for parts in body:
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {exc}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u} {v} out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"{g.n} {g.edge_count()}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_sat_instance(text: str) -> SatInstance:
    lines = _payload_lines(text)
    if not lines:
        raise GraphFormatError("empty instance file")
    header = lines[0]
    if len(header) != 5 or header[0] != "p" or header[1] != "wp2sat":
        raise GraphFormatError("expected header 'p wp2sat <vars> <clauses> <k>'")
    try:
        nvars, nclauses, k = int(header[2]), int(header[3]), int(header[4])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {exc}") from exc
    body = lines[1:]
    if len(body) != nclauses:
        raise GraphFormatError(f"header promises {nclauses} clauses, got {len(body)}")
    clauses = []
    for parts in body:
        if len(parts) != 2:
            raise GraphFormatError(f"bad clause line {' '.join(parts)!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad clause line: {exc}") from exc
        if not (1 <= x <= nvars and 1 <= y <= nvars):
            raise GraphFormatError(f"clause variable out of range: {x} {y}")
        clauses.append((x - 1, y - 1))
    try:
        return SatInstance.make(nvars, clauses, k)
    except Exception as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_mss_instance(text: str) -> MssInstance:
    lines = _payload_lines(text)
    if len(lines) != 2:
        raise GraphFormatError("expected a header line and one tuple line")
    header = lines[0]
    if len(header) != 3:
        raise GraphFormatError("expected header '<ell> <h> <J>'")
    try:
        ell, h, J = (int(x) for x in header)
        a = tuple(int(x) for x in lines[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad instance: {exc}") from exc
    if len(a) != ell:
        raise GraphFormatError(f"header promises {ell} entries, got {len(a)}")
    try:
        return MssInstance(ell, a, h, J)
    except Exception as exc:
        raise GraphFormatError(str(exc)) from exc
