"""LAD-format instance files and result CSV rows.

LAD grammar (whitespace-separated integers)::

    n
    [label] d_0 nbr ... nbr      # one record per vertex, label only if labelled
    ...

Directed files list out-neighbours; undirected files may list an edge from
either or both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, UsageError
from .search import SolveConfig, SolveResult

RESULT_FIELDS = (
    "instance",
    "heuristic",
    "top_down",
    "status",
    "size",
    "time",
    "time_opt",
    "recursive_calls",
    "v_sd",
    "w_sd",
)
RESULT_HEADER = ",".join(RESULT_FIELDS)
TIME_FIELDS = ("time", "time_opt")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class ParseOptions:
    directed: bool = False
    labelled: bool = False

    @classmethod
    def from_flags(cls, flags: str) -> ParseOptions:
        """Parse a comma-separated subset of ``directed``, ``labelled``."""
        names = {f.strip() for f in flags.split(",") if f.strip()}
        unknown = names - {"directed", "labelled"}
        if unknown:
            raise ValueError(f"unknown instance flags: {', '.join(sorted(unknown))}")
        return cls(directed="directed" in names, labelled="labelled" in names)


def parse_lad(text: bytes | str, opts: ParseOptions = ParseOptions()) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise ParseError("non-ASCII data", 0) from e
    tokens = text.split()
    pos = 0

    def take(what: str) -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of input, expected {what}", pos)
        tok = tokens[pos]
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"expected integer {what}, got {tok!r}", pos) from None
        pos += 1
        return value

    n = take("vertex count")
    if n < 0:
        raise ParseError(f"negative vertex count {n}", 0)
    labels = [0] * n
    edges = []
    for v in range(n):
        if opts.labelled:
            at = pos
            labels[v] = take(f"label of vertex {v}")
            if labels[v] < 0:
                raise ParseError(f"negative label on vertex {v}", at)
        at = pos
        d = take(f"neighbour count of vertex {v}")
        if d < 0:
            raise ParseError(f"negative neighbour count on vertex {v}", at)
        for _ in range(d):
            at = pos
            u = take(f"neighbour of vertex {v}")
            if not 0 <= u < n:
                raise ParseError(f"neighbour {u} of vertex {v} out of range", at)
            if u == v:
                raise ParseError(f"self-loop on vertex {v}", at)
            edges.append((v, u))
    if pos != len(tokens):
        raise ParseError("trailing data after last vertex record", pos)
    try:
        return Graph(n, edges, labels, directed=opts.directed)
    except UsageError as e:
        raise ParseError(str(e), pos) from e


def read_lad(path, opts: ParseOptions = ParseOptions()) -> Graph:
    with open(path, "rb") as f:
        return parse_lad(f.read(), opts)


def write_lad(g: Graph, labelled: bool = False) -> str:
    """Serialise ``g``; undirected edges are listed from both endpoints."""
    lines = [str(g.n)]
    for v in range(g.n):
        row = g.row(v)
        if g.directed:
            nbrs = [u for u in range(g.n) if row[u] & 1]
        else:
            nbrs = [u for u in range(g.n) if row[u]]
        fields = [str(g.labels[v])] if labelled else []
        fields.append(str(len(nbrs)))
        fields.extend(map(str, nbrs))
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def write_result_row(result: SolveResult, config: SolveConfig, instance_id: str) -> str:
    st = result.stats
    return ",".join(
        [
            instance_id,
            config.policy.value,
            "true" if config.top_down else "false",
            result.status.value,
            str(result.size),
            f"{st.time_total:.3f}",
            f"{st.time_opt:.3f}",
            str(st.recursive_calls),
            f"{st.v_sd:.6f}",
            f"{st.w_sd:.6f}",
        ]
    )


def error_row(config: SolveConfig, instance_id: str) -> str:
    """Row for an instance that could not be loaded."""
    return ",".join(
        [instance_id, config.policy.value, "true" if config.top_down else "false", "error"]
        + [""] * (len(RESULT_FIELDS) - 4)
    )
