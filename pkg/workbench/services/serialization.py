"""
Graph wire formats: JSON (with roles), edge list, and DOT (export only).
"""
import json
import logging
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from workbench.models.schemas import GraphDocument, RoleRecord, VertexRecord
from workbench.services.errors import GraphError, GraphParseError
from workbench.services.graph_core import Graph, GraphBuilder, Role

logger = logging.getLogger(__name__)


class GraphFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    EDGELIST = "edgelist"


def to_document(g: Graph) -> GraphDocument:
    return GraphDocument(
        vertices=[
            VertexRecord(id=v, role=RoleRecord(kind=role.kind, ix=list(role.ix)))
            for v, role in enumerate(g.roles)
        ],
        edges=list(g.edges()),
    )


def from_document(doc: GraphDocument) -> Graph:
    builder = GraphBuilder()
    for position, vertex in enumerate(doc.vertices):
        if vertex.id != position:
            raise GraphParseError(f"vertex at position {position} has id {vertex.id}; ids must be dense",
                                  path=("vertices", position, "id"))
        builder.add_vertex(Role(vertex.role.kind, tuple(vertex.role.ix)))
    for index, (u, v) in enumerate(doc.edges):
        try:
            builder.add_edge(u, v)
        except GraphError as exc:
            raise GraphParseError(f"edge {index}: {exc}", path=("edges", index)) from exc
    return builder.finalize()


def serialize(g: Graph, fmt: GraphFormat = GraphFormat.JSON) -> str:
    fmt = GraphFormat(fmt)
    if fmt == GraphFormat.JSON:
        return to_document(g).model_dump_json() + "\n"
    if fmt == GraphFormat.EDGELIST:
        return "".join(f"{u} {v}\n" for u, v in g.edges())
    lines = ["graph workbench {"]
    lines.extend(f'  {v} [label="{role}"];' for v, role in enumerate(g.roles))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse(text: str, fmt: GraphFormat = GraphFormat.JSON) -> Graph:
    fmt = GraphFormat(fmt)
    if fmt == GraphFormat.JSON:
        return _parse_json(text)
    if fmt == GraphFormat.EDGELIST:
        return _parse_edgelist(text)
    raise GraphParseError(f"format {fmt.value} is export-only")


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    try:
        return from_document(GraphDocument.model_validate(data))
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        line, column = _position(text, first["loc"])
        raise GraphParseError(f"{location}: {first['msg']}", line=line, column=column,
                              path=first["loc"]) from exc
    except GraphParseError as exc:
        line, column = _position(text, exc.path)
        raise GraphParseError(exc.reason, line=line, column=column, path=exc.path) from exc


def _skip_space(text: str, i: int) -> int:
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    return i


def _child_offset(text: str, start: int, step: Union[str, int]) -> Optional[int]:
    """Offset of the member `step` of the object or array opening at `start`."""
    decoder = json.JSONDecoder()
    opener = text[start:start + 1]
    i = _skip_space(text, start + 1)
    if opener == "{" and isinstance(step, str):
        while text[i:i + 1] == '"':
            key, i = decoder.raw_decode(text, i)
            i = _skip_space(text, _skip_space(text, i) + 1)
            if key == step:
                return i
            _, i = decoder.raw_decode(text, i)
            i = _skip_space(text, i)
            if text[i:i + 1] != ",":
                return None
            i = _skip_space(text, i + 1)
    elif opener == "[" and isinstance(step, int):
        for _ in range(step):
            if text[i:i + 1] in ("]", ""):
                return None
            _, i = decoder.raw_decode(text, i)
            i = _skip_space(text, i)
            if text[i:i + 1] != ",":
                return None
            i = _skip_space(text, i + 1)
        if text[i:i + 1] not in ("]", ""):
            return i
    return None


def _position(text: str, path: Sequence[Union[str, int]]) -> Tuple[int, int]:
    """
    Line and column of the deepest value along `path` in an already valid
    JSON text. Missing members resolve to their enclosing value.
    """
    offset = _skip_space(text, 0)
    for step in path:
        child = _child_offset(text, offset, step)
        if child is None:
            break
        offset = child
    line = text.count("\n", 0, offset) + 1
    return line, offset - text.rfind("\n", 0, offset)


def _parse_edgelist(text: str) -> Graph:
    """One "u v" pair per line; blank lines and '#' comments are skipped."""
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 2 ids, found {len(tokens)}", line=line_no, column=1)
        pair = []
        for token in tokens:
            column = line.index(token) + 1
            if not (token.isascii() and token.isdigit()):
                raise GraphParseError(f"invalid vertex id {token!r}", line=line_no, column=column)
            pair.append(int(token))
        u, v = pair
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=line_no, column=1)
        edges.append((u, v))

    vertex_count = max((max(e) for e in edges), default=-1) + 1
    builder = GraphBuilder()
    for _ in range(vertex_count):
        builder.add_vertex()
    for u, v in edges:
        builder.add_edge(u, v)
    logger.debug("Parsed edge list with %d vertices and %d edges", vertex_count, len(edges))
    return builder.finalize()
