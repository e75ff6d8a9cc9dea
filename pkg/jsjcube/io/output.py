"""Result documents: JSON or YAML with sorted keys, and Graphviz DOT."""

from __future__ import annotations

import io
import json
import typing as t

from pydantic import BaseModel, Field
from strenum import StrEnum

from jsjcube.config.pydantic_settings_file import import_yaml
from jsjcube.opening.decomposition import DecompositionGraph, VertexKind
from jsjcube.opening.pipeline import Provenance


class OutputFormat(StrEnum):
    JSON = "json"
    YAML = "yaml"


class OutputDocument(BaseModel):
    decomposition: DecompositionGraph = Field(default_factory=DecompositionGraph)
    provenance: Provenance = Field(default_factory=Provenance)


def document_of(result: t.Any) -> OutputDocument:
    """the document of a JsjResult, RelativeResult or bare DecompositionGraph"""
    if isinstance(result, OutputDocument):
        return result
    if isinstance(result, DecompositionGraph):
        return OutputDocument(decomposition=result.canonical())
    return OutputDocument(decomposition=result.decomposition.canonical(), provenance=result.provenance)


def _sorted(data):
    if isinstance(data, dict):
        return {k: _sorted(data[k]) for k in sorted(data)}
    if isinstance(data, list):
        return [_sorted(x) for x in data]
    return data


def emit_model(model: BaseModel, fmt: OutputFormat | str = OutputFormat.JSON) -> str:
    data = _sorted(model.model_dump(mode="json"))
    if OutputFormat(fmt) == OutputFormat.JSON:
        return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    buffer = io.StringIO()
    import_yaml().dump(data, buffer)
    return buffer.getvalue()


def emit_output(result: t.Any, fmt: OutputFormat | str = OutputFormat.JSON) -> str:
    """deterministic text of a result; classification reports and other models are dumped as they are"""
    if isinstance(result, BaseModel) and not hasattr(result, "decomposition") and not isinstance(
        result, DecompositionGraph
    ):
        return emit_model(result, fmt)
    return emit_model(document_of(result), fmt)


def load_data(text: str, fmt: OutputFormat | str | None = None):
    if fmt is None:
        fmt = OutputFormat.JSON if text.lstrip().startswith(("{", "[")) else OutputFormat.YAML
    if OutputFormat(fmt) == OutputFormat.JSON:
        return json.loads(text)
    return import_yaml().load(text)


def parse_output(text: str, fmt: OutputFormat | str | None = None) -> OutputDocument:
    return OutputDocument.model_validate(load_data(text, fmt))


SHAPES = {
    VertexKind.CYCLIC: "circle",
    VertexKind.SURFACE: "doublecircle",
    VertexKind.RIGID: "box",
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(dg: DecompositionGraph, name: str = "jsj") -> str:
    dg = dg.canonical()
    out = [f"graph {name} {{"]
    for v in dg.vertices:
        label = f"{v.id}\\n{v.kind} rank {v.rank}"
        style = ", style=dashed" if v.peripheral else ""
        out.append(f"  {_quote(v.id)} [shape={SHAPES[v.kind]}, label=\"{label}\"{style}];")
    for e in dg.edges:
        out.append(f"  {_quote(e.cyclic)} -- {_quote(e.other)} [label={_quote(e.id)}];")
    out.append("}")
    return "\n".join(out) + "\n"
