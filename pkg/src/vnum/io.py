"""Text and JSON formats for complexes, ideals and graphs.

Facet lists: one facet per line, whitespace-separated labels, ``#`` starts a
comment, ``{}`` on its own denotes the empty facet. Ideals: one generator per
line such as ``x1*x3`` or ``x1^2*x3^2``. Edge lists: one ``u v`` per line. A
line ``@vertices a b c`` fixes the vertex order (and may add unused vertices);
otherwise labels are sorted naturally.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Sequence

from .bits import bits_of
from .complex import SimplicialComplex, from_faces
from .errors import ParseError
from .graphs import Graph, graph_from_edges
from .ideals import MonomialIdeal, SquarefreeIdeal

_FACTOR = re.compile(r"x([A-Za-z0-9_.\-]+?)(?:\^(\d+))?$")


def natural_key(label: str):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _vertex_order(declared: list[str] | None, seen: Iterable[str]) -> list[str]:
    if declared is not None:
        return declared
    return sorted(set(seen), key=natural_key)


def _split_directive(text: str, source: str) -> tuple[list[str] | None, list[tuple[int, list[str]]]]:
    declared = None
    rows = []
    for no, toks in _lines(text):
        if toks[0] == "@vertices":
            if declared is not None:
                raise ParseError("@vertices given twice", source, no)
            if len(set(toks[1:])) != len(toks) - 1:
                raise ParseError("duplicate label in @vertices", source, no)
            declared = toks[1:]
        else:
            rows.append((no, toks))
    return declared, rows


def parse_facets(text: str, source: str = "<input>") -> SimplicialComplex:
    declared, rows = _split_directive(text, source)
    faces = []
    for no, toks in rows:
        if toks == ["{}"]:
            faces.append([])
            continue
        if len(set(toks)) != len(toks):
            raise ParseError("repeated vertex in facet", source, no)
        if declared is not None:
            unknown = [t for t in toks if t not in declared]
            if unknown:
                raise ParseError(f"unknown vertex {unknown[0]!r}", source, no)
        faces.append(toks)
    labels = _vertex_order(declared, (x for f in faces for x in f))
    if not labels:
        raise ParseError("no vertices", source)
    try:
        return from_faces(faces, labels)
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def format_facets(delta: SimplicialComplex) -> str:
    out = ["@vertices " + " ".join(delta.labels)]
    for f in delta.facets:
        out.append(" ".join(delta.names(f)) if f else "{}")
    return "\n".join(out) + "\n"


def complex_to_json(delta: SimplicialComplex) -> dict:
    return {"vertices": list(delta.labels), "facets": delta.facet_names()}


def complex_from_json(data: dict, source: str = "<input>") -> SimplicialComplex:
    try:
        labels = [str(x) for x in data["vertices"]]
        facets = [[str(x) for x in f] for f in data["facets"]]
        return from_faces(facets, labels)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"complex JSON needs 'vertices' and 'facets' ({exc})", source) from None
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def _parse_monomial(token: str, source: str, line: int | None) -> dict[str, int]:
    if token == "1":
        return {}
    powers: dict[str, int] = {}
    for factor in token.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ParseError(f"bad factor {factor!r} (expected x<label> or x<label>^<e>)", source, line)
        label, exp = m.group(1), int(m.group(2) or 1)
        if exp < 1:
            raise ParseError(f"exponent must be positive in {factor!r}", source, line)
        powers[label] = powers.get(label, 0) + exp
    return powers


def _build_ideal(gens: list[dict[str, int]], labels: list[str], source: str):
    idx = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    vectors = []
    for g in gens:
        v = [0] * n
        for x, e in g.items():
            if x not in idx:
                raise ParseError(f"unknown variable x{x}", source)
            v[idx[x]] = e
        vectors.append(tuple(v))
    try:
        if all(e <= 1 for v in vectors for e in v):
            masks = [sum(1 << i for i, e in enumerate(v) if e) for v in vectors]
            return SquarefreeIdeal.from_masks(labels, masks)
        return MonomialIdeal.from_vectors(labels, vectors)
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def parse_ideal(text: str, source: str = "<input>") -> SquarefreeIdeal | MonomialIdeal:
    """A SquarefreeIdeal when every exponent is 1, else a MonomialIdeal."""
    declared, rows = _split_directive(text, source)
    gens = []
    for no, toks in rows:
        if len(toks) != 1:
            raise ParseError("one generator per line", source, no)
        gens.append(_parse_monomial(toks[0], source, no))
    labels = _vertex_order(declared, (x for g in gens for x in g))
    if not labels:
        raise ParseError("no variables", source)
    return _build_ideal(gens, labels, source)


def monomial_text(labels: Sequence[str], exps: Sequence[int]) -> str:
    parts = [f"x{labels[i]}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
    return "*".join(parts) or "1"


def _ideal_vectors(ideal: SquarefreeIdeal | MonomialIdeal) -> list[tuple[int, ...]]:
    if isinstance(ideal, SquarefreeIdeal):
        return [tuple((g >> i) & 1 for i in range(ideal.n)) for g in ideal.generators]
    return list(ideal.generators)


def format_ideal(ideal: SquarefreeIdeal | MonomialIdeal) -> str:
    out = ["@vertices " + " ".join(ideal.labels)]
    out += [monomial_text(ideal.labels, v) for v in _ideal_vectors(ideal)]
    return "\n".join(out) + "\n"


def ideal_to_json(ideal: SquarefreeIdeal | MonomialIdeal) -> dict:
    return {
        "vertices": list(ideal.labels),
        "generators": [monomial_text(ideal.labels, v) for v in _ideal_vectors(ideal)],
    }


def ideal_from_json(data: dict, source: str = "<input>"):
    try:
        labels = [str(x) for x in data["vertices"]]
        gens = [_parse_monomial(str(g), source, None) for g in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"ideal JSON needs 'vertices' and 'generators' ({exc})", source) from None
    return _build_ideal(gens, labels, source)


def parse_edges(text: str, source: str = "<input>") -> Graph:
    declared, rows = _split_directive(text, source)
    pairs = []
    for no, toks in rows:
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {len(toks)} tokens", source, no)
        if toks[0] == toks[1]:
            raise ParseError(f"loop at vertex {toks[0]}", source, no)
        if declared is not None and not set(toks) <= set(declared):
            raise ParseError("edge uses an undeclared vertex", source, no)
        pairs.append(tuple(toks))
    labels = _vertex_order(declared, (x for p in pairs for x in p))
    if not labels:
        raise ParseError("no vertices", source)
    try:
        return graph_from_edges(pairs, labels)
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


def format_edges(graph: Graph) -> str:
    out = ["@vertices " + " ".join(graph.labels)]
    out += [" ".join(graph.edge_names(e)) for e in graph.edges]
    return "\n".join(out) + "\n"


def graph_to_json(graph: Graph) -> dict:
    return {"vertices": list(graph.labels), "edges": [list(graph.edge_names(e)) for e in graph.edges]}


def graph_from_json(data: dict, source: str = "<input>") -> Graph:
    try:
        labels = [str(x) for x in data["vertices"]]
        pairs = [(str(u), str(v)) for u, v in data["edges"]]
        return graph_from_edges(pairs, labels)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"graph JSON needs 'vertices' and 'edges' ({exc})", source) from None
    except ValueError as exc:
        raise ParseError(str(exc), source) from None


KINDS = ("complex", "ideal", "graph")
_EXT = {".facets": "complex", ".ideal": "ideal", ".edges": "graph"}


def guess_kind(path: str, text: str) -> str:
    """From the extension, then from the JSON keys; facet lists otherwise."""
    suffix = Path(path).suffix
    if suffix in _EXT:
        return _EXT[suffix]
    stripped = text.lstrip()
    if stripped.startswith("{") and not stripped.startswith("{}"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            return "complex"
        for key, kind in (("facets", "complex"), ("generators", "ideal"), ("edges", "graph")):
            if isinstance(data, dict) and key in data:
                return kind
    return "complex"


def load(path: str, kind: str | None = None):
    """Read a complex, ideal or graph from ``path`` (text or JSON)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read: {exc.strerror}", path) from None
    return loads(text, kind, path)


def loads(text: str, kind: str | None = None, source: str = "<input>"):
    kind = kind or guess_kind(source, text)
    if kind not in KINDS:
        raise ValueError(f"unknown input kind {kind!r}")
    stripped = text.lstrip()
    if stripped.startswith("{") and not stripped.startswith("{}"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", source, exc.lineno) from None
        if not isinstance(data, dict):
            raise ParseError("JSON input must be an object", source)
        return {"complex": complex_from_json, "ideal": ideal_from_json, "graph": graph_from_json}[kind](data, source)
    return {"complex": parse_facets, "ideal": parse_ideal, "graph": parse_edges}[kind](text, source)


def names_of(labels: Sequence[str], mask: int) -> list[str]:
    return [labels[i] for i in bits_of(mask)]
