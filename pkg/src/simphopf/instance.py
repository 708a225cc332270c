"""Plain-text instance files.

Grammar, one statement per line, ``#`` starts a comment line::

    n <int>
    facet <v0> <v1> ... <v_{2n-1}>
    label <vertex> <label in 1..n+2>

Exactly one ``n`` header; facet and label lines in any order.  Vertex ids are
arbitrary non-negative integers and are kept for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import AbstractComplex, build_complex
from .errors import DuplicateLabel, HeaderError, InstanceSyntaxError, MissingLabel
from .pullback import Labeling, require_valid


@dataclass
class RawInstance:
    n: int
    facets: list  # tuples of original ids
    labels: dict  # original id -> label
    facet_lines: list
    label_lines: dict


@dataclass
class Instance:
    n: int
    complex: AbstractComplex
    labeling: Labeling


def _int(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise InstanceSyntaxError(f"expected an integer, got {tok!r}", lineno) from None
    if v < 0:
        raise InstanceSyntaxError(f"negative integer {v}", lineno)
    return v


def parse_raw(text: str) -> RawInstance:
    """Tokenize and check the grammar; no topological validation."""
    lines = text.splitlines()
    n = None
    header_line = None
    body = []
    for lineno, line in enumerate(lines, 1):
        toks = line.split()
        if not toks or toks[0].startswith("#"):
            continue
        if toks[0] == "n":
            if n is not None:
                raise HeaderError(f"second header (first on line {header_line})", lineno)
            if len(toks) != 2:
                raise HeaderError("header must be 'n <int>'", lineno)
            n = _int(toks[1], lineno)
            if n < 1:
                raise HeaderError("n must be at least 1", lineno)
            header_line = lineno
        elif toks[0] in ("facet", "label"):
            body.append((lineno, toks))
        else:
            raise InstanceSyntaxError(f"unknown statement {toks[0]!r}", lineno)
    if n is None:
        raise HeaderError("missing 'n <int>' header")

    facets, facet_lines, labels, label_lines = [], [], {}, {}
    for lineno, toks in body:
        if toks[0] == "facet":
            if len(toks) - 1 != 2 * n:
                raise InstanceSyntaxError(
                    f"facet needs {2 * n} vertices for n={n}, got {len(toks) - 1}", lineno
                )
            facets.append(tuple(_int(t, lineno) for t in toks[1:]))
            facet_lines.append(lineno)
        else:
            if len(toks) != 3:
                raise InstanceSyntaxError("label line must be 'label <vertex> <label>'", lineno)
            v, lab = _int(toks[1], lineno), _int(toks[2], lineno)
            if v in labels:
                raise DuplicateLabel(v, lineno)
            if not 1 <= lab <= n + 2:
                raise InstanceSyntaxError(f"label {lab} outside 1..{n + 2}", lineno)
            labels[v] = lab
            label_lines[v] = lineno
    if not facets:
        raise InstanceSyntaxError("no facet lines")
    used = {v for f in facets for v in f}
    for v in sorted(used):
        if v not in labels:
            raise MissingLabel(v)
    for v in sorted(labels):
        if v not in used:
            raise InstanceSyntaxError(f"label for vertex {v} which is in no facet", label_lines[v])
    return RawInstance(n, facets, labels, facet_lines, label_lines)


def parse_instance(text: str) -> Instance:
    raw = parse_raw(text)
    c = build_complex(raw.facets)
    labeling = Labeling.from_mapping(c, raw.labels)
    require_valid(c, labeling, raw.n)
    return Instance(raw.n, c, labeling)


def emit_instance(n: int, c: AbstractComplex, labeling: Labeling, comments=()) -> str:
    """Canonical text: header, facets in sorted order, labels by vertex id."""
    ids = c.original_ids
    out = [f"# {line}" for line in comments]
    out.append(f"n {n}")
    for f in c.facets:
        out.append("facet " + " ".join(str(ids[v]) for v in f))
    for v in range(c.n_vertices):
        out.append(f"label {ids[v]} {labeling[v]}")
    return "\n".join(out) + "\n"
