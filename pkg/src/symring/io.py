"""
Plain-text file formats.

group-ring element   optional ``r=<r>`` header, then ``NUM/DEN : i1 ... ir`` lines
symmetry spec        ``r=<r>`` header, one generator per line, terms joined by ``;``
expression           ``r=<r> [l=<l> b0=<i,..>]`` header, then element lines
identity list        expression header, then one stanza per identity, blank-line separated
tensor               ``d=<d> r=<r>`` header, then d^r fractions in row-major order
block file           ``r=<r>`` header, then ``block <partition>`` and its matrix rows

``#`` starts a comment anywhere; blank lines are ignored except as stanza
separators. Contraction specs read ``l=<l> b0=<i,..>`` with 0-based
basis indices; signatures read ``+,+,+,-``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ParseError
from .group_ring import GroupRingElement
from .identities import Expression, IdentityBasis
from .partitions import format_partition, parse_partition
from .perm import Permutation
from .tensor_symmetry import ContractionSpec, MetricSignature, TensorDense
from .wedderburn import BlockAlgebraElement, block_shape

__all__ = [
    "format_number", "parse_number", "parse_element", "format_element", "parse_symmetry", "format_symmetry",
    "parse_expression", "format_expression", "format_identities", "parse_identities", "parse_tensor",
    "format_tensor", "parse_blocks", "format_blocks", "parse_contraction", "format_contraction",
    "parse_signature", "read_text", "element_to_json", "blocks_to_json",
]


def format_number(x) -> str:
    return str(Fraction(x))


def parse_number(tok: str, line: int | None = None, source: str | None = None) -> Fraction:
    try:
        return Fraction(tok.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {tok!r}", line, source) from None


def read_text(path) -> str:
    return Path(path).read_text()


def _lines(text: str):
    """(line number, stripped content) with comments removed; blank lines kept as ''."""
    for n, raw in enumerate(text.splitlines(), 1):
        yield n, raw.split("#", 1)[0].strip()


def _parse_header(content: str, allowed: set[str], line: int, source) -> dict[str, str]:
    out = {}
    for tok in content.split():
        if "=" not in tok:
            raise ParseError(f"bad header field {tok!r}", line, source)
        k, v = tok.split("=", 1)
        if k not in allowed:
            raise ParseError(f"unknown header field {k!r}", line, source)
        out[k] = v
    return out


def _parse_int(v: str, what: str, line, source) -> int:
    try:
        return int(v)
    except ValueError:
        raise ParseError(f"bad {what} {v!r}", line, source) from None


def _parse_term(content: str, r: int | None, line: int, source) -> tuple[Fraction, Permutation]:
    if ":" not in content:
        raise ParseError("expected 'NUM/DEN : i1 ... ir'", line, source)
    num, perm = content.split(":", 1)
    c = parse_number(num, line, source)
    try:
        p = Permutation([int(t) for t in perm.split()])
    except ValueError as exc:
        raise ParseError(f"bad permutation: {exc}", line, source) from None
    if r is not None and p.degree != r:
        raise ParseError(f"permutation has degree {p.degree}, expected {r}", line, source)
    return c, p


def _accumulate(r: int, pairs: Iterable[tuple[Fraction, Permutation]]) -> GroupRingElement:
    terms: dict = {}
    for c, p in pairs:
        terms[p] = terms.get(p, 0) + c
    return GroupRingElement(r, terms)


def parse_element(text: str, source: str | None = None, degree: int | None = None) -> GroupRingElement:
    r = degree
    pairs = []
    for n, content in _lines(text):
        if not content:
            continue
        if content.startswith("r="):
            hdr = _parse_header(content, {"r"}, n, source)
            r = _parse_int(hdr["r"], "degree", n, source)
            continue
        c, p = _parse_term(content, r, n, source)
        if r is None:
            r = p.degree
        pairs.append((c, p))
    if r is None:
        raise ParseError("empty element without an 'r=' header", None, source)
    return _accumulate(r, pairs)


def format_element(a: GroupRingElement, header: bool = True) -> str:
    lines = [f"r={a.degree}"] if header else []
    for p in a.support():
        lines.append(f"{format_number(a.terms[p])} : {p}")
    return "\n".join(lines) + "\n"


def element_to_json(a: GroupRingElement) -> dict:
    return {"r": a.degree, "terms": [[format_number(a.terms[p]), list(p.images)] for p in a.support()]}


def parse_symmetry(text: str, source: str | None = None) -> tuple[int, list[GroupRingElement]]:
    r = None
    gens = []
    for n, content in _lines(text):
        if not content:
            continue
        if r is None:
            if not content.startswith("r="):
                raise ParseError("symmetry file must start with 'r=<r>'", n, source)
            r = _parse_int(_parse_header(content, {"r"}, n, source)["r"], "degree", n, source)
            continue
        pairs = [_parse_term(t.strip(), r, n, source) for t in content.split(";") if t.strip()]
        gens.append(_accumulate(r, pairs))
    if r is None:
        raise ParseError("missing 'r=<r>' header", None, source)
    return r, gens


def format_symmetry(r: int, gens: Sequence[GroupRingElement]) -> str:
    lines = [f"r={r}"]
    for a in gens:
        lines.append(" ; ".join(f"{format_number(a.terms[p])} : {p}" for p in a.support()))
    return "\n".join(lines) + "\n"


def parse_contraction(text: str, r: int, source: str | None = None, line: int | None = None) -> ContractionSpec:
    hdr = _parse_header(text.strip(), {"l", "b0"}, line, source)
    if "l" not in hdr:
        raise ParseError("contraction spec needs 'l=<l>'", line, source)
    l = _parse_int(hdr["l"], "contraction count", line, source)
    raw = hdr.get("b0", "")
    try:
        b0 = tuple(int(t) for t in raw.split(",") if t != "")
        return ContractionSpec(r, l, b0)
    except ValueError as exc:
        raise ParseError(f"bad contraction spec: {exc}", line, source) from None


def format_contraction(spec: ContractionSpec) -> str:
    return f"l={spec.l} b0={','.join(map(str, spec.b0))}"


def parse_signature(text: str) -> MetricSignature:
    try:
        return MetricSignature.parse(text.strip())
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _expression_header(content: str, n: int, source):
    hdr = _parse_header(content, {"r", "l", "b0"}, n, source)
    if "r" not in hdr:
        raise ParseError("expression header needs 'r=<r>'", n, source)
    r = _parse_int(hdr["r"], "degree", n, source)
    spec = None
    if "l" in hdr:
        spec = parse_contraction(f"l={hdr['l']} b0={hdr.get('b0', '')}", r, source, n)
    elif "b0" in hdr:
        raise ParseError("'b0=' given without 'l='", n, source)
    return r, spec


def parse_expression(text: str, source: str | None = None) -> Expression:
    r = spec = None
    pairs = []
    for n, content in _lines(text):
        if not content:
            continue
        if r is None:
            if not content.startswith("r="):
                raise ParseError("expression file must start with 'r=<r> [l=<l> b0=..]'", n, source)
            r, spec = _expression_header(content, n, source)
            continue
        pairs.append(_parse_term(content, r, n, source))
    if r is None:
        raise ParseError("missing expression header", None, source)
    return Expression.from_terms(r, pairs, spec)


def _header_text(r: int, spec) -> str:
    return f"r={r}" + (f" {format_contraction(spec)}" if spec is not None else "")


def format_expression(tau: Expression) -> str:
    lines = [_header_text(tau.degree, tau.spec)]
    lines.extend(f"{format_number(c)} : {p}" for c, p in tau.sorted_terms())
    return "\n".join(lines) + "\n"


def format_identities(ids: IdentityBasis, spec=None, with_header: bool = True) -> str:
    out = [_header_text(ids.degree, spec)] if with_header else []
    for vec in ids.vectors:
        out.append("")
        out.extend(f"{format_number(vec[p])} : {p}" for p in sorted(vec))
    return "\n".join(out) + "\n"


def parse_identities(text: str, source: str | None = None) -> tuple[int, object, list[Expression]]:
    r = spec = None
    stanzas: list[list] = []
    current: list | None = None
    for n, content in _lines(text):
        if r is None:
            if not content:
                continue
            r, spec = _expression_header(content, n, source)
            continue
        if not content:
            current = None
            continue
        if current is None:
            current = []
            stanzas.append(current)
        current.append(_parse_term(content, r, n, source))
    if r is None:
        raise ParseError("missing identity header", None, source)
    return r, spec, [Expression.from_terms(r, s, spec) for s in stanzas]


def parse_tensor(text: str, source: str | None = None) -> TensorDense:
    header = None
    values = []
    for n, content in _lines(text):
        if not content:
            continue
        if header is None:
            hdr = _parse_header(content, {"d", "r"}, n, source)
            if set(hdr) != {"d", "r"}:
                raise ParseError("tensor header must be 'd=<d> r=<r>'", n, source)
            header = (_parse_int(hdr["d"], "dimension", n, source), _parse_int(hdr["r"], "order", n, source))
            continue
        values.extend(parse_number(tok, n, source) for tok in content.split())
    if header is None:
        raise ParseError("missing tensor header", None, source)
    d, r = header
    if len(values) != d ** r:
        raise ParseError(f"expected {d ** r} coordinates, found {len(values)}", None, source)
    return TensorDense.from_coordinates(d, r, values)


def format_tensor(T: TensorDense) -> str:
    return T.to_text()


def parse_blocks(text: str, source: str | None = None) -> BlockAlgebraElement:
    shape = None
    blocks: dict[int, list] = {}
    current = None
    for n, content in _lines(text):
        if not content:
            continue
        if shape is None:
            hdr = _parse_header(content, {"r"}, n, source)
            if "r" not in hdr:
                raise ParseError("block file must start with 'r=<r>'", n, source)
            shape = block_shape(_parse_int(hdr["r"], "degree", n, source))
            continue
        if content.startswith("block"):
            lam = parse_partition(content[len("block"):])
            try:
                current = shape.index(lam)
            except ValueError:
                raise ParseError(f"{lam} is not a partition of {shape.degree}", n, source) from None
            if current in blocks:
                raise ParseError(f"block {format_partition(lam)} given twice", n, source)
            blocks[current] = []
            continue
        if current is None:
            raise ParseError("matrix row before any 'block' line", n, source)
        row = [parse_number(tok, n, source) for tok in content.split()]
        size = shape.sizes[current]
        if len(row) != size or len(blocks[current]) >= size:
            raise ParseError(f"block rows must have {size} entries and there are {size} rows", n, source)
        blocks[current].append(row)
    if shape is None:
        raise ParseError("missing 'r=<r>' header", None, source)
    for k, rows in blocks.items():
        if len(rows) != shape.sizes[k]:
            raise ParseError(f"block {format_partition(shape.partitions[k])} is incomplete", None, source)
    return BlockAlgebraElement(shape, blocks)


def format_blocks(A: BlockAlgebraElement) -> str:
    return A.dump()


def blocks_to_json(A: BlockAlgebraElement) -> dict:
    return {
        "r": A.degree,
        "blocks": [
            {"partition": list(A.shape.partitions[k]), "rows": [[format_number(x) for x in row] for row in M]}
            for k, M in sorted(A.blocks.items())
        ],
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
