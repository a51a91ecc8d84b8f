"""The algebra document format: structured text, bit-exact rationals.

A document looks like

    # optional comments
    name: A_2
    kind: lsa
    dim: 3
    param: lambda = 1/2
    table:
    1 1 1 3/2
    2 3 1 1

Table lines read "i j k c" for e_i . e_j = ... + c e_k (1-based); absent
entries are zero.  For kind `lie` the rows give brackets [e_i, e_j] with
i < j and the antisymmetric half is implied.  Serialization is canonical
(fixed header order, rows sorted, rationals normalized), so canonical
documents round-trip byte-exactly -- the shipped catalog files double as
format documentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import QQ, rat_str, parse_rat, RationalParseError
from .algebra import Algebra, LieAlgebra

KINDS = ("lsa", "rsa", "lie", "plain")


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass
class AlgebraDocument:
    name: str
    kind: str
    dim: int
    params: dict[str, object] = field(default_factory=dict)
    entries: list[tuple[int, int, int, object]] = field(default_factory=list)

    def canonical(self) -> "AlgebraDocument":
        merged: dict[tuple[int, int, int], object] = {}
        for i, j, k, c in self.entries:
            key = (i, j, k)
            merged[key] = merged.get(key, QQ(0)) + c
        entries = [
            (i, j, k, c) for (i, j, k), c in sorted(merged.items()) if c != 0
        ]
        return AlgebraDocument(self.name, self.kind, self.dim, dict(self.params), entries)


def parse_document(text: str) -> AlgebraDocument:
    name = None
    kind = None
    dim = None
    params: dict[str, object] = {}
    entries: list[tuple[int, int, int, object]] = []
    in_table = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_table:
            key, sep, value = line.partition(":")
            if not sep:
                raise DocumentError(f"expected 'key: value', got {line!r}", lineno)
            key = key.strip()
            value = value.strip()
            if key == "name":
                name = value
            elif key == "kind":
                if value not in KINDS:
                    raise DocumentError(f"unknown kind {value!r}", lineno)
                kind = value
            elif key == "dim":
                try:
                    dim = int(value)
                except ValueError:
                    raise DocumentError(f"bad dimension {value!r}", lineno) from None
                if dim < 1:
                    raise DocumentError("dimension must be >= 1", lineno)
            elif key == "param":
                pname, psep, pval = value.partition("=")
                if not psep:
                    raise DocumentError("expected 'param: name = value'", lineno)
                try:
                    params[pname.strip()] = parse_rat(pval)
                except RationalParseError as exc:
                    raise DocumentError(str(exc), lineno) from None
            elif key == "table":
                if value:
                    raise DocumentError("'table:' takes no value", lineno)
                in_table = True
            else:
                raise DocumentError(f"unknown key {key!r}", lineno)
            continue
        fields = line.split()
        if len(fields) != 4:
            raise DocumentError(f"table row needs 'i j k c', got {line!r}", lineno)
        try:
            i, j, k = (int(f) for f in fields[:3])
        except ValueError:
            raise DocumentError(f"bad index in {line!r}", lineno) from None
        try:
            c = parse_rat(fields[3])
        except RationalParseError as exc:
            raise DocumentError(str(exc), lineno) from None
        entries.append((i, j, k, c))
    if name is None:
        raise DocumentError("missing 'name:' header")
    if kind is None:
        raise DocumentError("missing 'kind:' header")
    if dim is None:
        raise DocumentError("missing 'dim:' header")
    for i, j, k, _ in entries:
        if not all(1 <= t <= dim for t in (i, j, k)):
            raise DocumentError(f"table index ({i},{j},{k}) outside 1..{dim}")
    return AlgebraDocument(name, kind, dim, params, entries).canonical()


def format_document(doc: AlgebraDocument) -> str:
    doc = doc.canonical()
    lines = [f"name: {doc.name}", f"kind: {doc.kind}", f"dim: {doc.dim}"]
    for pname in sorted(doc.params):
        lines.append(f"param: {pname} = {rat_str(doc.params[pname])}")
    lines.append("table:")
    for i, j, k, c in doc.entries:
        lines.append(f"{i} {j} {k} {rat_str(c)}")
    return "\n".join(lines) + "\n"


def document_to_algebra(doc: AlgebraDocument):
    """Build the Algebra (lsa/rsa/plain) or LieAlgebra (lie) a document describes."""
    if doc.kind == "lie":
        brackets: dict = {}
        for i, j, k, c in doc.entries:
            if i >= j:
                raise DocumentError(
                    f"lie table rows need i < j, got ({i},{j})"
                )
            v = list(brackets.get((i, j), [QQ(0)] * doc.dim))
            v[k - 1] += c
            brackets[(i, j)] = v
        return LieAlgebra(doc.name, doc.dim, brackets)
    table: dict = {}
    for i, j, k, c in doc.entries:
        entry = table.setdefault((i, j), {})
        entry[k] = entry.get(k, QQ(0)) + c
    return Algebra(doc.name, doc.dim, table)


def algebra_to_document(obj, kind: str | None = None, params: dict | None = None) -> AlgebraDocument:
    if isinstance(obj, LieAlgebra):
        entries = [
            (i, j, k + 1, c)
            for (i, j), v in sorted(obj.brackets.items())
            for k, c in enumerate(v)
            if c != 0
        ]
        return AlgebraDocument(obj.name, "lie", obj.dim, dict(params or {}), entries).canonical()
    entries = [
        (i, j, k, c)
        for (i, j), entry in sorted(obj.table.items())
        for k, c in sorted(entry.items())
    ]
    return AlgebraDocument(
        obj.name, kind or "plain", obj.dim, dict(params or {}), entries
    ).canonical()
