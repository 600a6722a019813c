"""The ``.dessin`` text format and report rendering.

A document looks like::

    # comment
    n = 5
    name = example
    sigma = (2 3 4)
    alpha = (1 2)(3 5 4)

``n`` comes first; ``name`` is optional. Fixed points may be written or
omitted and an empty right-hand side is the identity. ``phi`` is always
derived from ``sigma`` and ``alpha`` and is rejected as input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from brauer_dessins import algebra
from brauer_dessins.algebra import DimensionBoundExceeded, RelationKind
from brauer_dessins.census import duality_checks, fingerprint
from brauer_dessins.dessin import Dessin, new_dessin, passport
from brauer_dessins.permutation import Permutation
from brauer_dessins.quiver import full_quiver

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")

DUALITY_NOTE = (
    "With the dual triple (phi^-1, alpha^-1, sigma^-1) the full quiver of the dual "
    "coincides with the original arrow by arrow (labelled_equal). The opposite quiver "
    "is obtained from the orientation-reversed dual (phi, alpha, alpha^-1 phi^-1), with "
    "arrow i of that quiver matching arrow i^phi of the opposite quiver (oriented_op_equal)."
)


class DessinParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class DessinDocument:
    n: int
    sigma_text: str
    alpha_text: str
    name: Optional[str] = None

    def to_dessin(self) -> Dessin:
        return parse_dessin(format_document(self))


def parse_cycles(text: str, n: int, line: int = 1, column: int = 1) -> list[tuple[int, ...]]:
    """Parse ``(a b c)(d e)`` groups; columns in errors are offset by ``column``."""
    cycles: list[tuple[int, ...]] = []
    seen: set[int] = set()
    current: Optional[list[int]] = None
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        col = column + m.start(m.lastindex)
        pos = m.end()
        opened, closed, number, comma, other = m.groups()
        if opened:
            if current is not None:
                raise DessinParseError("nested '('", line, col)
            current = []
        elif closed:
            if current is None:
                raise DessinParseError("unmatched ')'", line, col)
            if current:
                cycles.append(tuple(current))
            current = None
        elif number:
            if current is None:
                raise DessinParseError(f"label {number} outside parentheses", line, col)
            x = int(number)
            if not 1 <= x <= n:
                raise DessinParseError(f"label {x} out of range 1..{n}", line, col)
            if x in seen:
                raise DessinParseError(f"repeated label {x}", line, col)
            seen.add(x)
            current.append(x)
        elif comma:
            if current is None:
                raise DessinParseError("unexpected ','", line, col)
        else:
            raise DessinParseError(f"unexpected character {other!r}", line, col)
    if current is not None:
        raise DessinParseError("unclosed '('", line, column + len(text))
    return cycles


def parse_document(text: str) -> DessinDocument:
    fields: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise DessinParseError("expected 'key = value'", lineno, col)
        key_part, value = body.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if key not in ("n", "sigma", "alpha", "name"):
            hint = " (phi is derived, never read)" if key == "phi" else ""
            raise DessinParseError(f"unknown key {key!r}{hint}", lineno, key_col)
        if not fields and key != "n":
            raise DessinParseError("'n = <int>' must come first", lineno, key_col)
        if key in fields:
            raise DessinParseError(f"duplicate key {key!r}", lineno, key_col)
        fields[key] = (value, lineno, len(key_part) + 2)
    if "n" not in fields:
        raise DessinParseError("missing 'n = <int>'", 1, 1)
    value, lineno, col = fields["n"]
    if not value.strip().isdigit() or int(value) < 1:
        raise DessinParseError(f"n must be a positive integer, got {value.strip()!r}", lineno, col)
    n = int(value)
    last_line = max(1, len(text.splitlines()))
    for key in ("sigma", "alpha"):
        if key not in fields:
            raise DessinParseError(f"missing '{key} = <cycles>'", last_line, 1)
        text_, ln, c = fields[key]
        parse_cycles(text_, n, ln, c)
    name = fields["name"][0].strip() if "name" in fields else None
    return DessinDocument(n, fields["sigma"][0].strip(), fields["alpha"][0].strip(), name or None)


def parse_dessin(text: str) -> Dessin:
    """Parse a ``.dessin`` document into a validated dessin.

    Raises DessinParseError for malformed input and NotTransitiveError when
    the permutations generate an intransitive group.
    """
    doc = parse_document(text)
    sigma = Permutation.from_cycles(doc.n, parse_cycles(doc.sigma_text, doc.n))
    alpha = Permutation.from_cycles(doc.n, parse_cycles(doc.alpha_text, doc.n))
    return new_dessin(doc.n, sigma, alpha)


def _cycles_text(p: Permutation) -> str:
    return "" if p.is_identity() else p.cycle_string()


def format_document(doc: DessinDocument) -> str:
    lines = [f"n = {doc.n}"]
    if doc.name:
        lines.append(f"name = {doc.name}")
    lines.append(f"sigma = {doc.sigma_text}".rstrip())
    lines.append(f"alpha = {doc.alpha_text}".rstrip())
    return "\n".join(lines) + "\n"


def document_of(d: Dessin, name: Optional[str] = None) -> DessinDocument:
    return DessinDocument(d.n, _cycles_text(d.sigma), _cycles_text(d.alpha), name)


def format_dessin(d: Dessin, name: Optional[str] = None) -> str:
    """Canonical document text: fixed points dropped, cycles led by their least label."""
    return format_document(document_of(d, name))


# ---------------------------------------------------------------------------
# reports


def report_data(d: Dessin, max_dim: Optional[int] = None) -> dict:
    alg = algebra.presentation(d)
    q = full_quiver(d)
    formula_dim = algebra.centre_dimension_formula(d)
    try:
        brute = algebra.centre_bruteforce(d, max_dim=max_dim).dim
    except DimensionBoundExceeded:
        brute = None
    rels = {kind.value: [[list(t) for t in r.terms] if kind is RelationKind.TYPE_ONE else list(r.terms[0])
                         for r in alg.relations_of(kind)]
            for kind in RelationKind}
    dc = duality_checks(d)
    return {
        "n": d.n,
        "sigma": list(d.sigma.image),
        "alpha": list(d.alpha.image),
        "phi": list(d.phi.image),
        "passport": passport(d).as_dict(),
        "quiver": {
            "vertices": [list(v) for v in q.vertices],
            "arrows": [
                {"half_edge": a.half_edge, "source": list(a.source), "target": list(a.target), "formal": a.formal}
                for a in q.arrows
            ],
        },
        "relations": rels,
        "basis_count": alg.dim,
        "dim_formula": algebra.dimension_formula(d),
        "centre": {
            "formula_dim": formula_dim,
            "bruteforce_dim": brute,
            "bruteforce_available": brute is not None,
            "mismatch": brute is not None and brute != formula_dim,
            "loops": algebra.non_formal_loops(d),
        },
        "fingerprint": fingerprint(d).as_dict(),
        "duality_checks": {
            "labelled_equal": dc["labelled_equal"],
            "oriented_op_equal": dc["oriented_op_equal"],
            "note": DUALITY_NOTE,
        },
    }


def render_report(d: Dessin, format: str = "json", max_dim: Optional[int] = None, data: Optional[dict] = None) -> str:
    if data is None:
        data = report_data(d, max_dim=max_dim)
    if format == "json":
        return json.dumps(data, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    alg = algebra.presentation(d)
    pp = data["passport"]
    centre = data["centre"]
    out = [
        f"dessin on {d.n} half-edges",
        f"  sigma = {d.sigma.cycle_string()}",
        f"  alpha = {d.alpha.cycle_string()}",
        f"  phi   = {d.phi.cycle_string()}",
        f"passport: black {pp['black_degrees']} white {pp['white_degrees']} "
        f"faces {pp['face_degrees']} genus {pp['genus']}",
        f"quiver Q_D: {len(alg.vertices)} vertices, {len(alg.quiver.arrows)} arrows",
    ]
    for kind in RelationKind:
        rs = alg.relations_of(kind)
        out.append(f"{kind.value} relations ({len(rs)}):")
        for r in rs:
            words = [" ".join(f"a{i}" for i in t) for t in r.terms]
            out.append("  " + " - ".join(words))
    out.append(f"dim algebra: {data['basis_count']} (formula {data['dim_formula']})")
    brute = centre["bruteforce_dim"] if centre["bruteforce_available"] else "n/a"
    flag = "  MISMATCH" if centre["mismatch"] else ""
    out.append(f"dim centre: formula {centre['formula_dim']}, brute force {brute}{flag}")
    dc = data["duality_checks"]
    out.append(f"duality: labelled_equal={dc['labelled_equal']} oriented_op_equal={dc['oriented_op_equal']}")
    return "\n".join(out) + "\n"
