"""Text formats for matrices, graphs, grid functions and monomial sums.

Carrier tokens are locale-independent: decimal literals (15 significant
digits on output), ``inf`` / ``-inf``, ``true`` / ``false``, and interval
bounds joined as ``lo..hi``.  Matrix TSV starts with a ``rows cols
semiring-name`` header; graph TSV uses ``@semiring`` / ``@nodes`` /
``@terminal`` directives, ``#`` comments and 1-based ``src dst weight``
arc lines; grid TSV starts with ``origin step n semiring-name``.
"""

from __future__ import annotations

import json
import math
from typing import Optional, Sequence

from .errors import ParseError
from .graphs import WeightedDigraph, graph_from_edges
from .idemcalc import GridFunction, MonomialSum, NewtonSet, monomial_sum
from .interval import Interval, lift_semiring
from .matrix import Matrix
from .semiring import Semiring, make_semiring


# -- scalar tokens -----------------------------------------------------------------


def format_real(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return f"{x:.15g}"


def format_carrier(S: Semiring, x) -> str:
    if isinstance(x, Interval):
        return f"{format_carrier(S.base, x.lower)}..{format_carrier(S.base, x.upper)}"
    if isinstance(x, bool):
        return "true" if x else "false"
    return format_real(x)


def _parse_scalar(token: str):
    if token == "inf":
        return math.inf
    if token == "-inf":
        return -math.inf
    if token == "true":
        return True
    if token == "false":
        return False
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"malformed carrier token {token!r}") from None


def parse_carrier(S: Semiring, token: str):
    """Parse one token as a carrier of S (intervals for lifted instances).

    Degenerate intervals may be written as plain scalars.
    """
    if S.base is not None:
        if ".." in token:
            lo_tok, _, hi_tok = token.partition("..")
            lo = _parse_scalar(lo_tok)
            hi = _parse_scalar(hi_tok)
        else:
            lo = hi = _parse_scalar(token)
        return S.check(Interval(lo, hi))
    if ".." in token:
        raise ParseError(
            f"interval token {token!r} outside interval mode"
        )
    return S.check(_parse_scalar(token))


def resolve_semiring(
    file_name: str,
    override: Optional[Semiring] = None,
    interval: bool = False,
) -> Semiring:
    """Pick the instance: an explicit override wins over the file's name."""
    S = override if override is not None else make_semiring(file_name)
    return lift_semiring(S) if interval and S.base is None else S


# -- matrices ------------------------------------------------------------------------


def parse_matrix_blocks(
    text: str,
    override: Optional[Semiring] = None,
    interval: bool = False,
) -> list:
    """Parse one or more concatenated matrix TSV blocks."""
    lines = [
        ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix input")
    matrices = []
    pos = 0
    while pos < len(lines):
        head = lines[pos].split()
        if len(head) != 3:
            raise ParseError(
                f"expected matrix header 'rows cols semiring-name', got {lines[pos]!r}"
            )
        try:
            rows, cols = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError(f"malformed matrix header {lines[pos]!r}") from None
        S = resolve_semiring(head[2], override, interval)
        if pos + 1 + rows > len(lines):
            raise ParseError(f"matrix block truncated: expected {rows} rows")
        data = []
        for r in range(rows):
            toks = lines[pos + 1 + r].split()
            if len(toks) != cols:
                raise ParseError(
                    f"row {r + 1} has {len(toks)} entries, expected {cols}"
                )
            data.extend(parse_carrier(S, t) for t in toks)
        matrices.append(Matrix(rows, cols, tuple(data), S))
        pos += 1 + rows
    return matrices


def parse_matrix_tsv(
    text: str, override: Optional[Semiring] = None, interval: bool = False
) -> Matrix:
    blocks = parse_matrix_blocks(text, override, interval)
    if len(blocks) != 1:
        raise ParseError(f"expected a single matrix, got {len(blocks)} blocks")
    return blocks[0]


def format_matrix_tsv(A: Matrix) -> str:
    S = A.semiring
    name = S.base.name if S.base is not None else S.name
    out = [f"{A.rows}\t{A.cols}\t{name}"]
    for i in range(A.rows):
        out.append(
            "\t".join(format_carrier(S, A.at(i, j)) for j in range(A.cols))
        )
    return "\n".join(out) + "\n"


def _carrier_to_json(S: Semiring, x):
    if isinstance(x, bool):
        return x
    if isinstance(x, float) and math.isfinite(x):
        return x
    return format_carrier(S, x)


def _carrier_from_json(S: Semiring, v):
    if isinstance(v, str):
        return parse_carrier(S, v)
    if isinstance(v, bool):
        x = v
    elif isinstance(v, (int, float)):
        x = float(v)
    else:
        raise ParseError(f"malformed JSON carrier {v!r}")
    return S.check(Interval(x, x)) if S.base is not None else S.check(x)


def format_matrix_json(A: Matrix) -> str:
    S = A.semiring
    name = S.base.name if S.base is not None else S.name
    obj = {
        "semiring": name,
        "rows": A.rows,
        "cols": A.cols,
        "data": [_carrier_to_json(S, x) for x in A.data],
    }
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def parse_matrix_json(
    text: str, override: Optional[Semiring] = None, interval: bool = False
) -> list:
    """Parse a JSON matrix object, an {A, B} pair, or a list of objects."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if isinstance(obj, dict) and "A" in obj:
        parts = [obj["A"]] + ([obj["B"]] if "B" in obj else [])
    elif isinstance(obj, list):
        parts = obj
    else:
        parts = [obj]
    return [_matrix_from_json_obj(p, override, interval) for p in parts]


def _matrix_from_json_obj(
    obj, override: Optional[Semiring], interval: bool
) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix JSON must be an object")
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        name = obj["semiring"]
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix JSON: {exc}") from None
    S = resolve_semiring(name, override, interval)
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ParseError("matrix JSON data length does not match shape")
    return Matrix(rows, cols, tuple(_carrier_from_json(S, v) for v in data), S)


# -- graphs ---------------------------------------------------------------------------


def parse_graph_tsv(
    text: str,
    override: Optional[Semiring] = None,
    interval: bool = False,
):
    """Parse the arc-list graph format.

    Returns (digraph, terminal) where ``terminal`` is the list of carriers
    from an optional ``@terminal`` directive (or None).
    """
    name = None
    n_nodes = None
    terminal_toks = None
    arc_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            parts = line.split()
            key = parts[0]
            if key == "@semiring" and len(parts) == 2:
                name = parts[1]
            elif key == "@nodes" and len(parts) == 2:
                try:
                    n_nodes = int(parts[1])
                except ValueError:
                    raise ParseError(f"malformed node count {parts[1]!r}") from None
            elif key == "@terminal" and len(parts) >= 2:
                terminal_toks = parts[1:]
            else:
                raise ParseError(f"unknown directive {line!r}")
            continue
        arc_lines.append(line)

    if name is None and override is None:
        raise ParseError("graph file lacks @semiring and no --semiring given")
    S = resolve_semiring(name or override.name, override, interval)

    edges = []
    max_node = 0
    for line in arc_lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"malformed arc line {line!r}")
        try:
            src, dst = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed arc endpoints in {line!r}") from None
        w = parse_carrier(S, parts[2])
        edges.append((src, dst, w))
        max_node = max(max_node, src, dst)

    n = n_nodes if n_nodes is not None else max_node
    if n == 0:
        raise ParseError("graph has no nodes (need @nodes or at least one arc)")
    G = graph_from_edges(n, edges, S)
    terminal = (
        [parse_carrier(S, t) for t in terminal_toks]
        if terminal_toks is not None
        else None
    )
    return G, terminal


# -- grid functions ----------------------------------------------------------------------


def parse_grid_blocks(
    text: str,
    override: Optional[Semiring] = None,
    interval: bool = False,
) -> list:
    """Parse one or more grid-function TSV blocks."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty grid input")
    grids = []
    pos = 0
    while pos < len(lines):
        head = lines[pos].split()
        if len(head) != 4:
            raise ParseError(
                f"expected grid header 'origin step n semiring-name', got {lines[pos]!r}"
            )
        try:
            origin, step, count = float(head[0]), float(head[1]), int(head[2])
        except ValueError:
            raise ParseError(f"malformed grid header {lines[pos]!r}") from None
        S = resolve_semiring(head[3], override, interval)
        toks: list = []
        pos += 1
        while pos < len(lines) and len(toks) < count:
            toks.extend(lines[pos].split())
            pos += 1
        if len(toks) != count:
            raise ParseError(f"expected {count} grid values, got {len(toks)}")
        values = tuple(parse_carrier(S, t) for t in toks)
        grids.append(GridFunction(origin, step, values, S))
    return grids


def format_grid_tsv(phi: GridFunction) -> str:
    S = phi.semiring
    name = S.base.name if S.base is not None else S.name
    out = [
        f"{format_real(phi.origin)}\t{format_real(phi.step)}\t{len(phi)}\t{name}"
    ]
    out.extend(format_carrier(S, v) for v in phi.values)
    return "\n".join(out) + "\n"


# -- monomial sums and point sets -----------------------------------------------------------


def parse_monomials_json(text: str):
    """Parse a monomial-sum document.

    Either a bare array of {"coeff": a, "exponent": [..]} terms, or an
    object {"terms": [...], "h": .., "points": [[..], ..]} carrying
    evaluation data; returns (MonomialSum, h-or-None, points-or-None).
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    h = None
    points = None
    if isinstance(obj, dict):
        terms_obj = obj.get("terms")
        h = obj.get("h")
        points = obj.get("points")
    else:
        terms_obj = obj
    if not isinstance(terms_obj, list) or not terms_obj:
        raise ParseError("monomial sum JSON needs a non-empty terms array")
    terms = []
    for t in terms_obj:
        try:
            coeff = float(t["coeff"])
            expo = [float(e) for e in t["exponent"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed monomial term {t!r}: {exc}") from None
        terms.append((coeff, expo))
    if points is not None:
        if not isinstance(points, list):
            raise ParseError("points must be an array of coordinate arrays")
        points = [
            [float(c) for c in p] if isinstance(p, list) else [float(p)]
            for p in points
        ]
    if h is not None:
        h = float(h)
    return monomial_sum(terms), h, points


def format_points_tsv(N: NewtonSet) -> str:
    out = ["\t".join(format_real(c) for c in p) for p in N.points]
    return "\n".join(out) + "\n"
