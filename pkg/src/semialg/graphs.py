"""Weighted digraphs and the algebraic path problem.

A weighted digraph over a semiring is the same data as a square matrix
(absent arc <-> semiring zero), so the path problems below are thin,
task-checked wrappers around the matrix closure: shortest paths over
min-plus, maximal path width over max-min, profit maximization over
max-plus, and real matrix inversion as the degenerate field case.

Node identifiers are 1-based in the public constructors and in file
formats (nodes x_1 .. x_n); internal storage, like the matrix view, is
0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import DimensionError, SemiringError
from .matrix import Matrix, mat_closure, mat_mul, mat_pow
from .semiring import Carrier, Semiring

#: Largest node count accepted by the exhaustive path oracle.
ORACLE_MAX_NODES = 8


@dataclass(eq=True)
class WeightedDigraph:
    """Node set plus arc-weight map; arcs with zero weight are never stored."""

    n_nodes: int
    arcs: Dict[Tuple[int, int], Carrier]
    semiring: Semiring


def graph_from_edges(
    n: int,
    edges: Iterable[Tuple[int, int, Carrier]],
    semiring: Semiring,
) -> WeightedDigraph:
    """Build a digraph from 1-based (src, dst, weight) triples.

    Duplicate arcs are combined with (+); arcs whose combined weight is the
    semiring zero are dropped.
    """
    if n <= 0:
        raise DimensionError(f"node count must be positive, got {n}")
    arcs: Dict[Tuple[int, int], Carrier] = {}
    for src, dst, w in edges:
        if not (1 <= src <= n and 1 <= dst <= n):
            raise DimensionError(
                f"arc ({src},{dst}) outside node range 1..{n}"
            )
        semiring.check(w)
        key = (src - 1, dst - 1)
        if key in arcs:
            arcs[key] = semiring.add_op(arcs[key], w)
        else:
            arcs[key] = w
    arcs = {k: w for k, w in arcs.items() if w != semiring.zero}
    return WeightedDigraph(n, arcs, semiring)


def to_matrix(G: WeightedDigraph) -> Matrix:
    n = G.n_nodes
    data = [G.semiring.zero] * (n * n)
    for (i, j), w in G.arcs.items():
        data[i * n + j] = w
    return Matrix(n, n, tuple(data), G.semiring)


def from_matrix(A: Matrix) -> WeightedDigraph:
    if A.rows != A.cols:
        raise DimensionError("adjacency matrix must be square")
    zero = A.semiring.zero
    arcs = {
        (i, j): A.at(i, j)
        for i in range(A.rows)
        for j in range(A.cols)
        if A.at(i, j) != zero
    }
    return WeightedDigraph(A.rows, arcs, A.semiring)


def path_weight(G: WeightedDigraph, path: Sequence[int]) -> Carrier:
    """(*)-product of arc weights along a 1-based node sequence.

    An empty transition list (a single node) has weight one; a missing arc
    contributes the absorbing zero.
    """
    S = G.semiring
    for node in path:
        if not (1 <= node <= G.n_nodes):
            raise DimensionError(f"node {node} outside 1..{G.n_nodes}")
    w = S.one
    for a, b in zip(path, path[1:]):
        arc = G.arcs.get((a - 1, b - 1), S.zero)
        w = S.mul_op(w, arc)
    return w


def brute_force_star(G: WeightedDigraph, max_len: int) -> Matrix:
    """(+)-aggregate of all path weights up to the given length, per pair.

    Exhaustively walks every (possibly non-simple) path, so it is an
    independent oracle for :func:`~semialg.matrix.mat_closure` at small
    sizes; length-0 paths contribute the unit on the diagonal.
    """
    if G.n_nodes > ORACLE_MAX_NODES:
        raise DimensionError(
            f"oracle limited to {ORACLE_MAX_NODES} nodes, got {G.n_nodes}"
        )
    if max_len < 0:
        raise DimensionError("max_len must be >= 0")
    S = G.semiring
    n = G.n_nodes
    add, mul = S.add_op, S.mul_op
    out = [[S.zero] * n for _ in range(n)]
    succ: Dict[int, list] = {i: [] for i in range(n)}
    for (i, j), w in G.arcs.items():
        succ[i].append((j, w))

    for start in range(n):
        stack = [(start, S.one, 0)]
        row = out[start]
        while stack:
            node, weight, length = stack.pop()
            row[node] = add(row[node], weight)
            if length < max_len:
                for nxt, w in succ[node]:
                    stack.append((nxt, mul(weight, w), length + 1))
    return Matrix.from_rows(S, out)


def _require_instance(G: WeightedDigraph, names: Tuple[str, ...], task: str) -> None:
    # interval-lifted instances qualify through their base, so the path
    # problems stay interval-capable with unchanged code
    S = G.semiring
    base = S.base if S.base is not None else S
    if base.name not in names:
        raise SemiringError(
            f"{task} requires semiring {' or '.join(names)}, got {S.name}"
        )


def shortest_paths(G: WeightedDigraph) -> Matrix:
    """All-pairs shortest path lengths; unreachable pairs stay at +inf.

    Plain min-plus raises a closure error on negative cycles; the complete
    instance saturates instead.
    """
    _require_instance(G, ("minplus", "minplus_complete"), "shortest-path")
    return mat_closure(to_matrix(G), "gauss_jordan")


def max_width_paths(G: WeightedDigraph) -> Matrix:
    """Maximum over paths of the minimum arc width, per node pair."""
    _require_instance(G, ("maxmin",), "max-width")
    return mat_closure(to_matrix(G), "gauss_jordan")


def max_profit(
    G: WeightedDigraph,
    terminal: Matrix,
    horizon: Optional[int] = None,
) -> Matrix:
    """Best achievable profit per start node, for terminal profits b_i.

    With a horizon k the result is A^k B (exactly k transitions); without
    one it is A* B, the supremum over unrestricted path lengths.  A
    positive-profit cycle makes the unrestricted problem ill-posed in plain
    max-plus and surfaces as a closure error; the complete instance returns
    +inf there.
    """
    _require_instance(G, ("maxplus", "maxplus_complete"), "max-profit")
    A = to_matrix(G)
    if terminal.rows != G.n_nodes:
        raise DimensionError(
            f"terminal vector has {terminal.rows} rows, expected {G.n_nodes}"
        )
    if horizon is not None:
        if horizon < 0:
            raise DimensionError("horizon must be >= 0")
        return mat_mul(mat_pow(A, horizon), terminal)
    return mat_mul(mat_closure(A, "gauss_jordan"), terminal)


def invert_via_star(A: Matrix) -> Matrix:
    """(I - A)^(-1) over the real field, through the universal closure code.

    A unit pivot along the elimination path (singular I - A) raises the
    closure error with its index.
    """
    if A.semiring.name != "real_field":
        raise SemiringError(
            f"invert requires semiring real_field, got {A.semiring.name}"
        )
    return mat_closure(A, "gauss_jordan")
