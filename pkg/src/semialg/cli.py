"""Batch command-line front end.

Reads a matrix / graph / grid / monomial-sum file, runs the selected task
over the selected semiring (optionally interval-lifted), and writes the
result.  Exit codes: 0 success, 2 parse error, 3 domain error (undefined
closure, wrong semiring for a task, invalid carrier), 4 dimension
mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import fileio
from .errors import DimensionError, ParseError, SemialgError, SemiringError
from .graphs import max_profit, max_width_paths, shortest_paths
from .idemcalc import dequant_sample, legendre, newton_set, sup_convolution
from .interval import lift_semiring
from .matrix import (
    Matrix,
    OpCounters,
    bellman_solve,
    identity,
    ldm_factorize,
    ldm_solve,
    mat_closure,
    mat_mul,
)
from .semiring import Semiring, make_semiring

TASKS = (
    "closure",
    "solve",
    "shortest-path",
    "max-width",
    "max-profit",
    "invert",
    "legendre",
    "convolve",
    "dequant",
    "newton",
)

_METHOD_ALIASES = {
    "escalator": "escalator",
    "gauss": "gauss_jordan",
    "power": "power_sum",
    "ldm": "ldm",
    "iterate": "iterate",
}

_PARAM_KEYS = ("a", "b", "h", "xi0", "xistep", "xin")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_DIMENSION = 4


@dataclass
class RunConfig:
    task: str
    semiring: Optional[str] = None
    params: dict = field(default_factory=dict)
    method: str = "gauss"
    interval: bool = False
    fmt: str = "tsv"
    report_counts: bool = False
    horizon: Optional[int] = None


def _parse_params(spec: Optional[str]) -> dict:
    params: dict = {}
    if not spec:
        return params
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep or key not in _PARAM_KEYS:
            raise ParseError(
                f"malformed --param entry {item!r}; known keys: {', '.join(_PARAM_KEYS)}"
            )
        try:
            params[key] = float(value)
        except ValueError:
            raise ParseError(f"malformed --param value in {item!r}") from None
    return params


def _build_override(config: RunConfig) -> Optional[Semiring]:
    if config.semiring is None:
        return None
    name = config.semiring
    kwargs = {}
    if name == "maxmin":
        for k in ("a", "b"):
            if k in config.params:
                kwargs[k] = config.params[k]
    elif name == "maslov_deform":
        if "h" in config.params:
            kwargs["h"] = config.params["h"]
    return make_semiring(name, **kwargs)


def _emit_matrix(A: Matrix, config: RunConfig) -> str:
    if config.fmt == "json":
        return fileio.format_matrix_json(A)
    return fileio.format_matrix_tsv(A)


def _counts_block(n: int, cols: int, fact: OpCounters, solve: OpCounters) -> str:
    return (
        f"# op-counts n={n} columns={cols}\n"
        f"# factorize: add={fact.n_add} [(2n^3-3n^2+n)/6]"
        f" mul={fact.n_mul} [(2n^3+3n^2-5n)/6]"
        f" star={fact.n_star} [n(n+1)/2]\n"
        f"# solve: add={solve.n_add} [n^2-n per column]"
        f" mul={solve.n_mul} [n^2 per column]"
        f" star={solve.n_star} [n per column]\n"
    )


def run(config: RunConfig, text: str) -> str:
    """Execute one task over one input document; returns the output text."""
    if config.task not in TASKS:
        raise ParseError(f"unknown task {config.task!r}; expected one of {TASKS}")
    method = _METHOD_ALIASES.get(config.method)
    if method is None:
        raise ParseError(
            f"unknown method {config.method!r}; expected one of "
            f"{', '.join(_METHOD_ALIASES)}"
        )
    override = _build_override(config)

    if config.task in ("closure", "invert", "solve"):
        return _run_matrix_task(config, text, method, override)
    if config.task in ("shortest-path", "max-width", "max-profit"):
        return _run_graph_task(config, text, override)
    if config.task in ("legendre", "convolve"):
        return _run_grid_task(config, text, override)
    return _run_monomial_task(config, text)


def _parse_matrices(config: RunConfig, text: str, override) -> list:
    if config.fmt == "json":
        return fileio.parse_matrix_json(text, override, config.interval)
    return fileio.parse_matrix_blocks(text, override, config.interval)


def _run_matrix_task(config, text, method, override) -> str:
    blocks = _parse_matrices(config, text, override)

    if config.task == "closure":
        if len(blocks) != 1:
            raise ParseError("closure expects a single matrix")
        if method not in ("escalator", "gauss_jordan", "power_sum"):
            raise ParseError(f"closure does not support method {config.method!r}")
        return _emit_matrix(mat_closure(blocks[0], method), config)

    if config.task == "invert":
        if len(blocks) != 1:
            raise ParseError("invert expects a single matrix")
        if config.interval:
            raise SemiringError("invert does not support interval mode")
        A = blocks[0]
        if A.semiring.name != "real_field":
            raise SemiringError(
                f"invert requires semiring real_field, got {A.semiring.name}"
            )
        return _emit_matrix(mat_closure(A, "gauss_jordan"), config)

    # solve: A alone (B defaults to the identity, yielding A*) or A then B
    if len(blocks) not in (1, 2):
        raise ParseError(f"solve expects one or two matrices, got {len(blocks)}")
    A = blocks[0]
    B = blocks[1] if len(blocks) == 2 else identity(A.semiring, A.rows)
    if method == "ldm":
        fact_counts, solve_counts = OpCounters(), OpCounters()
        T = ldm_factorize(A, fact_counts)
        X = ldm_solve(T, B, solve_counts)
        out = _emit_matrix(X, config)
        if config.report_counts:
            out += _counts_block(A.rows, B.cols, fact_counts, solve_counts)
        return out
    if method == "iterate":
        X = bellman_solve(A, B, "iterate")
    else:
        X = mat_mul(mat_closure(A, method), B)
    out = _emit_matrix(X, config)
    if config.report_counts:
        out += "# op-counts are instrumented for --method ldm only\n"
    return out


def _run_graph_task(config, text, override) -> str:
    G, terminal = fileio.parse_graph_tsv(text, override, config.interval)
    if config.task == "shortest-path":
        return _emit_matrix(shortest_paths(G), config)
    if config.task == "max-width":
        return _emit_matrix(max_width_paths(G), config)
    S = G.semiring
    if terminal is None:
        terminal_m = Matrix(G.n_nodes, 1, (S.one,) * G.n_nodes, S)
    else:
        if len(terminal) != G.n_nodes:
            raise DimensionError(
                f"@terminal has {len(terminal)} entries for {G.n_nodes} nodes"
            )
        terminal_m = Matrix(G.n_nodes, 1, tuple(terminal), S)
    return _emit_matrix(max_profit(G, terminal_m, config.horizon), config)


def _run_grid_task(config, text, override) -> str:
    grids = fileio.parse_grid_blocks(text, override, config.interval)
    if config.task == "convolve":
        if len(grids) != 2:
            raise ParseError(f"convolve expects two grid blocks, got {len(grids)}")
        return fileio.format_grid_tsv(sup_convolution(grids[0], grids[1]))
    if len(grids) != 1:
        raise ParseError(f"legendre expects a single grid block, got {len(grids)}")
    phi = grids[0]
    p = config.params
    xi0 = p.get("xi0", phi.origin)
    xistep = p.get("xistep", phi.step)
    xin = int(p.get("xin", len(phi)))
    return fileio.format_grid_tsv(legendre(phi, (xi0, xistep, xin)))


def _run_monomial_task(config, text) -> str:
    if config.interval:
        raise SemiringError(f"{config.task} does not support interval mode")
    f, file_h, points = fileio.parse_monomials_json(text)
    if config.task == "newton":
        return fileio.format_points_tsv(newton_set(f))
    h = config.params.get("h", file_h)
    if h is None:
        raise ParseError("dequant needs h (via --param h=.. or the input file)")
    if points is None:
        raise ParseError("dequant needs evaluation points in the input file")
    lines = [fileio.format_real(dequant_sample(f, h, x)) for x in points]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semialg",
        description="Universal semiring solvers: path problems, fixed points, "
        "closures, interval runs, idempotent calculus.",
    )
    parser.add_argument("--task", required=True, choices=TASKS)
    parser.add_argument(
        "--semiring",
        help="instance name (overrides the input file's declaration)",
    )
    parser.add_argument(
        "--param",
        help="comma-separated key=value pairs: a=,b= (maxmin), h= (deformation), "
        "xi0=,xistep=,xin= (legendre output grid)",
    )
    parser.add_argument(
        "--method",
        default="gauss",
        help="closure method (escalator|gauss|power) or solve route (ldm|iterate)",
    )
    parser.add_argument(
        "--interval",
        action="store_true",
        help="run the task over the weak interval extension; carrier tokens lo..hi",
    )
    parser.add_argument("--format", dest="fmt", default="tsv", choices=("tsv", "json"))
    parser.add_argument(
        "--report-counts",
        action="store_true",
        help="append an operation-count block (solve with --method ldm)",
    )
    parser.add_argument("--horizon", type=int, help="path-length bound for max-profit")
    parser.add_argument("--input", help="input path (default: stdin)")
    parser.add_argument("--output", help="output path (default: stdout)")
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            task=args.task,
            semiring=args.semiring,
            params=_parse_params(args.param),
            method=args.method,
            interval=args.interval,
            fmt=args.fmt,
            report_counts=args.report_counts,
            horizon=args.horizon,
        )
        if args.input:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        out = run(config, text)
    except ParseError as exc:
        print(f"semialg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionError as exc:
        print(f"semialg: dimension error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except SemiringError as exc:
        print(f"semialg: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SemialgError as exc:
        print(f"semialg: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"semialg: i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
