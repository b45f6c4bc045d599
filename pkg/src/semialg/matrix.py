"""Generic matrix algebra over any semiring.

Everything here is written against the :class:`~semialg.semiring.Semiring`
descriptor: sum, product, three matrix-closure algorithms (block escalator,
Gauss-Jordan elimination, bounded power sums), triangular substitution
solvers, the LDM-style factorization and the fixed-point solver for
``X = AX (+) B``.

The substitution and factorization kernels execute their loops literally,
with no neutral-element short-circuits, so that instrumented operation
counts are an exact function of ``n``:

* forward/back substitution: (n^2-n)/2 additions and multiplications,
* diagonal closure solve: n stars and n multiplications,
* general solve through a factorization: n^2-n additions, n^2
  multiplications, n stars (per column),
* factorization itself: (2n^3-3n^2+n)/6 additions,
  (2n^3+3n^2-5n)/6 multiplications, n(n+1)/2 stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CarrierError,
    ClosureUndefinedError,
    DimensionError,
    SemiringError,
    StabilizationError,
)
from .semiring import Carrier, Semiring

#: Iteration cap for the stabilization-based methods, as a multiple of n.
STABILIZATION_CAP_FACTOR = 4

CLOSURE_METHODS = ("escalator", "gauss_jordan", "power_sum")
SOLVE_METHODS = ("closure", "ldm", "iterate")


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix with entries in a fixed semiring."""

    rows: int
    cols: int
    data: tuple
    semiring: Semiring

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionError(f"matrix shape {self.rows}x{self.cols} is empty")
        if len(self.data) != self.rows * self.cols:
            raise DimensionError(
                f"data length {len(self.data)} != {self.rows}*{self.cols}"
            )
        valid = self.semiring.valid_op
        for x in self.data:
            if not valid(x):
                raise CarrierError(
                    f"{x!r} is not a valid {self.semiring.name} carrier"
                )

    @classmethod
    def from_rows(cls, semiring: Semiring, rows: Sequence[Sequence[Carrier]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise DimensionError("ragged rows")
            flat.extend(row)
        return cls(r, c, tuple(flat), semiring)

    def at(self, i: int, j: int) -> Carrier:
        return self.data[i * self.cols + j]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self.data[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list:
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)


def zeros(semiring: Semiring, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, (semiring.zero,) * (rows * cols), semiring)


def identity(semiring: Semiring, n: int) -> Matrix:
    data = [semiring.zero] * (n * n)
    for i in range(n):
        data[i * n + i] = semiring.one
    return Matrix(n, n, tuple(data), semiring)


@dataclass
class OpCounters:
    """Per-computation tally of semiring operations.

    Pass a fresh instance to exactly one solver invocation; the counts then
    reproduce the closed-form claims above.
    """

    n_add: int = 0
    n_mul: int = 0
    n_star: int = 0


@dataclass(frozen=True)
class LdmTriple:
    """Strictly lower / diagonal / strictly upper factorization result.

    The triangular factors carry the semiring zero on their principal
    diagonals; ``M* D* L*`` reconstructs the closure of the factored matrix
    wherever the stars are defined.
    """

    L: Matrix
    D: tuple
    M: Matrix

    @property
    def order(self) -> int:
        return self.L.rows


# -- basic checks --------------------------------------------------------------


def _same_semiring(A: Matrix, B: Matrix) -> Semiring:
    if A.semiring != B.semiring:
        raise SemiringError(
            f"semiring mismatch: {A.semiring.name} vs {B.semiring.name}"
        )
    return A.semiring


def _require_square(A: Matrix) -> int:
    if A.rows != A.cols:
        raise DimensionError(f"expected a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def _require_strict_triangular(A: Matrix, lower: bool) -> None:
    n = _require_square(A)
    zero = A.semiring.zero
    kind = "lower" if lower else "upper"
    for i in range(n):
        for j in range(n):
            off = (j > i) if lower else (j < i)
            if (off or i == j) and A.at(i, j) != zero:
                raise DimensionError(
                    f"matrix is not strictly {kind} triangular at ({i},{j})"
                )


# -- elementwise and product ops -----------------------------------------------


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    """Entrywise semiring sum."""
    S = _same_semiring(A, B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    add = S.add_op
    return Matrix(A.rows, A.cols, tuple(map(add, A.data, B.data)), S)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Matrix product with (+)-accumulated (*) terms.

    For the adjacency matrix of a weighted digraph, the (i,j) entry of the
    k-th power aggregates the weights of all length-k paths from i to j.
    """
    S = _same_semiring(A, B)
    if A.cols != B.rows:
        raise DimensionError(
            f"inner dimensions differ: {A.shape} x {B.shape}"
        )
    add, mul = S.add_op, S.mul_op
    n, m, p = A.rows, A.cols, B.cols
    brows = B.to_rows()
    out = []
    for i in range(n):
        arow = A.data[i * m : (i + 1) * m]
        for j in range(p):
            acc = mul(arow[0], brows[0][j])
            for k in range(1, m):
                acc = add(acc, mul(arow[k], brows[k][j]))
            out.append(acc)
    return Matrix(n, p, tuple(out), S)


def mat_pow(A: Matrix, k: int) -> Matrix:
    """k-th matrix power, with A^0 = I."""
    n = _require_square(A)
    if k < 0:
        raise DimensionError("negative matrix power")
    result = identity(A.semiring, n)
    for _ in range(k):
        result = mat_mul(result, A)
    return result


def mat_leq(A: Matrix, B: Matrix) -> bool:
    """Entrywise standard order (idempotent instances only)."""
    S = _same_semiring(A, B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    return all(S.leq(a, b) for a, b in zip(A.data, B.data))


# -- matrix closure --------------------------------------------------------------


def mat_closure(A: Matrix, method: str = "gauss_jordan") -> Matrix:
    """Closure A* = I (+) A (+) A^2 (+) ..., the regularized matrix star.

    The result satisfies ``A* = A A* (+) I``; over the real field it equals
    the ordinary inverse of (I - A).  Raises
    :class:`ClosureUndefinedError` when a scalar star encountered along the
    way is undefined, and :class:`StabilizationError` when ``power_sum``
    fails to reach a fixed point within its cap.
    """
    n = _require_square(A)
    S = A.semiring
    if method == "gauss_jordan":
        rows = _gauss_jordan_closure(S, A.to_rows(), n)
    elif method == "escalator":
        rows = _escalator_closure(S, A.to_rows())
    elif method == "power_sum":
        return _power_sum_closure(A)
    else:
        raise SemiringError(
            f"unknown closure method {method!r}; expected one of {CLOSURE_METHODS}"
        )
    return Matrix.from_rows(S, rows)


def _star_at(S: Semiring, x: Carrier, index: int) -> Carrier:
    try:
        return S.closure_op(x)
    except ClosureUndefinedError as exc:
        raise ClosureUndefinedError(f"{exc} (pivot {index})", index=index) from None


def _gauss_jordan_closure(S: Semiring, C: list, n: int) -> list:
    # Elimination form of the algebraic path problem: one pivot pass per
    # index k, folding paths through k into every entry.
    add, mul = S.add_op, S.mul_op
    for k in range(n):
        s = _star_at(S, C[k][k], k)
        crow = C[k]
        for i in range(n):
            if i == k:
                continue
            cik = mul(C[i][k], s)
            irow = C[i]
            for j in range(n):
                if j == k:
                    continue
                irow[j] = add(irow[j], mul(cik, crow[j]))
        for j in range(n):
            if j != k:
                crow[j] = mul(s, crow[j])
        for i in range(n):
            if i != k:
                C[i][k] = mul(C[i][k], s)
        C[k][k] = s
    return C


def _rows_add(S: Semiring, X: list, Y: list) -> list:
    add = S.add_op
    return [[add(a, b) for a, b in zip(xr, yr)] for xr, yr in zip(X, Y)]


def _rows_mul(S: Semiring, X: list, Y: list) -> list:
    add, mul = S.add_op, S.mul_op
    m = len(Y)
    p = len(Y[0])
    out = []
    for xr in X:
        row = []
        for j in range(p):
            acc = mul(xr[0], Y[0][j])
            for k in range(1, m):
                acc = add(acc, mul(xr[k], Y[k][j]))
            row.append(acc)
        out.append(row)
    return out


def _escalator_closure(S: Semiring, C: list) -> list:
    # Recursive 2x2 block partition; the closure of the whole matrix is
    # assembled from the closures of the leading block and of the coupled
    # complement D = A22 (+) A21 A11* A12.
    n = len(C)
    if n == 1:
        return [[_star_at(S, C[0][0], 0)]]
    k = n // 2
    A11 = [row[:k] for row in C[:k]]
    A12 = [row[k:] for row in C[:k]]
    A21 = [row[:k] for row in C[k:]]
    A22 = [row[k:] for row in C[k:]]
    A11s = _escalator_closure(S, A11)
    D = _rows_add(S, A22, _rows_mul(S, A21, _rows_mul(S, A11s, A12)))
    Ds = _escalator_closure(S, D)
    A21_11s = _rows_mul(S, A21, A11s)
    A11s_12 = _rows_mul(S, A11s, A12)
    TL = _rows_add(S, A11s, _rows_mul(S, A11s_12, _rows_mul(S, Ds, A21_11s)))
    TR = _rows_mul(S, A11s_12, Ds)
    BL = _rows_mul(S, Ds, A21_11s)
    out = [tl + tr for tl, tr in zip(TL, TR)]
    out.extend(bl + br for bl, br in zip(BL, Ds))
    return out


def _power_sum_closure(A: Matrix) -> Matrix:
    S = A.semiring
    if not S.is_idempotent:
        raise SemiringError("power_sum closure requires an idempotent semiring")
    n = A.rows
    total = identity(S, n)
    power = total
    for _ in range(STABILIZATION_CAP_FACTOR * n):
        power = mat_mul(power, A)
        nxt = mat_add(total, power)
        if nxt == total:
            return total
        total = nxt
    raise StabilizationError(
        f"power-sum closure did not stabilize within {STABILIZATION_CAP_FACTOR * n} "
        "iterations (divergent input?)"
    )


# -- substitution solvers ---------------------------------------------------------
# These run the classical single-column loops verbatim; multi-column right-hand
# sides are handled one column at a time and the counters accumulate the total.


def forward_subst(L: Matrix, B: Matrix, counters: OpCounters | None = None) -> Matrix:
    """Least X with X = LX (+) B for strictly lower triangular L."""
    _require_strict_triangular(L, lower=True)
    S = _same_semiring(L, B)
    n = L.rows
    if B.rows != n:
        raise DimensionError(f"rhs has {B.rows} rows, expected {n}")
    cnt = counters if counters is not None else OpCounters()
    add, mul = S.add_op, S.mul_op
    Lr = L.to_rows()
    cols = []
    for col in range(B.cols):
        b = B.column(col)
        x = [None] * n
        for i in range(n):
            xi = b[i]
            li = Lr[i]
            for j in range(i):
                xi = add(xi, mul(li[j], x[j]))
            x[i] = xi
        cnt.n_add += n * (n - 1) // 2
        cnt.n_mul += n * (n - 1) // 2
        cols.append(x)
    return _from_columns(S, cols)


def back_subst(M: Matrix, B: Matrix, counters: OpCounters | None = None) -> Matrix:
    """Least X with X = MX (+) B for strictly upper triangular M."""
    _require_strict_triangular(M, lower=False)
    S = _same_semiring(M, B)
    n = M.rows
    if B.rows != n:
        raise DimensionError(f"rhs has {B.rows} rows, expected {n}")
    cnt = counters if counters is not None else OpCounters()
    add, mul = S.add_op, S.mul_op
    Mr = M.to_rows()
    cols = []
    for col in range(B.cols):
        b = B.column(col)
        x = [None] * n
        for i in range(n - 1, -1, -1):
            xi = b[i]
            mi = Mr[i]
            for j in range(n - 1, i, -1):
                xi = add(xi, mul(mi[j], x[j]))
            x[i] = xi
        cnt.n_add += n * (n - 1) // 2
        cnt.n_mul += n * (n - 1) // 2
        cols.append(x)
    return _from_columns(S, cols)


def diag_closure_solve(
    D: Sequence[Carrier], B: Matrix, counters: OpCounters | None = None
) -> Matrix:
    """Solve X = diag(D) X (+) B via x_i = d_i* (*) b_i."""
    S = B.semiring
    n = len(D)
    if B.rows != n:
        raise DimensionError(f"rhs has {B.rows} rows, expected {n}")
    cnt = counters if counters is not None else OpCounters()
    mul = S.mul_op
    for i, d in enumerate(D):
        S.check(d)
    cols = []
    # the single-column fragment is re-run per column, stars included, so
    # the counters stay an exact per-column tally
    for col in range(B.cols):
        b = B.column(col)
        cols.append([mul(_star_at(S, D[i], i), b[i]) for i in range(n)])
        cnt.n_star += n
        cnt.n_mul += n
    return _from_columns(S, cols)


def _from_columns(S: Semiring, cols: list) -> Matrix:
    n = len(cols[0])
    data = []
    for i in range(n):
        data.extend(col[i] for col in cols)
    return Matrix(n, len(cols), tuple(data), S)


# -- factorization ------------------------------------------------------------------


def ldm_factorize(A: Matrix, counters: OpCounters | None = None) -> LdmTriple:
    """Factor a square matrix into strictly-lower / diagonal / strictly-upper
    parts whose stars reconstruct A* as M* D* L*.

    Works over any semiring as long as every scalar star met in the main
    loop is defined; an undefined pivot raises
    :class:`ClosureUndefinedError` carrying its index (no pivoting is
    attempted).
    """
    n = _require_square(A)
    S = A.semiring
    cnt = counters if counters is not None else OpCounters()
    add, mul = S.add_op, S.mul_op
    C = A.to_rows()
    v = [None] * n
    for j in range(n):
        for i in range(j + 1):
            v[i] = C[i][j]
        for k in range(j):
            vk = v[k]
            for i in range(k + 1, j + 1):
                v[i] = add(v[i], mul(C[i][k], vk))
                cnt.n_add += 1
                cnt.n_mul += 1
        for i in range(j):
            C[i][j] = mul(_star_at(S, C[i][i], i), v[i])
            cnt.n_star += 1
            cnt.n_mul += 1
        C[j][j] = v[j]
        for k in range(j):
            vk = v[k]
            for i in range(j + 1, n):
                C[i][j] = add(C[i][j], mul(C[i][k], vk))
                cnt.n_add += 1
                cnt.n_mul += 1
        d = _star_at(S, v[j], j)
        cnt.n_star += 1
        for i in range(j + 1, n):
            C[i][j] = mul(C[i][j], d)
            cnt.n_mul += 1

    zero = S.zero
    Lrows = [[C[i][j] if j < i else zero for j in range(n)] for i in range(n)]
    Mrows = [[C[i][j] if j > i else zero for j in range(n)] for i in range(n)]
    diag = tuple(C[i][i] for i in range(n))
    return LdmTriple(Matrix.from_rows(S, Lrows), diag, Matrix.from_rows(S, Mrows))


def ldm_solve(T: LdmTriple, B: Matrix, counters: OpCounters | None = None) -> Matrix:
    """Solve X = AX (+) B from a factorization of A.

    Chains the three stages Z = LZ (+) B, Y = DY (+) Z, X = MX (+) Y.
    """
    cnt = counters if counters is not None else OpCounters()
    Z = forward_subst(T.L, B, cnt)
    Y = diag_closure_solve(T.D, Z, cnt)
    return back_subst(T.M, Y, cnt)


# -- Bellman-style fixed point -----------------------------------------------------


def bellman_solve(A: Matrix, B: Matrix, method: str = "closure") -> Matrix:
    """Least solution of the stationary fixed-point system X = AX (+) B.

    ``closure`` computes A* B through Gauss-Jordan elimination; ``ldm``
    routes through the factorization; ``iterate`` runs the ascending
    iteration X_{k+1} = A X_k (+) B from X_0 = B (idempotent instances
    only) until stabilization.
    """
    n = _require_square(A)
    S = _same_semiring(A, B)
    if B.rows != n:
        raise DimensionError(f"rhs has {B.rows} rows, expected {n}")
    if method == "closure":
        return mat_mul(mat_closure(A, "gauss_jordan"), B)
    if method == "ldm":
        return ldm_solve(ldm_factorize(A), B)
    if method == "iterate":
        if not S.is_idempotent:
            raise SemiringError("iterate method requires an idempotent semiring")
        X = B
        for _ in range(STABILIZATION_CAP_FACTOR * n):
            nxt = mat_add(mat_mul(A, X), B)
            if nxt == X:
                return X
            X = nxt
        raise StabilizationError(
            f"fixed-point iteration did not stabilize within "
            f"{STABILIZATION_CAP_FACTOR * n} steps"
        )
    raise SemiringError(
        f"unknown solve method {method!r}; expected one of {SOLVE_METHODS}"
    )
