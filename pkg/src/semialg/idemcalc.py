"""Idempotent calculus on sampled functions and finite monomial sets.

Functions sampled on uniform grids take values in an idempotent semiring;
integration is the (+)-fold (a supremum in the standard order), the scalar
product inserts a multiplicative weight, convolution and the discrete
Legendre transform specialize to sup/inf formulas over max-plus and
min-plus, and sampled-kernel operators cover propagation of
Hamilton-Jacobi/Bellman type generically.

The dequantization side works on positive-coefficient monomial sums: the
log-scaled evaluation h*log f(exp(x/h)) converges, as h -> 0, to the
support function of the convex hull of the exponent vectors (the Newton
set), and products/sums of polynomials map to Minkowski sums/hulls of
unions of those sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence, Tuple

from .errors import DimensionError, SemiringError
from .interval import Interval
from .semiring import Carrier, Semiring

#: Instances on which the grid Legendre transform is meaningful: addition
#: picks an extremum and multiplication is numeric +.
PLUS_TIMES_NAMES = ("maxplus", "maxplus_complete", "minplus", "minplus_complete")


# -- grid functions ---------------------------------------------------------------


@dataclass(frozen=True)
class GridFunction:
    """Semiring-valued samples on the uniform grid origin + i*step."""

    origin: float
    step: float
    values: tuple
    semiring: Semiring

    def __post_init__(self):
        if not self.values:
            raise DimensionError("grid function needs at least one sample")
        if not (self.step > 0):
            raise DimensionError(f"grid step must be positive, got {self.step!r}")
        if not self.semiring.is_idempotent:
            raise SemiringError(
                f"grid calculus requires an idempotent semiring, got "
                f"{self.semiring.name}"
            )
        valid = self.semiring.valid_op
        for v in self.values:
            if not valid(v):
                self.semiring.check(v)

    def point(self, i: int) -> float:
        return self.origin + i * self.step

    def __len__(self) -> int:
        return len(self.values)


def _same_grid(phi: GridFunction, psi: GridFunction) -> Semiring:
    if phi.semiring != psi.semiring:
        raise SemiringError(
            f"semiring mismatch: {phi.semiring.name} vs {psi.semiring.name}"
        )
    if (phi.origin, phi.step, len(phi)) != (psi.origin, psi.step, len(psi)):
        raise DimensionError("grid mismatch")
    return phi.semiring


def idem_integral(phi: GridFunction) -> Carrier:
    """(+)-fold of all samples: the supremum in the standard order."""
    return reduce(phi.semiring.add_op, phi.values)


def scalar_product(phi: GridFunction, psi: GridFunction) -> Carrier:
    """(+)-fold of phi (*) psi: the integral of phi against the measure
    generated by psi (a delta-like psi evaluates phi at its support)."""
    S = _same_grid(phi, psi)
    return reduce(S.add_op, map(S.mul_op, phi.values, psi.values))


def sup_convolution(phi: GridFunction, psi: GridFunction) -> GridFunction:
    """Group convolution with (+) as the aggregator on the sum-range grid.

    Output index g aggregates phi[i] (*) psi[g-i] over the on-grid index
    pairs; pairs that fall off either grid are skipped (boundary
    truncation).
    """
    if phi.semiring != psi.semiring:
        raise SemiringError(
            f"semiring mismatch: {phi.semiring.name} vs {psi.semiring.name}"
        )
    if phi.step != psi.step:
        raise DimensionError(
            f"step mismatch: {phi.step!r} vs {psi.step!r}"
        )
    S = phi.semiring
    add, mul = S.add_op, S.mul_op
    a, b = phi.values, psi.values
    n, m = len(a), len(b)
    out = []
    for g in range(n + m - 1):
        lo = max(0, g - m + 1)
        hi = min(n - 1, g)
        acc = mul(a[lo], b[g - lo])
        for i in range(lo + 1, hi + 1):
            acc = add(acc, mul(a[i], b[g - i]))
        out.append(acc)
    return GridFunction(phi.origin + psi.origin, phi.step, tuple(out), S)


def _embed_scalar(S: Semiring, c: float) -> Carrier:
    return Interval(c, c) if S.base is not None else c


def _require_plus_times(S: Semiring, op: str) -> None:
    name = S.base.name if S.base is not None else S.name
    if name not in PLUS_TIMES_NAMES:
        raise SemiringError(
            f"{op} requires one of {PLUS_TIMES_NAMES} (got {S.name})"
        )


def legendre(phi: GridFunction, xi_grid: Tuple[float, float, int]) -> GridFunction:
    """Discrete Legendre transform: aggregate xi*x (*) phi(x) over the grid.

    Over max-plus this is sup_x(xi*x + phi(x)); over min-plus the dual
    inf reading.  ``xi_grid`` is an (origin, step, n) triple for the output
    grid.
    """
    S = phi.semiring
    _require_plus_times(S, "legendre transform")
    xo, xs, xn = xi_grid
    if xn < 1:
        raise DimensionError("empty output grid")
    if not (xs > 0):
        raise DimensionError(f"grid step must be positive, got {xs!r}")
    add, mul = S.add_op, S.mul_op
    xs_points = [phi.origin + i * phi.step for i in range(len(phi))]
    out = []
    for k in range(xn):
        xi = xo + k * xs
        acc = mul(_embed_scalar(S, xi * xs_points[0]), phi.values[0])
        for i in range(1, len(phi)):
            acc = add(acc, mul(_embed_scalar(S, xi * xs_points[i]), phi.values[i]))
        out.append(acc)
    return GridFunction(xo, xs, tuple(out), S)


# -- sampled-kernel operators --------------------------------------------------------


@dataclass(frozen=True)
class Kernel:
    """Dense samples K(x_i, y_j) of a two-point kernel, row-major."""

    rows: int
    cols: int
    values: tuple
    semiring: Semiring

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionError("kernel must be non-empty")
        if len(self.values) != self.rows * self.cols:
            raise DimensionError(
                f"kernel data length {len(self.values)} != {self.rows}*{self.cols}"
            )
        valid = self.semiring.valid_op
        for v in self.values:
            if not valid(v):
                self.semiring.check(v)

    def at(self, i: int, j: int) -> Carrier:
        return self.values[i * self.cols + j]


def kernel_from_function(
    S: Semiring, rows: int, cols: int, fn: Callable[[int, int], Carrier]
) -> Kernel:
    """Sample an index-based evaluator into a dense kernel."""
    vals = tuple(fn(i, j) for i in range(rows) for j in range(cols))
    return Kernel(rows, cols, vals, S)


def quadratic_cost_kernel(
    S: Semiring, origin: float, step: float, n: int, t: float
) -> Kernel:
    """Convenience kernel (x-y)^2 / (2t) on a square grid.

    Shipped as a demo propagator for min-plus Cauchy problems; any kernel
    sampled on the grid works with :func:`apply_integral_operator`.
    """
    if not (t > 0):
        raise DimensionError(f"time parameter must be positive, got {t!r}")
    pts = [origin + i * step for i in range(n)]

    def fn(i: int, j: int) -> float:
        d = pts[i] - pts[j]
        return d * d / (2.0 * t)

    return kernel_from_function(S, n, n, fn)


def apply_integral_operator(K: Kernel, phi: GridFunction) -> GridFunction:
    """(K phi)(x_i) = (+)_j K(i,j) (*) phi(j) on phi's grid.

    With a min-plus kernel family this is the resolving operator of a
    Cauchy problem; it is linear over the semiring (commutes with pointwise
    (+) and scalar (*)).
    """
    if K.semiring != phi.semiring:
        raise SemiringError(
            f"semiring mismatch: {K.semiring.name} vs {phi.semiring.name}"
        )
    if K.cols != len(phi) or K.rows != K.cols:
        raise DimensionError(
            f"kernel shape {K.rows}x{K.cols} does not match grid size {len(phi)}"
        )
    S = phi.semiring
    add, mul = S.add_op, S.mul_op
    vals = phi.values
    c = K.cols
    out = tuple(
        reduce(add, map(mul, K.values[i * c : (i + 1) * c], vals))
        for i in range(K.rows)
    )
    return GridFunction(phi.origin, phi.step, out, S)


def scale_function(phi: GridFunction, lam: Carrier) -> GridFunction:
    """Pointwise scalar multiple lam (*) phi."""
    S = phi.semiring
    S.check(lam)
    mul = S.mul_op
    return GridFunction(
        phi.origin, phi.step, tuple(mul(lam, v) for v in phi.values), S
    )


def add_functions(phi: GridFunction, psi: GridFunction) -> GridFunction:
    """Pointwise (+) of two functions on the same grid."""
    S = _same_grid(phi, psi)
    add = S.add_op
    return GridFunction(
        phi.origin, phi.step, tuple(map(add, phi.values, psi.values)), S
    )


# -- monomial sums and dequantization ---------------------------------------------------


@dataclass(frozen=True)
class MonomialSum:
    """Finite sum of generalized monomials a * x1^d1 * ... * xk^dk.

    Coefficients must be strictly positive (the hypothesis under which the
    sum rule for Newton sets holds unconditionally) and exponent vectors
    pairwise distinct.
    """

    terms: Tuple[Tuple[float, Tuple[float, ...]], ...]

    def __post_init__(self):
        if not self.terms:
            raise DimensionError("monomial sum needs at least one term")
        dim = len(self.terms[0][1])
        seen = set()
        for coeff, expo in self.terms:
            if not (coeff > 0) or not math.isfinite(coeff):
                raise SemiringError(
                    f"coefficients must be positive finite reals, got {coeff!r}"
                )
            if len(expo) != dim:
                raise DimensionError("inconsistent exponent dimensions")
            if expo in seen:
                raise SemiringError(f"duplicate exponent vector {expo!r}")
            seen.add(expo)

    @property
    def dim(self) -> int:
        return len(self.terms[0][1])


def monomial_sum(terms: Sequence[Tuple[float, Sequence[float]]]) -> MonomialSum:
    """Normalize (coeff, exponent-vector) pairs into a MonomialSum."""
    return MonomialSum(
        tuple((float(c), tuple(float(e) for e in d)) for c, d in terms)
    )


def poly_product(f: MonomialSum, g: MonomialSum) -> MonomialSum:
    """Symbolic product: exponents add, like terms merge by coefficient."""
    if f.dim != g.dim:
        raise DimensionError("dimension mismatch")
    acc: dict = {}
    for a, d1 in f.terms:
        for b, d2 in g.terms:
            key = tuple(x + y for x, y in zip(d1, d2))
            acc[key] = acc.get(key, 0.0) + a * b
    return MonomialSum(tuple((c, d) for d, c in sorted(acc.items())))


def poly_sum(f: MonomialSum, g: MonomialSum) -> MonomialSum:
    """Symbolic sum: terms merge by exponent vector."""
    if f.dim != g.dim:
        raise DimensionError("dimension mismatch")
    acc: dict = {}
    for a, d in f.terms + g.terms:
        acc[d] = acc.get(d, 0.0) + a
    return MonomialSum(tuple((c, d) for d, c in sorted(acc.items())))


def dequant_sample(f: MonomialSum, h: float, x: Sequence[float]) -> float:
    """Log-scaled evaluation h*log f(exp(x/h)), shift-by-max stabilized.

    Positive coefficients keep the inner sum positive, so the value is
    always finite.
    """
    if not (h > 0):
        raise SemiringError(f"deformation parameter must be positive, got {h!r}")
    if len(x) != f.dim:
        raise DimensionError(
            f"point has dimension {len(x)}, polynomial has {f.dim}"
        )
    exponents = [
        sum(di * xi for di, xi in zip(d, x)) for _, d in f.terms
    ]
    m = max(exponents)
    total = 0.0
    for (coeff, _), e in zip(f.terms, exponents):
        total += coeff * math.exp((e - m) / h)
    return m + h * math.log(total)


# -- Newton sets ------------------------------------------------------------------------


@dataclass(frozen=True)
class NewtonSet:
    """Finite generating points of a convex polytope in R^d.

    For d <= 2 the stored points are the irredundant hull vertices; in
    higher dimension the raw generators are kept (still a valid
    V-representation, compared through support functions).
    """

    points: Tuple[Tuple[float, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.points[0])


def _hull_1d(points: set) -> tuple:
    los = min(points)
    his = max(points)
    return (los,) if los == his else (los, his)


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(points: set) -> tuple:
    pts = sorted(points)
    if len(pts) <= 2:
        return tuple(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(sorted(lower[:-1] + upper[:-1]))


def _normalize_points(points) -> tuple:
    pts = {tuple(float(c) for c in p) for p in points}
    if not pts:
        raise DimensionError("a Newton set needs at least one point")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise DimensionError("mixed point dimensions")
    d = dims.pop()
    if d == 1:
        return _hull_1d(pts)
    if d == 2:
        return _hull_2d(pts)
    return tuple(sorted(pts))


def newton_points(points) -> NewtonSet:
    """Newton set generated by explicit points (hull-reduced for d <= 2)."""
    return NewtonSet(_normalize_points(points))


def newton_set(f: MonomialSum) -> NewtonSet:
    """Convex hull of the exponent vectors of a monomial sum."""
    return newton_points(d for _, d in f.terms)


def newton_mul(N1: NewtonSet, N2: NewtonSet) -> NewtonSet:
    """Minkowski sum: hull of all pairwise point sums."""
    if N1.dim != N2.dim:
        raise DimensionError("dimension mismatch")
    sums = [
        tuple(a + b for a, b in zip(p, q))
        for p in N1.points
        for q in N2.points
    ]
    return newton_points(sums)


def newton_add(N1: NewtonSet, N2: NewtonSet) -> NewtonSet:
    """Hull of the union of the two point sets."""
    if N1.dim != N2.dim:
        raise DimensionError("dimension mismatch")
    return newton_points(N1.points + N2.points)


def support_function(N: NewtonSet, x: Sequence[float]) -> float:
    """max over generating points of their inner product with x.

    This is the h -> 0 limit of :func:`dequant_sample` for any monomial
    sum generating the set.
    """
    if len(x) != N.dim:
        raise DimensionError(
            f"direction has dimension {len(x)}, set has {N.dim}"
        )
    return max(sum(c * xi for c, xi in zip(p, x)) for p in N.points)
