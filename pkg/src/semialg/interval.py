"""Weak interval extension of an ordered idempotent semiring.

An interval [lo, hi] collects every carrier between its bounds in the
standard order.  Lifting a semiring applies each operation to both bounds
independently, which is sound because the built-in idempotent instances
have monotone operations; the lifted instance is again an idempotent
semiring, so every generic algorithm in this package runs on it unchanged
and its interval estimates are exact (equal to the two endpoint runs).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SemiringError
from .matrix import Matrix, bellman_solve
from .semiring import Carrier, Semiring


@dataclass(frozen=True)
class Interval:
    """Closed interval in the base semiring's standard order."""

    lower: Carrier
    upper: Carrier


def make_interval(base: Semiring, lower: Carrier, upper: Carrier) -> Interval:
    """Validated constructor; rejects lower !<= upper rather than swapping.

    Silent swapping would hide data errors, especially over min-plus where
    the standard order reverses the numeric one.
    """
    base.check(lower)
    base.check(upper)
    if not base.leq(lower, upper):
        raise SemiringError(
            f"interval bounds out of order in {base.name}: "
            f"[{lower!r}, {upper!r}]"
        )
    return Interval(lower, upper)


def point_interval(x: Carrier) -> Interval:
    """Degenerate interval [x, x]; embeds the base semiring exactly."""
    return Interval(x, x)


def lift_semiring(base: Semiring) -> Semiring:
    """The weak interval extension I(S) of an idempotent semiring S.

    Operations and closure act on both bounds componentwise; neutral
    elements are the degenerate intervals of the base neutrals.
    """
    if not base.is_idempotent:
        raise SemiringError(
            f"interval extension requires an idempotent base, got {base.name}"
        )
    badd, bmul, bstar = base.add_op, base.mul_op, base.closure_op
    bvalid, bleq = base.valid_op, base.leq

    def add(x: Interval, y: Interval) -> Interval:
        return Interval(badd(x.lower, y.lower), badd(x.upper, y.upper))

    def mul(x: Interval, y: Interval) -> Interval:
        return Interval(bmul(x.lower, y.lower), bmul(x.upper, y.upper))

    def star(x: Interval) -> Interval:
        return Interval(bstar(x.lower), bstar(x.upper))

    def valid(x: Carrier) -> bool:
        return (
            isinstance(x, Interval)
            and bvalid(x.lower)
            and bvalid(x.upper)
            and bleq(x.lower, x.upper)
        )

    return Semiring(
        f"interval({base.name})",
        zero=Interval(base.zero, base.zero),
        one=Interval(base.one, base.one),
        add_op=add,
        mul_op=mul,
        closure_op=star,
        valid_op=valid,
        is_idempotent=True,
        is_complete=base.is_complete,
        approx_tolerance=base.approx_tolerance,
        params=("interval",) + base.params,
        base=base,
    )


def iv_contains(base: Semiring, x: Interval, a: Carrier) -> bool:
    """Membership lower <= a <= upper in the base standard order."""
    return base.leq(x.lower, a) and base.leq(a, x.upper)


def lift_matrix(lifted: Semiring, A: Matrix) -> Matrix:
    """Embed a scalar matrix as the matrix of degenerate intervals."""
    _require_lifted(lifted)
    if A.semiring != lifted.base:
        raise SemiringError(
            f"matrix over {A.semiring.name} cannot embed into {lifted.name}"
        )
    return Matrix(A.rows, A.cols, tuple(Interval(x, x) for x in A.data), lifted)


def matrix_bounds(Aiv: Matrix) -> tuple:
    """Split an interval matrix into its (lower, upper) scalar matrices."""
    base = _require_lifted(Aiv.semiring)
    lo = tuple(x.lower for x in Aiv.data)
    hi = tuple(x.upper for x in Aiv.data)
    return (
        Matrix(Aiv.rows, Aiv.cols, lo, base),
        Matrix(Aiv.rows, Aiv.cols, hi, base),
    )


def interval_bellman(Aiv: Matrix, Biv: Matrix) -> Matrix:
    """Solve X = AX (+) B over the interval extension.

    Runs the generic closure solver on the lifted instance; by
    monotonicity the bounds of the result equal the two scalar solves at
    the endpoint matrices.
    """
    _require_lifted(Aiv.semiring)
    return bellman_solve(Aiv, Biv, method="closure")


def _require_lifted(S: Semiring) -> Semiring:
    if S.base is None:
        raise SemiringError(f"{S.name} is not an interval extension")
    return S.base
