"""Semiring descriptors and the built-in numerical instances.

A :class:`Semiring` bundles a carrier set with ``add``/``mul``, the neutral
elements, the (partial) Kleene-star closure and capability flags.  Every
algorithm in this package is written against this descriptor only, so the
same code solves shortest paths over min-plus, inverts real matrices over
the ordinary field, or propagates interval bounds over a lifted instance.

Carriers are plain Python scalars: ``float`` (including the IEEE signed
infinities, where the instance admits them) or ``bool``.  Descriptors are
immutable and all operations are pure, so instances can be shared freely
between threads.
"""

from __future__ import annotations

import math
import operator
from typing import Any, Callable, Optional

from .errors import CarrierError, ClosureUndefinedError, SemiringError

Carrier = Any

INF = float("inf")
NEG_INF = float("-inf")

#: Names accepted by :func:`make_semiring`.
SEMIRING_NAMES = (
    "maxplus",
    "maxplus_complete",
    "minplus",
    "minplus_complete",
    "maxmin",
    "boolean",
    "real_field",
    "nonneg_real",
    "nonneg_real_complete",
    "maslov_deform",
)


class Semiring:
    """Immutable descriptor of a semiring instance.

    ``add_op``/``mul_op``/``closure_op`` are the raw operations without
    operand validation; the public :meth:`add`, :meth:`mul`, :meth:`leq`
    and :meth:`closure` methods validate carriers first.  Inner numeric
    kernels that already hold validated matrices may call the raw ops
    directly.
    """

    __slots__ = (
        "name",
        "zero",
        "one",
        "is_idempotent",
        "is_complete",
        "approx_tolerance",
        "params",
        "base",
        "add_op",
        "mul_op",
        "closure_op",
        "valid_op",
    )

    def __init__(
        self,
        name: str,
        zero: Carrier,
        one: Carrier,
        add_op: Callable[[Carrier, Carrier], Carrier],
        mul_op: Callable[[Carrier, Carrier], Carrier],
        closure_op: Callable[[Carrier], Carrier],
        valid_op: Callable[[Carrier], bool],
        is_idempotent: bool,
        is_complete: bool,
        approx_tolerance: float = 0.0,
        params: tuple = (),
        base: Optional["Semiring"] = None,
    ):
        self.name = name
        self.zero = zero
        self.one = one
        self.add_op = add_op
        self.mul_op = mul_op
        self.closure_op = closure_op
        self.valid_op = valid_op
        self.is_idempotent = is_idempotent
        self.is_complete = is_complete
        self.approx_tolerance = approx_tolerance
        self.params = params
        self.base = base

    # -- carrier checks ----------------------------------------------------

    def valid(self, x: Carrier) -> bool:
        """True iff ``x`` belongs to this instance's carrier set."""
        return self.valid_op(x)

    def check(self, x: Carrier) -> Carrier:
        if not self.valid_op(x):
            raise CarrierError(f"{x!r} is not a valid carrier of {self.name}")
        return x

    # -- operations ---------------------------------------------------------

    def add(self, a: Carrier, b: Carrier) -> Carrier:
        """Semiring sum a (+) b."""
        self.check(a)
        self.check(b)
        return self.add_op(a, b)

    def mul(self, a: Carrier, b: Carrier) -> Carrier:
        """Semiring product a (*) b."""
        self.check(a)
        self.check(b)
        return self.mul_op(a, b)

    def leq(self, a: Carrier, b: Carrier) -> bool:
        """Standard partial order: a <= b iff a (+) b = b.

        Defined only for idempotent instances; note that for min-plus this
        reverses the numeric order.
        """
        if not self.is_idempotent:
            raise SemiringError(
                f"standard order is undefined on non-idempotent instance {self.name}"
            )
        self.check(a)
        self.check(b)
        return self.add_op(a, b) == b

    def closure(self, x: Carrier) -> Carrier:
        """Kleene star x* = 1 (+) x (+) x^2 (+) ... where defined.

        Raises :class:`ClosureUndefinedError` outside the instance's star
        domain (e.g. at 1 in the real field, above the unit in plain
        max-plus); the complete instances extend the domain instead.
        """
        self.check(x)
        return self.closure_op(x)

    def equal(self, a: Carrier, b: Carrier) -> bool:
        """Equality with the descriptor's tolerance (exact when 0)."""
        if a == b:
            return True
        tol = self.approx_tolerance
        if tol and isinstance(a, float) and isinstance(b, float):
            if math.isfinite(a) and math.isfinite(b):
                return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
        return False

    # -- value identity -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Semiring):
            return NotImplemented
        return self.name == other.name and self.params == other.params

    def __hash__(self) -> int:
        return hash((self.name, self.params))

    def __repr__(self) -> str:
        if self.params:
            inner = ", ".join(f"{v!r}" for v in self.params)
            return f"Semiring({self.name}, {inner})"
        return f"Semiring({self.name})"


# -- carrier predicates ------------------------------------------------------


def _is_number(x: Carrier) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and not (
        isinstance(x, float) and math.isnan(x)
    )


def _valid_maxplus(x: Carrier) -> bool:
    # R u {-inf}: +inf is reserved for the complete instance
    return _is_number(x) and x != INF


def _valid_maxplus_complete(x: Carrier) -> bool:
    return _is_number(x)


def _valid_minplus(x: Carrier) -> bool:
    return _is_number(x) and x != NEG_INF


def _valid_real(x: Carrier) -> bool:
    return _is_number(x) and math.isfinite(x)


def _valid_nonneg(x: Carrier) -> bool:
    return _is_number(x) and math.isfinite(x) and x >= 0


def _valid_nonneg_complete(x: Carrier) -> bool:
    return _is_number(x) and x >= 0


def _valid_bool(x: Carrier) -> bool:
    return isinstance(x, bool)


# -- guarded products for the complete instances ------------------------------
# Convention for the a-complete extensions: the zero element stays absorbing,
# so 0 (*) inf = inf (*) 0 = 0.  Short-circuiting also avoids inf + (-inf)
# producing NaN in float arithmetic.


def _mul_maxplus_complete(a: float, b: float) -> float:
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    if a == INF or b == INF:
        return INF
    return a + b


def _mul_minplus_complete(a: float, b: float) -> float:
    if a == INF or b == INF:
        return INF
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return a + b


def _mul_nonneg_complete(a: float, b: float) -> float:
    if a == 0 or b == 0:
        return 0.0
    return a * b


# -- closures -----------------------------------------------------------------


def _star_maxplus(x: float) -> float:
    if x <= 0:
        return 0.0
    raise ClosureUndefinedError(
        f"x* undefined for {x!r} > 1 in maxplus; use maxplus_complete"
    )


def _star_maxplus_complete(x: float) -> float:
    return 0.0 if x <= 0 else INF


def _star_minplus(x: float) -> float:
    # standard order is reversed: x <= 1 means x >= 0 numerically
    if x >= 0:
        return 0.0
    raise ClosureUndefinedError(
        f"x* undefined for {x!r} > 1 in minplus; use minplus_complete"
    )


def _star_minplus_complete(x: float) -> float:
    return 0.0 if x >= 0 else NEG_INF


def _star_real_field(x: float) -> float:
    # field rule: defined everywhere except the unit
    if x == 1:
        raise ClosureUndefinedError("x* undefined at x = 1 in real_field")
    return 1.0 / (1.0 - x)


def _star_nonneg(x: float) -> float:
    if x < 1:
        return 1.0 / (1.0 - x)
    raise ClosureUndefinedError(
        f"x* undefined for {x!r} >= 1 in nonneg_real; use nonneg_real_complete"
    )


def _star_nonneg_complete(x: float) -> float:
    return 1.0 / (1.0 - x) if x < 1 else INF


def _star_bool(x: bool) -> bool:
    return True


# -- instance builders ---------------------------------------------------------


def _build_maxmin(a: float, b: float) -> Semiring:
    if not (a <= b):
        raise SemiringError(f"maxmin requires a <= b, got a={a!r}, b={b!r}")

    def valid(x: Carrier) -> bool:
        return _is_number(x) and a <= x <= b

    return Semiring(
        "maxmin",
        zero=a,
        one=b,
        add_op=max,
        mul_op=min,
        closure_op=lambda x: b,
        valid_op=valid,
        is_idempotent=True,
        is_complete=True,
        params=(a, b),
    )


def _build_maslov(h: float) -> Semiring:
    if not (h > 0):
        raise SemiringError(f"maslov_deform requires h > 0, got {h!r}")

    def add(u: float, v: float) -> float:
        # h*log(e^(u/h) + e^(v/h)), evaluated by shifting with the max so
        # the exponent never overflows
        if u == NEG_INF:
            return v
        if v == NEG_INF:
            return u
        m = u if u >= v else v
        d = (u + v) - 2 * m  # = -|u - v|
        return m + h * math.log1p(math.exp(d / h))

    def star(u: float) -> float:
        # image of (1-x)^(-1) under x -> h*log(x); defined below the unit
        if u < 0:
            return -h * math.log1p(-math.exp(u / h))
        raise ClosureUndefinedError(
            f"x* undefined for {u!r} >= 1 in maslov_deform(h={h})"
        )

    return Semiring(
        "maslov_deform",
        zero=NEG_INF,
        one=0.0,
        add_op=add,
        mul_op=operator.add,
        closure_op=star,
        valid_op=_valid_maxplus,
        is_idempotent=False,
        is_complete=False,
        approx_tolerance=1e-12,
        params=(h,),
    )


def make_semiring(name: str, **params: float) -> Semiring:
    """Construct a built-in semiring instance by name.

    ``maxmin`` takes bounds ``a``, ``b`` (defaults: the full extended line);
    ``maslov_deform`` takes the deformation parameter ``h > 0``.  Unknown
    names or invalid parameters raise :class:`SemiringError`.
    """
    if name == "maxmin":
        a = float(params.pop("a", NEG_INF))
        b = float(params.pop("b", INF))
        _reject_extra(name, params)
        return _build_maxmin(a, b)
    if name == "maslov_deform":
        if "h" not in params:
            raise SemiringError("maslov_deform requires parameter h > 0")
        h = float(params.pop("h"))
        _reject_extra(name, params)
        return _build_maslov(h)
    _reject_extra(name, params)

    if name == "maxplus":
        return Semiring(
            name, zero=NEG_INF, one=0.0,
            add_op=max, mul_op=operator.add,
            closure_op=_star_maxplus, valid_op=_valid_maxplus,
            is_idempotent=True, is_complete=False,
        )
    if name == "maxplus_complete":
        return Semiring(
            name, zero=NEG_INF, one=0.0,
            add_op=max, mul_op=_mul_maxplus_complete,
            closure_op=_star_maxplus_complete, valid_op=_valid_maxplus_complete,
            is_idempotent=True, is_complete=True,
        )
    if name == "minplus":
        return Semiring(
            name, zero=INF, one=0.0,
            add_op=min, mul_op=operator.add,
            closure_op=_star_minplus, valid_op=_valid_minplus,
            is_idempotent=True, is_complete=False,
        )
    if name == "minplus_complete":
        return Semiring(
            name, zero=INF, one=0.0,
            add_op=min, mul_op=_mul_minplus_complete,
            closure_op=_star_minplus_complete, valid_op=_valid_maxplus_complete,
            is_idempotent=True, is_complete=True,
        )
    if name == "boolean":
        return Semiring(
            name, zero=False, one=True,
            add_op=operator.or_, mul_op=operator.and_,
            closure_op=_star_bool, valid_op=_valid_bool,
            is_idempotent=True, is_complete=True,
        )
    if name == "real_field":
        return Semiring(
            name, zero=0.0, one=1.0,
            add_op=operator.add, mul_op=operator.mul,
            closure_op=_star_real_field, valid_op=_valid_real,
            is_idempotent=False, is_complete=False,
            approx_tolerance=1e-12,
        )
    if name == "nonneg_real":
        return Semiring(
            name, zero=0.0, one=1.0,
            add_op=operator.add, mul_op=operator.mul,
            closure_op=_star_nonneg, valid_op=_valid_nonneg,
            is_idempotent=False, is_complete=False,
            approx_tolerance=1e-12,
        )
    if name == "nonneg_real_complete":
        return Semiring(
            name, zero=0.0, one=1.0,
            add_op=operator.add, mul_op=_mul_nonneg_complete,
            closure_op=_star_nonneg_complete, valid_op=_valid_nonneg_complete,
            is_idempotent=False, is_complete=True,
            approx_tolerance=1e-12,
        )
    raise SemiringError(
        f"unknown semiring {name!r}; expected one of {', '.join(SEMIRING_NAMES)}"
    )


def _reject_extra(name: str, params: dict) -> None:
    if params:
        raise SemiringError(f"{name} does not accept parameters {sorted(params)}")
