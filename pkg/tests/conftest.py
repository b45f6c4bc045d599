"""Shared fixtures and random generators for the test suites."""

from __future__ import annotations

import random

import pytest

import semialg as sa

# Instances whose carrier operations are exact in floating point.
EXACT_IDEMPOTENT_NAMES = (
    "maxplus",
    "maxplus_complete",
    "minplus",
    "minplus_complete",
    "maxmin",
    "boolean",
)

ALL_NAMES = sa.SEMIRING_NAMES


def build(name: str) -> sa.Semiring:
    """Construct an instance with the default test parameters."""
    if name == "maxmin":
        return sa.make_semiring("maxmin", a=0.0, b=1.0)
    if name == "maslov_deform":
        return sa.make_semiring("maslov_deform", h=0.5)
    return sa.make_semiring(name)


def random_carrier(S: sa.Semiring, rng: random.Random) -> object:
    """Sample a valid carrier, occasionally hitting the special elements."""
    name = S.name
    r = rng.random()
    if name == "boolean":
        return rng.random() < 0.5
    if name == "maxmin":
        a, b = S.params
        if r < 0.05:
            return a
        if r < 0.1:
            return b
        return rng.uniform(a, b)
    if name in ("maxplus", "maslov_deform"):
        return sa.NEG_INF if r < 0.08 else rng.uniform(-8.0, 8.0)
    if name == "maxplus_complete":
        if r < 0.06:
            return sa.NEG_INF
        if r < 0.12:
            return sa.INF
        return rng.uniform(-8.0, 8.0)
    if name == "minplus":
        return sa.INF if r < 0.08 else rng.uniform(-8.0, 8.0)
    if name == "minplus_complete":
        if r < 0.06:
            return sa.INF
        if r < 0.12:
            return sa.NEG_INF
        return rng.uniform(-8.0, 8.0)
    if name == "real_field":
        return rng.uniform(-2.0, 2.0)
    if name == "nonneg_real":
        return rng.uniform(0.0, 2.0)
    if name == "nonneg_real_complete":
        if r < 0.05:
            return 0.0
        if r < 0.1:
            return sa.INF
        return rng.uniform(0.0, 2.0)
    raise AssertionError(f"no sampler for {name}")


def random_minplus_matrix(
    S: sa.Semiring,
    rng: random.Random,
    n: int,
    density: float = 0.7,
    low: int = 0,
    high: int = 9,
) -> sa.Matrix:
    rows = [
        [
            float(rng.randint(low, high)) if rng.random() < density else sa.INF
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    return sa.Matrix.from_rows(S, rows)


def counting_semiring(S: sa.Semiring, tally: dict) -> sa.Semiring:
    """Wrap an instance so every base operation bumps ``tally``."""
    tally.setdefault("add", 0)
    tally.setdefault("mul", 0)
    tally.setdefault("star", 0)

    def add(a, b):
        tally["add"] += 1
        return S.add_op(a, b)

    def mul(a, b):
        tally["mul"] += 1
        return S.mul_op(a, b)

    def star(x):
        tally["star"] += 1
        return S.closure_op(x)

    return sa.Semiring(
        S.name,
        S.zero,
        S.one,
        add,
        mul,
        star,
        S.valid_op,
        S.is_idempotent,
        S.is_complete,
        S.approx_tolerance,
        S.params,
        S.base,
    )


@pytest.fixture
def minplus() -> sa.Semiring:
    return sa.make_semiring("minplus")


@pytest.fixture
def maxplus() -> sa.Semiring:
    return sa.make_semiring("maxplus")


@pytest.fixture
def boolean() -> sa.Semiring:
    return sa.make_semiring("boolean")


@pytest.fixture
def real_field() -> sa.Semiring:
    return sa.make_semiring("real_field")


@pytest.fixture
def maxmin01() -> sa.Semiring:
    return sa.make_semiring("maxmin", a=0.0, b=1.0)
