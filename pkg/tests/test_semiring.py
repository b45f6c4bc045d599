"""Semiring descriptors: neutral elements, axioms, order, closure."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import semialg as sa
from semialg.errors import CarrierError, ClosureUndefinedError, SemiringError

from conftest import ALL_NAMES, EXACT_IDEMPOTENT_NAMES, build, random_carrier

INF = sa.INF
NEG_INF = sa.NEG_INF

# frozen with mpmath at 60 digits: 1 + 0.1*log(1 + exp(-10))
MASLOV_H01_ADD_0_1 = 1.0000045398899216865


class TestMakeSemiring:
    def test_maxplus_neutrals(self):
        S = sa.make_semiring("maxplus")
        assert S.zero == NEG_INF
        assert S.one == 0.0

    def test_minplus_neutrals(self):
        S = sa.make_semiring("minplus")
        assert S.zero == INF
        assert S.one == 0.0

    def test_maxmin_neutrals(self):
        S = sa.make_semiring("maxmin", a=0.0, b=1.0)
        assert S.zero == 0.0
        assert S.one == 1.0

    def test_boolean_neutrals(self):
        S = sa.make_semiring("boolean")
        assert S.zero is False
        assert S.one is True

    def test_real_field_neutrals(self):
        S = sa.make_semiring("real_field")
        assert S.zero == 0.0
        assert S.one == 1.0

    def test_maslov_deform_add_of_units(self):
        S = sa.make_semiring("maslov_deform", h=1.0)
        assert S.zero == NEG_INF and S.one == 0.0
        assert abs(S.add(0.0, 0.0) - math.log(2.0)) < 1e-15

    def test_unknown_name(self):
        with pytest.raises(SemiringError):
            sa.make_semiring("quaternions")

    def test_bad_params(self):
        with pytest.raises(SemiringError):
            sa.make_semiring("maxmin", a=1.0, b=0.0)
        with pytest.raises(SemiringError):
            sa.make_semiring("maslov_deform", h=0.0)
        with pytest.raises(SemiringError):
            sa.make_semiring("maslov_deform")
        with pytest.raises(SemiringError):
            sa.make_semiring("minplus", h=1.0)

    def test_descriptor_equality_is_by_name_and_params(self):
        assert sa.make_semiring("minplus") == sa.make_semiring("minplus")
        assert sa.make_semiring("maxmin", a=0, b=1) != sa.make_semiring(
            "maxmin", a=0, b=2
        )


class TestAddMul:
    def test_maxplus_add(self, maxplus):
        assert maxplus.add(3.0, 5.0) == 5.0

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_zero_is_neutral(self, name):
        S = build(name)
        rng = random.Random(101)
        for _ in range(50):
            x = random_carrier(S, rng)
            assert S.equal(S.add(S.zero, x), x)
            assert S.equal(S.add(x, S.zero), x)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_zero_absorbs(self, name):
        S = build(name)
        rng = random.Random(102)
        for _ in range(50):
            x = random_carrier(S, rng)
            assert S.mul(S.zero, x) == S.zero
            assert S.mul(x, S.zero) == S.zero

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_one_is_unit(self, name):
        S = build(name)
        rng = random.Random(103)
        for _ in range(50):
            x = random_carrier(S, rng)
            assert S.equal(S.mul(S.one, x), x)
            assert S.equal(S.mul(x, S.one), x)

    def test_maxplus_mul(self, maxplus):
        assert maxplus.mul(3.0, 5.0) == 8.0

    def test_maxmin_mul(self, maxmin01):
        assert maxmin01.mul(0.3, 0.7) == 0.3

    def test_maslov_add_shifted_evaluation(self):
        S = sa.make_semiring("maslov_deform", h=0.1)
        assert abs(S.add(0.0, 1.0) - MASLOV_H01_ADD_0_1) < 1e-13
        # far-apart operands must not overflow the exponentials
        assert S.add(0.0, 5000.0) == 5000.0

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierError):
            sa.make_semiring("maxplus").add(INF, 0.0)
        with pytest.raises(CarrierError):
            sa.make_semiring("minplus").mul(NEG_INF, 1.0)
        with pytest.raises(CarrierError):
            sa.make_semiring("boolean").add(1, True)
        with pytest.raises(CarrierError):
            sa.make_semiring("real_field").add(INF, 0.0)
        with pytest.raises(CarrierError):
            sa.make_semiring("maxmin", a=0.0, b=1.0).add(2.0, 0.5)
        with pytest.raises(CarrierError):
            sa.make_semiring("nonneg_real").mul(-1.0, 1.0)

    def test_zero_times_infinity_convention(self):
        # zero stays absorbing in the complete extensions
        S = sa.make_semiring("maxplus_complete")
        assert S.mul(NEG_INF, INF) == NEG_INF
        assert S.mul(INF, NEG_INF) == NEG_INF
        T = sa.make_semiring("minplus_complete")
        assert T.mul(INF, NEG_INF) == INF
        U = sa.make_semiring("nonneg_real_complete")
        assert U.mul(0.0, INF) == 0.0
        assert U.mul(INF, 0.0) == 0.0


class TestOrder:
    def test_maxplus_examples(self, maxplus):
        assert maxplus.leq(1.0, 3.0)
        assert not maxplus.leq(3.0, 1.0)

    def test_minplus_reverses_numeric_order(self, minplus):
        assert minplus.leq(3.0, 1.0)
        assert not minplus.leq(1.0, 3.0)

    @pytest.mark.parametrize("name", EXACT_IDEMPOTENT_NAMES)
    def test_reflexive(self, name):
        S = build(name)
        rng = random.Random(104)
        for _ in range(30):
            x = random_carrier(S, rng)
            assert S.leq(x, x)

    @pytest.mark.parametrize("name", EXACT_IDEMPOTENT_NAMES)
    def test_order_coherence(self, name):
        # a <= a (+) b always, since (+) is the join
        S = build(name)
        rng = random.Random(105)
        for _ in range(200):
            a = random_carrier(S, rng)
            b = random_carrier(S, rng)
            assert S.leq(a, S.add(a, b))

    @pytest.mark.parametrize("name", ["real_field", "nonneg_real", "maslov_deform"])
    def test_undefined_on_non_idempotent(self, name):
        with pytest.raises(SemiringError):
            build(name).leq(0.0, 1.0)

    @pytest.mark.parametrize("name", EXACT_IDEMPOTENT_NAMES)
    def test_zero_is_least(self, name):
        S = build(name)
        rng = random.Random(106)
        for _ in range(30):
            assert S.leq(S.zero, random_carrier(S, rng))


class TestClosure:
    def test_maxplus_below_unit(self, maxplus):
        assert maxplus.closure(-2.0) == 0.0
        assert maxplus.closure(NEG_INF) == 0.0

    def test_maxplus_above_unit_undefined(self, maxplus):
        with pytest.raises(ClosureUndefinedError):
            maxplus.closure(0.5)

    def test_maxplus_complete_saturates(self):
        assert sa.make_semiring("maxplus_complete").closure(3.0) == INF

    def test_minplus(self, minplus):
        assert minplus.closure(3.0) == 0.0
        assert minplus.closure(0.0) == 0.0
        with pytest.raises(ClosureUndefinedError):
            minplus.closure(-1.0)
        assert sa.make_semiring("minplus_complete").closure(-1.0) == NEG_INF

    def test_nonneg_real(self):
        S = sa.make_semiring("nonneg_real")
        assert S.closure(0.5) == 2.0
        with pytest.raises(ClosureUndefinedError):
            S.closure(1.0)
        with pytest.raises(ClosureUndefinedError):
            S.closure(1.5)
        assert sa.make_semiring("nonneg_real_complete").closure(1.5) == INF

    def test_real_field_defined_away_from_unit(self, real_field):
        assert real_field.closure(0.5) == 2.0
        assert real_field.closure(2.0) == -1.0
        with pytest.raises(ClosureUndefinedError):
            real_field.closure(1.0)

    def test_maxmin_always_unit(self, maxmin01):
        for x in (0.0, 0.3, 1.0):
            assert maxmin01.closure(x) == 1.0

    def test_boolean(self, boolean):
        assert boolean.closure(False) is True
        assert boolean.closure(True) is True

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_fixed_point(self, name):
        # x* = 1 (+) x (*) x* wherever the star is defined
        S = build(name)
        rng = random.Random(107)
        checked = 0
        for _ in range(400):
            x = random_carrier(S, rng)
            try:
                star = S.closure(x)
            except ClosureUndefinedError:
                continue
            checked += 1
            assert S.equal(S.add(S.one, S.mul(x, star)), star)
        assert checked > 50


class TestAxiomSuite:
    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_axioms_on_random_triples(self, name):
        S = build(name)
        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(1000):
            a = random_carrier(S, rng)
            b = random_carrier(S, rng)
            c = random_carrier(S, rng)
            assert S.equal(S.add(S.add(a, b), c), S.add(a, S.add(b, c)))
            assert S.equal(S.add(a, b), S.add(b, a))
            assert S.equal(S.mul(S.mul(a, b), c), S.mul(a, S.mul(b, c)))
            assert S.equal(S.mul(a, S.add(b, c)), S.add(S.mul(a, b), S.mul(a, c)))
            assert S.equal(S.mul(S.add(a, b), c), S.add(S.mul(a, c), S.mul(b, c)))

    @pytest.mark.parametrize("name", EXACT_IDEMPOTENT_NAMES)
    def test_idempotent_addition(self, name):
        S = build(name)
        rng = random.Random(108)
        for _ in range(200):
            x = random_carrier(S, rng)
            assert S.add(x, x) == x

    def test_maslov_is_not_idempotent(self):
        S = sa.make_semiring("maslov_deform", h=1.0)
        assert S.add(0.0, 0.0) > 0.0


class TestDeformation:
    @given(
        u=st.floats(-50, 50),
        v=st.floats(-50, 50),
        h=st.floats(0.01, 10.0),
    )
    @settings(max_examples=300, deadline=None)
    def test_bound_between_max_and_max_plus_hlog2(self, u, v, h):
        S = sa.make_semiring("maslov_deform", h=h)
        s = S.add(u, v)
        m = max(u, v)
        assert m <= s <= m + h * math.log(2.0) + 1e-12

    def test_monotone_in_h(self):
        rng = random.Random(109)
        for _ in range(300):
            u = rng.uniform(-10, 10)
            v = rng.uniform(-10, 10)
            h2 = rng.uniform(0.01, 2.0)
            h1 = h2 + rng.uniform(0.0, 3.0)
            s1 = sa.make_semiring("maslov_deform", h=h1).add(u, v)
            s2 = sa.make_semiring("maslov_deform", h=h2).add(u, v)
            assert s1 >= s2 - 1e-12
            assert s2 >= max(u, v)

    def test_converges_to_max(self):
        u, v = 1.25, -0.5
        for h in (1.0, 0.1, 0.01):
            gap = sa.make_semiring("maslov_deform", h=h).add(u, v) - max(u, v)
            assert 0 <= gap <= h * math.log(2.0)

    def test_maslov_closure_matches_embedded_rule(self):
        # star below the unit mirrors the (1-x)^(-1) rule of the
        # undeformed nonnegative reals through x = e^(u/h)
        S = sa.make_semiring("maslov_deform", h=0.5)
        u = -1.0
        expected = 0.5 * math.log(1.0 / (1.0 - math.exp(-1.0 / 0.5)))
        assert abs(S.closure(u) - expected) < 1e-14
        with pytest.raises(ClosureUndefinedError):
            S.closure(0.0)
