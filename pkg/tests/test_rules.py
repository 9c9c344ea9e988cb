"""Rule values: hand-computed examples, specialization identities, and
exactness on degree <= 1 polynomials."""

import math

import pytest

from conftest import random_interval, random_x
from quadcert.errors import ParameterError
from quadcert.functions import Interval, parse_function_spec, register_builtin
from quadcert.oracle import integrate
from quadcert.rules import (
    generalized_rule,
    midpoint_rule,
    perturbed_trapezoid_rule,
    trapezoid_rule,
)


def test_generalized_examples():
    ft = register_builtin("power", [2.0])
    iv = Interval(0.0, 1.0)
    assert generalized_rule(ft, iv, 0.75).value_avg == pytest.approx(0.3125, abs=1e-15)
    assert generalized_rule(ft, iv, 1.0).value_avg == pytest.approx(0.25, abs=1e-15)


def test_generalized_collapses_to_midpoint(corpus, rng):
    for ft, lo, hi in corpus:
        iv = random_interval(rng, lo + 0.05, hi - 0.05)
        got = generalized_rule(ft, iv, iv.midpoint)
        assert got.value_avg == pytest.approx(ft.f(iv.midpoint), rel=1e-14, abs=1e-15)


@pytest.mark.parametrize(
    "spec,a,b,expected",
    [
        ("power:2", 0.0, 1.0, 0.25),
        ("reciprocal", 1.0, 2.0, 2.0 / 3.0),
        ("exp", 0.0, 1.0, math.exp(0.5)),
    ],
)
def test_midpoint_examples(spec, a, b, expected):
    rule = midpoint_rule(parse_function_spec(spec), Interval(a, b))
    assert rule.value_avg == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "spec,a,b,expected",
    [
        ("power:2", 0.0, 1.0, 0.5),
        ("reciprocal", 1.0, 2.0, 0.75),
        ("neglog", 1.0, 2.0, -math.log(2.0) / 2.0),
    ],
)
def test_trapezoid_examples(spec, a, b, expected):
    rule = trapezoid_rule(parse_function_spec(spec), Interval(a, b))
    assert rule.value_avg == pytest.approx(expected, rel=1e-15)


def test_perturbed_trapezoid_examples():
    assert perturbed_trapezoid_rule(
        register_builtin("power", [2.0]), Interval(0.0, 1.0)
    ).value_total == pytest.approx(0.25, abs=1e-15)
    # exact for linear functions, perturbation identically zero
    assert perturbed_trapezoid_rule(
        register_builtin("poly", [2.0, 1.0]), Interval(0.0, 3.0)
    ).value_total == pytest.approx(12.0, abs=1e-13)
    assert perturbed_trapezoid_rule(
        register_builtin("exp"), Interval(0.0, 1.0)
    ).value_total == pytest.approx((1.0 + math.e) / 2.0 - (math.e - 1.0) / 8.0, rel=1e-15)


def test_specializations(corpus, rng):
    """generalized(x = midpoint) is the midpoint rule; generalized(x = b)
    is the perturbed trapezoid rule."""
    for ft, lo, hi in corpus:
        for _ in range(5):
            iv = random_interval(rng, lo + 0.05, hi - 0.05)
            g_mid = generalized_rule(ft, iv, iv.midpoint)
            g_right = generalized_rule(ft, iv, iv.b)
            assert g_mid.value_avg == pytest.approx(
                midpoint_rule(ft, iv).value_avg, rel=1e-14, abs=1e-15)
            assert g_right.value_total == pytest.approx(
                perturbed_trapezoid_rule(ft, iv).value_total, rel=1e-14, abs=1e-15)


def test_exact_for_linear(rng):
    ft = register_builtin("poly", [3.0, -1.0])  # 3x - 1
    for _ in range(10):
        iv = random_interval(rng, -2.0, 2.0)
        x = random_x(rng, iv)
        avg = integrate(ft.f, iv.a, iv.b).value / iv.length
        assert generalized_rule(ft, iv, x).value_avg == pytest.approx(avg, rel=1e-14, abs=1e-14)


def test_total_avg_consistency(corpus, rng):
    for ft, lo, hi in corpus:
        iv = random_interval(rng, lo + 0.05, hi - 0.05)
        x = random_x(rng, iv)
        for rule in (generalized_rule(ft, iv, x), midpoint_rule(ft, iv),
                     trapezoid_rule(ft, iv), perturbed_trapezoid_rule(ft, iv)):
            assert rule.value_total == pytest.approx(rule.value_avg * iv.length, rel=1e-15)


def test_x_out_of_range():
    ft = register_builtin("power", [2.0])
    iv = Interval(0.0, 1.0)
    with pytest.raises(ParameterError):
        generalized_rule(ft, iv, 0.25)
    with pytest.raises(ParameterError):
        generalized_rule(ft, iv, 1.5)
