"""Shared fixtures: the registry corpus with convex |f''| and seeded
random-interval helpers."""

import numpy as np
import pytest

from quadcert.functions import Interval, register_builtin


def convex_corpus():
    """(FunctionTriple, sample_lo, sample_hi): functions whose |f''| is
    convex, each with the range test intervals are drawn from."""
    return [
        (register_builtin("power", [2.0]), -2.0, 3.0),
        (register_builtin("power", [3.0]), -2.0, 3.0),
        (register_builtin("power", [4.0]), -2.0, 3.0),
        (register_builtin("exp"), -1.5, 1.5),
        (register_builtin("reciprocal"), 0.25, 3.0),
        (register_builtin("neglog"), 0.25, 3.0),
    ]


def random_interval(rng, lo, hi, min_len=0.2):
    a = rng.uniform(lo, hi - min_len)
    b = rng.uniform(a + min_len, hi)
    return Interval(float(a), float(b))


def random_x(rng, iv):
    return float(rng.uniform(iv.midpoint, iv.b))


@pytest.fixture(scope="session")
def corpus():
    return convex_corpus()


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
