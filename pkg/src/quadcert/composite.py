"""Composite form of the two-point rule over a partition, with a
per-subinterval remainder bound summed into a certificate for the whole
integral.

Intermediate points are restricted to the right half of each subinterval,
[(x_i + x_{i+1})/2, x_{i+1}]: that is where the per-subinterval bound is
established, even though the composite sum itself could be formed for any
placement.
"""

import math
import random
from dataclasses import dataclass

from .errors import ParameterError
from .functions import FunctionTriple, Interval, require_domain

XI_POLICIES = ("midpoint", "right", "random")


@dataclass(frozen=True)
class Partition:
    """Division nodes x_0 < ... < x_n with intermediate points xi_i."""

    nodes: tuple
    xi: tuple

    def __post_init__(self):
        nodes = tuple(float(v) for v in self.nodes)
        xi = tuple(float(v) for v in self.xi)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "xi", xi)
        if len(nodes) < 2:
            raise ParameterError("a partition needs at least two nodes")
        if not all(math.isfinite(v) for v in nodes + xi):
            raise ParameterError("partition values must be finite")
        for lo, hi in zip(nodes, nodes[1:]):
            if not lo < hi:
                raise ParameterError(f"nodes must be strictly increasing, got {lo!r} >= {hi!r}")
        if len(xi) != len(nodes) - 1:
            raise ParameterError(
                f"expected {len(nodes) - 1} intermediate points, got {len(xi)}")
        for i, v in enumerate(xi):
            lo, hi = nodes[i], nodes[i + 1]
            mid = 0.5 * (lo + hi)
            if not mid <= v <= hi:
                raise ParameterError(
                    f"xi[{i}]={v!r} outside the admissible right half [{mid!r}, {hi!r}]")

    @property
    def widths(self) -> tuple:
        return tuple(hi - lo for lo, hi in zip(self.nodes, self.nodes[1:]))

    @classmethod
    def uniform(cls, a: float, b: float, n: int, xi_policy: str = "midpoint",
                seed: int = 0) -> "Partition":
        """n equal subintervals of [a, b] with intermediate points chosen by
        policy: the subinterval midpoint, the right node, or uniform random
        within the admissible right half (deterministic under ``seed``)."""
        if n < 1:
            raise ParameterError(f"need n >= 1 subintervals, got {n!r}")
        if not a < b:
            raise ParameterError(f"need a < b, got [{a!r}, {b!r}]")
        nodes = tuple(((n - i) * a + i * b) / n for i in range(n + 1))
        if xi_policy == "midpoint":
            xi = tuple(0.5 * (nodes[i] + nodes[i + 1]) for i in range(n))
        elif xi_policy == "right":
            xi = nodes[1:]
        elif xi_policy == "random":
            rng = random.Random(seed)
            xi = tuple(
                0.5 * (nodes[i] + nodes[i + 1])
                + rng.random() * (nodes[i + 1] - 0.5 * (nodes[i] + nodes[i + 1]))
                for i in range(n)
            )
        else:
            raise ParameterError(f"unknown xi policy {xi_policy!r}; expected one of {XI_POLICIES}")
        return cls(nodes, xi)


@dataclass(frozen=True)
class CompositeResult:
    """Composite approximation with its summed remainder bound.

    ``approx`` and ``remainder_bound`` are the fixed-order exact-rounded
    sums of the per-interval entries, so results are deterministic
    regardless of how the per-interval work is scheduled.
    """

    approx: float
    remainder_bound: float
    per_interval: tuple


def composite_generalized(ft: FunctionTriple, part: Partition) -> CompositeResult:
    """Two-point rule with derivative correction summed over the partition.

    Per subinterval [lo, hi] with intermediate point xi:
      value = h/2 * [f(xi) + f(lo+hi-xi)]
              - h/2 * (xi - (lo+3hi)/4) * [f'(xi) - f'(lo+hi-xi)]
      bound = [(hi-xi)^3 + (xi-mid)^3] * (|f''(lo)| + |f''(hi)|) / 6
    """
    nodes = part.nodes
    require_domain(ft, Interval(nodes[0], nodes[-1]))
    per = []
    for i in range(len(nodes) - 1):
        lo, hi = nodes[i], nodes[i + 1]
        h = hi - lo
        xi = part.xi[i]
        mirror = lo + hi - xi
        value = 0.5 * h * (ft.f(xi) + ft.f(mirror)) \
            - 0.5 * h * (xi - (lo + 3.0 * hi) / 4.0) * (ft.f1(xi) - ft.f1(mirror))
        mid = 0.5 * (lo + hi)
        bound = ((hi - xi) ** 3 + (xi - mid) ** 3) * (abs(ft.f2(lo)) + abs(ft.f2(hi))) / 6.0
        per.append((value, bound))
    approx = math.fsum(v for v, _ in per)
    remainder = math.fsum(bnd for _, bnd in per)
    return CompositeResult(approx, remainder, tuple(per))


def composite_perturbed_trapezoid(ft: FunctionTriple, nodes) -> CompositeResult:
    """Composite rule with every intermediate point at the right node.

    Equivalent per subinterval to the trapezoid value corrected by
    h^2/8 times the first-derivative jump, with remainder bound
    h^3/48 * (|f''(lo)| + |f''(hi)|).
    """
    nodes = tuple(float(v) for v in nodes)
    return composite_generalized(ft, Partition(nodes, nodes[1:]))


def composite_midpoint(ft: FunctionTriple, nodes) -> CompositeResult:
    """Composite midpoint rule: h * f(mid) per subinterval, remainder bound
    h^3/48 * (|f''(lo)| + |f''(hi)|)."""
    nodes = tuple(float(v) for v in nodes)
    xi = tuple(0.5 * (nodes[i] + nodes[i + 1]) for i in range(len(nodes) - 1))
    return composite_generalized(ft, Partition(nodes, xi))
