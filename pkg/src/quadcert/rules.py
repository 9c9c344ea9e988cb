"""Quadrature rule values: the generalized two-point rule and its named
specializations. Rules only evaluate f and f'; the error certificates for
them live in `quadcert.bounds`.
"""

from dataclasses import dataclass

from .errors import ParameterError
from .functions import FunctionTriple, Interval, require_domain

RULE_KINDS = ("generalized", "midpoint", "trapezoid", "perturbed_trapezoid", "point")


@dataclass(frozen=True)
class RuleValue:
    """Approximation in both average ((1/(b-a)) * integral) and total form.

    Carrying both eliminates off-by-(b-a) rescaling mistakes: the two-point
    bounds are naturally stated in average form while the perturbed
    trapezoid rule is conventionally stated in total form. ``x`` is the evaluation point for
    kinds that have one (b for the perturbed trapezoid).
    """

    value_avg: float
    value_total: float
    rule_kind: str
    x: float | None = None


def _check_x_range(iv: Interval, x: float) -> None:
    if not (iv.midpoint <= x <= iv.b):
        raise ParameterError(
            f"x={x!r} outside [midpoint, b] = [{iv.midpoint!r}, {iv.b!r}]"
        )


def generalized_rule(ft: FunctionTriple, iv: Interval, x: float) -> RuleValue:
    """Two-point rule with a free evaluation point x in [midpoint, b].

    value_avg = (f(x) + f(a+b-x))/2 - (x - (a+3b)/4)/2 * (f'(x) - f'(a+b-x)).
    At x = midpoint this collapses to the midpoint rule; at x = b it is the
    perturbed trapezoid rule (in average form).
    """
    require_domain(ft, iv)
    _check_x_range(iv, x)
    mirror = iv.a + iv.b - x
    avg = 0.5 * (ft.f(x) + ft.f(mirror)) \
        - 0.5 * (x - (iv.a + 3.0 * iv.b) / 4.0) * (ft.f1(x) - ft.f1(mirror))
    return RuleValue(avg, avg * iv.length, "generalized", x)


def midpoint_rule(ft: FunctionTriple, iv: Interval) -> RuleValue:
    """value_avg = f((a+b)/2)."""
    require_domain(ft, iv)
    avg = ft.f(iv.midpoint)
    return RuleValue(avg, avg * iv.length, "midpoint", iv.midpoint)


def trapezoid_rule(ft: FunctionTriple, iv: Interval) -> RuleValue:
    """value_avg = (f(a) + f(b))/2.

    The trapezoid-form bounds additionally require f'(a) = f'(b); that
    hypothesis is recorded by the bound operations, not enforced here --
    the rule value exists regardless.
    """
    require_domain(ft, iv)
    avg = 0.5 * (ft.f(iv.a) + ft.f(iv.b))
    return RuleValue(avg, avg * iv.length, "trapezoid")


def perturbed_trapezoid_rule(ft: FunctionTriple, iv: Interval) -> RuleValue:
    """Trapezoid rule corrected by the first-derivative jump.

    value_total = (b-a)/2 * (f(a)+f(b)) - (b-a)^2/8 * (f'(b)-f'(a)); equal
    to the generalized rule at x = b scaled by (b-a).
    """
    require_domain(ft, iv)
    avg = 0.5 * (ft.f(iv.a) + ft.f(iv.b)) \
        - iv.length / 8.0 * (ft.f1(iv.b) - ft.f1(iv.a))
    return RuleValue(avg, avg * iv.length, "perturbed_trapezoid", iv.b)
