"""A-priori error certificates for the two-point rule.

Three bound families for twice-differentiable f with convex |f''| (or
convex |f''|**q), plus the two classical baselines: the Ostrowski bound on
a single function value and the Cerone-Dragomir perturbed-trapezoid bound.
Each certificate pairs a rule value with a bound computable from f'/f''
data alone -- no knowledge of the true integral is needed.
"""

from dataclasses import dataclass, field

from . import oracle
from .errors import ParameterError
from .functions import FunctionTriple, Interval, grid_midpoint_convex, require_domain
from .rules import RuleValue, generalized_rule, perturbed_trapezoid_rule

CD_CASES = ("inf", "lp", "l1")

_ENDPOINT_DERIV_TOL = 1e-12
_FLAG_GRID = 101


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents p, q > 1 with 1/p + 1/q = 1."""

    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 1.0 and self.q > 1.0):
            raise ParameterError(f"need p > 1 and q > 1, got p={self.p!r}, q={self.q!r}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise ParameterError(f"p={self.p!r}, q={self.q!r} are not conjugate exponents")

    @classmethod
    def conjugate(cls, p: float) -> "HolderPair":
        if not p > 1.0:
            raise ParameterError(f"need p > 1, got {p!r}")
        return cls(p, p / (p - 1.0))


@dataclass(frozen=True)
class Certificate:
    """A rule value with an a-priori bound on its deviation from the integral.

    ``bound_avg`` bounds |average integral - rule.value_avg| and
    ``bound_total`` the same in total form. ``hypothesis_flags`` records
    sampled checks of the assumptions behind the bound; a False flag means
    the certificate is advisory, not that the arithmetic is wrong.
    """

    rule: RuleValue
    bound_avg: float
    bound_total: float
    family: str
    params: dict = field(default_factory=dict)
    hypothesis_flags: tuple = ()


def _s3(iv: Interval, x: float) -> float:
    # (b-x)^3 + (x - midpoint)^3: the third-moment factor behind each family
    return (iv.b - x) ** 3 + (x - iv.midpoint) ** 3


def _hypothesis_flags(ft, iv, x, q=None):
    """Sampled convexity of |f''| (or |f''|**q), plus the equal-endpoint-
    derivative hypothesis for certificates taken at x = b, where dropping
    the derivative correction turns the rule into the plain trapezoid."""
    if q is None:
        flags = [("abs_f2_convex", grid_midpoint_convex(
            lambda u: abs(ft.f2(u)), iv.a, iv.b, _FLAG_GRID))]
    else:
        flags = [("abs_f2_pow_q_convex", grid_midpoint_convex(
            lambda u: abs(ft.f2(u)) ** q, iv.a, iv.b, _FLAG_GRID))]
    if abs(iv.b - x) <= 1e-12 * iv.length:
        flags.append(("f1_endpoints_equal",
                      abs(ft.f1(iv.a) - ft.f1(iv.b)) <= _ENDPOINT_DERIV_TOL))
    return tuple(flags)


def bound_convex(ft: FunctionTriple, iv: Interval, x: float) -> Certificate:
    """Certificate from convexity of |f''|.

    bound_avg = [(b-x)^3 + (x-mid)^3] * (|f''(a)| + |f''(b)|) / (6(b-a)).
    Sharp whenever f'' is constant. The convexity hypothesis is sampled and
    recorded in hypothesis_flags, not enforced.
    """
    rule = generalized_rule(ft, iv, x)
    fa, fb = abs(ft.f2(iv.a)), abs(ft.f2(iv.b))
    avg = _s3(iv, x) * (fa + fb) / (6.0 * iv.length)
    return Certificate(rule, avg, avg * iv.length, "convex",
                       {}, _hypothesis_flags(ft, iv, x))


def bound_holder(ft: FunctionTriple, iv: Interval, x: float, hp: HolderPair) -> Certificate:
    """Certificate from convexity of |f''|**q via the Holder split.

    bound_avg = 2^(1/p-1) / ((2p+1)^(1/p) (b-a)^(1/p))
                * [(b-x)^(2p+1) + (x-mid)^(2p+1)]^(1/p)
                * ((|f''(a)|^q + |f''(b)|^q)/2)^(1/q).
    """
    rule = generalized_rule(ft, iv, x)
    p, q = hp.p, hp.q
    fa, fb = abs(ft.f2(iv.a)), abs(ft.f2(iv.b))
    e = 2.0 * p + 1.0
    moment = (iv.b - x) ** e + (x - iv.midpoint) ** e
    avg = (2.0 ** (1.0 / p - 1.0) / (e ** (1.0 / p) * iv.length ** (1.0 / p))
           * moment ** (1.0 / p)
           * ((fa ** q + fb ** q) / 2.0) ** (1.0 / q))
    return Certificate(rule, avg, avg * iv.length, "holder",
                       {"p": p, "q": q}, _hypothesis_flags(ft, iv, x, q=q))


def bound_power_mean(ft: FunctionTriple, iv: Interval, x: float, q: float) -> Certificate:
    """Certificate from convexity of |f''|**q via the power-mean split.

    bound_avg = [(b-x)^3 + (x-mid)^3] / (3(b-a))
                * ((|f''(a)|^q + |f''(b)|^q)/2)^(1/q).
    At q = 1 this reduces algebraically to `bound_convex`.
    """
    if q < 1.0:
        raise ParameterError(f"q={q!r} must be >= 1")
    rule = generalized_rule(ft, iv, x)
    fa, fb = abs(ft.f2(iv.a)), abs(ft.f2(iv.b))
    avg = _s3(iv, x) / (3.0 * iv.length) * ((fa ** q + fb ** q) / 2.0) ** (1.0 / q)
    return Certificate(rule, avg, avg * iv.length, "power_mean",
                       {"q": q}, _hypothesis_flags(ft, iv, x, q=q))


def bound_ostrowski(ft: FunctionTriple, iv: Interval, x: float,
                    f1_sup: float | None = None) -> Certificate:
    """Classical bound on |f(x) - average integral| from sup|f'|.

    bound_avg = [1/4 + (x - mid)^2/(b-a)^2] * (b-a) * f1_sup, valid for any
    x in [a, b] (no half-interval restriction). When f1_sup is omitted it
    is estimated by `oracle.estimate_norm`; a supplied value is sanity-
    checked against sampled |f'| and rejected when it is below any sample.
    """
    require_domain(ft, iv)
    if not iv.a <= x <= iv.b:
        raise ParameterError(f"x={x!r} outside [{iv.a!r}, {iv.b!r}]")
    params: dict = {}
    if f1_sup is None:
        est = oracle.estimate_norm(ft, iv, "sup_f1")
        f1_sup = est.value
        params["norm_samples"] = est.samples
    else:
        step = iv.length / 32.0
        observed = max(abs(ft.f1(iv.a + i * step)) for i in range(33))
        if f1_sup < observed:
            raise ParameterError(
                f"f1_sup={f1_sup!r} is below the sampled |f'| maximum {observed!r}")
    params["f1_sup"] = f1_sup
    fx = ft.f(x)
    avg = (0.25 + (x - iv.midpoint) ** 2 / iv.length ** 2) * iv.length * f1_sup
    rule = RuleValue(fx, fx * iv.length, "point", x)
    return Certificate(rule, avg, avg * iv.length, "ostrowski", params)


def bound_cerone_dragomir(ft: FunctionTriple, iv: Interval, case: str,
                          norm: float | None = None,
                          p: float | None = None,
                          q: float | None = None) -> Certificate:
    """Classical perturbed-trapezoid bound from a norm of f''.

    Cases (matching the printed statement of the inequality):
      inf: bound_total = (b-a)^3/24 * sup|f''|
      lp:  bound_total = (b-a)^(2+1/q) / (8(2q+1)^(1/q)) * ||f''||_p,
           with p > 1 and 1/p + 1/q = 1
      l1:  bound_total = (b-a)^2/8 * integral of |f''|
    Omitted norms are estimated by `oracle.estimate_norm` and recorded in
    the certificate params for auditability.
    """
    require_domain(ft, iv)
    if case not in CD_CASES:
        raise ParameterError(f"unknown case {case!r}; expected one of {CD_CASES}")
    params: dict = {"case": case}
    hp = None
    if case == "lp":
        if p is None and q is None:
            raise ParameterError("lp case needs the exponent p (q is derived)")
        if p is None:
            if not q > 1.0:
                raise ParameterError(f"need q > 1, got {q!r}")
            p = q / (q - 1.0)
        hp = HolderPair(p, q) if q is not None else HolderPair.conjugate(p)
        params["p"] = hp.p
        params["q"] = hp.q

    if norm is None:
        if case == "inf":
            est = oracle.estimate_norm(ft, iv, "sup_f2")
            params["norm_samples"] = est.samples
        elif case == "lp":
            est = oracle.estimate_norm(ft, iv, "lp_f2", p=hp.p)
        else:
            est = oracle.estimate_norm(ft, iv, "l1_f2")
        norm = est.value
    elif norm <= 0.0:
        step = iv.length / 8.0
        if any(abs(ft.f2(iv.a + i * step)) > 0.0 for i in range(9)):
            raise ParameterError(f"norm={norm!r} is not positive but f'' is not identically 0")
    params["norm"] = norm

    if case == "inf":
        total = iv.length ** 3 / 24.0 * norm
    elif case == "lp":
        total = iv.length ** (2.0 + 1.0 / hp.q) / (8.0 * (2.0 * hp.q + 1.0) ** (1.0 / hp.q)) * norm
    else:
        total = iv.length ** 2 / 8.0 * norm

    rule = perturbed_trapezoid_rule(ft, iv)
    return Certificate(rule, total / iv.length, total, "cerone_dragomir", params)
